#include "doctest.h"

#include <set>

#include "superkac/errors.hpp"
#include "superkac/rootdata.hpp"

using namespace superkac;

namespace {

// Roots generated from a simple system by brute force: integer combinations with coefficients in [-3, 3]
// whose coordinates match the sl / osp root patterns, written out independently of rootdata.
bool looks_like_root(const std::vector<int>& c, const AlgebraId& id) {
  int nonzero = 0, abs_sum = 0, sum = 0;
  for (int x : c) {
    if (x) ++nonzero;
    abs_sum += std::abs(x);
    sum += x;
  }
  if (id.family == Family::SL) return nonzero == 2 && abs_sum == 2 && sum == 0;
  // osp(2|2n): ±ε±δ_i, ±δ_i±δ_j, ±2δ_i
  if (nonzero == 1) return c[0] == 0 && std::abs(sum) == 2;
  return nonzero == 2 && abs_sum == 2;
}

std::set<std::vector<int>> generated_roots(const BorelChoice& b, const AlgebraId& id) {
  const int k = static_cast<int>(b.simple_roots.size());
  std::set<std::vector<int>> out;
  std::vector<int> coef(k, -3);
  while (true) {
    bool pos = true, neg = true;
    for (int x : coef) {
      if (x < 0) pos = false;
      if (x > 0) neg = false;
    }
    if (pos || neg) {
      std::vector<int> v(id.coord_count(), 0);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < id.coord_count(); ++i) v[i] += coef[j] * b.simple_roots[j].coords[i];
      if (looks_like_root(v, id)) out.insert(v);
    }
    int p = 0;
    while (p < k && coef[p] == 3) coef[p++] = -3;
    if (p == k) break;
    ++coef[p];
  }
  return out;
}

std::set<std::vector<int>> root_set(const AlgebraId& id) {
  std::set<std::vector<int>> s;
  for (const auto& r : all_roots(id)) s.insert(r.coords);
  return s;
}

}  // namespace

TEST_CASE("algebra ids are validated") {
  CHECK_THROWS_AS(make_sl(0, 2), DomainError);
  CHECK_THROWS_AS(make_sl(3, 2), DomainError);
  CHECK_THROWS_AS(make_sl(1, 1), DomainError);
  CHECK_THROWS_AS(make_osp(1), DomainError);
  CHECK_NOTHROW(make_sl(2, 2));
  CHECK(make_osp(2).coord_count() == 3);
}

TEST_CASE("root counts") {
  for (auto id : {make_sl(1, 2), make_sl(2, 2), make_sl(1, 3), make_sl(2, 3), make_osp(2), make_osp(3)}) {
    auto roots = all_roots(id);
    int odd = 0, even = 0;
    for (const auto& r : roots) (r.odd() ? odd : even)++;
    CHECK(odd + even == static_cast<int>(roots.size()));
    if (id.family == Family::SL) {
      CHECK(odd == 2 * id.m * id.n);
      CHECK(even == id.m * (id.m - 1) + id.n * (id.n - 1));
    } else {
      CHECK(odd == 4 * id.n);
      CHECK(even == 2 * id.n * id.n);
    }
    CHECK(static_cast<int>(positive_odd_roots(id).size()) == odd / 2);
  }
}

TEST_CASE("distinguished Borel") {
  auto sl12 = make_sl(1, 2);
  auto b = distinguished_borel(sl12);
  REQUIRE(b.simple_roots.size() == 2);
  CHECK(b.simple_roots[0].coords == std::vector<int>{1, -1, 0});
  CHECK(b.simple_roots[0].odd());
  CHECK(b.simple_roots[1].coords == std::vector<int>{0, 1, -1});
  CHECK_FALSE(b.simple_roots[1].odd());
  CHECK(b.reflection_chain.empty());

  auto sl22 = make_sl(2, 2);
  auto b22 = distinguished_borel(sl22);
  CHECK(b22.simple_roots.size() == 3);
  int odd = 0;
  for (const auto& r : b22.simple_roots) odd += r.odd();
  CHECK(odd == 1);

  auto osp = make_osp(2);
  auto bo = distinguished_borel(osp);
  REQUIRE(bo.simple_roots.size() == 3);
  CHECK(bo.simple_roots[0].coords == std::vector<int>{1, -1, 0});
  CHECK(bo.simple_roots[0].odd());
  CHECK(bo.simple_roots[1].coords == std::vector<int>{0, 1, -1});
  CHECK(bo.simple_roots[2].coords == std::vector<int>{0, 0, 2});

  for (auto id : {sl12, sl22, make_sl(2, 3), osp, make_osp(3)}) {
    auto d = distinguished_borel(id);
    CHECK(generated_roots(d, id) == root_set(id));
    CHECK(is_valid_base(d, id));
  }
}

TEST_CASE("pairing") {
  auto id = make_sl(1, 2);
  auto a = make_root({1, -1, 0}, id);
  auto b = make_root({0, 1, -1}, id);
  CHECK(pairing(a, a, id) == 0);
  // h_α = E11 + E22 for α = ε1 - δ1; (δ1 - δ2)(h_α) = 1.
  CHECK(pairing(b, a, id) == 1);
  // h_β = diag(0, 1, -1), and ε1 - δ1 evaluates to -1 on it.
  CHECK(pairing(a, b, id) == -1);

  auto id2 = make_sl(2, 2);
  auto o1 = make_root({1, 0, -1, 0}, id2);
  auto o2 = make_root({0, 1, 0, -1}, id2);
  CHECK(pairing(o1, o2, id2) == 0);
  CHECK(pairing(o2, o1, id2) == 0);
  CHECK_THROWS_AS(pairing(Root{{1, 1, 0}, Parity::Even}, a, id), DomainError);
}

TEST_CASE("odd reflections") {
  auto id = make_sl(1, 2);
  auto d = distinguished_borel(id);
  auto a = d.simple_roots[0];
  auto r = odd_reflection(d, a, id);
  CHECK(r.simple_roots[0] == -a);
  CHECK(r.simple_roots[1].coords == std::vector<int>{1, 0, -1});
  CHECK(r.simple_roots[1].odd());
  CHECK(r.reflection_chain.size() == 1);
  CHECK(is_valid_base(r, id));
  auto back = odd_reflection(r, -a, id);
  CHECK(back.simple_roots == d.simple_roots);

  CHECK_THROWS_AS(odd_reflection(d, d.simple_roots[1], id), PreconditionError);
  CHECK_THROWS_AS(odd_reflection(d, make_root({1, 0, -1}, id), id), PreconditionError);

  auto id2 = make_sl(2, 2);
  auto d2 = distinguished_borel(id2);
  auto a2 = d2.simple_roots[1];
  auto r2 = odd_reflection(d2, a2, id2);
  CHECK(r2.simple_roots[1] == -a2);
  CHECK(r2.simple_roots[0].coords == std::vector<int>{1, 0, -1, 0});
  CHECK(r2.simple_roots[2].coords == std::vector<int>{0, 1, 0, -1});
}

TEST_CASE("reflection chains stay valid and are involutive") {
  for (auto id : {make_sl(1, 2), make_sl(2, 2), make_sl(1, 3), make_sl(2, 3), make_osp(2), make_osp(3)}) {
    std::vector<BorelChoice> frontier{distinguished_borel(id)};
    std::set<std::vector<Root>> seen{frontier[0].simple_roots};
    while (!frontier.empty()) {
      auto b = frontier.back();
      frontier.pop_back();
      for (const auto& s : b.simple_roots) {
        if (!s.odd() || pairing(s, s, id) != 0) continue;
        auto r = odd_reflection(b, s, id);
        CHECK(is_valid_base(r, id));
        CHECK(generated_roots(r, id) == root_set(id));
        CHECK(odd_reflection(r, -s, id).simple_roots == b.simple_roots);
        if (seen.insert(r.simple_roots).second) frontier.push_back(r);
      }
    }
    CHECK(seen.size() >= 2);
  }
}

TEST_CASE("z decomposition") {
  for (auto id : {make_sl(1, 2), make_sl(2, 2), make_sl(1, 3), make_osp(2)}) {
    auto g0 = g0prime(id);
    for (const auto& beta : positive_odd_roots(id)) {
      auto zd = z_decomposition(beta, id);
      CHECK(zd.c_beta != 0);
      RatVec sum = coroot_vector(beta, id);
      for (auto& x : sum) x *= zd.c_beta;
      for (std::size_t i = 0; i < g0.simple_roots.size(); ++i) {
        auto h = coroot_vector(g0.simple_roots[i], id);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += zd.c_i[i] * h[k];
      }
      CHECK(sum == z_vector(id));
    }
  }
  auto id = make_sl(1, 2);
  CHECK_THROWS_AS(z_decomposition(make_root({0, 1, -1}, id), id), PreconditionError);
}

TEST_CASE("z acts by one on g1") {
  for (auto id : {make_sl(1, 2), make_sl(1, 3), make_sl(2, 3), make_osp(2)}) {
    for (const auto& b : positive_odd_roots(id)) CHECK(to_weight(b, id).z == 1);
    for (const auto& b : positive_even_roots(id)) CHECK(to_weight(b, id).z == 0);
  }
}
