#include "doctest.h"

#include <algorithm>

#include "superkac/charring.hpp"
#include "superkac/errors.hpp"

using namespace superkac;

namespace {

G0IrrepLabel label(const AlgebraId& id, RatVec hp, Rational z = 0) {
  REQUIRE(hp.size() == g0prime(id).simple_roots.size());
  return G0IrrepLabel{Weight{std::move(hp), z}};
}

// Character of Λ^k C^n for sl(n), from subsets of {1..n}: the weight of e_S has label
// [i ∈ S] - [i+1 ∈ S] on the i-th simple coroot.
FormalCharacter wedge_character(int n, int k, const AlgebraId& id, int offset) {
  FormalCharacter ch;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    Weight w = zero_weight(id);
    for (int i = 0; i + 1 < n; ++i) w.hprime[offset + i] = pick[i] - pick[i + 1];
    ch.add(w, 1);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return ch;
}

}  // namespace

TEST_CASE("weyl characters of sl(2) factors") {
  auto id = make_sl(1, 2);
  auto triv = weyl_character(trivial_label(id), id);
  CHECK(triv == FormalCharacter::one(id));
  CHECK(dimension(triv) == 1);

  for (int l = 0; l <= 6; ++l) {
    auto ch = weyl_character(label(id, {l}, Rational(1, 3)), id);
    // Oracle: weights l, l-2, ..., -l with multiplicity one.
    FormalCharacter expect;
    for (int w = l; w >= -l; w -= 2) expect.add(Weight{{w}, Rational(1, 3)}, 1);
    CHECK(ch == expect);
    CHECK(weyl_dimension(label(id, {l}), id) == l + 1);
  }
  CHECK_THROWS_AS(weyl_character(label(id, {-1}), id), DomainError);
  CHECK_THROWS_AS(weyl_character(label(id, {Rational(1, 2)}), id), DomainError);
}

TEST_CASE("fundamental representations match exterior powers") {
  for (auto id : {make_sl(1, 3), make_sl(1, 4), make_sl(2, 3), make_sl(3, 3)}) {
    auto g0 = g0prime(id);
    for (std::size_t q = 0; q < g0.ideal_start.size(); ++q) {
      int n = g0.ideal_size[q] + 1;
      for (int k = 1; k < n; ++k) {
        Weight hw = zero_weight(id);
        hw.hprime[g0.ideal_start[q] + k - 1] = 1;
        auto ch = weyl_character(G0IrrepLabel{hw}, id);
        CHECK(ch == wedge_character(n, k, id, g0.ideal_start[q]));
      }
    }
  }
}

TEST_CASE("freudenthal agrees with the Weyl dimension formula") {
  for (auto id : {make_sl(1, 3), make_sl(2, 3), make_sl(3, 4), make_osp(2), make_osp(3)}) {
    const int k = static_cast<int>(g0prime(id).simple_roots.size());
    std::vector<int> hw(k, 0);
    while (true) {
      RatVec h(hw.begin(), hw.end());
      auto lab = label(id, h);
      CHECK(dimension(weyl_character(lab, id)) == weyl_dimension(lab, id));
      int p = 0;
      while (p < k && hw[p] == 2) hw[p++] = 0;
      if (p == k) break;
      ++hw[p];
    }
  }
  // sl(3) adjoint: dimension 8, zero weight multiplicity 2.
  auto id = make_sl(1, 3);
  auto adj = weyl_character(label(id, {1, 1}), id);
  CHECK(dimension(adj) == 8);
  CHECK(adj.coefficient(zero_weight(id)) == 2);
  CHECK(adj == g0prime_adjoint_character(id));
}

TEST_CASE("grassmann characters") {
  auto id = make_sl(1, 2);
  auto ch = grassmann_character(id, false);
  auto odd = positive_odd_roots(id);
  REQUIRE(odd.size() == 2);
  FormalCharacter expect = FormalCharacter::one(id);
  expect.add(to_weight(-odd[0], id), 1);
  expect.add(to_weight(-odd[1], id), 1);
  expect.add(to_weight(-(odd[0] + odd[1]), id), 1);
  CHECK(ch == expect);
  CHECK(dimension(ch) == 4);
  for (auto i : {make_sl(1, 2), make_sl(2, 2), make_sl(2, 3), make_osp(2)}) {
    CHECK(dimension(grassmann_character(i, true)) == 0);
    CHECK(dimension(grassmann_character(i, false)) == (1LL << positive_odd_roots(i).size()));
  }
}

TEST_CASE("kac-like characters") {
  auto id = make_sl(1, 2);
  auto ch = kac_like_character(trivial_label(id, 3), 2, id, false);
  CHECK(dimension(ch) == 16);
  CHECK(dimension(kac_like_character(trivial_label(id, 3), 2, id, true)) == 0);
  CHECK_THROWS_AS(kac_like_character(trivial_label(id), 0, id, false), DomainError);
  for (auto i : {make_sl(1, 2), make_sl(2, 2)}) {
    const long long g1 = static_cast<long long>(positive_odd_roots(i).size());
    const int k = static_cast<int>(g0prime(i).simple_roots.size());
    for (int d = 1; d <= 3; ++d)
      for (int a = 0; a <= 2; ++a) {
        RatVec hp(k);
        hp[0] = a;
        auto lab = label(i, hp, Rational(1, 2));
        auto c = kac_like_character(lab, d, i, false);
        CHECK(dimension(c) == (1LL << (g1 * d)) * weyl_dimension(lab, i));
        CHECK(dimension(kac_like_character(lab, d, i, true)) == 0);
      }
    auto lab = trivial_label(i, 1);
    CHECK(kac_like_character(lab, 1, i, false) == grassmann_character(i, false) * weyl_character(lab, i));
  }
}

TEST_CASE("decomposition") {
  auto id = make_sl(1, 2);
  auto v1 = weyl_character(label(id, {1}), id);
  auto parts = decompose(v1 * v1, id);
  // Oracle: the weights of C^2 ⊗ C^2 are {2, 0, 0, -2}; peeling by hand gives hw 2 and hw 0.
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == label(id, {0}));
  CHECK(parts[1].first == label(id, {2}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].second == 1);

  auto lab = label(id, {3}, 2);
  auto one = decompose(weyl_character(lab, id), id);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first == lab);

  FormalCharacter bad = FormalCharacter::monomial(Weight{{-1}, 0});
  CHECK_THROWS_AS(decompose(bad, id), DomainError);

  auto id3 = make_sl(2, 3);
  auto a = weyl_character(label(id3, {1, 1, 0}), id3);
  auto b = weyl_character(label(id3, {0, 0, 1}), id3);
  auto c = weyl_character(label(id3, {1, 1, 1}), id3);
  CHECK(decompose((a * b) * c, id3) == decompose(a * (b * c), id3));
}
