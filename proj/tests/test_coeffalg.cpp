#include "doctest.h"

#include "superkac/coeffalg.hpp"
#include "superkac/errors.hpp"

using namespace superkac;

namespace {

Rational q(long p, long d = 1) {
  Rational x(p, d);
  x.canonicalize();
  return x;
}

// Dense rank by plain Gaussian elimination, kept separate from the library's Echelon.
int dense_rank(std::vector<RatVec> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c] / m[rank][c];
        for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

// dim A/k_Θ equals the rank of the Gram matrix Θ(z ⊗ T^{i+j}) on A/m^n.
int gram_rank(const ZFunctional& theta) {
  TruncatedAlgebra A(theta.r(), theta.n());
  std::vector<RatVec> g(A.dim(), RatVec(A.dim()));
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) {
      Exponent e(theta.r());
      for (int k = 0; k < theta.r(); ++k) e[k] = A.monomial(i)[k] + A.monomial(j)[k];
      g[i][j] = theta.value(e);
    }
  return dense_rank(g);
}

std::vector<ZFunctional> sample_functionals() {
  std::vector<ZFunctional> out;
  out.emplace_back(1, 3, std::map<Exponent, Rational>{{{0}, q(2)}, {{1}, q(1)}});
  out.emplace_back(1, 3, std::map<Exponent, Rational>{{{2}, q(1)}});
  out.emplace_back(1, 2, std::map<Exponent, Rational>{{{0}, q(3)}});
  out.emplace_back(1, 4, std::map<Exponent, Rational>{{{1}, q(1)}, {{3}, q(-2, 3)}});
  out.emplace_back(2, 2, std::map<Exponent, Rational>{{{0, 0}, q(1)}, {{1, 0}, q(2)}, {{0, 1}, q(3)}});
  out.emplace_back(2, 3, std::map<Exponent, Rational>{{{0, 0}, q(1)}, {{1, 1}, q(1)}});
  out.emplace_back(2, 3, std::map<Exponent, Rational>{{{2, 0}, q(1)}, {{0, 1}, q(1)}});
  out.emplace_back(2, 3, std::map<Exponent, Rational>{{{1, 0}, q(1, 2)}, {{0, 2}, q(5)}, {{1, 1}, q(-1)}});
  return out;
}

}  // namespace

TEST_CASE("truncated algebra basis and products") {
  TruncatedAlgebra A(2, 3);
  CHECK(A.dim() == 6);
  CHECK(A.monomial(0) == Exponent{0, 0});
  CHECK(A.monomial(1) == Exponent{1, 0});
  CHECK(A.monomial(2) == Exponent{0, 1});
  CHECK(A.monomial(4) == Exponent{1, 1});
  CHECK(A.mul(1, 2) == 4);
  CHECK(A.mul(3, 1) == -1);
  CHECK(A.index({0, 3}) == -1);
  // Basis closed under componentwise decrease.
  for (const auto& e : A.basis())
    for (int k = 0; k < 2; ++k)
      if (e[k] > 0) {
        Exponent f = e;
        --f[k];
        CHECK(A.index(f) >= 0);
      }
}

TEST_CASE("support sets") {
  ZFunctional zero(1, 2, {});
  CHECK(support_set(zero).empty());
  CHECK_THROWS_AS(maximal_support(zero), DomainError);

  ZFunctional a(1, 2, {{{0}, q(5)}, {{1}, q(1)}});
  CHECK(support_set(a) == std::set<Exponent>{{0}, {1}});
  CHECK(maximal_support(a) == std::set<Exponent>{{1}});

  ZFunctional b(2, 2, {{{0, 0}, q(1)}, {{1, 0}, q(2)}, {{0, 1}, q(3)}});
  CHECK(support_set(b).size() == 3);
  CHECK(maximal_support(b) == std::set<Exponent>{{1, 0}, {0, 1}});

  ZFunctional c(2, 3, {{{0, 0}, q(1)}, {{1, 1}, q(1)}});
  CHECK(maximal_support(c) == std::set<Exponent>{{1, 1}});

  for (const auto& t : sample_functionals())
    for (const auto& e : support_set(t)) {
      bool below = false;
      for (const auto& m : maximal_support(t)) below = below || dominated(e, m);
      CHECK(below);
    }
}

TEST_CASE("functional validation") {
  CHECK_THROWS_AS(ZFunctional(1, 2, {{{2}, q(1)}}), DomainError);
  CHECK_THROWS_AS(ZFunctional(2, 2, {{{1}, q(1)}}), DomainError);
  CHECK_THROWS_AS(ZFunctional(1, 2, {{{-1}, q(1)}}), DomainError);
  CHECK(ZFunctional(1, 2, {{{1}, q(0)}}).is_zero());
}

TEST_CASE("annihilator ideal examples") {
  ZFunctional t1(1, 3, {{{0}, q(7)}, {{1}, q(1)}});
  auto k1 = annihilator_ideal(t1);
  CHECK(k1.codim() == 2);
  CHECK(k1 == Ideal::power_of_max(TruncatedAlgebra(1, 3), 2));

  ZFunctional t2(1, 2, {{{0}, q(4)}});
  auto k2 = annihilator_ideal(t2);
  CHECK(k2.codim() == 1);
  CHECK(k2 == Ideal::power_of_max(TruncatedAlgebra(1, 2), 1));

  ZFunctional t3(1, 3, {{{2}, q(1)}});
  auto k3 = annihilator_ideal(t3);
  CHECK(k3.codim() == 3);
  CHECK(k3.dim() == 0);

  CHECK_THROWS_AS(annihilator_ideal(ZFunctional(1, 3, {})), DomainError);
}

TEST_CASE("annihilator ideal properties") {
  for (const auto& t : sample_functionals()) {
    TruncatedAlgebra A(t.r(), t.n());
    auto k = annihilator_ideal(t, A);
    CHECK(k.is_ideal());
    CHECK(kills_ideal(t, k));
    CHECK(k.codim() == gram_rank(t));
    auto m = Ideal::power_of_max(A, 1);
    CHECK(m.contains(k));
    if (!t.kills_max()) CHECK(k.codim() > 1);
    // Maximality: adjoining any monomial outside k_Θ breaks Θ-vanishing.
    for (int i = 0; i < A.dim(); ++i) {
      if (k.contains(SparseVec::unit(i))) continue;
      auto gens = k.basis();
      gens.push_back(SparseVec::unit(i));
      CHECK_FALSE(kills_ideal(t, Ideal::generated(A, gens)));
    }
    // The same ideal computed in a larger truncation is the lift.
    TruncatedAlgebra B(t.r(), t.n() + 1);
    CHECK(annihilator_ideal(t, B) == k.lift(t.n() + 1));
  }
}

TEST_CASE("ideal arithmetic") {
  TruncatedAlgebra A(2, 4);
  auto m = Ideal::power_of_max(A, 1);
  auto m2 = Ideal::power_of_max(A, 2);
  CHECK(m.product(m) == m2);
  CHECK(m.intersect(m2) == m2);
  auto t1 = Ideal::generated(A, {SparseVec::unit(A.index({1, 0}))});
  auto t2 = Ideal::generated(A, {SparseVec::unit(A.index({0, 1}))});
  auto both = t1.intersect(t2);
  CHECK(both == Ideal::generated(A, {SparseVec::unit(A.index({1, 1}))}));
  CHECK(Ideal::zero(A).codim() == A.dim());
}

TEST_CASE("quotient algebra") {
  ZFunctional t(1, 3, {{{0}, q(1)}, {{1}, q(1)}});
  QuotientAlgebra Q(annihilator_ideal(t));
  CHECK(Q.dim() == 2);
  CHECK(Q.basis_monomial(0) == 0);
  CHECK(Q.mul(1, 1).empty());
  CHECK(Q.project({5}).empty());

  // A non-monomial ideal: <t1^2 - t2> in A/m^3.
  TruncatedAlgebra A(2, 3);
  SparseVec g;
  g.push(A.index({0, 1}), q(-1));
  g.push(A.index({2, 0}), q(1));
  QuotientAlgebra R(Ideal::generated(A, {g}));
  // t2 ≡ t1^2 modulo the ideal.
  CHECK(R.project({0, 1}) == R.project({2, 0}));
  for (int i = 0; i < R.dim(); ++i)
    for (int j = 0; j < R.dim(); ++j) CHECK(R.mul(i, j) == R.mul(j, i));
}

TEST_CASE("star partner") {
  auto id = make_sl(1, 2);
  Root a = make_root({1, -1, 0}, id);
  StarPartner p{{1}};
  CHECK(star({1}, a, p).second == Exponent{0});
  CHECK(star({0}, a, p).second == Exponent{1});
  CHECK(star({1}, a, p).first == a);
  StarPartner p2{{2, 1}};
  CHECK(star({2, 1}, a, p2).second == Exponent{0, 0});
  CHECK(star({0, 0}, a, p2).second == Exponent{2, 1});
  CHECK_THROWS_AS(star({2}, a, p), PreconditionError);
}
