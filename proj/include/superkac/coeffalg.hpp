#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superkac/linalg.hpp"
#include "superkac/rational.hpp"
#include "superkac/rootdata.hpp"

namespace superkac {

using Exponent = std::vector<int>;

int degree(const Exponent& e);
/// Componentwise a <= b.
bool dominated(const Exponent& a, const Exponent& b);
std::string to_string(const Exponent& e);

/// Maximal ideal <t_1 - a_1, ..., t_r - a_r> of a polynomial ring.
struct Point {
  RatVec coords;
  int r() const { return static_cast<int>(coords.size()); }
  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords < b.coords; }
};
std::string to_string(const Point& p);

/// A/m^n in r variables with the monomial basis T^i, |i| < n, ordered by degree.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(int r, int order);

  int r() const { return r_; }
  int order() const { return order_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Exponent>& basis() const { return basis_; }
  const Exponent& monomial(int i) const { return basis_[i]; }
  /// Index of a monomial, or -1 if its degree is >= order.
  int index(const Exponent& e) const;
  /// Product of two basis monomials, as an index or -1 for zero.
  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * basis_.size() + j]; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;

  friend bool operator==(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
    return a.r_ == b.r_ && a.order_ == b.order_;
  }

 private:
  int r_;
  int order_;
  std::vector<Exponent> basis_;
  std::map<Exponent, int> index_;
  std::vector<int> mul_;
};

/// An ideal of a TruncatedAlgebra, stored as a reduced basis in monomial coordinates.
/// Pivots sit on the highest-degree monomials, so the complement basis is low-degree and contains 1.
class Ideal {
 public:
  Ideal(TruncatedAlgebra alg, const std::vector<SparseVec>& spanning);
  static Ideal zero(const TruncatedAlgebra& alg);
  static Ideal power_of_max(const TruncatedAlgebra& alg, int k);  // m^k
  /// Smallest ideal containing the given vectors.
  static Ideal generated(const TruncatedAlgebra& alg, const std::vector<SparseVec>& gens);

  const TruncatedAlgebra& algebra() const { return alg_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int codim() const { return alg_.dim() - dim(); }
  const std::vector<SparseVec>& basis() const { return basis_; }  // monomial coordinates

  bool contains(const SparseVec& v) const;
  bool contains(const Ideal& other) const;
  bool is_ideal() const;  // closed under multiplication by monomials
  /// Reduction modulo the ideal; the result is supported on complement monomials.
  SparseVec reduce(const SparseVec& v) const;
  /// Complement monomials (indices in the algebra basis), in increasing order.
  std::vector<int> complement() const;

  Ideal intersect(const Ideal& other) const;
  Ideal product(const Ideal& other) const;
  /// The same ideal viewed in A/m^N for N >= order (preimage under A/m^N -> A/m^n).
  Ideal lift(int N) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  int col(int monomial) const { return alg_.dim() - 1 - monomial; }
  int mono(int column) const { return alg_.dim() - 1 - column; }

  TruncatedAlgebra alg_;
  Echelon ech_;                  // columns reversed so pivots are high degree
  std::vector<SparseVec> basis_;  // in monomial coordinates
};

/// A/I with the complement-monomial basis.
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(Ideal I);

  const Ideal& ideal() const { return I_; }
  const TruncatedAlgebra& ambient() const { return I_.algebra(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// Basis element j is the image of the ambient monomial basis_[j].
  int basis_monomial(int j) const { return basis_[j]; }
  /// Coordinates of an ambient vector in the quotient basis.
  SparseVec coords(const SparseVec& v) const;
  /// Image of the monomial T^e (any exponent, any degree) in quotient coordinates.
  SparseVec project(const Exponent& e) const;
  /// Structure constants: b_i * b_j in quotient coordinates.
  const SparseVec& mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * basis_.size() + j]; }
  SparseVec mul(const SparseVec& a, const SparseVec& b) const;

 private:
  Ideal I_;
  std::vector<int> basis_;
  std::vector<int> pos_;  // ambient monomial -> quotient index or -1
  std::vector<SparseVec> mul_;
};

/// Θ ∈ z[A]*, given by its values on the monomial basis of A/m^n.
class ZFunctional {
 public:
  ZFunctional(int r, int n, std::map<Exponent, Rational> values);

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<Exponent, Rational>& values() const { return values_; }
  Rational value(const Exponent& e) const;
  /// Θ(z ⊗ 1).
  Rational at_one() const { return value(Exponent(r_, 0)); }
  /// Θ evaluated on an ambient vector of an algebra in the same variables.
  Rational eval(const TruncatedAlgebra& alg, const SparseVec& v) const;
  bool is_zero() const { return values_.empty(); }
  /// True if Θ(z ⊗ m) = 0.
  bool kills_max() const;
  /// Smallest l with Θ(z ⊗ m^l) = 0.
  int nilpotency() const;

  friend bool operator==(const ZFunctional& a, const ZFunctional& b) {
    return a.r_ == b.r_ && a.values_ == b.values_;
  }

 private:
  int r_;
  int n_;
  std::map<Exponent, Rational> values_;  // nonzero entries only
};

/// Constant functional with Θ(z) = c and Θ(z ⊗ m) = 0.
ZFunctional constant_functional(int r, const Rational& c);

std::set<Exponent> support_set(const ZFunctional& theta);
std::set<Exponent> maximal_support(const ZFunctional& theta);

/// k_Θ inside alg (alg.order() >= theta.n()), as the kernel of (a,b) -> Θ(z ⊗ ab).
Ideal annihilator_ideal(const ZFunctional& theta, const TruncatedAlgebra& alg);
Ideal annihilator_ideal(const ZFunctional& theta);
/// True if Θ(z ⊗ I) = 0.
bool kills_ideal(const ZFunctional& theta, const Ideal& I);

struct StarPartner {
  Exponent nhat;
};

/// (y_α ⊗ T^i)^⋆ = x_α ⊗ T^{n̂ - i}.
std::pair<Root, Exponent> star(const Exponent& mono, const Root& alpha, const StarPartner& partner);

}  // namespace superkac
