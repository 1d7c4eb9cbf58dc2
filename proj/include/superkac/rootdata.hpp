#pragma once

#include <string>
#include <vector>

#include "superkac/rational.hpp"

namespace superkac {

enum class Family { SL, OSP };

/// sl(m|n) with 1 <= m <= n, n > 1, or osp(2|2n) with n > 1 (m is ignored and stored as 1).
struct AlgebraId {
  Family family = Family::SL;
  int m = 1;
  int n = 2;

  void validate() const;
  /// Length of the ε/δ coordinate vectors: m+n for sl, 1+n for osp.
  int coord_count() const;
  /// Number of leading ε coordinates.
  int eps_count() const;
  std::string name() const;
  friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
    return a.family == b.family && a.m == b.m && a.n == b.n;
  }
};

AlgebraId make_sl(int m, int n);
AlgebraId make_osp(int n);

enum class Parity { Even, Odd };

struct Root {
  std::vector<int> coords;
  Parity parity = Parity::Even;

  bool odd() const { return parity == Parity::Odd; }
  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend bool operator<(const Root& a, const Root& b) { return a.coords < b.coords; }
};

std::string to_string(const Root& r);

/// h*-weight in the coordinates used throughout: Dynkin labels on g0' (per simple ideal) plus the value on z.
struct Weight {
  RatVec hprime;
  Rational z;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& c, const Weight& a);
  friend bool operator==(const Weight& a, const Weight& b) { return a.hprime == b.hprime && a.z == b.z; }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.hprime != b.hprime) return a.hprime < b.hprime;
    return a.z < b.z;
  }
  bool is_zero() const;
};

Weight zero_weight(const AlgebraId& id);
std::string to_string(const Weight& w);

struct BorelChoice {
  std::vector<Root> simple_roots;
  std::vector<Root> reflection_chain;
};

/// All roots, sorted by coordinates.
std::vector<Root> all_roots(const AlgebraId& id);
bool is_root(const std::vector<int>& coords, const AlgebraId& id);
/// Parity and membership check; throws DomainError for non-roots.
Root make_root(const std::vector<int>& coords, const AlgebraId& id);

/// Invariant form on ε/δ coordinates: (ε_i,ε_j) = δ_ij, (δ_i,δ_j) = -δ_ij.
Rational form(const std::vector<int>& a, const std::vector<int>& b, const AlgebraId& id);
Rational form(const RatVec& a, const RatVec& b, const AlgebraId& id);

/// Coordinate vector d_α of the coroot h_α, so that λ(h_α) = λ·d_α.
RatVec coroot_vector(const Root& alpha, const AlgebraId& id);
/// Coordinate vector of the central element z of g0 (acts by +1 on g1 unless sl(n|n), where z = identity).
RatVec z_vector(const AlgebraId& id);

/// β(h_α).
Rational pairing(const Root& beta, const Root& alpha, const AlgebraId& id);

BorelChoice distinguished_borel(const AlgebraId& id);
/// Coefficients of root in the simple roots of delta; empty if not in their span.
RatVec simple_coefficients(const Root& root, const BorelChoice& delta, const AlgebraId& id);
/// True if every root is a nonnegative or nonpositive integer combination of the simple roots.
bool is_valid_base(const BorelChoice& delta, const AlgebraId& id);
std::vector<Root> positive_roots(const BorelChoice& delta, const AlgebraId& id);
/// Positive odd roots of the distinguished Borel (the roots of g1).
std::vector<Root> positive_odd_roots(const AlgebraId& id);
std::vector<Root> positive_even_roots(const AlgebraId& id);

BorelChoice odd_reflection(const BorelChoice& delta, const Root& alpha, const AlgebraId& id);

/// Simple roots of g0' with the boundaries of its simple ideals.
struct G0PrimeData {
  std::vector<Root> simple_roots;
  std::vector<int> ideal_start;  // index of the first simple root of each ideal
  std::vector<int> ideal_size;
};
G0PrimeData g0prime(const AlgebraId& id);

struct ZDecomposition {
  Rational c_beta;
  RatVec c_i;  // one per g0' simple coroot, in g0prime order
};
ZDecomposition z_decomposition(const Root& beta, const AlgebraId& id);

/// Converts a weight in ε/δ coordinates to (Dynkin labels on g0', value on z).
Weight to_weight(const RatVec& coords, const AlgebraId& id);
Weight to_weight(const Root& root, const AlgebraId& id);
/// Some ε/δ coordinate vector with the given weight (unique up to the kernel of to_weight).
RatVec to_coords(const Weight& w, const AlgebraId& id);
/// Coordinates of a diagonal (coroot-type) vector in the basis {h_i of g0'} ∪ {z}; z last.
RatVec cartan_coords(const RatVec& diag, const AlgebraId& id);
/// λ(h_α) for a weight in Dynkin/z coordinates.
Rational eval_coroot(const Weight& w, const Root& alpha, const AlgebraId& id);

}  // namespace superkac
