#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "superkac/rational.hpp"

namespace superkac {

/// Sparse vector: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<int, Rational>;

  SparseVec() = default;
  static SparseVec unit(int i, Rational c = 1);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  Rational at(int i) const;

  /// Appends an entry; indices must be pushed in increasing order.
  void push(int i, Rational c);

  void axpy(const Rational& c, const SparseVec& w);  // this += c * w
  void scale(const Rational& c);
  SparseVec operator-() const;
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
  friend bool operator==(const SparseVec& a, const SparseVec& b);

  Rational dot(const SparseVec& w) const;

 private:
  std::vector<Entry> e_;
};

/// Dense scratch buffer for building sparse vectors out of many updates.
class Accumulator {
 public:
  explicit Accumulator(int n) : val_(n), hit_(n, 0) {}
  void add(int i, const Rational& c);
  void add(const Rational& c, const SparseVec& v);
  SparseVec take();  // returns the sparse content and resets

 private:
  std::vector<Rational> val_;
  std::vector<char> hit_;
  std::vector<int> touched_;
};

/// Column-stored sparse matrix: col[j] is the image of the j-th basis vector.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}
  static SparseMatrix identity(int n);

  SparseVec apply(const SparseVec& v) const;
  SparseMatrix transpose() const;
  bool is_zero() const;
  std::size_t nnz() const;
  Rational at(int i, int j) const { return col[j].at(i); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& c, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
};

/// Incremental row-echelon basis of a subspace of Q^ncols.
class Echelon {
 public:
  explicit Echelon(int ncols) : ncols_(ncols) {}

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Adds v to the span. Returns the reduced vector actually stored (empty if v was dependent).
  SparseVec insert(const SparseVec& v);

  /// Fully reduced basis, ordered by pivot.
  std::vector<SparseVec> rref() const;
  std::vector<int> pivots() const;
  /// Basis of {x : r.x = 0 for every stored row r}.
  std::vector<SparseVec> nullspace() const;

 private:
  int ncols_;
  std::map<int, SparseVec> rows_;  // pivot -> row with leading coefficient 1
};

/// Rank of a growing family of rational vectors reduced modulo a prime below 2^62.
/// The result never exceeds the rank over Q, and equals it for all but finitely many primes.
class ModRank {
 public:
  ModRank(int ncols, std::uint64_t prime);

  int rank() const { return static_cast<int>(rows_.size()); }
  /// Throws DomainError if a denominator vanishes modulo the prime.
  void insert(const SparseVec& v);

 private:
  std::uint64_t p_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> pivot_row_;  // by leading column; empty when absent
  std::vector<int> rows_;
  std::vector<std::uint64_t> buf_;
  std::vector<char> live_;
};

/// Coordinates with respect to a fixed linearly independent family.
class SpanCoordinates {
 public:
  SpanCoordinates(const std::vector<SparseVec>& family, int ambient);
  int size() const { return k_; }
  /// Coefficients of v; throws InternalError when v is outside the span.
  SparseVec of(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;

 private:
  int amb_;
  int k_;
  Echelon ech_;
};

/// Small dense matrices used for Lie algebra realizations.
struct Dense {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Dense() = default;
  Dense(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static Dense identity(int n);

  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool is_zero() const;
  friend Dense operator*(const Dense& x, const Dense& y);
  friend Dense operator+(const Dense& x, const Dense& y);
  friend Dense operator-(const Dense& x, const Dense& y);
  friend Dense operator*(const Rational& c, const Dense& x);
  friend bool operator==(const Dense& x, const Dense& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }

  SparseMatrix sparse() const;
};

/// Solves A x = b exactly (any particular solution). False when inconsistent.
bool solve(const Dense& A, const RatVec& b, RatVec& x);
int rank(const Dense& A);

}  // namespace superkac
