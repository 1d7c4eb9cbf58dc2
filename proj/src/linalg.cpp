#include "superkac/linalg.hpp"

#include <algorithm>
#include <queue>

#include "superkac/errors.hpp"

namespace superkac {

SparseVec SparseVec::unit(int i, Rational c) {
  SparseVec v;
  if (c != 0) v.e_.emplace_back(i, std::move(c));
  return v;
}

Rational SparseVec::at(int i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& x, int k) { return x.first < k; });
  if (it != e_.end() && it->first == i) return it->second;
  return 0;
}

void SparseVec::push(int i, Rational c) {
  if (c == 0) return;
  if (!e_.empty() && e_.back().first >= i) throw InternalError("SparseVec::push out of order");
  e_.emplace_back(i, std::move(c));
}

void SparseVec::axpy(const Rational& c, const SparseVec& w) {
  if (c == 0 || w.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + w.e_.size());
  auto a = e_.begin();
  auto b = w.e_.begin();
  while (a != e_.end() || b != w.e_.end()) {
    if (b == w.e_.end() || (a != e_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == e_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

void SparseVec::scale(const Rational& c) {
  if (c == 0) {
    e_.clear();
    return;
  }
  for (auto& x : e_) x.second *= c;
}

SparseVec SparseVec::operator-() const {
  SparseVec r = *this;
  for (auto& x : r.e_) x.second = -x.second;
  return r;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(1, b);
  return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
  SparseVec r = a;
  r.axpy(-1, b);
  return r;
}

bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

Rational SparseVec::dot(const SparseVec& w) const {
  Rational s = 0;
  auto a = e_.begin();
  auto b = w.e_.begin();
  while (a != e_.end() && b != w.e_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      s += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return s;
}

void Accumulator::add(int i, const Rational& c) {
  if (c == 0) return;
  if (!hit_[i]) {
    hit_[i] = 1;
    touched_.push_back(i);
    val_[i] = c;
  } else {
    val_[i] += c;
  }
}

void Accumulator::add(const Rational& c, const SparseVec& v) {
  if (c == 0) return;
  for (const auto& [i, x] : v.entries()) add(i, c * x);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec out;
  for (int i : touched_) {
    if (val_[i] != 0) out.push(i, val_[i]);
    val_[i] = 0;
    hit_[i] = 0;
  }
  touched_.clear();
  return out;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col[i] = SparseVec::unit(i);
  return m;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  if (v.size() == 1) {
    SparseVec r = col[v.entries()[0].first];
    r.scale(v.entries()[0].second);
    return r;
  }
  Accumulator acc(rows);
  for (const auto& [j, x] : v.entries()) acc.add(x, col[j]);
  return acc.take();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, x] : col[j].entries()) t.col[i].push(j, x);
  return t;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InternalError("SparseMatrix product: shape mismatch");
  SparseMatrix r(a.rows, b.cols);
  Accumulator acc(a.rows);
  for (int j = 0; j < b.cols; ++j) {
    for (const auto& [k, x] : b.col[j].entries()) acc.add(x, a.col[k]);
    r.col[j] = acc.take();
  }
  return r;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InternalError("SparseMatrix sum: shape mismatch");
  SparseMatrix r = a;
  for (int j = 0; j < a.cols; ++j) r.col[j].axpy(1, b.col[j]);
  return r;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InternalError("SparseMatrix difference: shape mismatch");
  SparseMatrix r = a;
  for (int j = 0; j < a.cols; ++j) r.col[j].axpy(-1, b.col[j]);
  return r;
}

SparseMatrix operator*(const Rational& c, const SparseMatrix& a) {
  SparseMatrix r = a;
  for (auto& v : r.col) v.scale(c);
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t k = 0;
  while (k < v.size()) {
    int c = v.entries()[k].first;
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      ++k;
      continue;
    }
    Rational f = -v.entries()[k].second;
    v.axpy(f, it->second);  // clears column c, touches only columns > c
  }
  return v;
}

SparseVec Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return r;
  Rational lead = r.entries()[0].second;
  r.scale(1 / lead);
  rows_.emplace(r.entries()[0].first, r);
  return r;
}

std::vector<int> Echelon::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& kv : rows_) p.push_back(kv.first);
  return p;
}

std::vector<SparseVec> Echelon::rref() const {
  // Back substitution from the largest pivot down.
  std::map<int, SparseVec> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVec r = it->second;
    std::size_t k = 1;
    while (k < r.size()) {
      int c = r.entries()[k].first;
      auto d = done.find(c);
      if (d == done.end()) {
        ++k;
        continue;
      }
      Rational f = -r.entries()[k].second;
      r.axpy(f, d->second);
    }
    done.emplace(it->first, std::move(r));
  }
  std::vector<SparseVec> out;
  out.reserve(done.size());
  for (auto& kv : done) out.push_back(std::move(kv.second));
  return out;
}

std::vector<SparseVec> Echelon::nullspace() const {
  std::vector<SparseVec> R = rref();
  std::vector<char> is_pivot(ncols_, 0);
  for (const auto& r : R) is_pivot[r.entries()[0].first] = 1;
  // For each free column f, x_f = 1 and x_p = -R_p[f].
  std::vector<std::vector<std::pair<int, Rational>>> by_free(ncols_);
  for (const auto& r : R) {
    int p = r.entries()[0].first;
    for (std::size_t k = 1; k < r.size(); ++k) by_free[r.entries()[k].first].emplace_back(p, -r.entries()[k].second);
  }
  std::vector<SparseVec> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    auto& ent = by_free[f];
    ent.emplace_back(f, 1);
    std::sort(ent.begin(), ent.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec v;
    for (auto& [i, x] : ent) v.push(i, x);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

}  // namespace

ModRank::ModRank(int ncols, std::uint64_t prime)
    : p_(prime), pivot_row_(ncols), buf_(ncols, 0), live_(ncols, 0) {}

void ModRank::insert(const SparseVec& v) {
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  for (const auto& [i, x] : v.entries()) {
    std::uint64_t den = reduce_mod(x.get_den(), p_);
    if (den == 0) throw DomainError("denominator vanishes modulo the prime");
    buf_[i] = mulmod(reduce_mod(x.get_num(), p_), powmod(den, p_ - 2, p_), p_);
    if (!live_[i]) {
      live_[i] = 1;
      heap.push(i);
    }
  }
  while (!heap.empty()) {
    const int c = heap.top();
    heap.pop();
    live_[c] = 0;
    const std::uint64_t f = buf_[c];
    buf_[c] = 0;
    if (f == 0) continue;
    const auto& row = pivot_row_[c];
    if (row.empty()) {
      // New pivot: normalize and drain the rest of the buffer.
      const std::uint64_t inv = powmod(f, p_ - 2, p_);
      std::vector<std::pair<int, std::uint64_t>> out{{c, 1}};
      while (!heap.empty()) {
        const int j = heap.top();
        heap.pop();
        live_[j] = 0;
        if (buf_[j] != 0) out.emplace_back(j, mulmod(buf_[j], inv, p_));
        buf_[j] = 0;
      }
      pivot_row_[c] = std::move(out);
      rows_.push_back(c);
      return;
    }
    const std::uint64_t neg = p_ - f;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [j, x] = row[k];
      std::uint64_t s = buf_[j] + mulmod(neg, x, p_);
      if (s >= p_) s -= p_;
      buf_[j] = s;
      if (!live_[j]) {
        live_[j] = 1;
        heap.push(j);
      }
    }
  }
}

SpanCoordinates::SpanCoordinates(const std::vector<SparseVec>& family, int ambient)
    : amb_(ambient), k_(static_cast<int>(family.size())), ech_(ambient + static_cast<int>(family.size())) {
  for (int i = 0; i < k_; ++i) {
    SparseVec row = family[i];
    row.push(amb_ + i, 1);
    SparseVec r = ech_.insert(row);
    if (r.empty() || r.entries()[0].first >= amb_) throw InternalError("SpanCoordinates: family is dependent");
  }
}

SparseVec SpanCoordinates::of(const SparseVec& v) const {
  SparseVec r = ech_.reduce(v);
  SparseVec out;
  for (const auto& [i, x] : r.entries()) {
    if (i < amb_) throw InternalError("SpanCoordinates: vector outside the span");
    out.push(i - amb_, -x);
  }
  return out;
}

bool SpanCoordinates::contains(const SparseVec& v) const {
  SparseVec r = ech_.reduce(v);
  return r.empty() || r.entries()[0].first >= amb_;
}

Dense Dense::identity(int n) {
  Dense d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = 1;
  return d;
}

bool Dense::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Dense operator*(const Dense& x, const Dense& y) {
  if (x.cols != y.rows) throw InternalError("Dense product: shape mismatch");
  Dense r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(k, j) != 0) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

Dense operator+(const Dense& x, const Dense& y) {
  Dense r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Dense operator-(const Dense& x, const Dense& y) {
  Dense r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Dense operator*(const Rational& c, const Dense& x) {
  Dense r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

SparseMatrix Dense::sparse() const {
  SparseMatrix s(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if ((*this)(i, j) != 0) s.col[j].push(i, (*this)(i, j));
  return s;
}

bool solve(const Dense& A, const RatVec& b, RatVec& x) {
  // Row-reduce the augmented matrix [A | b].
  const int n = A.cols;
  Echelon e(n + 1);
  for (int i = 0; i < A.rows; ++i) {
    SparseVec row;
    for (int j = 0; j < n; ++j) row.push(j, A(i, j));
    row.push(n, b[i]);
    e.insert(row);
  }
  x.assign(n, 0);
  for (const auto& r : e.rref()) {
    int p = r.entries()[0].first;
    if (p == n) return false;
    x[p] = r.at(n);
  }
  return true;
}

int rank(const Dense& A) {
  Echelon e(A.cols);
  for (int i = 0; i < A.rows; ++i) {
    SparseVec row;
    for (int j = 0; j < A.cols; ++j) row.push(j, A(i, j));
    e.insert(row);
  }
  return e.rank();
}

}  // namespace superkac
