#include "superkac/coeffalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superkac/errors.hpp"

namespace superkac {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool dominated(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string to_string(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) os << (i ? "," : "") << to_string(p.coords[i]);
  os << ")";
  return os.str();
}

namespace {

void monomials_of_degree(int r, int d, Exponent& cur, int pos, std::vector<Exponent>& out) {
  if (pos == r - 1) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    monomials_of_degree(r, d - k, cur, pos + 1, out);
  }
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(int r, int order) : r_(r), order_(order) {
  if (r < 1) throw DomainError("truncated algebra needs r >= 1");
  if (order < 1) throw DomainError("truncated algebra needs order >= 1");
  for (int d = 0; d < order; ++d) {
    Exponent cur(r, 0);
    monomials_of_degree(r, d, cur, 0, basis_);
  }
  for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;
  mul_.assign(basis_.size() * basis_.size(), -1);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Exponent e(r, 0);
      for (int k = 0; k < r; ++k) e[k] = basis_[i][k] + basis_[j][k];
      mul_[static_cast<std::size_t>(i) * basis_.size() + j] = index(e);
    }
}

int TruncatedAlgebra::index(const Exponent& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

SparseVec TruncatedAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) {
      int k = mul(i, j);
      if (k >= 0) acc.add(k, x * y);
    }
  return acc.take();
}

Ideal::Ideal(TruncatedAlgebra alg, const std::vector<SparseVec>& spanning) : alg_(std::move(alg)), ech_(alg_.dim()) {
  for (const auto& v : spanning) {
    SparseVec rev;
    for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) rev.push(col(it->first), it->second);
    ech_.insert(rev);
  }
  for (const auto& r : ech_.rref()) {
    SparseVec m;
    for (auto it = r.entries().rbegin(); it != r.entries().rend(); ++it) m.push(mono(it->first), it->second);
    basis_.push_back(std::move(m));
  }
}

Ideal Ideal::zero(const TruncatedAlgebra& alg) { return Ideal(alg, {}); }

Ideal Ideal::power_of_max(const TruncatedAlgebra& alg, int k) {
  std::vector<SparseVec> gens;
  for (int i = 0; i < alg.dim(); ++i)
    if (degree(alg.monomial(i)) >= k) gens.push_back(SparseVec::unit(i));
  return Ideal(alg, gens);
}

Ideal Ideal::generated(const TruncatedAlgebra& alg, const std::vector<SparseVec>& gens) {
  std::vector<SparseVec> span;
  for (const auto& g : gens)
    for (int i = 0; i < alg.dim(); ++i) span.push_back(alg.mul(g, SparseVec::unit(i)));
  return Ideal(alg, span);
}

SparseVec Ideal::reduce(const SparseVec& v) const {
  SparseVec rev;
  for (auto it = v.entries().rbegin(); it != v.entries().rend(); ++it) rev.push(col(it->first), it->second);
  SparseVec r = ech_.reduce(rev);
  SparseVec m;
  for (auto it = r.entries().rbegin(); it != r.entries().rend(); ++it) m.push(mono(it->first), it->second);
  return m;
}

bool Ideal::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

bool Ideal::is_ideal() const {
  for (const auto& b : basis_)
    for (int i = 0; i < alg_.dim(); ++i)
      if (!contains(alg_.mul(b, SparseVec::unit(i)))) return false;
  return true;
}

std::vector<int> Ideal::complement() const {
  std::vector<char> piv(alg_.dim(), 0);
  for (int p : ech_.pivots()) piv[mono(p)] = 1;
  std::vector<int> out;
  for (int i = 0; i < alg_.dim(); ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

Ideal Ideal::intersect(const Ideal& other) const {
  if (!(alg_ == other.alg_)) throw InternalError("intersect: ideals live in different algebras");
  // Solve sum a_i u_i = sum b_j w_j.
  const int p = dim(), q = other.dim(), D = alg_.dim();
  Echelon e(p + q);
  for (int row = 0; row < D; ++row) {
    SparseVec eq;
    for (int i = 0; i < p; ++i) eq.push(i, basis_[i].at(row));
    for (int j = 0; j < q; ++j) eq.push(p + j, -other.basis_[j].at(row));
    e.insert(eq);
  }
  std::vector<SparseVec> span;
  for (const auto& sol : e.nullspace()) {
    SparseVec v;
    for (const auto& [i, x] : sol.entries())
      if (i < p) v.axpy(x, basis_[i]);
    span.push_back(std::move(v));
  }
  return Ideal(alg_, span);
}

Ideal Ideal::product(const Ideal& other) const {
  std::vector<SparseVec> span;
  for (const auto& a : basis_)
    for (const auto& b : other.basis_) span.push_back(alg_.mul(a, b));
  return Ideal::generated(alg_, span);
}

Ideal Ideal::lift(int N) const {
  if (N < alg_.order()) throw InternalError("lift: target order too small");
  TruncatedAlgebra big(alg_.r(), N);
  std::vector<SparseVec> span;
  for (const auto& b : basis_) {
    SparseVec v;
    for (const auto& [i, x] : b.entries()) v.push(big.index(alg_.monomial(i)), x);
    span.push_back(std::move(v));
  }
  for (int i = 0; i < big.dim(); ++i)
    if (degree(big.monomial(i)) >= alg_.order()) span.push_back(SparseVec::unit(i));
  // Monomial order of the smaller algebra is a prefix of the larger one, so indices stay sorted.
  return Ideal(big, span);
}

bool operator==(const Ideal& a, const Ideal& b) { return a.alg_ == b.alg_ && a.basis_ == b.basis_; }

QuotientAlgebra::QuotientAlgebra(Ideal I) : I_(std::move(I)) {
  basis_ = I_.complement();
  const auto& A = I_.algebra();
  pos_.assign(A.dim(), -1);
  for (int j = 0; j < dim(); ++j) pos_[basis_[j]] = j;
  mul_.resize(basis_.size() * basis_.size());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      int k = A.mul(basis_[i], basis_[j]);
      mul_[static_cast<std::size_t>(i) * basis_.size() + j] = k < 0 ? SparseVec() : coords(SparseVec::unit(k));
    }
}

SparseVec QuotientAlgebra::coords(const SparseVec& v) const {
  SparseVec r = I_.reduce(v);
  SparseVec out;
  for (const auto& [i, x] : r.entries()) {
    if (pos_[i] < 0) throw InternalError("quotient reduction left a pivot monomial");
    out.push(pos_[i], x);
  }
  return out;
}

SparseVec QuotientAlgebra::project(const Exponent& e) const {
  int i = ambient().index(e);
  if (i < 0) return {};
  return coords(SparseVec::unit(i));
}

SparseVec QuotientAlgebra::mul(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim());
  for (const auto& [i, x] : a.entries())
    for (const auto& [j, y] : b.entries()) acc.add(x * y, mul(i, j));
  return acc.take();
}

ZFunctional::ZFunctional(int r, int n, std::map<Exponent, Rational> values) : r_(r), n_(n) {
  if (r < 1) throw DomainError("functional needs r >= 1");
  if (n < 1) throw DomainError("functional needs n >= 1");
  for (auto& [e, v] : values) {
    if (static_cast<int>(e.size()) != r) throw DomainError("exponent " + to_string(e) + " has wrong length");
    for (int x : e)
      if (x < 0) throw DomainError("negative exponent " + to_string(e));
    if (degree(e) >= n) {
      if (v != 0) throw DomainError("value given outside the truncation basis at " + to_string(e));
      continue;
    }
    if (v != 0) values_[e] = v;
  }
}

Rational ZFunctional::value(const Exponent& e) const {
  auto it = values_.find(e);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational ZFunctional::eval(const TruncatedAlgebra& alg, const SparseVec& v) const {
  if (alg.r() != r_) throw InternalError("functional evaluated on an algebra with a different variable count");
  Rational s = 0;
  for (const auto& [i, x] : v.entries()) s += x * value(alg.monomial(i));
  return s;
}

bool ZFunctional::kills_max() const {
  for (const auto& kv : values_)
    if (degree(kv.first) > 0) return false;
  return true;
}

int ZFunctional::nilpotency() const {
  int d = 0;
  for (const auto& kv : values_) d = std::max(d, degree(kv.first) + 1);
  return std::max(d, 1);
}

ZFunctional constant_functional(int r, const Rational& c) {
  std::map<Exponent, Rational> v;
  v[Exponent(r, 0)] = c;
  return ZFunctional(r, 1, v);
}

std::set<Exponent> support_set(const ZFunctional& theta) {
  std::set<Exponent> s;
  for (const auto& kv : theta.values()) s.insert(kv.first);
  return s;
}

std::set<Exponent> maximal_support(const ZFunctional& theta) {
  auto s = support_set(theta);
  if (s.empty()) throw DomainError("maximal_support: empty support");
  std::set<Exponent> out;
  for (const auto& a : s) {
    bool maximal = true;
    for (const auto& b : s)
      if (a != b && dominated(a, b)) {
        maximal = false;
        break;
      }
    if (maximal) out.insert(a);
  }
  return out;
}

Ideal annihilator_ideal(const ZFunctional& theta, const TruncatedAlgebra& alg) {
  if (theta.is_zero()) throw DomainError("degenerate functional: Θ vanishes identically");
  if (alg.r() != theta.r() || alg.order() < theta.n())
    throw PreconditionError("annihilator_ideal: algebra does not carry the functional");
  const int D = alg.dim();
  // Rows of the Gram matrix B(a,b) = Θ(ab); the kernel is the radical.
  Echelon e(D);
  for (int b = 0; b < D; ++b) {
    SparseVec row;
    for (int a = 0; a < D; ++a) {
      int k = alg.mul(a, b);
      if (k >= 0) row.push(a, theta.value(alg.monomial(k)));
    }
    e.insert(row);
  }
  Ideal k(alg, e.nullspace());
  if (!k.is_ideal()) throw InternalError("annihilator of Θ is not an ideal");
  return k;
}

Ideal annihilator_ideal(const ZFunctional& theta) {
  return annihilator_ideal(theta, TruncatedAlgebra(theta.r(), theta.n()));
}

bool kills_ideal(const ZFunctional& theta, const Ideal& I) {
  for (const auto& b : I.basis())
    if (theta.eval(I.algebra(), b) != 0) return false;
  return true;
}

std::pair<Root, Exponent> star(const Exponent& mono, const Root& alpha, const StarPartner& partner) {
  if (!alpha.odd()) throw PreconditionError("star: root must be odd");
  if (mono.size() != partner.nhat.size() || !dominated(mono, partner.nhat))
    throw PreconditionError("star: monomial " + to_string(mono) + " is not below n̂ " + to_string(partner.nhat));
  Exponent e(mono.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = partner.nhat[i] - mono[i];
  return {alpha, e};
}

}  // namespace superkac
