#include <algorithm>
#include <cstdlib>

#include "superkac/errors.hpp"
#include "superkac/realize.hpp"

namespace superkac {

namespace {

Dense elementary(int N, int i, int j) {
  Dense d(N, N);
  d(i, j) = 1;
  return d;
}

Dense diagonal(const RatVec& d) {
  Dense m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

// Positive root e_i - e_j with i < j.
std::pair<int, int> endpoints(const Root& r) {
  int a = -1, b = -1;
  for (std::size_t k = 0; k < r.coords.size(); ++k) {
    if (r.coords[k] == 1) a = static_cast<int>(k);
    if (r.coords[k] == -1) b = static_cast<int>(k);
  }
  return {a, b};
}

}  // namespace

MatrixSuperalgebra::MatrixSuperalgebra(const AlgebraId& id) : id_(id) {
  id.validate();
  if (id.family != Family::SL) throw DomainError("matrix oracle supports sl only");
  N_ = id.m + id.n;
  auto odd_pos = positive_odd_roots(id);
  auto even_pos = positive_even_roots(id);
  const auto g0p = g0prime(id);

  auto add = [&](GElement e, Dense m) {
    elems_.push_back(std::move(e));
    mats_.push_back(std::move(m));
  };
  auto root_elem = [&](ElementKind kind, const Root& r) {
    auto [i, j] = endpoints(r);
    GElement e;
    e.kind = kind;
    e.root = r;
    e.odd = r.odd();
    e.degree = r.odd() ? (kind == ElementKind::X ? 1 : -1) : 0;
    e.weight = to_weight(kind == ElementKind::X ? r : -r, id);
    e.label = std::string(kind == ElementKind::X ? "x" : "y") + to_string(r);
    int a = kind == ElementKind::X ? i : j, b = kind == ElementKind::X ? j : i;
    entry_[{a, b}] = static_cast<int>(elems_.size());
    add(e, elementary(N_, a, b));
  };

  for (const auto& r : odd_pos) root_elem(ElementKind::X, r);
  for (const auto& r : even_pos) root_elem(ElementKind::X, r);
  for (const auto& r : even_pos) root_elem(ElementKind::Y, r);
  h0_ = dim();
  const int k = static_cast<int>(g0p.simple_roots.size());
  cartan_ = Dense(N_, k + 1);
  for (int c = 0; c < k; ++c) {
    GElement e;
    e.kind = ElementKind::H;
    e.cartan = c;
    e.weight = zero_weight(id);
    e.label = "h" + std::to_string(c);
    RatVec d = coroot_vector(g0p.simple_roots[c], id);
    for (int i = 0; i < N_; ++i) cartan_(i, c) = d[i];
    add(e, diagonal(d));
  }
  z_ = dim();
  {
    GElement e;
    e.kind = ElementKind::Z;
    e.weight = zero_weight(id);
    e.label = "z";
    RatVec d = z_vector(id);
    for (int i = 0; i < N_; ++i) cartan_(i, k) = d[i];
    add(e, diagonal(d));
  }
  for (const auto& r : odd_pos) root_elem(ElementKind::Y, r);

  const int D = dim();
  gm1pos_.assign(D, -1);
  for (int i = 0; i < D; ++i) {
    if (elems_[i].degree > 0) g1_.push_back(i);
    if (elems_[i].degree == 0) g0_.push_back(i);
    if (elems_[i].degree < 0) {
      gm1pos_[i] = static_cast<int>(gm1_.size());
      gm1_.push_back(i);
    }
  }
  if (D != N_ * N_ - 1) throw InternalError("sl(m|n) basis has the wrong size");

  br_.resize(static_cast<std::size_t>(D) * D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      Dense c = mats_[i] * mats_[j];
      Dense d = mats_[j] * mats_[i];
      Dense s = (odd(i) && odd(j)) ? c + d : c - d;
      br_[static_cast<std::size_t>(i) * D + j] = coords(s);
    }

  tau_.resize(D);
  for (int i = 0; i < D; ++i) {
    const auto& e = elems_[i];
    if (e.kind == ElementKind::X)
      tau_[i] = y(e.root);
    else if (e.kind == ElementKind::Y)
      tau_[i] = x(e.root);
    else
      tau_[i] = i;
  }
}

int MatrixSuperalgebra::x(const Root& positive) const {
  auto [i, j] = endpoints(positive);
  auto it = entry_.find({i, j});
  if (i < 0 || j < 0 || i > j || it == entry_.end()) throw DomainError("x: not a positive root " + to_string(positive));
  return it->second;
}

int MatrixSuperalgebra::y(const Root& positive) const {
  auto [i, j] = endpoints(positive);
  auto it = entry_.find({j, i});
  if (i < 0 || j < 0 || i > j || it == entry_.end()) throw DomainError("y: not a positive root " + to_string(positive));
  return it->second;
}

int MatrixSuperalgebra::root_vector(const Root& gamma) const {
  auto [i, j] = endpoints(gamma);
  auto it = entry_.find({i, j});
  if (i < 0 || j < 0 || it == entry_.end()) throw DomainError("root_vector: not a root " + to_string(gamma));
  return it->second;
}

SparseVec MatrixSuperalgebra::coords(const Dense& M) const {
  Accumulator acc(dim());
  RatVec diag(N_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) {
      if (M(i, j) == 0) continue;
      if (i == j) {
        diag[i] = M(i, i);
        continue;
      }
      acc.add(entry_.at({i, j}), M(i, j));
    }
  if (std::any_of(diag.begin(), diag.end(), [](const Rational& q) { return q != 0; })) {
    RatVec c;
    if (!solve(cartan_, diag, c)) throw DomainError("matrix is not supertraceless");
    for (std::size_t k = 0; k < c.size(); ++k) acc.add(h0_ + static_cast<int>(k), c[k]);
  }
  return acc.take();
}

Dense MatrixSuperalgebra::to_matrix(const SparseVec& v) const {
  Dense d(N_, N_);
  for (const auto& [i, c] : v.entries()) d = d + c * mats_[i];
  return d;
}

SuperalgebraPtr build_superalgebra(const AlgebraId& id) { return std::make_shared<const MatrixSuperalgebra>(id); }

ActingAlgebra::ActingAlgebra(std::vector<Component> comps) : comps_(std::move(comps)) {
  if (comps_.empty()) throw DomainError("acting algebra needs at least one component");
  for (std::size_t a = 0; a < comps_.size(); ++a)
    for (std::size_t b = a + 1; b < comps_.size(); ++b)
      if (comps_[a].point == comps_[b].point) throw DomainError("acting algebra components must sit at distinct points");
  int off = 0;
  for (std::size_t k = 0; k < comps_.size(); ++k) {
    if (comps_[k].order < 1) throw DomainError("component order must be positive");
    algs_.emplace_back(comps_[k].point.r(), comps_[k].order);
    offset_.push_back(off);
    for (int i = 0; i < algs_.back().dim(); ++i) comp_of_.push_back(static_cast<int>(k));
    off += algs_.back().dim();
  }
}

int ActingAlgebra::index(int k, const Exponent& e) const {
  int i = algs_[k].index(e);
  return i < 0 ? -1 : offset_[k] + i;
}

int ActingAlgebra::mul(int a, int b) const {
  int ka = comp_of_[a];
  if (ka != comp_of_[b]) return -1;
  int p = algs_[ka].mul(a - offset_[ka], b - offset_[ka]);
  return p < 0 ? -1 : offset_[ka] + p;
}

std::vector<int> ActingAlgebra::generators() const {
  std::vector<int> out;
  for (int b = 0; b < dim(); ++b)
    if (degree(monomial(b)) <= 1) out.push_back(b);
  return out;
}

int ActingAlgebra::find(const Point& p) const {
  for (std::size_t k = 0; k < comps_.size(); ++k)
    if (comps_[k].point == p) return static_cast<int>(k);
  return -1;
}

ExplicitModule::ExplicitModule(SuperalgebraPtr g, ActingAlgebra B, Scope scope, std::vector<char> parity,
                               std::vector<Weight> weights)
    : g_(std::move(g)), B_(std::move(B)), scope_(scope), parity_(std::move(parity)), weights_(std::move(weights)) {
  if (parity_.size() != weights_.size()) throw InternalError("module parity and weight vectors differ in length");
}

void ExplicitModule::allocate_action() {
  action_.assign(static_cast<std::size_t>(g_->dim()) * B_.dim(), SparseMatrix(dim(), dim()));
}

const SparseMatrix& ExplicitModule::act(int gi, int b) const {
  if (!has_action()) throw SizeCapError("module was built without its action (dimension above the cap)");
  if (!acts(gi)) throw PreconditionError("element does not act on a g0[B]-module: " + g_->element(gi).label);
  return action_[static_cast<std::size_t>(gi) * B_.dim() + b];
}

SparseMatrix ExplicitModule::act(const SparseVec& u, int b) const {
  SparseMatrix r(dim(), dim());
  for (const auto& [gi, c] : u.entries()) {
    const auto& m = act(gi, b);
    for (int j = 0; j < dim(); ++j) r.col[j].axpy(c, m.col[j]);
  }
  return r;
}

void ExplicitModule::set_action(int gi, int b, SparseMatrix m) {
  if (!has_action()) allocate_action();
  if (m.rows != dim() || m.cols != dim()) throw InternalError("action matrix has the wrong shape");
  action_[static_cast<std::size_t>(gi) * B_.dim() + b] = std::move(m);
}

FormalCharacter ExplicitModule::character(bool super) const {
  FormalCharacter ch;
  for (int i = 0; i < dim(); ++i) ch.add(weights_[i], (super && odd(i)) ? -1 : 1);
  return ch;
}

int max_module_dim() {
  if (const char* s = std::getenv("SUPERKAC_MAX_DIM")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 512;
}

int max_cochain_dim() { return 200000; }

}  // namespace superkac
