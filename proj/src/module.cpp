#include <bit>
#include <cstdint>
#include <deque>

#include "superkac/errors.hpp"
#include "superkac/realize.hpp"

namespace superkac {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }
int below(Mask m, int i) { return std::popcount(m & (bit(i) - 1)); }
Rational sign(int k) { return (k % 2) ? Rational(-1) : Rational(1); }

std::vector<std::vector<int>> subsets(int k, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == deg) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < k; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Derivation action of a k×k matrix on Λ^deg C^k.
SparseMatrix wedge_action(int k, int deg, const Dense& M) {
  auto subs = subsets(k, deg);
  std::map<std::vector<int>, int> pos;
  for (std::size_t i = 0; i < subs.size(); ++i) pos[subs[i]] = static_cast<int>(i);
  const int D = static_cast<int>(subs.size());
  SparseMatrix out(D, D);
  Accumulator acc(D);
  for (int s = 0; s < D; ++s) {
    const auto& S = subs[s];
    for (int a = 0; a < deg; ++a) {
      const int qv = S[a];
      for (int p = 0; p < k; ++p) {
        if (M(p, qv) == 0) continue;
        if (p == qv) {
          acc.add(s, M(p, qv));
          continue;
        }
        if (std::find(S.begin(), S.end(), p) != S.end()) continue;
        std::vector<int> T = S;
        T[a] = p;
        int between = 0;
        for (int x : S)
          if (x != qv && ((x > std::min(p, qv)) && (x < std::max(p, qv)))) ++between;
        std::sort(T.begin(), T.end());
        acc.add(pos.at(T), sign(between) * M(p, qv));
      }
    }
    out.col[s] = acc.take();
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& A, const SparseMatrix& Bm) {
  SparseMatrix out(A.rows * Bm.rows, A.cols * Bm.cols);
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < Bm.cols; ++j) {
      SparseVec v;
      for (const auto& [r1, x] : A.col[i].entries())
        for (const auto& [r2, y] : Bm.col[j].entries()) v.push(r1 * Bm.rows + r2, x * y);
      out.col[i * Bm.cols + j] = std::move(v);
    }
  return out;
}

// Smallest invariant subspace containing the seeds under the given operators.
Echelon span_closure(int dim, const std::vector<const SparseMatrix*>& ops, const std::vector<SparseVec>& seeds,
                     std::vector<SparseVec>* generated = nullptr) {
  Echelon e(dim);
  std::deque<SparseVec> todo;
  auto push = [&](const SparseVec& v) {
    if (v.empty()) return;
    SparseVec r = e.insert(v);
    if (r.empty()) return;
    if (generated) generated->push_back(v);
    todo.push_back(v);
  };
  for (const auto& s : seeds) push(s);
  while (!todo.empty()) {
    SparseVec v = std::move(todo.front());
    todo.pop_front();
    for (const auto* op : ops) push(op->apply(v));
  }
  return e;
}

}  // namespace

G0Irrep g0prime_irrep(const MatrixSuperalgebra& g, const G0IrrepLabel& label) {
  const AlgebraId& id = g.id();
  if (!is_dominant(label, id)) throw DomainError("V-label is not dominant integral for g0'");
  const auto g0p = g0prime(id);
  const int G = g.dim();

  // Running tensor product over the simple ideals.
  int Dcur = 1;
  std::vector<SparseMatrix> cur(G, SparseMatrix(1, 1));
  for (std::size_t q = 0; q < g0p.ideal_start.size(); ++q) {
    const int start = g0p.ideal_start[q], size = g0p.ideal_size[q];
    const auto& first = g0p.simple_roots[start];
    int lo = 0;
    while (first.coords[lo] != 1) ++lo;
    const int k = size + 1;
    auto in_block = [&](int i) { return i >= lo && i < lo + k; };
    std::vector<int> members, lowering;
    for (int gi : g.g0()) {
      const auto& e = g.element(gi);
      if (e.kind == ElementKind::H && e.cartan >= start && e.cartan < start + size) members.push_back(gi);
      if (e.kind == ElementKind::X || e.kind == ElementKind::Y) {
        int a = -1, b = -1;
        for (int c = 0; c < g.size(); ++c)
          if (e.root.coords[c] != 0) (a < 0 ? a : b) = c;
        if (in_block(a) && in_block(b)) {
          members.push_back(gi);
          if (e.kind == ElementKind::Y) lowering.push_back(gi);
        }
      }
    }
    std::vector<int> degs;
    for (int i = 0; i < size; ++i)
      for (long c = 0; c < to_long(label.hw.hprime[start + i]); ++c) degs.push_back(i + 1);

    // Ambient representation ⊗ Λ^{deg} C^k.
    std::map<int, SparseMatrix> amb;
    int Damb = 1;
    for (int gi : members) amb[gi] = SparseMatrix(1, 1);
    for (int deg : degs) {
      int Df = 0;
      for (int gi : members) {
        Dense blk(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) blk(i, j) = g.matrix(gi)(lo + i, lo + j);
        SparseMatrix w = wedge_action(k, deg, blk);
        Df = w.rows;
        amb[gi] = kron(amb[gi], SparseMatrix::identity(Df)) + kron(SparseMatrix::identity(Damb), w);
      }
      Damb *= Df;
    }
    std::vector<const SparseMatrix*> ops;
    for (int gi : lowering) ops.push_back(&amb[gi]);
    std::vector<SparseVec> basis;
    span_closure(Damb, ops, {SparseVec::unit(0)}, &basis);
    SpanCoordinates coords(basis, Damb);
    const int Dq = static_cast<int>(basis.size());
    std::map<int, SparseMatrix> local;
    for (int gi : members) {
      SparseMatrix r(Dq, Dq);
      for (int j = 0; j < Dq; ++j) r.col[j] = coords.of(amb[gi].apply(basis[j]));
      local[gi] = std::move(r);
    }
    // Kronecker in: existing factor ⊗ this ideal.
    std::vector<SparseMatrix> next(G);
    for (int gi = 0; gi < G; ++gi) {
      auto it = local.find(gi);
      if (it != local.end())
        next[gi] = kron(SparseMatrix::identity(Dcur), it->second);
      else
        next[gi] = kron(cur[gi], SparseMatrix::identity(Dq));
    }
    cur = std::move(next);
    Dcur *= Dq;
  }

  G0Irrep out;
  out.rho.assign(G, SparseMatrix(Dcur, Dcur));
  for (int gi : g.g0())
    if (g.element(gi).kind != ElementKind::Z) out.rho[gi] = cur[gi];
  const int k = static_cast<int>(g0p.simple_roots.size());
  for (int i = 0; i < Dcur; ++i) {
    Weight w;
    w.z = label.hw.z;
    for (int c = 0; c < k; ++c) {
      const auto& col = out.rho[g.h(c)].col[i];
      if (col.size() > 1 || (col.size() == 1 && col.entries()[0].first != i))
        throw InternalError("g0' irrep basis is not a weight basis");
      w.hprime.push_back(col.at(i));
    }
    out.weights.push_back(w);
  }
  if (!(out.weights[0] == label.hw)) throw InternalError("g0' irrep has the wrong highest weight");
  return out;
}

namespace {

class KacBuilder {
 public:
  KacBuilder(const MatrixSuperalgebra& g, const QuotientAlgebra& Q, const G0Irrep& V, const ZFunctional& theta)
      : g_(g), Q_(Q), V_(V), q_(Q.dim()), dV_(V.dim()) {
    for (int j = 0; j < q_; ++j) {
      const Exponent& e = Q.ambient().monomial(Q.basis_monomial(j));
      thetaQ_.push_back(theta.value(e));
      if (degree(e) == 0) unit_ = j;
    }
  }

  using Terms = std::vector<std::pair<long, Rational>>;

  // (u ⊗ c)·(y-wedge(mask) ⊗ v_l) for u ∈ g0 and c ∈ A/I.
  void g0_act(int u, const SparseVec& c, Mask mask, int l, const Rational& f, Terms& out) const {
    int pos = 0;
    for (int gi = 0; gi < 64 && (mask >> gi); ++gi) {
      if (!(mask & bit(gi))) continue;
      const int p = gi / q_, j = gi % q_;
      const SparseVec& br = g_.bracket(u, g_.gm1()[p]);
      if (!br.empty()) {
        SparseVec prod = Q_.mul(c, SparseVec::unit(j));
        const Mask rest = mask & ~bit(gi);
        for (const auto& [w, cw] : br.entries()) {
          const int q2 = g_.gm1_pos(w);
          for (const auto& [j2, cj] : prod.entries()) {
            const int ng = q2 * q_ + j2;
            if (rest & bit(ng)) continue;
            out.emplace_back(index(rest | bit(ng), l), f * sign(pos + below(rest, ng)) * cw * cj);
          }
        }
      }
      ++pos;
    }
    if (u == g_.z()) {
      Rational val = 0;
      for (const auto& [j, x] : c.entries()) val += x * thetaQ_[j];
      if (val != 0) out.emplace_back(index(mask, l), f * val);
    } else {
      Rational ev = c.at(unit_);
      if (ev != 0)
        for (const auto& [l2, x] : V_.rho[u].col[l].entries()) out.emplace_back(index(mask, l2), f * ev * x);
    }
  }

  void x_act(int xi, const SparseVec& cb, Mask mask, int l, Terms& out) const {
    int pos = 0;
    Terms tmp;
    for (int gi = 0; gi < 64 && (mask >> gi); ++gi) {
      if (!(mask & bit(gi))) continue;
      const int p = gi / q_, j = gi % q_;
      const SparseVec& w = g_.bracket(xi, g_.gm1()[p]);
      SparseVec cprod = Q_.mul(cb, SparseVec::unit(j));
      const Mask prefix = mask & (bit(gi) - 1);
      const Mask suffix = mask & ~(bit(gi + 1) - 1);
      tmp.clear();
      for (const auto& [u, cu] : w.entries()) g0_act(u, cprod, suffix, l, cu * sign(pos), tmp);
      for (const auto& [idx, val] : tmp) {
        const Mask m2 = static_cast<Mask>(idx / dV_);
        if (m2 & prefix) continue;
        int inv = 0;
        for (int a = 0; a < 64 && (prefix >> a); ++a)
          if (prefix & bit(a)) inv += below(m2, a);
        out.emplace_back(index(prefix | m2, static_cast<int>(idx % dV_)), sign(inv) * val);
      }
      ++pos;
    }
  }

  void y_act(int p, const SparseVec& cb, Mask mask, int l, Terms& out) const {
    for (const auto& [j, cj] : cb.entries()) {
      const int ng = p * q_ + j;
      if (mask & bit(ng)) continue;
      out.emplace_back(index(mask | bit(ng), l), sign(below(mask, ng)) * cj);
    }
  }

  long index(Mask m, int l) const { return static_cast<long>(m) * dV_ + l; }

 private:
  const MatrixSuperalgebra& g_;
  const QuotientAlgebra& Q_;
  const G0Irrep& V_;
  int q_;
  int dV_;
  std::vector<Rational> thetaQ_;
  int unit_ = 0;
};

SparseVec collect(Accumulator& acc, const KacBuilder::Terms& t) {
  for (const auto& [i, x] : t) acc.add(static_cast<int>(i), x);
  return acc.take();
}

}  // namespace

ExplicitModule build_kac_like(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Ideal& I,
                              const ZFunctional& theta, const G0IrrepLabel& vlabel, bool carrier_only_above_cap) {
  const AlgebraId& id = g->id();
  if (component < 0 || component >= B.component_count()) throw PreconditionError("build_kac_like: bad component");
  const TruncatedAlgebra& alg = B.algebra(component);
  const TruncatedAlgebra& ialg = I.algebra();
  if (ialg.r() != alg.r() || theta.r() != alg.r()) throw DomainError("build_kac_like: variable counts differ");
  for (int i = 0; i < ialg.dim(); ++i)
    if (degree(ialg.monomial(i)) >= alg.order() && !I.contains(SparseVec::unit(i)))
      throw DomainError("build_kac_like: acting algebra order is too small for A/I");
  if (!kills_ideal(theta, I)) throw DomainError("not in K_Θ: Θ(z ⊗ I) ≠ 0");
  G0IrrepLabel lab = vlabel;
  lab.hw.z = theta.at_one();
  if (!is_dominant(lab, id)) throw DomainError("V-label is not dominant integral for g0'");

  QuotientAlgebra Q(I);
  const int P = static_cast<int>(g->gm1().size());
  const int q = Q.dim();
  const int G = P * q;
  if (G > 30) throw SizeCapError("instance too large: exterior algebra on " + std::to_string(G) + " generators");
  G0Irrep V = g0prime_irrep(*g, lab);
  const long dV = V.dim();
  const long total = (1L << G) * dV;
  const bool full = total <= max_module_dim();
  if (!full && (!carrier_only_above_cap || total > (1L << 24)))
    throw SizeCapError("instance too large: module dimension " + std::to_string(total));

  std::vector<Weight> yw;
  for (int p = 0; p < P; ++p) yw.push_back(g->element(g->gm1()[p]).weight);
  std::vector<char> parity(total);
  std::vector<Weight> weights(total);
  for (Mask m = 0; m < (Mask{1} << G); ++m) {
    Weight base = zero_weight(id);
    for (int gi = 0; gi < G; ++gi)
      if (m & bit(gi)) base = base + yw[gi / q];
    for (long l = 0; l < dV; ++l) {
      parity[m * dV + l] = std::popcount(m) % 2;
      weights[m * dV + l] = base + V.weights[l];
    }
  }
  ExplicitModule mod(g, B, Scope::Full, std::move(parity), std::move(weights));
  mod.highest = 0;
  mod.kac = KacLikeData{theta, I, lab, component, G, static_cast<int>(dV)};
  if (!full) return mod;

  mod.allocate_action();
  KacBuilder kb(*g, Q, V, theta);
  const int D = static_cast<int>(total);
  Accumulator acc(D);
  KacBuilder::Terms t;
  for (int b = 0; b < B.dim(); ++b) {
    if (B.component_of(b) != component) continue;
    SparseVec cb = Q.project(B.monomial(b));
    for (int gi = 0; gi < g->dim(); ++gi) {
      SparseMatrix M(D, D);
      const int deg = g->element(gi).degree;
      for (int col = 0; col < D; ++col) {
        const Mask m = static_cast<Mask>(col / dV);
        const int l = static_cast<int>(col % dV);
        t.clear();
        if (deg == 0)
          kb.g0_act(gi, cb, m, l, 1, t);
        else if (deg > 0)
          kb.x_act(gi, cb, m, l, t);
        else
          kb.y_act(g->gm1_pos(gi), cb, m, l, t);
        M.col[col] = collect(acc, t);
      }
      mod.set_action(gi, b, std::move(M));
    }
  }
  return mod;
}

ExplicitModule evaluation_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Weight& hw) {
  const int r = B.algebra(component).r();
  TruncatedAlgebra one(r, 1);
  ZFunctional theta = constant_functional(r, hw.z);
  ExplicitModule K = build_kac_like(g, B, component, Ideal::zero(one), theta, G0IrrepLabel{hw});
  ExplicitModule L = irreducible_quotient(K);
  return L;
}

ExplicitModule trivial_module(const SuperalgebraPtr& g, const ActingAlgebra& B) {
  ExplicitModule m(g, B, Scope::Full, {0}, {zero_weight(g->id())});
  m.allocate_action();
  m.highest = 0;
  return m;
}

ExplicitModule adjoint_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component) {
  const int D = g->dim();
  std::vector<char> par;
  std::vector<Weight> w;
  for (int i = 0; i < D; ++i) {
    par.push_back(g->odd(i));
    w.push_back(g->element(i).weight);
  }
  ExplicitModule m(g, B, Scope::Full, par, w);
  m.allocate_action();
  const int u = B.unit(component);
  for (int gi = 0; gi < D; ++gi) {
    SparseMatrix M(D, D);
    for (int j = 0; j < D; ++j) M.col[j] = g->bracket(gi, j);
    m.set_action(gi, u, std::move(M));
  }
  const AlgebraId& id = g->id();
  if (id.m != id.n) {
    std::vector<int> c(id.m + id.n, 0);
    c.front() = 1;
    c.back() = -1;
    m.highest = g->x(make_root(c, id));
  }
  return m;
}

ExplicitModule g0_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const ZFunctional& theta,
                         const G0IrrepLabel& vlabel) {
  G0IrrepLabel lab = vlabel;
  lab.hw.z = theta.at_one();
  G0Irrep V = g0prime_irrep(*g, lab);
  ExplicitModule m(g, B, Scope::Even, std::vector<char>(V.dim(), 0), V.weights);
  m.allocate_action();
  m.highest = 0;
  for (int b = 0; b < B.dim(); ++b) {
    if (B.component_of(b) != component) continue;
    const Exponent& e = B.monomial(b);
    for (int gi : g->g0()) {
      if (gi == g->z()) {
        Rational t = theta.value(e);
        if (t != 0) m.set_action(gi, b, t * SparseMatrix::identity(V.dim()));
      } else if (degree(e) == 0) {
        m.set_action(gi, b, V.rho[gi]);
      }
    }
  }
  return m;
}

ExplicitModule gm1_ideal_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Ideal& Jin,
                                const ZFunctional& theta, const G0IrrepLabel& vlabel) {
  const TruncatedAlgebra& alg = B.algebra(component);
  Ideal J = Jin.algebra().order() < alg.order() ? Jin.lift(alg.order()) : Jin;
  if (!(J.algebra() == alg)) throw PreconditionError("gm1_ideal_module: ideal lives in a different truncation");
  G0IrrepLabel lab = vlabel;
  lab.hw.z = theta.at_one();
  G0Irrep V = g0prime_irrep(*g, lab);
  const int P = static_cast<int>(g->gm1().size());
  const int dJ = J.dim(), dV = V.dim();
  const int D = P * dJ * dV;
  if (D > max_module_dim()) throw SizeCapError("instance too large: g-1 ⊗ ideal module of dimension " + std::to_string(D));
  SpanCoordinates jc(J.basis(), alg.dim());
  std::vector<char> par(D, 1);
  std::vector<Weight> w(D);
  auto idx = [&](int p, int c, int l) { return (p * dJ + c) * dV + l; };
  for (int p = 0; p < P; ++p)
    for (int c = 0; c < dJ; ++c)
      for (int l = 0; l < dV; ++l) w[idx(p, c, l)] = g->element(g->gm1()[p]).weight + V.weights[l];
  ExplicitModule m(g, B, Scope::Even, par, w);
  m.allocate_action();
  Accumulator acc(D);
  for (int b = 0; b < B.dim(); ++b) {
    if (B.component_of(b) != component) continue;
    const int bl = b - B.offset(component);
    const Exponent& e = B.monomial(b);
    for (int u : g->g0()) {
      SparseMatrix M(D, D);
      for (int p = 0; p < P; ++p) {
        const SparseVec& br = g->bracket(u, g->gm1()[p]);
        for (int c = 0; c < dJ; ++c) {
          SparseVec bc = jc.of(alg.mul(SparseVec::unit(bl), J.basis()[c]));
          for (int l = 0; l < dV; ++l) {
            for (const auto& [wv, cw] : br.entries())
              for (const auto& [c2, x] : bc.entries()) acc.add(idx(g->gm1_pos(wv), c2, l), cw * x);
            if (u == g->z()) {
              acc.add(idx(p, c, l), theta.value(e));
            } else if (degree(e) == 0) {
              for (const auto& [l2, x] : V.rho[u].col[l].entries()) acc.add(idx(p, c, l2), x);
            }
            M.col[idx(p, c, l)] = acc.take();
          }
        }
      }
      m.set_action(u, b, std::move(M));
    }
  }
  return m;
}

namespace {

ActingAlgebra merged(const ActingAlgebra& a, const ActingAlgebra& b) {
  std::vector<Component> comps;
  for (int k = 0; k < a.component_count(); ++k) comps.push_back(a.component(k));
  for (int k = 0; k < b.component_count(); ++k) {
    const auto& c = b.component(k);
    bool found = false;
    for (auto& x : comps)
      if (x.point == c.point) {
        x.order = std::max(x.order, c.order);
        found = true;
      }
    if (!found) comps.push_back(c);
  }
  std::sort(comps.begin(), comps.end(), [](const Component& x, const Component& y) { return x.point < y.point; });
  return ActingAlgebra(comps);
}

}  // namespace

ExplicitModule embed(const ExplicitModule& m, const ActingAlgebra& big) {
  const auto& B = m.acting();
  std::vector<int> target(B.component_count());
  for (int k = 0; k < B.component_count(); ++k) {
    target[k] = big.find(B.component(k).point);
    if (target[k] < 0) throw PreconditionError("embed: target algebra misses a component point");
  }
  ExplicitModule out(m.algebra_ptr(), big, m.scope(), m.parity(), m.weights());
  out.highest = m.highest;
  out.kac = m.kac;
  if (out.kac) out.kac->component = target[out.kac->component];
  if (!m.has_action()) return out;
  out.allocate_action();
  for (int k = 0; k < B.component_count(); ++k)
    for (int b = B.offset(k); b < B.offset(k) + B.algebra(k).dim(); ++b) {
      int nb = big.index(target[k], B.monomial(b));
      if (nb < 0) {
        // A truncated monomial acting nontrivially cannot be moved to a smaller quotient.
        for (int gi = 0; gi < m.algebra().dim(); ++gi)
          if (m.acts(gi) && !m.act(gi, b).is_zero()) throw PreconditionError("embed: target order too small");
        continue;
      }
      for (int gi = 0; gi < m.algebra().dim(); ++gi)
        if (m.acts(gi)) out.set_action(gi, nb, m.act(gi, b));
    }
  return out;
}

ExplicitModule tensor(const ExplicitModule& a0, const ExplicitModule& b0) {
  if (&a0.algebra() != &b0.algebra() && !(a0.algebra().id() == b0.algebra().id()))
    throw PreconditionError("tensor: modules over different superalgebras");
  if (!(a0.acting() == b0.acting())) {
    ActingAlgebra big = merged(a0.acting(), b0.acting());
    return tensor(embed(a0, big), embed(b0, big));
  }
  const auto& a = a0;
  const auto& b = b0;
  const int da = a.dim(), db = b.dim();
  const long D = static_cast<long>(da) * db;
  Scope scope = (a.scope() == Scope::Full && b.scope() == Scope::Full) ? Scope::Full : Scope::Even;
  std::vector<char> par(D);
  std::vector<Weight> w(D);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      par[i * db + j] = a.odd(i) != b.odd(j);
      w[i * db + j] = a.weight(i) + b.weight(j);
    }
  const bool build = a.has_action() && b.has_action() && D <= max_module_dim();
  if (!build && D > (1L << 24)) throw SizeCapError("instance too large: tensor product dimension " + std::to_string(D));
  ExplicitModule out(a.algebra_ptr(), a.acting(), scope, std::move(par), std::move(w));
  if (a.highest && b.highest) out.highest = *a.highest * db + *b.highest;
  if (!build) return out;
  out.allocate_action();
  const int Di = static_cast<int>(D);
  for (int gi = 0; gi < a.algebra().dim(); ++gi) {
    if (!out.acts(gi)) continue;
    const bool uo = a.algebra().odd(gi);
    for (int bb = 0; bb < a.acting().dim(); ++bb) {
      const auto& A = a.act(gi, bb);
      const auto& Bm = b.act(gi, bb);
      if (A.is_zero() && Bm.is_zero()) continue;
      SparseMatrix M(Di, Di);
      Accumulator acc(Di);
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
          for (const auto& [i2, x] : A.col[i].entries()) acc.add(i2 * db + j, x);
          const Rational s = (uo && a.odd(i)) ? Rational(-1) : Rational(1);
          for (const auto& [j2, x] : Bm.col[j].entries()) acc.add(i * db + j2, s * x);
          M.col[i * db + j] = acc.take();
        }
      out.set_action(gi, bb, std::move(M));
    }
  }
  return out;
}

ExplicitModule dual_module(const ExplicitModule& m) {
  ExplicitModule out(m.algebra_ptr(), m.acting(), m.scope(), m.parity(), m.weights());
  out.highest = m.highest;
  if (!m.has_action()) return out;
  out.allocate_action();
  const auto& g = m.algebra();
  for (int gi = 0; gi < g.dim(); ++gi) {
    if (!m.acts(gi)) continue;
    for (int b = 0; b < m.acting().dim(); ++b) {
      const auto& src = m.act(g.tau(gi), b);
      if (!src.is_zero()) out.set_action(gi, b, src.transpose());
    }
  }
  return out;
}

namespace {

std::vector<const SparseMatrix*> operators(const ExplicitModule& m, std::vector<SparseMatrix>* storage = nullptr) {
  std::vector<const SparseMatrix*> ops;
  const auto& g = m.algebra();
  for (int gi = 0; gi < g.dim(); ++gi) {
    if (!m.acts(gi)) continue;
    for (int b = 0; b < m.acting().dim(); ++b) {
      const auto& M = m.act(gi, b);
      if (M.is_zero()) continue;
      if (storage)
        storage->push_back(M.transpose());
      else
        ops.push_back(&M);
    }
  }
  if (storage)
    for (const auto& M : *storage) ops.push_back(&M);
  return ops;
}

}  // namespace

Echelon closure(const ExplicitModule& m, const std::vector<SparseVec>& seeds) {
  return span_closure(m.dim(), operators(m), seeds);
}

Echelon maximal_submodule(const ExplicitModule& m) {
  if (!m.highest) throw PreconditionError("maximal_submodule: module has no distinguished highest-weight vector");
  std::vector<SparseMatrix> tr;
  tr.reserve(static_cast<std::size_t>(m.algebra().dim()) * m.acting().dim());
  auto ops = operators(m, &tr);
  Echelon S = span_closure(m.dim(), ops, {SparseVec::unit(*m.highest)});
  Echelon W(m.dim());
  for (const auto& v : S.nullspace()) W.insert(v);
  return W;
}

ExplicitModule irreducible_quotient(const ExplicitModule& m) {
  Echelon W = maximal_submodule(m);
  if (W.rank() == 0) return m;
  std::vector<char> is_pivot(m.dim(), 0);
  for (int p : W.pivots()) is_pivot[p] = 1;
  std::vector<int> keep, newpos(m.dim(), -1);
  for (int i = 0; i < m.dim(); ++i)
    if (!is_pivot[i]) {
      newpos[i] = static_cast<int>(keep.size());
      keep.push_back(i);
    }
  std::vector<char> par;
  std::vector<Weight> w;
  for (int i : keep) {
    par.push_back(m.parity()[i]);
    w.push_back(m.weight(i));
  }
  ExplicitModule out(m.algebra_ptr(), m.acting(), m.scope(), par, w);
  out.highest = newpos.at(*m.highest);
  if (*out.highest < 0) throw InternalError("highest-weight line fell into the maximal submodule");
  out.allocate_action();
  const int D = static_cast<int>(keep.size());
  for (int gi = 0; gi < m.algebra().dim(); ++gi) {
    if (!m.acts(gi)) continue;
    for (int b = 0; b < m.acting().dim(); ++b) {
      const auto& M = m.act(gi, b);
      if (M.is_zero()) continue;
      SparseMatrix R(D, D);
      for (int j = 0; j < D; ++j) {
        SparseVec v = W.reduce(M.col[keep[j]]);
        SparseVec c;
        for (const auto& [i, x] : v.entries()) c.push(newpos[i], x);
        R.col[j] = std::move(c);
      }
      out.set_action(gi, b, std::move(R));
    }
  }
  return out;
}

}  // namespace superkac
