#include <bit>
#include <cstdint>
#include <sstream>

#include "superkac/errors.hpp"
#include "superkac/realize.hpp"

namespace superkac {

namespace {

Rational max_abs(const SparseMatrix& M) {
  Rational best = 0;
  for (const auto& c : M.col)
    for (const auto& [i, x] : c.entries()) best = std::max(best, Rational(abs(x)));
  return best;
}

SparseMatrix zero_of(const ExplicitModule& m) { return SparseMatrix(m.dim(), m.dim()); }

// ρ(u ⊗ b) for a combination u of basis elements; b < 0 means the zero coefficient.
SparseMatrix op(const ExplicitModule& m, const SparseVec& u, int b) {
  if (b < 0) return zero_of(m);
  return m.act(u, b);
}

}  // namespace

SubmoduleReport submodule_search(const ExplicitModule& m) {
  if (!m.highest) throw PreconditionError("submodule_search: module has no distinguished highest-weight vector");
  SubmoduleReport rep;
  // Every nonzero submodule contains a nonzero vector killed by n+[B], so irreducibility means a single
  // singular line that generates the whole module.
  auto sing = singular_vectors(m, distinguished_borel(m.algebra().id()));
  Echelon W = maximal_submodule(m);
  rep.maximal_submodule_dim = W.rank();
  rep.is_irreducible = sing.size() == 1 && closure(m, sing).rank() == m.dim();
  if (rep.is_irreducible && W.rank() != 0) throw InternalError("submodule_search: irreducible module with a nonzero radical");
  if (m.kac && m.kac->theta.r() > 0) {
    const auto& kd = *m.kac;
    const auto& B = m.acting();
    const TruncatedAlgebra& ialg = kd.ideal.algebra();
    Ideal k = (kd.theta.is_zero() || kd.theta.kills_max())
                  ? Ideal::power_of_max(ialg, 1)
                  : annihilator_ideal(kd.theta, TruncatedAlgebra(ialg.r(), std::max(ialg.order(), kd.theta.n())));
    if (k.algebra().order() < ialg.order()) k = k.lift(ialg.order());
    Ideal I = kd.ideal.algebra().order() < k.algebra().order() ? kd.ideal.lift(k.algebra().order()) : kd.ideal;
    if (!k.contains(I)) throw InternalError("submodule_search: ideal not inside k_Θ");
    ExplicitModule small = build_kac_like(m.algebra_ptr(), B, kd.component, k, kd.theta, kd.vlabel);
    rep.omega_dim = omega_dimension(m, small);
    rep.z_part_dim = maximal_submodule(small).rank();
  }
  return rep;
}

int omega_dimension(const ExplicitModule& big, const ExplicitModule& small) {
  if (!big.kac || !small.kac) throw PreconditionError("omega_dimension: both modules must be Kac-like");
  const auto& kb = *big.kac;
  const auto& ks = *small.kac;
  if (kb.vdim != ks.vdim || !(kb.vlabel == ks.vlabel)) throw PreconditionError("omega_dimension: different g0-modules");
  QuotientAlgebra Qb(kb.ideal), Qs(ks.ideal);
  const int P = static_cast<int>(big.algebra().gm1().size());
  const int qb = Qb.dim(), qs = Qs.dim(), dV = kb.vdim;
  using Mask = std::uint64_t;
  auto bit = [](int i) { return Mask{1} << i; };
  // Image of each generator y_p ⊗ b_j of A/I in A/J.
  std::vector<SparseVec> img(static_cast<std::size_t>(P) * qb);
  for (int p = 0; p < P; ++p)
    for (int j = 0; j < qb; ++j) {
      SparseVec c = Qs.project(Qb.ambient().monomial(Qb.basis_monomial(j)));
      SparseVec v;
      for (const auto& [j2, x] : c.entries()) v.push(p * qs + j2, x);
      img[p * qb + j] = v;
    }
  const int D = big.dim(), Ds = small.dim();
  SparseMatrix psi(Ds, D);
  for (int col = 0; col < D; ++col) {
    const Mask m = static_cast<Mask>(col / dV);
    const int l = col % dV;
    std::map<Mask, Rational> cur{{0, 1}};
    for (int gi = kb.generators - 1; gi >= 0; --gi) {
      if (!(m & bit(gi))) continue;
      std::map<Mask, Rational> next;
      for (const auto& [mm, c] : cur)
        for (const auto& [ng, x] : img[gi].entries()) {
          if (mm & bit(ng)) continue;
          int s = std::popcount(mm & (bit(ng) - 1));
          next[mm | bit(ng)] += (s % 2 ? -1 : 1) * c * x;
        }
      cur.clear();
      for (auto& [mm, c] : next)
        if (c != 0) cur.emplace(mm, c);
    }
    SparseVec v;
    for (const auto& [mm, c] : cur) v.push(static_cast<int>(mm) * dV + l, c);
    psi.col[col] = std::move(v);
  }
  if (big.has_action() && small.has_action()) {
    const auto& g = big.algebra();
    for (int gi = 0; gi < g.dim(); ++gi)
      for (int b = 0; b < big.acting().dim(); ++b)
        if (!(psi * big.act(gi, b) == small.act(gi, b) * psi))
          throw InternalError("omega_dimension: projection is not a module map");
  }
  Echelon e(D);
  for (const auto& r : psi.transpose().col) e.insert(r);
  return D - e.rank();
}

Certificate irreducibility_certificate(const ExplicitModule& m, const StarPartner& partner) {
  if (!m.kac) throw PreconditionError("irreducibility_certificate: module is not Kac-like");
  if (!m.has_action()) throw SizeCapError("irreducibility_certificate: module built without action");
  const auto& kd = *m.kac;
  const auto& g = m.algebra();
  const auto& B = m.acting();
  QuotientAlgebra Q(kd.ideal);
  const TruncatedAlgebra& amb = Q.ambient();
  const int r = amb.r();
  if (static_cast<int>(partner.nhat.size()) != r) throw PreconditionError("certificate: n̂ has the wrong length");

  // A basis of A/I made of monomials below n̂ when possible.
  std::vector<Exponent> mons;
  Certificate cert;
  {
    Echelon e(Q.dim());
    for (int i = 0; i < amb.dim(); ++i) {
      const Exponent& x = amb.monomial(i);
      if (!dominated(x, partner.nhat)) continue;
      if (!e.insert(Q.project(x)).empty()) mons.push_back(x);
    }
    if (static_cast<int>(mons.size()) != Q.dim()) {
      cert.admissible = false;
      mons.clear();
      for (int j = 0; j < Q.dim(); ++j) mons.push_back(amb.monomial(Q.basis_monomial(j)));
    }
  }
  const int comp = kd.component;
  auto b_index = [&](const Exponent& e) {
    int b = B.index(comp, e);
    if (b < 0) throw PreconditionError("certificate: acting algebra order too small for n̂");
    return b;
  };
  std::vector<std::pair<int, int>> y_ops, x_ops;  // (g index, B index) in product order
  for (int p : g.gm1())
    for (const auto& e : mons) {
      y_ops.emplace_back(p, b_index(e));
      Exponent s(r);
      for (int i = 0; i < r; ++i) s[i] = std::max(0, partner.nhat[i] - e[i]);
      x_ops.emplace_back(g.x(g.element(p).root), b_index(s));
    }
  SparseVec v = SparseVec::unit(*m.highest);
  for (auto it = y_ops.rbegin(); it != y_ops.rend(); ++it) v = m.act(it->first, it->second).apply(v);
  if (v.empty()) throw InternalError("certificate: top Grassmann vector vanished");
  // p^⋆ = y_D^⋆ ⋯ y_1^⋆, so y_1^⋆ acts first.
  for (const auto& [gi, b] : x_ops) v = m.act(gi, b).apply(v);
  if (v.empty()) {
    cert.scalar = 0;
    return cert;
  }
  if (v.size() != 1 || v.entries()[0].first != *m.highest)
    throw InternalError("certificate: result is not a multiple of the highest-weight vector");
  cert.scalar = v.entries()[0].second;
  return cert;
}

CommRelResidual verify_comm_rels(const ExplicitModule& m, int k) {
  if (k < 1 || k > 4) throw PreconditionError("verify_comm_rels: k must be in 1..4");
  const auto& g = m.algebra();
  const auto& B = m.acting();
  const AlgebraId& id = g.id();
  CommRelResidual res;
  res.max_abs = 0;
  const int nb = B.dim();
  auto record = [&](const SparseMatrix& lhs, const SparseMatrix& rhs) {
    res.max_abs = std::max(res.max_abs, max_abs(lhs - rhs));
    ++res.checked;
  };
  auto prod = [&](const std::vector<SparseMatrix>& fs) {
    SparseMatrix r = SparseMatrix::identity(m.dim());
    for (const auto& f : fs) r = r * f;
    return r;
  };
  const auto odd = positive_odd_roots(id);
  const auto even = positive_even_roots(id);
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<int> a(kk + 1, 0);
    long total = 1;
    for (int i = 0; i <= kk; ++i) total *= nb;
    for (long t = 0; t < total; ++t) {
      long rest = t;
      for (int i = 0; i <= kk; ++i) {
        a[i] = static_cast<int>(rest % nb);
        rest /= nb;
      }
      // (2) for all odd α, β; (1) additionally when α = β, with h_α moved to the right end.
      for (const auto& al : odd)
        for (const auto& be : odd) {
          const int xa = g.x(al), yb = g.y(be);
          std::vector<SparseMatrix> ys;
          for (int i = 1; i <= kk; ++i) ys.push_back(m.act(yb, a[i]));
          SparseMatrix lhs = m.act(xa, a[0]) * prod(ys);
          SparseMatrix lead = (kk % 2 ? Rational(-1) : Rational(1)) * (prod(ys) * m.act(xa, a[0]));
          const SparseVec& br = g.bracket(xa, yb);
          for (int form = 0; form < (al == be ? 2 : 1); ++form) {
            SparseMatrix rhs = lead;
            for (int j = 1; j <= kk; ++j) {
              std::vector<SparseMatrix> left(ys.begin(), ys.begin() + (j - 1));
              std::vector<SparseMatrix> right(ys.begin() + j, ys.end());
              SparseMatrix mid = op(m, br, B.mul(a[0], a[j]));
              SparseMatrix term = form == 1 ? prod(left) * prod(right) * mid : prod(left) * mid * prod(right);
              rhs = rhs + ((j - 1) % 2 ? Rational(-1) : Rational(1)) * term;
            }
            record(lhs, rhs);
          }
        }
      // (3): even x_γ against a string of y_β.
      for (const auto& ga : even)
        for (const auto& be : odd) {
          const int xg = g.x(ga), yb = g.y(be);
          std::vector<SparseMatrix> ys;
          for (int i = 1; i <= kk; ++i) ys.push_back(m.act(yb, a[i]));
          SparseMatrix lhs = m.act(xg, a[0]) * prod(ys);
          SparseMatrix rhs = prod(ys) * m.act(xg, a[0]);
          const SparseVec& br = g.bracket(xg, yb);
          for (int j = 1; j <= kk; ++j) {
            std::vector<SparseMatrix> left(ys.begin(), ys.begin() + (j - 1));
            std::vector<SparseMatrix> right(ys.begin() + j, ys.end());
            SparseMatrix term = prod(left) * prod(right) * op(m, br, B.mul(a[0], a[j]));
            rhs = rhs + ((kk - j) % 2 ? Rational(-1) : Rational(1)) * term;
          }
          record(lhs, rhs);
        }
    }
  }
  return res;
}

Rational bracket_residual(const ExplicitModule& m) {
  const auto& g = m.algebra();
  const auto& B = m.acting();
  Rational worst = 0;
  for (int u = 0; u < g.dim(); ++u) {
    if (!m.acts(u)) continue;
    for (int v = u; v < g.dim(); ++v) {
      if (!m.acts(v)) continue;
      const Rational s = (g.odd(u) && g.odd(v)) ? Rational(-1) : Rational(1);
      for (int a = 0; a < B.dim(); ++a)
        for (int b = 0; b < B.dim(); ++b) {
          const auto& Ra = m.act(u, a);
          const auto& Rb = m.act(v, b);
          SparseMatrix lhs = op(m, g.bracket(u, v), B.mul(a, b));
          SparseMatrix rhs = Ra * Rb - s * (Rb * Ra);
          worst = std::max(worst, max_abs(lhs - rhs));
        }
    }
  }
  return worst;
}

std::vector<SparseVec> singular_vectors(const ExplicitModule& m, const BorelChoice& borel) {
  const auto& g = m.algebra();
  const auto& B = m.acting();
  const AlgebraId& id = g.id();
  if (!is_valid_base(borel, id)) throw PreconditionError("singular_vectors: invalid base");
  std::vector<int> raising;
  for (const auto& r : positive_roots(borel, id)) raising.push_back(g.root_vector(r));
  std::vector<SparseMatrix> tr;
  for (int gi : raising)
    for (int b = 0; b < B.dim(); ++b) {
      const auto& M = m.act(gi, b);
      if (!M.is_zero()) tr.push_back(M.transpose());
    }
  std::map<Weight, std::vector<int>> classes;
  for (int i = 0; i < m.dim(); ++i) classes[m.weight(i)].push_back(i);
  std::vector<SparseVec> found;
  for (const auto& [w, idx] : classes) {
    std::map<int, int> local;
    for (std::size_t t = 0; t < idx.size(); ++t) local[idx[t]] = static_cast<int>(t);
    Echelon e(static_cast<int>(idx.size()));
    // Rows of ρ(X) restricted to the columns of this weight space: columns of the transpose.
    for (const auto& T : tr)
      for (int rrow = 0; rrow < T.cols; ++rrow) {
        SparseVec row;
        for (const auto& [c, x] : T.col[rrow].entries()) {
          auto it = local.find(c);
          if (it != local.end()) row.push(it->second, x);
        }
        if (!row.empty()) e.insert(row);
      }
    for (const auto& v : e.nullspace()) {
      SparseVec full;
      for (const auto& [t, x] : v.entries()) full.push(idx[t], x);
      found.push_back(full);
    }
  }
  return found;
}

HighestWeightResult highest_weight_vector(const ExplicitModule& m, const BorelChoice& borel) {
  const auto& g = m.algebra();
  const auto& B = m.acting();
  const AlgebraId& id = g.id();
  std::vector<SparseVec> found = singular_vectors(m, borel);
  if (found.size() != 1)
    throw DomainError("highest_weight_vector: expected one singular line, found " + std::to_string(found.size()));
  HighestWeightResult out;
  out.vector = found[0];
  const int lead = out.vector.entries()[0].first;
  const Rational lv = out.vector.entries()[0].second;
  const int k = static_cast<int>(g0prime(id).simple_roots.size());
  auto eigen = [&](int gi, int b) {
    SparseVec w = m.act(gi, b).apply(out.vector);
    Rational c = w.at(lead) / lv;
    SparseVec diff = w;
    diff.axpy(-c, out.vector);
    if (!diff.empty()) throw InternalError("highest_weight_vector: singular vector is not an h[B]-eigenvector");
    return c;
  };
  for (int b = 0; b < B.dim(); ++b) {
    Weight w;
    for (int c = 0; c < k; ++c) w.hprime.push_back(eigen(g.h(c), b));
    w.z = eigen(g.z(), b);
    out.psi.push_back(w);
  }
  return out;
}

namespace {

// Variables c_{f,e} of maps M1 -> M2 shifting weights by `shift`, grouped by source e.
struct BlockIndex {
  std::vector<int> offset;  // per source e
  std::vector<std::pair<int, int>> slot;  // variable -> (f, e)
  int size() const { return static_cast<int>(slot.size()); }
};

BlockIndex block_index(const ExplicitModule& a, const std::map<Weight, std::vector<int>>& bclasses, const Weight& shift) {
  BlockIndex bi;
  for (int e = 0; e < a.dim(); ++e) {
    bi.offset.push_back(bi.size());
    auto it = bclasses.find(a.weight(e) + shift);
    if (it == bclasses.end()) continue;
    for (int f : it->second) bi.slot.emplace_back(f, e);
  }
  return bi;
}

}  // namespace

HomResult hom_space(const ExplicitModule& a, const ExplicitModule& b, Over over) {
  if (!(a.acting() == b.acting())) throw PreconditionError("hom_space: modules over different acting algebras");
  const auto& g = a.algebra();
  const auto& B = a.acting();
  std::map<Weight, std::vector<int>> bclasses;
  for (int f = 0; f < b.dim(); ++f) bclasses[b.weight(f)].push_back(f);
  std::vector<int> pos(b.dim());
  for (const auto& [w, v] : bclasses)
    for (std::size_t t = 0; t < v.size(); ++t) pos[v[t]] = static_cast<int>(t);
  BlockIndex bi = block_index(a, bclasses, zero_weight(g.id()));
  const int nvar = bi.size();
  HomResult res;
  if (nvar == 0) return res;
  Echelon e(nvar);
  Accumulator acc(nvar);
  for (int gi = 0; gi < g.dim(); ++gi) {
    if (over == Over::G0A && g.element(gi).degree != 0) continue;
    if (!a.acts(gi) || !b.acts(gi)) throw PreconditionError("hom_space: element does not act on both modules");
    for (int bb = 0; bb < B.dim(); ++bb) {
      const auto& R1 = a.act(gi, bb);
      const auto& R2 = b.act(gi, bb);
      if (R1.is_zero() && R2.is_zero()) continue;
      SparseMatrix R2t = R2.transpose();
      const Weight& sh = g.element(gi).weight;
      for (int src = 0; src < a.dim(); ++src) {
        auto it = bclasses.find(a.weight(src) + sh);
        if (it == bclasses.end()) continue;
        for (int f : it->second) {
          // (φ ρ1(u))_{f,src} - (ρ2(u) φ)_{f,src}
          for (const auto& [e2, x] : R1.col[src].entries())
            if (b.weight(f) == a.weight(e2)) acc.add(bi.offset[e2] + pos[f], x);
          for (const auto& [f2, x] : R2t.col[f].entries())
            if (b.weight(f2) == a.weight(src)) acc.add(bi.offset[src] + pos[f2], -x);
          SparseVec row = acc.take();
          if (!row.empty()) e.insert(row);
        }
      }
    }
  }
  auto ns = e.nullspace();
  res.dim = static_cast<int>(ns.size());
  for (const auto& v : ns) {
    SparseMatrix M(b.dim(), a.dim());
    std::vector<std::vector<std::pair<int, Rational>>> cols(a.dim());
    for (const auto& [vi, x] : v.entries()) cols[bi.slot[vi].second].emplace_back(bi.slot[vi].first, x);
    for (int src = 0; src < a.dim(); ++src) {
      std::sort(cols[src].begin(), cols[src].end(), [](const auto& p, const auto& q) { return p.first < q.first; });
      for (auto& [f, x] : cols[src]) M.col[src].push(f, x);
    }
    res.basis.push_back(std::move(M));
  }
  return res;
}

namespace {

constexpr std::uint64_t kPrimeA = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::uint64_t kPrimeB = 4611686018427387847ULL;  // 2^62 - 57

// Greedy generating set of g[B] as a Lie superalgebra, as indices u * dim B + b.
std::vector<int> lie_generators(const MatrixSuperalgebra& g, const ActingAlgebra& B) {
  const int G = g.dim(), nb = B.dim(), n = G * nb;
  auto bracket = [&](int Ui, const SparseVec& x) {
    Accumulator acc(n);
    const int u = Ui / nb, ba = Ui % nb;
    for (const auto& [Vi, c] : x.entries()) {
      const int prod = B.mul(ba, Vi % nb);
      if (prod < 0) continue;
      for (const auto& [w, cw] : g.bracket(u, Vi / nb).entries()) acc.add(w * nb + prod, c * cw);
    }
    return acc.take();
  };
  auto closure = [&](const std::vector<int>& S) {
    Echelon W(n);
    std::vector<SparseVec> queue;
    for (int s : S) {
      SparseVec r = W.insert(SparseVec::unit(s));
      if (!r.empty()) queue.push_back(r);
    }
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (int s : S) {
        SparseVec r = W.insert(bracket(s, queue[k]));
        if (!r.empty()) queue.push_back(r);
      }
    return W;
  };
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto rank_key = [&](int Ui) {
    const int u = Ui / nb;
    const int kind = g.odd(u) ? 0 : (g.element(u).weight.is_zero() ? 2 : 1);
    return std::pair{degree(B.monomial(Ui % nb)), kind};
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return rank_key(x) < rank_key(y); });
  std::vector<int> S;
  Echelon W(n);
  for (int Ui : order) {
    if (W.contains(SparseVec::unit(Ui))) continue;
    S.push_back(Ui);
    W = closure(S);
    if (W.rank() == n) break;
  }
  return S;
}

}  // namespace

int ext1_koszul(const ExplicitModule& a, const ExplicitModule& b) {
  if (!(a.acting() == b.acting())) throw PreconditionError("ext1_koszul: modules over different acting algebras");
  if (a.scope() != Scope::Full || b.scope() != Scope::Full) throw PreconditionError("ext1_koszul: needs g[B]-modules");
  const auto& g = a.algebra();
  const auto& B = a.acting();
  const int G = g.dim(), nb = B.dim();
  std::map<Weight, std::vector<int>> bclasses;
  for (int f = 0; f < b.dim(); ++f) bclasses[b.weight(f)].push_back(f);
  std::vector<int> pos(b.dim());
  for (const auto& [w, v] : bclasses)
    for (std::size_t t = 0; t < v.size(); ++t) pos[v[t]] = static_cast<int>(t);

  // One block of variables per basis element U = (u, bb) of g[B].
  std::vector<BlockIndex> blocks;
  std::vector<int> base;
  int nvar = 0;
  for (int u = 0; u < G; ++u) {
    BlockIndex bi = block_index(a, bclasses, g.element(u).weight);
    for (int bb = 0; bb < nb; ++bb) {
      blocks.push_back(bi);
      base.push_back(nvar);
      nvar += bi.size();
    }
  }
  if (nvar > max_cochain_dim())
    throw SizeCapError("instance too large: cochain dimension " + std::to_string(nvar));
  auto U = [&](int u, int bb) { return u * nb + bb; };
  auto cvar = [&](int Ui, int f, int e) { return base[Ui] + blocks[Ui].offset[e] + pos[f]; };

  std::vector<SparseMatrix> R1(G * nb), R2t(G * nb);
  for (int u = 0; u < G; ++u)
    for (int bb = 0; bb < nb; ++bb) {
      R1[U(u, bb)] = a.act(u, bb);
      R2t[U(u, bb)] = b.act(u, bb).transpose();
    }
  auto in_block = [&](int f, int e, int u) { return b.weight(f) == a.weight(e) + g.element(u).weight; };

  // The U with dc(U, -) = 0 form a subalgebra, so rows for U in a generating set suffice.
  const std::vector<int> gens = lie_generators(g, B);
  std::vector<char> is_gen(G * nb, 0);
  for (int Ui : gens) is_gen[Ui] = 1;
  ModRank Z1(nvar, kPrimeA), Z2(nvar, kPrimeB);
  Accumulator acc(nvar);
  for (int Uu : gens) {
    const int u = Uu / nb, ba = Uu % nb;
    for (int v = 0; v < G; ++v)
      for (int bb = 0; bb < nb; ++bb) {
        const int Uv = U(v, bb);
        if (is_gen[Uv] && Uv < Uu) continue;
        const bool uo = g.odd(u), vo = g.odd(v);
        if (Uu == Uv && !uo) continue;
        const Rational s = (uo && vo) ? Rational(-1) : Rational(1);
        const Weight wsum = g.element(u).weight + g.element(v).weight;
        const SparseVec& br = g.bracket(u, v);
        const int prodb = B.mul(ba, bb);
        for (int e = 0; e < a.dim(); ++e) {
          auto it = bclasses.find(a.weight(e) + wsum);
          if (it == bclasses.end()) continue;
          for (int f : it->second) {
            // c([u,v] ⊗ ab)
            if (prodb >= 0)
              for (const auto& [w, cw] : br.entries()) acc.add(cvar(U(w, prodb), f, e), cw);
            // - ρ2(U) c(V)
            for (const auto& [f2, x] : R2t[Uu].col[f].entries())
              if (in_block(f2, e, v)) acc.add(cvar(Uv, f2, e), -x);
            // - c(U) ρ1(V)
            for (const auto& [e2, x] : R1[Uv].col[e].entries())
              if (in_block(f, e2, u)) acc.add(cvar(Uu, f, e2), -x);
            // + s ρ2(V) c(U)
            for (const auto& [f2, x] : R2t[Uv].col[f].entries())
              if (in_block(f2, e, u)) acc.add(cvar(Uu, f2, e), s * x);
            // + s c(V) ρ1(U)
            for (const auto& [e2, x] : R1[Uu].col[e].entries())
              if (in_block(f, e2, v)) acc.add(cvar(Uv, f, e2), s * x);
            SparseVec row = acc.take();
            if (row.empty()) continue;
            Z1.insert(row);
            Z2.insert(row);
          }
        }
      }
  }
  const int z1 = nvar - std::max(Z1.rank(), Z2.rank());
  int c0 = 0;
  for (int e = 0; e < a.dim(); ++e) {
    auto it = bclasses.find(a.weight(e));
    if (it != bclasses.end()) c0 += static_cast<int>(it->second.size());
  }
  const int hom = hom_space(a, b, Over::GA).dim;
  const int b1 = c0 - hom;
  if (z1 < b1) throw InternalError("ext1_koszul: fewer cocycles than coboundaries");
  return z1 - b1;
}

std::string export_triplets(const ExplicitModule& m) {
  std::ostringstream os;
  os << "dim " << m.dim() << "\nparity";
  for (char p : m.parity()) os << ' ' << int(p);
  os << '\n';
  if (!m.has_action()) return os.str();
  for (int gi = 0; gi < m.algebra().dim(); ++gi) {
    if (!m.acts(gi)) continue;
    for (int b = 0; b < m.acting().dim(); ++b) {
      const auto& M = m.act(gi, b);
      for (int j = 0; j < M.cols; ++j)
        for (const auto& [i, x] : M.col[j].entries()) os << gi << ' ' << b << ' ' << i << ' ' << j << ' ' << to_string(x) << '\n';
    }
  }
  return os.str();
}

}  // namespace superkac
