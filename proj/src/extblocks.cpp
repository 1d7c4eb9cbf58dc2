#include "superkac/extblocks.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "superkac/errors.hpp"

namespace superkac {

std::string ExtAnswer::case_name() const {
  switch (kind) {
    case ExtKind::Zero:
      return "zero";
    case ExtKind::HomSpace:
      return hom == HomCase::Second ? "hom2" : "hom1";
    case ExtKind::G0Reduction:
      return "g0red";
    case ExtKind::EvalPairFormula:
      return "evalpair";
  }
  return "zero";
}

std::string to_string(Nonvanishing n) {
  switch (n) {
    case Nonvanishing::Yes:
      return "yes";
    case Nonvanishing::No:
      return "no";
    case Nonvanishing::NeedsOracle:
      return "oracle";
  }
  return "oracle";
}

namespace {

G0IrrepLabel without_z(G0IrrepLabel lab) {
  lab.hw.z = 0;
  return lab;
}

ExtAnswer zero_answer(std::string note) {
  ExtAnswer a;
  a.kind = ExtKind::Zero;
  a.dim = 0;
  a.nonvanishing = Nonvanishing::No;
  a.note = std::move(note);
  return a;
}

// Θ1 and Θ2 agree on z ⊗ m.
bool agree_off_constant(const ZFunctional& a, const ZFunctional& b) {
  std::set<Exponent> keys;
  for (const auto& kv : a.values()) keys.insert(kv.first);
  for (const auto& kv : b.values()) keys.insert(kv.first);
  for (const auto& e : keys)
    if (degree(e) > 0 && a.value(e) != b.value(e)) return false;
  return true;
}

}  // namespace

Rational z_grade(const AlgebraId& id) {
  RatVec z = z_vector(id);
  const Root beta = positive_odd_roots(id).front();
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * beta.coords[i];
  return s;
}

FormalCharacter gm1_character(const AlgebraId& id) {
  FormalCharacter ch;
  for (const auto& beta : positive_odd_roots(id)) {
    Weight w = to_weight(-beta, id);
    w.z = 0;
    ch.add(w, 1);
  }
  return ch;
}

long long g0prime_multiplicity(const FormalCharacter& ch, const G0IrrepLabel& v, const AlgebraId& id) {
  FormalCharacter flat;
  for (const auto& [w, c] : ch.terms()) {
    Weight u = w;
    u.z = 0;
    flat.add(u, c);
  }
  long long mult = 0;
  for (const auto& [lab, c] : decompose(flat, id))
    if (lab.hw.hprime == v.hw.hprime) mult += c;
  return mult;
}

long long hom_gm1_closed_form(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2) {
  if (!(f1.point == f2.point)) throw PreconditionError("Hom over g0[A] needs both factors at one point");
  ZFunctional t1 = local_theta(f1), t2 = local_theta(f2);
  if (t1.at_one() - t2.at_one() != z_grade(id)) return 0;
  if (!agree_off_constant(t1, t2)) return 0;
  const int r = f1.point.r();
  const int n = std::max(t1.nilpotency(), 1);
  TruncatedAlgebra alg(r, n + 1);
  Ideal k = t1.kills_max() ? Ideal::power_of_max(alg, 1) : annihilator_ideal(t1, alg);
  Ideal mk = Ideal::power_of_max(alg, 1).product(k);
  const long long gens = k.dim() - mk.dim();
  G0IrrepLabel v1 = without_z(local_label(f1));
  FormalCharacter ch = gm1_character(id) * weyl_character(v1, id);
  return gens * g0prime_multiplicity(ch, without_z(local_label(f2)), id);
}

long long hom_gm1_oracle(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2) {
  if (!(f1.point == f2.point)) throw PreconditionError("Hom over g0[A] needs both factors at one point");
  ZFunctional t1 = local_theta(f1), t2 = local_theta(f2);
  const int n = std::max({t1.nilpotency(), t2.nilpotency(), 1});
  const int N = 2 * n;
  auto g = build_superalgebra(id);
  auto B = ActingAlgebra::local(f1.point, N);
  TruncatedAlgebra alg(f1.point.r(), N);
  Ideal k = t1.kills_max() ? Ideal::power_of_max(alg, 1) : annihilator_ideal(t1, alg);
  auto src = gm1_ideal_module(g, B, 0, k, t1, local_label(f1));
  auto dst = g0_module(g, B, 0, t2, local_label(f2));
  return hom_space(src, dst, Over::G0A).dim;
}

ExtAnswer different_points_zero(const LocalFactor& f1, const LocalFactor& f2) {
  if (f1.point == f2.point) throw PreconditionError("different_points_zero: factors share a point");
  return zero_answer("factors at distinct maximal ideals");
}

ExtAnswer ext1_eval_pair(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2) {
  if (!(f1.point == f2.point)) throw PreconditionError("ext1_eval_pair: factors at different points");
  if (!local_theta(f1).kills_max() || !local_theta(f2).kills_max())
    throw PreconditionError("ext1_eval_pair: both factors must be evaluation modules");
  ExtAnswer a;
  a.kind = ExtKind::EvalPairFormula;
  const Weight l1 = local_label(f1).hw, l2 = local_label(f2).hw;
  if (!is_integer(Rational(l1.z - l2.z))) {
    a.dim = 0;
    a.nonvanishing = Nonvanishing::No;
    a.note = "z-values differ by a non-integer";
    return a;
  }
  if (id.family != Family::SL) {
    a.nonvanishing = Nonvanishing::NeedsOracle;
    a.note = "requires explicit realization";
    return a;
  }
  // The answer depends only on the algebra, r and the two weights; block closure asks the same pairs repeatedly.
  static std::mutex mu;
  static std::map<std::string, ExtAnswer> memo;
  const std::string key = id.name() + "|" + std::to_string(f1.point.r()) + "|" + to_string(l1) + "|" + to_string(l2);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  try {
    auto g = build_superalgebra(id);
    auto B = ActingAlgebra::local(f1.point, 1);
    auto L1 = evaluation_module(g, B, 0, l1);
    auto L2 = evaluation_module(g, B, 0, l2);
    const long long ext = ext1_koszul(L1, L2);
    const long long hom = hom_space(tensor(adjoint_module(g, B, 0), L1), L2, Over::GA).dim;
    a.dim = ext + static_cast<long long>(f1.point.r()) * hom;
    a.nonvanishing = *a.dim != 0 ? Nonvanishing::Yes : Nonvanishing::No;
    a.note = "Ext^1_g = " + std::to_string(ext) + ", Hom_g(g ⊗ V1, V2) = " + std::to_string(hom);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, a);
  } catch (const SizeCapError& e) {
    a.nonvanishing = Nonvanishing::NeedsOracle;
    a.note = e.what();
  }
  return a;
}

ExtAnswer ext1_dispatch(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2) {
  if (!(f1.point == f2.point)) throw PreconditionError("ext1_dispatch: factors at different points; use different_points_zero");
  const ZFunctional t1 = local_theta(f1), t2 = local_theta(f2);
  if (t1.kills_max() && t2.kills_max()) return ext1_eval_pair(id, f1, f2);
  const Rational diff = t1.at_one() - t2.at_one();
  if (!is_integer(diff)) return zero_answer("z-values differ by a non-integer");

  ExtAnswer a;
  if (t1 == t2) {
    a.kind = ExtKind::G0Reduction;
    const G0IrrepLabel v1 = without_z(local_label(f1)), v2 = without_z(local_label(f2));
    const bool same = v1.hw.hprime == v2.hw.hprime;
    const long long adj = g0prime_multiplicity(g0prime_adjoint_character(id) * weyl_character(v1, id), v2, id);
    a.nonvanishing = (same || adj > 0) ? Nonvanishing::Yes : Nonvanishing::No;
    a.note = same ? "infinite: z[A]* factor" : "Hom_{g0'}(g0' ⊗ V1, V2) has dimension " + std::to_string(adj);
    if (!same && adj == 0) a.dim = 0;
    return a;
  }
  a.kind = ExtKind::HomSpace;
  if (diff >= 0) a.dim = hom_gm1_closed_form(id, f1, f2);
  if (diff <= 0) {
    long long d2 = hom_gm1_closed_form(id, f2, f1);
    if (diff == 0) a.dim_second = d2;
    else a.dim = d2;
  }
  a.hom = diff > 0 ? HomCase::First : diff < 0 ? HomCase::Second : HomCase::Both;
  if (a.hom == HomCase::Both && ((*a.dim != 0) != (*a.dim_second != 0)))
    throw InternalError("ext1_dispatch: the two Hom descriptions disagree");
  a.nonvanishing = *a.dim != 0 ? Nonvanishing::Yes : Nonvanishing::No;
  return a;
}

ExtAnswer ext1(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2) {
  if (!(f1.point == f2.point)) return different_points_zero(f1, f2);
  return ext1_dispatch(id, f1, f2);
}

bool extension_local_check(const AlgebraId& id, const LocalFactor& v, const LocalFactor& lam) {
  if (!local_theta(v).kills_max()) throw PreconditionError("extension_local_check: V must be an evaluation module");
  const RatVec labels = local_label(lam).hw.hprime;
  if (lam.is_evaluation() || std::any_of(labels.begin(), labels.end(), [](const Rational& x) { return x != 0; }))
    throw PreconditionError("extension_local_check: C_λ must be Kac-like with trivial g0'-part");
  return ext1(id, v, lam).nonvanishing == Nonvanishing::No && ext1(id, lam, v).nonvanishing == Nonvanishing::No;
}

std::vector<std::vector<LocalFactor>> local_blocks(const AlgebraId& id, const Point& p, const Universe& universe) {
  std::vector<LocalFactor> nodes{make_evaluation(p, zero_weight(id))};
  if (auto it = universe.find(p); it != universe.end())
    for (const auto& f : it->second) {
      if (!(f.point == p)) throw DomainError("universe entry " + to_string(f.point) + " filed under " + to_string(p));
      if (std::find(nodes.begin(), nodes.end(), f) == nodes.end()) nodes.push_back(f);
    }
  const int u = static_cast<int>(nodes.size());
  std::vector<int> parent(u);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) {
      if (find(i) == find(j)) continue;
      if (ext1(id, nodes[i], nodes[j]).nonvanishing == Nonvanishing::Yes ||
          ext1(id, nodes[j], nodes[i]).nonvanishing == Nonvanishing::Yes)
        parent[find(j)] = find(i);
    }
  std::map<int, std::vector<LocalFactor>> comps;
  for (int i = 0; i < u; ++i) comps[find(i)].push_back(nodes[i]);
  std::vector<std::vector<LocalFactor>> out;
  for (auto& kv : comps) out.push_back(std::move(kv.second));
  return out;
}

SpectralCharacter spectral_character(const ModuleDescriptor& desc, const Universe& universe) {
  SpectralCharacter chi;
  for (const auto& f : desc.factors) {
    auto it = universe.find(f.point);
    if (it == universe.end() || std::find(it->second.begin(), it->second.end(), f) == it->second.end())
      throw DomainError("factor at " + to_string(f.point) + " is outside the universe");
    auto blocks = local_blocks(desc.id, f.point, universe);
    const std::vector<LocalFactor>* home = nullptr;
    for (const auto& b : blocks)
      if (std::find(b.begin(), b.end(), f) != b.end()) home = &b;
    const LocalFactor trivial = make_evaluation(f.point, zero_weight(desc.id));
    if (std::find(home->begin(), home->end(), trivial) != home->end()) continue;
    chi.assignments[f.point] = LocalBlockId{home->front(), *home};
  }
  return chi;
}

bool same_block(const ModuleDescriptor& d1, const ModuleDescriptor& d2, const Universe& universe) {
  if (!(d1.id == d2.id)) throw DomainError("descriptors over different superalgebras");
  return spectral_character(d1, universe) == spectral_character(d2, universe);
}

Universe auto_universe(const ModuleDescriptor& d1, const ModuleDescriptor& d2) {
  Universe u;
  for (const auto* d : {&d1, &d2})
    for (const auto& f : d->factors) {
      auto& v = u[f.point];
      if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
    }
  return u;
}

bool affine_reduction_note(const ModuleDescriptor& d1, const ModuleDescriptor& d2, const Universe& universe) {
  for (const auto* d : {&d1, &d2})
    for (const auto& f : d->factors)
      if (f.point.r() != 1 || f.point.coords[0] == 0)
        throw DomainError("point " + to_string(f.point) + " is not a maximal ideal of C[t, t^-1]");
  return same_block(d1, d2, universe);
}

}  // namespace superkac
