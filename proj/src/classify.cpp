#include "superkac/classify.hpp"

#include <algorithm>

#include "superkac/errors.hpp"

namespace superkac {

namespace {

void check_point(const Point& p, const ZFunctional* theta) {
  if (p.r() < 1) throw DomainError("point needs at least one coordinate");
  if (theta && theta->r() != p.r()) throw DomainError("functional and point have different variable counts");
}

// Θ restricted to its nilpotency order, so that k_Θ is computed in the smallest truncation.
ZFunctional trimmed(const ZFunctional& theta) { return ZFunctional(theta.r(), theta.nilpotency(), theta.values()); }

}  // namespace

LocalFactor make_evaluation(const Point& p, const Weight& hw) {
  check_point(p, nullptr);
  return LocalFactor{p, Evaluation{hw}};
}

LocalFactor make_kac_like(const Point& p, const ZFunctional& theta, const G0IrrepLabel& vlabel) {
  check_point(p, &theta);
  G0IrrepLabel lab = vlabel;
  lab.hw.z = theta.at_one();
  return LocalFactor{p, KacLike{theta, lab}};
}

ZFunctional local_theta(const LocalFactor& f) {
  if (f.is_evaluation()) return constant_functional(f.point.r(), f.evaluation().hw.z);
  return f.kac_like().theta;
}

G0IrrepLabel local_label(const LocalFactor& f) {
  if (f.is_evaluation()) return G0IrrepLabel{f.evaluation().hw};
  G0IrrepLabel lab = f.kac_like().vlabel;
  lab.hw.z = f.kac_like().theta.at_one();
  return lab;
}

Ideal local_ideal(const LocalFactor& f) {
  if (f.is_evaluation()) return Ideal::power_of_max(TruncatedAlgebra(f.point.r(), 1), 1);
  return annihilator_ideal(trimmed(f.kac_like().theta));
}

int local_d(const LocalFactor& f) {
  if (f.is_evaluation()) return 1;
  return local_ideal(f).codim();
}

bool is_trivial(const LocalFactor& f, const AlgebraId& id) {
  return f.is_evaluation() && f.evaluation().hw == zero_weight(id);
}

ModuleDescriptor normalize(const AlgebraId& id, std::vector<LocalFactor> factors) {
  id.validate();
  ModuleDescriptor out{id, {}};
  int r = -1;
  for (auto& f : factors) {
    if (r < 0) r = f.point.r();
    if (f.point.r() != r) throw DomainError("factors live in different numbers of variables");
    if (!f.is_evaluation()) {
      const KacLike& k = f.kac_like();
      check_point(f.point, &k.theta);
      G0IrrepLabel lab = local_label(f);
      if (!is_dominant(lab, id)) throw DomainError("V-label is not dominant integral for g0'");
      if (k.theta.kills_max()) f = make_evaluation(f.point, lab.hw);
      else f = make_kac_like(f.point, trimmed(k.theta), lab);
    } else {
      const Weight& hw = f.evaluation().hw;
      if (hw.hprime.size() != zero_weight(id).hprime.size()) throw DomainError("weight has the wrong number of labels");
      if (!is_dominant(G0IrrepLabel{hw}, id)) throw DomainError("highest weight is not dominant integral for g0'");
    }
    if (!is_trivial(f, id)) out.factors.push_back(f);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const LocalFactor& a, const LocalFactor& b) { return a.point < b.point; });
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    if (out.factors[i].point == out.factors[i - 1].point)
      throw DomainError("factors must be at distinct maximal ideals");
  return out;
}

bool is_irreducible_kac_like(const ZFunctional& theta, const Ideal& Iin) {
  if (theta.r() != Iin.algebra().r()) throw DomainError("functional and ideal have different variable counts");
  if (!kills_ideal(theta, Iin)) throw DomainError("Kac-like module not defined for this ideal");
  const int N = std::max({theta.n(), theta.nilpotency(), Iin.algebra().order()});
  TruncatedAlgebra alg(theta.r(), N);
  Ideal I = Iin.algebra().order() < N ? Iin.lift(N) : Iin;
  Ideal k = annihilator_ideal(theta, alg);
  if (!k.contains(I)) throw InternalError("ideal killed by Θ is not inside k_Θ");
  if (k.codim() > 1) return I == k;
  // k_Θ = m: below m the proper submodule argument still applies; at I = m the answer is typicality.
  if (I.codim() > 1) return false;
  throw DomainError("irreducibility of K_{A/m} is a typicality question; use the explicit oracle");
}

bool is_typical(const Weight& hw, const AlgebraId& id) {
  const int len = id.coord_count();
  RatVec lam = to_coords(hw, id);
  RatVec rho(len, Rational(0));
  for (const auto& a : positive_even_roots(id))
    for (int i = 0; i < len; ++i) rho[i] += Rational(a.coords[i], 2);
  for (const auto& b : positive_odd_roots(id))
    for (int i = 0; i < len; ++i) rho[i] -= Rational(b.coords[i], 2);
  RatVec v(len);
  for (int i = 0; i < len; ++i) v[i] = lam[i] + rho[i];
  for (const auto& b : positive_odd_roots(id)) {
    RatVec bc(len);
    for (int i = 0; i < len; ++i) bc[i] = Rational(b.coords[i]);
    if (form(v, bc, id) == 0) return false;
  }
  return true;
}

namespace {

std::pair<FormalCharacter, FormalCharacter> factor_characters(const AlgebraId& id, const LocalFactor& f) {
  G0IrrepLabel lab = local_label(f);
  if (!f.is_evaluation()) {
    int d = local_d(f);
    return {kac_like_character(lab, d, id, false), kac_like_character(lab, d, id, true)};
  }
  if (is_typical(lab.hw, id)) return {kac_like_character(lab, 1, id, false), kac_like_character(lab, 1, id, true)};
  if (id.family != Family::SL) throw DomainError("atypical evaluation factor requires explicit realization");
  auto g = build_superalgebra(id);
  auto L = evaluation_module(g, ActingAlgebra::local(f.point, 1), 0, lab.hw);
  return {L.character(false), L.character(true)};
}

}  // namespace

DimChar dimension_and_characters(const ModuleDescriptor& desc) {
  DimChar out;
  out.ch = FormalCharacter::one(desc.id);
  out.sch = FormalCharacter::one(desc.id);
  for (const auto& f : desc.factors) {
    auto [ch, sch] = factor_characters(desc.id, f);
    out.ch = out.ch * ch;
    out.sch = out.sch * sch;
  }
  out.dim = dimension(out.ch);
  out.sdim = dimension(out.sch);
  return out;
}

HighestWeightData highest_weight_data(const ModuleDescriptor& desc) {
  HighestWeightData out;
  const Weight zero = zero_weight(desc.id);
  for (const auto& f : desc.factors) {
    std::map<Exponent, Weight> local;
    const Exponent e0(f.point.r(), 0);
    G0IrrepLabel lab = local_label(f);
    if (!lab.hw.is_zero()) local[e0] = lab.hw;
    const ZFunctional theta = local_theta(f);
    for (const auto& [e, v] : theta.values()) {
      if (e == e0) continue;
      Weight w = zero;
      w.z = v;
      local[e] = w;
    }
    if (!local.empty()) out.psi[f.point] = local;
  }
  return out;
}

HighestWeightData highest_weight_data(const HighestWeightResult& res, const ActingAlgebra& B) {
  if (static_cast<int>(res.psi.size()) != B.dim()) throw PreconditionError("ψ does not match the acting algebra");
  HighestWeightData out;
  for (int b = 0; b < B.dim(); ++b) {
    if (res.psi[b].is_zero()) continue;
    out.psi[B.component(B.component_of(b)).point][B.monomial(b)] = res.psi[b];
  }
  return out;
}

std::set<Point> support(const HighestWeightData& hw) {
  std::set<Point> s;
  for (const auto& [p, local] : hw.psi)
    for (const auto& kv : local)
      if (!kv.second.is_zero()) {
        s.insert(p);
        break;
      }
  return s;
}

int d_value(const std::map<Exponent, Weight>& local, int r) {
  std::map<Exponent, Rational> vals;
  int n = 1;
  for (const auto& [e, w] : local) {
    if (w.z == 0) continue;
    vals[e] = w.z;
    n = std::max(n, degree(e) + 1);
  }
  ZFunctional theta(r, n, vals);
  if (theta.kills_max()) return 1;
  return annihilator_ideal(theta).codim();
}

HighestWeightData change_of_borel(const HighestWeightData& hw, const std::vector<Root>& chain, const BorelChoice& borel,
                                  const AlgebraId& id) {
  BorelChoice d0 = distinguished_borel(id);
  if (borel.simple_roots != d0.simple_roots) throw PreconditionError("change_of_borel starts from the distinguished Borel");
  std::vector<Root> steps;
  BorelChoice cur = borel;
  for (const auto& a : chain) {
    cur = odd_reflection(cur, a, id);
    steps.push_back(make_root(a.coords, id));
  }
  Weight sum = zero_weight(id);
  for (const auto& a : steps) sum = sum + to_weight(a, id);

  HighestWeightData out;
  for (const auto& [p, local] : hw.psi) {
    const Exponent e0(p.r(), 0);
    for (const auto& [e, w] : local)
      if (e != e0 && !w.hprime.empty() && std::any_of(w.hprime.begin(), w.hprime.end(), [](const Rational& x) { return x != 0; }))
        throw PreconditionError("ψ is not the highest weight of an irreducible module: g0' part depends on m");
    auto loc = local;
    Weight lam = loc.count(e0) ? loc[e0] : zero_weight(id);
    int d = d_value(local, p.r());
    if (d >= 2) {
      lam = lam - Rational(d) * sum;
    } else {
      // Stepwise odd-reflection rule for evaluation factors: the weight drops by α only when λ(h_α) ≠ 0.
      for (const auto& a : steps)
        if (eval_coroot(lam, a, id) != 0) lam = lam - to_weight(a, id);
    }
    if (lam.is_zero()) loc.erase(e0);
    else loc[e0] = lam;
    if (!loc.empty()) out.psi[p] = loc;
  }
  return out;
}

int factor_order(const LocalFactor& f) {
  if (f.is_evaluation()) return 1;
  return f.kac_like().theta.nilpotency();
}

ExplicitModule factor_module(const SuperalgebraPtr& g, const LocalFactor& f, const ActingAlgebra& B, int component) {
  if (component < 0 || component >= B.component_count() || !(B.component(component).point == f.point))
    throw PreconditionError("factor_module: component does not sit at the factor's point");
  if (f.is_evaluation()) return evaluation_module(g, B, component, f.evaluation().hw);
  const KacLike& k = f.kac_like();
  return build_kac_like(g, B, component, local_ideal(f), k.theta, local_label(f));
}

ExplicitModule descriptor_module(const SuperalgebraPtr& g, const ModuleDescriptor& desc, int extra) {
  if (!(desc.id == g->id())) throw PreconditionError("descriptor and superalgebra differ");
  if (desc.factors.empty()) return trivial_module(g, ActingAlgebra::local(Point{{Rational(0)}}, 1 + extra));
  std::optional<ExplicitModule> acc;
  for (const auto& f : desc.factors) {
    auto B = ActingAlgebra::local(f.point, factor_order(f) + extra);
    ExplicitModule m = factor_module(g, f, B, 0);
    if (!acc) acc.emplace(std::move(m));
    else acc.emplace(tensor(*acc, m));
  }
  return std::move(*acc);
}

}  // namespace superkac
