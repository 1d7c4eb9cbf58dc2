#pragma once

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "superkac/charring.hpp"
#include "superkac/coeffalg.hpp"
#include "superkac/realize.hpp"
#include "superkac/rootdata.hpp"

namespace superkac {

/// Pullback of an irreducible g-module through evaluation at the factor's point.
struct Evaluation {
  Weight hw;
  friend bool operator==(const Evaluation& a, const Evaluation& b) { return a.hw == b.hw; }
};

/// V_{A/k_Θ}(Θ ⊠ V) with k_Θ strictly inside the maximal ideal.
struct KacLike {
  ZFunctional theta;  // in the local coordinates T = t - point
  G0IrrepLabel vlabel;
  friend bool operator==(const KacLike& a, const KacLike& b) {
    return a.theta == b.theta && a.vlabel.hw.hprime == b.vlabel.hw.hprime;
  }
};

struct LocalFactor {
  Point point;
  std::variant<Evaluation, KacLike> kind;

  bool is_evaluation() const { return std::holds_alternative<Evaluation>(kind); }
  const Evaluation& evaluation() const { return std::get<Evaluation>(kind); }
  const KacLike& kac_like() const { return std::get<KacLike>(kind); }
  friend bool operator==(const LocalFactor& a, const LocalFactor& b) { return a.point == b.point && a.kind == b.kind; }
};

LocalFactor make_evaluation(const Point& p, const Weight& hw);
LocalFactor make_kac_like(const Point& p, const ZFunctional& theta, const G0IrrepLabel& vlabel);

/// Θ = ψ|z[A] at the factor's point; constant for evaluation factors.
ZFunctional local_theta(const LocalFactor& f);
/// g0'-part of the highest weight, with z set to Θ(z).
G0IrrepLabel local_label(const LocalFactor& f);
/// d = dim A/k_Θ (1 for evaluation factors).
int local_d(const LocalFactor& f);
/// k_Θ in A/m^n with n the nilpotency of Θ (the maximal ideal for evaluation factors).
Ideal local_ideal(const LocalFactor& f);
bool is_trivial(const LocalFactor& f, const AlgebraId& id);

struct ModuleDescriptor {
  AlgebraId id;
  std::vector<LocalFactor> factors;
  friend bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) {
    return a.id == b.id && a.factors == b.factors;
  }
};

ModuleDescriptor normalize(const AlgebraId& id, std::vector<LocalFactor> factors);

/// K_{A/I}(Θ ⊠ V) irreducible iff I = k_Θ, for k_Θ strictly inside m.
bool is_irreducible_kac_like(const ZFunctional& theta, const Ideal& I);

struct DimChar {
  long long dim = 0;
  long long sdim = 0;
  FormalCharacter ch;
  FormalCharacter sch;
};
DimChar dimension_and_characters(const ModuleDescriptor& desc);
/// Typical when (λ + ρ, β) ≠ 0 for every positive odd root β, with ρ = ρ0 - ρ1.
bool is_typical(const Weight& hw, const AlgebraId& id);

/// ψ ∈ h[A]* per support point: exponent e -> (ψ(h_i ⊗ T^e), ψ(z ⊗ T^e)); zero entries dropped.
struct HighestWeightData {
  std::map<Point, std::map<Exponent, Weight>> psi;
  friend bool operator==(const HighestWeightData& a, const HighestWeightData& b) { return a.psi == b.psi; }
};

HighestWeightData highest_weight_data(const ModuleDescriptor& desc);
HighestWeightData highest_weight_data(const HighestWeightResult& res, const ActingAlgebra& B);
std::set<Point> support(const HighestWeightData& hw);
/// d_{ψ,m} from the z-part of ψ at one point.
int d_value(const std::map<Exponent, Weight>& local, int r);
HighestWeightData change_of_borel(const HighestWeightData& hw, const std::vector<Root>& chain, const BorelChoice& borel,
                                  const AlgebraId& id);

/// Explicit realization of one factor at component `component` of B.
ExplicitModule factor_module(const SuperalgebraPtr& g, const LocalFactor& f, const ActingAlgebra& B, int component);
/// Smallest order N with m^N ⊆ k_Θ.
int factor_order(const LocalFactor& f);
/// Tensor product of factor realizations; each component has order factor_order + extra.
ExplicitModule descriptor_module(const SuperalgebraPtr& g, const ModuleDescriptor& desc, int extra = 0);

}  // namespace superkac
