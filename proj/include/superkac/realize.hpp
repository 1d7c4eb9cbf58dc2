#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superkac/charring.hpp"
#include "superkac/coeffalg.hpp"
#include "superkac/linalg.hpp"
#include "superkac/rootdata.hpp"

namespace superkac {

enum class ElementKind { X, Y, H, Z };

struct GElement {
  ElementKind kind = ElementKind::H;
  Root root;        // positive root for X and Y
  int cartan = -1;  // g0' simple coroot index for H
  bool odd = false;
  int degree = 0;   // Z-grading: +1 on g1, -1 on g-1
  Weight weight;
  std::string label;
};

/// sl(m|n) as supertraceless supermatrices. Basis order: g1, then g0 (x, y, h, z), then g-1.
class MatrixSuperalgebra {
 public:
  explicit MatrixSuperalgebra(const AlgebraId& id);

  const AlgebraId& id() const { return id_; }
  int dim() const { return static_cast<int>(elems_.size()); }
  int size() const { return N_; }  // matrix size m + n
  const GElement& element(int i) const { return elems_[i]; }
  bool odd(int i) const { return elems_[i].odd; }
  const Dense& matrix(int i) const { return mats_[i]; }
  const SparseVec& bracket(int i, int j) const { return br_[static_cast<std::size_t>(i) * elems_.size() + j]; }

  int x(const Root& positive) const;
  int y(const Root& positive) const;
  int h(int i) const { return h0_ + i; }
  int z() const { return z_; }
  /// Root vector of an arbitrary root: x_γ if γ is positive, y_{-γ} otherwise.
  int root_vector(const Root& gamma) const;
  /// Transpose anti-involution on basis indices.
  int tau(int i) const { return tau_[i]; }
  /// Coordinates of a supertraceless matrix in the basis; throws if it is not in sl(m|n).
  SparseVec coords(const Dense& M) const;
  Dense to_matrix(const SparseVec& v) const;

  const std::vector<int>& g1() const { return g1_; }
  const std::vector<int>& g0() const { return g0_; }
  const std::vector<int>& gm1() const { return gm1_; }
  /// Position of a basis index inside gm1(), or -1.
  int gm1_pos(int i) const { return gm1pos_[i]; }

 private:
  AlgebraId id_;
  int N_;
  std::vector<GElement> elems_;
  std::vector<Dense> mats_;
  std::vector<SparseVec> br_;
  std::vector<int> tau_;
  std::map<std::pair<int, int>, int> entry_;  // (i, j) -> index of E_ij
  int h0_ = 0;
  int z_ = 0;
  Dense cartan_;  // diag coordinates of h_0..h_{k-1}, z as columns
  std::vector<int> g1_, g0_, gm1_, gm1pos_;
};

using SuperalgebraPtr = std::shared_ptr<const MatrixSuperalgebra>;
SuperalgebraPtr build_superalgebra(const AlgebraId& id);

/// One local factor A/m_p^order of the acting algebra.
struct Component {
  Point point;
  int order = 1;
  friend bool operator==(const Component& a, const Component& b) { return a.point == b.point && a.order == b.order; }
};

/// B = ⊕_k A/m_k^{N_k}; every finite-dimensional module here factors through such a B.
class ActingAlgebra {
 public:
  explicit ActingAlgebra(std::vector<Component> comps);
  static ActingAlgebra local(const Point& p, int order) { return ActingAlgebra({Component{p, order}}); }

  int dim() const { return static_cast<int>(comp_of_.size()); }
  int component_count() const { return static_cast<int>(comps_.size()); }
  const Component& component(int k) const { return comps_[k]; }
  const TruncatedAlgebra& algebra(int k) const { return algs_[k]; }
  int offset(int k) const { return offset_[k]; }
  int component_of(int b) const { return comp_of_[b]; }
  const Exponent& monomial(int b) const { return algs_[comp_of_[b]].monomial(b - offset_[comp_of_[b]]); }
  /// Index of T^e in component k, or -1 when it is truncated away.
  int index(int k, const Exponent& e) const;
  int unit(int k) const { return offset_[k]; }
  int mul(int a, int b) const;
  /// Component units and degree-one monomials: they generate g[B] when g is perfect.
  std::vector<int> generators() const;
  /// Component index holding the given point, or -1.
  int find(const Point& p) const;

  friend bool operator==(const ActingAlgebra& a, const ActingAlgebra& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<Component> comps_;
  std::vector<TruncatedAlgebra> algs_;
  std::vector<int> offset_;
  std::vector<int> comp_of_;
};

enum class Scope { Full, Even };  // g[B] or only g0[B] acts

/// Bookkeeping carried by modules built as K_{A/I}(Θ ⊠ V).
struct KacLikeData {
  ZFunctional theta;
  Ideal ideal;
  G0IrrepLabel vlabel;
  int component = 0;
  int generators = 0;  // |R+_1| * dim A/I
  int vdim = 1;
};

class ExplicitModule {
 public:
  ExplicitModule(SuperalgebraPtr g, ActingAlgebra B, Scope scope, std::vector<char> parity, std::vector<Weight> weights);

  const MatrixSuperalgebra& algebra() const { return *g_; }
  const SuperalgebraPtr& algebra_ptr() const { return g_; }
  const ActingAlgebra& acting() const { return B_; }
  Scope scope() const { return scope_; }
  int dim() const { return static_cast<int>(parity_.size()); }
  bool odd(int i) const { return parity_[i] != 0; }
  const std::vector<char>& parity() const { return parity_; }
  const Weight& weight(int i) const { return weights_[i]; }
  const std::vector<Weight>& weights() const { return weights_; }

  bool has_action() const { return !action_.empty(); }
  bool acts(int gi) const { return scope_ == Scope::Full || g_->element(gi).degree == 0; }
  const SparseMatrix& act(int gi, int b) const;
  /// Action of a linear combination of g basis elements tensored with b.
  SparseMatrix act(const SparseVec& u, int b) const;
  void set_action(int gi, int b, SparseMatrix m);
  void allocate_action();

  FormalCharacter character(bool super) const;

  std::optional<int> highest;
  std::optional<KacLikeData> kac;

 private:
  SuperalgebraPtr g_;
  ActingAlgebra B_;
  Scope scope_;
  std::vector<char> parity_;
  std::vector<Weight> weights_;
  std::vector<SparseMatrix> action_;  // index gi * dim B + b
};

/// Module dimension cap; SUPERKAC_MAX_DIM overrides the default of 512.
int max_module_dim();
int max_cochain_dim();

/// Irreducible g0'-module with its weight basis; rho is indexed by g basis index (zero off g0').
struct G0Irrep {
  std::vector<Weight> weights;
  std::vector<SparseMatrix> rho;
  int dim() const { return static_cast<int>(weights.size()); }
};
G0Irrep g0prime_irrep(const MatrixSuperalgebra& g, const G0IrrepLabel& label);

/// K_{A/I}(Θ ⊠ V) with A/I a quotient of component `component` of B. Above the size cap only the
/// carrier (weights and parity) is built when carrier_only_above_cap is set.
ExplicitModule build_kac_like(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Ideal& I,
                              const ZFunctional& theta, const G0IrrepLabel& vlabel,
                              bool carrier_only_above_cap = false);
/// Irreducible evaluation module L(λ) at component `component` of B.
ExplicitModule evaluation_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Weight& hw);
ExplicitModule trivial_module(const SuperalgebraPtr& g, const ActingAlgebra& B);
/// g itself, acting through evaluation at component `component`.
ExplicitModule adjoint_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component);
/// The g0[B]-module Θ ⊠ V (g0' ⊗ m acts by zero).
ExplicitModule g0_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const ZFunctional& theta,
                         const G0IrrepLabel& vlabel);
/// The g0[B]-module g-1 ⊗ J ⊗ (Θ ⊠ V) for an ideal J of the component algebra.
ExplicitModule gm1_ideal_module(const SuperalgebraPtr& g, const ActingAlgebra& B, int component, const Ideal& J,
                                const ZFunctional& theta, const G0IrrepLabel& vlabel);

ExplicitModule tensor(const ExplicitModule& a, const ExplicitModule& b);
ExplicitModule dual_module(const ExplicitModule& m);
/// Same module over a larger acting algebra (components matched by point; orders may grow).
ExplicitModule embed(const ExplicitModule& m, const ActingAlgebra& big);
/// M / (maximal submodule); requires a highest-weight index.
ExplicitModule irreducible_quotient(const ExplicitModule& m);

/// Smallest submodule containing the seeds.
Echelon closure(const ExplicitModule& m, const std::vector<SparseVec>& seeds);
/// Largest submodule missing the highest-weight line.
Echelon maximal_submodule(const ExplicitModule& m);

struct SubmoduleReport {
  bool is_irreducible = false;
  int maximal_submodule_dim = 0;
  std::optional<int> omega_dim;
  std::optional<int> z_part_dim;
};
SubmoduleReport submodule_search(const ExplicitModule& m);

/// Kernel dimension of the natural surjection K_{A/I}(M) -> K_{A/J}(M), I ⊆ J; checks it intertwines.
int omega_dimension(const ExplicitModule& big, const ExplicitModule& small);

struct Certificate {
  Rational scalar;
  bool admissible = true;  // monomials below n̂ span A/I, so ⋆ is defined on all of g-1[A/I]
};
Certificate irreducibility_certificate(const ExplicitModule& m, const StarPartner& partner);

/// Largest absolute entry over all checked identities of the supercommutator rules.
struct CommRelResidual {
  Rational max_abs;
  long checked = 0;
};
CommRelResidual verify_comm_rels(const ExplicitModule& m, int k);
/// max |ρ([u,v]⊗ab) - [ρ(u⊗a), ρ(v⊗b)]| over all basis pairs.
Rational bracket_residual(const ExplicitModule& m);

struct HighestWeightResult {
  SparseVec vector;
  std::vector<Weight> psi;  // ψ(h ⊗ b) for each basis element b of the acting algebra
};
/// Basis of the vectors killed by every positive root vector of the given Borel tensored with every b.
std::vector<SparseVec> singular_vectors(const ExplicitModule& m, const BorelChoice& borel);
HighestWeightResult highest_weight_vector(const ExplicitModule& m, const BorelChoice& borel);

enum class Over { G0A, GA };
struct HomResult {
  int dim = 0;
  std::vector<SparseMatrix> basis;
};
HomResult hom_space(const ExplicitModule& a, const ExplicitModule& b, Over over);
int ext1_koszul(const ExplicitModule& a, const ExplicitModule& b);

/// "dim", "parity", then one line per nonzero entry: g-index b-index row col value.
std::string export_triplets(const ExplicitModule& m);

}  // namespace superkac
