#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superkac/classify.hpp"

namespace superkac {

enum class ExtKind { Zero, HomSpace, G0Reduction, EvalPairFormula };
enum class Nonvanishing { Yes, No, NeedsOracle };

/// Which Hom_{g0[A]}(g-1[k_Θi] ⊗ L_i, L_j) space carries Ext^1.
enum class HomCase { None, First, Second, Both };

struct ExtAnswer {
  ExtKind kind = ExtKind::Zero;
  HomCase hom = HomCase::None;
  std::optional<long long> dim;
  /// Second Hom dimension when both Hom cases apply (equal z-values).
  std::optional<long long> dim_second;
  Nonvanishing nonvanishing = Nonvanishing::No;
  std::string note;

  /// "zero", "hom1", "hom2", "g0red" or "evalpair".
  std::string case_name() const;
};

std::string to_string(Nonvanishing n);

/// Ext^1_{g[A]} between the irreducible modules of two factors at the same point.
ExtAnswer ext1_dispatch(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2);
/// Two evaluation factors at one point: Ext^1_g plus (dim m/m^2) copies of Hom_g(g ⊗ V1, V2), via the oracle.
ExtAnswer ext1_eval_pair(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2);
ExtAnswer different_points_zero(const LocalFactor& f1, const LocalFactor& f2);
/// Ext^1 between factors at any points.
ExtAnswer ext1(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2);

/// dim Hom_{g0[A]}(g-1[k_Θ1] ⊗ L1, L2) in closed form.
long long hom_gm1_closed_form(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2);
/// The same Hom space by a linear solve over g0[A/m^N] with g-1[k_Θ1] truncated at N = 2n.
long long hom_gm1_oracle(const AlgebraId& id, const LocalFactor& f1, const LocalFactor& f2);
/// Multiplicity of the g0'-irreducible V in the g0'-module with character ch (z ignored).
long long g0prime_multiplicity(const FormalCharacter& ch, const G0IrrepLabel& v, const AlgebraId& id);
/// g0'-character of g-1 (z-part dropped).
FormalCharacter gm1_character(const AlgebraId& id);
/// β(z) for the odd positive roots: 1, or 0 for sl(n|n).
Rational z_grade(const AlgebraId& id);

/// Ext^1(V, C_λ) = 0 for an evaluation factor V and a Kac-like factor with trivial g0'-part.
bool extension_local_check(const AlgebraId& id, const LocalFactor& v, const LocalFactor& lam);

/// Candidate factors per point used to close up local blocks; the trivial factor is always added.
using Universe = std::map<Point, std::vector<LocalFactor>>;

struct LocalBlockId {
  LocalFactor representative;
  std::vector<LocalFactor> members;
  friend bool operator==(const LocalBlockId& a, const LocalBlockId& b) { return a.representative == b.representative; }
};

/// Non-default local blocks; every absent point carries the class of the trivial module.
struct SpectralCharacter {
  std::map<Point, LocalBlockId> assignments;
  friend bool operator==(const SpectralCharacter& a, const SpectralCharacter& b) { return a.assignments == b.assignments; }
};

inline const char* kUniverseCaveat =
    "blocks are connected components of the Ext graph inside the supplied universe: 'true' is certain, "
    "'false' means not connected within this universe";

/// Connected components of the Ext-nonvanishing graph on universe[p] plus the trivial factor.
std::vector<std::vector<LocalFactor>> local_blocks(const AlgebraId& id, const Point& p, const Universe& universe);
SpectralCharacter spectral_character(const ModuleDescriptor& desc, const Universe& universe);
bool same_block(const ModuleDescriptor& d1, const ModuleDescriptor& d2, const Universe& universe);
/// Factors of both descriptors, grouped by point.
Universe auto_universe(const ModuleDescriptor& d1, const ModuleDescriptor& d2);
/// Block question for the affine superalgebra, answered over the loop algebra C[t, t^-1].
bool affine_reduction_note(const ModuleDescriptor& d1, const ModuleDescriptor& d2, const Universe& universe);

}  // namespace superkac
