#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superkac/rootdata.hpp"

namespace superkac {

/// Finitely supported integer combination of e^λ.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  static FormalCharacter one(const AlgebraId& id);
  static FormalCharacter monomial(const Weight& w, long long c = 1);

  const std::map<Weight, long long>& terms() const { return terms_; }
  long long coefficient(const Weight& w) const;
  void add(const Weight& w, long long c);

  friend FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b);
  friend FormalCharacter operator-(const FormalCharacter& a, const FormalCharacter& b);
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Weight, long long> terms_;
};

/// Highest weight of an irreducible g0 = g0' ⊕ z module.
struct G0IrrepLabel {
  Weight hw;
  friend bool operator==(const G0IrrepLabel& a, const G0IrrepLabel& b) { return a.hw == b.hw; }
  friend bool operator<(const G0IrrepLabel& a, const G0IrrepLabel& b) { return a.hw < b.hw; }
};

/// Trivial g0'-label with the given z value.
G0IrrepLabel trivial_label(const AlgebraId& id, const Rational& z = 0);
bool is_dominant(const G0IrrepLabel& label, const AlgebraId& id);

FormalCharacter weyl_character(const G0IrrepLabel& label, const AlgebraId& id);
/// Weyl dimension formula, used as an independent check of weyl_character.
long long weyl_dimension(const G0IrrepLabel& label, const AlgebraId& id);
FormalCharacter grassmann_character(const AlgebraId& id, bool super);
FormalCharacter kac_like_character(const G0IrrepLabel& label, int d, const AlgebraId& id, bool super);
/// Character of the adjoint representation of g0' (z-part zero).
FormalCharacter g0prime_adjoint_character(const AlgebraId& id);

long long dimension(const FormalCharacter& ch);
std::vector<std::pair<G0IrrepLabel, long long>> decompose(const FormalCharacter& ch, const AlgebraId& id);

}  // namespace superkac
