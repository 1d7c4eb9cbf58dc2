#include "superkac/charring.hpp"

#include <algorithm>
#include <set>

#include "superkac/errors.hpp"
#include "superkac/linalg.hpp"

namespace superkac {

FormalCharacter FormalCharacter::one(const AlgebraId& id) { return monomial(zero_weight(id)); }

FormalCharacter FormalCharacter::monomial(const Weight& w, long long c) {
  FormalCharacter ch;
  ch.add(w, c);
  return ch;
}

long long FormalCharacter::coefficient(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FormalCharacter::add(const Weight& w, long long c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r = a;
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

FormalCharacter operator-(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r = a;
  for (const auto& [w, c] : b.terms_) r.add(w, -c);
  return r;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter r;
  for (const auto& [w1, c1] : a.terms_)
    for (const auto& [w2, c2] : b.terms_) r.add(w1 + w2, c1 * c2);
  return r;
}

long long dimension(const FormalCharacter& ch) {
  long long s = 0;
  for (const auto& kv : ch.terms()) s += kv.second;
  return s;
}

G0IrrepLabel trivial_label(const AlgebraId& id, const Rational& z) {
  Weight w = zero_weight(id);
  w.z = z;
  return G0IrrepLabel{w};
}

namespace {

// One simple ideal of g0', in Dynkin-label coordinates local to the ideal.
struct Ideal0 {
  int start = 0;
  int size = 0;
  Dense cartan;                        // cartan(i,j) = α_i(h_j)
  RatVec d;                            // (α_i, α_i)/2 for a positive definite normalization
  Dense F;                             // (ω_i, ω_k)
  std::vector<RatVec> pos_roots;       // Dynkin labels
  RatVec height;                       // height(μ) = height · μ
};

Rational ip(const Dense& F, const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (int i = 0; i < F.rows; ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; k < F.cols; ++k)
      if (b[k] != 0) s += a[i] * F(i, k) * b[k];
  }
  return s;
}

Dense inverse(const Dense& A) {
  const int n = A.rows;
  Dense inv(n, n);
  for (int c = 0; c < n; ++c) {
    RatVec e(n), x;
    e[c] = 1;
    if (!solve(A, e, x)) throw InternalError("singular Cartan matrix");
    for (int r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

std::vector<Ideal0> ideals(const AlgebraId& id) {
  const auto g0 = g0prime(id);
  const auto even_pos = positive_even_roots(id);
  std::vector<Ideal0> out;
  for (std::size_t q = 0; q < g0.ideal_start.size(); ++q) {
    Ideal0 I;
    I.start = g0.ideal_start[q];
    I.size = g0.ideal_size[q];
    const int k = I.size;
    I.cartan = Dense(k, k);
    std::vector<Root> simple(g0.simple_roots.begin() + I.start, g0.simple_roots.begin() + I.start + k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) I.cartan(i, j) = pairing(simple[i], simple[j], id);
    for (int i = 0; i < k; ++i) I.d.push_back(abs(form(simple[i].coords, simple[i].coords, id)) / 2);
    Dense Ainv = inverse(I.cartan);
    I.F = Dense(k, k);
    for (int i = 0; i < k; ++i)
      for (int kk = 0; kk < k; ++kk) I.F(i, kk) = Ainv(kk, i) * I.d[i];
    // Positive even roots lying in the span of this ideal's simple roots.
    for (const auto& r : even_pos) {
      const int len = id.coord_count();
      Dense A(len, k);
      for (int j = 0; j < k; ++j)
        for (int i = 0; i < len; ++i) A(i, j) = simple[j].coords[i];
      RatVec rhs(len), x;
      for (int i = 0; i < len; ++i) rhs[i] = r.coords[i];
      if (!solve(A, rhs, x)) continue;
      RatVec labels(k);
      for (int j = 0; j < k; ++j) labels[j] = pairing(r, simple[j], id);
      I.pos_roots.push_back(labels);
    }
    RatVec ones(k, Rational(1));
    I.height.assign(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) I.height[i] += Ainv(i, j) * ones[j];
    out.push_back(std::move(I));
  }
  return out;
}

// Freudenthal recursion for one simple ideal: weight -> multiplicity.
std::map<RatVec, long long> freudenthal(const Ideal0& I, const RatVec& lambda) {
  const int k = I.size;
  RatVec rho(k, Rational(1));
  auto add = [](const RatVec& a, const RatVec& b, const Rational& c) {
    RatVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += c * b[i];
    return r;
  };
  RatVec lr = add(lambda, rho, 1);
  const Rational top = ip(I.F, lr, lr);
  std::map<RatVec, long long> mult;
  mult[lambda] = 1;
  std::set<RatVec> level{lambda};
  std::vector<RatVec> simple_labels;
  for (int i = 0; i < k; ++i) {
    RatVec a(k);
    for (int j = 0; j < k; ++j) a[j] = I.cartan(i, j);
    simple_labels.push_back(a);
  }
  while (!level.empty()) {
    std::set<RatVec> next;
    for (const auto& nu : level)
      for (const auto& a : simple_labels) next.insert(add(nu, a, -1));
    std::set<RatVec> found;
    for (const auto& mu : next) {
      Rational num = 0;
      for (const auto& alpha : I.pos_roots) {
        for (int s = 1;; ++s) {
          RatVec shifted = add(mu, alpha, s);
          Rational h = 0;
          for (int i = 0; i < k; ++i) h += I.height[i] * (shifted[i] - lambda[i]);
          if (h > 0) break;  // above the highest weight
          auto it = mult.find(shifted);
          if (it != mult.end()) num += 2 * Rational(static_cast<long>(it->second)) * ip(I.F, shifted, alpha);
        }
      }
      RatVec mr = add(mu, rho, 1);
      Rational den = top - ip(I.F, mr, mr);
      if (den == 0) {
        if (num != 0) throw InternalError("Freudenthal recursion hit a zero denominator");
        continue;
      }
      Rational m = num / den;
      if (!is_integer(m) || m < 0) throw InternalError("Freudenthal produced a non-integral multiplicity");
      if (m != 0) {
        mult[mu] = to_long(m);
        found.insert(mu);
      }
    }
    level = std::move(found);
  }
  return mult;
}

}  // namespace

bool is_dominant(const G0IrrepLabel& label, const AlgebraId& id) {
  if (label.hw.hprime.size() != g0prime(id).simple_roots.size()) return false;
  for (const auto& x : label.hw.hprime)
    if (!is_integer(x) || x < 0) return false;
  return true;
}

FormalCharacter weyl_character(const G0IrrepLabel& label, const AlgebraId& id) {
  if (!is_dominant(label, id)) throw DomainError("weyl_character: label is not dominant integral for g0'");
  // Product over simple ideals of their Freudenthal characters.
  std::vector<std::pair<RatVec, long long>> acc{{RatVec(), 1}};
  for (const auto& I : ideals(id)) {
    RatVec lam(label.hw.hprime.begin() + I.start, label.hw.hprime.begin() + I.start + I.size);
    auto m = freudenthal(I, lam);
    std::vector<std::pair<RatVec, long long>> next;
    for (const auto& [w, c] : acc)
      for (const auto& [mu, d] : m) {
        RatVec cat = w;
        cat.insert(cat.end(), mu.begin(), mu.end());
        next.emplace_back(std::move(cat), c * d);
      }
    acc = std::move(next);
  }
  FormalCharacter ch;
  for (auto& [w, c] : acc) ch.add(Weight{w, label.hw.z}, c);
  return ch;
}

long long weyl_dimension(const G0IrrepLabel& label, const AlgebraId& id) {
  if (!is_dominant(label, id)) throw DomainError("weyl_dimension: label is not dominant integral for g0'");
  Rational dim = 1;
  for (const auto& I : ideals(id)) {
    RatVec lam(label.hw.hprime.begin() + I.start, label.hw.hprime.begin() + I.start + I.size);
    RatVec rho(I.size, Rational(1)), lr = lam;
    for (int i = 0; i < I.size; ++i) lr[i] += 1;
    for (const auto& a : I.pos_roots) dim *= ip(I.F, lr, a) / ip(I.F, rho, a);
  }
  return to_long(dim);
}

FormalCharacter grassmann_character(const AlgebraId& id, bool super) {
  FormalCharacter ch = FormalCharacter::one(id);
  for (const auto& a : positive_odd_roots(id)) {
    FormalCharacter f = FormalCharacter::one(id);
    f.add(to_weight(-a, id), super ? -1 : 1);
    ch = ch * f;
  }
  return ch;
}

FormalCharacter kac_like_character(const G0IrrepLabel& label, int d, const AlgebraId& id, bool super) {
  if (d < 1) throw DomainError("kac_like_character: d must be at least 1");
  FormalCharacter g = grassmann_character(id, super);
  FormalCharacter ch = weyl_character(label, id);
  for (int i = 0; i < d; ++i) ch = ch * g;
  return ch;
}

FormalCharacter g0prime_adjoint_character(const AlgebraId& id) {
  FormalCharacter ch;
  Weight zero = zero_weight(id);
  for (const auto& r : all_roots(id)) {
    if (r.odd()) continue;
    ch.add(to_weight(r, id), 1);
  }
  ch.add(zero, static_cast<long long>(g0prime(id).simple_roots.size()));
  return ch;
}

std::vector<std::pair<G0IrrepLabel, long long>> decompose(const FormalCharacter& ch, const AlgebraId& id) {
  const auto ids = ideals(id);
  auto height = [&](const Weight& w) {
    Rational h = 0;
    for (const auto& I : ids)
      for (int i = 0; i < I.size; ++i) h += I.height[i] * w.hprime[I.start + i];
    return h;
  };
  std::map<G0IrrepLabel, long long> out;
  FormalCharacter rest = ch;
  while (!rest.terms().empty()) {
    const Weight* best = nullptr;
    Rational bh;
    for (const auto& [w, c] : rest.terms()) {
      Rational h = height(w);
      if (!best || h > bh) {
        best = &w;
        bh = h;
      }
    }
    G0IrrepLabel lab{*best};
    long long c = rest.coefficient(*best);
    if (c < 0 || !is_dominant(lab, id)) throw DomainError("decompose: not a module character");
    out[lab] += c;
    FormalCharacter w = weyl_character(lab, id);
    for (const auto& [mu, d] : w.terms()) rest.add(mu, -c * d);
  }
  return {out.begin(), out.end()};
}

}  // namespace superkac
