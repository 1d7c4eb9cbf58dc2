#include "superkac/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superkac/errors.hpp"
#include "superkac/linalg.hpp"

namespace superkac {

void AlgebraId::validate() const {
  if (family == Family::SL) {
    if (!(1 <= m && m <= n && n > 1)) throw DomainError("sl(m|n) requires 1 <= m <= n and n > 1");
  } else {
    if (n <= 1) throw DomainError("osp(2|2n) requires n > 1");
  }
}

int AlgebraId::coord_count() const { return family == Family::SL ? m + n : 1 + n; }
int AlgebraId::eps_count() const { return family == Family::SL ? m : 1; }

std::string AlgebraId::name() const {
  if (family == Family::SL) return "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return "osp(2|" + std::to_string(2 * n) + ")";
}

AlgebraId make_sl(int m, int n) {
  AlgebraId id{Family::SL, m, n};
  id.validate();
  return id;
}

AlgebraId make_osp(int n) {
  AlgebraId id{Family::OSP, 1, n};
  id.validate();
  return id;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  r.parity = (a.odd() != b.odd()) ? Parity::Odd : Parity::Even;
  return r;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r.coords.size(); ++i) os << (i ? "," : "") << r.coords[i];
  os << "]" << (r.odd() ? "o" : "e");
  return os.str();
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.hprime.size(); ++i) r.hprime[i] += b.hprime[i];
  r.z += b.z;
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.hprime.size(); ++i) r.hprime[i] -= b.hprime[i];
  r.z -= b.z;
  return r;
}

Weight operator*(const Rational& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.hprime) x *= c;
  r.z *= c;
  return r;
}

bool Weight::is_zero() const {
  return z == 0 && std::all_of(hprime.begin(), hprime.end(), [](const Rational& x) { return x == 0; });
}

Weight zero_weight(const AlgebraId& id) { return Weight{RatVec(g0prime(id).simple_roots.size()), 0}; }

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.hprime.size(); ++i) os << (i ? "," : "") << to_string(w.hprime[i]);
  os << "; z=" << to_string(w.z) << ")";
  return os.str();
}

namespace {

std::vector<int> unit(int len, int i, int c = 1) {
  std::vector<int> v(len, 0);
  v[i] = c;
  return v;
}

// Parity of a coordinate pattern, or -1 if it is not a root.
int classify_pattern(const std::vector<int>& c, const AlgebraId& id) {
  const int len = id.coord_count();
  if (static_cast<int>(c.size()) != len) return -1;
  const int E = id.eps_count();
  std::vector<int> nz;
  for (int i = 0; i < len; ++i)
    if (c[i] != 0) nz.push_back(i);
  if (id.family == Family::SL) {
    if (nz.size() != 2) return -1;
    if (c[nz[0]] + c[nz[1]] != 0 || std::abs(c[nz[0]]) != 1) return -1;
    bool e0 = nz[0] < E, e1 = nz[1] < E;
    return e0 != e1 ? 1 : 0;
  }
  // osp(2|2n): ε is coordinate 0.
  if (nz.size() == 1) {
    int i = nz[0];
    return (i >= 1 && std::abs(c[i]) == 2) ? 0 : -1;
  }
  if (nz.size() == 2) {
    if (std::abs(c[nz[0]]) != 1 || std::abs(c[nz[1]]) != 1) return -1;
    return nz[0] == 0 ? 1 : 0;
  }
  return -1;
}

}  // namespace

std::vector<Root> all_roots(const AlgebraId& id) {
  id.validate();
  const int len = id.coord_count();
  std::vector<Root> out;
  if (id.family == Family::SL) {
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) {
        if (i == j) continue;
        std::vector<int> c(len, 0);
        c[i] = 1;
        c[j] = -1;
        out.push_back(make_root(c, id));
      }
  } else {
    for (int i = 1; i < len; ++i) {
      out.push_back(make_root(unit(len, i, 2), id));
      out.push_back(make_root(unit(len, i, -2), id));
      for (int j = i + 1; j < len; ++j)
        for (int s : {1, -1})
          for (int t : {1, -1}) {
            std::vector<int> c(len, 0);
            c[i] = s;
            c[j] = t;
            out.push_back(make_root(c, id));
          }
      for (int s : {1, -1})
        for (int t : {1, -1}) {
          std::vector<int> c(len, 0);
          c[0] = s;
          c[i] = t;
          out.push_back(make_root(c, id));
        }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_root(const std::vector<int>& coords, const AlgebraId& id) { return classify_pattern(coords, id) >= 0; }

Root make_root(const std::vector<int>& coords, const AlgebraId& id) {
  int p = classify_pattern(coords, id);
  if (p < 0) {
    Root r{coords, Parity::Even};
    throw DomainError("not a root of " + id.name() + ": " + to_string(r));
  }
  return Root{coords, p ? Parity::Odd : Parity::Even};
}

Rational form(const std::vector<int>& a, const std::vector<int>& b, const AlgebraId& id) {
  const int E = id.eps_count();
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (static_cast<int>(i) < E ? 1 : -1) * static_cast<long>(a[i]) * b[i];
  return Rational(s);
}

Rational form(const RatVec& a, const RatVec& b, const AlgebraId& id) {
  const int E = id.eps_count();
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(i) < E)
      s += a[i] * b[i];
    else
      s -= a[i] * b[i];
  }
  return s;
}

RatVec coroot_vector(const Root& alpha, const AlgebraId& id) {
  const int E = id.eps_count();
  Rational c = 1;
  if (!alpha.odd()) c = Rational(2) / form(alpha.coords, alpha.coords, id);
  RatVec d(alpha.coords.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = c * (static_cast<int>(i) < E ? alpha.coords[i] : -alpha.coords[i]);
  return d;
}

RatVec z_vector(const AlgebraId& id) {
  const int len = id.coord_count();
  RatVec d(len);
  if (id.family == Family::OSP) {
    d[0] = 1;
    return d;
  }
  if (id.m == id.n) {
    for (auto& x : d) x = 1;
    return d;
  }
  // diag(a I_m, b I_n) with m a = n b (supertraceless) and a - b = 1.
  Rational a(id.n, id.n - id.m), b(id.m, id.n - id.m);
  a.canonicalize();
  b.canonicalize();
  for (int i = 0; i < len; ++i) d[i] = i < id.m ? a : b;
  return d;
}

Rational pairing(const Root& beta, const Root& alpha, const AlgebraId& id) {
  if (!is_root(beta.coords, id) || !is_root(alpha.coords, id)) throw DomainError("pairing: argument is not a root");
  RatVec d = coroot_vector(make_root(alpha.coords, id), id);
  Rational s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * beta.coords[i];
  return s;
}

BorelChoice distinguished_borel(const AlgebraId& id) {
  id.validate();
  const int len = id.coord_count();
  BorelChoice b;
  auto diff = [&](int i, int j) {
    std::vector<int> c(len, 0);
    c[i] = 1;
    c[j] = -1;
    return make_root(c, id);
  };
  if (id.family == Family::SL) {
    for (int i = 0; i + 1 < len; ++i) b.simple_roots.push_back(diff(i, i + 1));
  } else {
    for (int i = 0; i + 1 < len; ++i) b.simple_roots.push_back(diff(i, i + 1));
    b.simple_roots.push_back(make_root(unit(len, len - 1, 2), id));
  }
  return b;
}

RatVec simple_coefficients(const Root& root, const BorelChoice& delta, const AlgebraId& id) {
  const int len = id.coord_count();
  const int k = static_cast<int>(delta.simple_roots.size());
  Dense A(len, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < len; ++i) A(i, j) = delta.simple_roots[j].coords[i];
  RatVec b(len), x;
  for (int i = 0; i < len; ++i) b[i] = root.coords[i];
  if (!solve(A, b, x)) return {};
  return x;
}

bool is_valid_base(const BorelChoice& delta, const AlgebraId& id) {
  const int len = id.coord_count();
  const int k = static_cast<int>(delta.simple_roots.size());
  Dense A(len, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < len; ++i) A(i, j) = delta.simple_roots[j].coords[i];
  // Rank equal to the number of simple roots and to the rank of the root lattice.
  Dense R(static_cast<int>(all_roots(id).size()), len);
  {
    auto roots = all_roots(id);
    for (std::size_t r = 0; r < roots.size(); ++r)
      for (int i = 0; i < len; ++i) R(static_cast<int>(r), i) = roots[r].coords[i];
  }
  if (rank(A) != k || rank(R) != k) return false;
  for (const auto& s : delta.simple_roots)
    if (!is_root(s.coords, id)) return false;
  for (const auto& r : all_roots(id)) {
    RatVec c = simple_coefficients(r, delta, id);
    if (c.empty()) return false;
    bool pos = true, neg = true;
    for (const auto& x : c) {
      if (!is_integer(x)) return false;
      if (x < 0) pos = false;
      if (x > 0) neg = false;
    }
    if (!pos && !neg) return false;
  }
  return true;
}

std::vector<Root> positive_roots(const BorelChoice& delta, const AlgebraId& id) {
  std::vector<Root> out;
  for (const auto& r : all_roots(id)) {
    RatVec c = simple_coefficients(r, delta, id);
    if (c.empty()) throw InternalError("root outside the span of the simple roots");
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) out.push_back(r);
  }
  return out;
}

std::vector<Root> positive_odd_roots(const AlgebraId& id) {
  std::vector<Root> out;
  for (const auto& r : positive_roots(distinguished_borel(id), id))
    if (r.odd()) out.push_back(r);
  return out;
}

std::vector<Root> positive_even_roots(const AlgebraId& id) {
  std::vector<Root> out;
  for (const auto& r : positive_roots(distinguished_borel(id), id))
    if (!r.odd()) out.push_back(r);
  return out;
}

BorelChoice odd_reflection(const BorelChoice& delta, const Root& alpha, const AlgebraId& id) {
  auto it = std::find(delta.simple_roots.begin(), delta.simple_roots.end(), alpha);
  if (it == delta.simple_roots.end()) throw PreconditionError("odd_reflection: root is not simple");
  Root a = make_root(alpha.coords, id);
  if (!a.odd()) throw PreconditionError("odd_reflection: root is not odd");
  if (pairing(a, a, id) != 0) throw PreconditionError("odd_reflection: root is not isotropic");
  BorelChoice out;
  for (const auto& beta : delta.simple_roots) {
    if (beta == a)
      out.simple_roots.push_back(-a);
    else if (pairing(a, beta, id) != 0 || pairing(beta, a, id) != 0)
      out.simple_roots.push_back(beta + a);
    else
      out.simple_roots.push_back(beta);
  }
  out.reflection_chain = delta.reflection_chain;
  out.reflection_chain.push_back(a);
  if (!is_valid_base(out, id)) throw InternalError("odd reflection produced an invalid base");
  return out;
}

G0PrimeData g0prime(const AlgebraId& id) {
  G0PrimeData g;
  const int len = id.coord_count();
  auto diff = [&](int i, int j) {
    std::vector<int> c(len, 0);
    c[i] = 1;
    c[j] = -1;
    return make_root(c, id);
  };
  if (id.family == Family::SL) {
    if (id.m >= 2) {
      g.ideal_start.push_back(0);
      g.ideal_size.push_back(id.m - 1);
      for (int i = 0; i + 1 < id.m; ++i) g.simple_roots.push_back(diff(i, i + 1));
    }
    g.ideal_start.push_back(static_cast<int>(g.simple_roots.size()));
    g.ideal_size.push_back(id.n - 1);
    for (int j = 0; j + 1 < id.n; ++j) g.simple_roots.push_back(diff(id.m + j, id.m + j + 1));
  } else {
    g.ideal_start.push_back(0);
    g.ideal_size.push_back(id.n);
    for (int j = 1; j + 1 < len; ++j) g.simple_roots.push_back(diff(j, j + 1));
    g.simple_roots.push_back(make_root(unit(len, len - 1, 2), id));
  }
  return g;
}

ZDecomposition z_decomposition(const Root& beta, const AlgebraId& id) {
  Root b = make_root(beta.coords, id);
  auto odd_pos = positive_odd_roots(id);
  if (!b.odd() || std::find(odd_pos.begin(), odd_pos.end(), b) == odd_pos.end())
    throw PreconditionError("z_decomposition: beta must be a positive odd root");
  const auto g0 = g0prime(id);
  const int len = id.coord_count();
  const int k = 1 + static_cast<int>(g0.simple_roots.size());
  Dense A(len, k);
  RatVec hb = coroot_vector(b, id);
  for (int i = 0; i < len; ++i) A(i, 0) = hb[i];
  for (int j = 1; j < k; ++j) {
    RatVec h = coroot_vector(g0.simple_roots[j - 1], id);
    for (int i = 0; i < len; ++i) A(i, j) = h[i];
  }
  RatVec x;
  if (!solve(A, z_vector(id), x)) throw InternalError("z_decomposition: singular solve");
  ZDecomposition out{x[0], RatVec(x.begin() + 1, x.end())};
  if (out.c_beta == 0) throw InternalError("z_decomposition: c_beta vanished");
  return out;
}

Weight to_weight(const RatVec& coords, const AlgebraId& id) {
  const auto g0 = g0prime(id);
  Weight w;
  for (const auto& s : g0.simple_roots) {
    RatVec d = coroot_vector(s, id);
    Rational v = 0;
    for (std::size_t i = 0; i < d.size(); ++i) v += d[i] * coords[i];
    w.hprime.push_back(v);
  }
  RatVec dz = z_vector(id);
  for (std::size_t i = 0; i < dz.size(); ++i) w.z += dz[i] * coords[i];
  return w;
}

Weight to_weight(const Root& root, const AlgebraId& id) {
  RatVec c(root.coords.begin(), root.coords.end());
  return to_weight(c, id);
}

RatVec to_coords(const Weight& w, const AlgebraId& id) {
  const auto g0 = g0prime(id);
  const int len = id.coord_count();
  const int k = static_cast<int>(g0.simple_roots.size());
  if (static_cast<int>(w.hprime.size()) != k) throw DomainError("weight has the wrong number of Dynkin labels");
  Dense A(k + 1, len);
  RatVec rhs(k + 1), x;
  for (int j = 0; j < k; ++j) {
    RatVec d = coroot_vector(g0.simple_roots[j], id);
    for (int i = 0; i < len; ++i) A(j, i) = d[i];
    rhs[j] = w.hprime[j];
  }
  RatVec dz = z_vector(id);
  for (int i = 0; i < len; ++i) A(k, i) = dz[i];
  rhs[k] = w.z;
  if (!solve(A, rhs, x)) throw InternalError("to_coords: inconsistent system");
  return x;
}

RatVec cartan_coords(const RatVec& diag, const AlgebraId& id) {
  const auto g0 = g0prime(id);
  const int len = id.coord_count();
  const int k = static_cast<int>(g0.simple_roots.size());
  Dense A(len, k + 1);
  for (int j = 0; j < k; ++j) {
    RatVec d = coroot_vector(g0.simple_roots[j], id);
    for (int i = 0; i < len; ++i) A(i, j) = d[i];
  }
  RatVec dz = z_vector(id);
  for (int i = 0; i < len; ++i) A(i, k) = dz[i];
  RatVec x;
  if (!solve(A, diag, x)) throw DomainError("cartan_coords: vector is not in the Cartan subalgebra");
  return x;
}

Rational eval_coroot(const Weight& w, const Root& alpha, const AlgebraId& id) {
  RatVec c = cartan_coords(coroot_vector(make_root(alpha.coords, id), id), id);
  Rational s = c.back() * w.z;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) s += c[i] * w.hprime[i];
  return s;
}

}  // namespace superkac
