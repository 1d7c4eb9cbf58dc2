#include "superkac/json_io.hpp"

#include "superkac/errors.hpp"

namespace superkac::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing key '") + key + "'");
  return *it;
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& array_from(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

RatVec ratvec_from(const json& j, const char* what) {
  RatVec v;
  for (const auto& x : array_from(j, what)) v.push_back(rational_from(x));
  return v;
}

json ratvec_to(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Exponent exponent_from(const json& j) {
  Exponent e;
  for (const auto& x : array_from(j, "exponent")) e.push_back(int_from(x, "exponent entry"));
  return e;
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError("bad rational '" + j.get<std::string>() + "': " + e.what());
  }
}

json to_json(const AlgebraId& id) {
  return json{{"family", id.family == Family::SL ? "sl" : "osp"}, {"m", id.m}, {"n", id.n}};
}

AlgebraId algebra_from(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) throw SchemaError("family must be a string");
  const std::string f = fam.get<std::string>();
  const int n = int_from(field(j, "n"), "n");
  AlgebraId id;
  if (f == "sl") id = make_sl(j.contains("m") ? int_from(j["m"], "m") : 1, n);
  else if (f == "osp") id = make_osp(n);
  else throw SchemaError("family must be \"sl\" or \"osp\"");
  return id;
}

json to_json(const Root& r) { return r.coords; }

Root root_from(const json& j, const AlgebraId& id) {
  std::vector<int> c;
  for (const auto& x : array_from(j, "root")) c.push_back(int_from(x, "root coordinate"));
  return make_root(c, id);
}

json to_json(const Weight& w) { return json{{"hprime", ratvec_to(w.hprime)}, {"z", to_json(w.z)}}; }

Weight weight_from(const json& j, const AlgebraId& id) {
  Weight w;
  w.hprime = ratvec_from(field(j, "hprime"), "hprime");
  if (w.hprime.size() != zero_weight(id).hprime.size())
    throw DomainError("weight needs " + std::to_string(zero_weight(id).hprime.size()) + " Dynkin labels");
  w.z = j.contains("z") ? rational_from(j["z"]) : Rational(0);
  return w;
}

json to_json(const Point& p) { return ratvec_to(p.coords); }

Point point_from(const json& j) { return Point{ratvec_from(j, "point")}; }

json to_json(const ZFunctional& theta) {
  json vals = json::array();
  for (const auto& [e, v] : theta.values()) vals.push_back(json{{"exp", e}, {"val", to_json(v)}});
  return json{{"r", theta.r()}, {"n", theta.n()}, {"values", vals}};
}

ZFunctional functional_from(const json& j) {
  const int r = int_from(field(j, "r"), "r");
  const int n = int_from(field(j, "n"), "n");
  std::map<Exponent, Rational> vals;
  for (const auto& x : array_from(field(j, "values"), "values")) {
    Exponent e = exponent_from(field(x, "exp"));
    if (vals.count(e)) throw SchemaError("repeated exponent in functional");
    vals[e] = rational_from(field(x, "val"));
  }
  return ZFunctional(r, n, vals);
}

json to_json(const Ideal& I) {
  json basis = json::array();
  for (const auto& v : I.basis()) {
    RatVec dense(I.algebra().dim(), Rational(0));
    for (const auto& [i, x] : v.entries()) dense[i] = x;
    basis.push_back(ratvec_to(dense));
  }
  json monos = json::array();
  for (const auto& e : I.algebra().basis()) monos.push_back(e);
  return json{{"r", I.algebra().r()}, {"n", I.algebra().order()}, {"monomials", monos}, {"basis", basis}};
}

Ideal ideal_from(const json& j) {
  TruncatedAlgebra alg(int_from(field(j, "r"), "r"), int_from(field(j, "n"), "n"));
  if (j.contains("power_of_max")) return Ideal::power_of_max(alg, int_from(j["power_of_max"], "power_of_max"));
  std::vector<SparseVec> gens;
  for (const auto& row : array_from(field(j, "basis"), "basis")) {
    RatVec dense = ratvec_from(row, "basis vector");
    if (static_cast<int>(dense.size()) != alg.dim())
      throw SchemaError("basis vector needs " + std::to_string(alg.dim()) + " monomial coordinates");
    SparseVec v;
    for (int i = 0; i < alg.dim(); ++i) v.push(i, dense[i]);
    gens.push_back(v);
  }
  Ideal I(alg, gens);
  if (!I.is_ideal()) throw DomainError("basis does not span an ideal");
  return I;
}

G0IrrepLabel vlabel_from(const json& j, const AlgebraId& id) {
  if (j.is_string()) {
    if (j.get<std::string>() != "trivial") throw SchemaError("vlabel must be \"trivial\" or a weight object");
    return trivial_label(id);
  }
  return G0IrrepLabel{weight_from(j, id)};
}

json to_json(const LocalFactor& f) {
  json j{{"point", to_json(f.point)}};
  if (f.is_evaluation()) {
    j["kind"] = "eval";
    j["hw"] = to_json(f.evaluation().hw);
  } else {
    j["kind"] = "kac";
    j["theta"] = to_json(f.kac_like().theta);
    j["vlabel"] = to_json(f.kac_like().vlabel.hw);
  }
  return j;
}

LocalFactor factor_from(const json& j, const AlgebraId& id) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  Point p = point_from(field(j, "point"));
  if (kind == "eval") return make_evaluation(p, weight_from(field(j, "hw"), id));
  if (kind == "kac") {
    G0IrrepLabel lab = j.contains("vlabel") ? vlabel_from(j["vlabel"], id) : trivial_label(id);
    return make_kac_like(p, functional_from(field(j, "theta")), lab);
  }
  throw SchemaError("kind must be \"eval\" or \"kac\"");
}

json to_json(const ModuleDescriptor& d) {
  json fs = json::array();
  for (const auto& f : d.factors) fs.push_back(to_json(f));
  return json{{"algebra", to_json(d.id)}, {"factors", fs}};
}

ModuleDescriptor descriptor_from(const json& j, const AlgebraId* fallback) {
  if (!j.is_object()) throw SchemaError("descriptor must be an object");
  AlgebraId id;
  if (j.contains("algebra")) id = algebra_from(j["algebra"]);
  else if (fallback) id = *fallback;
  else throw SchemaError("missing key 'algebra'");
  std::vector<LocalFactor> fs;
  for (const auto& x : array_from(field(j, "factors"), "factors")) fs.push_back(factor_from(x, id));
  return normalize(id, fs);
}

json to_json(const FormalCharacter& ch) {
  json a = json::array();
  for (const auto& [w, c] : ch.terms()) a.push_back(json{{"weight", to_json(w)}, {"multiplicity", c}});
  return a;
}

json to_json(const ExtAnswer& a) {
  json j{{"case", a.case_name()}, {"nonvanishing", to_string(a.nonvanishing)}};
  j["dim"] = a.dim ? json(*a.dim) : json(nullptr);
  if (a.hom == HomCase::Both) j["dim_second"] = a.dim_second ? json(*a.dim_second) : json(nullptr);
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

json to_json(const HighestWeightData& hw) {
  json pts = json::array();
  for (const auto& [p, local] : hw.psi) {
    json vals = json::array();
    for (const auto& [e, w] : local) vals.push_back(json{{"exp", e}, {"weight", to_json(w)}});
    pts.push_back(json{{"point", to_json(p)}, {"values", vals}});
  }
  return json{{"psi", pts}};
}

HighestWeightData highest_weight_from(const json& j, const AlgebraId& id) {
  HighestWeightData hw;
  for (const auto& x : array_from(field(j, "psi"), "psi")) {
    Point p = point_from(field(x, "point"));
    auto& local = hw.psi[p];
    for (const auto& v : array_from(field(x, "values"), "values")) {
      Exponent e = exponent_from(field(v, "exp"));
      if (static_cast<int>(e.size()) != p.r()) throw SchemaError("exponent length differs from the point's");
      local[e] = weight_from(field(v, "weight"), id);
    }
  }
  return hw;
}

json to_json(const BorelChoice& b) {
  json s = json::array(), c = json::array();
  for (const auto& r : b.simple_roots) s.push_back(json{{"root", to_json(r)}, {"odd", r.odd()}});
  for (const auto& r : b.reflection_chain) c.push_back(to_json(r));
  return json{{"simple_roots", s}, {"reflection_chain", c}};
}

json to_json(const SpectralCharacter& chi) {
  json a = json::array();
  for (const auto& [p, blk] : chi.assignments) {
    json members = json::array();
    for (const auto& f : blk.members) members.push_back(to_json(f));
    a.push_back(json{{"point", to_json(p)}, {"representative", to_json(blk.representative)}, {"members", members}});
  }
  return a;
}

Universe universe_from(const json& j, const AlgebraId& id) {
  Universe u;
  for (const auto& x : array_from(j, "universe")) {
    LocalFactor f = factor_from(x, id);
    auto nf = normalize(id, {f}).factors;
    u[f.point].push_back(nf.empty() ? make_evaluation(f.point, zero_weight(id)) : nf.front());
  }
  return u;
}

}  // namespace superkac::io
