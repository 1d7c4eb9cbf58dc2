#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "superkac/checks.hpp"
#include "superkac/errors.hpp"
#include "superkac/json_io.hpp"

using namespace superkac;
using io::json;

namespace {

enum Exit { kOk = 0, kMalformed = 1, kDomain = 2, kSizeCap = 3, kVerifyFailed = 4, kInternal = 5 };

// An argument starting with '{' or '[' is inline JSON, "-" is standard input, anything else a path.
json read_input(const std::string& arg) {
  std::string text;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    text = arg;
  } else if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(arg);
    if (!in) throw io::SchemaError("cannot read input file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return json::parse(text);
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw io::SchemaError(std::string("missing key '") + key + "'");
  return j.at(key);
}

AlgebraId algebra_of(const json& j) { return io::algebra_from(need(j, "algebra")); }

// One factor: {"algebra", "factor": {...}} or a descriptor with exactly one factor (not normalized).
std::pair<AlgebraId, LocalFactor> factor_input(const json& j) {
  const AlgebraId id = algebra_of(j);
  if (j.contains("factor")) return {id, io::factor_from(j["factor"], id)};
  const json& fs = need(j, "factors");
  if (!fs.is_array() || fs.size() != 1) throw io::SchemaError("expected exactly one factor");
  return {id, io::factor_from(fs[0], id)};
}

// K_{A/I}(Θ ⊠ V) at the origin; I defaults to k_Θ.
struct KacInput {
  AlgebraId id;
  ZFunctional theta;
  Ideal ideal;
  Ideal k;
  G0IrrepLabel vlabel;
  int order;
};

KacInput kac_input(const json& j, const std::string& vlabel_override) {
  const AlgebraId id = algebra_of(j);
  ZFunctional theta = io::functional_from(need(j, "theta"));
  const int r = theta.r();
  auto k_in = [&](int order) {
    TruncatedAlgebra alg(r, order);
    return theta.kills_max() ? Ideal::power_of_max(alg, 1) : annihilator_ideal(theta, alg);
  };
  std::optional<Ideal> I;
  if (j.contains("ideal")) {
    I = io::ideal_from(j["ideal"]);
    if (I->algebra().r() != r) throw DomainError("ideal and Θ have different variable counts");
  }
  const int order = std::max(I ? I->algebra().order() : 1, std::max(theta.n(), 1));
  Ideal k = k_in(order);
  Ideal ideal = I ? (I->algebra().order() < order ? I->lift(order) : *I) : k;
  G0IrrepLabel v = trivial_label(id);
  if (!vlabel_override.empty()) {
    json o = vlabel_override == "trivial" ? json("trivial") : json::parse(vlabel_override);
    v = io::vlabel_from(o, id);
  } else if (j.contains("vlabel")) {
    v = io::vlabel_from(j["vlabel"], id);
  }
  return {id, theta, ideal, k, v, order};
}

ExplicitModule build(const KacInput& in, bool carrier_only) {
  auto g = build_superalgebra(in.id);
  auto B = ActingAlgebra::local(Point{RatVec(in.theta.r(), Rational(0))}, in.order);
  return build_kac_like(g, B, 0, in.ideal, in.theta, in.vlabel, carrier_only);
}

// Irreducibility from the classification; for I = k_Θ = m it is the typicality of the highest weight.
bool predicted_irreducible(const KacInput& in) {
  if (in.ideal == in.k && in.k == Ideal::power_of_max(in.k.algebra(), 1)) {
    G0IrrepLabel l = in.vlabel;
    l.hw.z = in.theta.at_one();
    return is_typical(l.hw, in.id);
  }
  return is_irreducible_kac_like(in.theta, in.ideal);
}

long long superdimension(const ExplicitModule& m) {
  long long s = 0;
  for (int i = 0; i < m.dim(); ++i) s += m.odd(i) ? -1 : 1;
  return s;
}

json describe_algebra(const std::string& family, int m, int n) {
  AlgebraId id;
  if (family == "sl") id = make_sl(m, n);
  else if (family == "osp") id = make_osp(n);
  else throw io::SchemaError("family must be \"sl\" or \"osp\"");
  const BorelChoice d0 = distinguished_borel(id);
  const auto pos = positive_roots(d0, id);
  json roots = json::array();
  for (const auto& r : all_roots(id))
    roots.push_back(json{{"root", io::to_json(r)},
                         {"odd", r.odd()},
                         {"positive", std::find(pos.begin(), pos.end(), r) != pos.end()}});
  json g0 = json::array();
  for (const auto& r : g0prime(id).simple_roots) g0.push_back(io::to_json(r));
  json z = json::array();
  for (const auto& x : z_vector(id)) z.push_back(io::to_json(x));
  return json{{"algebra", io::to_json(id)},
              {"name", id.name()},
              {"roots", roots},
              {"positive_even_roots", positive_even_roots(id).size()},
              {"positive_odd_roots", positive_odd_roots(id).size()},
              {"distinguished_borel", io::to_json(d0)},
              {"g0prime_simple_roots", g0},
              {"z", z}};
}

json kac_like(const json& j, const std::string& vlabel, bool search) {
  const KacInput in = kac_input(j, vlabel);
  const ExplicitModule K = build(in, !search);
  G0IrrepLabel l = in.vlabel;
  l.hw.z = in.theta.at_one();
  json out{{"algebra", io::to_json(in.id)},
           {"theta", io::to_json(in.theta)},
           {"ideal", io::to_json(in.ideal)},
           {"vlabel", io::to_json(l.hw)},
           {"d", in.ideal.codim()},
           {"k_codim", in.k.codim()},
           {"dim", K.dim()},
           {"sdim", superdimension(K)},
           {"character", io::to_json(K.character(false))},
           {"supercharacter", io::to_json(K.character(true))},
           {"irreducible", predicted_irreducible(in)}};
  if (search) {
    auto rep = submodule_search(K);
    out["submodule_search"] = json{{"irreducible", rep.is_irreducible},
                                   {"maximal_submodule_dim", rep.maximal_submodule_dim},
                                   {"omega_dim", rep.omega_dim ? json(*rep.omega_dim) : json(nullptr)},
                                   {"z_part_dim", rep.z_part_dim ? json(*rep.z_part_dim) : json(nullptr)}};
  }
  return out;
}

json irreducible(const json& j, const std::string& vlabel, bool oracle) {
  const KacInput in = kac_input(j, vlabel);
  json out{{"irreducible", predicted_irreducible(in)},
           {"ideal_equals_k", in.ideal == in.k},
           {"d", in.ideal.codim()},
           {"k_codim", in.k.codim()}};
  if (oracle) {
    const ExplicitModule K = build(in, false);
    out["submodule_search"] = submodule_search(K).is_irreducible;
    json certs = json::array();
    for (const auto& nhat : maximal_support(in.theta)) {
      auto c = irreducibility_certificate(K, StarPartner{nhat});
      certs.push_back(json{{"nhat", nhat}, {"scalar", io::to_json(c.scalar)}, {"admissible", c.admissible}});
    }
    out["certificates"] = certs;
  }
  return out;
}

json character(const json& j) {
  const ModuleDescriptor d = io::descriptor_from(j);
  const DimChar dc = dimension_and_characters(d);
  return json{{"descriptor", io::to_json(d)},
              {"dim", dc.dim},
              {"sdim", dc.sdim},
              {"character", io::to_json(dc.ch)},
              {"supercharacter", io::to_json(dc.sch)}};
}

json ext1_verb(const json& a, const json& b, int oracle_order) {
  auto [id, f1] = factor_input(a);
  auto [id2, f2] = factor_input(b);
  if (!(id == id2)) throw DomainError("factors over different superalgebras");
  json out = io::to_json(ext1(id, f1, f2));
  if (oracle_order > 0) {
    if (!(f1.point == f2.point)) throw DomainError("the oracle needs both factors at one point");
    auto g = build_superalgebra(id);
    auto B = ActingAlgebra::local(f1.point, oracle_order);
    out["oracle_dim"] = ext1_koszul(factor_module(g, f1, B, 0), factor_module(g, f2, B, 0));
  }
  return out;
}

json blocks(const json& j) {
  const AlgebraId id = algebra_of(j);
  std::vector<ModuleDescriptor> mods;
  if (j.contains("modules"))
    for (const auto& m : j["modules"]) mods.push_back(io::descriptor_from(m, &id));
  Universe u;
  if (j.contains("universe")) {
    u = io::universe_from(j["universe"], id);
  } else {
    for (const auto& m : mods)
      for (const auto& f : m.factors) {
        auto& v = u[f.point];
        if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
      }
  }
  json local = json::array();
  for (const auto& [p, fs] : u) {
    json bs = json::array();
    for (const auto& b : local_blocks(id, p, u)) {
      json members = json::array();
      for (const auto& f : b) members.push_back(io::to_json(f));
      bs.push_back(members);
    }
    local.push_back(json{{"point", io::to_json(p)}, {"blocks", bs}});
  }
  json chars = json::array(), rel = json::array();
  for (const auto& m : mods) chars.push_back(io::to_json(spectral_character(m, u)));
  for (const auto& a : mods) {
    json row = json::array();
    for (const auto& b : mods) row.push_back(same_block(a, b, u));
    rel.push_back(row);
  }
  return json{{"caveat", kUniverseCaveat}, {"local_blocks", local}, {"spectral_characters", chars}, {"same_block", rel}};
}

json change_borel(const json& j, bool oracle) {
  const AlgebraId id = algebra_of(j);
  std::optional<ModuleDescriptor> desc;
  HighestWeightData psi;
  if (j.contains("descriptor")) {
    desc = io::descriptor_from(j["descriptor"], &id);
    psi = highest_weight_data(*desc);
  } else {
    psi = io::highest_weight_from(need(j, "psi"), id);
  }
  std::vector<Root> chain;
  for (const auto& r : need(j, "chain")) chain.push_back(io::root_from(r, id));
  const BorelChoice d0 = distinguished_borel(id);
  BorelChoice b = d0;
  for (const auto& a : chain) b = odd_reflection(b, a, id);
  const HighestWeightData out = change_of_borel(psi, chain, d0, id);
  json res{{"psi", io::to_json(out)}, {"borel", io::to_json(b)}};
  if (oracle) {
    if (!desc) throw DomainError("the oracle needs a descriptor");
    auto M = descriptor_module(build_superalgebra(id), *desc, 1);
    const auto found = highest_weight_data(highest_weight_vector(M, b), M.acting());
    res["oracle_psi"] = io::to_json(found);
    res["oracle_agrees"] = found == out;
  }
  return res;
}

json verify(const std::vector<int>& which, bool& all_pass) {
  std::vector<int> ns = which;
  if (ns.empty())
    for (int n = 1; n <= check_count(); ++n) ns.push_back(n);
  json results = json::array();
  all_pass = true;
  for (int n : ns) {
    auto r = run_check(n);
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.number << " " << r.title << "\n";
    results.push_back(json{{"number", r.number},
                           {"title", r.title},
                           {"pass", r.pass},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
    all_pass = all_pass && r.pass;
  }
  return json{{"results", results}, {"pass", all_pass}};
}

int fail(const char* kind, const std::string& message, int code) {
  std::cout << json{{"error", json{{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-like modules, Ext and blocks for map superalgebras"};
  app.require_subcommand(1);

  std::string family = "sl";
  int m = 1, n = 2;
  auto* desc_cmd = app.add_subcommand("describe-algebra", "roots and the distinguished Borel");
  desc_cmd->add_option("--family", family, "sl or osp")->required();
  desc_cmd->add_option("--m", m, "m for sl(m|n)");
  desc_cmd->add_option("--n", n, "n for sl(m|n) or osp(2|2n)")->required();

  std::string input, input2, vlabel;
  bool search = false, oracle = false;
  int oracle_order = 0;
  std::vector<int> criteria;

  auto* kac_cmd = app.add_subcommand("kac-like", "dimension and characters of K_{A/I}(Θ ⊠ V)");
  kac_cmd->add_option("input", input, "JSON path, inline JSON or -")->required();
  kac_cmd->add_option("--vlabel", vlabel, "\"trivial\" or a weight object, overriding the input");
  kac_cmd->add_flag("--search", search, "build the action and run the submodule search");

  auto* irr_cmd = app.add_subcommand("irreducible", "irreducibility of K_{A/I}(Θ ⊠ V)");
  irr_cmd->add_option("input", input, "JSON path, inline JSON or -")->required();
  irr_cmd->add_option("--vlabel", vlabel, "\"trivial\" or a weight object, overriding the input");
  irr_cmd->add_flag("--oracle", oracle, "confirm by submodule search and certificates");

  auto* ch_cmd = app.add_subcommand("character", "dimension and characters of a module descriptor");
  ch_cmd->add_option("input", input, "descriptor JSON")->required();

  auto* ext_cmd = app.add_subcommand("ext1", "Ext^1 between two factors");
  ext_cmd->add_option("first", input, "first factor JSON")->required();
  ext_cmd->add_option("second", input2, "second factor JSON")->required();
  ext_cmd->add_option("--oracle-order", oracle_order, "also run the Koszul oracle over g[A/m^N]");

  auto* blk_cmd = app.add_subcommand("blocks", "local blocks, spectral characters and same_block");
  blk_cmd->add_option("input", input, "JSON with algebra, universe and modules")->required();

  auto* cb_cmd = app.add_subcommand("change-borel", "highest weight after odd reflections");
  cb_cmd->add_option("input", input, "JSON with algebra, descriptor or psi, and chain")->required();
  cb_cmd->add_flag("--oracle", oracle, "compare with the realized module");

  auto* ver_cmd = app.add_subcommand("verify", "run the acceptance property suite");
  ver_cmd->add_option("--criteria", criteria, "criterion numbers (default: all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    json out;
    int code = kOk;
    if (*desc_cmd) out = describe_algebra(family, m, n);
    else if (*kac_cmd) out = kac_like(read_input(input), vlabel, search);
    else if (*irr_cmd) out = irreducible(read_input(input), vlabel, oracle);
    else if (*ch_cmd) out = character(read_input(input));
    else if (*ext_cmd) out = ext1_verb(read_input(input), read_input(input2), oracle_order);
    else if (*blk_cmd) out = blocks(read_input(input));
    else if (*cb_cmd) out = change_borel(read_input(input), oracle);
    else if (*ver_cmd) {
      bool ok = true;
      out = verify(criteria, ok);
      code = ok ? kOk : kVerifyFailed;
    }
    std::cout << out.dump(2) << "\n";
    return code;
  } catch (const json::exception& e) {
    return fail("malformed", e.what(), kMalformed);
  } catch (const io::SchemaError& e) {
    return fail("schema", e.what(), kMalformed);
  } catch (const SizeCapError& e) {
    return fail("size_cap", e.what(), kSizeCap);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), kDomain);
  } catch (const InternalError& e) {
    return fail("internal", e.what(), kInternal);
  }
}
