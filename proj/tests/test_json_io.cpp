#include <doctest.h>

#include "superkac/errors.hpp"
#include "superkac/json_io.hpp"

using namespace superkac;
using io::json;

namespace {

Point pt(int a) { return Point{{Rational(a)}}; }

ZFunctional theta1(std::vector<Rational> v) {
  std::map<Exponent, Rational> m;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) m[{i}] = v[i];
  return ZFunctional(1, static_cast<int>(v.size()), m);
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(io::to_json(Rational(-3, 4)) == json("-3/4"));
  CHECK(io::to_json(Rational(5)) == json("5"));
  CHECK(io::rational_from(json("6/8")) == Rational(3, 4));
  CHECK(io::rational_from(json(7)) == Rational(7));
  CHECK_THROWS_AS(io::rational_from(json(0.5)), io::SchemaError);
  CHECK_THROWS_AS(io::rational_from(json("1/0")), io::SchemaError);
  CHECK_THROWS_AS(io::rational_from(json("x")), io::SchemaError);
}

TEST_CASE("descriptors round-trip") {
  for (auto id : {make_sl(1, 2), make_sl(2, 3), make_osp(2)}) {
    const int k = static_cast<int>(zero_weight(id).hprime.size());
    Weight w = zero_weight(id);
    w.hprime[0] = 1;
    w.z = Rational(-2, 3);
    G0IrrepLabel v = trivial_label(id);
    v.hw.hprime[k - 1] = 2;
    Point half{{Rational(1, 2)}};
    auto d = normalize(id, {make_evaluation(pt(3), w), make_kac_like(pt(0), theta1({1, 1}), v),
                            make_kac_like(half, theta1({Rational(-1, 3), 0, 2}), trivial_label(id))});
    const json j = io::to_json(d);
    CHECK(io::descriptor_from(json::parse(j.dump())) == d);
    CHECK(io::to_json(io::descriptor_from(j)) == j);
  }
  // Two variables.
  auto id = make_sl(1, 2);
  Point p2{{Rational(1, 2), Rational(-1)}};
  ZFunctional th2(2, 3, {{{0, 0}, Rational(1)}, {{1, 1}, Rational(3, 5)}});
  auto d2 = normalize(id, {make_kac_like(p2, th2, trivial_label(id)),
                           make_evaluation(Point{{Rational(0), Rational(0)}}, Weight{{Rational(1)}, Rational(1)})});
  CHECK(io::descriptor_from(io::to_json(d2)) == d2);
}

TEST_CASE("other values round-trip") {
  auto id = make_sl(1, 2);
  auto th = ZFunctional(2, 3, {{{0, 0}, Rational(2)}, {{2, 0}, Rational(-1, 7)}});
  CHECK(io::functional_from(io::to_json(th)) == th);
  TruncatedAlgebra alg(2, 3);
  auto I = annihilator_ideal(th, alg);
  CHECK(io::ideal_from(io::to_json(I)) == I);
  CHECK(io::ideal_from(json{{"r", 2}, {"n", 3}, {"power_of_max", 2}}) == Ideal::power_of_max(alg, 2));
  for (const auto& r : all_roots(id)) CHECK(io::root_from(io::to_json(r), id) == r);
  Weight w{{Rational(3)}, Rational(1, 3)};
  CHECK(io::weight_from(io::to_json(w), id) == w);
  auto desc = normalize(id, {make_kac_like(pt(0), theta1({1, 1}), trivial_label(id))});
  auto hw = highest_weight_data(desc);
  CHECK(io::highest_weight_from(io::to_json(hw), id) == hw);
}

TEST_CASE("schema and domain errors") {
  auto id = make_sl(1, 2);
  CHECK_THROWS_AS(io::algebra_from(json{{"family", "so"}, {"n", 2}}), io::SchemaError);
  CHECK_THROWS_AS(io::algebra_from(json{{"family", "sl"}}), io::SchemaError);
  CHECK_THROWS_AS(io::weight_from(json{{"hprime", {"1", "2"}}}, id), DomainError);
  CHECK_THROWS_AS(io::factor_from(json{{"kind", "other"}, {"point", {"0"}}}, id), io::SchemaError);
  CHECK_THROWS_AS(io::ideal_from(json{{"r", 1}, {"n", 2}, {"basis", json::array({json::array({"0", "0"}), json::array({"1", "0"})})}}),
                  DomainError);
  CHECK_THROWS_AS(io::ideal_from(json{{"r", 1}, {"n", 2}, {"basis", json::array({json::array({"1"})})}}), io::SchemaError);
  // Object keys come out sorted.
  const std::string s = io::to_json(Weight{{Rational(1)}, Rational(2)}).dump();
  CHECK(s.find("hprime") < s.find("\"z\""));
}
