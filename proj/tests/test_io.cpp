#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hofa/io.hpp"

using namespace hofa;

namespace {

TensorSequence<Rational> random_sequence(int p, int k, bool zero_mean, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  auto s = TensorSequence<Rational>::zeros(p, k, zero_mean);
  for (int r = s.first_order(); r <= k; ++r) {
    for (auto& v : s.order(r).data()) v = Rational(num(rng), 1 + (num(rng) & 3));
  }
  return s;
}

}  // namespace

TEST_CASE("tensor JSON round trip, rational") {
  SymTensor<Rational> t(3, 2);
  t({1, 2}) = Rational(-5, 3);
  t({3, 3}) = Rational(7);
  const Json j = tensor_to_json(t);
  CHECK(j["p"] == 3);
  CHECK(j["order"] == 2);
  CHECK(j["scalar"] == "rational");
  // zero entries are omitted
  CHECK(j["entries"].size() == 2);
  CHECK(j["entries"][0]["idx"] == Json::array({1, 2}));
  CHECK(j["entries"][0]["val"] == "-5/3");
  const auto back = tensor_from_json_rational(j);
  CHECK(back == t);
}

TEST_CASE("tensor JSON round trip, float") {
  SymTensor<double> t(2, 3);
  t({1, 1, 2}) = 0.25;
  t({2, 2, 2}) = -1.5;
  const Json j = tensor_to_json(t);
  CHECK(j["scalar"] == "float");
  const auto back = tensor_from_json_float(j);
  CHECK(back == t);
}

TEST_CASE("tensor JSON rejects malformed input") {
  SymTensor<Rational> t(2, 2);
  t({1, 2}) = Rational(1);
  Json good = tensor_to_json(t);

  Json bad_scalar = good;
  bad_scalar["scalar"] = "float";
  CHECK_THROWS_AS(tensor_from_json_rational(bad_scalar), InputError);

  Json bad_p = good;
  bad_p.erase("p");
  CHECK_THROWS_AS(tensor_from_json_rational(bad_p), InputError);

  Json bad_idx = good;
  bad_idx["entries"][0]["idx"] = Json::array({1, 7});  // out of range for p=2
  CHECK_THROWS_AS(tensor_from_json_rational(bad_idx), InputError);

  Json bad_val = good;
  bad_val["entries"][0]["val"] = 3;  // must be "num/den" for rational
  CHECK_THROWS_AS(tensor_from_json_rational(bad_val), InputError);

  Json no_entries = good;
  no_entries.erase("entries");
  CHECK_THROWS_AS(tensor_from_json_rational(no_entries), InputError);

  // float variant rejects string values
  Json fj = tensor_to_json(SymTensor<double>(2, 2));
  fj["entries"] = Json::array({Json{{"idx", {1, 1}}, {"val", "1/2"}}});
  CHECK_THROWS_AS(tensor_from_json_float(fj), InputError);
}

TEST_CASE("sequence JSON round trip") {
  std::mt19937_64 rng(61);
  for (bool zm : {false, true}) {
    const auto s = random_sequence(3, 4, zm, rng);
    const Json j = sequence_to_json(s);
    CHECK(sequence_json_is_rational(j));
    CHECK(j["tensors"].size() == static_cast<std::size_t>(zm ? 3 : 4));
    const auto back = sequence_from_json_rational(j);
    CHECK(back == s);
  }

  auto d = TensorSequence<double>::zeros(2, 3, false);
  d.order(2)({1, 2}) = 0.5;
  const Json jd = sequence_to_json(d);
  CHECK_FALSE(sequence_json_is_rational(jd));
  CHECK(sequence_from_json_float(jd) == d);

  Json bad = sequence_to_json(d);
  bad.erase("zero_mean");
  CHECK_THROWS_AS(sequence_from_json_float(bad), InputError);
}

TEST_CASE("params JSON round trip") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> num(-9, 9);
  const ModelSpec spec(4, 2, 3);
  FactorParams<Rational> prm(spec);
  for (int r = 2; r <= spec.k; ++r) {
    for (int j = 1; j <= spec.p; ++j) prm.eps_order(r)[j] = Rational(num(rng), 2);
    for (int j = 1; j <= spec.m; ++j) prm.delta_order(r)[j] = Rational(num(rng));
  }
  for (int i = 1; i <= spec.p; ++i) {
    for (int j = 1; j <= std::min(i, spec.m); ++j) prm.loading.set(i, j, Rational(num(rng), 3));
  }
  const Json j = params_to_json(prm);
  CHECK(j["p"] == 4);
  CHECK(j["labels"].size() == static_cast<std::size_t>(spec.M()));
  CHECK(j["labels"][0] == "eps2_1");
  const auto back = params_from_json(j);
  CHECK(back.flatten() == prm.flatten());

  Json short_coords = j;
  short_coords["coords"] = Json::array({"1/1", "2/1"});
  CHECK_THROWS_AS(params_from_json(short_coords), InputError);

  Json bad_coord = j;
  bad_coord["coords"][0] = 1;
  CHECK_THROWS_AS(params_from_json(bad_coord), InputError);
}

TEST_CASE("report serializers carry the headline fields") {
  const ModelSpec spec(4, 2, 3);
  const Json jd = dims_to_json(spec, dims(spec));
  CHECK(jd["M"] == 19);
  CHECK(jd["N"] == 30);
  CHECK(jd["dim"] == 19);
  CHECK(jd["codim"] == 11);

  const Json jr = regime_to_json(regime(3, 20));
  CHECK(jr["k"] == 3);
  CHECK(jr["m"] == 20);
  CHECK(jr["p0"] == 1);

  const auto cert = polya_certificate(3, 20);
  REQUIRE(cert.has_value());
  const Json jp = polya_to_json(3, 20, cert);
  CHECK(jp["certified"] == true);
  CHECK(jp["multiplier_degree"] == cert->degree);
  const Json jn = polya_to_json(3, 5, std::nullopt);
  CHECK(jn["certified"] == false);
}

TEST_CASE("dump_canonical is byte-stable across parse cycles") {
  std::mt19937_64 rng(71);
  const auto s = random_sequence(2, 4, false, rng);
  const std::string text = dump_canonical(sequence_to_json(s));
  const Json reparsed = Json::parse(text);
  CHECK(dump_canonical(reparsed) == text);
  CHECK(dump_canonical(sequence_to_json(sequence_from_json_rational(reparsed))) == text);
  CHECK(text.back() == '\n');
}
