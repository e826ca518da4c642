#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "toricmf/error.hpp"
#include "toricmf/report.hpp"

using namespace toricmf;
using namespace toricmf::testing;

TEST_CASE("parse_input") {
  CHECK(parse_input(R"({"a":[6,6,6],"b":[1,4,1],"c":[4,1,1]})") == power_family(3));
  CHECK(parse_input(R"({"a":[2,2],"b":[1,1],"c":[1,1],"torsion":{"moduli":[2],"h_x":[[1],[1]],"h_z":[1],"h_y":[0]}})") ==
        torsion_fixture());
  CHECK(parse_input(R"({"n": "3", "a":["6","6","6"],"b":[1,4,1],"c":[4,1,1]})") == power_family(3));
  CHECK_THROWS_WITH_AS(parse_input(R"({"a":[3],"b":[4]})"), doctest::Contains("'c'"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_input(R"({"a":[3],"b":[4],"c":[5],"d":1})"), doctest::Contains("unknown key 'd'"),
                       InvalidInput);
  CHECK_THROWS_WITH_AS(parse_input(R"({"a":[3],"b":[4.5],"c":[5]})"), doctest::Contains("b[0]"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_input(R"({"a":[3],"b":[true],"c":[5]})"), doctest::Contains("b[0]"), InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"a":[3,3],"b":[4],"c":[5,1]})"), InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"n":2,"a":[3],"b":[4],"c":[5]})"), InvalidInput);
  CHECK_THROWS_WITH_AS(parse_input("{\"a\":[3],\n\"b\":[4],\n\"c\":[5,]}"), doctest::Contains("line 3"),
                       InvalidInput);
  CHECK_THROWS_AS(parse_input(R"({"a":[3],"b":[0],"c":[5]})"), InvalidInput);
  CHECK_THROWS_AS(
      parse_input(R"({"a":[2,2],"b":[1,1],"c":[1,1],"torsion":{"moduli":[2],"h_x":[[1],[1]],"h_z":[1]}})"),
      InvalidInput);
  // Arbitrary precision survives parsing.
  const auto big = parse_input(R"({"a":["100000000000000000000000"],"b":[1],"c":[1]})");
  CHECK(big.a[0] == Int("100000000000000000000000"));
}

TEST_CASE("run_analyze fixtures") {
  auto r = run_analyze(power_family(3));
  CHECK_FALSE(r.generators.is_cm);
  CHECK(r.generators.tau == 5);
  CHECK(r.macaulay.new_gens == std::vector<SemigroupElement>{{ints({2, 2, 2}), std::nullopt}});
  CHECK_FALSE(r.verification.has_value());

  AnalyzeOptions opt;
  opt.verify = true;
  opt.verify_options.bound = 9;
  r = run_analyze(twisted_cubic(), opt);
  CHECK(r.generators.is_cm);
  CHECK(r.generators.tau == 3);
  CHECK(r.macaulay.is_macaulayfication_trivial);
  REQUIRE(r.verification.has_value());
  CHECK(r.verification->passed());

  opt.verify_options.bound = 12;
  r = run_analyze(quartic(), opt);
  CHECK_FALSE(r.generators.is_cm);
  CHECK(r.macaulay.new_gens == std::vector<SemigroupElement>{{ints({2, 2}), std::nullopt}});
  CHECK(r.verification->passed());
}

TEST_CASE("text rendering") {
  const auto r = run_analyze(power_family(3));
  const auto text = render_text(r);
  CHECK(text.find("\n  z^6 - x1*x2^4*x3\n") != std::string::npos);
  CHECK(text.find("verification") == std::string::npos);
  CHECK(text.find(kRoleConvention) != std::string::npos);
  const auto gens = render_text(r, Section::Generators);
  CHECK(gens.find("z^6 - x1*x2^4*x3") != std::string::npos);
  CHECK(gens.find("Macaulayfication") == std::string::npos);
}

TEST_CASE("structured report") {
  AnalyzeOptions opt;
  opt.verify = true;
  opt.verify_options.bound = 10;
  const auto r = run_analyze(torsion_fixture(), opt);
  const auto doc = to_json(r);
  CHECK(doc["tau"] == "3");
  CHECK(doc["fan"]["nu"] == "-1");
  CHECK(doc["spec"]["torsion"]["moduli"][0] == "2");
  CHECK(doc["role_convention"] == kRoleConvention);
  CHECK(doc.contains("verification"));
  CHECK_FALSE(to_json(run_analyze(torsion_fixture())).contains("verification"));
  // Byte-identical across runs.
  CHECK(render_structured(r) == render_structured(run_analyze(torsion_fixture(), opt)));
}

TEST_CASE("structured round-trip on random specs") {
  std::mt19937_64 rng(1203);
  for (int t = 0; t < 120; ++t) {
    const auto spec = random_spec(rng);
    AnalyzeOptions opt;
    opt.verify = t % 6 == 0;
    opt.verify_options.bound = 6;
    const auto r = run_analyze(spec, opt);
    const auto text = render_structured(r);
    const auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(back.spec == r.spec);
    CHECK(back.basis == r.basis);
    CHECK(back.fan.q == r.fan.q);
    CHECK(back.fan.s_seq == r.fan.s_seq);
    CHECK(back.fan.p_seq == r.fan.p_seq);
    CHECK(back.fan.eps == r.fan.eps);
    CHECK(back.fan.r == r.fan.r);
    CHECK(back.fan.m == r.fan.m);
    CHECK(back.fan.nu == r.fan.nu);
    CHECK(back.fan.mu_neg == r.fan.mu_neg);
    CHECK(back.generators.tau == r.generators.tau);
    CHECK(back.generators.closed_form_tau == r.generators.closed_form_tau);
    CHECK(back.generators.lattice_vectors == r.generators.lattice_vectors);
    REQUIRE(back.generators.generators.size() == r.generators.generators.size());
    for (std::size_t k = 0; k < back.generators.generators.size(); ++k) {
      CHECK(back.generators.generators[k].lhs == r.generators.generators[k].lhs);
      CHECK(back.generators.generators[k].rhs == r.generators.generators[k].rhs);
      CHECK(back.generators.generators[k].form == r.generators.generators[k].form);
    }
    CHECK(back.macaulay.mixed_indices == r.macaulay.mixed_indices);
    CHECK(back.macaulay.new_gens == r.macaulay.new_gens);
    CHECK(back.macaulay.s_prime_gens == r.macaulay.s_prime_gens);
    CHECK(back.verification.has_value() == r.verification.has_value());
    if (r.verification) CHECK(back.verification->ideal_equality_bound == r.verification->ideal_equality_bound);
    CHECK(render_structured(back) == text);
  }
}
