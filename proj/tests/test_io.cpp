#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "galdesc/driver.hpp"
#include "helpers.hpp"

using namespace galdesc;

TEST_CASE("rational serialization round trips") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7"}) {
    Rational r(s);
    r.canonicalize();
    json j = rational_to_json(r);
    CHECK(rational_from_json(j) == r);
  }
  CHECK(rational_to_json(Rational(5)) == json("5"));
  CHECK(rational_to_json(Rational(1, 2)) == json("1/2"));
  CHECK(rational_from_json(json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(json("x")), ParseError);
  CHECK_THROWS_AS(rational_from_json(json::object()), ParseError);
}

TEST_CASE("matrix serialization round trips over an extension") {
  FieldPtr k = NumberField::make({rat(1), rat(0), rat(1)});
  RatMatrix m(2, 2, k);
  m.at(0, 0) = FieldElement::constant(k, rat(1, 3));
  m.at(0, 1) = FieldElement(k, {rat(0), rat(1)});
  m.at(1, 0) = FieldElement(k, {rat(-2), rat(5)});
  CHECK(matrix_from_json(matrix_to_json(m), k) == m);
  // rational entries collapse to bare strings
  CHECK(matrix_to_json(m)[0][0] == json("1/3"));
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[\"1\"],[\"1\",\"2\"]]"), k), ParseError);
}

TEST_CASE("extension and group files round trip") {
  for (const GaloisExtension& ext :
       {gaussian_extension(), cyclic_cubic_extension(), biquadratic_extension()}) {
    GaloisExtension back = extension_from_json(extension_to_json(ext));
    CHECK(back.degree() == ext.degree());
    CHECK(back.group() == ext.group());
    for (int g = 0; g < ext.degree(); ++g)
      CHECK(back.generator_image(g) == ext.generator_image(g));
  }
  auto s3 = s3_pair();
  json gj = group_to_json(s3->ambient(), s3->subgroup_elements(), s3->base().field());
  GroupFile gf = group_from_json(gj);
  CHECK(gf.group == s3->ambient());
  CHECK(gf.normal == s3->subgroup_elements());
  CHECK(field_degree(gf.field) == 2);
  CHECK_THROWS_AS(group_from_json(json::object()), ParseError);
}

TEST_CASE("problem files parse and validate") {
  json j;
  j["setting"] = "semilinear";
  j["extension"] = extension_to_json(gaussian_extension());
  j["object"] = 1;
  j["b"]["e"] = json::parse(R"([["1"]])");
  j["b"]["g1"] = json::parse(R"([[["0","1"]]])");
  // name of the nontrivial element comes from the extension
  auto names = gaussian_extension().group().names;
  j["b"] = json::object();
  j["b"][names[0]] = json::parse(R"([["1"]])");
  j["b"][names[1]] = json::parse(R"([[["0","1"]]])");
  Problem p = problem_from_json(j);
  REQUIRE(p.object.has_value());
  REQUIRE(p.b.has_value());
  CHECK(p.object->dim == 1);
  CHECK(p.setting->kind() == "semilinear");

  // datum round trip through JSON
  DescentEngine eng{p.setting};
  DescentDatum d{*p.object, *p.b};
  CHECK(eng.datum_valid(d));
  json dj = datum_to_json(*p.setting, d);
  json j2 = j;
  j2["object"] = dj["object"];
  j2["b"] = dj["b"];
  Problem p2 = problem_from_json(j2);
  CHECK(*p2.b == *p.b);

  CHECK_THROWS_AS(problem_from_json(json::object()), ParseError);
  json missing = j;
  missing["b"].erase(names[1]);
  CHECK_THROWS_AS(problem_from_json(missing), ParseError);
}

TEST_CASE("group-rep problems parse objects with actions") {
  auto s3 = s3_pair();
  json j;
  j["setting"] = "group-rep";
  j["groups"] = group_to_json(s3->ambient(), s3->subgroup_elements(), s3->base().field());
  j["object"] = object_to_json(s3->upstairs().unit());
  Problem p = problem_from_json(j);
  CHECK(p.setting->kind() == "group-rep");
  CHECK(p.object->dim == 1);
  CHECK(p.object->action.size() == 3);
}

TEST_CASE("verify command reports named checks") {
  json j;
  j["setting"] = "semilinear";
  j["extension"] = extension_to_json(gaussian_extension());
  Report rep = cmd_verify(problem_from_json(j));
  CHECK(rep.checks.size() == 4);
  CHECK(rep.pass());

  j["checks"] = json::array();
  CHECK(cmd_verify(problem_from_json(j)).checks.empty());
  j["checks"] = json::array({"trace"});
  Report only = cmd_verify(problem_from_json(j));
  REQUIRE(only.checks.size() == 1);
  CHECK(only.checks[0].check == "trace");
  j["checks"] = json::array({"nonsense"});
  CHECK_THROWS_AS(cmd_verify(problem_from_json(j)), ParseError);
}

TEST_CASE("selftest is deterministic and scales with cases") {
  Report a = cmd_selftest(5, 3);
  Report b = cmd_selftest(5, 3);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(a.pass());
  CHECK(cmd_selftest(5, 0).checks.empty());
  // the timing key is the only non-deterministic field
  json with_time = report_to_json(a, 12.5);
  CHECK(with_time.contains("elapsed_ms"));
  with_time.erase("elapsed_ms");
  CHECK(with_time == report_to_json(a));
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "verify";
  r.checks.push_back({"alpha", true, ""});
  r.checks.push_back({"beta", false, "boom"});
  CHECK_FALSE(r.pass());
  json j = report_to_json(r);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["witness"] == "boom");
  std::string text = report_to_text(r);
  CHECK(text.find("FAIL  beta: boom") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}
