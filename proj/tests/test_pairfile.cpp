#include <doctest.h>

#include "sphlie/report.hpp"

using namespace sphlie;

TEST_CASE("catalog reference files") {
  Json doc;
  doc["format"] = 1;
  doc["algebra"] = "nbar-sl2";
  PairInput in = parse_pair_file(doc);
  CHECK(in.g->dim() == 3);
  CHECK(in.h.dim() == 1);
  // catalog reference with an overriding subalgebra
  Json doc2 = doc;
  doc2["subalgebra"] = Json::array({vec_json(QVec{Rat(0), Rat(1), Rat(0)})});
  PairInput in2 = parse_pair_file(doc2);
  CHECK(in2.h.dim() == 1);
  CHECK(in2.h != in.h);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_WITH_AS(parse_pair_text("{"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(parse_pair_text("{\"format\": 2, \"algebra\": \"nbar-sl2\"}"),
                       doctest::Contains("format"), Error);
  CHECK_THROWS_WITH_AS(parse_pair_text("{\"format\": 1}"), doctest::Contains("algebra"), Error);
  // bad rationals carry their location
  Json doc;
  doc["format"] = 1;
  doc["algebra"] = "nbar-sl2";
  doc["subalgebra"] = Json::array({Json::array({"x", "0", "0"})});
  CHECK_THROWS_AS(parse_pair_file(doc), Error);
}

TEST_CASE("explicit algebra round-trip reproduces the analysis") {
  Analysis a1 = Analysis::run(parse_pair_file([] {
    Json doc;
    doc["format"] = 1;
    doc["algebra"] = "group-sl2";
    return doc;
  }()));
  Json out = analyze_report(a1);
  // the analysis document doubles as an explicit pair file
  Analysis a2 = Analysis::run(parse_pair_file(out));
  Json out2 = analyze_report(a2);
  CHECK(out.dump(2) == out2.dump(2));
}

TEST_CASE("hand-written explicit algebra, gram derived from multiplicities") {
  // sl(2,R) written out by hand, no gram block: the a-part Killing form is
  // reconstructed from the root multiplicities.
  const char* text = R"({
    "format": 1,
    "algebra": {
      "a_dim": 1,
      "roots": [["2"], ["-2"]],
      "positive": [0],
      "simple": [0],
      "grades": ["a", {"root": 0}, {"root": 1}],
      "brackets": [[0, 1, [[1, "2"]]], [0, 2, [[2, "-2"]]], [1, 2, [[0, "1"]]]]
    },
    "subalgebra": [["0", "0", "1"]]
  })";
  Analysis an = Analysis::run(parse_pair_text(text));
  CHECK(an.sp.g->rs().gram() == QMat{{Rat(8)}});
  CHECK(an.srd.num_spherical() == 0);
  CHECK(an.srd.edge.cols() == 1); // the n-bar pair of sl(2,R)
}

TEST_CASE("exponent block resolution") {
  Json doc;
  doc["format"] = 1;
  doc["algebra"] = "group-sl2"; // s = 1, edge = 0
  Json block;
  block["e_lead"] = Json::array({Json{{"re", Json::array({"1"})}, {"im", Json::array({"0"})}}});
  block["degree_bound"] = 2;
  doc["exponents"] = block;
  Analysis an = Analysis::run(parse_pair_file(doc));
  REQUIRE(an.ed.has_value());
  CHECK(an.ed->degree_bound == 2);
  CHECK(an.ed->e_lead.size() == 1);
  CHECK(dot(an.ed->e_lead[0].re, an.srd.omegas[0]) == 1);
  // wrong arity is a parse error
  Json bad = doc;
  bad["exponents"]["e_lead"][0]["re"] = Json::array({"1", "2"});
  CHECK_THROWS_AS(Analysis::run(parse_pair_file(bad)), Error);
}

TEST_CASE("root names and subset parsing") {
  Analysis an = Analysis::run(parse_pair_file([] {
    Json doc;
    doc["format"] = 1;
    doc["algebra"] = "sl3-sp1";
    return doc;
  }()));
  const auto& rs = an.sp.g->rs();
  CHECK(root_name(rs, rs.root(rs.simple()[0])) == "a1");
  QVec sum = rs.root(rs.simple()[0]) + rs.root(rs.simple()[1]);
  CHECK(root_name(rs, sum) == "a1+a2");
  CHECK(root_name(rs, Rat(-1) * sum) == "-(a1+a2)");
  CHECK(root_name(rs, Rat(2) * rs.root(rs.simple()[0])) == "2*a1");
  CHECK(root_name(rs, zero_vec(2)) == "0");
  CHECK(parse_subset("a2,a1", 'a', 2) == std::vector<int>{0, 1});
  CHECK(parse_subset("", 's', 3).empty());
  CHECK_THROWS_AS(parse_subset("s4", 's', 3), Error);
  CHECK_THROWS_AS(parse_subset("b1", 's', 3), Error);
}
