#include <catch2/catch_amalgamated.hpp>

#include "sylprob/report_json.hpp"

using namespace sylprob;

TEST_CASE("run config round-trips") {
  RunConfig c;
  c.enumeration_budget = 12345;
  c.quotient_degree_budget = 77;
  c.jobs = 4;
  c.include_stretch = true;
  Json j = to_json(c);
  RunConfig back = run_config_from_json(j);
  CHECK(back.enumeration_budget == c.enumeration_budget);
  CHECK(back.quotient_degree_budget == c.quotient_degree_budget);
  CHECK(back.jobs == c.jobs);
  CHECK(back.include_stretch == c.include_stretch);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("verdict round-trips") {
  Verdict v;
  v.group_label = "Alt(5)";
  v.implication_id = "T1.3-sol";
  v.hypothesis_value = Rational(2, 5);
  v.threshold = Rational(2, 5);
  v.hypothesis_holds = false;
  v.conclusion_holds = false;
  v.status = Verdict::Status::Vacuous;
  Json j = to_json(v);
  Verdict back = verdict_from_json(j);
  CHECK(to_json(back).dump() == j.dump());

  v.status = Verdict::Status::Counterexample;
  v.note = "sample note";
  CHECK(to_json(verdict_from_json(to_json(v))).dump() == to_json(v).dump());
}

TEST_CASE("prstar report serializes exact rationals, reparse is stable") {
  PrStarReport rep = pr_star(sym_group(5));
  Json j = to_json(rep);
  CHECK(j["value"] == "3/10");
  CHECK(j["per_pair"].size() == 3);
  CHECK(j["per_pair"][0]["max"] == "1/2");
  // parse(serialize(report)) reserializes to the identical bytes
  Json back = Json::parse(j.dump());
  CHECK(back.dump() == j.dump());
}

TEST_CASE("omega report json") {
  Json j = to_json(omega_set(sym_group(5), 2, 3));
  CHECK(j["values"] == Json::array({"5/12", "1/2"}));
  CHECK(j["conjugates_swept"] == 10);
  // witnesses reparse as permutations of the right group
  for (const auto& w : j["witnesses"]) {
    for (const auto& s : w["q_subgroup"])
      CHECK_NOTHROW(parse_cycles(5, s.get<std::string>()));
  }
}

TEST_CASE("corpus file parsing") {
  Json j = Json::parse(R"json([{"label":"five","expr":"Alt(5)"},{"label":"c6","expr":"C(6)"}])json");
  auto corpus = corpus_from_json(j);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].label == "five");
  CHECK(corpus[0].expr.build().order() == 60);
  CHECK(corpus[1].expr.build().order() == 6);
  CHECK_THROWS_AS(corpus_from_json(Json::parse(R"json({"label":"x"})json")), ParseError);
  CHECK_THROWS_AS(corpus_from_json(Json::parse(R"json([{"label":"x","expr":"Nope(3)"}])json")),
                  ParseError);
}

TEST_CASE("suite output is byte-identical across worker counts") {
  std::vector<CorpusEntry> corpus = {corpus_entry("Sym(4)"), corpus_entry("Alt(5)"),
                                     corpus_entry("C(30)"), corpus_entry("D(7)")};
  auto dump = [&](unsigned jobs) {
    std::string out;
    for (const Verdict& v : run_suite(corpus, builtin_implications(), jobs).verdicts)
      out += to_json(v).dump() + "\n";
    return out;
  };
  CHECK(dump(1) == dump(4));
}
