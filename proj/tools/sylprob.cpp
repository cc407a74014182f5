// Command-line front end: exact Sylow commuting probabilities, structural
// classification, and the implication suites over a group corpus.
//
// Exit codes: 0 success, 1 mathematical counterexample or sharpness
// mismatch, 2 usage or parse error, 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sylprob/report_json.hpp"

using namespace sylprob;

namespace {

struct CommonArgs {
  std::string group;
  RunConfig config;
};

void add_budget_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--budget", config.enumeration_budget,
                  "element enumeration budget (default 2000000)");
  cmd->add_option("--jobs", config.jobs, "worker threads (default: available cores)");
}

int run_pr(const std::string& group_text, std::uint64_t p, std::uint64_t q, bool fixed,
           const RunConfig& config) {
  PermGroup g = GroupExpr::parse(group_text).build();
  Json out;
  out["command"] = "pr";
  out["group"] = group_text;
  out["p"] = p;
  out["q"] = q;
  out["fixed"] = fixed;
  if (fixed) {
    PermGroup sp = sylow_subgroup(g, p, config.enumeration_budget);
    PermGroup sq = sylow_subgroup(g, q, config.enumeration_budget);
    if (sp.is_trivial() || sq.is_trivial())
      out["value"] = Rational(1).str();
    else
      out["value"] = pr(sp, sq, config.enumeration_budget).str();
    out["p_subgroup"] = generators_json(sp);
    out["q_subgroup"] = generators_json(sq);
  } else {
    OmegaReport om = omega_set(g, p, q, config.enumeration_budget);
    Json j = to_json(om);
    for (auto& [key, value] : j.items()) out[key] = value;
  }
  out["config"] = to_json(config);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_prstar(const std::string& group_text, const std::string& pi1_text,
               const std::string& pi2_text, const RunConfig& config) {
  PermGroup g = GroupExpr::parse(group_text).build();
  PrStarReport rep = pr_star(g, PrimeSet::parse(pi1_text), PrimeSet::parse(pi2_text),
                             config.enumeration_budget);
  Json out;
  out["command"] = "prstar";
  out["group"] = group_text;
  Json j = to_json(rep);
  for (auto& [key, value] : j.items()) out[key] = value;
  out["config"] = to_json(config);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_classify(const std::string& group_text, const RunConfig& config) {
  GroupAnalysis a(group_text, GroupExpr::parse(group_text), config.enumeration_budget,
                  config.quotient_degree_budget);
  Json out;
  out["command"] = "classify";
  out["group"] = group_text;
  out["order"] = a.group().order().str();
  Json primes = Json::array();
  for (std::uint64_t p : a.primes()) primes.push_back(p);
  out["primes"] = primes;
  out["nilpotent"] = a.nilpotent();
  out["soluble"] = a.soluble();
  const auto& series = a.fitting_series();
  out["fitting_order"] = series.terms.front().order().str();
  const PermGroup& f2 = series.terms.size() > 1 ? series.terms[1] : series.terms.front();
  out["fitting2_order"] = f2.order().str();
  out["radical_order"] = series.last().order().str();
  Json series_orders = Json::array();
  for (const PermGroup& t : series.terms) series_orders.push_back(t.order().str());
  out["fitting_series_orders"] = series_orders;
  out["config"] = to_json(config);
  std::cout << out.dump() << "\n";
  return 0;
}

int run_verify(const std::vector<CorpusEntry>& corpus, const std::string& suite,
               const RunConfig& config) {
  auto line = [](const Json& j) { std::cout << j.dump() << "\n"; };
  auto tagged = [](const char* type, const Json& j) {
    Json out;
    out["type"] = type;
    for (const auto& [key, value] : j.items()) out[key] = value;
    return out;
  };
  Json header;
  header["type"] = "config";
  header["suite"] = suite;
  header["corpus_size"] = corpus.size();
  header["config"] = to_json(config);
  line(header);

  if (corpus.empty())
    line(Json{{"type", "warning"}, {"message", "empty corpus: nothing verified"}});

  bool run_implications = suite == "implications" || suite == "all";
  bool run_sharpness = suite == "sharpness" || suite == "all";
  bool run_example44 = suite == "example44" || suite == "all";
  bool run_lemmas = suite == "lemmas" || suite == "all";
  bool run_tables = suite == "tables" || suite == "all";
  if (!run_implications && !run_sharpness && !run_example44 && !run_lemmas && !run_tables)
    throw ParseError("unknown suite '" + suite +
                     "' (implications, sharpness, example44, lemmas, tables, all)");

  std::size_t counterexamples = 0, sharpness_failures = 0, lemma_violations = 0;
  std::size_t verdict_count = 0;

  if (run_implications) {
    SuiteResult res = run_suite(corpus, builtin_implications(), config.effective_jobs(),
                                config.enumeration_budget, config.quotient_degree_budget);
    for (const Verdict& v : res.verdicts) line(tagged("verdict", to_json(v)));
    for (const auto& [label, reason] : res.skipped)
      line(Json{{"type", "skip"}, {"group", label}, {"reason", reason}});
    counterexamples += res.counterexamples;
    verdict_count += res.verdicts.size();
  }

  if (run_sharpness) {
    for (const SharpnessRecord& r : sharpness_witnesses(config.enumeration_budget)) {
      line(tagged("sharpness", to_json(r)));
      if (!r.ok) ++sharpness_failures;
    }
  }

  if (run_example44) {
    for (unsigned s = 1; s <= 5; ++s)
      line(tagged("example44", to_json(example44_report(s, config.enumeration_budget))));
  }

  if (run_lemmas) {
    LemmaSampleReport rep = run_lemma_samples(corpus, config.enumeration_budget,
                                              config.quotient_degree_budget);
    line(tagged("lemma-samples", to_json(rep)));
    lemma_violations += rep.violations;
  }

  if (run_tables) {
    for (const IndexTableRow& row :
         bounded_index_table(corpus, config.enumeration_budget, config.quotient_degree_budget))
      line(tagged("index-table-row", to_json(row)));
  }

  bool pass = counterexamples == 0 && sharpness_failures == 0 && lemma_violations == 0;
  line(Json{{"type", "summary"},
            {"verdicts", verdict_count},
            {"counterexamples", counterexamples},
            {"sharpness_failures", sharpness_failures},
            {"lemma_violations", lemma_violations},
            {"pass", pass}});
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sylprob: exact commuting probabilities of Sylow subgroups, structural\n"
      "classification, and corpus-level verification of the bundled implication\n"
      "registry.\n"
      "\n"
      "Group expressions: Sym(5), Alt(6), C(12), D(8) [order 2n], PSL2(7), Sp62,\n"
      "A * B, Pow(A,3), InvolutionExample(4),\n"
      "Perm(deg=5; gens=\"(1 2 3)(4 5), (1 2)\").\n"
      "Permutations compose left to right; cycle notation is 1-based.\n"
      "Prime sets: * (all), odd, 5, 5' (complement), {2,3}."};
  app.require_subcommand(1);

  RunConfig config;

  auto* pr_cmd = app.add_subcommand("pr", "omega sweep or fixed-pair commuting probability");
  std::string pr_group;
  std::uint64_t pr_p = 0, pr_q = 0;
  bool pr_fixed = false;
  pr_cmd->add_option("--group", pr_group, "group expression")->required();
  pr_cmd->add_option("--p", pr_p, "first prime")->required();
  pr_cmd->add_option("--q", pr_q, "second prime")->required();
  pr_cmd->add_flag("--fixed", pr_fixed, "single value for one fixed Sylow pair");
  add_budget_options(pr_cmd, config);

  auto* prstar_cmd = app.add_subcommand("prstar", "pr* over prime-set pairs");
  std::string prstar_group, pi1_text = "*", pi2_text = "*";
  prstar_cmd->add_option("--group", prstar_group, "group expression")->required();
  prstar_cmd->add_option("--pi1", pi1_text, "first prime set (default *)");
  prstar_cmd->add_option("--pi2", pi2_text, "second prime set (default *)");
  add_budget_options(prstar_cmd, config);

  auto* classify_cmd = app.add_subcommand("classify", "order, primes, Fitting data, radical");
  std::string classify_group;
  classify_cmd->add_option("--group", classify_group, "group expression")->required();
  add_budget_options(classify_cmd, config);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites over a corpus");
  std::string corpus_file, suite = "all";
  bool use_builtin = false;
  verify_cmd->add_option("--corpus", corpus_file, "corpus JSON file: [{label, expr}...]");
  verify_cmd->add_flag("--builtin", use_builtin, "use the builtin corpus");
  verify_cmd->add_option("--suite", suite,
                         "implications | sharpness | example44 | lemmas | tables | all");
  verify_cmd->add_flag("--include-stretch", config.include_stretch,
                       "include the Sp(6,2) stretch entry in the builtin corpus");
  add_budget_options(verify_cmd, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pr_cmd->parsed()) {
      if (pr_p == pr_q || !is_prime(pr_p) || !is_prime(pr_q))
        throw ParseError("--p and --q must be distinct primes");
      return run_pr(pr_group, pr_p, pr_q, pr_fixed, config);
    }
    if (prstar_cmd->parsed()) return run_prstar(prstar_group, pi1_text, pi2_text, config);
    if (classify_cmd->parsed()) return run_classify(classify_group, config);
    if (verify_cmd->parsed()) {
      std::vector<CorpusEntry> corpus;
      if (use_builtin) {
        corpus = builtin_corpus(config.include_stretch);
      } else if (!corpus_file.empty()) {
        std::ifstream in(corpus_file);
        if (!in) throw ParseError("cannot open corpus file: " + corpus_file);
        Json j = Json::parse(in, nullptr, true);
        corpus = corpus_from_json(j);
      } else {
        throw ParseError("verify needs --builtin or --corpus FILE");
      }
      return run_verify(corpus, suite, config);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "json error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
