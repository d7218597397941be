// Command-line surface: invariant computation, verification suites,
// finite-field bracket enumeration, and the pairwise experiment harness.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource limit.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qep/experiment.hpp"
#include "qep/fixtures.hpp"

using namespace qep;

namespace {

PDCode load_pd_arg(const std::string& arg) {
  // --pd accepts an inline code, a file path, or a bundled fixture name
  auto corpus = fixtures::bundled_corpus();
  if (auto it = corpus.find(arg); it != corpus.end())
    return parse_pd(it->second);
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pd(ss.str());
  }
  return parse_pd(arg);
}

int cmd_compute(const std::string& pd_arg, const std::string& bracket,
                const std::string& invariant) {
  OrientedDiagram d = OrientedDiagram::build(load_pd_arg(pd_arg));
  std::vector<int> bracket_ids;
  if (bracket == "all")
    bracket_ids = {1, 2, 3, 4, 5};
  else
    bracket_ids = {std::stoi(bracket)};
  for (int i : bracket_ids)
    if (i < 1 || i > 5) throw std::runtime_error("bracket index must be 1..5");

  json out;
  bool all = invariant == "all";
  if (all || invariant == "phi") {
    json per;
    for (int i : bracket_ids)
      per["universal" + std::to_string(i)] = phi_to_json(phi(d, universal(i)));
    out["phi"] = per;
  }
  if (all || invariant == "phi-tc") {
    json per;
    for (int i : bracket_ids)
      per["universal" + std::to_string(i)] =
          phi_to_json(phi_tc(d, universal(i)));
    out["phi_tc"] = per;
  }
  if (all || invariant == "jones") out["jones"] = jones_from_beta(d).text();
  if (all || invariant == "lk") out["lk"] = lk_to_json(lk_multiset(d));
  if (out.empty()) throw std::runtime_error("unknown invariant: " + invariant);
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SuiteReport {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::vector<std::pair<std::string, OrientedDiagram>> corpus_diagrams(
    const std::string& extra_dir) {
  std::vector<std::pair<std::string, OrientedDiagram>> out;
  for (auto& [name, pd] : fixtures::bundled_corpus())
    out.push_back({name, OrientedDiagram::build(parse_pd(pd))});
  out.push_back({"t2_4", OrientedDiagram::build(torus_pd(4))});
  out.push_back({"t2_-3", OrientedDiagram::build(torus_pd(-3))});
  out.push_back({"tw_3", OrientedDiagram::build(twist_pd(3))});
  if (!extra_dir.empty())
    for (auto& entry : load_dataset(extra_dir))
      out.push_back({entry.name, OrientedDiagram::build(entry.pd)});
  return out;
}

// Diagrams small enough for exhaustive per-coloring work.
bool small(const OrientedDiagram& d) { return d.num_crossings() <= 10; }

void suite_axioms(SuiteReport& rep) {
  for (int i = 1; i <= 5; ++i) {
    Bracket<Poly5> u = universal(i);
    auto report = Bracket<Poly5>::verify(u.A_entries(), u.B_entries());
    rep.expect(report.ok, "universal(" + std::to_string(i) + ") axioms");
    rep.expect(classify_type(u) == std::set<int>{i},
               "universal(" + std::to_string(i) + ") type");
  }
}

void suite_identities(SuiteReport& rep) {
  for (int i = 1; i <= 5; ++i)
    rep.expect(check_entry_identities(universal(i)).empty(),
               "entry identities universal(" + std::to_string(i) + ")");
  EnumerationResult z3 = enumerate_brackets_brute(3);
  rep.expect(long(z3.brackets.size()) == z3.formula, "Z/3 bracket count");
  for (const auto& k : z3.brackets)
    rep.expect(check_entry_identities(k).empty(), "entry identities over Z/3");
}

void suite_complementary(SuiteReport& rep, const std::string& corpus) {
  for (auto& [name, d] : corpus_diagrams(corpus)) {
    if (!small(d)) continue;
    for (int i = 1; i <= 5; ++i) {
      Bracket<Poly5> u = universal(i);
      for (auto& c : enumerate_colorings(d))
        rep.expect(beta(d, c, u) == beta(d, complement(d, c), u),
                   name + ": complementary coloring, bracket " +
                       std::to_string(i));
    }
  }
}

void suite_mirror(SuiteReport& rep, const std::string& corpus) {
  Bracket<Poly5> u5 = universal(5);
  for (auto& [name, d] : corpus_diagrams(corpus)) {
    if (!small(d)) continue;
    const int n = d.num_components();
    for (int a = 0; a <= 1; ++a)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> d1(n);
        for (int i = 0; i < n; ++i) d1[i] = (mask >> i) & 1;
        rep.expect(beta_bar_mirror_check(d, a, d1, u5),
                   name + ": mirror relation");
      }
  }
}

void suite_linking(SuiteReport& rep, const std::string& corpus) {
  for (auto& [name, d] : corpus_diagrams(corpus)) {
    if (!small(d)) continue;
    const int n = d.num_components();
    for (int i : {1, 5}) {
      Bracket<Poly5> u = universal(i);
      for (int a = 0; a <= 1; ++a)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          std::vector<bool> d1(n), d2(n);
          for (int k = 0; k < n; ++k) {
            d1[k] = (mask >> k) & 1;
            d2[k] = !d1[k];
          }
          int lk = linking_number(d, d1, d2);
          Poly5 b = beta(d, Coloring(d, a, d1), u);
          bool ok = true;
          for (auto& [e, c] : b.terms()) ok &= e[1] == lk && e[2] == lk;
          rep.expect(ok, name + ": linking degree");
        }
    }
  }
}

void suite_formulas(SuiteReport& rep) {
  for (int i = 1; i <= 5; ++i) {
    Bracket<Poly5> u = universal(i);
    for (int q = -5; q <= 5; ++q) {
      if (q == 0) {
        rep.expect(torus_formula(0, 1, u) ==
                       phi(OrientedDiagram::build(torus_pd(0)), u),
                   "torus formula q=0");
        continue;
      }
      int n = q > 0 ? 1 : -1;
      rep.expect(torus_formula(q, n, u) ==
                     phi(OrientedDiagram::build(torus_pd(q)), u),
                 "torus formula q=" + std::to_string(q));
      if (q % 2 == 0)
        rep.expect(torus_formula(q, -n, u) ==
                       phi(OrientedDiagram::build(torus_pd(q, true)), u),
                   "torus formula antiparallel q=" + std::to_string(q));
    }
    for (int q = -4; q <= 4; ++q)
      rep.expect(twist_formula(q, u) ==
                     phi(OrientedDiagram::build(twist_pd(q)), u),
                 "twist formula q=" + std::to_string(q));
  }
}

void suite_r1(SuiteReport& rep, const std::string& corpus) {
  std::mt19937 rng(20260808);
  for (auto& [name, d] : corpus_diagrams(corpus)) {
    if (!small(d) || d.num_edges() == 0) continue;
    std::uniform_int_distribution<int> pick(1, d.num_edges());
    for (int i = 1; i <= 5; ++i) {
      Bracket<Poly5> u = universal(i);
      EnhancementPolynomial<Poly5> reference = phi(d, u);
      for (int t = 0; t < 3; ++t) {
        int e = pick(rng);
        for (int h : {1, -1})
          rep.expect(phi(d.apply_r1(e, h), u) == reference,
                     name + ": R1 invariance");
      }
    }
  }
}

int cmd_verify(const std::string& suite, const std::string& corpus) {
  SuiteReport rep;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "axioms") suite_axioms(rep), known = true;
  if (all || suite == "identities") suite_identities(rep), known = true;
  if (all || suite == "complementary") suite_complementary(rep, corpus), known = true;
  if (all || suite == "mirror") suite_mirror(rep, corpus), known = true;
  if (all || suite == "linking") suite_linking(rep, corpus), known = true;
  if (all || suite == "formulas") suite_formulas(rep), known = true;
  if (all || suite == "r1") suite_r1(rep, corpus), known = true;
  if (!known) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  if (rep.failures.empty()) {
    std::cout << "ok: " << rep.checks << " checks passed\n";
    return 0;
  }
  std::cout << rep.failures.size() << " of " << rep.checks
            << " checks failed; first failure:\n  " << rep.failures.front()
            << "\n";
  return 1;
}

int cmd_enumerate(long p, const std::string& mode, const std::string& emit) {
  EnumerationResult res =
      mode == "brute" ? enumerate_brackets_brute(p) : enumerate_brackets_homs(p);
  json out;
  out["p"] = p;
  out["mode"] = mode;
  out["count"] = res.brackets.size();
  out["formula"] = res.formula;
  out["matches_formula"] = long(res.brackets.size()) == res.formula;
  for (int i = 0; i < 5; ++i)
    out["per_type"][std::to_string(i + 1)] = res.per_type[i];
  out["all_types"] = res.all_types;
  std::cout << out.dump(2) << "\n";
  if (!emit.empty()) {
    json list = json::array();
    for (const auto& k : res.brackets) {
      json a = json::array(), b = json::array();
      for (int t = 0; t < 8; ++t) {
        a.push_back(k.A_entries()[t].value());
        b.push_back(k.B_entries()[t].value());
      }
      list.push_back({{"A", a}, {"B", b}});
    }
    std::ofstream f(emit);
    f << list.dump(2) << "\n";
  }
  return long(res.brackets.size()) == res.formula ? 0 : 1;
}

int cmd_experiment(const std::string& dataset, const std::string& cache_dir) {
  auto data = load_dataset(dataset);
  ResultCache cache(cache_dir);
  ExperimentResult res = run_experiment(data, cache);
  std::cout << res.to_json().dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum enhancement polynomials of oriented links"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "invariants of one diagram");
  std::string pd_arg, bracket = "all", invariant = "all";
  compute->add_option("--pd", pd_arg, "PD code, file, or fixture name")
      ->required();
  compute->add_option("--bracket", bracket, "universal bracket index or all");
  compute->add_option("--invariant", invariant, "phi|phi-tc|jones|lk|all");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite, corpus;
  verify->add_option("--suite", suite,
                     "axioms|identities|complementary|mirror|linking|formulas|r1|all")
      ->required();
  verify->add_option("--corpus", corpus, "extra dataset directory");

  auto* enumerate = app.add_subcommand("enumerate-brackets",
                                       "tribracket brackets over Z/pZ");
  long p = 3;
  std::string mode = "homs", emit;
  enumerate->add_option("--p", p, "prime modulus")->required();
  enumerate->add_option("--mode", mode, "brute|homs");
  enumerate->add_option("--emit", emit, "write all brackets to a file");

  auto* experiment = app.add_subcommand("experiment", "pairwise comparison");
  std::string dataset, cache_dir;
  experiment->add_option("--dataset", dataset, "directory of .pd files")
      ->required();
  experiment->add_option("--cache-dir", cache_dir, "incremental result cache");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(pd_arg, bracket, invariant);
    if (verify->parsed()) return cmd_verify(suite, corpus);
    if (enumerate->parsed()) {
      if (mode == "brute" && p > 3) {
        std::cerr << "brute mode is limited to p <= 3\n";
        return 3;
      }
      return cmd_enumerate(p, mode, emit);
    }
    if (experiment->parsed()) return cmd_experiment(dataset, cache_dir);
  } catch (const StateSumLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
