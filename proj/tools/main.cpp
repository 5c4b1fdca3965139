// paclogic command-line interface: exact and sampled formula probabilities,
// masking, bounded inference, bound calculators, scenario generation, and the
// train/test experiment harness. Text output is human-oriented; JSON and CSV
// are the stable surfaces.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paclogic/bounds.hpp"
#include "paclogic/fragments.hpp"
#include "paclogic/harness.hpp"
#include "paclogic/masking.hpp"
#include "paclogic/model_check.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/reasoner.hpp"
#include "paclogic/report.hpp"
#include "paclogic/scenarios.hpp"
#include "paclogic/selftest.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace paclogic;

constexpr const char* kSchemaVersion = "1";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

Predicate parse_target(const std::string& spec) {
  auto slash = spec.find('/');
  if (slash == std::string::npos)
    throw std::runtime_error("target must look like pred/arity, got: " + spec);
  Predicate p;
  p.name = spec.substr(0, slash);
  p.arity = static_cast<std::uint32_t>(std::stoul(spec.substr(slash + 1)));
  if (!is_identifier(p.name)) throw std::runtime_error("bad predicate name: " + p.name);
  return p;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Predicate> parse_vocab(const std::string& s) {
  std::vector<Predicate> out;
  for (const std::string& item : split_commas(s)) out.push_back(parse_target(item));
  return out;
}

MaskedExample load_mask(const std::string& path) {
  ParsedMask pm = parse_masked_literals(read_file(path));
  MaskedExample m;
  m.domain = pm.domain;
  std::sort(m.domain.begin(), m.domain.end());
  m.domain.erase(std::unique(m.domain.begin(), m.domain.end()), m.domain.end());
  m.literals = pm.literals;
  std::sort(m.literals.begin(), m.literals.end());
  m.literals.erase(std::unique(m.literals.begin(), m.literals.end()), m.literals.end());
  for (const Literal& l : m.literals) {
    if (m.contains(l.negated()))
      throw std::runtime_error("mask contains both signs of " + l.atom.str());
    for (const std::string& c : l.atom.args)
      if (!std::binary_search(m.domain.begin(), m.domain.end(), c))
        throw std::runtime_error("mask literal " + l.str() + " uses undeclared constant");
  }
  return m;
}

Example make_scenario(const std::string& scenario, std::uint64_t size, double density,
                      const std::string& vocab, std::uint64_t friendships,
                      std::uint64_t smokers, std::uint64_t seed) {
  if (scenario == "rare-clique") return gen_rare_clique(size);
  if (scenario == "rare-chain") return gen_rare_chain(size);
  if (scenario == "smokers") return gen_smokers(size, friendships, smokers, seed);
  if (scenario == "random") {
    std::vector<Predicate> v = vocab.empty() ? std::vector<Predicate>{Predicate{"r", 2}}
                                             : parse_vocab(vocab);
    return gen_random(size, v, density, seed);
  }
  throw std::runtime_error("unknown scenario: " + scenario);
}

json config_echo(const std::map<std::string, std::string>& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

// ---------------------------------------------------------------------------

int cmd_q(const std::string& example_path, const std::string& theory_path, std::uint32_t k,
          bool exact, bool mc, std::uint64_t trials, std::uint64_t seed, std::uint64_t budget,
          const std::string& format) {
  Example ex = parse_example(read_file(example_path));
  Theory th = parse_theory(read_file(theory_path));
  if (exact && mc) throw std::runtime_error("--exact and --mc are mutually exclusive");
  ProbabilityEstimate est = mc ? q_monte_carlo(ex, k, th, trials, seed)
                               : q_exact(ex, k, th, budget);
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "q";
    j["config"] = config_echo({{"example", example_path},
                               {"theory", theory_path},
                               {"k", std::to_string(k)},
                               {"mode", mc ? "mc" : "exact"},
                               {"trials", std::to_string(mc ? trials : 0)},
                               {"seed", std::to_string(mc ? seed : 0)}});
    j["value"] = est.value.to_double();
    j["numerator"] = est.value.num();
    j["denominator"] = est.value.den();
    j["mode"] = mc ? "mc" : "exact";
    if (mc) j["trials"] = est.trials;
    j["k"] = est.k;
    j["theory_digest"] = format_hex(est.theory_digest);
    std::cout << j.dump(2) << "\n";
  } else {
    if (mc)
      std::cout << format_double(est.value.to_double()) << " (mc, " << est.trials
                << " trials)\n";
    else
      std::cout << est.value.str() << "\n";
  }
  return 0;
}

int cmd_mask(const std::string& example_path, const std::string& kind,
             const std::string& preds, double keep_p, std::uint64_t seed,
             const std::string& literals_path, const std::string& out_path) {
  Example ex = parse_example(read_file(example_path));
  Masker m;
  if (kind == "identity") {
    m = Masker::identity();
  } else if (kind == "positive-only") {
    m = Masker::positive_only(split_commas(preds));
  } else if (kind == "random-drop") {
    m = Masker::random_drop(keep_p, seed);
  } else if (kind == "literal-list") {
    if (literals_path.empty())
      throw std::runtime_error("literal-list masker needs --literals FILE");
    m = Masker::literal_list(parse_masked_literals(read_file(literals_path)).literals);
  } else {
    throw std::runtime_error("unknown masker kind: " + kind);
  }
  std::string text = print_masked(apply_mask(m, ex));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int cmd_infer(const std::string& example_path, const std::string& mask_path,
              const std::string& theory_path, std::uint32_t k, const std::string& gamma_str,
              const std::string& target_str, std::string mode, bool positive_only) {
  MaskedExample mask = load_mask(mask_path);
  Theory th = parse_theory(read_file(theory_path));
  Predicate target = parse_target(target_str);
  std::optional<Example> ex;
  if (!example_path.empty()) ex = parse_example(read_file(example_path));
  std::optional<Rational> gamma;
  if (!gamma_str.empty()) gamma = Rational::parse(gamma_str);
  if (mode.empty()) mode = gamma ? "vote" : "k";
  if (mode == "vote" && !gamma) throw std::runtime_error("vote mode needs --gamma");

  InferenceEngine engine(mask, th);
  EntailmentResult res = mode == "vote"
                             ? engine.voting_entailed_literals(k, *gamma, target, positive_only)
                             : engine.k_entailed_literals(k, target, positive_only);
  for (const auto& e : res.entries) {
    json j;
    j["literal"] = e.literal.atom.str();
    j["sign"] = e.literal.positive ? "positive" : "negative";
    if (res.mode == EntailmentResult::Mode::kVoting)
      j["votes"] = e.votes;
    else
      j["witness"] = e.witness;
    if (ex) j["true_in_example"] = ex->holds(e.literal);
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_errors(const std::string& example_path, const std::string& mask_path,
               const std::string& theory_path, std::uint32_t k, const std::string& gamma_str,
               const std::string& target_str, bool positive_only, const std::string& format) {
  Example ex = parse_example(read_file(example_path));
  MaskedExample mask = load_mask(mask_path);
  Theory th = parse_theory(read_file(theory_path));
  Predicate target = parse_target(target_str);
  std::optional<Rational> gamma;
  if (!gamma_str.empty()) gamma = Rational::parse(gamma_str);

  Rational q = q_exact(ex, k, th).value;
  auto wrong = false_entailed(ex, mask, th, k, gamma, target, positive_only);
  double bound =
      gamma ? bounds::worst_case_voting(q.to_double(), ex.domain_size(), k, target.arity,
                                        gamma->to_double())
            : bounds::worst_case_k(q.to_double(), ex.domain_size(), k, target.arity);
  const char* bound_name = gamma ? "prop4" : "prop3";
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "errors";
    j["q_test"] = {{"numerator", q.num()}, {"denominator", q.den()}, {"value", q.to_double()}};
    j["false_entailed"] = json::array();
    for (const Literal& l : wrong) j["false_entailed"].push_back(l.str());
    j["count"] = wrong.size();
    j["bound"] = {{"theorem", bound_name}, {"value", bound}};
    j["respected"] = static_cast<double>(wrong.size()) <= bound;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Q = " << q.str() << "\n";
    std::cout << "|F| = " << wrong.size() << "\n";
    std::cout << bound_name << " bound = " << format_double(bound) << "\n";
    std::cout << (static_cast<double>(wrong.size()) <= bound ? "bound respected"
                                                             : "BOUND VIOLATED")
              << "\n";
  }
  return 0;
}

int cmd_bounds(const std::string& theorem, double q, std::uint64_t c, std::uint32_t k,
               std::uint32_t a, double gamma, std::uint64_t n, std::uint64_t u,
               std::uint64_t hsize, double delta, double eps, bool one_sided, bool invert,
               bool positive_only, const std::string& format) {
  bounds::LiteralConvention conv = positive_only ? bounds::LiteralConvention::kPositiveOnly
                                                 : bounds::LiteralConvention::kSigned;
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "bounds";
  j["theorem"] = theorem;
  double value = 0.0;
  if (theorem == "prop3") {
    value = bounds::worst_case_k(q, c, k, a);
    j["vacuous"] = value >= bounds::literal_total(c, a, conv);
  } else if (theorem == "prop4") {
    value = bounds::worst_case_voting(q, c, k, a, gamma);
    j["vacuous"] = value >= bounds::literal_total(c, a, conv);
  } else if (theorem == "tail1") {
    value = invert ? bounds::invert_tail(n, k, delta, bounds::TailKind::kOneSample,
                                         std::nullopt, !one_sided)
                   : bounds::tail_one_sample(n, k, eps, !one_sided);
  } else if (theorem == "tail2") {
    value = invert ? bounds::invert_tail(n, k, delta, bounds::TailKind::kTwoSample, u,
                                         !one_sided)
                   : bounds::tail_two_sample(n, u, k, eps, !one_sided);
  } else if (theorem == "tailr") {
    value = invert ? bounds::invert_tail(n, k, delta, bounds::TailKind::kRealizable)
                   : bounds::tail_realizable(n, k, eps);
  } else {
    bounds::BoundReport rep;
    if (theorem == "thm7")
      rep = bounds::pac_realizable_expected(n, u, k, a, hsize, delta, conv);
    else if (theorem == "thm8")
      rep = bounds::pac_expected(q, n, u, k, a, hsize, delta, conv);
    else if (theorem == "thm9")
      rep = bounds::pac_actual(q, n, u, k, a, hsize, delta, conv);
    else if (theorem == "thm10")
      rep = bounds::pac_voting(q, n, u, k, a, gamma, hsize, delta, conv);
    else
      throw std::runtime_error("unknown theorem id: " + theorem);
    value = rep.value;
    j["vacuous"] = rep.vacuous;
    j["literal_total"] = rep.literal_total;
    if (theorem == "thm9") j["alt_value"] = rep.alt_value;
    if (theorem == "thm10") j["fraction"] = rep.fraction;
  }
  j["value"] = value;
  j["inputs"] = {{"q", q},     {"c", c},         {"k", k},     {"a", a},
                 {"gamma", gamma}, {"n", n},     {"u", u},     {"hsize", hsize},
                 {"delta", delta}, {"eps", eps}, {"one_sided", one_sided},
                 {"invert", invert}};
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << format_double(value) << "\n";
  return 0;
}

int cmd_generate(const std::string& scenario, std::uint64_t n, double density,
                 const std::string& vocab, std::uint64_t friendships, std::uint64_t smokers,
                 std::uint64_t seed, const std::string& out_path) {
  Example ex = make_scenario(scenario, n, density, vocab, friendships, smokers, seed);
  std::string text = print_example(ex);
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return 0;
}

int cmd_concentration(const std::string& scenario, std::uint64_t size, double density,
                      const std::string& vocab, std::uint64_t scenario_seed,
                      const std::string& example_path, const std::string& theory_path,
                      std::uint32_t k, std::uint32_t n, std::uint32_t u_val, bool has_u,
                      const std::string& eps_str, std::uint64_t trials, std::uint64_t seed,
                      unsigned threads, const std::string& out_csv, const std::string& format) {
  Example aleph = example_path.empty()
                      ? make_scenario(scenario, size, density, vocab, 0, 0, scenario_seed)
                      : parse_example(read_file(example_path));
  Theory th = parse_theory(read_file(theory_path));
  std::vector<double> grid;
  for (const std::string& e : split_commas(eps_str)) grid.push_back(std::stod(e));
  std::optional<std::uint32_t> u;
  if (has_u) u = u_val;
  ConcentrationReport rep =
      validate_concentration(aleph, th, k, n, u, grid, trials, seed, threads);
  if (!out_csv.empty()) write_file(out_csv, concentration_csv(rep));
  if (format == "json") {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "concentration";
    j["two_sample"] = rep.two_sample;
    j["trials"] = rep.trials;
    j["n"] = rep.n;
    if (rep.two_sample) j["u"] = rep.u;
    j["k"] = rep.k;
    j["a_global"] = {{"numerator", rep.a_global.num()},
                     {"denominator", rep.a_global.den()},
                     {"value", rep.a_global.to_double()}};
    j["rows"] = json::array();
    for (const auto& r : rep.rows)
      j["rows"].push_back({{"eps", r.eps},
                           {"emp_upper", r.emp_upper},
                           {"emp_lower", r.emp_lower},
                           {"emp_two", r.emp_two},
                           {"bound_one", r.bound_one},
                           {"bound_two", r.bound_two}});
    if (!rep.realizable_rows.empty()) {
      j["emp_zero"] = rep.emp_zero;
      j["realizable_rows"] = json::array();
      for (const auto& r : rep.realizable_rows)
        j["realizable_rows"].push_back({{"eps", r.eps}, {"bound", r.bound}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "eps      emp_upper  emp_lower  emp_two    bound_one  bound_two\n";
    for (const auto& r : rep.rows) {
      std::printf("%-8g %-10g %-10g %-10g %-10g %-10g\n", r.eps, r.emp_upper, r.emp_lower,
                  r.emp_two, r.bound_one, r.bound_two);
    }
    if (!rep.realizable_rows.empty()) {
      std::printf("P[estimate = 0] = %g\n", rep.emp_zero);
      for (const auto& r : rep.realizable_rows)
        std::printf("  realizable eps=%-8g bound=%g\n", r.eps, r.bound);
    }
  }
  return 0;
}

std::map<std::string, std::string> parse_config_file(const std::string& text) {
  std::map<std::string, std::string> kv;
  int line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      bool blank = true;
      for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (blank) continue;
      throw std::runtime_error("config line " + std::to_string(line_no) +
                               ": expected key = value");
    }
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

int cmd_experiment(const std::string& config_path) {
  auto kv = parse_config_file(read_file(config_path));
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };
  auto require = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("config missing required key: " + key);
    return it->second;
  };
  // relative paths inside the config resolve against the config's directory
  std::filesystem::path base = std::filesystem::path(config_path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  Example aleph = get("example", "").empty()
                      ? make_scenario(require("scenario"), std::stoull(require("size")),
                                      std::stod(get("density", "0.1")), get("vocab", ""),
                                      std::stoull(get("friendships", "0")),
                                      std::stoull(get("smokers", "0")),
                                      std::stoull(get("scenario_seed", "0")))
                      : parse_example(read_file(resolve(get("example", ""))));

  std::vector<Theory> theories;
  for (const std::string& path : split_commas(require("hypothesis_files")))
    theories.push_back(parse_theory(read_file(resolve(path))));
  HypothesisClass hypotheses(std::move(theories));

  PacConfig cfg;
  cfg.k = static_cast<std::uint32_t>(std::stoul(require("k")));
  cfg.target = parse_target(require("target"));
  cfg.n = static_cast<std::uint32_t>(std::stoul(require("n")));
  cfg.u = static_cast<std::uint32_t>(std::stoul(require("u")));
  if (!get("gamma", "").empty()) cfg.gamma = Rational::parse(get("gamma", ""));
  std::string mask_kind = get("mask_kind", "positive-only");
  if (mask_kind == "identity")
    cfg.masker = Masker::identity();
  else if (mask_kind == "positive-only")
    cfg.masker = Masker::positive_only(split_commas(get("mask_preds", "")));
  else if (mask_kind == "random-drop")
    cfg.masker = Masker::random_drop(std::stod(get("mask_p", "0.5")),
                                     std::stoull(get("mask_seed", "0")));
  else
    throw std::runtime_error("config: unknown mask_kind " + mask_kind);
  cfg.outer_trials = std::stoull(get("trials", get("outer_trials", "100")));
  cfg.inner_trials = std::stoull(get("inner_trials", "1"));
  cfg.delta = std::stod(get("delta", "0.05"));
  cfg.seed = std::stoull(get("seed", "0"));
  cfg.positive_only_targets = get("positive_only_targets", "0") == "1";
  unsigned hw = std::thread::hardware_concurrency();
  cfg.threads = static_cast<unsigned>(std::stoul(get("threads", std::to_string(hw ? hw : 1))));

  PacExperimentResult result = run_pac_experiment(aleph, hypotheses, cfg);

  std::string out_dir = resolve(get("out_dir", "."));
  std::filesystem::create_directories(out_dir);
  write_file(out_dir + "/trials.csv", trials_csv(result));
  write_file(out_dir + "/outer_trials.csv", outers_csv(result));

  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["command"] = "experiment";
  summary["config"] = config_echo(kv);
  summary["hypothesis_count"] = result.q_global.size();
  summary["q_global"] = json::array();
  for (const Rational& q : result.q_global)
    summary["q_global"].push_back(
        {{"numerator", q.num()}, {"denominator", q.den()}, {"value", q.to_double()}});
  summary["trials"] = result.trials.size();
  summary["outer_trials"] = result.outers.size();
  summary["thm9_violation_rate"] = result.thm9_violation_rate;
  summary["thm10_violation_rate"] = result.thm10_violation_rate;
  summary["thm7_violation_rate"] = result.thm7_violation_rate;
  summary["thm8_violation_rate"] = result.thm8_violation_rate;
  write_file(out_dir + "/summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_transform(const std::string& theory_path, const std::string& example_path,
                  const std::string& out_prefix) {
  // theory here may contain constants, so parse formulas without the
  // constant-free requirement (parse_theory allows constants already)
  Theory th = parse_theory(read_file(theory_path));
  Example ex = parse_example(read_file(example_path));
  ConstantEliminationResult res = eliminate_constants(th, ex);
  write_file(out_prefix + ".th", print_theory(res.theory));
  write_file(out_prefix + ".ex", print_example(res.example));
  std::cout << "wrote " << out_prefix << ".th and " << out_prefix << ".ex\n";
  return 0;
}

int cmd_selftest() {
  auto checks = run_selftest();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "[ OK ] " : "[FAIL] ") << c.name;
    if (!c.passed) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    if (c.passed) ++passed;
  }
  std::cout << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounded logical inference over relational data with error bounds"};
  app.require_subcommand(1);

  // q
  std::string q_example, q_theory, q_format = "text";
  std::uint32_t q_k = 1;
  bool q_exact_flag = false, q_mc_flag = false;
  std::uint64_t q_trials = 10000, q_seed = 0, q_budget = kDefaultQBudget;
  auto* q_cmd = app.add_subcommand("q", "probability of a theory on an example");
  q_cmd->add_option("--example", q_example)->required();
  q_cmd->add_option("--theory", q_theory)->required();
  q_cmd->add_option("--k", q_k)->required();
  q_cmd->add_flag("--exact", q_exact_flag);
  q_cmd->add_flag("--mc", q_mc_flag);
  q_cmd->add_option("--trials", q_trials);
  q_cmd->add_option("--seed", q_seed);
  q_cmd->add_option("--budget", q_budget);
  q_cmd->add_option("--format", q_format)->check(CLI::IsMember({"text", "json"}));

  // mask
  std::string m_example, m_kind, m_preds, m_literals, m_out;
  double m_p = 1.0;
  std::uint64_t m_seed = 0;
  auto* m_cmd = app.add_subcommand("mask", "apply a masking process to an example");
  m_cmd->add_option("--example", m_example)->required();
  m_cmd->add_option("--kind", m_kind)
      ->required()
      ->check(CLI::IsMember({"identity", "positive-only", "random-drop", "literal-list"}));
  m_cmd->add_option("--pred", m_preds, "comma-separated predicate names (positive-only)");
  m_cmd->add_option("--p", m_p, "keep probability (random-drop)");
  m_cmd->add_option("--seed", m_seed);
  m_cmd->add_option("--literals", m_literals, "literal file (literal-list)");
  m_cmd->add_option("--out", m_out);

  // infer
  std::string i_example, i_mask, i_theory, i_gamma, i_target, i_mode;
  std::uint32_t i_k = 2;
  bool i_pos_only = false;
  auto* i_cmd = app.add_subcommand("infer", "entailed literals from masked evidence");
  i_cmd->add_option("--example", i_example, "complete example to mark truth against");
  i_cmd->add_option("--mask", i_mask)->required();
  i_cmd->add_option("--theory", i_theory)->required();
  i_cmd->add_option("--k", i_k)->required();
  i_cmd->add_option("--gamma", i_gamma, "voting parameter, e.g. 2/3 or 0.05");
  i_cmd->add_option("--target", i_target, "pred/arity")->required();
  i_cmd->add_option("--mode", i_mode)->check(CLI::IsMember({"k", "vote"}));
  i_cmd->add_flag("--positive-only", i_pos_only);

  // errors
  std::string e_example, e_mask, e_theory, e_gamma, e_target, e_format = "text";
  std::uint32_t e_k = 2;
  bool e_pos_only = false;
  auto* e_cmd = app.add_subcommand("errors", "error set size vs worst-case bound");
  e_cmd->add_option("--example", e_example)->required();
  e_cmd->add_option("--mask", e_mask)->required();
  e_cmd->add_option("--theory", e_theory)->required();
  e_cmd->add_option("--k", e_k)->required();
  e_cmd->add_option("--gamma", e_gamma);
  e_cmd->add_option("--target", e_target)->required();
  e_cmd->add_flag("--positive-only", e_pos_only);
  e_cmd->add_option("--format", e_format)->check(CLI::IsMember({"text", "json"}));

  // bounds
  std::string b_theorem, b_format = "text";
  double b_q = 1.0, b_gamma = 0.0, b_delta = 0.05, b_eps = 0.0;
  std::uint64_t b_c = 0, b_n = 0, b_u = 0, b_h = 1;
  std::uint32_t b_k = 1, b_a = 1;
  bool b_one_sided = false, b_invert = false, b_pos_only = false;
  auto* b_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
  b_cmd->add_option("--theorem", b_theorem)
      ->required()
      ->check(CLI::IsMember(
          {"prop3", "prop4", "thm7", "thm8", "thm9", "thm10", "tail1", "tail2", "tailr"}));
  b_cmd->add_option("--q", b_q);
  b_cmd->add_option("--c", b_c);
  b_cmd->add_option("--k", b_k);
  b_cmd->add_option("--a", b_a);
  b_cmd->add_option("--gamma", b_gamma);
  b_cmd->add_option("--n", b_n);
  b_cmd->add_option("--u", b_u);
  b_cmd->add_option("--hsize", b_h);
  b_cmd->add_option("--delta", b_delta);
  b_cmd->add_option("--eps", b_eps);
  b_cmd->add_flag("--one-sided", b_one_sided);
  b_cmd->add_flag("--invert", b_invert, "solve the tail bound for eps at --delta");
  b_cmd->add_flag("--positive-only", b_pos_only);
  b_cmd->add_option("--format", b_format)->check(CLI::IsMember({"text", "json"}));

  // generate
  std::string g_scenario, g_vocab, g_out;
  std::uint64_t g_n = 0, g_friendships = 0, g_smokers = 0, g_seed = 0;
  double g_density = 0.1;
  auto* g_cmd = app.add_subcommand("generate", "emit a benchmark example file");
  g_cmd->add_option("--scenario", g_scenario)
      ->required()
      ->check(CLI::IsMember({"rare-clique", "rare-chain", "smokers", "random"}));
  g_cmd->add_option("--n", g_n)->required();
  g_cmd->add_option("--density", g_density);
  g_cmd->add_option("--vocab", g_vocab, "random scenario vocabulary, e.g. r/2,q/1");
  g_cmd->add_option("--friendships", g_friendships);
  g_cmd->add_option("--smokers", g_smokers);
  g_cmd->add_option("--seed", g_seed);
  g_cmd->add_option("--out", g_out);

  // concentration
  std::string c_scenario = "rare-clique", c_vocab, c_example, c_theory, c_eps, c_out,
              c_format = "text";
  std::uint64_t c_size = 2000, c_scenario_seed = 0, c_trials = 1000, c_seed = 0;
  double c_density = 0.1;
  std::uint32_t c_k = 2, c_n = 100, c_u = 0;
  unsigned c_threads = std::thread::hardware_concurrency();
  auto* c_cmd = app.add_subcommand("concentration", "validate concentration tails empirically");
  c_cmd->add_option("--scenario", c_scenario);
  c_cmd->add_option("--size", c_size);
  c_cmd->add_option("--density", c_density);
  c_cmd->add_option("--vocab", c_vocab);
  c_cmd->add_option("--scenario-seed", c_scenario_seed);
  c_cmd->add_option("--example", c_example, "use an example file instead of a scenario");
  c_cmd->add_option("--theory", c_theory)->required();
  c_cmd->add_option("--k", c_k)->required();
  c_cmd->add_option("--n", c_n)->required();
  auto* c_u_opt = c_cmd->add_option("--u", c_u, "enables the two-sample check");
  c_cmd->add_option("--eps", c_eps, "comma-separated grid")->required();
  c_cmd->add_option("--trials", c_trials);
  c_cmd->add_option("--seed", c_seed);
  c_cmd->add_option("--threads", c_threads);
  c_cmd->add_option("--out", c_out, "write CSV here");
  c_cmd->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));

  // experiment
  std::string x_config;
  auto* x_cmd = app.add_subcommand("experiment", "run a PAC experiment from a config file");
  x_cmd->add_option("--config", x_config)->required();

  // transform
  auto* t_cmd = app.add_subcommand("transform", "theory/example transforms");
  std::string t_theory, t_example, t_prefix;
  auto* t_elim = t_cmd->add_subcommand("eliminate-constants",
                                       "rewrite theory constants into auxiliary predicates");
  t_elim->add_option("--theory", t_theory)->required();
  t_elim->add_option("--example", t_example)->required();
  t_elim->add_option("--out-prefix", t_prefix)->required();
  t_cmd->require_subcommand(1);

  // selftest
  auto* s_cmd = app.add_subcommand("selftest", "run the built-in example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (q_cmd->parsed())
      return cmd_q(q_example, q_theory, q_k, q_exact_flag, q_mc_flag, q_trials, q_seed,
                   q_budget, q_format);
    if (m_cmd->parsed())
      return cmd_mask(m_example, m_kind, m_preds, m_p, m_seed, m_literals, m_out);
    if (i_cmd->parsed())
      return cmd_infer(i_example, i_mask, i_theory, i_k, i_gamma, i_target, i_mode, i_pos_only);
    if (e_cmd->parsed())
      return cmd_errors(e_example, e_mask, e_theory, e_k, e_gamma, e_target, e_pos_only,
                        e_format);
    if (b_cmd->parsed())
      return cmd_bounds(b_theorem, b_q, b_c, b_k, b_a, b_gamma, b_n, b_u, b_h, b_delta, b_eps,
                        b_one_sided, b_invert, b_pos_only, b_format);
    if (g_cmd->parsed())
      return cmd_generate(g_scenario, g_n, g_density, g_vocab, g_friendships, g_smokers,
                          g_seed, g_out);
    if (c_cmd->parsed())
      return cmd_concentration(c_scenario, c_size, c_density, c_vocab, c_scenario_seed,
                               c_example, c_theory, c_k, c_n, c_u, c_u_opt->count() > 0, c_eps,
                               c_trials, c_seed, c_threads, c_out, c_format);
    if (x_cmd->parsed()) return cmd_experiment(x_config);
    if (t_cmd->parsed()) return cmd_transform(t_theory, t_example, t_prefix);
    if (s_cmd->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 2;
}
