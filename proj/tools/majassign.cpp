// majassign: command-line front end for majority-based house allocation.

#include <chrono>
#include <functional>
#include <memory>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majassign/covering.hpp"
#include "majassign/errors.hpp"
#include "majassign/experiments.hpp"
#include "majassign/majority.hpp"
#include "majassign/parallel.hpp"
#include "majassign/pareto.hpp"
#include "majassign/profile.hpp"
#include "majassign/reconstruct.hpp"
#include "majassign/rules.hpp"
#include "majassign/simd/kernels.hpp"
#include "majassign/topcycle.hpp"

namespace fs = std::filesystem;
using namespace majassign;

namespace {

struct Config {
  int brute_limit = kDefaultBruteLimit;
  int jobs = 0;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t count = 100000;
  std::string out;
  bool long_mode = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[time] " << what_ << ": " << ms << " ms\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

void print_set(const Profile& p, const std::string& name, const std::vector<AssignmentIndex>& set) {
  const Universe& u = Universe::of(p.size());
  std::cout << name << ": size " << set.size() << "\n";
  if (set.empty()) {
    std::cout << "  EMPTY\n";
    return;
  }
  for (auto i : set) std::cout << "  " << format_assignment(p, u.at(i)) << "\n";
}

void print_tc(const Profile& p, const std::string& name, const TcDescription& d) {
  std::cout << name << ": case " << d.case_name() << ", size " << d.size << "\n";
  auto line = [&](const char* tag, const Assignment& a) {
    std::cout << "  " << tag << " " << format_assignment(p, a) << "\n";
  };
  if (const auto* c = std::get_if<tc::CaseI>(&d.shape)) {
    line("member", c->winner);
  } else if (const auto* c2 = std::get_if<tc::CaseII>(&d.shape)) {
    line("member", c2->first);
    line("member", c2->second);
  } else if (const auto* c3 = std::get_if<tc::CaseIII>(&d.shape)) {
    std::cout << "  all assignments except:\n";
    line("excluded", c3->first);
    line("excluded", c3->second);
  } else if (const auto* c4 = std::get_if<tc::CaseIV>(&d.shape)) {
    std::cout << "  all assignments except:\n";
    line("excluded", c4->excluded);
  } else if (std::holds_alternative<tc::CaseV>(d.shape)) {
    std::cout << "  all assignments\n";
  } else {
    const auto& e = std::get<tc::Explicit>(d.shape);
    const Universe& u = Universe::of(p.size());
    for (auto i : e.members) line("member", u.at(i));
  }
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream s(item);
    std::string tok;
    while (std::getline(s, tok, ',')) {
      if (!tok.empty()) out.push_back(tok);
    }
  }
  return out;
}

const std::vector<std::string> kAllRules = {"po", "pp", "popular", "least-unpopular", "rank-maximal", "generous",
                                            "tc", "bc", "uc-mckelvey", "uc-bordes", "uc-gillies"};

void warn_brute_limit(const Config& cfg) {
  if (cfg.brute_limit >= 8) {
    std::cerr << "warning: brute limit 8 builds 40320x40320 bit relations (about 200 MB each)\n";
  }
}

int cmd_eval(const Config& cfg, const std::string& file, std::vector<std::string> rules,
             const std::vector<std::string>& variants) {
  warn_brute_limit(cfg);
  const Profile p = load_profile(file);
  rules = split_list(rules);
  if (rules.empty() || (rules.size() == 1 && rules[0] == "all")) rules = kAllRules;
  std::unique_ptr<MajorityMatrix> matrix;
  auto mat = [&]() -> const MajorityMatrix& {
    if (!matrix) {
      Stopwatch t("majority matrix");
      matrix = std::make_unique<MajorityMatrix>(p, cfg.brute_limit, cfg.jobs);
    }
    return *matrix;
  };
  for (const auto& rule : rules) {
    Stopwatch t(rule);
    if (rule == "po") {
      print_set(p, rule, pareto_optimal_set(p, cfg.brute_limit));
    } else if (rule == "pp") {
      print_set(p, rule, pareto_pessimal_set(p, cfg.brute_limit));
    } else if (rule == "popular") {
      print_set(p, rule, popular_set(mat()));
    } else if (rule == "least-unpopular") {
      const LeastUnpopular lu = least_unpopular_set(mat());
      std::cout << "least-unpopular: worst defeat margin " << lu.margin << "\n";
      print_set(p, rule, lu.members);
    } else if (rule == "rank-maximal") {
      print_set(p, rule, rank_maximal_set(p, cfg.brute_limit));
    } else if (rule == "generous") {
      print_set(p, rule, generous_set(p, cfg.brute_limit));
    } else if (rule == "tc") {
      print_tc(p, rule, tc_characterize(p));
    } else if (rule == "bc") {
      print_tc(p, rule, bc_characterize(p));
    } else if (rule == "tc-brute") {
      print_set(p, rule, tc_brute(mat()).indices());
    } else if (rule == "bc-brute") {
      print_set(p, rule, bc_brute(mat()).indices());
    } else if (rule == "uc" || rule.rfind("uc-", 0) == 0) {
      std::vector<std::string> names = rule == "uc" ? split_list(variants) : std::vector<std::string>{rule.substr(3)};
      if (names.empty()) names = {"mckelvey", "bordes", "gillies"};
      for (const auto& name : names) {
        const auto v = parse_covering_variant(name);
        if (!v) throw std::invalid_argument("unknown covering variant '" + name + "'");
        print_set(p, std::string("uc-") + to_string(*v), uncovered_two_step(mat(), *v, cfg.jobs).indices());
      }
    } else {
      throw std::invalid_argument("unknown rule '" + rule + "'");
    }
  }
  return 0;
}

int cmd_tc(const Config& cfg, const std::string& file, bool verify) {
  const Profile p = load_profile(file);
  const TcDescription d = tc_characterize(p);
  print_tc(p, "tc", d);
  if (verify) {
    const MajorityMatrix m(p, cfg.brute_limit, cfg.jobs);
    const bool same = tc_brute(m) == tc_members(d, cfg.brute_limit);
    std::cout << "brute-force agreement: " << (same ? "yes" : "no") << "\n";
    return same ? 0 : 1;
  }
  return 0;
}

int cmd_compare(const std::string& file, const std::string& a, const std::string& b) {
  const Profile p = load_profile(file);
  const MajorityOutcome o = compare(p, parse_assignment(p, a), parse_assignment(p, b));
  std::cout << (o.margin > 0 ? "+" : "") << o.margin << " " << to_string(o.verdict) << "\n";
  return 0;
}

int cmd_reconstruct(const std::string& file) {
  const Profile p = load_profile(file);
  MajorityOracle oracle = MajorityOracle::of(p);
  const RotationClass c = reconstruct(oracle);
  const std::vector<std::string> labels(p.labels().begin(), p.labels().end());
  auto relabel = [&](const Profile& q) {
    return Profile(std::vector<PreferenceOrder>(q.orders().begin(), q.orders().end()), labels);
  };
  std::cout << "queries: " << oracle.queries() << " (bound " << reconstruct_query_bound(p.size()) << ")\n";
  std::cout << "decomposition:";
  for (const auto& block : c.decomposition) {
    std::cout << " {";
    for (std::size_t i = 0; i < block.size(); ++i) std::cout << (i ? "," : "") << p.label(block[i]);
    std::cout << "}";
  }
  std::cout << "\nclass size: " << c.size() << "\n";
  int k = 0;
  for (const auto& member : c.members()) {
    std::cout << "# member " << ++k << "\n" << format_profile(relabel(member));
  }
  std::cout << "contains input: " << (c.contains(p) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_equiv(const Config& cfg, const std::string& fa, const std::string& fb) {
  const Profile a = load_profile(fa);
  const Profile b = load_profile(fb);
  if (a.size() != b.size() || !std::equal(a.labels().begin(), a.labels().end(), b.labels().begin())) {
    throw std::invalid_argument("profiles must share n and house labels");
  }
  std::cout << "rotation-equivalent: " << (rotation_equivalent(a, b) ? "yes" : "no") << "\n";
  if (a.size() <= std::min(5, cfg.brute_limit)) {
    const bool same = MajorityMatrix(a, cfg.brute_limit, cfg.jobs) == MajorityMatrix(b, cfg.brute_limit, cfg.jobs);
    std::cout << "majority-graph-equal: " << (same ? "yes" : "no") << "\n";
  }
  return 0;
}

void emit(const Config& cfg, const std::string& name, const std::function<void(std::ostream&)>& body) {
  if (cfg.out.empty()) {
    std::cout << "# " << name << "\n";
    body(std::cout);
    return;
  }
  fs::create_directories(cfg.out);
  const fs::path path = fs::path(cfg.out) / (name + ".csv");
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  body(f);
  std::cerr << "wrote " << path.string() << "\n";
}

void report(const Config& cfg, const Census& c, const std::string& stats) {
  if (stats == "uc-sizes") {
    emit(cfg, "po_sizes", [&](std::ostream& o) { write_histogram_csv(o, histogram_rows(c.po_sizes, c.profiles)); });
    for (auto v : kCoveringVariants) {
      emit(cfg, std::string("uc_sizes_") + to_string(v),
           [&](std::ostream& o) { write_histogram_csv(o, histogram_rows(c.uc(v), c.profiles)); });
    }
    std::cerr << "profiles with a McKelvey-covered rank-maximal assignment: " << c.rank_maximal_covered << "\n";
  } else if (stats == "uc-po-cdf") {
    for (auto v : kCoveringVariants) {
      emit(cfg, std::string("uc_po_cdf_") + to_string(v), [&](std::ostream& o) {
        write_cdf_csv(o, cdf_rows(c.uc_po_bucket[static_cast<std::size_t>(v)], c.profiles));
      });
    }
  } else if (stats == "tc-sizes") {
    std::cout << "tc sizes: {";
    bool first = true;
    for (const auto& [size, count] : c.tc_sizes) {
      std::cout << (first ? "" : ",") << size;
      first = false;
    }
    std::cout << "}\n";
    for (const auto& [size, count] : c.tc_sizes) std::cout << "  " << size << ": " << count << " profiles\n";
  } else if (stats == "fact") {
    std::cout << "fact check: " << c.fact_checked << " profiles, " << c.fact_violations.size() << " violations\n";
    for (const auto& v : c.fact_violations) std::cout << "  profile " << v.id << " item " << v.item << "\n";
  }
}

CensusOptions options_for(const Config& cfg, const std::string& stats) {
  CensusOptions o;
  o.jobs = cfg.jobs;
  o.uncovered = stats == "uc-sizes" || stats == "uc-po-cdf";
  o.fact = stats == "fact";
  o.tc_sizes = stats == "tc-sizes";
  if (!o.uncovered && !o.fact && !o.tc_sizes) throw std::invalid_argument("unknown statistic '" + stats + "'");
  return o;
}

int cmd_enumerate(const Config& cfg, int n, const std::string& stats) {
  const CensusOptions o = options_for(cfg, stats);
  const std::uint64_t total = canonical_count(n);
  Census c;
  {
    Stopwatch t("enumerate");
    if (n <= 4 || cfg.long_mode) {
      std::cerr << "enumerating all " << total << " canonical profiles for n=" << n << "\n";
      c = census_canonical(n, 0, total, o);
    } else {
      std::cerr << "n=" << n << " has " << total << " canonical profiles; sampling " << cfg.count
                << " uniformly (seed " << cfg.seed << "); pass --long for the full enumeration\n";
      c = census_canonical_sample(n, cfg.seed, cfg.count, o);
    }
  }
  report(cfg, c, stats);
  return 0;
}

int cmd_sample(const Config& cfg, int n, const std::string& stats) {
  const CensusOptions o = options_for(cfg, stats);
  Census c;
  {
    Stopwatch t("sample");
    c = census_impartial(n, cfg.seed, cfg.count, o);
  }
  report(cfg, c, stats);
  if (o.uncovered) {
    for (auto v : kCoveringVariants) {
      std::cout << "modal |UC| " << to_string(v) << ": " << modal_cardinality(c.uc(v)) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majority-based house allocation: rules, top cycles, uncovered sets, reconstruction"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--brute-limit", cfg.brute_limit, "Largest n for dense n!-sized structures (max 8)")
      ->envname("MAJASSIGN_BRUTE_LIMIT")
      ->check(CLI::Range(1, kMaxBruteLimit));
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->envname("MAJASSIGN_JOBS");
  app.add_option("--seed", cfg.seed, "Random seed")->envname("MAJASSIGN_SEED");
  app.add_option("--count", cfg.count, "Number of sampled profiles")->envname("MAJASSIGN_COUNT");
  app.add_option("--out", cfg.out, "Directory for CSV files (stdout if omitted)")->envname("MAJASSIGN_OUT");
  app.add_flag("--long", cfg.long_mode, "Full enumeration where it is expensive (n=5)")->envname("MAJASSIGN_LONG");

  std::string file, file_b, mu, lambda, stats = "uc-sizes";
  std::vector<std::string> rules, variants;
  int n = 3;
  bool verify = false;

  auto* eval = app.add_subcommand("eval", "Evaluate assignment rules on a profile");
  eval->add_option("profile", file, "Profile file")->required();
  eval->add_option("--rules", rules, "Comma-separated: " + [] {
    std::string s;
    for (const auto& r : kAllRules) s += (s.empty() ? "" : ",") + r;
    return s + ",uc,tc-brute,bc-brute (default: all)";
  }());
  eval->add_option("--variant", variants, "Covering variants for the 'uc' rule");

  auto* tc_cmd = app.add_subcommand("tc", "Top cycle through the closed-form characterization");
  tc_cmd->add_option("profile", file, "Profile file")->required();
  tc_cmd->add_flag("--verify", verify, "Cross-check against brute force");

  auto* cmp = app.add_subcommand("compare", "Majority margin of two assignments");
  cmp->add_option("profile", file, "Profile file")->required();
  cmp->add_option("mu", mu, "First assignment, e.g. a,b,c")->required();
  cmp->add_option("lambda", lambda, "Second assignment")->required();

  auto* rec = app.add_subcommand("reconstruct", "Recover all profiles sharing the majority graph of a profile");
  rec->add_option("profile", file, "Profile file backing the oracle")->required();

  auto* eq = app.add_subcommand("equiv", "Rotation equivalence of two profiles");
  eq->add_option("first", file, "Profile file")->required();
  eq->add_option("second", file_b, "Profile file")->required();

  auto* en = app.add_subcommand("enumerate", "Statistics over canonical profiles");
  en->add_option("--n", n, "Number of agents")->check(CLI::Range(1, 6));
  en->add_option("--stats", stats, "tc-sizes | uc-sizes | uc-po-cdf | fact");

  auto* sa = app.add_subcommand("sample", "Statistics over impartial-culture samples");
  sa->add_option("--n", n, "Number of agents")->check(CLI::Range(1, kMaxBruteLimit));
  sa->add_option("--stats", stats, "tc-sizes | uc-sizes | uc-po-cdf | fact");

  CLI11_PARSE(app, argc, argv);
  if (cfg.jobs <= 0) cfg.jobs = default_jobs();

  try {
    std::cerr << "[simd] " << simd::kernels().name << "\n";
    if (*eval) return cmd_eval(cfg, file, rules, variants);
    if (*tc_cmd) return cmd_tc(cfg, file, verify);
    if (*cmp) return cmd_compare(file, mu, lambda);
    if (*rec) return cmd_reconstruct(file);
    if (*eq) return cmd_equiv(cfg, file, file_b);
    if (*en) return cmd_enumerate(cfg, n, stats);
    if (*sa) {
      if (cfg.brute_limit < n) throw LimitExceeded("n=" + std::to_string(n) + " exceeds brute limit " +
                                                   std::to_string(cfg.brute_limit));
      return cmd_sample(cfg, n, stats);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
