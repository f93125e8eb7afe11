#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gaussalg/gauss.hpp"
#include "gaussalg/jacobian.hpp"
#include "gaussalg/polymatroid.hpp"
#include "gaussalg/reference.hpp"
#include "gaussalg/report.hpp"
#include "gaussalg/sets.hpp"

namespace ga = gaussalg;
namespace fs = std::filesystem;

namespace {

int default_threads() {
  if (const char* e = std::getenv("GAUSSALG_THREADS")) {
    const int n = std::atoi(e);
    if (n >= 1) return n;
  }
  return 1;
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

ga::Json envelope(const std::string& command, ga::Json config, ga::Json results,
                  std::uint64_t nodes, std::int64_t wall_ms) {
  ga::Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["config"] = std::move(config);
  j["results"] = std::move(results);
  ga::Json stats;
  stats["nodes"] = nodes;
  stats["wall_ms"] = wall_ms;
  j["stats"] = std::move(stats);
  return j;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return true;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return false;
  }
  f << content;
  return true;
}

// ---- tiny set-expression parser: term ('-' term)*, terms are constructor
// calls like mon_star(4,10,5) or literal monomials like {1,1,1,1} ----

class SetExprParser {
 public:
  explicit SetExprParser(std::string s) : s_(std::move(s)) {}

  ga::MonomialSet parse() {
    ga::MonomialSet acc = term();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      acc = acc.difference(term());
      skip();
    }
    if (pos_ != s_.size()) fail("trailing characters");
    return acc;
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ga::InvalidArgument("set expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ga::Int number() {
    skip();
    std::size_t q = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (q == pos_) fail("expected a number");
    return std::stoll(s_.substr(q, pos_ - q));
  }

  ga::MonomialSet term() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '{') {
      ++pos_;
      std::vector<ga::Int> exps;
      exps.push_back(number());
      skip();
      while (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        exps.push_back(number());
        skip();
      }
      expect('}');
      ga::Monomial m(static_cast<ga::Index>(exps.size()));
      for (std::size_t i = 0; i < exps.size(); ++i) m(static_cast<ga::Index>(i)) = exps[i];
      return ga::MonomialSet::from_monomials(m.size(), {m});
    }
    std::size_t q = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    const std::string name = s_.substr(q, pos_ - q);
    expect('(');
    std::vector<ga::Int> args;
    args.push_back(number());
    skip();
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      args.push_back(number());
      skip();
    }
    expect(')');
    auto want = [&](std::size_t n) {
      if (args.size() != n)
        fail(name + " expects " + std::to_string(n) + " arguments");
    };
    if (name == "veronese") {
      want(2);
      return ga::veronese(args[0], args[1]);
    }
    if (name == "mon") {
      want(3);
      return ga::mon(args[0], args[1], args[2]);
    }
    if (name == "mon_star") {
      want(3);
      return ga::mon_star(args[0], args[1], args[2]);
    }
    if (name == "e_set") {
      want(1);
      return ga::e_set(args[0]);
    }
    if (name == "e_set_closed") {
      want(1);
      return ga::e_set_closed(args[0]);
    }
    if (name == "predicted") {
      want(1);
      return ga::predicted_generators(args[0]);
    }
    fail("unknown set constructor '" + name + "'");
  }
};

void print_set_summary(std::ostream& os, const std::string& label, const ga::MonomialSet& s) {
  os << label << ": " << s.size() << " monomials";
  if (!s.empty()) {
    const auto reps = ga::orbit_representatives(s);
    os << ", " << reps.size() << " orbit shapes\n";
    for (const auto& p : reps)
      os << "  " << p.to_string() << " x " << ga::orbit_size(p, s.dimension()) << "\n";
  } else {
    os << "\n";
  }
}

// ---- subcommand runners ----

int run_sets(const std::string& kind, ga::Int t, ga::Int r, ga::Int d, const std::string& output) {
  ga::MonomialSet s;
  std::string label;
  if (kind == "veronese") {
    s = ga::veronese(r, d);
    label = "veronese(" + std::to_string(r) + "," + std::to_string(d) + ")";
  } else if (kind == "mon") {
    s = ga::mon(t, r, d);
    label = "mon(" + std::to_string(t) + "," + std::to_string(r) + "," + std::to_string(d) + ")";
  } else if (kind == "mon_star") {
    s = ga::mon_star(t, r, d);
    label =
        "mon_star(" + std::to_string(t) + "," + std::to_string(r) + "," + std::to_string(d) + ")";
  } else if (kind == "e_set") {
    s = ga::e_set(d);
    label = "e_set(" + std::to_string(d) + ")";
  } else if (kind == "e_set_closed") {
    s = ga::e_set_closed(d);
    label = "e_set_closed(" + std::to_string(d) + ")";
  } else {
    std::cerr << "error: unknown set kind '" << kind << "'\n";
    return 2;
  }
  std::ostringstream lines;
  s.write_lines(lines);
  if (!write_output(output, lines.str())) return 2;
  print_set_summary(std::cerr, label, s);
  return 0;
}

int equality_exit_code(const ga::EqualityReport& rep) {
  const bool escapes = rep.sample && !rep.sample->escapes.empty();
  if (rep.missing_count() > 0 || !rep.extra.empty() || escapes) return 1;
  if (rep.exhausted_count() > 0) return 3;
  return 0;
}

int emit_equality(const std::string& command, ga::Json config, const ga::EqualityReport& rep,
                  std::int64_t wall_ms, const std::string& output, const std::string& format) {
  std::string payload;
  if (format == "json") {
    payload = envelope(command, std::move(config), ga::to_json(rep), rep.nodes, wall_ms).dump(2);
    payload += '\n';
  } else if (format == "csv") {
    payload = ga::to_csv(rep);
  } else {
    payload = ga::to_text(rep);
  }
  if (!write_output(output, payload)) return 2;
  return equality_exit_code(rep);
}

int run_verify(ga::Index d, const std::string& mode, std::uint64_t budget, int threads,
               const std::string& output, const std::string& format) {
  ga::VerifyOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  const ga::VerifyMode m =
      mode == "witness" ? ga::VerifyMode::witness : ga::VerifyMode::enumerate;
  const auto start = std::chrono::steady_clock::now();
  const ga::EqualityReport rep = ga::verify_equality(d, m, opts);
  ga::Json config;
  config["d"] = d;
  config["mode"] = mode;
  config["budget"] = budget;
  return emit_equality("verify", std::move(config), rep, elapsed_ms(start), output, format);
}

int run_conjecture(ga::Index d, std::uint64_t budget, std::uint64_t seed, std::uint64_t samples,
                   int threads, const std::string& cache_dir, const std::string& output,
                   const std::string& format) {
  ga::VerifyOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  opts.seed = seed;
  opts.samples = samples;
  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir);
    const std::string dir = cache_dir;
    opts.load_table = [dir](ga::Index k) -> std::optional<ga::WitnessTable> {
      std::ifstream f(fs::path(dir) / ("witness_table_d" + std::to_string(k) + ".json"));
      if (!f) return std::nullopt;
      const ga::Json j = ga::Json::parse(f, nullptr, false);
      if (j.is_discarded()) return std::nullopt;
      return ga::table_from_json(j);
    };
    opts.store_table = [dir](ga::Index k, const ga::WitnessTable& table) {
      std::ofstream f(fs::path(dir) / ("witness_table_d" + std::to_string(k) + ".json"));
      if (f) f << ga::table_to_json(k, table).dump(2) << '\n';
    };
  }
  const auto start = std::chrono::steady_clock::now();
  const ga::EqualityReport rep = ga::conjecture_check(d, opts);
  ga::Json config;
  config["d"] = d;
  config["budget"] = budget;
  config["seed"] = seed;
  config["samples"] = samples;
  return emit_equality("conjecture", std::move(config), rep, elapsed_ms(start), output, format);
}

int run_polymatroid(const std::string& expr, int threads, const std::string& output,
                    const std::string& format) {
  const ga::MonomialSet s = SetExprParser(expr).parse();
  const auto start = std::chrono::steady_clock::now();
  const auto violation = ga::exchange_check(s, threads);
  ga::Json config;
  config["set"] = expr;
  std::string payload;
  if (format == "json") {
    ga::Json results;
    results["size"] = s.size();
    results["result"] = violation ? "violation" : "ok";
    if (violation) results["violation"] = ga::to_json(*violation);
    payload = envelope("polymatroid", std::move(config), std::move(results), 0,
                       elapsed_ms(start))
                  .dump(2);
    payload += '\n';
  } else if (format == "csv") {
    payload = violation ? ga::to_csv(*violation) : "field,value\nresult,ok\n";
  } else {
    payload = violation ? ga::to_text(*violation)
                        : "exchange property holds (" + std::to_string(s.size()) + " monomials)\n";
  }
  if (!write_output(output, payload)) return 2;
  return violation ? 1 : 0;
}

int run_selfcheck(std::uint64_t samples, std::uint64_t seed, bool inject_fault,
                  const std::string& output, const std::string& format) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ga::Witness> fixtures = ga::reference_witnesses();
  if (inject_fault && !fixtures.empty()) fixtures.front().target(0) += 1;

  std::size_t witness_failures = 0, identity_failures = 0;
  for (const ga::Witness& w : fixtures) {
    if (ga::validate_witness(w) != ga::WitnessIssue::ok) ++witness_failures;
    if (ga::check_identity(w.generators)) ++identity_failures;
  }

  struct Family {
    ga::Int r;
    ga::Index d;
  };
  const Family families[] = {{2, 4}, {2, 5}, {3, 5}, {3, 6}};
  std::mt19937_64 rng(seed);
  auto bounded = [&](std::uint64_t m) {
    const std::uint64_t lim = (~std::uint64_t{0} / m) * m;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= lim);
    return x % m;
  };
  ga::Json sample_rows = ga::Json::array();
  std::size_t sample_failures = 0;
  for (const Family& fam : families) {
    const ga::MonomialSet cands = ga::veronese(fam.r, fam.d);
    std::vector<std::size_t> idx(cands.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::size_t bad = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
      for (ga::Index i = 0; i < fam.d; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) + static_cast<std::size_t>(bounded(idx.size() - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
      }
      std::vector<ga::Monomial> subset;
      for (ga::Index i = 0; i < fam.d; ++i)
        subset.emplace_back(cands[idx[static_cast<std::size_t>(i)]]);
      if (ga::check_identity(subset)) ++bad;
    }
    sample_failures += bad;
    ga::Json row;
    row["r"] = fam.r;
    row["d"] = fam.d;
    row["draws"] = samples;
    row["identity_failures"] = bad;
    sample_rows.push_back(std::move(row));
  }

  const bool ok = witness_failures == 0 && identity_failures == 0 && sample_failures == 0;
  ga::Json results;
  results["fixtures"] = fixtures.size();
  results["witness_failures"] = witness_failures;
  results["identity_failures"] = identity_failures;
  results["samples"] = std::move(sample_rows);
  results["result"] = ok ? "ok" : "failed";

  ga::Json config;
  config["samples"] = samples;
  config["seed"] = seed;

  std::string payload;
  if (format == "json") {
    payload = envelope("selfcheck", std::move(config), std::move(results), 0, elapsed_ms(start))
                  .dump(2);
    payload += '\n';
  } else {
    std::ostringstream os;
    os << "fixtures: " << fixtures.size() << ", witness failures: " << witness_failures
       << ", identity failures: " << identity_failures
       << ", sample failures: " << sample_failures << '\n'
       << (ok ? "OK" : "FAILED") << '\n';
    payload = os.str();
  }
  if (!write_output(output, payload)) return 2;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation of Gauss algebras of monomial subalgebras"};
  app.require_subcommand(1);

  int rc = 0;

  // sets
  auto* sets = app.add_subcommand("sets", "emit a monomial family in line format");
  std::string sets_kind;
  ga::Int sets_t = 0, sets_r = 0, sets_d = 0;
  std::string sets_output = "-";
  sets->add_option("kind", sets_kind, "veronese | mon | mon_star | e_set | e_set_closed")
      ->required();
  sets->add_option("--t", sets_t, "minimum support size");
  sets->add_option("--r", sets_r, "degree");
  sets->add_option("--d", sets_d, "number of variables")->required();
  sets->add_option("--output,-o", sets_output, "output file ('-' = stdout)");
  sets->callback([&] { rc = run_sets(sets_kind, sets_t, sets_r, sets_d, sets_output); });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check the classification of cubic squarefree Gauss generators (d = 5..7)");
  ga::Index verify_d = 5;
  std::string verify_mode = "enumerate";
  std::uint64_t verify_budget = 10'000'000;
  int verify_threads = default_threads();
  std::string verify_output = "-", verify_format = "json";
  verify->add_option("--d", verify_d, "dimension")->required()->check(CLI::Range(5, 7));
  verify->add_option("--mode", verify_mode, "enumerate | witness")
      ->check(CLI::IsMember({"enumerate", "witness"}));
  verify->add_option("--budget", verify_budget, "search node budget per target");
  verify->add_option("--threads", verify_threads, "worker threads (env GAUSSALG_THREADS)");
  verify->add_option("--output,-o", verify_output, "report file ('-' = stdout)");
  verify->add_option("--format", verify_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->callback([&] {
    rc = run_verify(verify_d, verify_mode, verify_budget, verify_threads, verify_output,
                    verify_format);
  });

  // conjecture
  auto* conj = app.add_subcommand(
      "conjecture", "witness-based equality check beyond the proven range (d >= 8)");
  ga::Index conj_d = 8;
  std::uint64_t conj_budget = 10'000'000, conj_seed = 0, conj_samples = 1000;
  int conj_threads = default_threads();
  std::string conj_cache, conj_output = "-", conj_format = "json";
  conj->add_option("--d", conj_d, "dimension")->required()->check(CLI::Range(8, 12));
  conj->add_option("--budget", conj_budget, "search node budget per target");
  conj->add_option("--seed", conj_seed, "seed for the random subset sample");
  conj->add_option("--samples", conj_samples, "random subset draws for the reverse containment");
  conj->add_option("--threads", conj_threads, "worker threads (env GAUSSALG_THREADS)");
  conj->add_option("--cache-dir", conj_cache, "directory for persisted witness tables");
  conj->add_option("--output,-o", conj_output, "report file ('-' = stdout)");
  conj->add_option("--format", conj_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  conj->callback([&] {
    rc = run_conjecture(conj_d, conj_budget, conj_seed, conj_samples, conj_threads, conj_cache,
                        conj_output, conj_format);
  });

  // polymatroid
  auto* poly = app.add_subcommand("polymatroid",
                                  "check the exchange property of a single-degree set");
  std::string poly_expr, poly_output = "-", poly_format = "json";
  int poly_threads = default_threads();
  poly->add_option("--set", poly_expr,
                   "set expression, e.g. 'mon_star(4,10,5)-e_set(5)' or 'mon(3,4,4)-{1,1,1,1}'")
      ->required();
  poly->add_option("--threads", poly_threads, "worker threads (env GAUSSALG_THREADS)");
  poly->add_option("--output,-o", poly_output, "report file ('-' = stdout)");
  poly->add_option("--format", poly_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  poly->callback([&] { rc = run_polymatroid(poly_expr, poly_threads, poly_output, poly_format); });

  // selfcheck
  auto* self = app.add_subcommand("selfcheck",
                                  "validate the fixture corpus and the Jacobian identity");
  std::uint64_t self_samples = 200, self_seed = 0;
  bool self_fault = false;
  std::string self_output = "-", self_format = "json";
  self->add_option("--samples", self_samples, "random subsets per family");
  self->add_option("--seed", self_seed, "sampling seed");
  self->add_option("--output,-o", self_output, "report file ('-' = stdout)");
  self->add_option("--format", self_format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  self->add_flag("--inject-fault", self_fault, "corrupt one fixture (for testing)")->group("");
  self->callback(
      [&] { rc = run_selfcheck(self_samples, self_seed, self_fault, self_output, self_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ga::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
