#pragma once

// Configuration, orchestration and report serialization for the padicg-verify tool.
//
// Config file: one `key = value` per line, '#' starts a comment. Scalar keys are
// p, r, precision, suite, format, out, jobs, fail_fast, verbose. Each
//   job = suite=euler p=5 r=1 precision=4 restrict=2,3
// line adds one job; restrict lists element codes (sum c_i p^i) of x or lambda.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "padicg/verify.hpp"

namespace padicg::cli {

enum class Format { json, csv, text };

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2, kIoError = 3 };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::vector<JobSpec> jobs;
  Format format = Format::text;
  std::string out;  // empty: stdout
  unsigned parallelism = 1;
  bool fail_fast = false;
  bool verbose = false;
};

/// Raw settings before jobs are expanded; config-file values, then command-line overrides.
struct Settings {
  std::optional<std::string> p, r, precision, suite, format, out, jobs;
  std::optional<bool> fail_fast, verbose;
  std::vector<std::string> job_lines;
};

inline const std::vector<std::pair<u64, unsigned>>& default_battery() {
  static const std::vector<std::pair<u64, unsigned>> fields = {{3, 1},  {5, 1}, {7, 1}, {11, 1},
                                                              {13, 1}, {3, 2}, {5, 2}, {7, 2}};
  return fields;
}

inline constexpr unsigned kMaxPrecision = 30;

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline u64 parse_uint(const std::string& key, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw UsageError(key + " must be a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError(key + " is out of range: '" + text + "'");
  }
}

inline bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw UsageError(key + " must be true or false, got '" + text + "'");
}

inline u64 parse_p(const std::string& text) {
  u64 p = parse_uint("p", text);
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
  return p;
}

inline unsigned parse_r(const std::string& text) {
  u64 r = parse_uint("r", text);
  if (r < 1 || r > kMaxDegree) throw UsageError("r must lie in [1, " + std::to_string(kMaxDegree) + "]");
  return static_cast<unsigned>(r);
}

inline unsigned parse_precision(const std::string& text) {
  u64 n = parse_uint("precision", text);
  if (n < 1 || n > kMaxPrecision)
    throw UsageError("invalid precision " + text + ": must lie in [1, " + std::to_string(kMaxPrecision) + "]");
  return static_cast<unsigned>(n);
}

inline std::vector<Suite> parse_suites(const std::string& text) {
  if (text == "all") return {kAllSuites.begin(), kAllSuites.end()};
  auto s = parse_suite(text);
  if (!s) throw UsageError("unknown suite '" + text + "'");
  return {*s};
}

inline Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw UsageError("unknown format '" + text + "' (expected json, csv or text)");
}

inline void check_field_size(u64 p, unsigned r) {
  u64 q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw UsageError("field order p^r exceeds " + std::to_string(kMaxFieldOrder));
  }
}

/// Parses "suite=euler p=5 r=1 precision=4 restrict=2,3" into one or more jobs.
inline std::vector<JobSpec> parse_job_line(const std::string& line) {
  std::istringstream in(line);
  std::string token;
  std::map<std::string, std::string> kv;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) throw UsageError("job field '" + token + "' is not key=value");
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const auto& [k, v] : kv)
    if (k != "suite" && k != "p" && k != "r" && k != "precision" && k != "restrict")
      throw UsageError("unknown job field '" + k + "'");
  if (!kv.count("suite") || !kv.count("p")) throw UsageError("job needs at least suite= and p=");
  JobSpec base;
  base.p = parse_p(kv["p"]);
  base.r = kv.count("r") ? parse_r(kv["r"]) : 1;
  check_field_size(base.p, base.r);
  if (kv.count("precision")) base.precision = parse_precision(kv["precision"]);
  if (kv.count("restrict")) {
    std::stringstream list(kv["restrict"]);
    std::string item;
    while (std::getline(list, item, ',')) base.restrict_to.push_back(parse_uint("restrict", trim(item)));
  }
  std::vector<JobSpec> jobs;
  for (Suite s : parse_suites(kv["suite"])) {
    JobSpec j = base;
    j.suite = s;
    jobs.push_back(j);
  }
  return jobs;
}

}  // namespace detail

/// Reads a config file into settings; later keys override earlier ones.
inline void read_config_file(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  unsigned lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key == "job") s.job_lines.push_back(value);
    else if (key == "p") s.p = value;
    else if (key == "r") s.r = value;
    else if (key == "precision") s.precision = value;
    else if (key == "suite") s.suite = value;
    else if (key == "format") s.format = value;
    else if (key == "out") s.out = value;
    else if (key == "jobs") s.jobs = value;
    else if (key == "fail_fast") s.fail_fast = detail::parse_bool(key, value);
    else if (key == "verbose") s.verbose = detail::parse_bool(key, value);
    else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

/// Expands settings into a validated Config.
///
/// Explicit p/r/suite settings generate jobs (over the default battery when p is
/// absent), sorted by (p, r, suite name); otherwise the config's job lines are used
/// in the order listed. A precision setting overrides every job's precision.
inline Config build_config(const Settings& s, bool cli_selects_jobs) {
  Config c;
  if (s.format) c.format = detail::parse_format(*s.format);
  if (s.out) c.out = *s.out;
  if (s.jobs) {
    u64 k = detail::parse_uint("jobs", *s.jobs);
    if (k < 1 || k > 256) throw UsageError("jobs must lie in [1, 256]");
    c.parallelism = static_cast<unsigned>(k);
  }
  c.fail_fast = s.fail_fast.value_or(false);
  c.verbose = s.verbose.value_or(false);

  std::optional<unsigned> precision;
  if (s.precision) precision = detail::parse_precision(*s.precision);

  const bool generate = cli_selects_jobs || s.job_lines.empty();
  if (generate) {
    if (!s.suite) {
      if (s.job_lines.empty()) throw UsageError("no jobs: give --suite or a config file with job lines");
      throw UsageError("--p/--r need --suite");
    }
    auto suites = detail::parse_suites(*s.suite);
    std::vector<std::pair<u64, unsigned>> fields;
    if (s.p) {
      unsigned r = s.r ? detail::parse_r(*s.r) : 1;
      fields.emplace_back(detail::parse_p(*s.p), r);
    } else {
      if (s.r) throw UsageError("--r needs --p");
      fields = default_battery();
    }
    for (auto [p, r] : fields) {
      detail::check_field_size(p, r);
      for (Suite suite : suites) c.jobs.push_back({p, r, precision, suite, {}});
    }
    std::stable_sort(c.jobs.begin(), c.jobs.end(), [](const JobSpec& a, const JobSpec& b) {
      return std::make_tuple(a.p, a.r, suite_name(a.suite)) < std::make_tuple(b.p, b.r, suite_name(b.suite));
    });
  } else {
    for (const auto& line : s.job_lines)
      for (auto& job : detail::parse_job_line(line)) {
        if (precision) job.precision = precision;
        c.jobs.push_back(std::move(job));
      }
  }
  if (c.jobs.empty()) throw UsageError("no jobs to run");
  return c;
}

/// Parses the command line (including an optional --config file). Returns nullopt
/// after printing help; throws UsageError on invalid input.
inline std::optional<Config> parse_args(int argc, const char* const* argv, std::ostream& help_out = std::cout) {
  CLI::App app{"Exhaustive verification of p-adic hypergeometric identities over small finite fields",
               "padicg-verify"};
  std::optional<std::string> p, r, precision, suite, config_path, format, out, jobs;
  bool fail_fast = false, verbose = false;
  app.add_option("--p", p, "odd prime p");
  app.add_option("--r", r, "extension degree r (q = p^r), default 1");
  app.add_option("--precision", precision, "p-adic precision N (default: per suite)");
  app.add_option("--suite", suite,
                 "euler|zeros|clausen|oracles|inversion|charsums|gamma|floors|all");
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--format", format, "json|csv|text (default text)");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--jobs", jobs, "number of jobs run in parallel");
  app.add_flag("--fail-fast", fail_fast, "stop at the first failing case");
  app.add_flag("--verbose", verbose, "list every case");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Settings s;
  if (config_path) read_config_file(*config_path, s);
  auto take = [](std::optional<std::string>& dst, const std::optional<std::string>& src) {
    if (src) dst = src;
  };
  take(s.p, p);
  take(s.r, r);
  take(s.precision, precision);
  take(s.suite, suite);
  take(s.format, format);
  take(s.out, out);
  take(s.jobs, jobs);
  if (fail_fast) s.fail_fast = true;
  if (verbose) s.verbose = true;
  return build_config(s, p || r || suite);
}

// --- serialization ---------------------------------------------------------

inline std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

inline nlohmann::json to_json(const Report& r, bool with_cases = false) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf{{"input", f.input}, {"left", f.left}, {"right", f.right}};
    jf["left_int"] = f.left_int ? nlohmann::json(*f.left_int) : nlohmann::json(nullptr);
    jf["right_int"] = f.right_int ? nlohmann::json(*f.right_int) : nlohmann::json(nullptr);
    failures.push_back(std::move(jf));
  }
  nlohmann::json j{{"suite", std::string(suite_name(r.job.suite))},
                   {"p", r.job.p},
                   {"r", r.job.r},
                   {"N", r.N},
                   {"q", r.q},
                   {"cases_total", r.cases_total},
                   {"cases_passed", r.cases_passed},
                   {"skipped", r.skipped},
                   {"failures", std::move(failures)},
                   {"elapsed_ms", r.elapsed_ms}};
  if (r.skipped) j["skip_reason"] = r.skip_reason;
  if (!r.job.restrict_to.empty()) j["restrict"] = r.job.restrict_to;
  if (with_cases) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& cs : r.cases) cases.push_back({{"input", cs.input}, {"passed", cs.passed}});
    j["cases"] = std::move(cases);
  }
  return j;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  auto suite = parse_suite(j.at("suite").get<std::string>());
  if (!suite) throw std::invalid_argument("unknown suite in report");
  r.job.suite = *suite;
  r.job.p = j.at("p").get<u64>();
  r.job.r = j.at("r").get<unsigned>();
  r.N = j.at("N").get<unsigned>();
  r.job.precision = r.N;
  r.q = j.at("q").get<u64>();
  r.cases_total = j.at("cases_total").get<std::size_t>();
  r.cases_passed = j.at("cases_passed").get<std::size_t>();
  r.skipped = j.at("skipped").get<bool>();
  if (j.contains("skip_reason")) r.skip_reason = j["skip_reason"].get<std::string>();
  if (j.contains("restrict")) r.job.restrict_to = j["restrict"].get<std::vector<u64>>();
  for (const auto& jf : j.at("failures")) {
    Failure f{jf.at("input"), jf.at("left"), jf.at("right"), std::nullopt, std::nullopt};
    if (!jf.at("left_int").is_null()) f.left_int = jf["left_int"].get<i64>();
    if (!jf.at("right_int").is_null()) f.right_int = jf["right_int"].get<i64>();
    r.failures.push_back(std::move(f));
  }
  if (j.contains("cases"))
    for (const auto& jc : j["cases"]) r.cases.push_back({jc.at("input"), jc.at("passed").get<bool>()});
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const std::vector<Report>& reports, bool verbose) {
  os << "kind,suite,p,r,N,q,cases_total,cases_passed,skipped,failures,elapsed_ms,input,passed\n";
  for (const auto& r : reports) {
    const std::string head = std::string(suite_name(r.job.suite)) + "," + std::to_string(r.job.p) + "," +
                             std::to_string(r.job.r) + "," + std::to_string(r.N) + "," + std::to_string(r.q);
    os << "summary," << head << ',' << r.cases_total << ',' << r.cases_passed << ',' << (r.skipped ? "true" : "false")
       << ',' << r.failures.size() << ',' << format_ms(r.elapsed_ms) << ",,\n";
    if (!verbose) continue;
    for (const auto& cs : r.cases)
      os << "case," << head << ",,,,,," << csv_field(cs.input) << ',' << (cs.passed ? "true" : "false") << '\n';
  }
}

inline void write_text(std::ostream& os, const std::vector<Report>& reports, bool verbose) {
  for (const auto& r : reports) {
    os << suite_name(r.job.suite) << " p=" << r.job.p << " r=" << r.job.r << " N=" << r.N << " q=" << r.q << ": ";
    if (r.skipped) {
      os << "skipped (" << r.skip_reason << ")\n";
      continue;
    }
    os << r.cases_passed << "/" << r.cases_total << " passed (" << format_ms(r.elapsed_ms) << " ms)\n";
    if (verbose)
      for (const auto& cs : r.cases) os << "  " << (cs.passed ? "ok   " : "FAIL ") << cs.input << '\n';
    for (const auto& f : r.failures) {
      os << "  failure " << f.input << ": left " << f.left << " right " << f.right;
      if (f.left_int || f.right_int)
        os << " (" << (f.left_int ? std::to_string(*f.left_int) : "?") << " vs "
           << (f.right_int ? std::to_string(*f.right_int) : "?") << ")";
      os << '\n';
    }
  }
}

inline void write_reports(std::ostream& os, const std::vector<Report>& reports, const Config& c) {
  switch (c.format) {
    case Format::json: {
      nlohmann::json all = nlohmann::json::array();
      for (const auto& r : reports) all.push_back(to_json(r, c.verbose));
      os << all.dump(2) << '\n';
      break;
    }
    case Format::csv: write_csv(os, reports, c.verbose); break;
    case Format::text: write_text(os, reports, c.verbose); break;
  }
}

// --- execution -------------------------------------------------------------

/// Runs every job; results keep job order whatever the parallelism. With fail_fast,
/// jobs not yet started when a failure is seen are dropped.
inline std::vector<Report> run_jobs(const Config& c, const SuiteOptions& base_opts = {}) {
  SuiteOptions opts = base_opts;
  opts.fail_fast = opts.fail_fast || c.fail_fast;
  std::vector<std::optional<Report>> slots(c.jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= c.jobs.size()) return;
      if (opts.fail_fast && failed.load()) continue;
      try {
        Report r = run_job(c.jobs[i], opts);
        if (!r.ok()) failed = true;
        slots[i] = std::move(r);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(c.parallelism, c.jobs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<Report> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

/// Runs the config and writes the reports; returns the process exit code.
inline int run(const Config& c, std::ostream& console, std::ostream& errors, const SuiteOptions& opts = {}) {
  std::vector<Report> reports;
  try {
    reports = run_jobs(c, opts);
  } catch (const std::invalid_argument& e) {
    errors << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const IntegrityError& e) {
    errors << "integrity failure: " << e.what() << '\n';
    return kVerificationFailure;
  }
  if (c.out.empty()) {
    write_reports(console, reports, c);
    if (!console) return kIoError;
  } else {
    std::ofstream file(c.out);
    if (!file) {
      errors << "error: cannot open output file '" << c.out << "'\n";
      return kIoError;
    }
    write_reports(file, reports, c);
    file.flush();
    if (!file) {
      errors << "error: writing '" << c.out << "' failed\n";
      return kIoError;
    }
  }
  std::size_t failing = 0;
  for (const auto& r : reports) {
    if (r.ok()) continue;
    ++failing;
    errors << "FAILED " << suite_name(r.job.suite) << " p=" << r.job.p << " r=" << r.job.r << ": "
           << r.failures.size() << " failing case(s)";
    if (!r.failures.empty()) errors << ", first " << r.failures.front().input;
    errors << '\n';
  }
  if (reports.size() < c.jobs.size()) errors << "fail-fast: " << c.jobs.size() - reports.size() << " job(s) not run\n";
  return failing == 0 ? kPass : kVerificationFailure;
}

}  // namespace padicg::cli
