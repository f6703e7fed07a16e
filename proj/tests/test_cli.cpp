#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "padicg/cli.hpp"

using namespace padicg;
using namespace padicg::cli;

namespace {

std::optional<Config> parse(std::vector<std::string> args, std::ostream& help = std::cout) {
  args.insert(args.begin(), "padicg-verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data(), help);
}

std::string usage_message(std::vector<std::string> args) {
  try {
    parse(std::move(args));
  } catch (const UsageError& e) {
    return e.what();
  }
  return "<no error>";
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("padicg-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    auto p = path_ / name;
    std::ofstream(p) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

Config single(Suite s, u64 p, unsigned r = 1) {
  Config c;
  JobSpec j;
  j.suite = s;
  j.p = p;
  j.r = r;
  c.jobs.push_back(j);
  return c;
}

}  // namespace

TEST(ParseArgs, SingleJob) {
  auto c = parse({"--p", "5", "--r", "1", "--precision", "4", "--suite", "euler"});
  ASSERT_TRUE(c);
  ASSERT_EQ(c->jobs.size(), 1u);
  EXPECT_EQ(c->jobs[0].p, 5u);
  EXPECT_EQ(c->jobs[0].r, 1u);
  EXPECT_EQ(c->jobs[0].precision, 4u);
  EXPECT_EQ(c->jobs[0].suite, Suite::euler);
  EXPECT_EQ(c->format, Format::text);
  EXPECT_EQ(c->parallelism, 1u);
  EXPECT_FALSE(c->fail_fast);
}

TEST(ParseArgs, AllSuitesOverDefaultBattery) {
  auto c = parse({"--suite", "all"});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->jobs.size(), 64u);
  std::set<std::pair<u64, unsigned>> fields;
  for (const auto& j : c->jobs) fields.emplace(j.p, j.r);
  EXPECT_EQ(fields.size(), 8u);
  // Sorted by (p, r, suite name).
  EXPECT_EQ(c->jobs.front().p, 3u);
  EXPECT_EQ(c->jobs.front().suite, Suite::charsums);
  EXPECT_EQ(c->jobs[1].suite, Suite::clausen);
  EXPECT_EQ(c->jobs.back().p, 13u);
  EXPECT_EQ(c->jobs.back().suite, Suite::zeros);
  for (std::size_t k = 1; k < c->jobs.size(); ++k) {
    const auto& a = c->jobs[k - 1];
    const auto& b = c->jobs[k];
    EXPECT_LT(std::make_tuple(a.p, a.r, suite_name(a.suite)), std::make_tuple(b.p, b.r, suite_name(b.suite)));
  }
}

TEST(ParseArgs, Errors) {
  EXPECT_EQ(usage_message({"--p", "4", "--suite", "euler"}), "p must be an odd prime");
  EXPECT_EQ(usage_message({"--p", "2", "--suite", "euler"}), "p must be an odd prime");
  EXPECT_NE(usage_message({"--suite", "bogus"}).find("unknown suite"), std::string::npos);
  EXPECT_NE(usage_message({"--suite", "euler", "--precision", "0"}).find("invalid precision"), std::string::npos);
  EXPECT_NE(usage_message({"--suite", "euler", "--precision", "x"}).find("precision"), std::string::npos);
  EXPECT_NE(usage_message({"--suite", "euler", "--format", "xml"}).find("unknown format"), std::string::npos);
  EXPECT_NE(usage_message({"--suite", "euler", "--jobs", "0"}).find("jobs"), std::string::npos);
  EXPECT_NE(usage_message({"--p", "5", "--r", "9", "--suite", "euler"}).find("field order"), std::string::npos);
  EXPECT_NE(usage_message({}).find("no jobs"), std::string::npos);
  EXPECT_NE(usage_message({"--p", "5"}).find("--suite"), std::string::npos);
  EXPECT_NE(usage_message({"--bogus"}), "<no error>");
}

TEST(ParseArgs, Help) {
  std::ostringstream help;
  auto c = parse({"--help"}, help);
  EXPECT_FALSE(c);
  EXPECT_NE(help.str().find("--suite"), std::string::npos);
  EXPECT_NE(help.str().find("--fail-fast"), std::string::npos);
}

TEST(ParseArgs, Flags) {
  auto c = parse({"--suite", "gamma", "--p", "7", "--format", "json", "--out", "x.json", "--jobs", "3",
                  "--fail-fast", "--verbose"});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->format, Format::json);
  EXPECT_EQ(c->out, "x.json");
  EXPECT_EQ(c->parallelism, 3u);
  EXPECT_TRUE(c->fail_fast);
  EXPECT_TRUE(c->verbose);
}

TEST(ConfigFile, JobLinesKeepListedOrder) {
  TempDir dir;
  auto path = dir.file("a.conf",
                       "# battery subset\n"
                       "format = csv\n"
                       "job = suite=zeros p=7\n"
                       "job = suite=euler p=5 precision=6 restrict=2,3\n"
                       "\n"
                       "job = suite=clausen p=3 r=2   # trailing comment\n");
  auto c = parse({"--config", path});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->format, Format::csv);
  ASSERT_EQ(c->jobs.size(), 3u);
  EXPECT_EQ(c->jobs[0].suite, Suite::zeros);
  EXPECT_EQ(c->jobs[0].p, 7u);
  EXPECT_EQ(c->jobs[1].precision, 6u);
  EXPECT_EQ(c->jobs[1].restrict_to, (std::vector<u64>{2, 3}));
  EXPECT_EQ(c->jobs[2].r, 2u);
}

TEST(ConfigFile, CommandLineOverrides) {
  TempDir dir;
  auto path = dir.file("b.conf", "p = 5\nsuite = euler\nformat = csv\nprecision = 4\n");
  auto c = parse({"--config", path, "--p", "7", "--format", "json"});
  ASSERT_TRUE(c);
  ASSERT_EQ(c->jobs.size(), 1u);
  EXPECT_EQ(c->jobs[0].p, 7u);
  EXPECT_EQ(c->jobs[0].precision, 4u);
  EXPECT_EQ(c->format, Format::json);

  auto jobs = dir.file("c.conf", "job = suite=euler p=5 precision=6\njob = suite=gamma p=7\n");
  auto d = parse({"--config", jobs, "--precision", "8"});
  ASSERT_TRUE(d);
  for (const auto& j : d->jobs) EXPECT_EQ(j.precision, 8u);

  // Selecting jobs on the command line replaces the config's job list.
  auto e = parse({"--config", jobs, "--suite", "floors", "--p", "11"});
  ASSERT_TRUE(e);
  ASSERT_EQ(e->jobs.size(), 1u);
  EXPECT_EQ(e->jobs[0].suite, Suite::floors);
}

TEST(ConfigFile, Errors) {
  TempDir dir;
  EXPECT_NE(usage_message({"--config", dir.path("missing.conf")}).find("cannot read"), std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("e.conf", "")}).find("no jobs"), std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("f.conf", "colour = red\n")}).find("unknown key"), std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("g.conf", "just words\n")}).find("key = value"), std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("h.conf", "job = suite=euler\n")}).find("p="), std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("i.conf", "job = suite=euler p=9\n")}).find("odd prime"),
            std::string::npos);
  EXPECT_NE(usage_message({"--config", dir.file("j.conf", "job = suite=euler p=5 colour=red\n")})
                .find("unknown job field"),
            std::string::npos);
}

TEST(Reports, JsonRoundTrip) {
  JobSpec j;
  j.suite = Suite::charsums;
  j.p = 7;
  j.restrict_to = {2, 3};
  Report r = run_job(j);
  ASSERT_FALSE(r.failures.empty());
  auto json = to_json(r, true);
  for (const char* key : {"suite", "p", "r", "N", "q", "cases_total", "cases_passed", "skipped", "failures", "elapsed_ms"})
    EXPECT_TRUE(json.contains(key)) << key;
  Report back = report_from_json(nlohmann::json::parse(json.dump()));
  EXPECT_EQ(to_json(back, true), json);
  EXPECT_EQ(back.job.restrict_to, r.job.restrict_to);
  EXPECT_EQ(back.failures.front().left_int, r.failures.front().left_int);

  Report skipped = run_job(JobSpec{3, 1, std::nullopt, Suite::euler, {}});
  EXPECT_EQ(to_json(report_from_json(to_json(skipped)), false), to_json(skipped));
}

TEST(Reports, CsvRowsOnlyInVerboseMode) {
  Report r = run_job(JobSpec{5, 1, std::nullopt, Suite::euler, {}});
  auto rows = [&](bool verbose) {
    std::ostringstream os;
    write_csv(os, {r}, verbose);
    std::vector<std::string> out;
    std::istringstream in(os.str());
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
  };
  auto quiet = rows(false), loud = rows(true);
  ASSERT_EQ(quiet.size(), 2u);
  EXPECT_EQ(quiet[0].rfind("kind,suite,p,r,N,q,", 0), 0u);
  EXPECT_EQ(quiet[1].rfind("summary,euler,5,1,4,5,4,4,false,0,", 0), 0u);
  ASSERT_EQ(loud.size(), 2u + r.cases.size());
  EXPECT_EQ(loud[2].rfind("case,euler,5,1,4,5,", 0), 0u);
  EXPECT_NE(loud[2].find(",true"), std::string::npos);
}

TEST(Reports, TextShowsFailuresAndSkips) {
  std::ostringstream os;
  write_text(os, {run_job(JobSpec{7, 1, std::nullopt, Suite::charsums, {}}), run_job(JobSpec{3, 1, std::nullopt, Suite::zeros, {}})},
             false);
  EXPECT_NE(os.str().find("charsums p=7 r=1"), std::string::npos);
  EXPECT_NE(os.str().find("failure lambda="), std::string::npos);
  EXPECT_NE(os.str().find("zeros p=3 r=1 N=4 q=3: skipped"), std::string::npos);
}

TEST(Run, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(run(single(Suite::euler, 5), out, err), kPass);
  EXPECT_EQ(run(single(Suite::euler, 3), out, err), kPass);  // skipped suites do not fail

  std::ostringstream err2;
  EXPECT_EQ(run(single(Suite::charsums, 5), out, err2), kVerificationFailure);
  EXPECT_NE(err2.str().find("FAILED charsums p=5"), std::string::npos);

  Config low = single(Suite::zeros, 5);
  low.jobs[0].precision = 1;
  std::ostringstream err3;
  EXPECT_EQ(run(low, out, err3), kUsageError);
  EXPECT_NE(err3.str().find("p^N >= 7"), std::string::npos);
}

TEST(Run, IoErrorIsDistinct) {
  TempDir dir;
  Config c = single(Suite::floors, 5);
  c.out = dir.path("no/such/dir/report.json");
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), kIoError);
  EXPECT_NE(err.str().find("cannot open"), std::string::npos);

  c.out = dir.path("report.json");
  c.format = Format::json;
  EXPECT_EQ(run(c, out, err), kPass);
  std::ifstream in(c.out);
  auto json = nlohmann::json::parse(in);
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0]["suite"], "floors");
}

TEST(Run, CorruptedGammaNamesSuiteAndInput) {
  SuiteOptions opts;
  opts.gamma_hook = [](u64 rep, u64 value) { return rep % 7 == 3 ? 2 * value : value; };
  std::ostringstream out, err;
  EXPECT_EQ(run(single(Suite::euler, 7), out, err, opts), kVerificationFailure);
  EXPECT_NE(err.str().find("FAILED euler p=7 r=1"), std::string::npos);
  EXPECT_NE(err.str().find("first x="), std::string::npos);
}

TEST(Run, ParallelMatchesSequential) {
  auto c = parse({"--suite", "all", "--format", "json"});
  ASSERT_TRUE(c);
  c->jobs.erase(std::remove_if(c->jobs.begin(), c->jobs.end(), [](const JobSpec& j) { return j.p > 7; }),
                c->jobs.end());
  auto strip = [](std::vector<Report> rs) {
    nlohmann::json all = nlohmann::json::array();
    for (auto& r : rs) {
      auto j = to_json(r, true);
      j.erase("elapsed_ms");
      all.push_back(j);
    }
    return all;
  };
  auto seq = strip(run_jobs(*c));
  c->parallelism = 4;
  EXPECT_EQ(strip(run_jobs(*c)), seq);
}

TEST(Run, FailFastDropsLaterJobs) {
  Config c;
  for (Suite s : {Suite::charsums, Suite::euler, Suite::floors}) c.jobs.push_back(JobSpec{5, 1, std::nullopt, s, {}});
  c.fail_fast = true;
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), kVerificationFailure);
  EXPECT_NE(err.str().find("2 job(s) not run"), std::string::npos);
}
