#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fermat/app/analyze.hpp"
#include "fermat/app/trace_cache.hpp"
#include "fermat/error.hpp"

using namespace fermat;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("fermat-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
Error error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::Io, "none");
}

TraceCache cache(int m, std::vector<TraceEntry> entries) { return TraceCache{m, std::move(entries)}; }

}  // namespace

TEST(TraceCache, RoundTrip) {
  const auto dir = scratch_dir("roundtrip");
  const auto traces = sweep_traces(9, 0, 3000);
  const TraceCache c = cache(9, traces);
  const auto path = cache_file(dir, 9);
  EXPECT_EQ(path.filename(), "traces-m9.txt");
  write_trace_cache(path, c);
  EXPECT_EQ(read_trace_cache(path), c);
  EXPECT_EQ(read_text(path).rfind("#fermat-trace-cache v1 m=9\n", 0), 0u);
  ASSERT_EQ(traces[5].p, 19u);
  EXPECT_EQ(c.lookup(19), traces[5].t);
  EXPECT_FALSE(c.lookup(21).has_value());
  fs::remove_all(dir);
}

TEST(TraceCache, MergeDisjointAndSelf) {
  const auto lo = sweep_traces(15, 0, 2000);
  const auto hi = sweep_traces(15, 2000, 5000);
  const auto all = sweep_traces(15, 0, 5000);
  EXPECT_EQ(merge_trace_caches({cache(15, hi), cache(15, lo)}), cache(15, all));
  EXPECT_EQ(merge_trace_caches({cache(15, all), cache(15, all)}), cache(15, all));
  EXPECT_EQ(merge_trace_caches({cache(15, lo), cache(15, all)}), cache(15, all));
}

TEST(TraceCache, MergeConflictNamesPrime) {
  auto a = sweep_traces(9, 0, 200);
  auto b = a;
  b[5].t += 1;
  const auto e = error_of([&] { merge_trace_caches({cache(9, a), cache(9, b)}); });
  EXPECT_EQ(e.code(), ErrorCode::ConflictingEntry);
  EXPECT_NE(std::string(e.what()).find("p=" + std::to_string(a[5].p)), std::string::npos) << e.what();
}

TEST(TraceCache, MergeModulusMismatch) {
  EXPECT_EQ(error_of([] { merge_trace_caches({cache(9, {}), cache(15, {})}); }).code(), ErrorCode::FormatMismatch);
}

TEST(TraceCache, MalformedFiles) {
  const auto dir = scratch_dir("malformed");
  const std::vector<std::string> bad{
      "#fermat-trace-cache v2 m=9\n7 1\n",
      "#something-else v1 m=9\n",
      "#fermat-trace-cache v1 m=9\n7 1\n5 0\n",
      "#fermat-trace-cache v1 m=9\n7 1\n7 1\n",
      "#fermat-trace-cache v1 m=9\n7 x\n",
      "",
  };
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const auto path = dir / ("bad" + std::to_string(i));
    write_text(path, bad[i]);
    EXPECT_EQ(error_of([&] { read_trace_cache(path); }).code(), ErrorCode::FormatMismatch) << i;
  }
  EXPECT_EQ(error_of([&] { read_trace_cache(dir / "missing"); }).code(), ErrorCode::Io);
  fs::remove_all(dir);
}

TEST(CachedSweep, ReusesEntriesAndExtends) {
  const auto dir = scratch_dir("sweep");
  const auto first = cached_sweep(21, 4000, dir);
  EXPECT_EQ(first.reused, 0u);
  EXPECT_EQ(first.traces, sweep_traces(21, 0, 4000));
  const auto second = cached_sweep(21, 8000, dir);
  EXPECT_EQ(second.reused, first.traces.size());
  EXPECT_EQ(second.traces, sweep_traces(21, 0, 8000));
  EXPECT_EQ(read_trace_cache(cache_file(dir, 21)).entries, second.traces);
  const auto third = cached_sweep(21, 8000, dir);
  EXPECT_EQ(third.computed, 0u);
  fs::remove_all(dir);
}

TEST(Config, Validation) {
  AnalysisConfig ok;
  EXPECT_NO_THROW(ok.validate());
  std::vector<AnalysisConfig> bad(6);
  bad[0].m = 2;
  bad[1].prime_bound = 50;
  bad[2].prime_bound = max_sweep_bound + 1;
  bad[3].max_moment = 13;
  bad[4].moment_tolerance_percent = 0;
  bad[5].sweep.range_size = 0;
  for (std::size_t i = 0; i < bad.size(); ++i) {
    const auto e = error_of([&] { bad[i].validate(); });
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfig) << i;
    EXPECT_EQ(e.module(), Module::Cli) << i;
  }
}

TEST(Config, CacheDirFromEnvironment) {
  ::setenv("FERMAT_CACHE_DIR", "/tmp/fermat-env-cache", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/fermat-env-cache"));
  ::unsetenv("FERMAT_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/xdg/fermat"));
  ::unsetenv("XDG_CACHE_HOME");
}

TEST(VerdictTargets, SubsetsOfSizeOneAndTwoThenAll) {
  const auto t = default_verdict_targets(decompose_jacobian(15));
  const std::vector<std::vector<std::string>> expected{
      {"X"}, {"J5"}, {"J3"}, {"X", "J5"}, {"X", "J3"}, {"J5", "J3"}, {"X", "J5", "J3"}};
  EXPECT_EQ(t, expected);
  EXPECT_EQ(default_verdict_targets(decompose_jacobian(9)).size(), 3u);
}

TEST(Analyze, MatchesGoldenJson) {
  for (int m : {9, 15}) {
    AnalysisConfig c;
    c.m = m;
    const auto report = analyze(c);
    EXPECT_TRUE(report.consistent()) << m;
    EXPECT_EQ(exit_code(report), 0);
    const std::string text = to_json(report).dump(2) + "\n";
    EXPECT_EQ(text, read_text(fs::path(FERMAT_GOLDEN_DIR) / ("analyze_m" + std::to_string(m) + ".json"))) << m;
    EXPECT_EQ(to_json(analyze(c)).dump(2) + "\n", text) << m;
  }
}

TEST(Analyze, PrintedFactsForSeveralModuli) {
  for (int m : {18, 21, 27}) {
    AnalysisConfig c;
    c.m = m;
    c.max_moment = 6;
    const auto report = analyze(c);
    EXPECT_TRUE(report.consistent()) << m;
    for (const auto& ch : report.checks) EXPECT_TRUE(ch.passed) << m << " " << ch.name << ": " << ch.detail;
  }
}

TEST(Analyze, FrobeniusStageWithCache) {
  const auto dir = scratch_dir("analyze");
  AnalysisConfig c;
  c.m = 9;
  c.prime_bound = 20'000;
  c.max_moment = 4;
  c.cache_path = dir;
  const auto report = analyze(c);
  ASSERT_TRUE(report.numerical.has_value());
  ASSERT_TRUE(report.split.has_value());
  EXPECT_EQ(report.numerical_model, "conjectural component group");
  EXPECT_TRUE(fs::exists(cache_file(dir, 9)));
  const auto j = to_json(report);
  EXPECT_EQ(j["frobenius"]["numerical"]["primes"], report.numerical->primes);
  // m = 9 has no torsion at split primes
  EXPECT_EQ(report.split->torsion_free(), report.split->results.size());
  fs::remove_all(dir);
}

TEST(ExitCodes, ModuleContract) {
  EXPECT_EQ(failure_exit_code(Module::Algebra), 10);
  EXPECT_EQ(failure_exit_code(Module::Cli), 16);
  EXPECT_EQ(error_exit_code(Module::Frobenius), 25);
  DegeneracyReport r;
  EXPECT_EQ(exit_code(r), 0);
  r.checks.push_back({"a", Module::Hodge, true, ""});
  r.checks.push_back({"b", Module::SatoTate, false, ""});
  r.checks.push_back({"c", Module::Mt, false, ""});
  EXPECT_EQ(exit_code(r), failure_exit_code(Module::SatoTate));
  EXPECT_FALSE(r.consistent());
}

TEST(Errors, ModuleOfEachCode) {
  EXPECT_EQ(Error(ErrorCode::NotSublattice, "").module(), Module::Algebra);
  EXPECT_EQ(Error(ErrorCode::Unsupported, "").module(), Module::Cm);
  EXPECT_EQ(Error(ErrorCode::LedgerMismatch, "").module(), Module::Mt);
  EXPECT_EQ(Error(ErrorCode::CodimOutOfRange, "").module(), Module::Hodge);
  EXPECT_EQ(Error(ErrorCode::NotNormalizing, "").module(), Module::SatoTate);
  EXPECT_EQ(Error(ErrorCode::NotSplit, "").module(), Module::Frobenius);
  EXPECT_EQ(Error(ErrorCode::Io, "").module(), Module::Cli);
}
