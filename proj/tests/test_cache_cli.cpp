#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "kdvgal/cache.hpp"
#include "kdvgal/cli.hpp"
#include "kdvgal/engines.hpp"
#include "kdvgal/errors.hpp"

using namespace kdvgal;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  ::unsetenv(kCacheEnv);
  args.insert(args.begin(), "kdvgal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// A fresh path under the temp directory, removed on scope exit.
struct TempPath {
  std::filesystem::path path;
  explicit TempPath(const std::string& stem) {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".jsonl");
    std::filesystem::remove(path);
  }
  ~TempPath() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cache_error_line(const std::string& text) {
  Engines e;
  std::istringstream in(text);
  try {
    load_cache(in, e);
  } catch (const CacheError& err) {
    return err.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("save then load preserves every value") {
    Engines a;
    a.wk.free_energy({3, 4, 4, 0, 0});
    a.bgw.nbi_free_energy({2, 3, 3, 0, 0});
    std::ostringstream out;
    save_cache(out, a);
    Engines b;
    std::istringstream in(out.str());
    const std::size_t loaded = load_cache(in, b);
    CHECK(loaded == a.wk_table.size() + a.cbgw_table.size() + a.nbi_table.size());
    for (Provenance p : {Provenance::WK, Provenance::cBGW, Provenance::NBI}) {
      CHECK(a.table(p).snapshot() == b.table(p).snapshot());
    }
    std::ostringstream again;
    save_cache(again, b);
    CHECK(again.str() == out.str());
  }

  TEST_CASE("corrupt lines are rejected with their line number") {
    const std::string good = R"({"provenance":"WK","g":0,"ks":"0,0,0","value":"1"})";
    CHECK(cache_error_line(good + "\n") == 0);
    CHECK(cache_error_line(good + "\nnot json\n") == 2);
    CHECK(cache_error_line(good + "\n\n" + R"({"provenance":"WK","g":0,"ks":"0,0","value":"1"})") == 3);
    CHECK(cache_error_line(R"({"provenance":"XX","g":0,"ks":"0,0,0","value":"1"})") == 1);
    CHECK(cache_error_line(R"({"provenance":"WK","g":0,"ks":"0,0,0","value":"2/2"})") == 1);
    CHECK(cache_error_line(R"({"provenance":"WK","g":0,"ks":"0,0,0","value":0.5})") == 1);
    CHECK(cache_error_line(R"({"provenance":"WK","g":1,"ks":"1,0","value":"1"})") == 1);
    CHECK(cache_error_line(R"({"provenance":"WK","g":1,"ks":"1","value":"1/24","extra":1})") == 1);
    CHECK(cache_error_line(good + "\n" + R"({"provenance":"WK","g":0,"ks":"0,0,0","value":"2"})") == 2);
  }

  TEST_CASE("compute-if-absent runs each key once under contention") {
    CorrelatorTable table(Provenance::WK);
    std::atomic<int> calls{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&] {
        for (int k = 0; k < 50; ++k) {
          Rational v = table.get_or_compute(CorrelatorKey::make(0, {k % 5, 0, 0}), [&]() -> Rational {
            ++calls;
            std::this_thread::yield();
            return k % 5;
          });
          CHECK(v == k % 5);
        }
      });
    }
    for (auto& t : threads) t.join();
    CHECK(calls == 5);
    CHECK(table.size() == 5);
    CHECK(table.dirty());
  }

  TEST_CASE("a failed computation leaves no entry behind") {
    CorrelatorTable table(Provenance::WK);
    const CorrelatorKey key = CorrelatorKey::make(0, {0, 0, 0});
    CHECK_THROWS_AS(table.get_or_compute(key, []() -> Rational { throw std::runtime_error("boom"); }),
                    std::runtime_error);
    CHECK_FALSE(table.find(key).has_value());
    CHECK(table.get_or_compute(key, []() -> Rational { return 1; }) == 1);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("point queries print exact values") {
    CHECK(run({"wk", "--g", "1", "--ks", "1"}).out == "1/24\n");
    CHECK(run({"nbi", "--g", "1", "--ks", "0"}).out == "1/8 · (x²/2)^0\n");
    CHECK(run({"wk", "--g", "1", "--ks", "2"}).out == "0\n");
    CHECK(run({"kn", "--g", "0", "--ks", "0,0,0"}).out == "1\n");
    CHECK(run({"kn", "--g", "2", "--ks", "0"}).out == "0\n");
    CHECK(run({"kn", "--g", "2", "--n", "0"}).out == "-1/240\n");
    CHECK(run({"cbgw", "--g", "0", "--ks", "0"}).out == "1/4 · (x²)^1\n");
  }

  TEST_CASE("structured output formats") {
    CHECK(run({"--format", "json", "nbi", "--g", "1", "--ks", "0"}).out ==
          "{\"kind\":\"nbi\",\"g\":1,\"ks\":[0],\"value\":\"1/8\",\"yexp\":0}\n");
    CHECK(run({"--format", "csv", "wk", "--g", "1", "--ks", "1"}).out == "kind,g,ks,value\nwk,1,\"1\",1/24\n");
    CliResult j = run({"--format", "json", "verify", "cor41", "--gmax", "1", "--nmax", "2", "--kmax", "2"});
    CHECK(j.code == 0);
    CHECK(j.out.front() == '[');
    CliResult c = run({"--format", "csv", "verify", "cor41", "--gmax", "1", "--nmax", "2", "--kmax", "2"});
    CHECK(c.out.rfind("report,identity,location,g,ks,lhs,rhs,ok\n", 0) == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"wk", "--g", "1", "--ks", "1,x"}).code == 2);
    CHECK(run({"wk", "--g", "1", "--ks", "1,"}).code == 2);
    CHECK(run({"wk", "--ks", "1"}).code == 2);
    CHECK(run({"kn", "--g", "2"}).code == 2);
    CHECK(run({"kn", "--g", "2", "--n", "0", "--ks", "1"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"verify", "theorem18", "--gmax", "7"}).code == 2);
    CHECK(run({"--format", "xml", "wk", "--g", "1", "--ks", "1"}).code == 2);
    CHECK(run({"--cache", "/nonexistent-dir/c.jsonl", "wk", "--g", "1", "--ks", "1"}).code == 2);
  }

  TEST_CASE("verify exits with 0 when every identity holds") {
    CHECK(run({"verify", "theorem18", "--gmax", "1", "--nmax", "2", "--kmax", "3"}).code == 0);
    CHECK(run({"verify", "cor41", "--gmax", "2"}).code == 0);
  }

  TEST_CASE("a corrupted cache makes kdv fail and names the coefficient") {
    TempPath cache("kdvgal-corrupt");
    {
      std::ofstream f(cache.str());
      f << R"({"provenance":"WK","g":0,"ks":"0,0,0","value":"2"})" << "\n";
    }
    CliResult r = run({"--cache", cache.str(), "verify", "kdv", "--gmax", "0", "--nmax", "3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("FAILED kdv") != std::string::npos);
    CHECK(r.err.find("t0") != std::string::npos);
  }

  TEST_CASE("a warm cache gives byte-identical reports") {
    TempPath cache("kdvgal-warm");
    const std::vector<std::string> args = {"--cache", cache.str(), "verify", "theorem18",
                                           "--gmax", "1", "--nmax", "2", "--kmax", "3"};
    CliResult cold = run(args);
    CHECK(cold.code == 0);
    const std::string stored = slurp(cache.str());
    CHECK_FALSE(stored.empty());
    CliResult warm = run(args);
    CHECK(warm.code == 0);
    CHECK(warm.out == cold.out);
    CHECK(slurp(cache.str()) == stored);
  }

  TEST_CASE("the cache path can come from the environment") {
    TempPath cache("kdvgal-env");
    std::vector<const char*> argv = {"kdvgal", "wk", "--g", "2", "--ks", "4"};
    ::setenv(kCacheEnv, cache.str().c_str(), 1);
    std::ostringstream out;
    std::ostringstream err;
    CHECK(run_cli(static_cast<int>(argv.size()), argv.data(), out, err) == 0);
    ::unsetenv(kCacheEnv);
    CHECK(out.str() == "1/1152\n");
    CHECK(slurp(cache.str()).find("\"ks\":\"4\"") != std::string::npos);
  }

  TEST_CASE("deterministic and parallel runs agree") {
    const std::vector<std::string> tail = {"verify", "all", "--gmax", "1", "--nmax", "2", "--kmax", "2", "--qmax",
                                           "1", "--order", "3"};
    std::vector<std::string> serial = {"--deterministic"};
    serial.insert(serial.end(), tail.begin(), tail.end());
    std::vector<std::string> parallel = {"--jobs", "4"};
    parallel.insert(parallel.end(), tail.begin(), tail.end());
    CliResult a = run(serial);
    CliResult b = run(parallel);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }

  TEST_CASE("reports can go to a file") {
    TempPath report("kdvgal-report");
    CliResult r = run({"verify", "structure", "--order", "3", "--output", report.str()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(report.str()).find("structure") != std::string::npos);
  }
}
