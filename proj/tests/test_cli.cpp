#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stepalg/jobs.hpp"
#include "stepalg/serialize.hpp"

using namespace stepalg;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& tag) {
  fs::path p = fs::temp_directory_path() / ("stepalg_test_" + tag);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("exit codes: success, verification, usage errors") {
  RunResult ok = run({"describe", "--rank", "2", "--levi", "1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("sl(3)") != std::string::npos);
  CHECK(ok.err.empty());

  CHECK(run({"verify", "--rank", "2", "--levi", "1", "--oracle"}).code == 0);
  RunResult q = run({"qcheck", "--count", "25", "--seed", "3"});
  CHECK(q.code == 0);
  CHECK(q.out.find("qcheck passed (seed 3, count 25)") != std::string::npos);

  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"describe", "--rank", "99"}).code == 2);
  CHECK(run({"describe", "--bozo"}).code == 2);
  CHECK(run({"describe", "--levi", "1,x"}).code == 2);
  CHECK(run({"generators", "--rank", "2", "--levi", "1", "--class", "7"}).code == 2);
  CHECK(run({"verify", "--rank", "4", "--levi", "1,2,3", "--oracle"}).code == 2);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("describe") != std::string::npos);
}

TEST_CASE("format selection and defaults") {
  CHECK(run({"hasse", "--rank", "2", "--levi", "1"})
            .out.find("digraph hasse") != std::string::npos);
  CHECK(run({"generators", "--rank", "2", "--levi", "1", "--format", "latex"})
            .out.find("\\psi") != std::string::npos);
  CHECK(run({"generators", "--rank", "2", "--levi", "1"})
            .out.find("z[E[1,3]]") != std::string::npos);
  CHECK(run({"generators", "--rank", "2", "--levi", "1", "--side", "plus"})
            .out.find("side minus") == std::string::npos);
}

TEST_CASE("output is deterministic across runs") {
  std::vector<std::string> args = {"generators", "--rank", "3", "--levi",
                                   "1,2", "--format", "json"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  RunResult v1 = run({"verify", "--rank", "3", "--levi", "2"});
  RunResult v2 = run({"verify", "--rank", "3", "--levi", "2"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("job keys ignore the cache location and hash stably") {
  JobSpec a;
  a.command = "generators";
  a.rank = 3;
  a.levi = {1, 2};
  JobSpec b = a;
  b.cache_dir = "/somewhere/else";
  CHECK(a.canonical_key() == b.canonical_key());
  JobSpec c = a;
  c.seed = 99;
  CHECK(a.canonical_key() != c.canonical_key());

  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("cache: stores, replays, survives tampering") {
  fs::path dir = fresh_dir("cache");
  std::vector<std::string> args = {"generators", "--rank", "2", "--levi", "1",
                                   "--format", "json", "--cache-dir",
                                   dir.string()};
  RunResult first = run(args);
  CHECK(first.code == 0);

  std::size_t files = 0;
  fs::path entry;
  for (const auto& f : fs::directory_iterator(dir)) {
    ++files;
    entry = f.path();
  }
  REQUIRE(files == 1);

  RunResult second = run(args);
  CHECK(second.out == first.out);

  // A colliding file whose stored key differs is ignored, not replayed.
  {
    std::ofstream os(entry);
    os << "{\"key\":\"not this job\",\"output\":\"bogus\"}";
  }
  RunResult third = run(args);
  CHECK(third.out == first.out);

  // Unreadable JSON is ignored as well.
  {
    std::ofstream os(entry);
    os << "{{{";
  }
  RunResult fourth = run(args);
  CHECK(fourth.code == 0);
  CHECK(fourth.out == first.out);

  // The environment variable is an alternative to the flag.
  fs::path envdir = fresh_dir("cache_env");
  setenv("STEPALG_CACHE_DIR", envdir.string().c_str(), 1);
  RunResult fifth =
      run({"generators", "--rank", "2", "--levi", "1", "--format", "json"});
  unsetenv("STEPALG_CACHE_DIR");
  CHECK(fifth.out == first.out);
  CHECK(fs::exists(envdir));

  fs::remove_all(dir);
  fs::remove_all(envdir);
}

TEST_CASE("config files feed defaults; flags win") {
  fs::path cfg = fs::temp_directory_path() / "stepalg_test_config.cfg";
  {
    std::ofstream os(cfg);
    os << "# a comment\n"
       << "series=A\n"
       << "rank=3\n"
       << "levi=1,2\n";
  }
  RunResult base = run({"describe", "--config", cfg.string()});
  CHECK(base.code == 0);
  CHECK(base.out.find("sl(4)") != std::string::npos);

  RunResult overridden =
      run({"describe", "--config", cfg.string(), "--rank", "2", "--levi", "1"});
  CHECK(overridden.code == 0);
  CHECK(overridden.out.find("sl(3)") != std::string::npos);

  {
    std::ofstream os(cfg);
    os << "mystery=4\n";
  }
  CHECK(run({"describe", "--config", cfg.string()}).code == 2);
  CHECK(run({"describe", "--config", "/no/such/file.cfg"}).code == 2);
  fs::remove(cfg);
}

TEST_CASE("serialized generators parse back to the same elements") {
  RunResult r = run({"generators", "--rank", "3", "--levi", "2", "--format",
                     "json"});
  REQUIRE(r.code == 0);
  ordered_json doc = ordered_json::parse(r.out);

  auto ctx = AlgebraContext::make(levi_pair(build_root_system('A', 3), {2}));
  for (const auto& g : doc.at("generators")) {
    const int class_index = g.at("class_index").get<int>();
    const Side side =
        g.at("side").get<std::string>() == "minus" ? Side::minus : Side::plus;
    ComplementModel m = build_complement_model(ctx, class_index, side);
    const int node = g.at("node").get<int>();
    AlgebraElement roundtrip = parse_generator_element(m, g);
    CHECK(roundtrip == canonical_element(m, node).element);
  }
}

TEST_CASE("verification documents carry the outcome") {
  RunResult plain = run({"verify", "--rank", "2", "--levi", "1", "--format",
                         "json"});
  REQUIRE(plain.code == 0);
  ordered_json doc = ordered_json::parse(plain.out);
  CHECK(doc.at("verification").at("invariance").get<bool>());
  CHECK(doc.at("verification").at("oracle").is_null());

  RunResult with_oracle = run({"verify", "--rank", "2", "--levi", "1",
                               "--oracle", "--format", "json"});
  ordered_json doc2 = ordered_json::parse(with_oracle.out);
  CHECK(doc2.at("verification").at("oracle").get<bool>());
}
