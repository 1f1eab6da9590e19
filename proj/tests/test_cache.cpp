#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "burnside/cache.hpp"
#include "burnside/catalog.hpp"
#include "burnside/cli.hpp"

using namespace burnside;

namespace {
  std::filesystem::path fresh_dir(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / ("burnside-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
  }

  std::string run_job(JobSpec const& job, int* status = nullptr) {
    std::ostringstream out, err;
    int const          s = run(job, out, err);
    if (status) {
      *status = s;
    }
    return out.str() + err.str();
  }
}  // namespace

TEST_CASE("sha256", "[cache]") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("keys depend on tables, not labels", "[cache]") {
  auto const a = named_group("S3");
  auto const b = parse_group_spec(R"({"perm": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}, "label": "other"})");
  CHECK(ResultCache::key("pairs", group_fingerprint(*a)) == ResultCache::key("pairs", group_fingerprint(*b)));
  CHECK(ResultCache::key("pairs", group_fingerprint(*a))
        != ResultCache::key("pairs", group_fingerprint(*named_group("C6"))));
}

TEST_CASE("store and load", "[cache]") {
  ResultCache cache(fresh_dir("store"));
  CHECK_FALSE(cache.load("k").has_value());
  cache.store("k", "payload");
  CHECK(cache.load("k") == std::optional<std::string>("payload"));
  ResultCache disabled;
  disabled.store("k", "x");
  CHECK_FALSE(disabled.load("k").has_value());
}

TEST_CASE("stored pair tables rebuild the same classes", "[cache]") {
  auto const  G = named_group("A4");
  auto const  K = named_group("C3");
  auto const& t = *PairTable::get(G, K);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> reps;
  for (auto const& c : t.classes()) {
    reps.emplace_back(c.canonical.source().elements(), c.canonical.images());
  }
  PairTable const rebuilt(G, K, reps);
  CHECK(rebuilt.size() == t.size());
  CHECK(rebuilt.pair_count() == t.pair_count());
}

TEST_CASE("cached runs are byte-identical to uncached runs", "[cache]") {
  auto const dir = fresh_dir("jobs");
  for (auto command : {Command::basis, Command::kernel, Command::marks, Command::one_p}) {
    JobSpec job;
    job.command = command;
    job.group   = "A4";
    job.target  = command == Command::one_p ? "C1" : "C2";
    job.prime   = 2;
    JobSpec cold = job;
    cold.use_cache = false;
    JobSpec warm   = job;
    warm.cache_dir = dir.string();
    auto const plain = run_job(cold);
    CHECK(run_job(warm) == plain);  // fills the cache
    CHECK(run_job(warm) == plain);  // same process, memo hit
  }
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) > 0);
}

TEST_CASE("exit codes", "[cli]") {
  int     status = 0;
  JobSpec job;
  job.command = Command::one_p;
  job.group   = "S3";
  run_job(job, &status);
  CHECK(status == 2);  // missing prime
  job.prime = 2;
  job.group = "S5";
  run_job(job, &status);
  CHECK(status == 3);
  job.group = "not-a-group";
  run_job(job, &status);
  CHECK(status == 2);
  job.group = "S3";
  auto const out = run_job(job, &status);
  CHECK(status == 0);
  CHECK(out.find("\"den\": 3") != std::string::npos);
}
