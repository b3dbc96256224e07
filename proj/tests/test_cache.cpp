#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "kron/cache.hpp"

using namespace kron;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("kron_cache_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string table_csv(int max_size, CoefficientCache* cache, Execution exec = Execution::parallel) {
  std::ostringstream out;
  write_table_csv(out, reduced_kronecker_table(max_size, cache, exec));
  return out.str();
}

}  // namespace

TEST_CASE("empty cache and round trip") {
  TempDir dir;
  const auto file = dir.path / "c.jsonl";
  CacheKey key{CoefficientKind::gbar, {2, 1}, {1}, {1, 1}, std::nullopt};
  {
    CoefficientCache cache(file);
    CHECK(cache.size() == 0);
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, 7);
    CHECK(cache.get(key) == BigInt(7));
  }
  CHECK(slurp(file) == "{\"kind\":\"gbar\",\"lambda\":\"2,1\",\"mu\":\"1\",\"tau\":\"1,1\",\"value\":\"7\"}\n");
  CoefficientCache reopened(file);
  CHECK(reopened.get(key) == BigInt(7));
  CHECK_FALSE(fs::exists(dir.path / "c.jsonl.tmp"));
}

TEST_CASE("n is part of the key") {
  TempDir dir;
  CoefficientCache cache(dir.path / "c.jsonl");
  CacheKey a{CoefficientKind::mult, {1}, {1}, {1}, 2};
  CacheKey b{CoefficientKind::mult, {1}, {1}, {1}, 3};
  cache.put(a, 0);
  cache.put(b, 1);
  CHECK(cache.get(a) == BigInt(0));
  CHECK(cache.get(b) == BigInt(1));
  CHECK_FALSE(cache.get({CoefficientKind::g, {1}, {1}, {1}, std::nullopt}).has_value());
}

TEST_CASE("corrupt lines are skipped with a warning") {
  TempDir dir;
  const auto file = dir.path / "c.jsonl";
  {
    std::ofstream out(file);
    out << "{\"kind\":\"g\",\"lambda\":\"2,1\",\"mu\":\"2,1\",\"tau\":\"2,1\",\"value\":\"1\"}\n";
    out << "not json\n";
    out << "{\"kind\":\"zz\",\"lambda\":\"1\",\"mu\":\"1\",\"tau\":\"1\",\"value\":\"1\"}\n";
    out << "{\"kind\":\"g\",\"lambda\":\"1,2\",\"mu\":\"1\",\"tau\":\"1\",\"value\":\"1\"}\n";
    out << "{\"kind\":\"g\",\"lambda\":\"1\",\"mu\":\"1\",\"tau\":\"1\",\"value\":\"x\"}\n";
    out << "{\"kind\":\"g\",\"lambda\":\"1\",\"mu\":\"1\"";
  }
  CoefficientCache cache(file);
  CHECK(cache.size() == 1);
  CHECK(cache.warnings().size() == 5);
  CHECK(cache.get({CoefficientKind::g, {2, 1}, {2, 1}, {2, 1}, std::nullopt}) == BigInt(1));
  cache.put({CoefficientKind::g, {1}, {1}, {1}, std::nullopt}, 1);
  CoefficientCache again(file);
  CHECK(again.size() == 2);
}

TEST_CASE("first occurrence wins") {
  TempDir dir;
  const auto file = dir.path / "c.jsonl";
  {
    std::ofstream out(file);
    out << "{\"kind\":\"g\",\"lambda\":\"1\",\"mu\":\"1\",\"tau\":\"1\",\"value\":\"1\"}\n";
    out << "{\"kind\":\"g\",\"lambda\":\"1\",\"mu\":\"1\",\"tau\":\"1\",\"value\":\"5\"}\n";
  }
  CoefficientCache cache(file);
  CacheKey key{CoefficientKind::g, {1}, {1}, {1}, std::nullopt};
  CHECK(cache.get(key) == BigInt(1));
  cache.put(key, 9);
  CHECK(cache.get(key) == BigInt(1));
}

TEST_CASE("cached values equal fresh computations") {
  TempDir dir;
  const auto file = dir.path / "c.jsonl";
  std::mt19937 rng(20240611);
  const auto pool = partitions_up_to(3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<std::pair<CacheKey, BigInt>> expected;
  {
    CoefficientCache cache(file);
    while (expected.size() < 120) {
      CacheKey key{CoefficientKind::gbar, pool[pick(rng)], pool[pick(rng)], pool[pick(rng)],
                   std::nullopt};
      const BigInt fresh = reduced_kronecker(key.lam, key.mu, key.tau);
      CHECK(cached_value(&cache, key, [&] { return reduced_kronecker(key.lam, key.mu, key.tau); }) ==
            fresh);
      expected.emplace_back(key, fresh);
    }
  }
  CoefficientCache warm(file);
  for (const auto& [key, value] : expected) {
    bool computed = false;
    CHECK(cached_value(&warm, key, [&] {
            computed = true;
            return BigInt(-1);
          }) == value);
    CHECK_FALSE(computed);
  }
}

TEST_CASE("table of size 0 and 1") {
  CHECK(table_csv(0, nullptr) == "lambda,mu,tau,value\n\"-\",\"-\",\"-\",1\n");
  const std::string one = table_csv(1, nullptr);
  CHECK(one ==
        "lambda,mu,tau,value\n"
        "\"-\",\"-\",\"-\",1\n"
        "\"1\",\"-\",\"1\",1\n"
        "\"1\",\"1\",\"-\",1\n"
        "\"-\",\"1\",\"1\",1\n"
        "\"1\",\"1\",\"1\",1\n"
        "\"2\",\"1\",\"1\",1\n"
        "\"1,1\",\"1\",\"1\",1\n");
}

TEST_CASE("warm rerun is byte-identical, serial equals parallel") {
  TempDir dir;
  const auto file = dir.path / "c.jsonl";
  std::string cold, warm;
  {
    CoefficientCache cache(file);
    cold = table_csv(2, &cache);
  }
  const std::string stored = slurp(file);
  {
    CoefficientCache cache(file);
    warm = table_csv(2, &cache);
  }
  CHECK(warm == cold);
  CHECK(slurp(file) == stored);
  CHECK(table_csv(2, nullptr, Execution::serial) == cold);
}

TEST_CASE("KRON_CACHE") {
  ::setenv("KRON_CACHE", "", 1);
  CHECK_FALSE(cache_path_from_environment().has_value());
  ::setenv("KRON_CACHE", "/tmp/x.jsonl", 1);
  CHECK(cache_path_from_environment() == fs::path("/tmp/x.jsonl"));
  ::unsetenv("KRON_CACHE");
  CHECK_FALSE(cache_path_from_environment().has_value());
}
