#include "kron/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kron {

std::string CacheKey::encode() const {
  std::string out(to_string(kind));
  out += '|' + to_string(lam) + '|' + to_string(mu) + '|' + to_string(tau) + '|';
  if (n) out += std::to_string(*n);
  return out;
}

namespace {

std::string entry_line(const CacheKey& key, const BigInt& value) {
  nlohmann::ordered_json entry;
  entry["kind"] = std::string(to_string(key.kind));
  entry["lambda"] = to_string(key.lam);
  entry["mu"] = to_string(key.mu);
  entry["tau"] = to_string(key.tau);
  if (key.n) entry["n"] = *key.n;
  entry["value"] = value.get_str();
  return entry.dump();
}

CacheKey parse_entry(const nlohmann::json& entry, BigInt& value) {
  auto kind = parse_kind(entry.at("kind").get<std::string>());
  if (!kind) throw ParseError("unknown kind");
  CacheKey key{*kind, parse_partition(entry.at("lambda").get<std::string>()),
               parse_partition(entry.at("mu").get<std::string>()),
               parse_partition(entry.at("tau").get<std::string>()), std::nullopt};
  if (entry.contains("n") && !entry.at("n").is_null()) key.n = entry.at("n").get<int>();
  const auto text = entry.at("value").get<std::string>();
  if (text.empty() || value.set_str(text, 10) != 0) throw ParseError("bad value");
  return key;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

CoefficientCache::CoefficientCache(std::filesystem::path path) : path_(std::move(path)) {
  std::istringstream lines(read_file(path_));
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      BigInt value;
      CacheKey key = parse_entry(nlohmann::json::parse(line), value);
      values_.emplace(key.encode(), std::move(value));  // keeps the first occurrence
    } catch (const std::exception& e) {
      warnings_.push_back(path_.string() + ":" + std::to_string(number) +
                          ": skipping corrupt cache entry (" + e.what() + ")");
    }
  }
}

std::optional<BigInt> CoefficientCache::get(const CacheKey& key) const {
  auto it = values_.find(key.encode());
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void CoefficientCache::put(const CacheKey& key, const BigInt& value) {
  put_many({{key, value}});
}

void CoefficientCache::put_many(const std::vector<std::pair<CacheKey, BigInt>>& entries) {
  std::string appended;
  for (const auto& [key, value] : entries) {
    if (values_.emplace(key.encode(), value).second) appended += entry_line(key, value) + '\n';
  }
  if (appended.empty()) return;

  std::string contents = read_file(path_);
  if (!contents.empty() && contents.back() != '\n') contents += '\n';
  contents += appended;

  std::filesystem::path temp = path_;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + temp.string());
    out << contents;
    if (!out.flush()) throw IoError("failed writing cache file " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path_, ec);
  if (ec) throw IoError("cannot replace cache file " + path_.string() + ": " + ec.message());
}

std::optional<std::filesystem::path> cache_path_from_environment() {
  const char* value = std::getenv("KRON_CACHE");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

BigInt cached_value(CoefficientCache* cache, const CacheKey& key,
                    const std::function<BigInt()>& compute) {
  if (cache != nullptr) {
    if (auto hit = cache->get(key)) return *hit;
  }
  BigInt value = compute();
  if (cache != nullptr) cache->put(key, value);
  return value;
}

std::vector<TableRow> reduced_kronecker_table(int max_size, CoefficientCache* cache,
                                              Execution exec) {
  if (max_size < 0) throw BoundViolation("table size bound must be non-negative");
  std::vector<TableRow> candidates;
  const auto pool = partitions_up_to(max_size);
  for (const auto& mu : pool) {
    for (const auto& tau : pool) {
      for (auto& lam : partitions_up_to(mu.size() + tau.size())) {
        candidates.push_back({lam, mu, tau, 0});
      }
    }
  }

  std::vector<char> known(candidates.size(), 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (cache == nullptr) break;
    auto& row = candidates[i];
    if (auto hit = cache->get({CoefficientKind::gbar, row.lam, row.mu, row.tau, std::nullopt})) {
      row.value = *hit;
      known[i] = 1;
    }
  }

  const auto count = static_cast<long>(candidates.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      auto& row = candidates[static_cast<std::size_t>(i)];
      if (!known[static_cast<std::size_t>(i)]) row.value = reduced_kronecker(row.lam, row.mu, row.tau);
    }
  } else {
    for (long i = 0; i < count; ++i) {
      auto& row = candidates[static_cast<std::size_t>(i)];
      if (!known[static_cast<std::size_t>(i)]) row.value = reduced_kronecker(row.lam, row.mu, row.tau);
    }
  }

  if (cache != nullptr) {
    std::vector<std::pair<CacheKey, BigInt>> fresh;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (known[i]) continue;
      const auto& row = candidates[i];
      fresh.push_back({{CoefficientKind::gbar, row.lam, row.mu, row.tau, std::nullopt}, row.value});
    }
    cache->put_many(fresh);
  }

  std::vector<TableRow> rows;
  for (auto& row : candidates) {
    if (row.value != 0) rows.push_back(std::move(row));
  }
  return rows;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
  out << "lambda,mu,tau,value\n";
  for (const auto& row : rows) {
    out << '"' << to_string(row.lam) << "\",\"" << to_string(row.mu) << "\",\""
        << to_string(row.tau) << "\"," << row.value.get_str() << '\n';
  }
}

}  // namespace kron
