#pragma once

/// \file
/// Persistent JSON-lines coefficient cache and the gbar table generator.
///
/// One entry per line:
///   {"kind":"gbar","lambda":"2,1","mu":"1","tau":"1,1","value":"1"}
/// with an integer "n" for kinds that carry a parameter. A file has a single
/// writer; readers are unrestricted. Writes go to a temporary file that is
/// renamed over the original.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kron/coefficients.hpp"
#include "kron/identities.hpp"

namespace kron {

class IoError : public Error {
 public:
  using Error::Error;
};

struct CacheKey {
  CoefficientKind kind = CoefficientKind::gbar;
  Partition lam, mu, tau;
  std::optional<int> n;

  std::string encode() const;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

class CoefficientCache {
 public:
  /// Loads `path` if it exists. Malformed lines are skipped and noted in
  /// warnings(); they are never fatal.
  explicit CoefficientCache(std::filesystem::path path);

  std::optional<BigInt> get(const CacheKey& key) const;
  /// Appends the entry unless the key is already present (first one wins).
  void put(const CacheKey& key, const BigInt& value);
  void put_many(const std::vector<std::pair<CacheKey, BigInt>>& entries);

  std::size_t size() const { return values_.size(); }
  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path path_;
  std::unordered_map<std::string, BigInt> values_;
  std::vector<std::string> warnings_;
};

/// Path from the KRON_CACHE environment variable, if set and non-empty.
std::optional<std::filesystem::path> cache_path_from_environment();

/// Cache lookup, computing and storing on a miss. `cache` may be null.
BigInt cached_value(CoefficientCache* cache, const CacheKey& key,
                    const std::function<BigInt()>& compute);

struct TableRow {
  Partition lam, mu, tau;
  BigInt value;
};

/// Every nonzero gbar^lam_{mu,tau} with |mu|, |tau| <= max_size and
/// |lam| <= |mu| + |tau|, ordered by mu, then tau, then lam.
std::vector<TableRow> reduced_kronecker_table(int max_size, CoefficientCache* cache = nullptr,
                                              Execution exec = Execution::parallel);

/// Header "lambda,mu,tau,value"; partition fields are double-quoted.
void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);

}  // namespace kron
