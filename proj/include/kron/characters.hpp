#pragma once

/// \file
/// Symmetric-group character tables via the Murnaghan-Nakayama rule.
///
/// This is the brute-force oracle the rest of the library is checked
/// against. Tables are built lazily per n, once, and never mutated after
/// publication, so any number of threads may read them.

#include <memory>
#include <unordered_map>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

inline constexpr int kMaxCharacterDegree = 40;

struct ConjugacyClass {
  Partition cycle_type;
  BigInt size;  // n! / z_rho
};

/// z_rho = prod_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& cycle_type);

/// Full character table of S_n. Rows are irreducibles, columns classes;
/// both use the order of partitions_of(n).
class CharacterTable {
 public:
  int degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const BigInt& group_order() const { return group_order_; }

  /// Index of a partition of n in partitions(); throws SizeMismatch otherwise.
  std::size_t index_of(const Partition& p) const;
  const std::vector<BigInt>& row(const Partition& lam) const { return values_[index_of(lam)]; }
  const BigInt& value(const Partition& lam, const Partition& rho) const {
    return values_[index_of(lam)][index_of(rho)];
  }

 private:
  friend class CharacterTableBuilder;
  int n_ = 0;
  std::vector<Partition> partitions_;
  std::unordered_map<Partition, std::size_t> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::vector<BigInt>> values_;
  BigInt group_order_;
};

/// Shared, lazily built table for S_n. Throws BoundViolation for n outside
/// [0, kMaxCharacterDegree].
const CharacterTable& character_table(int n);

/// chi^lam(rho). Throws SizeMismatch if |lam| != |rho|.
BigInt mn_character(const Partition& lam, const Partition& rho);

/// (1/n!) sum_rho |C_rho| chi^lam(rho) chi^mu(rho) chi^tau(rho).
BigInt triple_inner(const Partition& lam, const Partition& mu, const Partition& tau);

}  // namespace kron
