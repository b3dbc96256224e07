#include "kron/characters.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace kron {

BigInt centralizer_order(const Partition& cycle_type) {
  BigInt z = 1;
  auto parts = cycle_type.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    auto multiplicity = static_cast<int>(j - i);
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]),
                  static_cast<unsigned long>(multiplicity));
    z *= power * factorial(multiplicity);
    i = j;
  }
  return z;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw SizeMismatch("partition " + to_string(p) + " is not a partition of " +
                       std::to_string(n_));
  }
  return it->second;
}

namespace {

struct Slot {
  std::once_flag once;
  std::unique_ptr<CharacterTable> table;
};

std::array<Slot, kMaxCharacterDegree + 1>& slots() {
  static std::array<Slot, kMaxCharacterDegree + 1> s;
  return s;
}

/// All ways to remove a border strip of the given length. Works on the beta
/// set {lam_i + len - i}: a strip is a bead sliding down by `length` to a
/// free position; the sign counts the beads it jumps over.
template <typename Visit>
void for_each_border_strip(const Partition& lam, int length, Visit&& visit) {
  const int rows = lam.length();
  std::vector<int> beta(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) beta[static_cast<std::size_t>(i - 1)] = lam.row(i) + rows - i;
  // beta is strictly decreasing
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int target = beta[k] - length;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target, std::greater<>())) continue;
    int jumped = 0;
    for (std::size_t m = k + 1; m < beta.size() && beta[m] > target; ++m) ++jumped;
    std::vector<int> moved = beta;
    moved[k] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(moved.size());
    for (std::size_t m = 0; m < moved.size(); ++m) {
      parts[m] = moved[m] - (rows - 1 - static_cast<int>(m));
    }
    visit(Partition(std::move(parts)), (jumped % 2 == 0) ? 1 : -1);
  }
}

}  // namespace

class CharacterTableBuilder {
 public:
  static std::unique_ptr<CharacterTable> build(int n) {
    auto table = std::make_unique<CharacterTable>();
    table->n_ = n;
    table->partitions_ = partitions_of(n);
    for (std::size_t i = 0; i < table->partitions_.size(); ++i) {
      table->index_.emplace(table->partitions_[i], i);
    }
    table->group_order_ = factorial(n);
    for (const auto& rho : table->partitions_) {
      BigInt size = table->group_order_;
      BigInt z = centralizer_order(rho);
      mpz_divexact(size.get_mpz_t(), size.get_mpz_t(), z.get_mpz_t());
      table->classes_.push_back({rho, size});
    }
    const std::size_t count = table->partitions_.size();
    table->values_.assign(count, std::vector<BigInt>(count));
    if (n == 0) {
      table->values_[0][0] = 1;
      return table;
    }
    // Strip off the largest cycle; the rest is a class of a smaller table.
    for (std::size_t c = 0; c < count; ++c) {
      const Partition& rho = table->partitions_[c];
      const int largest = rho.first();
      const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
      const CharacterTable& smaller = character_table(n - largest);
      const std::size_t rest_index = smaller.index_of(rest);
      for (std::size_t r = 0; r < count; ++r) {
        BigInt sum = 0;
        for_each_border_strip(table->partitions_[r], largest, [&](const Partition& inner, int sign) {
          const BigInt& v = smaller.values_[smaller.index_of(inner)][rest_index];
          if (sign > 0) {
            sum += v;
          } else {
            sum -= v;
          }
        });
        table->values_[r][c] = std::move(sum);
      }
    }
    return table;
  }
};

const CharacterTable& character_table(int n) {
  if (n < 0 || n > kMaxCharacterDegree) {
    throw BoundViolation("character tables are limited to 0 <= n <= " +
                         std::to_string(kMaxCharacterDegree) + " (requested " +
                         std::to_string(n) + ")");
  }
  Slot& slot = slots()[static_cast<std::size_t>(n)];
  std::call_once(slot.once, [&] { slot.table = CharacterTableBuilder::build(n); });
  return *slot.table;
}

BigInt mn_character(const Partition& lam, const Partition& rho) {
  if (lam.size() != rho.size()) {
    throw SizeMismatch("character of " + to_string(lam) + " at class " + to_string(rho) +
                       ": sizes differ");
  }
  return character_table(lam.size()).value(lam, rho);
}

BigInt triple_inner(const Partition& lam, const Partition& mu, const Partition& tau) {
  if (lam.size() != mu.size() || lam.size() != tau.size()) {
    throw SizeMismatch("Kronecker coefficient needs three partitions of the same size, got " +
                       to_string(lam) + ", " + to_string(mu) + ", " + to_string(tau));
  }
  const CharacterTable& table = character_table(lam.size());
  const auto& a = table.row(lam);
  const auto& b = table.row(mu);
  const auto& c = table.row(tau);
  BigInt sum = 0;
  BigInt term;
  for (std::size_t k = 0; k < table.classes().size(); ++k) {
    term = a[k] * b[k];
    term *= c[k];
    term *= table.classes()[k].size;
    sum += term;
  }
  if (!mpz_divisible_p(sum.get_mpz_t(), table.group_order().get_mpz_t())) {
    throw InternalError("class-weighted character sum not divisible by n!");
  }
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), table.group_order().get_mpz_t());
  return sum;
}

}  // namespace kron
