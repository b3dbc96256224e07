#include "kron/coefficients.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "kron/characters.hpp"

namespace kron {

std::string_view to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::g: return "g";
    case CoefficientKind::lr: return "lr";
    case CoefficientKind::gbar: return "gbar";
    case CoefficientKind::mult: return "mult";
  }
  return "?";
}

std::optional<CoefficientKind> parse_kind(std::string_view text) {
  if (text == "g") return CoefficientKind::g;
  if (text == "lr") return CoefficientKind::lr;
  if (text == "gbar") return CoefficientKind::gbar;
  if (text == "mult") return CoefficientKind::mult;
  return std::nullopt;
}

BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& tau) {
  return triple_inner(lam, mu, tau);
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

void require_lr_sizes(const Partition& lam, const Partition& mu, const Partition& tau) {
  if (lam.size() != mu.size() + tau.size()) {
    throw SizeMismatch("LR coefficient needs |lam| = |mu| + |tau|, got " + to_string(lam) +
                       "; " + to_string(mu) + ", " + to_string(tau));
  }
}

class TableauCounter {
 public:
  TableauCounter(const Partition& lam, const Partition& mu, const Partition& tau)
      : lam_(lam), mu_(mu), tau_(tau) {
    for (int r = 1; r <= lam.length(); ++r) {
      // reading order: rows top to bottom, each right to left
      for (int c = lam.row(r); c > mu.row(r); --c) cells_.emplace_back(r, c);
    }
    filling_.assign(static_cast<std::size_t>(lam.length() + 1),
                    std::vector<int>(static_cast<std::size_t>(lam.first() + 2), 0));
    used_.assign(static_cast<std::size_t>(tau.length() + 2), 0);
  }

  BigInt count() {
    if (lam_.length() < mu_.length()) return 0;
    for (int r = 1; r <= mu_.length(); ++r) {
      if (mu_.row(r) > lam_.row(r)) return 0;
    }
    BigInt total = 0;
    place(0, total);
    return total;
  }

 private:
  int& at(int r, int c) { return filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  void place(std::size_t k, BigInt& total) {
    if (k == cells_.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells_[k];
    int upper = tau_.length();
    if (c < lam_.row(r)) upper = std::min(upper, at(r, c + 1));  // rows weakly increase
    int lower = 1;
    if (r > 1 && c > mu_.row(r - 1)) lower = at(r - 1, c) + 1;  // columns strictly increase
    for (int v = lower; v <= upper; ++v) {
      auto& count_v = used_[static_cast<std::size_t>(v)];
      if (count_v >= tau_.row(v)) continue;
      if (v > 1 && count_v + 1 > used_[static_cast<std::size_t>(v - 1)]) continue;  // lattice word
      ++count_v;
      at(r, c) = v;
      place(k + 1, total);
      at(r, c) = 0;
      --count_v;
    }
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& tau_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> used_;
};

using TripleKey = std::tuple<Partition, Partition, Partition>;

struct TripleKeyHash {
  std::size_t operator()(const TripleKey& k) const noexcept {
    std::hash<Partition> h;
    std::size_t seed = h(std::get<0>(k));
    seed = seed * 1000003u ^ h(std::get<1>(k));
    seed = seed * 1000003u ^ h(std::get<2>(k));
    return seed;
  }
};

struct GbarMemo {
  std::shared_mutex mutex;
  std::unordered_map<TripleKey, BigInt, TripleKeyHash> values;
};

GbarMemo& gbar_memo() {
  static GbarMemo memo;
  return memo;
}

}  // namespace

BigInt lr_tableau_count(const Partition& lam, const Partition& mu, const Partition& tau) {
  require_lr_sizes(lam, mu, tau);
  return TableauCounter(lam, mu, tau).count();
}

BigInt lr_by_restriction(const Partition& lam, const Partition& mu, const Partition& tau) {
  require_lr_sizes(lam, mu, tau);
  const CharacterTable& big = character_table(lam.size());
  const CharacterTable& left = character_table(mu.size());
  const CharacterTable& right = character_table(tau.size());
  const auto& lam_row = big.row(lam);
  const auto& mu_row = left.row(mu);
  const auto& tau_row = right.row(tau);
  BigInt sum = 0;
  BigInt term;
  for (std::size_t a = 0; a < left.classes().size(); ++a) {
    if (mu_row[a] == 0) continue;
    for (std::size_t b = 0; b < right.classes().size(); ++b) {
      if (tau_row[b] == 0) continue;
      const Partition joined = merge(left.classes()[a].cycle_type, right.classes()[b].cycle_type);
      term = lam_row[big.index_of(joined)] * mu_row[a];
      term *= tau_row[b];
      term *= left.classes()[a].size;
      term *= right.classes()[b].size;
      sum += term;
    }
  }
  BigInt order = left.group_order() * right.group_order();
  if (!mpz_divisible_p(sum.get_mpz_t(), order.get_mpz_t())) {
    throw InternalError("restriction character sum not divisible by |S_a x S_b|");
  }
  mpz_divexact(sum.get_mpz_t(), sum.get_mpz_t(), order.get_mpz_t());
  return sum;
}

BigInt littlewood_richardson(const Partition& lam, const Partition& mu, const Partition& tau,
                             LrMethod method) {
  require_lr_sizes(lam, mu, tau);
  if (method == LrMethod::tableaux) return lr_tableau_count(lam, mu, tau);
  BigInt value = lr_by_restriction(lam, mu, tau);
#ifdef KRON_VERIFY
  if (value != lr_tableau_count(lam, mu, tau)) {
    throw InternalError("LR methods disagree on " + to_string(lam) + "; " + to_string(mu) +
                        ", " + to_string(tau));
  }
#endif
  return value;
}

int stabilization_start(const Partition& lam, const Partition& mu, const Partition& tau) {
  return std::max({lam.size() + lam.first(), mu.size() + mu.first(), tau.size() + tau.first()});
}

int stabilization_bound(const Partition& lam, const Partition& mu, const Partition& tau) {
  return std::max(stabilization_start(lam, mu, tau),
                  mu.size() + tau.size() + mu.first() + tau.first());
}

bool outside_size_triangle(const Partition& lam, const Partition& mu, const Partition& tau) {
  return lam.size() > mu.size() + tau.size() || mu.size() > lam.size() + tau.size() ||
         tau.size() > lam.size() + mu.size();
}

BigInt stable_value(const Partition& lam, const Partition& mu, const Partition& tau, int n_min) {
  const int n = std::max(stabilization_bound(lam, mu, tau), n_min);
  return kronecker(tilde(lam, n), tilde(mu, n), tilde(tau, n));
}

BigInt reduced_kronecker(const Partition& lam, const Partition& mu, const Partition& tau) {
  if (outside_size_triangle(lam, mu, tau)) return 0;
  GbarMemo& memo = gbar_memo();
  TripleKey key{lam, mu, tau};
  {
    std::shared_lock lock(memo.mutex);
    auto it = memo.values.find(key);
    if (it != memo.values.end()) return it->second;
  }
  BigInt value = stable_value(lam, mu, tau);
  std::unique_lock lock(memo.mutex);
  memo.values.emplace(std::move(key), value);
  return value;
}

void clear_reduced_kronecker_memo() {
  GbarMemo& memo = gbar_memo();
  std::unique_lock lock(memo.mutex);
  memo.values.clear();
}

StabilizationWindow stabilization_sequence(const Partition& lam, const Partition& mu,
                                           const Partition& tau, int n_from, int n_to) {
  StabilizationWindow window{lam, mu, tau, stabilization_start(lam, mu, tau),
                             stabilization_bound(lam, mu, tau), {}};
  if (n_from < window.n_start) {
    throw BoundViolation("stabilization window must start at n >= " +
                         std::to_string(window.n_start));
  }
  if (n_to < n_from) throw BoundViolation("stabilization window is empty");
  for (int n = n_from; n <= n_to; ++n) {
    window.samples.emplace_back(n, kronecker(tilde(lam, n), tilde(mu, n), tilde(tau, n)));
  }
  return window;
}

}  // namespace kron
