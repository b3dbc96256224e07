#pragma once

// Test-only oracles that share no code with the library's computation paths.

#include <algorithm>
#include <map>
#include <vector>

#include "kron/partition.hpp"

namespace kron::oracle {

/// Standard Young tableaux count by removing corners recursively.
inline long count_syt(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  static std::map<std::vector<int>, long> memo;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    auto smaller = shape;
    --smaller[r];
    total += count_syt(smaller);
  }
  memo.emplace(shape, total);
  return total;
}

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, long>;

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Frobenius formula: chi^lam(rho) is the coefficient of x^{lam + delta} in
/// p_rho(x) * prod_{i<j} (x_i - x_j), in k = max(1, l(lam)) variables.
inline long frobenius_character(const Partition& lam, const Partition& rho) {
  const int k = std::max(1, lam.length());
  Polynomial product{{Monomial(static_cast<std::size_t>(k), 0), 1}};
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Monomial xi(static_cast<std::size_t>(k), 0), xj(static_cast<std::size_t>(k), 0);
      xi[static_cast<std::size_t>(i)] = 1;
      xj[static_cast<std::size_t>(j)] = 1;
      product = multiply(product, Polynomial{{xi, 1}, {xj, -1}});
    }
  }
  for (int part : rho.parts()) {
    Polynomial power_sum;
    for (int i = 0; i < k; ++i) {
      Monomial m(static_cast<std::size_t>(k), 0);
      m[static_cast<std::size_t>(i)] = part;
      power_sum[m] += 1;
    }
    product = multiply(product, power_sum);
  }
  Monomial target(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = lam.row(i + 1) + k - 1 - i;
  auto it = product.find(target);
  return it == product.end() ? 0 : it->second;
}

/// z_rho from the multiplicities, with machine integers.
inline long centralizer(const Partition& rho) {
  std::map<int, int> counts;
  for (int p : rho.parts()) ++counts[p];
  long z = 1;
  for (auto [part, m] : counts) {
    for (int i = 0; i < m; ++i) z *= part;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

/// Kronecker coefficient from Frobenius characters: sum chi chi chi / z.
inline long kronecker(const Partition& lam, const Partition& mu, const Partition& tau) {
  long n_fact = 1;
  for (int i = 2; i <= lam.size(); ++i) n_fact *= i;
  long sum = 0;
  for (const auto& rho : partitions_of(lam.size())) {
    sum += frobenius_character(lam, rho) * frobenius_character(mu, rho) *
           frobenius_character(tau, rho) * (n_fact / centralizer(rho));
  }
  return sum / n_fact;
}

}  // namespace kron::oracle
