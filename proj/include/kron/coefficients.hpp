#pragma once

/// \file
/// Kronecker, Littlewood-Richardson and reduced Kronecker coefficients.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

enum class CoefficientKind { g, lr, gbar, mult };

std::string_view to_string(CoefficientKind kind);
std::optional<CoefficientKind> parse_kind(std::string_view text);

struct CoefficientRecord {
  CoefficientKind kind = CoefficientKind::g;
  Partition lam, mu, tau;
  std::optional<int> n;
  BigInt value;
};

/// g^lam_{mu,tau}: multiplicity of lam in mu (x) tau for partitions of one n.
BigInt kronecker(const Partition& lam, const Partition& mu, const Partition& tau);

enum class LrMethod { characters, tableaux };

/// c^lam_{mu,tau} with |lam| = |mu| + |tau|. The character method is the
/// default; with KRON_VERIFY both are run and compared on every call.
BigInt littlewood_richardson(const Partition& lam, const Partition& mu, const Partition& tau,
                             LrMethod method = LrMethod::characters);

/// Number of LR tableaux of shape lam/mu and content tau.
BigInt lr_tableau_count(const Partition& lam, const Partition& mu, const Partition& tau);
/// Multiplicity of mu (x) tau in the restriction of lam, from characters.
BigInt lr_by_restriction(const Partition& lam, const Partition& mu, const Partition& tau);

/// max(|lam|+lam_1, |mu|+mu_1, |tau|+tau_1): first n where all tildes exist.
int stabilization_start(const Partition& lam, const Partition& mu, const Partition& tau);
/// max(start, |mu|+|tau|+mu_1+tau_1): the sequence is constant from here on.
int stabilization_bound(const Partition& lam, const Partition& mu, const Partition& tau);

/// True when some size exceeds the sum of the other two, forcing gbar = 0.
bool outside_size_triangle(const Partition& lam, const Partition& mu, const Partition& tau);

/// gbar^lam_{mu,tau}. Zero outside the size triangle; otherwise the Kronecker
/// coefficient of the tilde diagrams at the stable bound. Memoized.
BigInt reduced_kronecker(const Partition& lam, const Partition& mu, const Partition& tau);

/// Kronecker coefficient of the tilde diagrams at max(stable bound, n_min),
/// without the size-triangle shortcut. Used to audit that shortcut.
BigInt stable_value(const Partition& lam, const Partition& mu, const Partition& tau,
                    int n_min = 0);

struct StabilizationWindow {
  Partition lam, mu, tau;
  int n_start = 0;
  int n_stable = 0;
  std::vector<std::pair<int, BigInt>> samples;
};

/// g(tilde(lam,n), tilde(mu,n), tilde(tau,n)) for n in [n_from, n_to].
StabilizationWindow stabilization_sequence(const Partition& lam, const Partition& mu,
                                           const Partition& tau, int n_from, int n_to);

/// Drops the in-process gbar memo. Tests use it to compare cold and warm runs.
void clear_reduced_kronecker_memo();

}  // namespace kron
