#pragma once

/// \file
/// Falsifiable checks of the identities relating Kronecker, reduced
/// Kronecker and Littlewood-Richardson coefficients, each run over an
/// exhaustively enumerated range of inputs.
///
/// Every suite first enumerates its cases in a fixed order (sizes, then
/// reverse-lexicographic partitions, then lexicographic triples, then n),
/// evaluates them with either the serial loop or an OpenMP loop, and merges
/// per-case results in enumeration order. The two execution modes produce
/// identical reports.
///
/// Alternating sums over a chain stop at the first element whose size
/// exceeds |mu| + |tau|. That first skipped term is still evaluated without
/// the size-triangle shortcut and reported as a violation if it is nonzero.

#include <string>
#include <utility>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

enum class Execution { serial, parallel };

/// Offsets relative to a case's stabilization start N: n in [N+lo, N+hi].
struct OffsetRange {
  int lo = 0;
  int hi = 4;
};

struct Violation {
  std::vector<std::pair<std::string, std::string>> input;
  std::string expected;
  std::string actual;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  std::string suite;
  long cases = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  void merge(const VerificationReport& other);
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// {"suite": ..., "cases": ..., "violations": [{"input": {...}, "expected": ..., "actual": ...}]}
std::string to_json(const VerificationReport& report);

/// Partial sums P_k = sum_{i<=k} (-1)^i gbar^{lam^(i)}_{mu,tau} over the
/// n-chain of a minimal lam, up to the size cutoff. The last entry is the
/// full alternating sum.
std::vector<BigInt> alternating_partial_sums(const Partition& lam, const Partition& mu,
                                             const Partition& tau, int n);

VerificationReport check_alternating_sum(int max_size, OffsetRange range,
                                         Execution exec = Execution::parallel);
VerificationReport check_maximum_and_sandwich(int max_size, OffsetRange range,
                                              Execution exec = Execution::parallel);
VerificationReport check_dagger_identity(int n, Execution exec = Execution::parallel);
/// dagger(lam, i) for i >= 1 reproduces the n-chain of bar(lam), lam |- n.
VerificationReport check_dagger_chain(int n, Execution exec = Execution::parallel);
VerificationReport check_trivial_class_vanishing(int max_size, int n_max,
                                                 Execution exec = Execution::parallel);
VerificationReport check_projective_pairing(int max_size, int n_max,
                                            Execution exec = Execution::parallel);

VerificationReport check_symmetry(int max_size, Execution exec = Execution::parallel);
VerificationReport check_murnaghan_littlewood(int max_size, Execution exec = Execution::parallel);
/// gbar = c (both LR algorithms) whenever |lam| = |mu| + |tau| <= max_total.
VerificationReport check_lr_boundary(int max_total, Execution exec = Execution::parallel);
VerificationReport check_dimension_roots(int max_size, Execution exec = Execution::parallel);
/// Weak monotonicity over [N+lo, N+hi], constancy from the stable bound,
/// and agreement of the stable evaluation at n* and n*+1.
VerificationReport check_stabilization(int max_size, OffsetRange range,
                                       Execution exec = Execution::parallel);
/// multiplicity_at_integer against the direct character computation, and >= 0.
VerificationReport check_integer_multiplicities(int max_size, OffsetRange range,
                                                Execution exec = Execution::parallel);
/// multiplicity_at_integer = gbar for n in [max(0, 2N-1), 2N-1+span], the
/// range outside {0, ..., 2N-2} with N = max(|lam|, |mu|+|tau|).
VerificationReport check_semisimple_range(int max_size, int span,
                                          Execution exec = Execution::parallel);

/// Symmetry, Murnaghan-Littlewood, LR boundary and dimension roots.
VerificationReport check_global(int max_size, Execution exec = Execution::parallel);

}  // namespace kron
