#include "kron/identities.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>

#include <json.hpp>

#include "kron/coefficients.hpp"
#include "kron/deligne.hpp"

namespace kron {

void VerificationReport::merge(const VerificationReport& other) {
  cases += other.cases;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["cases"] = report.cases;
  doc["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    for (const auto& [key, value] : v.input) input[key] = value;
    doc["violations"].push_back({{"input", input}, {"expected", v.expected}, {"actual", v.actual}});
  }
  return doc.dump();
}

namespace {

using Violations = std::vector<Violation>;
using Input = std::vector<std::pair<std::string, std::string>>;

struct Triple {
  Partition lam, mu, tau;
};

Input triple_input(const Partition& lam, const Partition& mu, const Partition& tau) {
  return {{"lambda", to_string(lam)}, {"mu", to_string(mu)}, {"tau", to_string(tau)}};
}

Input triple_input(const Partition& lam, const Partition& mu, const Partition& tau, int n) {
  Input input = triple_input(lam, mu, tau);
  input.emplace_back("n", std::to_string(n));
  return input;
}

/// Lexicographic triples (lam, mu, tau) over `pool`.
std::vector<Triple> triples_over(const std::vector<Partition>& pool) {
  std::vector<Triple> out;
  out.reserve(pool.size() * pool.size() * pool.size());
  for (const auto& lam : pool) {
    for (const auto& mu : pool) {
      for (const auto& tau : pool) out.push_back({lam, mu, tau});
    }
  }
  return out;
}

/// Evaluates every case and concatenates the violations in case order.
template <typename Case>
VerificationReport run_cases(std::string suite, const std::vector<Case>& cases,
                             const std::function<Violations(const Case&)>& evaluate,
                             Execution exec) {
  std::vector<Violations> results(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  const auto count = static_cast<long>(cases.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        results[static_cast<std::size_t>(i)] = evaluate(cases[static_cast<std::size_t>(i)]);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < count; ++i) {
      results[static_cast<std::size_t>(i)] = evaluate(cases[static_cast<std::size_t>(i)]);
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  VerificationReport report{std::move(suite), count, {}};
  for (auto& r : results) {
    for (auto& v : r) report.violations.push_back(std::move(v));
  }
  return report;
}

void expect_equal(Violations& out, const Input& input, const BigInt& expected,
                  const BigInt& actual, const std::string& what = {}) {
  if (expected == actual) return;
  Input tagged = input;
  if (!what.empty()) tagged.emplace_back("check", what);
  out.push_back({std::move(tagged), expected.get_str(), actual.get_str()});
}

void expect(Violations& out, const Input& input, bool ok, const std::string& what,
            const std::string& expected = "true", const std::string& actual = "false") {
  if (ok) return;
  Input tagged = input;
  tagged.emplace_back("check", what);
  out.push_back({std::move(tagged), expected, actual});
}

struct ChainSum {
  std::vector<BigInt> partial;  // P_0, P_1, ...
  Partition first_skipped;
};

/// Alternating sum of gbar over the n-chain of a minimal lam, with the first
/// term past the size cutoff returned for auditing.
ChainSum chain_sum(const Partition& lam, const Partition& mu, const Partition& tau, int n) {
  ChainSum out;
  ClassChain chain(lam, IntegerParameter(n));
  const int cutoff = mu.size() + tau.size();
  BigInt running = 0;
  for (std::size_t i = 0;; ++i) {
    const Partition& element = chain.at(i);
    if (element.size() > cutoff) {
      out.first_skipped = element;
      break;
    }
    BigInt term = reduced_kronecker(element, mu, tau);
    if (i % 2 == 0) {
      running += term;
    } else {
      running -= term;
    }
    out.partial.push_back(running);
  }
  if (out.partial.empty()) out.partial.push_back(0);
  return out;
}

void audit_truncation(Violations& out, const Input& input, const Partition& skipped,
                      const Partition& mu, const Partition& tau) {
  expect_equal(out, input, 0, stable_value(skipped, mu, tau),
               "truncated term " + to_string(skipped) + " vanishes");
}

/// (triple, n) cases with n in [N+lo, N+hi].
std::vector<std::pair<Triple, int>> windowed_cases(int max_size, OffsetRange range) {
  std::vector<std::pair<Triple, int>> out;
  for (auto& t : triples_over(partitions_up_to(max_size))) {
    const int start = stabilization_start(t.lam, t.mu, t.tau);
    for (int n = start + std::max(range.lo, 0); n <= start + range.hi; ++n) out.emplace_back(t, n);
  }
  return out;
}

std::vector<Partition> minimal_at(int n, int max_size) {
  std::vector<Partition> out;
  for (auto& lam : partitions_up_to(max_size)) {
    if (n >= lam.size() + lam.first()) out.push_back(lam);
  }
  return out;
}

}  // namespace

std::vector<BigInt> alternating_partial_sums(const Partition& lam, const Partition& mu,
                                             const Partition& tau, int n) {
  return chain_sum(lam, mu, tau, n).partial;
}

VerificationReport check_alternating_sum(int max_size, OffsetRange range, Execution exec) {
  using Case = std::pair<Triple, int>;
  return run_cases<Case>(
      "alternating_sum", windowed_cases(max_size, range),
      [](const Case& c) {
        const auto& [t, n] = c;
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau, n);
        const BigInt g = kronecker(tilde(t.lam, n), tilde(t.mu, n), tilde(t.tau, n));
        ChainSum sum = chain_sum(t.lam, t.mu, t.tau, n);
        expect_equal(out, input, g, sum.partial.back());
        audit_truncation(out, input, sum.first_skipped, t.mu, t.tau);
        return out;
      },
      exec);
}

VerificationReport check_maximum_and_sandwich(int max_size, OffsetRange range, Execution exec) {
  using Case = std::pair<Triple, int>;
  return run_cases<Case>(
      "maximum_and_sandwich", windowed_cases(max_size, range),
      [](const Case& c) {
        const auto& [t, n] = c;
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau, n);
        const BigInt g = kronecker(tilde(t.lam, n), tilde(t.mu, n), tilde(t.tau, n));
        const BigInt gbar = reduced_kronecker(t.lam, t.mu, t.tau);
        expect(out, input, gbar >= g, "gbar >= g", ">= " + g.get_str(), gbar.get_str());
        ChainSum sum = chain_sum(t.lam, t.mu, t.tau, n);
        for (std::size_t k = 0; k < sum.partial.size(); ++k) {
          const BigInt& p = sum.partial[k];
          // even partial sums bound g from above, odd ones from below
          const bool ok = (k % 2 == 0) ? (p >= g) : (p <= g);
          expect(out, input, ok, "sandwich P_" + std::to_string(k),
                 std::string(k % 2 == 0 ? ">= " : "<= ") + g.get_str(), p.get_str());
        }
        audit_truncation(out, input, sum.first_skipped, t.mu, t.tau);
        return out;
      },
      exec);
}

VerificationReport check_dagger_identity(int n, Execution exec) {
  return run_cases<Triple>(
      "dagger_identity", triples_over(partitions_of(n)),
      [n](const Triple& t) {
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau, n);
        const Partition mu_bar = bar(t.mu);
        const Partition tau_bar = bar(t.tau);
        const int cutoff = mu_bar.size() + tau_bar.size();
        BigInt sum = 0;
        for (int i = 1;; ++i) {
          const Partition d = dagger(t.lam, i);
          if (d.size() > cutoff) {
            audit_truncation(out, input, d, mu_bar, tau_bar);
            break;
          }
          BigInt term = reduced_kronecker(d, mu_bar, tau_bar);
          if (i % 2 == 1) {
            sum += term;
          } else {
            sum -= term;
          }
        }
        expect_equal(out, input, kronecker(t.lam, t.mu, t.tau), sum);
        return out;
      },
      exec);
}

VerificationReport check_dagger_chain(int n, Execution exec) {
  return run_cases<Partition>(
      "dagger_chain", partitions_of(n),
      [n](const Partition& lam) {
        Violations out;
        const Input input{{"lambda", to_string(lam)}, {"n", std::to_string(n)}};
        ClassChain chain(bar(lam), IntegerParameter(n));
        for (int i = 1; i <= lam.length() + 3; ++i) {
          const Partition d = dagger(lam, i);
          const Partition& c = chain.at(static_cast<std::size_t>(i - 1));
          expect(out, input, d == c, "dagger " + std::to_string(i) + " is chain element " +
                                         std::to_string(i - 1),
                 to_string(c), to_string(d));
        }
        return out;
      },
      exec);
}

VerificationReport check_trivial_class_vanishing(int max_size, int n_max, Execution exec) {
  std::vector<std::pair<Triple, int>> cases;
  const auto pool = partitions_up_to(max_size);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& mu : pool) {
      if (!is_trivial_class(mu, IntegerParameter(n))) continue;
      for (const auto& tau : pool) {
        for (auto& lam : minimal_at(n, mu.size() + tau.size() + 1)) {
          cases.push_back({{lam, mu, tau}, n});
        }
      }
    }
  }
  using Case = std::pair<Triple, int>;
  return run_cases<Case>(
      "trivial_class_vanishing", cases,
      [](const Case& c) {
        const auto& [t, n] = c;
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau, n);
        ChainSum sum = chain_sum(t.lam, t.mu, t.tau, n);
        expect_equal(out, input, 0, sum.partial.back());
        audit_truncation(out, input, sum.first_skipped, t.mu, t.tau);
        return out;
      },
      exec);
}

VerificationReport check_projective_pairing(int max_size, int n_max, Execution exec) {
  struct Case {
    Triple t;
    int n;
    ClassPosition mu_at, tau_at;
  };
  std::vector<Case> cases;
  const auto pool = partitions_up_to(max_size);
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& mu : pool) {
      ClassPosition mu_at = locate_in_class(mu, IntegerParameter(n));
      if (mu_at.trivial) continue;
      for (const auto& tau : pool) {
        ClassPosition tau_at = locate_in_class(tau, IntegerParameter(n));
        if (tau_at.trivial) continue;
        for (auto& lam : minimal_at(n, mu.size() + tau.size() + 1)) {
          cases.push_back({{lam, mu, tau}, n, mu_at, tau_at});
        }
      }
    }
  }
  return run_cases<Case>(
      "projective_pairing", cases,
      [](const Case& c) {
        Violations out;
        const auto& t = c.t;
        Input input = triple_input(t.lam, t.mu, t.tau, c.n);
        input.emplace_back("k", std::to_string(c.mu_at.index));
        input.emplace_back("l", std::to_string(c.tau_at.index));
        ChainSum sum = chain_sum(t.lam, t.mu, t.tau, c.n);
        BigInt expected = kronecker(tilde(t.lam, c.n), tilde(c.mu_at.minimal, c.n),
                                    tilde(c.tau_at.minimal, c.n));
        if ((c.mu_at.index + c.tau_at.index) % 2 == 1) expected = -expected;
        expect_equal(out, input, expected, sum.partial.back());
        audit_truncation(out, input, sum.first_skipped, t.mu, t.tau);
        return out;
      },
      exec);
}

VerificationReport check_symmetry(int max_size, Execution exec) {
  return run_cases<Triple>(
      "symmetry", triples_over(partitions_up_to(max_size)),
      [](const Triple& t) {
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau);
        const BigInt base = reduced_kronecker(t.lam, t.mu, t.tau);
        const std::array<std::pair<const char*, Triple>, 5> others{{
            {"(lambda,tau,mu)", {t.lam, t.tau, t.mu}},
            {"(mu,lambda,tau)", {t.mu, t.lam, t.tau}},
            {"(mu,tau,lambda)", {t.mu, t.tau, t.lam}},
            {"(tau,lambda,mu)", {t.tau, t.lam, t.mu}},
            {"(tau,mu,lambda)", {t.tau, t.mu, t.lam}},
        }};
        for (const auto& [name, p] : others) {
          expect_equal(out, input, base, reduced_kronecker(p.lam, p.mu, p.tau),
                       std::string("permutation ") + name);
        }
        return out;
      },
      exec);
}

VerificationReport check_murnaghan_littlewood(int max_size, Execution exec) {
  std::vector<Triple> cases;
  for (auto& t : triples_over(partitions_up_to(max_size))) {
    if (outside_size_triangle(t.lam, t.mu, t.tau)) cases.push_back(std::move(t));
  }
  return run_cases<Triple>(
      "murnaghan_littlewood", cases,
      [](const Triple& t) {
        Violations out;
        expect_equal(out, triple_input(t.lam, t.mu, t.tau), 0, stable_value(t.lam, t.mu, t.tau));
        return out;
      },
      exec);
}

VerificationReport check_lr_boundary(int max_total, Execution exec) {
  std::vector<Triple> cases;
  const auto pool = partitions_up_to(max_total);
  for (const auto& mu : pool) {
    for (const auto& tau : pool) {
      if (mu.size() + tau.size() > max_total) continue;
      for (auto& lam : partitions_of(mu.size() + tau.size())) cases.push_back({lam, mu, tau});
    }
  }
  return run_cases<Triple>(
      "lr_boundary", cases,
      [](const Triple& t) {
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau);
        const BigInt by_characters = lr_by_restriction(t.lam, t.mu, t.tau);
        const BigInt by_tableaux = lr_tableau_count(t.lam, t.mu, t.tau);
        expect_equal(out, input, by_characters, by_tableaux, "tableau count");
        expect_equal(out, input, by_characters, reduced_kronecker(t.lam, t.mu, t.tau), "gbar = c");
        return out;
      },
      exec);
}

VerificationReport check_dimension_roots(int max_size, Execution exec) {
  std::vector<std::pair<Partition, int>> cases;
  for (auto& lam : partitions_up_to(max_size)) {
    for (int d = 0; d <= 2 * lam.size() + 2; ++d) cases.emplace_back(lam, d);
  }
  using Case = std::pair<Partition, int>;
  return run_cases<Case>(
      "dimension_roots", cases,
      [](const Case& c) {
        const auto& [lam, d] = c;
        Violations out;
        const Input input{{"lambda", to_string(lam)}, {"d", std::to_string(d)}};
        const Rational value = dimension_polynomial(lam)(Rational(d));
        const bool root = value == 0;
        const bool trivial = is_trivial_class(lam, IntegerParameter(d));
        const bool criterion = trivial_class_criterion(lam, IntegerParameter(d));
        expect(out, input, value.get_den() == 1, "integer value", "integer", value.get_str());
        expect(out, input, root == trivial, "root iff trivial class", trivial ? "root" : "nonzero",
               value.get_str());
        expect(out, input, trivial == criterion, "trivial class iff criterion",
               criterion ? "trivial" : "nontrivial", trivial ? "trivial" : "nontrivial");
        return out;
      },
      exec);
}

VerificationReport check_stabilization(int max_size, OffsetRange range, Execution exec) {
  return run_cases<Triple>(
      "stabilization", triples_over(partitions_up_to(max_size)),
      [range](const Triple& t) {
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau);
        const int start = stabilization_start(t.lam, t.mu, t.tau);
        auto window = stabilization_sequence(t.lam, t.mu, t.tau, start + std::max(range.lo, 0),
                                             start + range.hi);
        const BigInt gbar = reduced_kronecker(t.lam, t.mu, t.tau);
        for (std::size_t k = 0; k < window.samples.size(); ++k) {
          const auto& [n, value] = window.samples[k];
          Input at = input;
          at.emplace_back("n", std::to_string(n));
          if (k > 0) {
            const BigInt& before = window.samples[k - 1].second;
            expect(out, at, value >= before, "weakly increasing", ">= " + before.get_str(),
                   value.get_str());
          }
          if (n >= window.n_stable) expect_equal(out, at, gbar, value, "stable value");
        }
        expect_equal(out, input, stable_value(t.lam, t.mu, t.tau),
                     stable_value(t.lam, t.mu, t.tau, window.n_stable + 1), "n* vs n*+1");
        return out;
      },
      exec);
}

VerificationReport check_integer_multiplicities(int max_size, OffsetRange range, Execution exec) {
  using Case = std::pair<Triple, int>;
  return run_cases<Case>(
      "integer_multiplicities", windowed_cases(max_size, range),
      [](const Case& c) {
        const auto& [t, n] = c;
        Violations out;
        const Input input = triple_input(t.lam, t.mu, t.tau, n);
        const BigInt direct = kronecker(tilde(t.lam, n), tilde(t.mu, n), tilde(t.tau, n));
        const BigInt lifted = multiplicity_at_integer(t.mu, t.tau, t.lam, IntegerParameter(n));
        expect_equal(out, input, direct, lifted);
        expect(out, input, lifted >= 0, "non-negative", ">= 0", lifted.get_str());
        return out;
      },
      exec);
}

VerificationReport check_semisimple_range(int max_size, int span, Execution exec) {
  std::vector<std::pair<Triple, int>> cases;
  for (auto& t : triples_over(partitions_up_to(max_size))) {
    const int bound = std::max(t.lam.size(), t.mu.size() + t.tau.size());
    const int first = std::max(0, 2 * bound - 1);
    for (int n = first; n <= 2 * bound - 1 + span; ++n) cases.emplace_back(t, n);
  }
  using Case = std::pair<Triple, int>;
  return run_cases<Case>(
      "semisimple_range", cases,
      [](const Case& c) {
        const auto& [t, n] = c;
        Violations out;
        expect_equal(out, triple_input(t.lam, t.mu, t.tau, n), reduced_kronecker(t.lam, t.mu, t.tau),
                     multiplicity_at_integer(t.mu, t.tau, t.lam, IntegerParameter(n)));
        return out;
      },
      exec);
}

VerificationReport check_global(int max_size, Execution exec) {
  VerificationReport report{"global", 0, {}};
  report.merge(check_symmetry(max_size, exec));
  report.merge(check_murnaghan_littlewood(max_size, exec));
  report.merge(check_lr_boundary(max_size, exec));
  report.merge(check_dimension_roots(max_size, exec));
  return report;
}

}  // namespace kron
