#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kron/characters.hpp"
#include "kron/coefficients.hpp"
#include "oracle.hpp"

using namespace kron;

namespace {

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(parts);
}

// c^lam_{mu,tau} = sum_{rho,sigma} chi^lam(rho u sigma) chi^mu(rho) chi^tau(sigma) / (z_rho z_sigma)
Rational lr_oracle(const Partition& lam, const Partition& mu, const Partition& tau) {
  Rational sum = 0;
  for (const auto& rho : partitions_of(mu.size())) {
    for (const auto& sigma : partitions_of(tau.size())) {
      long num = oracle::frobenius_character(lam, join(rho, sigma)) *
                      oracle::frobenius_character(mu, rho) *
                      oracle::frobenius_character(tau, sigma);
      sum += Rational(num) / (oracle::centralizer(rho) * oracle::centralizer(sigma));
    }
  }
  return sum;
}

}  // namespace

TEST_CASE("kronecker examples") {
  CHECK(kronecker({2, 1}, {2, 1}, {2, 1}) == 1);
  CHECK(kronecker({3}, {3}, {2, 1}) == 0);
  CHECK(kronecker({2, 2}, {3, 1}, {3, 1}) == 1);
  CHECK_THROWS_AS(kronecker({2}, {2, 1}, {2, 1}), SizeMismatch);
}

TEST_CASE("littlewood_richardson examples") {
  CHECK(littlewood_richardson({2}, {1}, {1}) == 1);
  CHECK(littlewood_richardson({2, 1}, {1}, {1, 1}) == 1);
  CHECK(littlewood_richardson({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(littlewood_richardson({3, 2, 1}, {2, 1}, {2, 1}, LrMethod::tableaux) == 2);
  CHECK(littlewood_richardson({2, 2}, {3}, {1}) == 0);
  CHECK_THROWS_AS(littlewood_richardson({2, 1}, {1}, {1}), SizeMismatch);
}

TEST_CASE("LR by restriction matches the Frobenius-character oracle") {
  for (int total = 0; total <= 5; ++total) {
    for (const auto& lam : partitions_of(total)) {
      for (int a = 0; a <= total; ++a) {
        for (const auto& mu : partitions_of(a)) {
          for (const auto& tau : partitions_of(total - a)) {
            Rational expected = lr_oracle(lam, mu, tau);
            CHECK(Rational(lr_by_restriction(lam, mu, tau)) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("LR tableau count agrees with the character method up to size 6") {
  for (int total = 0; total <= 6; ++total) {
    for (const auto& lam : partitions_of(total)) {
      for (int a = 0; a <= total; ++a) {
        for (const auto& mu : partitions_of(a)) {
          for (const auto& tau : partitions_of(total - a)) {
            CHECK(lr_tableau_count(lam, mu, tau) == lr_by_restriction(lam, mu, tau));
          }
        }
      }
    }
  }
}

TEST_CASE("reduced_kronecker examples") {
  CHECK(reduced_kronecker({1}, {1}, {1}) == 1);
  CHECK(reduced_kronecker({3}, {1}, {1}) == 0);
  for (const auto& mu : partitions_up_to(3)) {
    for (const auto& tau : partitions_up_to(3)) {
      CHECK(reduced_kronecker({}, mu, tau) == (mu == tau ? 1 : 0));
    }
  }
  CHECK(reduced_kronecker({2}, {1}, {1}) == 1);
  CHECK(reduced_kronecker({1, 1}, {1}, {1}) == 1);
}

TEST_CASE("g^{(n-1,1)}_{(n-1,1),(n-1,1)} = 1 for n >= 3") {
  for (int n = 3; n <= 10; ++n) {
    CHECK(kronecker({n - 1, 1}, {n - 1, 1}, {n - 1, 1}) == 1);
  }
}

TEST_CASE("stable value agrees with the coarse bound n >= 2(|mu|+|tau|)") {
  for (const auto& lam : partitions_up_to(3)) {
    for (const auto& mu : partitions_up_to(3)) {
      for (const auto& tau : partitions_up_to(3)) {
        const int n = std::max(stabilization_start(lam, mu, tau), 2 * (mu.size() + tau.size())) + 1;
        CHECK(reduced_kronecker(lam, mu, tau) ==
              kronecker(tilde(lam, n), tilde(mu, n), tilde(tau, n)));
      }
    }
  }
}

TEST_CASE("reduced_kronecker is well defined at n* and n*+1") {
  for (const auto& lam : partitions_up_to(3)) {
    for (const auto& mu : partitions_up_to(3)) {
      for (const auto& tau : partitions_up_to(3)) {
        CHECK(stable_value(lam, mu, tau) ==
              stable_value(lam, mu, tau, stabilization_bound(lam, mu, tau) + 1));
      }
    }
  }
}

TEST_CASE("stabilization_sequence") {
  auto w = stabilization_sequence({1}, {1}, {1}, 2, 5);
  CHECK(w.n_start == 2);
  CHECK(w.n_stable == 4);
  REQUIRE(w.samples.size() == 4);
  const std::vector<std::pair<int, BigInt>> expected{{2, 0}, {3, 1}, {4, 1}, {5, 1}};
  CHECK(w.samples == expected);

  // Tensoring with the unit: g^{(n-1,1)}_{(n-1,1),(n)} = 1 for every n >= 2.
  auto unit = stabilization_sequence({1}, {1}, {}, 2, 4);
  REQUIRE(unit.samples.size() == 3);
  for (const auto& [n, v] : unit.samples) {
    CHECK(v == 1);
    CHECK(v == oracle::kronecker({n - 1, 1}, {n - 1, 1}, Partition{n}));
  }

  auto two = stabilization_sequence({2}, {1}, {1}, 4, 6);
  CHECK(two.n_start == 4);
  for (std::size_t k = 1; k < two.samples.size(); ++k) {
    CHECK(two.samples[k].second >= two.samples[k - 1].second);
  }
  CHECK(two.samples.back().second == 1);

  CHECK_THROWS_AS(stabilization_sequence({2}, {1}, {1}, 3, 6), BoundViolation);
  CHECK_THROWS_AS(stabilization_sequence({1}, {1}, {1}, 4, 3), BoundViolation);
}

TEST_CASE("size triangle short-circuit only drops zeros") {
  for (const auto& lam : partitions_up_to(4)) {
    for (const auto& mu : partitions_up_to(2)) {
      for (const auto& tau : partitions_up_to(2)) {
        if (!outside_size_triangle(lam, mu, tau)) continue;
        CHECK(reduced_kronecker(lam, mu, tau) == 0);
        CHECK(stable_value(lam, mu, tau) == 0);
      }
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {CoefficientKind::g, CoefficientKind::lr, CoefficientKind::gbar,
                    CoefficientKind::mult}) {
    CHECK(parse_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_kind("h").has_value());
}

TEST_CASE("memo does not change answers") {
  const BigInt warm = reduced_kronecker({2, 1}, {2, 1}, {1});
  clear_reduced_kronecker_memo();
  CHECK(reduced_kronecker({2, 1}, {2, 1}, {1}) == warm);
}
