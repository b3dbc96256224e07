#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "kron/coefficients.hpp"
#include "kron/deligne.hpp"
#include "kron/identities.hpp"

using namespace kron;

namespace {

void require_clean(const VerificationReport& report) {
  INFO(to_json(report));
  CHECK(report.cases > 0);
  CHECK(report.passed());
}

}  // namespace

TEST_CASE("alternating sum worked instances") {
  // lam = mu = tau = (1): chain (1), (n), ...
  auto at_two = alternating_partial_sums({1}, {1}, {1}, 2);
  REQUIRE(at_two.size() >= 2);
  CHECK(at_two[0] == 1);
  CHECK(at_two[1] == 0);
  CHECK(at_two.back() == kronecker(tilde({1}, 2), tilde({1}, 2), tilde({1}, 2)));
  CHECK(at_two.back() == 0);

  auto at_three = alternating_partial_sums({1}, {1}, {1}, 3);
  CHECK(at_three.back() == 1);
  CHECK(kronecker({2, 1}, {2, 1}, {2, 1}) == 1);
}

TEST_CASE("trivial class worked instance") {
  REQUIRE(is_trivial_class({2}, IntegerParameter(3)));
  CHECK(alternating_partial_sums({1}, {2}, {1}, 3).back() == 0);
}

TEST_CASE("projective pairing worked instance") {
  const IntegerParameter n(2);
  auto mu_at = locate_in_class({2}, n);
  REQUIRE_FALSE(mu_at.trivial);
  CHECK(mu_at.minimal == Partition{1});
  CHECK(mu_at.index == 1);
  const BigInt lhs = alternating_partial_sums({1}, {2}, {2}, 2).back();
  const BigInt rhs = kronecker(tilde({1}, 2), tilde({1}, 2), tilde({1}, 2));
  CHECK(lhs == 0);
  CHECK(rhs == 0);
}

TEST_CASE("dagger chain example") {
  const Partition lam{3, 2, 1};
  auto chain = class_chain(bar(lam), IntegerParameter(6)).prefix(3);
  for (int i = 1; i <= 4; ++i) CHECK(dagger(lam, i) == chain[static_cast<std::size_t>(i - 1)]);
}

TEST_CASE("suites are clean on small ranges") {
  require_clean(check_alternating_sum(2, {}));
  require_clean(check_maximum_and_sandwich(2, {}));
  require_clean(check_dagger_identity(4));
  require_clean(check_dagger_chain(5));
  require_clean(check_trivial_class_vanishing(2, 6));
  require_clean(check_projective_pairing(2, 6));
  require_clean(check_symmetry(3));
  require_clean(check_murnaghan_littlewood(3));
  require_clean(check_lr_boundary(4));
  require_clean(check_dimension_roots(4));
  require_clean(check_stabilization(2, {0, 6}));
  require_clean(check_integer_multiplicities(2, {}));
  require_clean(check_semisimple_range(2, 3));
}

TEST_CASE("serial and parallel reports are identical") {
  CHECK(check_alternating_sum(2, {}, Execution::serial) ==
        check_alternating_sum(2, {}, Execution::parallel));
  CHECK(check_symmetry(3, Execution::serial) == check_symmetry(3, Execution::parallel));
  CHECK(check_dagger_identity(4, Execution::serial) ==
        check_dagger_identity(4, Execution::parallel));
  CHECK(check_projective_pairing(2, 5, Execution::serial) ==
        check_projective_pairing(2, 5, Execution::parallel));
}

TEST_CASE("report json layout") {
  VerificationReport report{"demo", 3, {}};
  report.violations.push_back({{{"lambda", "2,1"}, {"n", "5"}}, "1", "0"});
  auto doc = nlohmann::json::parse(to_json(report));
  CHECK(doc["suite"] == "demo");
  CHECK(doc["cases"] == 3);
  REQUIRE(doc["violations"].size() == 1);
  CHECK(doc["violations"][0]["input"]["lambda"] == "2,1");
  CHECK(doc["violations"][0]["expected"] == "1");
  CHECK(doc["violations"][0]["actual"] == "0");
  CHECK(to_json(report).find("\"suite\":\"demo\",\"cases\":3") != std::string::npos);
}

TEST_CASE("a wrong claim is reported") {
  // The identity with the chain sign flipped must fail somewhere.
  bool found = false;
  for (const auto& lam : partitions_up_to(2)) {
    for (int n = std::max(2, lam.size() + lam.first()); n <= lam.size() + lam.first() + 3; ++n) {
      auto sums = alternating_partial_sums(lam, {1}, {1}, n);
      BigInt flipped = 2 * sums.front() - sums.back();
      if (flipped != kronecker(tilde(lam, n), tilde({1}, n), tilde({1}, n))) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("global check at size 0") {
  auto report = check_global(0);
  CHECK(report.passed());
  CHECK(report.cases > 0);
}
