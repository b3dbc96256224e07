#include "kron/deligne.hpp"

#include <algorithm>
#include <cstdlib>

#include "kron/coefficients.hpp"

namespace kron {

ClassChain::ClassChain(Partition minimal, IntegerParameter n) : n_(n) {
  if (n.value() < minimal.size() + minimal.first()) {
    throw NotMinimal(to_string(minimal) + " is not minimal in its class at n = " +
                     std::to_string(n.value()) + " (needs n >= " +
                     std::to_string(minimal.size() + minimal.first()) + ")");
  }
  elements_.push_back(std::move(minimal));
}

const Partition& ClassChain::at(std::size_t i) {
  while (elements_.size() <= i) {
    const Partition& base = elements_.front();
    // element k differs from element k-1 by a strip in row k
    const int k = static_cast<int>(elements_.size());
    const Partition& previous = elements_.back();
    std::vector<int> parts(previous.parts().begin(), previous.parts().end());
    parts.resize(static_cast<std::size_t>(std::max(previous.length(), k)), 0);
    if (k == 1) {
      parts[0] += n_.value() - base.size() - base.first() + 1;
    } else {
      parts[static_cast<std::size_t>(k - 1)] += base.row(k - 1) - base.row(k) + 1;
    }
    elements_.emplace_back(std::move(parts));  // invalidates base and previous
  }
  return elements_[i];
}

std::vector<Partition> ClassChain::prefix(std::size_t depth) {
  at(depth);
  return {elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(depth) + 1};
}

ClassChain class_chain(const Partition& minimal, IntegerParameter n) {
  return ClassChain(minimal, n);
}

int equivalence_prefix_length(const Partition& a, const Partition& b, IntegerParameter n) {
  return std::max({a.length(), b.length(), std::abs(n.value() - a.size()),
                   std::abs(n.value() - b.size())}) +
         2;
}

namespace {

std::vector<long> sorted_prefix(const Partition& lam, IntegerParameter n, int length) {
  auto prefix = mu_sequence(lam, n.value(), length).prefix;
  std::sort(prefix.begin(), prefix.end(), std::greater<>());
  return prefix;
}

/// Diagram whose sequence is `values` with `values[skip]` as the leading
/// term; nullopt if the remainder is not of the form lam_i - i.
std::optional<Partition> candidate_from(const std::vector<long>& values, std::size_t skip) {
  std::vector<int> parts;
  int i = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == skip) continue;
    long part = values[k] + i;
    if (part < 0) return std::nullopt;
    if (!parts.empty() && part > parts.back()) return std::nullopt;
    parts.push_back(static_cast<int>(part));
    ++i;
  }
  return Partition(std::move(parts));
}

}  // namespace

bool equivalent(const Partition& a, const Partition& b, IntegerParameter n) {
  const int length = equivalence_prefix_length(a, b, n);
  return sorted_prefix(a, n, length) == sorted_prefix(b, n, length);
}

bool trivial_class_criterion(const Partition& lam, IntegerParameter n) {
  for (int l = 1; l <= lam.size(); ++l) {
    if (n.value() == lam.size() + lam.row(l) - l) return true;
  }
  return false;
}

ClassPosition locate_in_class(const Partition& lam, IntegerParameter n) {
  if (n.value() >= lam.size() + lam.first()) return ClassPosition::make_nontrivial(lam, 0);

  const int length = equivalence_prefix_length(lam, lam, n);
  const std::vector<long> values = sorted_prefix(lam, n, length);
  std::optional<Partition> minimal;
  for (std::size_t skip = 0; skip < values.size() && !minimal; ++skip) {
    auto candidate = candidate_from(values, skip);
    if (!candidate) continue;
    if (n.value() - candidate->size() != values[skip]) continue;
    if (n.value() < candidate->size() + candidate->first()) continue;
    if (!equivalent(*candidate, lam, n)) continue;
    minimal = std::move(candidate);
  }
  ClassPosition position = ClassPosition::make_trivial();
  if (minimal) {
    ClassChain chain(*minimal, n);
    for (std::size_t i = 0; chain.at(i).size() <= lam.size(); ++i) {
      if (chain.at(i) == lam) {
        position = ClassPosition::make_nontrivial(*minimal, static_cast<int>(i));
        break;
      }
    }
  }
#ifdef KRON_VERIFY
  if (position.trivial != trivial_class_criterion(lam, n)) {
    throw InternalError("class reconstruction disagrees with the trivial-class criterion for " +
                        to_string(lam) + " at n = " + std::to_string(n.value()));
  }
#endif
  return position;
}

bool is_trivial_class(const Partition& lam, IntegerParameter n) {
  return locate_in_class(lam, n).trivial;
}

std::vector<Partition> lift(const Partition& lam, IntegerParameter n) {
  ClassPosition position = locate_in_class(lam, n);
  if (position.trivial || position.index == 0) return {lam};
  ClassChain chain(position.minimal, n);
  return {lam, chain.at(static_cast<std::size_t>(position.index - 1))};
}

int hom_dim(const Partition& a, const Partition& b, IntegerParameter n) {
  if (!equivalent(a, b, n)) return 0;
  ClassPosition pa = locate_in_class(a, n);
  if (pa.trivial) return 1;  // singleton class, so a == b
  ClassPosition pb = locate_in_class(b, n);
  const int gap = std::abs(pa.index - pb.index);
  if (gap == 0) return pa.index >= 1 ? 2 : 1;
  return gap == 1 ? 1 : 0;
}

std::string_view to_string(ObjectStatus status) {
  switch (status) {
    case ObjectStatus::SimpleProjective: return "SimpleProjective";
    case ObjectStatus::SimpleNonProjective: return "SimpleNonProjective";
    case ObjectStatus::Projective: return "Projective";
  }
  return "?";
}

ObjectStatus object_status(const Partition& lam, IntegerParameter n) {
  ClassPosition position = locate_in_class(lam, n);
  if (position.trivial) return ObjectStatus::SimpleProjective;
  return position.index == 0 ? ObjectStatus::SimpleNonProjective : ObjectStatus::Projective;
}

BigInt multiplicity_at_integer(const Partition& mu, const Partition& tau, const Partition& lam,
                               IntegerParameter n) {
  const auto lift_mu = lift(mu, n);
  const auto lift_tau = lift(tau, n);
  int max_size = 0;
  for (const auto& a : lift_mu) {
    for (const auto& b : lift_tau) max_size = std::max(max_size, a.size() + b.size());
  }
  auto lifted_hom = [&](const Partition& target) {
    BigInt sum = 0;
    for (const auto& a : lift_mu) {
      for (const auto& b : lift_tau) sum += reduced_kronecker(target, a, b);
    }
    return sum;
  };

  BigInt total = 0;
  ClassPosition position = locate_in_class(lam, n);
  if (position.trivial) {
    total = lifted_hom(lam);
  } else {
    ClassChain chain(position.minimal, n);
    for (std::size_t j = 0;; ++j) {
      const Partition& target = chain.at(static_cast<std::size_t>(position.index) + j);
      if (target.size() > max_size) break;
      if (j % 2 == 0) {
        total += lifted_hom(target);
      } else {
        total -= lifted_hom(target);
      }
    }
  }
  if (total < 0) {
    throw NegativeMultiplicity("negative multiplicity for " + to_string(mu) + " (x) " +
                               to_string(tau) + " : " + to_string(lam) +
                               " at n = " + std::to_string(n.value()));
  }
  return total;
}

Rational DimensionPolynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

std::string DimensionPolynomial::to_string() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (!unit || k == 0) out += c.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "T";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

DimensionPolynomial dimension_polynomial(const Partition& lam) {
  const int degree = lam.size();
  const int first_node = lam.size() + lam.first();
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (int k = 0; k <= degree; ++k) {
    const int xk = first_node + k;
    // Lagrange basis polynomial for node xk, expanded lowest degree first.
    std::vector<Rational> basis{Rational(1)};
    Rational denominator = 1;
    for (int m = 0; m <= degree; ++m) {
      if (m == k) continue;
      const int xm = first_node + m;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xm;
      }
      basis = std::move(next);
      denominator *= xk - xm;
    }
    Rational scale = Rational(dim_irrep(tilde(lam, xk))) / denominator;
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * scale;
  }
  for (auto& c : coeffs) c.canonicalize();
  return DimensionPolynomial(lam, std::move(coeffs));
}

}  // namespace kron
