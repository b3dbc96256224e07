#pragma once

/// \file
/// Combinatorics of the interpolation category at a non-negative integer
/// parameter n: equivalence classes of diagrams, their chains, lifts to the
/// generic parameter, block Hom dimensions, projectivity, tensor product
/// multiplicities at t = n, and dimension polynomials.

#include <optional>
#include <string_view>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

class NotMinimal : public Error {
 public:
  using Error::Error;
};

class NegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

/// A non-negative integer value of the interpolation parameter.
class IntegerParameter {
 public:
  explicit IntegerParameter(int n) : n_(n) {
    if (n < 0) throw BoundViolation("the integer parameter must be non-negative");
  }
  int value() const { return n_; }
  friend bool operator==(IntegerParameter, IntegerParameter) = default;

 private:
  int n_;
};

/// The n-class of a minimal diagram, grown on demand. Not thread-safe.
class ClassChain {
 public:
  /// Throws NotMinimal unless n >= |minimal| + minimal_1.
  ClassChain(Partition minimal, IntegerParameter n);

  const Partition& minimal() const { return elements_.front(); }
  IntegerParameter parameter() const { return n_; }
  /// Element i of the chain, extending it as needed.
  const Partition& at(std::size_t i);
  /// Elements 0..depth.
  std::vector<Partition> prefix(std::size_t depth);

 private:
  IntegerParameter n_;
  std::vector<Partition> elements_;
};

ClassChain class_chain(const Partition& minimal, IntegerParameter n);

/// Either a singleton class, or element `index` of the chain of `minimal`.
struct ClassPosition {
  bool trivial = true;
  Partition minimal;
  int index = 0;

  static ClassPosition make_trivial() { return {}; }
  static ClassPosition make_nontrivial(Partition minimal, int index) {
    return {false, std::move(minimal), index};
  }
  friend bool operator==(const ClassPosition&, const ClassPosition&) = default;
};

/// Prefix length that decides equivalence of a and b.
int equivalence_prefix_length(const Partition& a, const Partition& b, IntegerParameter n);
bool equivalent(const Partition& a, const Partition& b, IntegerParameter n);

ClassPosition locate_in_class(const Partition& lam, IntegerParameter n);
bool is_trivial_class(const Partition& lam, IntegerParameter n);
/// n in { |lam| + lam_l - l : 1 <= l <= |lam| }.
bool trivial_class_criterion(const Partition& lam, IntegerParameter n);

/// Generic-parameter decomposition of the indecomposable of lam at t = n.
std::vector<Partition> lift(const Partition& lam, IntegerParameter n);

int hom_dim(const Partition& a, const Partition& b, IntegerParameter n);

enum class ObjectStatus { SimpleProjective, SimpleNonProjective, Projective };
std::string_view to_string(ObjectStatus status);
ObjectStatus object_status(const Partition& lam, IntegerParameter n);

/// [X_mu (x) X_tau : X_lam] at t = n, from reduced coefficients of the lifts.
BigInt multiplicity_at_integer(const Partition& mu, const Partition& tau, const Partition& lam,
                               IntegerParameter n);

/// P_lam(T) with exact rational coefficients, lowest degree first.
class DimensionPolynomial {
 public:
  DimensionPolynomial(Partition lam, std::vector<Rational> coefficients)
      : lam_(std::move(lam)), coeffs_(std::move(coefficients)) {}

  const Partition& partition() const { return lam_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational operator()(const Rational& x) const;
  /// Human-readable form in the variable T, e.g. "1/2*T^2 - 3/2*T".
  std::string to_string() const;

 private:
  Partition lam_;
  std::vector<Rational> coeffs_;
};

DimensionPolynomial dimension_polynomial(const Partition& lam);

}  // namespace kron
