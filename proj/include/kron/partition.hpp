#pragma once

/// \file
/// Young diagrams and the diagram transforms used throughout the library.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kron {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotWeaklyDecreasing : public Error {
 public:
  using Error::Error;
};

/// A diagram transform was requested outside the range where it is defined.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Signals a broken internal invariant (an implementation bug, not bad input).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A partition stored without trailing zeros. Size and length are cached.
class Partition {
 public:
  Partition() = default;
  /// Zeros at the end are dropped; throws NotWeaklyDecreasing otherwise.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// One-based row access; rows past the length are 0.
  int row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int first() const { return row(1); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Orders by size, then reverse-lexicographically within a size.
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "-" for the empty partition, otherwise comma-separated parts.
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// Prepends a row so the result has size n. Requires n >= |lam| + lam_1.
Partition tilde(const Partition& lam, int n);
/// Drops the top row.
Partition bar(const Partition& lam);
/// Removes row i and adds 1 to each of the rows above it.
Partition dagger(const Partition& u, int i);

/// Leading terms of (t - |lam|, lam_1 - 1, lam_2 - 2, ...).
struct MuSequence {
  std::vector<long> prefix;
  long t = 0;
  Partition source;
};

MuSequence mu_sequence(const Partition& lam, long t, int length);

/// Dimension of the S_{|lam|} irreducible, by the hook length formula.
BigInt dim_irrep(const Partition& lam);

BigInt factorial(int n);

/// Partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
/// Partitions of every size 0..max_size, grouped by size.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace kron

template <>
struct std::hash<kron::Partition> {
  std::size_t operator()(const kron::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
