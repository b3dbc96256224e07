#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

namespace kron {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ParseError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw NotWeaklyDecreasing("parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

bool operator<(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // reverse-lex: (3) before (2,1) before (1,1,1)
  return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                      a.parts_.begin(), a.parts_.end());
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return Partition{};
  if (text.empty()) throw ParseError("empty partition text (use \"-\" for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value <= 0) {
      throw ParseError("malformed partition part '" + std::string(token) + "' in '" +
                       std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition tilde(const Partition& lam, int n) {
  if (n < lam.size() + lam.first()) {
    throw BoundViolation("tilde(" + to_string(lam) + ", " + std::to_string(n) +
                         ") requires n >= " + std::to_string(lam.size() + lam.first()));
  }
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(lam.length()) + 1);
  parts.push_back(n - lam.size());
  parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
  return Partition(std::move(parts));
}

Partition bar(const Partition& lam) {
  if (lam.empty()) return lam;
  return Partition(std::vector<int>(lam.parts().begin() + 1, lam.parts().end()));
}

Partition dagger(const Partition& u, int i) {
  if (i < 1) throw BoundViolation("dagger index must be >= 1");
  std::vector<int> parts;
  for (int j = 1; j < i; ++j) parts.push_back(u.row(j) + 1);
  for (int j = i + 1; j <= u.length(); ++j) parts.push_back(u.row(j));
  return Partition(std::move(parts));
}

MuSequence mu_sequence(const Partition& lam, long t, int length) {
  MuSequence seq;
  seq.t = t;
  seq.source = lam;
  seq.prefix.reserve(static_cast<std::size_t>(std::max(length, 0)));
  for (int i = 0; i < length; ++i) {
    seq.prefix.push_back(i == 0 ? t - lam.size() : static_cast<long>(lam.row(i)) - i);
  }
  return seq;
}

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return out;
}

BigInt dim_irrep(const Partition& lam) {
  BigInt hooks = 1;
  // column lengths give the leg of each cell
  std::vector<int> columns(static_cast<std::size_t>(lam.first()), 0);
  for (int r = 1; r <= lam.length(); ++r) {
    for (int c = 0; c < lam.row(r); ++c) ++columns[static_cast<std::size_t>(c)];
  }
  for (int r = 1; r <= lam.length(); ++r) {
    for (int c = 1; c <= lam.row(r); ++c) {
      int arm = lam.row(r) - c;
      int leg = columns[static_cast<std::size_t>(c - 1)] - r;
      hooks *= arm + leg + 1;
    }
  }
  BigInt out = factorial(lam.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
  return out;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& current,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    enumerate(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  enumerate(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace kron
