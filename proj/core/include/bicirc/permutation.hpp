#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bicirc {

using BigInt = boost::multiprecision::cpp_int;

/// Points are stored in 16 bits; degrees above this are unsupported.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/// Multiset of cycle lengths, fixed points included, sorted descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> lengths);

  const std::vector<std::size_t>& lengths() const { return lengths_; }
  std::size_t degree() const;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<std::size_t> lengths_;
};

/// A bijection on {0..n-1}. Composition is left to right: (p * q)(x) = q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::span<const std::uint32_t> images);

  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t x) const { return images_[x]; }
  std::span<const std::uint16_t> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(long long exponent) const;
  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;

  /// Non-trivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<std::uint32_t>> cycles(bool include_fixed = false) const;
  CycleType cycle_type() const;
  BigInt order() const;
  std::size_t support_size() const;

  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

CycleType cycle_type(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace bicirc
