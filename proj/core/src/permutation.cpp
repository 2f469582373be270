#include "bicirc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bicirc/error.hpp"

namespace bicirc {

CycleType::CycleType(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

std::size_t CycleType::degree() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), std::size_t{0});
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) out << ',';
    out << lengths_[i];
  }
  out << '}';
  return out.str();
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw std::invalid_argument("permutation degree above 2^16");
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation::Permutation(std::span<const std::uint32_t> images) : images_(images.size()) {
  if (images.size() > kMaxDegree) throw std::invalid_argument("permutation degree above 2^16");
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size() || seen[images[i]])
      throw std::invalid_argument("images do not form a bijection");
    seen[images[i]] = true;
    images_[i] = static_cast<std::uint16_t>(images[i]);
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto x = cycle[i];
      if (x >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[x]) throw std::invalid_argument("cycles are not disjoint");
      used[x] = true;
      img[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::span<const std::uint32_t>(img));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("malformed cycle notation");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value >= degree) throw ParseError("point out of range in cycle notation");
        ++i;
      }
      cycle.push_back(static_cast<std::uint32_t>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return inv;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // g^-1 p g maps g(x) to g(p(x)).
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[g.images_[x]] = g.images_[images_[x]];
  return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(true)) lengths.push_back(c.size());
  return CycleType(std::move(lengths));
}

BigInt Permutation::order() const {
  BigInt result = 1;
  for (const auto& c : cycles(false)) {
    BigInt len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::size_t Permutation::support_size() const {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) moved += images_[i] != i;
  return moved;
}

std::string Permutation::to_string() const {
  const auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out << ' ';
      out << c[i];
    }
    out << ')';
  }
  return out.str();
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (auto v : images_) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }

}  // namespace bicirc
