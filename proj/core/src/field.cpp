#include "bicirc/field.hpp"

#include <stdexcept>
#include <string>

namespace bicirc {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-degree-first

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * m[i]) % p) % p);
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_from_index(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Poly c(len);
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = poly_from_index(idx, p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

std::uint32_t FieldTable::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

FieldTable make_field(std::uint32_t q) {
  const auto [p, k] = prime_power_decomposition(q);
  if (p == 0 || q > 1024) throw std::invalid_argument("field order must be a prime power <= 1024, got " + std::to_string(q));
  FieldTable f;
  f.q_ = q;
  f.p_ = p;
  f.k_ = k;
  if (k == 1) {
    f.modulus_ = {0, 1};
  } else {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    // Lexicographic order on (c_0, c_1, ..., c_{k-1}) with c_0 most significant.
    for (std::uint64_t rank = 0; rank < count; ++rank) {
      Poly cand(k);
      std::uint64_t r = rank;
      for (std::size_t i = k; i-- > 0;) {
        cand[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        f.modulus_ = cand;
        break;
      }
    }
  }
  f.add_.resize(std::size_t{q} * q);
  f.mul_.resize(std::size_t{q} * q);
  f.neg_.resize(q);
  f.inv_.assign(q, 0);
  auto to_index = [&](const Poly& c) {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = poly_from_index(a, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = poly_from_index(b, p, k);
      Poly sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      f.add_[a * q + b] = to_index(sum);
      Poly prod(2 * k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      if (k == 1) {
        prod.resize(1);
      } else {
        prod = poly_mod(prod, f.modulus_, p);
        prod.resize(k, 0);
      }
      f.mul_[a * q + b] = to_index(prod);
    }
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      if (f.add_[a * q + b] == 0) f.neg_[a] = b;
      if (f.mul_[a * q + b] == 1) f.inv_[a] = b;
    }
  return f;
}

}  // namespace bicirc
