#include "bicirc/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bicirc/field.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/projective.hpp"

namespace bicirc {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void check_order(std::uint64_t n) { require(n <= kMaxDegree, "graph would have more than 65536 vertices"); }

// Attaches a witness after confirming it is an automorphism of the declared type.
Generated with_witness(Graph g, Permutation perm, std::vector<std::size_t> lengths) {
  CycleType expected(std::move(lengths));
  if (!is_automorphism(g, perm) || perm.cycle_type() != expected)
    throw std::logic_error("generated witness failed verification");
  return {std::move(g), Witness{std::move(perm), std::move(expected)}};
}

// x -> x+1 on each of `halves` consecutive blocks of size n.
Permutation block_rotation(std::uint32_t n, std::uint32_t halves) {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(n) * halves);
  for (std::uint32_t h = 0; h < halves; ++h)
    for (std::uint32_t x = 0; x < n; ++x) images[h * n + x] = h * n + (x + 1) % n;
  return Permutation(images);
}

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> xs, std::uint32_t n, const char* what) {
  for (auto x : xs) require(x < n, std::string(what) + " element out of range");
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool closed_under_negation(const std::vector<std::uint32_t>& xs, std::uint32_t n) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](std::uint32_t x) { return std::binary_search(xs.begin(), xs.end(), (n - x) % n); });
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Graph complete_bipartite_minus(std::uint32_t n, bool keep_matching_only) {
  GraphBuilder b(2 * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if ((i == j) == keep_matching_only) b.add_edge(i, n + j);
  return b.build();
}

}  // namespace

std::uint32_t primitive_root(std::uint32_t p) {
  require(is_prime(p), "primitive_root needs a prime");
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g)
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint32_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  throw std::logic_error("no primitive root found");
}

std::vector<std::uint32_t> unit_subgroup(std::uint32_t p, std::uint32_t r) {
  require(is_prime(p), "p must be prime");
  require(r >= 1 && (p - 1) % r == 0, "r must divide p-1");
  const auto g = primitive_root(p);
  const auto step = pow_mod(g, (p - 1) / r, p);
  std::vector<std::uint32_t> out;
  std::uint64_t x = 1;
  for (std::uint32_t t = 0; t < r; ++t, x = x * step % p) out.push_back(static_cast<std::uint32_t>(x));
  std::sort(out.begin(), out.end());
  return out;
}

Graph gen_complete_multipartite(std::uint32_t m, std::uint32_t n) {
  require(m >= 2 && n >= 1, "complete multipartite needs m >= 2 parts of size n >= 1");
  check_order(std::uint64_t{m} * n);
  GraphBuilder b(m * n);
  for (std::uint32_t u = 0; u < m * n; ++u)
    for (std::uint32_t v = u + 1; v < m * n; ++v)
      if (u / n != v / n) b.add_edge(u, v);
  return b.build();
}

Graph gen_knn_minus_matching(std::uint32_t n) {
  require(n >= 2, "K_{n,n}-nK_2 needs n >= 2");
  check_order(2ull * n);
  return complete_bipartite_minus(n, false);
}

Graph gen_hamming(std::uint32_t d, std::uint32_t r) {
  require(d >= 1 && r >= 2, "H(d,r) needs d >= 1 and r >= 2");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    size *= r;
    require(size <= 10000, "H(d,r) too large");
  }
  const auto n = static_cast<std::uint32_t>(size);
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < d; ++i, place *= r) {
      const auto digit = (u / place) % r;
      for (std::uint32_t c = digit + 1; c < r; ++c) b.add_edge(u, u + (c - digit) * place);
    }
  }
  return b.build();
}

Graph gen_folded_cube(std::uint32_t d) {
  require(d >= 2 && d <= 15, "folded d-cube needs 2 <= d <= 15");
  const std::uint32_t n = 1u << (d - 1);
  GraphBuilder b(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t i = 0; i + 1 < d; ++i) b.add_edge(u, u ^ (1u << i));
    b.add_edge(u, u ^ (n - 1));
  }
  return b.build();
}

Graph gen_clebsch() {
  const auto f = make_field(16);
  std::vector<bool> cube(16, false);
  for (std::uint32_t x = 1; x < 16; ++x) cube[f.mul(x, f.mul(x, x))] = true;
  GraphBuilder b(16);
  for (std::uint32_t u = 0; u < 16; ++u)
    for (std::uint32_t v = u + 1; v < 16; ++v)
      if (cube[f.sub(u, v)]) b.add_edge(u, v);
  return b.build();
}

Graph gen_petersen() {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  GraphBuilder b(10);
  for (std::uint32_t u = 0; u < 10; ++u)
    for (std::uint32_t v = u + 1; v < 10; ++v) {
      const auto [a, c] = pairs[u];
      const auto [x, y] = pairs[v];
      if (a != x && a != y && c != x && c != y) b.add_edge(u, v);
    }
  return b.build();
}

Generated gen_cay_cyclic(std::uint32_t n, std::vector<std::uint32_t> s) {
  require(n >= 1, "Cay(Z_n, S) needs n >= 1");
  check_order(n);
  s = normalized(std::move(s), n, "connection set");
  require(!std::binary_search(s.begin(), s.end(), 0u), "connection set contains 0");
  require(closed_under_negation(s, n), "connection set is not closed under negation");
  GraphBuilder b(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (auto t : s) b.add_edge(x, (x + t) % n);
  return with_witness(b.build(), block_rotation(n, 1), {n});
}

Generated gen_cay_pe(std::uint32_t p, std::uint32_t e) {
  require(is_prime(p) && p > 2, "Cay(p,e) needs an odd prime p");
  require(e >= 2 && e % 2 == 0 && (p - 1) % e == 0, "Cay(p,e) needs e even dividing p-1");
  return gen_cay_cyclic(p, unit_subgroup(p, e));
}

Generated gen_g2p(std::uint32_t p, std::uint32_t r) {
  require(is_prime(p) && p > 2, "G(2p,r) needs an odd prime p");
  require(r > 1 && (p - 1) % r == 0, "G(2p,r) needs r > 1 dividing p-1");
  const auto l = unit_subgroup(p, r);
  GraphBuilder b(2 * p);
  for (std::uint32_t x = 0; x < p; ++x)
    for (auto s : l) b.add_edge(x, p + (x + s) % p);
  return with_witness(b.build(), block_rotation(p, 2), {p, p});
}

Generated gen_g2pr(std::uint32_t p, std::uint32_t r) {
  require(is_prime(p) && p > 2, "G(2,p,r) needs an odd prime p");
  require(r >= 2 && r % 2 == 0 && (p - 1) % r == 0, "G(2,p,r) needs r even dividing p-1");
  const auto l = unit_subgroup(p, r);
  GraphBuilder b(2 * p);
  for (std::uint32_t x = 0; x < p; ++x)
    for (auto s : l) {
      const auto y = (x + s) % p;
      b.add_edge(x, y);
      b.add_edge(p + x, y);
      b.add_edge(x, p + y);
      b.add_edge(p + x, p + y);
    }
  return with_witness(b.build(), block_rotation(p, 2), {p, p});
}

Graph gen_bpg(std::uint32_t d, std::uint32_t q, bool primed) {
  const auto geom = projective_incidence(d, q);
  const auto n = static_cast<std::uint32_t>(geom.point_count());
  GraphBuilder b(2 * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (geom.incident(i, j) != primed) b.add_edge(i, n + j);
  return b.build();
}

Generated gen_bh11prime() {
  constexpr std::uint32_t kR[] = {1, 3, 4, 5, 9};
  GraphBuilder b(22);
  for (std::uint32_t x = 0; x < 11; ++x)
    for (std::uint32_t i = 0; i < 11; ++i) {
      const bool in_translate = std::any_of(std::begin(kR), std::end(kR), [&](std::uint32_t t) { return (t + i) % 11 == x; });
      if (!in_translate) b.add_edge(x, 11 + i);
    }
  return with_witness(b.build(), block_rotation(11, 2), {11, 11});
}

Generated gen_gp(std::uint32_t n, std::uint32_t r) {
  require(n >= 3, "GP(n,r) needs n >= 3");
  require(r >= 1 && 2 * r < n, "GP(n,r) needs 1 <= r < n/2");
  check_order(2ull * n);
  GraphBuilder b(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    b.add_edge(i, (i + 1) % n);
    b.add_edge(n + i, n + (i + r) % n);
    b.add_edge(i, n + i);
  }
  return with_witness(b.build(), block_rotation(n, 2), {n, n});
}

Generated gen_bc(std::uint32_t n, std::vector<std::uint32_t> l, std::vector<std::uint32_t> m,
                 std::vector<std::uint32_t> r) {
  require(n >= 1, "BC_n needs n >= 1");
  check_order(2ull * n);
  l = normalized(std::move(l), n, "L");
  m = normalized(std::move(m), n, "M");
  r = normalized(std::move(r), n, "R");
  require(!std::binary_search(l.begin(), l.end(), 0u) && !std::binary_search(r.begin(), r.end(), 0u),
          "L and R must not contain 0");
  require(closed_under_negation(l, n) && closed_under_negation(r, n), "L and R must be closed under negation");
  GraphBuilder b(2 * n);
  for (std::uint32_t h = 0; h < n; ++h) {
    for (auto x : l) b.add_edge(h, (h + x) % n);
    for (auto x : r) b.add_edge(n + h, n + (h + x) % n);
    for (auto x : m) b.add_edge(h, n + (h + x) % n);
  }
  return with_witness(b.build(), block_rotation(n, 2), {n, n});
}

Generated gen_dihedral_cayley(std::uint32_t n, std::vector<std::uint32_t> rot, std::vector<std::uint32_t> ref) {
  require(n >= 2, "D_2n needs n >= 2");
  check_order(2ull * n);
  rot = normalized(std::move(rot), n, "rotation");
  ref = normalized(std::move(ref), n, "reflection");
  require(!std::binary_search(rot.begin(), rot.end(), 0u), "connection set contains the identity");
  require(closed_under_negation(rot, n), "rotations must be closed under inversion");
  GraphBuilder b(2 * n);
  // (b^f a^i)(b^g a^j) = b^(f+g) a^((-1)^g i + j)
  for (std::uint32_t g = 0; g < 2; ++g)
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto x = g * n + j;
      auto shift = [&](std::uint32_t i) { return g == 0 ? (i + j) % n : (n - i + j) % n; };
      for (auto i : rot) b.add_edge(x, g * n + shift(i));
      for (auto i : ref) b.add_edge(x, (1 - g) * n + shift(i));
    }
  return with_witness(b.build(), block_rotation(n, 2), {n, n});
}

std::vector<std::uint32_t> gamma_exponents(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
  std::vector<std::uint32_t> e{0};
  std::uint64_t power = 1, sum = 0;
  for (std::uint32_t j = 1; j < k; ++j) {
    sum = (sum + power) % n;
    e.push_back(static_cast<std::uint32_t>(sum));
    power = power * r % n;
  }
  return e;
}

std::vector<std::uint32_t> gamma_parameters(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 1; r < n; ++r) {
    if (std::gcd(r, n) != 1) continue;
    std::uint64_t sum = 0, power = 1;
    for (std::uint32_t j = 0; j < k; ++j, power = power * r % n) sum = (sum + power) % n;
    if (sum != 0) continue;
    auto e = gamma_exponents(n, k, r);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) == e.end()) out.push_back(r);
  }
  return out;
}

Generated gen_gamma_nk(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
  require(k == 3 || k == 5, "Gamma_{n,k} needs k in {3,5}");
  require(n >= 3, "Gamma_{n,k} needs n >= 3");
  const auto valid = gamma_parameters(n, k);
  require(std::binary_search(valid.begin(), valid.end(), r),
          "r must be a unit with 1 + r + ... + r^(k-1) = 0 mod n giving k distinct reflections");
  return gen_dihedral_cayley(n, {}, gamma_exponents(n, k, r));
}

Generated generate(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Generated {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, fam::CompleteMultipartite>) {
          return {gen_complete_multipartite(s.m, s.n), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::KnnMinusMatching>) {
          return {gen_knn_minus_matching(s.n), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::Hamming>) {
          return {gen_hamming(s.d, s.r), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::FoldedCube>) {
          return {gen_folded_cube(s.d), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::Clebsch>) {
          return {gen_clebsch(), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::Petersen>) {
          return {gen_petersen(), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::CayCyclic>) {
          return gen_cay_cyclic(s.n, s.s);
        } else if constexpr (std::is_same_v<T, fam::CayPE>) {
          return gen_cay_pe(s.p, s.e);
        } else if constexpr (std::is_same_v<T, fam::G2p>) {
          return gen_g2p(s.p, s.r);
        } else if constexpr (std::is_same_v<T, fam::G2pr>) {
          return gen_g2pr(s.p, s.r);
        } else if constexpr (std::is_same_v<T, fam::BPG>) {
          return {gen_bpg(s.d, s.q, s.primed), std::nullopt};
        } else if constexpr (std::is_same_v<T, fam::BH11prime>) {
          return gen_bh11prime();
        } else if constexpr (std::is_same_v<T, fam::GenPetersen>) {
          return gen_gp(s.n, s.r);
        } else if constexpr (std::is_same_v<T, fam::BC>) {
          return gen_bc(s.n, s.l, s.m, s.r);
        } else if constexpr (std::is_same_v<T, fam::CayDihedral>) {
          return gen_dihedral_cayley(s.n, s.rot, s.ref);
        } else if constexpr (std::is_same_v<T, fam::GammaNK>) {
          return gen_gamma_nk(s.n, s.k, s.r);
        } else if constexpr (std::is_same_v<T, fam::Complement>) {
          auto inner = generate(*s.inner);
          return {complement(inner.graph), inner.witness};
        } else {
          static_assert(std::is_same_v<T, fam::DoubleCover>);
          auto inner = generate(*s.inner);
          Graph cover = standard_double_cover(inner.graph);
          if (!inner.witness) return {std::move(cover), std::nullopt};
          const auto n = static_cast<std::uint32_t>(inner.graph.order());
          std::vector<std::uint32_t> images(2 * n);
          for (std::uint32_t x = 0; x < n; ++x) {
            images[x] = inner.witness->perm[x];
            images[n + x] = n + inner.witness->perm[x];
          }
          auto lengths = inner.witness->type.lengths();
          lengths.insert(lengths.end(), inner.witness->type.lengths().begin(), inner.witness->type.lengths().end());
          return with_witness(std::move(cover), Permutation(images), std::move(lengths));
        }
      },
      spec.value);
}

}  // namespace bicirc
