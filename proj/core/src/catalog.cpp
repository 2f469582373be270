#include "bicirc/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "bicirc/families.hpp"
#include "bicirc/field.hpp"
#include "bicirc/graph_ops.hpp"

namespace bicirc {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Canonical certificates of catalog graphs, shared across calls.
std::string cached_certificate(const FamilySpec& spec, const SearchOptions& opts) {
  static std::mutex mutex;
  static std::map<std::string, std::string> cache;
  const auto key = spec.to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto cert = canonical_form(generate(spec).graph, opts).certificate;
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(cert)).first->second;
}

}  // namespace

std::vector<CatalogEntry> basic_catalog(std::size_t order, std::size_t valency) {
  if (order > 10000) throw std::invalid_argument("basic_catalog supports orders up to 10^4");
  std::vector<CatalogEntry> out;
  const auto n_half = static_cast<std::uint32_t>(order / 2);
  const bool even = order % 2 == 0;

  if (even && n_half >= 2 && valency == n_half) out.push_back({'a', fam::CompleteMultipartite{2, n_half}});

  if (order >= 3 && valency + 1 == order) out.push_back({'b', fam::CompleteMultipartite{static_cast<std::uint32_t>(order), 1}});
  if (even && n_half >= 3 && valency + 2 == order) out.push_back({'b', fam::CompleteMultipartite{n_half, 2}});
  if (even && n_half >= 3 && valency + 1 == n_half) out.push_back({'b', fam::KnnMinusMatching{n_half}});

  if (even && n_half > 2 && is_prime(n_half) && valency > 1 && (n_half - 1) % valency == 0)
    out.push_back({'c', fam::G2p{n_half, static_cast<std::uint32_t>(valency)}});

  for (std::uint32_t q = 2; 2 * (q * q + q + 1) <= order; ++q) {
    if (prime_power_decomposition(q).first == 0) continue;
    for (std::uint32_t d = 3;; ++d) {
      const auto points = (ipow(q, d) - 1) / (q - 1);
      if (2 * points > order) break;
      if (2 * points != order) continue;
      if (valency == (ipow(q, d - 1) - 1) / (q - 1)) out.push_back({'d', fam::BPG{d, q, false}});
      if (valency == ipow(q, d - 1)) out.push_back({'d', fam::BPG{d, q, true}});
    }
  }

  if (order > 2 && is_prime(order) && valency >= 2 && valency % 2 == 0 && (order - 1) % valency == 0)
    out.push_back({'e', fam::CayPE{static_cast<std::uint32_t>(order), static_cast<std::uint32_t>(valency)}});

  if (order == 22 && valency == 6) out.push_back({'f', fam::BH11prime{}});

  if (order == 10 && valency == 3) out.push_back({'g', fam::Petersen{}});
  if (order == 10 && valency == 6) out.push_back({'g', complement_of(fam::Petersen{})});
  if (order == 16 && valency == 6) out.push_back({'g', fam::Hamming{2, 4}});
  if (order == 16 && valency == 9) out.push_back({'g', complement_of(fam::Hamming{2, 4})});
  if (order == 16 && valency == 5) out.push_back({'g', fam::Clebsch{}});
  if (order == 16 && valency == 10) out.push_back({'g', complement_of(fam::Clebsch{})});
  return out;
}

std::optional<CatalogEntry> identify_basic(const Graph& g, const SearchOptions& opts) {
  const auto props = basic_props(g);
  if (!props.regular || !props.valency) return std::nullopt;
  const auto entries = basic_catalog(g.order(), *props.valency);
  if (entries.empty()) return std::nullopt;
  const auto cert = canonical_form(g, opts).certificate;
  for (const auto& e : entries)
    if (cached_certificate(e.spec, opts) == cert) return e;
  return std::nullopt;
}

}  // namespace bicirc
