#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bicirc/error.hpp"
#include "bicirc/partition.hpp"
#include "bicirc/perm_group.hpp"

namespace bicirc {

struct TransitivityProfile {
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
};

Partition orbits(const PermGroup& g);
TransitivityProfile transitivity_profile(const PermGroup& g);

PermGroup point_stabilizer(const PermGroup& g, std::uint32_t point);
PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const std::uint32_t> points);

/// Finest block system in which `alpha` and `beta` share a block.
Partition smallest_block_system(const PermGroup& g, std::uint32_t alpha, std::uint32_t beta);

/// Minimal non-trivial block systems: those admitting no non-trivial block
/// system strictly finer than themselves. Empty iff `g` is primitive.
/// Throws std::invalid_argument if `g` is intransitive.
std::vector<Partition> minimal_block_systems(const PermGroup& g);

/// All group elements; throws OrderCapExceeded above `cap`.
std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t cap);

/// Conjugacy classes; the identity class comes first, the rest in order of
/// first appearance in the element enumeration.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g,
                                                        std::uint64_t cap = Limits{}.element_cap);

/// Smallest normal subgroup of `g` containing `seeds`.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> seeds);

/// Group generated by both; normal in the ambient group if both are.
PermGroup join(const PermGroup& a, const PermGroup& b);

/// True iff `a` and `b` are the same subgroup.
bool same_subgroup(const PermGroup& a, const PermGroup& b);

/// Every non-trivial normal subgroup of `g` with at least `min_orbits` orbits.
/// Built by joining normal closures of conjugacy classes; a join never has
/// more orbits than its parts, so branches below the bound are cut.
std::vector<PermGroup> normal_subgroups_with_min_orbits(const PermGroup& g, std::size_t min_orbits,
                                                        std::uint64_t cap = Limits{}.element_cap);

/// The members of normal_subgroups_with_min_orbits that are maximal with the
/// property. Empty means the trivial subgroup is the unique maximal one.
std::vector<PermGroup> normal_subgroups_with_orbit_bound(const PermGroup& g, std::size_t min_orbits,
                                                         std::uint64_t cap = Limits{}.element_cap);

/// Every non-trivial normal subgroup is transitive.
/// Any non-trivial normal subgroup contains the normal closure of one of its
/// non-identity conjugacy classes, so checking those closures is enough.
bool is_quasiprimitive(const PermGroup& g, std::uint64_t cap = Limits{}.element_cap);
/// Every non-trivial normal subgroup has at most two orbits and one has exactly two.
bool is_biquasiprimitive(const PermGroup& g, std::uint64_t cap = Limits{}.element_cap);

/// True iff some element has order equal to |g|.
bool is_cyclic(const PermGroup& g, std::uint64_t cap = Limits{}.element_cap);

/// Action of `g` on the blocks of an invariant partition.
/// Throws std::invalid_argument if the partition is not g-invariant.
PermGroup induced_action(const PermGroup& g, const Partition& blocks);

}  // namespace bicirc
