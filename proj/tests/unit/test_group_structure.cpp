#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bicirc/automorphisms.hpp"
#include "bicirc/families.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/group_structure.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bicirc;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

std::vector<std::size_t> sorted_sizes(const std::vector<std::vector<Permutation>>& classes) {
  std::vector<std::size_t> out;
  for (const auto& c : classes) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits(PermGroup::trivial(3)).size(), 3u);
  const PermGroup two_cycles(10, {P("(0 1 2 3 4)(5 6 7 8 9)", 10)});
  const auto o = orbits(two_cycles);
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o.block(0).size(), 5u);
}

TEST(Orbits, RotationPowerInGP83PairsVerticesWithinHalves) {
  const auto gen = gen_gp(8, 3);
  const auto rho = gen.witness->perm;
  const auto o = orbits(PermGroup(16, {rho.pow(4)}));
  ASSERT_EQ(o.size(), 8u);
  const auto halves = *bipartition(gen.graph);
  for (const auto& b : o.blocks()) {
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(halves[b[0]], halves[b[1]]);
  }
}

TEST(TransitivityProfile, Examples) {
  const auto cyc = transitivity_profile(PermGroup(6, {P("(0 1 2 3 4 5)", 6)}));
  EXPECT_TRUE(cyc.transitive && cyc.semiregular && cyc.regular);
  const auto two = transitivity_profile(PermGroup(10, {P("(0 1 2 3 4)(5 6 7 8 9)", 10)}));
  EXPECT_FALSE(two.transitive);
  EXPECT_TRUE(two.semiregular);
  EXPECT_FALSE(two.regular);
  const auto pet = transitivity_profile(automorphism_group(gen_petersen()));
  EXPECT_TRUE(pet.transitive);
  EXPECT_FALSE(pet.semiregular);
}

TEST(PointStabilizer, Examples) {
  EXPECT_EQ(point_stabilizer(PermGroup::symmetric(4), 0).order(), 6);
  const auto aut = automorphism_group(gen_petersen());
  const auto stab = point_stabilizer(aut, 0);
  EXPECT_EQ(stab.order(), 12);
  EXPECT_EQ(stab.orbits().block_sizes().size(), 3u);
  auto sizes = stab.orbits().block_sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 6}));
  EXPECT_TRUE(point_stabilizer(PermGroup(5, {P("(0 1 2 3 4)", 5)}), 2).is_trivial());
}

TEST(MinimalBlockSystems, Examples) {
  EXPECT_TRUE(minimal_block_systems(PermGroup::symmetric(4)).empty());
  const auto c4 = minimal_block_systems(PermGroup(4, {P("(0 1 2 3)", 4)}));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0], Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  // Parts of K_{3[2]} form a block system of its automorphism group.
  const auto g = gen_complete_multipartite(3, 2);
  const auto systems = minimal_block_systems(automorphism_group(g));
  std::vector<std::vector<std::uint32_t>> parts;
  for (std::uint32_t v = 0; v < 6; ++v) {
    for (auto& p : parts)
      if (!g.adjacent(p[0], v)) {
        p.push_back(v);
        goto placed;
      }
    parts.push_back({v});
  placed:;
  }
  EXPECT_NE(std::find(systems.begin(), systems.end(), Partition::from_blocks(6, parts)), systems.end());
  EXPECT_THROW(minimal_block_systems(PermGroup::trivial(3)), std::invalid_argument);
}

TEST(MinimalBlockSystemsProperty, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(5);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<Permutation> gens{oracle::random_permutation(n, rng)};
    if (trial % 2) gens.push_back(oracle::random_permutation(n, rng));
    const PermGroup g(n, gens);
    if (!transitivity_profile(g).transitive) continue;
    ++checked;
    EXPECT_EQ(minimal_block_systems(g), oracle::minimal_block_systems(n, gens)) << "trial " << trial;
  }
  EXPECT_GE(checked, 100u);
  for (const auto& e : corpus::small_graphs()) {
    const auto aut = automorphism_group(e.graph);
    if (e.graph.order() < 2 || !transitivity_profile(aut).transitive) continue;
    EXPECT_EQ(minimal_block_systems(aut), oracle::minimal_block_systems(e.graph.order(), aut.generators())) << e.name;
  }
}

TEST(ConjugacyClasses, Examples) {
  EXPECT_EQ(sorted_sizes(conjugacy_classes(PermGroup::symmetric(3))), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(conjugacy_classes(PermGroup(5, {P("(0 1 2 3 4)", 5)})).size(), 5u);
  const auto pet = conjugacy_classes(automorphism_group(gen_petersen()));
  EXPECT_EQ(pet.size(), 7u);
  std::size_t total = 0;
  for (const auto& c : pet) total += c.size();
  EXPECT_EQ(total, 120u);
  EXPECT_THROW(conjugacy_classes(PermGroup::symmetric(12), 1000), OrderCapExceeded);
}

TEST(NormalClosure, Examples) {
  const auto s4 = PermGroup::symmetric(4);
  const std::vector<Permutation> id = {Permutation(4)};
  EXPECT_TRUE(normal_closure(s4, id).is_trivial());
  const std::vector<Permutation> three = {P("(0 1 2)", 4)};
  EXPECT_EQ(normal_closure(s4, three).order(), 12);
  const std::vector<Permutation> klein = {P("(0 1)(2 3)", 4)};
  EXPECT_EQ(normal_closure(s4, klein).order(), 4);
}

TEST(NormalSubgroups, Examples) {
  const auto z6 = normal_subgroups_with_orbit_bound(PermGroup(6, {P("(0 1 2 3 4 5)", 6)}), 3);
  ASSERT_EQ(z6.size(), 1u);
  EXPECT_EQ(z6[0].order(), 2);
  EXPECT_EQ(z6[0].orbit_count(), 3u);

  const auto aut = automorphism_group(gen_gp(12, 5).graph);
  const auto all = normal_subgroups_with_min_orbits(aut, 3);
  EXPECT_TRUE(std::any_of(all.begin(), all.end(), [](const PermGroup& n) {
    return n.order() == 3 && is_cyclic(n) && n.orbit_count() == 8;
  }));
  EXPECT_TRUE(normal_subgroups_with_orbit_bound(PermGroup::symmetric(5), 3).empty());
}

// Every reported subgroup is normal, has enough orbits, and no two coincide.
TEST(NormalSubgroupsProperty, NormalDistinctAndBounded) {
  for (const auto& spec : {"GP(8,3)", "GP(10,2)", "GP(12,5)", "Knn(4)", "Cay(8;[1,3,5,7])"}) {
    const auto aut = automorphism_group(generate(FamilySpec::parse(spec)).graph);
    const auto subs = normal_subgroups_with_min_orbits(aut, 3);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      EXPECT_GE(subs[i].orbit_count(), 3u) << spec;
      for (const auto& n : subs[i].generators())
        for (const auto& g : aut.generators()) EXPECT_TRUE(subs[i].contains(n.conjugate_by(g))) << spec;
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(same_subgroup(subs[i], subs[j])) << spec;
    }
    const auto maximal = normal_subgroups_with_orbit_bound(aut, 3);
    for (const auto& m : maximal)
      for (const auto& s : subs)
        if (!same_subgroup(m, s)) EXPECT_FALSE(s.contains_group(m)) << spec;
  }
}

TEST(Quasiprimitivity, Examples) {
  EXPECT_TRUE(is_quasiprimitive(PermGroup::symmetric(5)));
  EXPECT_FALSE(is_biquasiprimitive(automorphism_group(gen_gp(10, 2).graph)));
  EXPECT_TRUE(is_biquasiprimitive(automorphism_group(gen_complete_multipartite(2, 5))));
}

TEST(InducedAction, ActsOnBlocks) {
  const PermGroup c6(6, {P("(0 1 2 3 4 5)", 6)});
  const auto blocks = Partition::from_blocks(6, {{0, 3}, {1, 4}, {2, 5}});
  const auto act = induced_action(c6, blocks);
  EXPECT_EQ(act.degree(), 3u);
  EXPECT_EQ(act.order(), 3);
  EXPECT_THROW(induced_action(c6, Partition::from_blocks(6, {{0, 1}, {2, 3}, {4, 5}})), std::invalid_argument);
}

TEST(Oracle, PartitionCountsAreBellNumbers) {
  const std::size_t bell[] = {0, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n < 8; ++n) EXPECT_EQ(oracle::all_partitions(n).size(), bell[n]);
}
