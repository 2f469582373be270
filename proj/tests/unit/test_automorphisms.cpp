#include <gtest/gtest.h>

#include <random>

#include "bicirc/automorphisms.hpp"
#include "bicirc/families.hpp"
#include "bicirc/graph6.hpp"
#include "bicirc/graph_ops.hpp"
#include "bicirc/group_structure.hpp"
#include "bicirc/stabilizer_chain.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bicirc;

TEST(AutomorphismGroup, Examples) {
  EXPECT_EQ(automorphism_group(gen_complete_multipartite(4, 1)).order(), 24);
  EXPECT_EQ(automorphism_group(gen_gp(24, 5).graph).order(), 288);
  EXPECT_EQ(automorphism_group(gen_bc(24, {}, {0, 1, 3, 11, 20}, {}).graph).order(), 960);
  EXPECT_EQ(automorphism_group(Graph(0)).order(), 1);
  EXPECT_EQ(automorphism_group(Graph(6)).order(), 720);
}

TEST(AutomorphismGroup, RespectsColours) {
  const auto c6 = gen_cay_cyclic(6, {1, 5}).graph;
  EXPECT_EQ(automorphism_group(c6).order(), 12);
  EXPECT_EQ(automorphism_group(ColoredGraph{c6, {0, 1, 0, 1, 0, 1}}).order(), 6);
  EXPECT_EQ(automorphism_group(ColoredGraph{c6, {1, 0, 0, 0, 0, 0}}).order(), 2);
}

TEST(AutomorphismGroup, BudgetExceededIsDistinct) {
  EXPECT_THROW(automorphism_group(gen_gp(24, 5).graph, SearchOptions{3}), BudgetExceeded);
}

// Generators are automorphisms and the order equals a brute-force count.
TEST(AutomorphismGroupProperty, MatchesBruteForce) {
  auto graphs = corpus::small_graphs();
  for (auto& e : corpus::random_graphs(200, 1)) graphs.push_back(std::move(e));
  for (const auto& e : graphs) {
    const auto aut = automorphism_group(e.graph);
    for (const auto& g : aut.generators()) EXPECT_TRUE(is_automorphism(e.graph, g)) << e.name;
    EXPECT_EQ(aut.order(), oracle::brute_force_automorphisms(e.graph).size()) << e.name;
  }
}

TEST(CanonicalForm, Examples) {
  const auto gp103 = gen_gp(10, 3).graph;
  EXPECT_TRUE(are_isomorphic(gp103, standard_double_cover(gen_petersen())));
  EXPECT_FALSE(are_isomorphic(gen_cay_cyclic(6, {1, 5}).graph, gen_complete_multipartite(2, 3)));
  EXPECT_FALSE(are_isomorphic(gen_gp(8, 3).graph, gen_gp(8, 1).graph));
}

// The certificate does not change under relabelling, and the labelling reproduces it.
TEST(CanonicalFormProperty, InvariantUnderRelabelling) {
  std::mt19937_64 rng(31);
  for (const char* text : {"GP(10,3)", "GP(12,5)", "BC(12;;0,1,2,4,9;)", "Clebsch", "BPG(3,3)", "Cay(12;[1,5,7,11])",
                           "KnnMinusMatching(6)", "Hamming(2,4)"}) {
    const auto g = generate(FamilySpec::parse(text)).graph;
    const auto base = canonical_form(g);
    EXPECT_EQ(graph6_encode(relabel(g, base.labeling)), base.certificate) << text;
    for (int i = 0; i < 100; ++i) {
      const auto h = relabel(g, oracle::random_permutation(g.order(), rng));
      EXPECT_EQ(canonical_form(h).certificate, base.certificate) << text;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(1 + trial % 9, 0.5, rng);
    const auto h = relabel(g, oracle::random_permutation(g.order(), rng));
    EXPECT_EQ(canonical_form(g).certificate, canonical_form(h).certificate);
  }
}

TEST(CanonicalFormProperty, IsomorphismAgreesWithBruteForce) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto a = oracle::random_graph(n, 0.5, rng);
    const auto b = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(are_isomorphic(a, b), oracle::isomorphic(a, b)) << trial;
  }
}

TEST(CanonicalFormProperty, ColouredCertificatesSeparateColourings) {
  const auto c6 = gen_cay_cyclic(6, {1, 5}).graph;
  const auto alt = canonical_form(ColoredGraph{c6, {0, 1, 0, 1, 0, 1}}).certificate;
  const auto adj = canonical_form(ColoredGraph{c6, {0, 0, 0, 1, 1, 1}}).certificate;
  EXPECT_NE(alt, adj);
  const auto shifted = canonical_form(ColoredGraph{c6, {1, 0, 1, 0, 1, 0}}).certificate;
  EXPECT_EQ(alt.substr(0, alt.find(';')), shifted.substr(0, shifted.find(';')));
}

TEST(Transitivity, Examples) {
  GraphBuilder p3(3);
  p3.add_edge(0, 1).add_edge(1, 2);
  EXPECT_FALSE(is_vertex_transitive(p3.build()));
  EXPECT_TRUE(is_arc_transitive(gen_petersen()));
  EXPECT_TRUE(is_arc_transitive(gen_knn_minus_matching(6)));
  // GP(8,1) is vertex-transitive but not arc-transitive.
  const auto prism = gen_gp(8, 1).graph;
  EXPECT_TRUE(is_vertex_transitive(prism));
  EXPECT_FALSE(is_arc_transitive(prism));
  EXPECT_TRUE(is_edge_transitive(gen_complete_multipartite(2, 3)));
}

TEST(StabilizerOrbitProfile, RankThreeExamples) {
  EXPECT_EQ(stabilizer_orbit_profile(gen_hamming(2, 4), 0), (std::vector<std::size_t>{1, 6, 9}));
  EXPECT_EQ(stabilizer_orbit_profile(gen_clebsch(), 0), (std::vector<std::size_t>{1, 5, 10}));
  EXPECT_EQ(stabilizer_orbit_profile(gen_petersen(), 0), (std::vector<std::size_t>{1, 3, 6}));
}

// |Aut| = |orbit of v| * |stabilizer of v|.
TEST(AutomorphismGroupProperty, OrbitStabilizer) {
  for (const auto& spec : corpus::family_instances()) {
    const auto g = generate(spec).graph;
    const auto aut = automorphism_group(g);
    const std::uint32_t pt[] = {0};
    StabilizerChain chain(g.order(), aut.generators(), pt);
    EXPECT_EQ(aut.order(), BigInt(chain.basic_orbit(0).size()) * point_stabilizer(aut, 0).order()) << spec.to_string();
  }
}
