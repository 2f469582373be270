#include <gtest/gtest.h>

#include <random>

#include "bicirc/automorphisms.hpp"
#include "bicirc/catalog.hpp"
#include "bicirc/families.hpp"
#include "bicirc/graph_ops.hpp"
#include "oracles.hpp"

using namespace bicirc;

namespace {

std::vector<std::string> names(const std::vector<CatalogEntry>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.spec.display_name());
  return out;
}

}  // namespace

TEST(BasicCatalog, Examples) {
  EXPECT_EQ(names(basic_catalog(10, 3)), (std::vector<std::string>{"Petersen"}));
  EXPECT_EQ(names(basic_catalog(14, 3)), (std::vector<std::string>{"G(14,3)", "B(PG(2,2))"}));
  EXPECT_EQ(names(basic_catalog(22, 6)), (std::vector<std::string>{"B'(H(11))"}));
}

// Every entry has the requested order and valency.
TEST(BasicCatalogProperty, EntriesMatchParameters) {
  for (std::size_t order = 3; order <= 42; ++order)
    for (std::size_t k = 2; k < order; ++k)
      for (const auto& e : basic_catalog(order, k)) {
        const auto g = generate(e.spec).graph;
        const auto p = basic_props(g);
        EXPECT_EQ(g.order(), order) << e.spec.to_string();
        EXPECT_EQ(p.valency, k) << e.spec.to_string();
        EXPECT_TRUE(p.connected) << e.spec.to_string();
      }
}

TEST(IdentifyBasic, FindsRelabelledCopies) {
  std::mt19937_64 rng(41);
  for (const char* text : {"Petersen", "K(6)", "KnnMinusMatching(6)", "Clebsch", "G2p(7,3)", "BPG(3,2)", "BH11prime",
                           "Hamming(2,4)", "Cay(13;[1,5,8,12])"}) {
    const auto g = generate(FamilySpec::parse(text)).graph;
    const auto h = relabel(g, oracle::random_permutation(g.order(), rng));
    const auto found = identify_basic(h);
    ASSERT_TRUE(found.has_value()) << text;
    EXPECT_TRUE(are_isomorphic(generate(found->spec).graph, g)) << text;
  }
  EXPECT_FALSE(identify_basic(gen_gp(8, 3).graph).has_value());
  EXPECT_FALSE(identify_basic(gen_gp(10, 3).graph).has_value());
}
