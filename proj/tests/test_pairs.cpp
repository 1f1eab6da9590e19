#include <catch_amalgamated.hpp>

#include "burnside/catalog.hpp"
#include "burnside/pairs.hpp"
#include "oracles.hpp"

using namespace burnside;

TEST_CASE("pair class counts", "[pairs]") {
  CHECK(PairTable::get(named_group("C2"), named_group("C1"))->size() == 2);
  CHECK(PairTable::get(named_group("C2"), named_group("C2"))->size() == 3);
  CHECK(PairTable::get(named_group("S3"), named_group("C1"))->size() == 4);
}

TEST_CASE("pair classes match brute-force orbit counts", "[pairs][oracle]") {
  std::vector<std::string> groups  = {"C1", "C2", "C3", "C4", "C2xC2", "S3", "C6", "D8", "Q8"};
  std::vector<std::string> targets = {"C1", "C2", "C3", "S3"};
  for (auto const& g : groups) {
    for (auto const& k : targets) {
      auto const G = named_group(g);
      auto const K = named_group(k);
      INFO(g << "," << k);
      auto const table = PairTable::get(G, K);
      CHECK(static_cast<int>(table->size()) == oracle::pair_class_count(*G, *K));
      int pairs = 0;
      for (auto const& H : oracle::subgroups(*G)) {
        pairs += static_cast<int>(oracle::homomorphisms(*G, H, *K).size());
      }
      CHECK(static_cast<int>(table->pair_count()) == pairs);
    }
  }
}

TEST_CASE("classification is conjugation invariant", "[pairs][property]") {
  auto const G     = named_group("S3");
  auto const K     = named_group("S3");
  auto const table = PairTable::get(G, K);
  for (auto const& c : table->classes()) {
    REQUIRE(table->classify(c.canonical) == c.class_id);
    auto const& H = c.canonical.source();
    for (int g = 0; g < G->order(); ++g) {
      for (int k = 0; k < K->order(); ++k) {
        std::vector<std::pair<int, int>> graph;
        for (int h : H.elements()) {
          graph.emplace_back(G->conj(g, h), K->conj(k, c.canonical(h)));
        }
        CHECK(table->classify(graph) == c.class_id);
      }
    }
  }
}

TEST_CASE("classes are ordered by subgroup size", "[pairs]") {
  auto const table = PairTable::get(named_group("A4"), named_group("C3"));
  for (std::size_t c = 1; c < table->size(); ++c) {
    CHECK((*table)[c - 1].canonical.source().size() <= (*table)[c].canonical.source().size());
  }
  CHECK((*table)[0].canonical.source().size() == 1);
}

TEST_CASE("pairs_conjugate agrees with the table", "[pairs]") {
  auto const G     = named_group("D8");
  auto const K     = named_group("C2");
  auto const table = PairTable::get(G, K);
  for (auto const& a : table->classes()) {
    for (auto const& b : table->classes()) {
      CHECK(pairs_conjugate(a.canonical, b.canonical) == (a.class_id == b.class_id));
    }
  }
}

TEST_CASE("graph subgroups", "[pairs]") {
  auto const G   = named_group("S3");
  auto const K   = named_group("C2");
  auto const KxG = direct_product(*K, *G);
  for (auto const& c : PairTable::get(G, K)->classes()) {
    auto const D = graph_subgroup(c.canonical, KxG);
    CHECK(D.size() == c.canonical.source().size());
    CHECK(closure(*KxG, D.elements()) == D.elements());
  }
  CHECK_THROWS_AS(graph_subgroup((*PairTable::get(G, K))[0].canonical, G), Error);
}

TEST_CASE("subconjugacy poset over a Sylow subgroup", "[pairs][property]") {
  std::vector<std::pair<std::string, int>> cases = {{"S3", 2}, {"S3", 3}, {"A4", 2},
                                                    {"A4", 3}, {"D8", 2}, {"C6", 2}};
  for (auto const& [g, p] : cases) {
    for (auto const& k : {"C1", "C2"}) {
      auto const G = named_group(g);
      auto const K = named_group(k);
      INFO(g << " p=" << p << " K=" << k);
      auto const poset = gk_classes_of_spairs(G, sylow_subgroup(G, p), K);
      CHECK(poset.is_preorder_closed());
      auto const& top = (*poset.table)[poset.representative(0)].canonical.source();
      CHECK(top.size() == poset.sylow.group->order());
      for (std::size_t i = 0; i < poset.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          // a node listed later is never strictly above an earlier one
          CHECK_FALSE((poset.below[j][i] && !poset.below[i][j]));
        }
        for (std::size_t j = 0; j < poset.size(); ++j) {
          if (i != j) {
            CHECK_FALSE((poset.below[i][j] && poset.below[j][i]));
          }
        }
      }
    }
  }
}

TEST_CASE("subconjugacy against conjugators from another group", "[pairs]") {
  auto const G = named_group("S3");
  auto const H = named_group("C3");
  auto const K = named_group("C1");
  auto const a = (*PairTable::get(G, K))[0].canonical;
  CHECK_THROWS_AS(is_subconjugate(a, a, H), Error);
  CHECK(is_subconjugate(a, a, G));
}
