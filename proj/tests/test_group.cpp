#include <catch_amalgamated.hpp>

#include "burnside/catalog.hpp"
#include "burnside/group.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {
  std::vector<std::string> small_corpus() {
    return {"C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D8", "Q8", "A4"};
  }
}  // namespace

TEST_CASE("named groups have the expected orders", "[catalog]") {
  CHECK(named_group("C1")->order() == 1);
  CHECK(named_group("C(6)")->order() == 6);
  CHECK(named_group("S3")->order() == 6);
  CHECK(named_group("S(4)")->order() == 24);
  CHECK(named_group("D8")->order() == 8);
  CHECK(named_group("D(10)")->order() == 10);
  CHECK(named_group("A4")->order() == 12);
  CHECK(named_group("Q8")->order() == 8);
  CHECK(named_group("C2xC2")->order() == 4);
  CHECK(named_group("V4")->order() == 4);
  CHECK(named_group("C2xS3")->order() == 12);
  CHECK_FALSE(named_group("S3")->is_abelian());
  CHECK(named_group("C6")->is_abelian());
  CHECK_THROWS_AS(named_group("X7"), Error);
}

TEST_CASE("group input documents", "[catalog]") {
  auto t = parse_group_spec(R"({"table": [[0,1],[1,0]]})");
  CHECK(t->order() == 2);
  auto p = parse_group_spec(R"({"perm": {"degree": 3, "generators": [[1,0,2],[1,2,0]]}})");
  CHECK(p->order() == 6);
  CHECK(*p == *named_group("S3"));
  auto prod = parse_group_spec(R"({"product": ["C2", {"named": "C3"}]})");
  CHECK(prod->order() == 6);
  CHECK(prod->is_abelian());
}

TEST_CASE("invalid tables are rejected", "[group]") {
  auto kind_of = [](auto f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  CHECK(kind_of([] { make_group_from_table({{0, 1}, {0, 1}}); }) == ErrorKind::not_a_group);
  CHECK(kind_of([] { make_group_from_table({{0, 1}, {1}}); }) == ErrorKind::not_a_group);
  // a Latin square with identity 0 that is not associative
  CHECK(kind_of([] {
          make_group_from_table({{0, 1, 2, 3, 4},
                                 {1, 0, 3, 4, 2},
                                 {2, 4, 0, 1, 3},
                                 {3, 2, 4, 0, 1},
                                 {4, 3, 1, 2, 0}});
        })
        == ErrorKind::not_a_group);
  CHECK(kind_of([] { make_group_from_permutations(3, {{0, 0, 1}}); })
        == ErrorKind::invalid_permutation);
  CHECK(kind_of([] { make_group_from_permutations(3, {{0, 1}}); })
        == ErrorKind::invalid_permutation);
  CHECK(kind_of([] { named_group("S5"); }) == ErrorKind::order_cap_exceeded);
}

TEST_CASE("group axioms hold for the corpus", "[group][property]") {
  for (auto const& name : small_corpus()) {
    auto const G = named_group(name);
    INFO(name);
    int const n = G->order();
    for (int a = 0; a < n; ++a) {
      CHECK(G->mul(a, G->identity()) == a);
      CHECK(G->mul(a, G->inv(a)) == G->identity());
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          REQUIRE(G->mul(G->mul(a, b), c) == G->mul(a, G->mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("subgroup enumeration matches brute force", "[group][oracle]") {
  for (auto const& name : small_corpus()) {
    auto const G = named_group(name);
    INFO(name);
    auto const expected = oracle::subgroups(*G);
    auto const& got     = subgroups(G);
    std::set<std::vector<int>> a(expected.begin(), expected.end()), b;
    for (auto const& H : got) {
      b.insert(H.elements());
    }
    CHECK(got.size() == expected.size());
    CHECK(a == b);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(static_cast<int>(subgroup_classes(G).size())
          == oracle::conjugacy_classes_of_subgroups(*G));
  }
}

TEST_CASE("known subgroup counts", "[group]") {
  CHECK(subgroups(named_group("S3")).size() == 6);
  CHECK(subgroup_classes(named_group("S3")).size() == 4);
  CHECK(subgroups(named_group("D8")).size() == 10);
  CHECK(subgroup_classes(named_group("D8")).size() == 8);
  CHECK(subgroups(named_group("A4")).size() == 10);
  CHECK(subgroup_classes(named_group("A4")).size() == 5);
  CHECK(subgroups(named_group("Q8")).size() == 6);
  CHECK(subgroups(named_group("S4")).size() == 30);
  CHECK(subgroup_classes(named_group("S4")).size() == 11);
}

TEST_CASE("normalizers, transporters and double cosets", "[group][oracle]") {
  for (auto const& name : small_corpus()) {
    auto const G = named_group(name);
    INFO(name);
    auto const& subs = subgroups(G);
    for (auto const& F : subs) {
      for (auto const& H : subs) {
        CHECK(static_cast<int>(transporter(G, F, H).size())
              == oracle::transporter_size(*G, F.elements(), H.elements()));
        int total = 0;
        for (auto const& dc : double_cosets(G, F, H)) {
          total += dc.size;
          // |F x H| = |F| |H| / |F ∩ H^x| with H^x = x H x^-1
          auto const Hx    = conjugate(H, dc.representative);
          int        inter = 0;
          for (int f : F.elements()) {
            inter += Hx.contains(f);
          }
          CHECK(dc.size == F.size() * H.size() / inter);
        }
        CHECK(total == G->order());
      }
      auto const N = normalizer(G, F);
      CHECK(static_cast<int>(N.size()) == oracle::transporter_size(*G, F.elements(), F.elements()));
    }
  }
}

TEST_CASE("Sylow subgroups", "[group]") {
  for (auto const& name : small_corpus()) {
    auto const G = named_group(name);
    for (int p : prime_divisors(G->order())) {
      auto const S = sylow_subgroup(G, p);
      CHECK(S.size() == p_part(G->order(), p));
      CHECK(is_p_group(S, p));
    }
  }
  CHECK(sylow_subgroup(named_group("S3"), 5).size() == 1);
  CHECK_THROWS_AS(sylow_subgroup(named_group("S3"), 4), Error);
}

TEST_CASE("homomorphism enumeration matches brute force", "[group][oracle]") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {"C4", "C2"}, {"S3", "C2"}, {"S3", "S3"}, {"C2xC2", "C2xC2"}, {"Q8", "C2"}, {"A4", "C3"},
      {"C6", "S3"}, {"D8", "C2"}};
  for (auto const& [g, k] : cases) {
    auto const G = named_group(g);
    auto const K = named_group(k);
    INFO(g << " -> " << k);
    for (auto const& H : subgroups(G)) {
      if (H.size() > 8) {
        continue;
      }
      auto const got      = homomorphisms(H, K);
      auto const expected = oracle::homomorphisms(*G, H.elements(), *K);
      std::set<std::vector<int>> a(expected.begin(), expected.end()), b;
      for (auto const& phi : got) {
        CHECK(phi.is_homomorphism());
        b.insert(phi.images());
      }
      CHECK(a == b);
    }
  }
}

TEST_CASE("direct products", "[group]") {
  auto const A   = named_group("C2");
  auto const B   = named_group("S3");
  auto const AxB = direct_product(*A, *B);
  CHECK(AxB->order() == 12);
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int b1 = 0; b1 < 6; ++b1) {
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b2 = 0; b2 < 6; ++b2) {
          CHECK(AxB->mul(product_index(*B, a1, b1), product_index(*B, a2, b2))
                == product_index(*B, A->mul(a1, a2), B->mul(b1, b2)));
        }
      }
    }
  }
}
