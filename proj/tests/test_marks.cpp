#include <catch_amalgamated.hpp>

#include "burnside/algebra.hpp"
#include "burnside/catalog.hpp"
#include "burnside/marks.hpp"
#include "burnside/plocal.hpp"
#include "oracles.hpp"

using namespace burnside;

namespace {
  BurnsideElement trivial_pair(Subgroup const& H, GroupPtr const& K) {
    return BurnsideElement::of_pair(trivial_homomorphism(H, K));
  }

  std::vector<std::vector<Rational>> to_rational(IntegerMatrix const& m) {
    std::vector<std::vector<Rational>> out;
    for (auto const& row : m) {
      out.emplace_back(row.begin(), row.end());
    }
    return out;
  }
}  // namespace

TEST_CASE("mark fixtures", "[marks]") {
  auto const C2 = named_group("C2");
  auto const C1 = named_group("C1");
  auto const T  = PairTable::get(C2, C1);
  auto const free_orbit = BurnsideElement::basis(T, 0);
  CHECK(mark(1, free_orbit) == 0);
  CHECK(mark(0, free_orbit, MarkVariant::raw) == 2);
  CHECK(mark(0, free_orbit, MarkVariant::with_w) == 1);

  auto const C6  = named_group("C6");
  auto const T6  = PairTable::get(C6, C1);
  auto const row = marks_matrix(T6, {1}, MarkVariant::raw);
  CHECK(row == IntegerMatrix{{0, 3, 0, 1}});
}

TEST_CASE("marks agree with fixed-point counts", "[marks][oracle]") {
  std::vector<std::pair<std::string, std::string>> cases = {
      {"S3", "C1"}, {"C2", "C2"}, {"C6", "C1"}, {"C4", "C2"}, {"S3", "C3"}, {"D8", "C2"}};
  for (auto const& [g, k] : cases) {
    auto const T = PairTable::get(named_group(g), named_group(k));
    for (auto variant : {MarkVariant::raw, MarkVariant::with_w}) {
      INFO(g << "," << k << " " << to_string(variant));
      for (std::size_t r = 0; r < T->size(); ++r) {
        for (std::size_t c = 0; c < T->size(); ++c) {
          auto const X = BurnsideElement::basis(T, static_cast<int>(c));
          CHECK(mark(static_cast<int>(r), X, variant) == mark_oracle((*T)[r].canonical, X, variant));
        }
      }
    }
  }
}

TEST_CASE("trivial-pair mark counts points", "[marks]") {
  auto const G = named_group("S3");
  auto const K = named_group("C2");
  auto const T = PairTable::get(G, K);
  for (std::size_t c = 0; c < T->size(); ++c) {
    auto const X = BurnsideElement::basis(T, static_cast<int>(c));
    CHECK(mark(0, X) == K->order() * orbit_augmentation(X));
  }
}

TEST_CASE("marks are class functions", "[marks][property]") {
  auto const G   = named_group("S3");
  auto const K   = named_group("C3");
  auto const T   = PairTable::get(G, K);
  for (auto const& c : T->classes()) {
    auto const& H = c.canonical.source();
    for (int g = 0; g < G->order(); ++g) {
      for (int k = 0; k < K->order(); ++k) {
        auto const       Hg = conjugate(H, g);
        std::vector<int> images;
        for (int h : Hg.elements()) {
          images.push_back(K->conj(k, c.canonical(G->conj(G->inv(g), h))));
        }
        Homomorphism const moved(Hg, K, images);
        for (std::size_t x = 0; x < T->size(); ++x) {
          auto const X = BurnsideElement::basis(T, static_cast<int>(x));
          CHECK(mark_oracle(moved, X) == mark(c.class_id, X));
        }
      }
    }
  }
}

TEST_CASE("marks vanish off subconjugacy", "[marks][property]") {
  for (auto const& [g, k] : std::vector<std::pair<std::string, std::string>>{
           {"S3", "C2"}, {"A4", "C3"}, {"D8", "C2"}}) {
    auto const G   = named_group(g);
    auto const K   = named_group(k);
    auto const T   = PairTable::get(G, K);
    auto const KxG = product_group(K, G);
    for (auto variant : {MarkVariant::raw, MarkVariant::with_w}) {
      auto const M = MarksTable::get(T, variant);
      for (std::size_t r = 0; r < T->size(); ++r) {
        for (std::size_t c = 0; c < T->size(); ++c) {
          auto const D  = graph_subgroup((*T)[r].canonical, KxG);
          auto const Dp = graph_subgroup((*T)[c].canonical, KxG);
          if (oracle::transporter_size(*KxG, D.elements(), Dp.elements()) == 0) {
            CHECK((*M)(static_cast<int>(r), static_cast<int>(c)) == 0);
          } else {
            CHECK((*M)(static_cast<int>(r), static_cast<int>(c)) > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("p-marks are injective on p-isotropy", "[marks][property]") {
  auto const S3 = named_group("S3");
  auto const C1 = named_group("C1");
  auto const T  = PairTable::get(S3, C1);
  std::vector<int> p_rows;
  for (auto const& c : p_isotropy_basis(S3, C1, 2)) {
    p_rows.push_back(c.class_id);
  }
  auto const m = marks_matrix(T, p_rows, MarkVariant::raw);
  IntegerMatrix square;
  for (auto const& row : m) {
    std::vector<Integer> r;
    for (int c : p_rows) {
      r.push_back(row[c]);
    }
    square.push_back(r);
  }
  CHECK(square == IntegerMatrix{{6, 3}, {0, 1}});

  for (auto const& name : {"C2", "C6", "S3", "D8", "Q8", "A4"}) {
    for (auto const& k : {"C1", "C2", "C3"}) {
      auto const G = named_group(name);
      auto const K = named_group(k);
      auto const TK = PairTable::get(G, K);
      for (int p : prime_divisors(G->order())) {
        for (auto variant : {MarkVariant::raw, MarkVariant::with_w}) {
          std::vector<int> rows;
          for (auto const& c : p_isotropy_basis(G, K, p)) {
            rows.push_back(c.class_id);
          }
          auto const full = marks_matrix(TK, rows, variant);
          IntegerMatrix sq;
          for (auto const& row : full) {
            std::vector<Integer> r;
            for (int c : rows) {
              r.push_back(row[c]);
            }
            sq.push_back(r);
          }
          INFO(name << "," << k << " p=" << p << " " << to_string(variant));
          CHECK(rank(sq) == rows.size());
        }
      }
    }
  }

  auto const zero = chi_p(BurnsideElement(T), 2);
  for (auto const& v : zero.values) {
    CHECK(v == 0);
  }
}

TEST_CASE("kernel of alpha", "[marks]") {
  auto const C1 = named_group("C1");
  auto const k6 = kernel_of_alpha(named_group("C6"), C1);
  CHECK(k6.rank == 1);
  CHECK(k6.raw_kernel == IntegerMatrix{{1, -2, -3, 6}});
  CHECK(oracle::nullity(to_rational(k6.raw_matrix), 4) == 1);
  CHECK(is_in_kernel(k6.kernel_basis.front()));

  auto const k3 = kernel_of_alpha(named_group("S3"), C1);
  CHECK(k3.rank == 1);
  CHECK(k3.raw_kernel == IntegerMatrix{{1, -2, -1, 2}});

  for (auto const& name : {"C2", "C4", "C2xC2", "D8", "Q8"}) {
    for (auto const& k : {"C1", "C2"}) {
      auto const r = kernel_of_alpha(named_group(name), named_group(k));
      CHECK(r.rank == 0);
      CHECK(r.with_w_kernel.empty());
    }
  }

  auto const T = PairTable::get(named_group("C6"), C1);
  CHECK(is_in_kernel(BurnsideElement(T)));
  for (std::size_t c = 0; c < T->size(); ++c) {
    CHECK_FALSE(is_in_kernel(BurnsideElement::basis(T, static_cast<int>(c))));
  }
}

TEST_CASE("kernel elements project to zero at every prime", "[marks][property]") {
  for (auto const& name : {"C6", "S3", "A4"}) {
    for (auto const& k : {"C1", "C2"}) {
      auto const G = named_group(name);
      auto const r = kernel_of_alpha(G, named_group(k));
      INFO(name << "," << k);
      for (auto const& x : r.kernel_basis) {
        CHECK(is_in_kernel(x));
        for (int q : prime_divisors(G->order())) {
          CHECK(pi_p(x, q).is_zero());
        }
      }
    }
  }
}

TEST_CASE("projection preserves raw p-marks", "[marks][property]") {
  for (auto const& name : {"C6", "S3", "A4"}) {
    auto const G = named_group(name);
    auto const K = named_group("C2");
    auto const T = PairTable::get(G, K);
    for (int p : prime_divisors(G->order())) {
      for (std::size_t c = 0; c < T->size(); ++c) {
        auto const X  = BurnsideElement::basis(T, static_cast<int>(c));
        auto const Xp = pi_p(X, p);
        CHECK(chi_p(Xp, p).values == chi_p(X, p).values);
      }
    }
  }
}

TEST_CASE("Benson-Feshbach scaling of raw marks", "[marks][property]") {
  for (auto const& name : {"S3", "C6", "D8"}) {
    auto const G   = named_group(name);
    auto const K   = named_group("C2");
    auto const T   = PairTable::get(G, K);
    auto const& subs = subgroups(G);
    for (auto const& F : subs) {
      auto const iota = BurnsideElement::of_pair(inclusion(F));
      for (auto const& row : T->classes()) {
        auto const& H     = row.canonical.source();
        Rational    scale = Rational(oracle::transporter_size(*G, H.elements(), F.elements()), F.size());
        for (std::size_t c = 0; c < T->size(); ++c) {
          auto const X = BurnsideElement::basis(T, static_cast<int>(c));
          CHECK(mark(row.class_id, compose(X, iota)) == scale * mark(row.class_id, X));
        }
      }
    }
  }
}
