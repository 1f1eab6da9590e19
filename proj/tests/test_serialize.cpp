#include <catch_amalgamated.hpp>

#include "burnside/catalog.hpp"
#include "burnside/serialize.hpp"

using namespace burnside;

TEST_CASE("element round trip", "[serialize]") {
  auto const S3 = named_group("S3");
  auto const C2 = named_group("C2");
  auto const T  = PairTable::get(S3, C2);
  BurnsideElement X(T, {{0, 3}, {2, -1}, {static_cast<int>(T->size()) - 1, 7}});
  auto const doc = element_json(X);
  CHECK(doc.at("source") == "S3");
  CHECK(doc.at("target") == "C2");
  CHECK(doc.at("coeffs").size() == 3);
  CHECK(element_from_json(doc, S3, C2) == X);
}

TEST_CASE("elements given by explicit pairs", "[serialize]") {
  auto const C2  = named_group("C2");
  auto const doc = json::parse(R"({"coeffs": [{"H": [1, 0], "phi": [1, 0], "num": 2},
                                              {"H": [0], "phi": [0], "num": -3}]})");
  auto const X   = element_from_json(doc, C2, C2);
  CHECK(X.coeff(PairTable::get(C2, C2)->classify(inclusion(whole_group(C2)))) == 2);
  CHECK(X.coeff(0) == -3);

  auto bad = json::parse(R"({"coeffs": [{"H": [0, 1], "phi": [0, 0, 1], "num": 1}]})");
  CHECK_THROWS_AS(element_from_json(bad, C2, C2), Error);
  auto frac = json::parse(R"({"coeffs": [{"class_id": 0, "num": 1, "den": 2}]})");
  CHECK_THROWS_AS(element_from_json(frac, C2, C2), Error);
  auto local = json::parse(R"({"prime": 3, "coeffs": [{"class_id": 0, "num": 1, "den": 2}]})");
  CHECK(element_from_json(local, C2, C2).coeff(0) == Rational(1, 2));
}

TEST_CASE("idempotent report format", "[serialize]") {
  auto const doc = idempotent_json(one_p(named_group("S3"), 2), 8);
  CHECK(doc.at("p") == 2);
  CHECK(doc.at("matrix") == json::parse("[[1,0],[3,6]]"));
  auto const& a = doc.at("coeffs")[1];
  CHECK(a.at("num") == -1);
  CHECK(a.at("den") == 3);
  CHECK(a.at("digits_mod_p^8") == "...01010101");
  CHECK(a.at("residue_mod_p^8") == 85);
}

TEST_CASE("marks CSV", "[serialize]") {
  auto const csv = marks_csv(PairTable::get(named_group("C6"), named_group("C1")), MarkVariant::raw);
  CHECK(csv == "class,c0,c1,c2,c3\nc0,6,3,2,1\nc1,0,3,0,1\nc2,0,0,2,1\nc3,0,0,0,1\n");
}

TEST_CASE("kernel report format", "[serialize]") {
  auto const doc = kernel_json(kernel_of_alpha(named_group("C6"), named_group("C1")));
  CHECK(doc.at("rank") == 1);
  CHECK(doc.at("kernel_basis") == json::parse("[[1,-2,-3,6]]"));
  CHECK(doc.at("prime_power_classes") == json::parse("[0,1,2]"));
}
