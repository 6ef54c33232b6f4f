#include <random>

#include "doctest.h"
#include "frobsat/groebner.hpp"
#include "oracles.hpp"

using namespace frobsat;

namespace {
std::vector<Polynomial> polys(const PolyRingPtr& R, std::initializer_list<const char*> src) {
  std::vector<Polynomial> out;
  for (auto s : src) out.push_back(parse_polynomial(s, R));
  return out;
}

/// Every S-pair reduces to zero and the basis is reduced.
void check_reduced_gb(const GroebnerBasis& G) {
  const auto& B = G.basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    CHECK(B[i].leading_coeff() == 1);
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B[i].terms()) CHECK_FALSE(B[j].leading_monomial().divides(t.mono));
      if (j > i) {
        Monomial l = lcm(B[i].leading_monomial(), B[j].leading_monomial());
        auto s = B[i].times_term(l / B[i].leading_monomial(), 1) - B[j].times_term(l / B[j].leading_monomial(), 1);
        CHECK(G.normal_form(s).is_zero());
      }
    }
  }
}
}  // namespace

TEST_CASE("normal_form examples") {
  auto R = PolyRing::make(5, {"x", "y"});
  auto G = buchberger(polys(R, {"x"}), MonomialOrder::grevlex());
  CHECK(G.normal_form(parse_polynomial("x^2", R)).is_zero());
  CHECK(G.normal_form(parse_polynomial("y", R)) == parse_polynomial("y", R));
  auto H = buchberger(polys(R, {"x^2-y^2"}), MonomialOrder::grevlex());
  CHECK(H.normal_form(parse_polynomial("x^2*y+y^3", R)) == parse_polynomial("2y^3", R));
  auto other = PolyRing::make(7, {"x", "y"});
  CHECK_THROWS_AS(H.normal_form(parse_polynomial("x", other)), Error);
}

TEST_CASE("buchberger examples") {
  auto R = PolyRing::make(5, {"x", "y", "z"});
  auto G1 = buchberger(polys(R, {"y", "x"}), MonomialOrder::grevlex());
  CHECK(G1.basis() == polys(R->with_order(MonomialOrder::grevlex()), {"y", "x"}));
  auto G2 = buchberger(polys(R, {"x^2", "x*y"}), MonomialOrder::grevlex());
  REQUIRE(G2.size() == 2);
  CHECK(G2.basis()[0] == parse_polynomial("x*y", R));
  CHECK(G2.basis()[1] == parse_polynomial("x^2", R));
  auto G3 = buchberger(polys(R, {"x-y", "y-z"}), MonomialOrder::lex());
  REQUIRE(G3.size() == 2);
  CHECK(G3.basis()[0] == parse_polynomial("y-z", R));
  CHECK(G3.basis()[1] == parse_polynomial("x-z", R));
  CHECK(buchberger({Polynomial(R)}, MonomialOrder::grevlex()).is_zero_ideal());
  CHECK(buchberger(polys(R, {"x", "x+1"}), MonomialOrder::grevlex()).is_unit());
}

TEST_CASE("gb_membership examples") {
  auto R2 = RingPresentation::polynomial_ring(2, {"x", "y"});
  CHECK(gb_membership(*R2, R2->parse("x^2*y"), {R2->parse("x")}));
  CHECK_FALSE(gb_membership(*R2, R2->parse("y"), {R2->parse("x")}));
  auto R3 = RingPresentation::polynomial_ring(3, {"x", "y"});
  std::vector<Polynomial> gens = {R3->parse("x^2"), R3->parse("y^2")};
  CHECK_FALSE(gb_membership(*R3, R3->parse("x*y"), gens));
  CHECK_FALSE(oracle::member_degreewise(R3->parse("x*y"), gens));
  // relations are adjoined
  auto H = RingPresentation::make(5, {{"x", 1}, {"y", 1}}, {"x^2"});
  CHECK(gb_membership(*H, H->parse("x^3+x^2*y"), {}));
}

TEST_CASE("reduced basis properties on random ideals") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 40; ++k) {
    std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[k % 3];
    auto R = PolyRing::make(p, {"x", "y", "z"});
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(oracle::random_form(R, 1 + rng() % 3, rng));
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::eliminate(1)}) {
      auto G = buchberger(gens, order);
      check_reduced_gb(G);
      for (const auto& g : gens) CHECK(G.contains(g));
      // idempotence
      CHECK(buchberger(G.basis(), G.ring()) == G);
      // uniqueness under a different generating set of the same ideal
      std::vector<Polynomial> alt = gens;
      if (alt.size() >= 2) alt.push_back(alt[0] * oracle::random_form(R, 1, rng) + alt[1]);
      std::reverse(alt.begin(), alt.end());
      CHECK(buchberger(alt, order) == G);
    }
  }
}

TEST_CASE("membership agrees with the degreewise oracle") {
  std::mt19937_64 rng(77);
  int agree = 0, total = 0;
  for (int k = 0; k < 100; ++k) {
    std::uint32_t p = std::array<std::uint32_t, 3>{2, 3, 5}[k % 3];
    std::size_t nv = 1 + k % 3;
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(nv);
    auto ring = RingPresentation::polynomial_ring(p, names);
    const auto& R = ring->poly_ring();
    std::vector<Polynomial> gens;
    std::size_t ng = 1 + rng() % 3;
    for (std::size_t g = 0; g < ng; ++g) gens.push_back(oracle::random_form(R, 1 + rng() % 4, rng));
    for (int t = 0; t < 3; ++t) {
      long d = static_cast<long>(rng() % 7);
      Polynomial f = oracle::random_form(R, d, rng);
      // bias half the cases towards members
      if (t == 0 && !gens[0].is_zero() && d >= *gens[0].degree())
        f = gens[0] * oracle::random_form(R, d - *gens[0].degree(), rng);
      bool gb = gb_membership(*ring, f, gens);
      bool gb_lex = buchberger(gens.empty() ? gens : gens, MonomialOrder::lex()).contains(f);
      bool ref = oracle::member_degreewise(f, gens);
      CHECK(gb == ref);
      CHECK(gb == gb_lex);
      agree += gb == ref;
      ++total;
    }
  }
  CHECK(agree == total);
}
