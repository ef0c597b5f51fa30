#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wittknot/pretzel.hpp"
#include "wittknot/witt.hpp"

using namespace wittknot;

namespace {

WittClassQ cls(std::initializer_list<long> gens) {
  std::vector<BigInt> v;
  for (long g : gens) v.emplace_back(g);
  return WittClassQ::from_generators(std::move(v));
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

WittClassQ random_class(std::mt19937& rng) {
  std::vector<BigInt> gens;
  std::size_t k = rng() % 6;
  for (std::size_t i = 0; i < k; ++i) {
    long g = static_cast<long>(rng() % 400) - 200;
    if (g != 0) gens.emplace_back(g);
  }
  return WittClassQ::from_generators(std::move(gens));
}

}  // namespace

TEST_CASE("from_diagonal canonicalizes") {
  CHECK(cls({2, -2, 18}).generators() == big({2}));
  CHECK(cls({}).generators().empty());

  // the closed-form entries of P(5,-3,8)
  auto w = cls({-2, -6, -12, -20, 2, 6, 30, 2});
  CHECK(w.generators() == big({2, -3, -5, 30}));

  std::vector<Rational> with_zero{Rational(0), Rational(3, 2), Rational(0)};
  CHECK(WittClassQ::from_diagonal(with_zero).generators() == big({6}));
}

TEST_CASE("add and negate") {
  CHECK(cls({3}).add(cls({-3})).generators().empty());
  CHECK(cls({2, -5}).negated().generators() == big({-2, 5}));

  // section 5 example 1: the triple sum has order 4
  auto k1 = witt_closed_form(classify({21, 13, -17, -15, 12}));
  auto k2 = witt_closed_form(classify({-3, -3, -7, 5, 2}));
  auto k3 = witt_closed_form(classify({-3, -5, 7, 9, 6}));
  auto sum = k1.add(k2.add(k3));
  CHECK(sum.order() == WittOrder::four);
}

TEST_CASE("signature") {
  CHECK(cls({}).signature() == 0);
  CHECK(cls({-3, -5, 2, 30}).signature() == 0);
  CHECK(witt_closed_form(classify({-3, -3, -7, 5, 2})).signature() == 8);
}

TEST_CASE("residue_at the pinned examples") {
  // section 5 example 3: d_3 = <1> + <1>, i.e. 2 in Z4
  auto r = cls({6, 42, -35, -5}).residue_at(BigInt(3));
  CHECK(r.group() == ResidueGroup::Z4);
  CHECK(r.v1() == 2);

  // section 5 example 1: d_2549(K1) = <1>, i.e. (1,0) in Z2 x Z2
  auto k1 = witt_closed_form(classify({21, 13, -17, -15, 12}));
  r = k1.residue_at(BigInt(2549));
  CHECK(r.group() == ResidueGroup::Z2xZ2);
  CHECK(r.v1() == 1);
  CHECK(r.v2() == 0);

  CHECK(cls({}).residue_at(BigInt(7)).is_zero());
  CHECK_THROWS_AS(cls({2}).residue_at(BigInt(6)), NotPrime);
}

TEST_CASE("equals goes through the local profile") {
  // relation (R3) with a = b = 1: <1> + <1> = <2> + <2>
  CHECK(cls({1, 1}).equals(cls({2, 2})));
  CHECK_FALSE(cls({2, 3}).equals(cls({1, 6})));  // d_3 differs: +1 vs -1
  auto w = cls({-7, 15, 2});
  CHECK(w.equals(w));
}

TEST_CASE("equals is an equivalence relation stable under hyperbolic padding") {
  std::mt19937 rng(21);
  for (int it = 0; it < 60; ++it) {
    auto w1 = random_class(rng);
    auto w2 = random_class(rng);
    auto w3 = random_class(rng);
    CHECK(w1.equals(w1));
    CHECK(w1.equals(w2) == w2.equals(w1));
    if (w1.equals(w2) && w2.equals(w3)) CHECK(w1.equals(w3));

    long a = static_cast<long>(rng() % 50) + 1;
    CHECK(w1.equals(w1.add(cls({a, -a}))));
  }
}

TEST_CASE("order") {
  CHECK(cls({}).order() == WittOrder::one);
  CHECK(cls({1}).order() == WittOrder::infinite);
  CHECK(cls({-14, 6}).order() == WittOrder::four);  // P(-7,-7,5)
  CHECK(cls({5}).add(cls({-5})).order() == WittOrder::one);

  std::mt19937 rng(22);
  for (int it = 0; it < 50; ++it) {
    auto w = random_class(rng);
    CHECK(w.add(w.negated()).order() == WittOrder::one);
  }
}

TEST_CASE("local_profile") {
  auto lp = cls({}).local_profile();
  CHECK(lp.signature == 0);
  CHECK(lp.residues.empty());

  lp = cls({-3, -5, 2, 30}).local_profile();  // phi(P(5,-3,8)): zero class
  CHECK(lp.signature == 0);
  CHECK(lp.residues.empty());

  lp = cls({7}).local_profile();
  CHECK(lp.signature == 1);
  REQUIRE(lp.residues.size() == 1);
  CHECK(lp.residues.begin()->first == 7);
  CHECK(lp.residues.begin()->second.group() == ResidueGroup::Z4);
  CHECK(lp.residues.begin()->second.v1() == 1);
}

TEST_CASE("residue_at is additive") {
  std::mt19937 rng(23);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17};
  for (int it = 0; it < 80; ++it) {
    auto w1 = random_class(rng);
    auto w2 = random_class(rng);
    for (long p : primes) {
      auto sum = w1.residue_at(BigInt(p)) + w2.residue_at(BigInt(p));
      CHECK(w1.add(w2).residue_at(BigInt(p)) == sum);
    }
  }
}

TEST_CASE("four generators over a 3-mod-4 prime cancel") {
  for (long p : {3, 7, 11, 19}) {
    CHECK(cls({p, p, p, p}).residue_at(BigInt(p)).is_zero());
  }
}

TEST_CASE("W(F_p) encodings match exhaustive Witt equivalence") {
  // enumerate diagonal forms over F_p of dimension <= 4 with entries in the
  // two square classes; the encoded residue arithmetic must induce exactly
  // the equivalence that the metabolic-split oracle computes
  for (long p : {3, 5, 7, 11, 13}) {
    auto squares = oracle::squares_mod(p);
    long nonsquare = 0;
    for (long x = 1; x < p; ++x) {
      if (!squares.count(x)) {
        nonsquare = x;
        break;
      }
    }
    std::vector<std::pair<oracle::FpForm, ResidueClass>> forms;
    for (int dim = 0; dim <= 4; ++dim) {
      for (int mask = 0; mask < (1 << dim); ++mask) {
        oracle::FpForm f{p, {}};
        ResidueClass enc{BigInt(p)};
        for (int i = 0; i < dim; ++i) {
          bool is_square_entry = (mask >> i) & 1;
          f.entries.push_back(is_square_entry);
          enc.accumulate(BigInt(is_square_entry ? 1 : nonsquare));
        }
        forms.emplace_back(std::move(f), std::move(enc));
      }
    }
    for (const auto& [f1, e1] : forms) {
      for (const auto& [f2, e2] : forms) {
        CHECK(f1.witt_equal(f2) == (e1 == e2));
      }
    }
  }
}
