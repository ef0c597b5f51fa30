#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wittknot/numeric.hpp"

namespace wittknot {

enum class ResidueGroup { Z2, Z2xZ2, Z4 };

// Element of W(F_p), encoded per the prime class:
//   p = 2           Z2       v1 = dimension mod 2 (every unit of F_2 is a square)
//   p = 1 (mod 4)   Z2 x Z2  v1 = #<residue> mod 2, v2 = #<non-residue> mod 2
//   p = 3 (mod 4)   Z4       v1 = signed count mod 4, <residue> = +1, <non-residue> = -1
class ResidueClass {
 public:
  explicit ResidueClass(BigInt prime);

  const BigInt& prime() const { return prime_; }
  ResidueGroup group() const { return group_; }
  bool is_zero() const { return v1_ == 0 && v2_ == 0; }
  int order() const;  // 1, 2 or 4
  int v1() const { return v1_; }
  int v2() const { return v2_; }

  // fold in the class of <beta> where beta is a unit mod p
  void accumulate(const BigInt& beta);
  // fold in p = 2's generator (dimension count)
  void accumulate_dimension();

  ResidueClass operator+(const ResidueClass& o) const;
  ResidueClass operator-() const;
  bool operator==(const ResidueClass&) const = default;

  std::string group_name() const;

 private:
  BigInt prime_;
  ResidueGroup group_;
  int v1_ = 0, v2_ = 0;
};

// signature plus every nonzero residue: the complete invariant of W(Q)
struct LocalProfile {
  long signature = 0;
  std::map<BigInt, ResidueClass> residues;  // nonzero entries only
  bool operator==(const LocalProfile&) const = default;
};

enum class WittOrder : int { one = 1, two = 2, four = 4, infinite = 0 };
std::string to_string(WittOrder o);

// Element of W(Q) held as the canonical multiset of square-free nonzero
// integer generators: no {a, -a} pair survives, ordering by (|a|, sign).
// The representative is not a complete invariant (relation R3 rewrites it);
// equality always goes through the local profile.
class WittClassQ {
 public:
  WittClassQ() = default;  // zero class

  static WittClassQ from_diagonal(std::span<const Rational> entries);
  static WittClassQ from_diagonal(std::span<const BigInt> entries);
  static WittClassQ from_generators(std::vector<BigInt> raw);

  const std::vector<BigInt>& generators() const { return gens_; }
  bool is_zero_representative() const { return gens_.empty(); }

  WittClassQ add(const WittClassQ& o) const;
  WittClassQ negated() const;

  long signature() const;
  ResidueClass residue_at(const BigInt& p) const;  // throws NotPrime
  std::vector<BigInt> support() const;             // primes dividing a generator
  LocalProfile local_profile() const;
  bool equals(const WittClassQ& o) const;
  WittOrder order() const;

 private:
  std::vector<BigInt> gens_;
  void canonicalize();
};

}  // namespace wittknot
