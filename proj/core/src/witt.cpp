#include "wittknot/witt.hpp"

#include <algorithm>
#include <set>

namespace wittknot {

ResidueClass::ResidueClass(BigInt prime) : prime_(std::move(prime)) {
  if (prime_ == 2) {
    group_ = ResidueGroup::Z2;
  } else if (prime_ % 4 == 1) {
    group_ = ResidueGroup::Z2xZ2;
  } else {
    group_ = ResidueGroup::Z4;
  }
}

int ResidueClass::order() const {
  if (is_zero()) return 1;
  if (group_ == ResidueGroup::Z4 && v1_ % 2 == 1) return 4;
  return 2;
}

void ResidueClass::accumulate(const BigInt& beta) {
  switch (group_) {
    case ResidueGroup::Z2:
      v1_ ^= 1;
      break;
    case ResidueGroup::Z2xZ2:
      if (is_quadratic_residue(beta, prime_)) {
        v1_ ^= 1;
      } else {
        v2_ ^= 1;
      }
      break;
    case ResidueGroup::Z4:
      v1_ = (v1_ + (is_quadratic_residue(beta, prime_) ? 1 : 3)) % 4;
      break;
  }
}

void ResidueClass::accumulate_dimension() { v1_ ^= 1; }

ResidueClass ResidueClass::operator+(const ResidueClass& o) const {
  ResidueClass r(prime_);
  switch (group_) {
    case ResidueGroup::Z2:
      r.v1_ = v1_ ^ o.v1_;
      break;
    case ResidueGroup::Z2xZ2:
      r.v1_ = v1_ ^ o.v1_;
      r.v2_ = v2_ ^ o.v2_;
      break;
    case ResidueGroup::Z4:
      r.v1_ = (v1_ + o.v1_) % 4;
      break;
  }
  return r;
}

ResidueClass ResidueClass::operator-() const {
  ResidueClass r(prime_);
  // Z2 and Z2xZ2 are 2-torsion; Z4 negates
  r.v1_ = group_ == ResidueGroup::Z4 ? (4 - v1_) % 4 : v1_;
  r.v2_ = v2_;
  return r;
}

std::string ResidueClass::group_name() const {
  switch (group_) {
    case ResidueGroup::Z2:
      return "Z2";
    case ResidueGroup::Z2xZ2:
      return "Z2xZ2";
    case ResidueGroup::Z4:
      return "Z4";
  }
  return {};
}

std::string to_string(WittOrder o) {
  switch (o) {
    case WittOrder::one:
      return "1";
    case WittOrder::two:
      return "2";
    case WittOrder::four:
      return "4";
    case WittOrder::infinite:
      return "infinite";
  }
  return {};
}

void WittClassQ::canonicalize() {
  for (BigInt& g : gens_) g = squarefree_part(g);
  std::sort(gens_.begin(), gens_.end(), [](const BigInt& a, const BigInt& b) {
    BigInt aa = abs_int(a), ab = abs_int(b);
    if (aa != ab) return aa < ab;
    return a > b;  // positive before negative at equal magnitude
  });
  // cancel <a> (+) <-a> pairs; equal magnitudes are adjacent after sorting
  std::vector<BigInt> out;
  out.reserve(gens_.size());
  for (BigInt& g : gens_) {
    if (!out.empty() && out.back() == -g) {
      out.pop_back();
    } else {
      out.push_back(std::move(g));
    }
  }
  gens_ = std::move(out);
}

WittClassQ WittClassQ::from_diagonal(std::span<const Rational> entries) {
  WittClassQ w;
  w.gens_.reserve(entries.size());
  for (const Rational& e : entries) {
    if (e != 0) w.gens_.push_back(squarefree_part(e));
  }
  w.canonicalize();
  return w;
}

WittClassQ WittClassQ::from_diagonal(std::span<const BigInt> entries) {
  WittClassQ w;
  w.gens_.reserve(entries.size());
  for (const BigInt& e : entries) {
    if (e != 0) w.gens_.push_back(e);
  }
  w.canonicalize();
  return w;
}

WittClassQ WittClassQ::from_generators(std::vector<BigInt> raw) {
  WittClassQ w;
  for (BigInt& g : raw) {
    if (g != 0) w.gens_.push_back(std::move(g));
  }
  w.canonicalize();
  return w;
}

WittClassQ WittClassQ::add(const WittClassQ& o) const {
  WittClassQ w;
  w.gens_ = gens_;
  w.gens_.insert(w.gens_.end(), o.gens_.begin(), o.gens_.end());
  w.canonicalize();
  return w;
}

WittClassQ WittClassQ::negated() const {
  WittClassQ w;
  w.gens_.reserve(gens_.size());
  for (const BigInt& g : gens_) w.gens_.push_back(-g);
  w.canonicalize();
  return w;
}

long WittClassQ::signature() const {
  long s = 0;
  for (const BigInt& g : gens_) s += sgn(g);
  return s;
}

ResidueClass WittClassQ::residue_at(const BigInt& p) const {
  if (!is_prime(p)) throw NotPrime("residue_at: p is not prime");
  ResidueClass r(p);
  for (const BigInt& g : gens_) {
    if (g % p != 0) continue;  // square-free: valuation is 0 or 1
    if (p == 2) {
      r.accumulate_dimension();
    } else {
      r.accumulate(g / p);
    }
  }
  return r;
}

std::vector<BigInt> WittClassQ::support() const {
  std::set<BigInt> primes;
  for (const BigInt& g : gens_) {
    for (const auto& [p, e] : factor(g).factors) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

LocalProfile WittClassQ::local_profile() const {
  LocalProfile lp;
  lp.signature = signature();
  for (const BigInt& p : support()) {
    ResidueClass r = residue_at(p);
    if (!r.is_zero()) lp.residues.emplace(p, std::move(r));
  }
  return lp;
}

bool WittClassQ::equals(const WittClassQ& o) const {
  // sigma (+) del is a complete invariant and del_p vanishes off the
  // generators' prime support, so comparing the nonzero residues suffices
  return local_profile() == o.local_profile();
}

WittOrder WittClassQ::order() const {
  LocalProfile lp = local_profile();
  if (lp.signature != 0) return WittOrder::infinite;
  int o = 1;
  for (const auto& [p, r] : lp.residues) o = std::max(o, r.order());
  return static_cast<WittOrder>(o);
}

}  // namespace wittknot
