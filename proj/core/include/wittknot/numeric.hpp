#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "wittknot/errors.hpp"

namespace wittknot {

// Exact arithmetic lives on GMP; everything downstream assumes these two
// types never overflow and keep canonical form (gcd(num, den) = 1, den > 0).
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

inline BigInt abs_int(const BigInt& x) {
  BigInt r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Deterministic primality: trial division by small primes, then Miller-Rabin
// with the witness set that is exact below 3.3e24 (far beyond desk scale).
bool is_prime(const BigInt& n);

struct PrimeFactorization {
  std::map<BigInt, unsigned> factors;  // prime -> exponent
  int unit_sign = 1;                   // +1 or -1

  BigInt reconstruct() const;
  // product of primes with odd exponent, signed
  BigInt squarefree_kernel() const;
};

// Trial division up to 1e6, then Pollard rho (Brent) with Miller-Rabin
// certification of every factor. Deterministic. Throws ZeroInput.
PrimeFactorization factor(const BigInt& n);

// The unique square-free integer d with q = d * b^2 for rational b != 0;
// sign(d) = sign(q). Throws ZeroInput.
BigInt squarefree_part(const Rational& q);
BigInt squarefree_part(const BigInt& n);

struct PadicSplit {
  long valuation = 0;
  Rational unit;  // numerator and denominator coprime to p
};

// q = p^valuation * unit. Throws NotPrime, ZeroInput.
PadicSplit padic_split(const Rational& q, const BigInt& p);

// Euler criterion u^((p-1)/2) = 1 (mod p). Throws NotCoprime, NotPrime
// (p must be an odd prime).
bool is_quadratic_residue(const BigInt& u, const BigInt& p);

// true iff |n| = m^2 for some integer m
bool is_perfect_square(const BigInt& n);

}  // namespace wittknot
