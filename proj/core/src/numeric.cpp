#include "wittknot/numeric.hpp"

#include <array>

namespace wittknot {

namespace {

constexpr std::array<unsigned long, 12> kMrWitnesses = {2,  3,  5,  7,  11, 13,
                                                        17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d,
                          unsigned long r) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness found
}

// Pollard rho, Brent's cycle variant. n odd composite, not a prime power of 2.
BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1, q = 1;
    BigInt ys = y;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInt& v) { v = (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          q = (q * abs_int(x - y)) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      do {
        step(ys);
        mpz_gcd(d.get_mpz_t(), BigInt(abs_int(x - ys)).get_mpz_t(),
                n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
    // cycle collapsed onto n itself; retry with the next polynomial
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kMrWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned long r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (unsigned long a : kMrWitnesses) {
    if (miller_rabin_witness(n, BigInt(a), d, r)) return false;
  }
  return true;
}

BigInt PrimeFactorization::reconstruct() const {
  BigInt r = unit_sign;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

BigInt PrimeFactorization::squarefree_kernel() const {
  BigInt r = unit_sign;
  for (const auto& [p, e] : factors) {
    if (e % 2 == 1) r *= p;
  }
  return r;
}

PrimeFactorization factor(const BigInt& n) {
  if (n == 0) throw ZeroInput("factor: zero input");
  PrimeFactorization f;
  f.unit_sign = sgn(n);
  BigInt m = abs_int(n);
  for (BigInt p = 2; p <= 1000000 && p * p <= m; p == 2 ? p = 3 : p += 2) {
    while (m % p == 0) {
      ++f.factors[p];
      m /= p;
    }
  }
  factor_into(m, f.factors);
  return f;
}

BigInt squarefree_part(const BigInt& n) {
  if (n == 0) throw ZeroInput("squarefree_part: zero input");
  return factor(n).squarefree_kernel();
}

BigInt squarefree_part(const Rational& q) {
  if (q == 0) throw ZeroInput("squarefree_part: zero input");
  // num/den and num*den differ by den^2
  return squarefree_part(BigInt(q.get_num() * q.get_den()));
}

PadicSplit padic_split(const Rational& q, const BigInt& p) {
  if (q == 0) throw ZeroInput("padic_split: zero input");
  if (!is_prime(p)) throw NotPrime("padic_split: modulus is not prime");
  PadicSplit s;
  BigInt num = q.get_num(), den = q.get_den();
  while (num % p == 0) {
    num /= p;
    ++s.valuation;
  }
  while (den % p == 0) {
    den /= p;
    --s.valuation;
  }
  s.unit = Rational(num, den);
  s.unit.canonicalize();
  return s;
}

bool is_quadratic_residue(const BigInt& u, const BigInt& p) {
  if (p == 2 || !is_prime(p)) {
    throw NotPrime("is_quadratic_residue: p must be an odd prime");
  }
  BigInt r = u % p;
  if (r < 0) r += p;
  if (r == 0) throw NotCoprime("is_quadratic_residue: u divisible by p");
  BigInt e = (p - 1) / 2, x;
  mpz_powm(x.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return x == 1;
}

bool is_perfect_square(const BigInt& n) {
  BigInt m = abs_int(n);
  return mpz_perfect_square_p(m.get_mpz_t()) != 0;
}

}  // namespace wittknot
