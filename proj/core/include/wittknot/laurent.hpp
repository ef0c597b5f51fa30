#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittknot/matrix.hpp"

namespace wittknot {

// Dense integer polynomial, coefficient of t^i at index i, no trailing zeros.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// exact division in Z[t]; the quotient must exist (Bareiss guarantees it)
Poly poly_divexact(const Poly& a, const Poly& b);

// Fraction-free Bareiss determinant over Z[t] with row pivoting.
Poly poly_det_bareiss(std::vector<std::vector<Poly>> m);

// Symmetric integer Laurent polynomial (the Alexander polynomial lives here).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  // dense coefficients c[0..d] read as sum c[k] t^(k + shift)
  LaurentPoly(const Poly& dense, long shift);

  const std::map<long, BigInt>& coefficients() const { return coeffs_; }
  BigInt at(long k) const;
  bool is_symmetric() const;  // coeff(k) == coeff(-k)
  long max_exponent() const;

  // value at integer t != 0 times t^(max denominator power): exact at t = +-1
  BigInt evaluate_at_one() const;
  BigInt evaluate_at_minus_one() const;

  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly&) const = default;

  std::string to_string() const;  // e.g. "t^3 - 2t^2 - t + 5 - t^-1 ..."

 private:
  std::map<long, BigInt> coeffs_;  // exponent -> nonzero coefficient
};

}  // namespace wittknot
