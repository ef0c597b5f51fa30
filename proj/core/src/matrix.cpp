#include "wittknot/matrix.hpp"

namespace wittknot {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

BigInt det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_bareiss(const RatMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix m(n, n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = a(i, j) * Rational(d);
      m(i, j) = s.get_num();  // integral by construction
    }
    scale *= d;
  }
  Rational r(det_bareiss(std::move(m)), scale);
  r.canonicalize();
  return r;
}

}  // namespace wittknot
