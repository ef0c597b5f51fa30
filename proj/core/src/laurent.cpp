#include "wittknot/laurent.hpp"

#include <cassert>

namespace wittknot {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  assert(!b.empty());
  if (a.empty()) return {};
  assert(a.size() >= b.size());
  Poly rem = a;
  Poly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& lead = rem[k + b.size() - 1];
    if (lead == 0) continue;
    BigInt c;
    // exact by the Bareiss division property
    mpz_divexact(c.get_mpz_t(), lead.get_mpz_t(), b.back().get_mpz_t());
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
  }
#ifndef NDEBUG
  for (const BigInt& x : rem) assert(x == 0);
#endif
  trim(q);
  return q;
}

Poly poly_det_bareiss(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {BigInt(1)};
  Poly prev{BigInt(1)};
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k].empty()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j]));
        m[i][j] = t.empty() ? Poly{} : poly_divexact(t, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (sign < 0) {
    for (BigInt& c : det) c = -c;
  }
  return det;
}

LaurentPoly::LaurentPoly(const Poly& dense, long shift) {
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) coeffs_[static_cast<long>(i) + shift] = dense[i];
  }
}

BigInt LaurentPoly::at(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [k, c] : coeffs_) {
    if (at(-k) != c) return false;
  }
  return true;
}

long LaurentPoly::max_exponent() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

BigInt LaurentPoly::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : coeffs_) s += c;
  return s;
}

BigInt LaurentPoly::evaluate_at_minus_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : coeffs_) s += (k % 2 == 0) ? c : -c;
  return s;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [i, a] : coeffs_) {
    for (const auto& [j, b] : o.coeffs_) {
      BigInt& c = r.coeffs_[i + j];
      c += a * b;
    }
  }
  std::erase_if(r.coeffs_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool first = out.empty();
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    BigInt a = abs_int(c);
    if (a != 1 || k == 0) out += a.get_str();
    if (k != 0) {
      out += "t";
      if (k != 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace wittknot
