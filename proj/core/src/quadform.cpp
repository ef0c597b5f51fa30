#include "wittknot/quadform.hpp"

#include <optional>
#include <utility>

namespace wittknot {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) {
    throw NotAdmissible("seifert matrix must be square");
  }
  BigInt d = det_bareiss(entries_ - entries_.transposed());
  if (d != 1 && d != -1) {
    throw NotAdmissible("det(V - V^T) must be +-1, got " + d.get_str());
  }
}

RatMatrix symmetrize(const IntMatrix& v) {
  if (!v.is_square()) throw NotSymmetric("symmetrize: matrix must be square");
  return to_rational(v + v.transposed());
}

RatMatrix symmetrize(const SeifertMatrix& v) { return symmetrize(v.entries()); }

namespace {

// divide by the content, make the first nonzero coordinate positive
void primitivize(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (const BigInt& x : v) {
    if (x != 0) {
      if (x < 0)
        for (BigInt& y : v) y = -y;
      break;
    }
  }
}

template <typename T>
struct FormOps;

template <>
struct FormOps<BigInt> {
  static std::vector<BigInt> apply(const RatMatrix& a,
                                   const std::vector<BigInt>& v) {
    const std::size_t n = a.rows();
    std::vector<BigInt> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != 0) acc += a(i, j).get_num() * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  // v <- alpha*v + beta*w, reduced to a primitive vector
  static void combine(std::vector<BigInt>& v, const BigInt& alpha,
                      const std::vector<BigInt>& w, const BigInt& beta) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = alpha * v[i] + beta * w[i];
    primitivize(v);
  }

  static void combine3(std::vector<BigInt>& v, const BigInt& alpha,
                       const std::vector<BigInt>& w, const BigInt& beta,
                       const std::vector<BigInt>& u, const BigInt& gamma) {
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = alpha * v[i] + beta * w[i] + gamma * u[i];
    primitivize(v);
  }
};

template <>
struct FormOps<Rational> {
  static std::vector<Rational> apply(const RatMatrix& a,
                                     const std::vector<BigInt>& v) {
    const std::size_t n = a.rows();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != 0) acc += a(i, j) * Rational(v[j]);
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  static void combine(std::vector<BigInt>& v, const Rational& alpha,
                      const std::vector<BigInt>& w, const Rational& beta) {
    BigInt q;
    mpz_lcm(q.get_mpz_t(), alpha.get_den().get_mpz_t(),
            beta.get_den().get_mpz_t());
    BigInt ca = alpha.get_num() * (q / alpha.get_den());
    BigInt cb = beta.get_num() * (q / beta.get_den());
    FormOps<BigInt>::combine(v, ca, w, cb);
  }

  static void combine3(std::vector<BigInt>& v, const Rational& alpha,
                       const std::vector<BigInt>& w, const Rational& beta,
                       const std::vector<BigInt>& u, const Rational& gamma) {
    BigInt q;
    mpz_lcm(q.get_mpz_t(), alpha.get_den().get_mpz_t(),
            beta.get_den().get_mpz_t());
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), gamma.get_den().get_mpz_t());
    BigInt ca = alpha.get_num() * (q / alpha.get_den());
    BigInt cb = beta.get_num() * (q / beta.get_den());
    BigInt cc = gamma.get_num() * (q / gamma.get_den());
    FormOps<BigInt>::combine3(v, ca, w, cb, u, cc);
  }
};

template <typename T>
T dot(const std::vector<BigInt>& u, const std::vector<T>& av) {
  T acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) acc += T(u[i]) * av[i];
  }
  return acc;
}

// Shared implementation; T = BigInt when the input form is integral (the
// basis vectors stay integral, so everything does), T = Rational otherwise.
template <typename T>
DiagonalForm diagonalize_impl(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<BigInt>> vecs(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) vecs[i][i] = 1;
  std::vector<std::size_t> rem(n);
  for (std::size_t i = 0; i < n; ++i) rem[i] = i;

  DiagonalForm out;
  std::vector<std::vector<BigInt>> pivot_vecs, hyper_vecs, radical_vecs;

  while (!rem.empty()) {
    const std::size_t f = rem.front();
    auto af = FormOps<T>::apply(a, vecs[f]);
    T ff = dot<T>(vecs[f], af);
    if (ff != 0) {
      rem.erase(rem.begin());
      for (std::size_t r : rem) {
        T c = dot<T>(vecs[r], af);
        if (c != 0) FormOps<T>::combine(vecs[r], ff, vecs[f], -c);
      }
      out.entries.emplace_back(std::move(ff));
      pivot_vecs.push_back(std::move(vecs[f]));
      continue;
    }

    // isotropic pivot: find the first partner with nonzero pairing
    std::optional<std::size_t> partner;
    for (std::size_t k = 1; k < rem.size(); ++k) {
      if (dot<T>(vecs[rem[k]], af) != 0) {
        partner = rem[k];
        break;
      }
    }
    if (!partner) {
      // pairs to zero with everything remaining: radical vector
      ++out.radical_dim;
      radical_vecs.push_back(std::move(vecs[f]));
      rem.erase(rem.begin());
      continue;
    }
    const std::size_t w = *partner;
    auto aw = FormOps<T>::apply(a, vecs[w]);
    T b = dot<T>(vecs[f], aw);
    T c = dot<T>(vecs[w], aw);
    std::erase(rem, f);
    std::erase(rem, w);
    for (std::size_t r : rem) {
      T hu = dot<T>(vecs[r], af);
      T hw = dot<T>(vecs[r], aw);
      if (hu == 0 && hw == 0) continue;
      // kill the pairings with both u = vecs[f] and w:
      //   h <- b^2 h - b*hu*w - (hw*b - hu*c)*u
      FormOps<T>::combine3(vecs[r], b * b, vecs[w], T(-(b * hu)), vecs[f],
                           T(-(hw * b - hu * c)));
    }
    ++out.hyperbolic_count;
    hyper_vecs.push_back(std::move(vecs[f]));
    hyper_vecs.push_back(std::move(vecs[w]));
  }

  out.transform = RatMatrix(n, n);
  std::size_t col = 0;
  auto emit = [&](const std::vector<std::vector<BigInt>>& vs) {
    for (const auto& v : vs) {
      for (std::size_t i = 0; i < n; ++i) out.transform(i, col) = Rational(v[i]);
      ++col;
    }
  };
  emit(pivot_vecs);
  emit(hyper_vecs);
  emit(radical_vecs);
  return out;
}

}  // namespace

DiagonalForm diagonalize(const RatMatrix& a) {
  if (!a.is_symmetric()) throw NotSymmetric("diagonalize: matrix not symmetric");
  bool integral = true;
  for (std::size_t i = 0; i < a.rows() && integral; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) {
        integral = false;
        break;
      }
  return integral ? diagonalize_impl<BigInt>(a) : diagonalize_impl<Rational>(a);
}

long signature_of(const RatMatrix& a) {
  DiagonalForm d = diagonalize(a);
  long s = 0;
  for (const Rational& e : d.entries) s += sgn(e);
  return s;
}

Rational det_of(const RatMatrix& a) {
  if (!a.is_symmetric()) throw NotSymmetric("det_of: matrix not symmetric");
  return det_bareiss(a);
}

StandardMatrices standard_matrices(std::size_t m) {
  StandardMatrices s{IntMatrix(m, m), IntMatrix(m, m), IntMatrix(m, m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      s.x(i, j) = i >= j ? 1 : 0;
      s.y(i, j) = i == j ? 2 : 1;
      s.p(i, j) = i == j ? BigInt(i + 1) : (j > i ? BigInt(-1) : BigInt(0));
    }
  }
  return s;
}

}  // namespace wittknot
