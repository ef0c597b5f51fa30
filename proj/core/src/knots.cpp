#include "wittknot/knots.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace wittknot {

WittClassQ witt_class(const Knot& k) {
  DiagonalForm d = diagonalize(symmetrize(k.seifert()));
  return WittClassQ::from_diagonal(d.entries);
}

LaurentPoly alexander(const Knot& k) {
  const IntMatrix& v = k.seifert().entries();
  const std::size_t n = v.rows();
  if (n % 2 != 0) throw OddSize("alexander: Seifert matrix size must be even");
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly p{-v(j, i), v(i, j)};  // t*V(i,j) - V(j,i)
      while (!p.empty() && p.back() == 0) p.pop_back();
      m[i][j] = std::move(p);
    }
  }
  Poly det = poly_det_bareiss(std::move(m));
  LaurentPoly delta(det, -static_cast<long>(n) / 2);
  if (!delta.coefficients().empty() &&
      delta.coefficients().rbegin()->second < 0) {
    Poly neg = det;
    for (BigInt& c : neg) c = -c;
    delta = LaurentPoly(neg, -static_cast<long>(n) / 2);
  }
  return delta;
}

BigInt knot_determinant(const Knot& k) {
  Rational d = det_of(symmetrize(k.seifert()));
  return d.get_num();  // integral: the form is integral
}

long knot_signature(const Knot& k) {
  return signature_of(symmetrize(k.seifert()));
}

BigInt signed_determinant(const Knot& k) {
  BigInt d = knot_determinant(k);
  return (k.size() / 2) % 2 == 0 ? d : BigInt(-d);
}

Knot connected_sum(const Knot& a, const Knot& b) {
  return Knot(a.name() + " # " + b.name(),
              SeifertMatrix(a.seifert().entries().direct_sum(b.seifert().entries())));
}

Knot mirror(const Knot& k) {
  return Knot("mirror(" + k.name() + ")", SeifertMatrix(-k.seifert().entries()));
}

long tristram_levine(const Knot& k, double re, double im) {
  if (std::abs(re * re + im * im - 1.0) > 1e-12) {
    throw NotOnCircle("tristram_levine: omega must lie on the unit circle");
  }
  if (std::abs(re - 1.0) < 1e-12 && std::abs(im) < 1e-12) {
    return 0;  // A_1 = 0
  }
  const IntMatrix& v = k.seifert().entries();
  const long n = static_cast<long>(v.rows());
  // A = (1-w)V + (1-conj w)V^T: Re A = (1-re)(V+V^T), Im A = im (V^T - V)
  Eigen::MatrixXd m(2 * n, 2 * n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const double vij = v(i, j).get_d();
      const double vji = v(j, i).get_d();
      const double reij = (1.0 - re) * (vij + vji);
      const double imij = im * (vji - vij);
      m(i, j) = reij;
      m(n + i, n + j) = reij;
      m(i, n + j) = -imij;
      m(n + i, j) = imij;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  double norm = 0.0;
  for (long i = 0; i < 2 * n; ++i) norm = std::max(norm, std::abs(ev[i]));
  const double tol = 1e-9 * norm;
  long pos = 0, neg = 0;
  for (long i = 0; i < 2 * n; ++i) {
    if (std::abs(ev[i]) < tol) {
      throw NearSingular("tristram_levine: omega is within tolerance of a root of Delta");
    }
    (ev[i] > 0 ? pos : neg) += 1;
  }
  return (pos - neg) / 2;  // the embedding doubles every eigenvalue
}

Knot load_knot_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BadInput("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array()) {
    throw BadInput(path + ": expected {\"name\": ..., \"matrix\": [[...]]}");
  }
  const auto& rows = j["matrix"];
  const std::size_t n = rows.size();
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw BadInput(path + ": matrix must be square");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!rows[i][c].is_number_integer()) {
        throw BadInput(path + ": matrix entries must be integers");
      }
      v(i, c) = BigInt(rows[i][c].get<long>());
    }
  }
  std::string name = j.value("name", path);
  return Knot(std::move(name), SeifertMatrix(std::move(v)));  // may throw NotAdmissible
}

}  // namespace wittknot
