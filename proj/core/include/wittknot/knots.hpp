#pragma once

#include <string>

#include "wittknot/laurent.hpp"
#include "wittknot/quadform.hpp"
#include "wittknot/witt.hpp"

namespace wittknot {

// A knot given by name and an admissible Seifert matrix.
class Knot {
 public:
  Knot(std::string name, SeifertMatrix v)
      : name_(std::move(name)), v_(std::move(v)) {}

  const std::string& name() const { return name_; }
  const SeifertMatrix& seifert() const { return v_; }
  std::size_t size() const { return v_.size(); }

 private:
  std::string name_;
  SeifertMatrix v_;
};

// class of the symmetrized Seifert pairing in W(Q)
WittClassQ witt_class(const Knot& k);

// det(t^(1/2) V - t^(-1/2) V^T) as an exact integer Laurent polynomial,
// sign-normalized so the top coefficient is positive. Throws OddSize.
LaurentPoly alexander(const Knot& k);

// det(V + V^T), exact; always odd, |Delta(-1)| agrees
BigInt knot_determinant(const Knot& k);
long knot_signature(const Knot& k);

// Delta(-1) = (-1)^(size/2) det(V + V^T): the signed determinant whose ratio
// under pretzel stabilization is a perfect square
BigInt signed_determinant(const Knot& k);

Knot connected_sum(const Knot& a, const Knot& b);
Knot mirror(const Knot& k);

// Signature of (1-w)V + (1-conj(w))V^T for w = re + i*im on the unit circle,
// via the doubled real symmetric embedding [[Re,-Im],[Im,Re]] with eigenvalue
// pairs halved. Eigenvalues within 1e-9 * ||A|| of zero raise NearSingular
// (w is then within floating tolerance of a unit root of Delta). w = 1 gives
// 0. Throws NotOnCircle if re^2 + im^2 deviates from 1 by more than 1e-12.
long tristram_levine(const Knot& k, double re, double im);

// JSON file {"name": string, "matrix": [[int, ...], ...]}.
// Throws BadInput (unreadable/malformed) or NotAdmissible.
Knot load_knot_file(const std::string& path);

}  // namespace wittknot
