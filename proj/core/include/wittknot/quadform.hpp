#pragma once

#include <cstddef>
#include <vector>

#include "wittknot/matrix.hpp"

namespace wittknot {

// Square integer linking matrix V with det(V - V^T) = +-1 (admissible pair).
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMatrix entries);

  const IntMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  IntMatrix entries_;
};

// V + V^T over the rationals. Accepts any square integer matrix.
RatMatrix symmetrize(const IntMatrix& v);
RatMatrix symmetrize(const SeifertMatrix& v);

// Result of exact congruence diagonalization. The transform columns hold, in
// order: the pivot vectors (one per entry), the split-off hyperbolic pairs,
// and the radical vectors, so that
//   transform^T * A * transform = Diag(entries) (+) [[0,b],[b,c]] blocks (+) 0.
// Always 2*hyperbolic_count + entries.size() + radical_dim = size of A.
struct DiagonalForm {
  std::vector<Rational> entries;  // all nonzero, in pivot order
  int hyperbolic_count = 0;
  int radical_dim = 0;
  RatMatrix transform;
};

// Gram-Schmidt over Q with basis vectors rescaled to primitive integer
// vectors at every step (keeps entries integral for integral input), plus the
// reduction step that splits off a hyperbolic plane whenever an isotropic
// pivot appears. Pivots are taken in natural order; the reduction partner is
// the first remaining vector pairing nonzero with the isotropic pivot.
// Throws NotSymmetric.
DiagonalForm diagonalize(const RatMatrix& a);

// positive minus negative diagonal entries of diagonalize(a)
long signature_of(const RatMatrix& a);

Rational det_of(const RatMatrix& a);

// X_m lower-triangular all ones, Y_m = X_m + X_m^T, P_m upper triangular with
// diagonal 1..m and -1 above: P_m^T Y_m P_m = Diag(1*2, ..., m*(m+1)).
struct StandardMatrices {
  IntMatrix x, y, p;
};
StandardMatrices standard_matrices(std::size_t m);

}  // namespace wittknot
