#pragma once

#include <optional>
#include <string>

#include "wittknot/knots.hpp"
#include "wittknot/pretzel.hpp"

namespace wittknot {

// Everything the CLI prints about one knot. `determinant` carries the
// closed-form (symmetric sum) value for pretzel inputs and det(V + V^T)
// otherwise; residues/relevant primes derive from the Witt class.
struct Report {
  std::string name;
  std::optional<PretzelCategory> category;
  std::size_t matrix_size = 0;
  WittClassQ witt;
  long signature = 0;
  BigInt determinant;
  WittOrder order = WittOrder::one;
  std::optional<LaurentPoly> alexander_poly;
  std::optional<OrderPrediction> predicted;

  // one JSON document; big integers that do not fit in 64 bits are emitted
  // as decimal strings
  std::string to_json() const;
  std::string to_text() const;
};

Report report_for(const PretzelKnot& k, bool with_alexander);
Report report_for(const Knot& k, bool with_alexander);

}  // namespace wittknot
