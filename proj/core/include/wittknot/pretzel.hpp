#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wittknot/quadform.hpp"
#include "wittknot/witt.hpp"

namespace wittknot {

// The three parameter categories that give knots:
//   I    n odd,  exactly one twist even (stored last)
//   II   n even, exactly one twist even (stored last)
//   III  n odd,  all twists odd
enum class PretzelCategory { I, II, III };
std::string to_string(PretzelCategory c);

class PretzelKnot {
 public:
  const std::vector<long long>& twists() const { return twists_; }
  PretzelCategory category() const { return category_; }
  std::size_t strands() const { return twists_.size(); }
  std::string name() const;  // "P(p1,...,pn)"

 private:
  friend PretzelKnot classify(std::span<const long long> raw);
  std::vector<long long> twists_;  // even twist rotated last for I/II
  PretzelCategory category_;
};

// Validates twist parameters and cyclically rotates a unique even entry to
// the last slot. Throws TooShort, ZeroTwist, NotAKnot (two or more even
// entries, or an even count of all-odd entries: those describe links).
PretzelKnot classify(std::span<const long long> raw);
PretzelKnot classify(std::initializer_list<long long> raw);

// Unsymmetrized linking matrix in the paper's basis order:
//   I    (alpha^1, ..., alpha^(n-1), gamma, delta)
//   II   (alpha^1, ..., alpha^n, gamma)
//   III  (alpha_1, ..., alpha_(n-1))
// det(L - L^T) = 1 for every valid knot.
SeifertMatrix seifert_matrix(const PretzelKnot& k);

// Derived quantities feeding the closed forms. sigma[i] is the i-th
// elementary symmetric value of (p_1, ..., p_{i+1}) (category III);
// detp_head/xx/yy are the category I tail data.
struct PretzelProfile {
  std::vector<int> s;          // s_i = -sign(p_i)
  std::vector<long long> rho;  // rho_i = |p_i| - 1
  long long corner = 0;        // gamma-corner of the symmetrized form
  std::vector<BigInt> sigma;   // category III only
  BigInt detp_head = 0;        // det P(p_1,...,p_{n-1}) (category I)
  BigInt detp_full = 0;        // det P(p_1,...,p_n)
  BigInt xx = 0;               // <X,X> = -(p_1...p_{n-1}) * detp_head
  BigInt yy = 0;               // <Y,Y> = detp_head * detp_full
};
PretzelProfile profile(const PretzelKnot& k);

// Closed-form rational Witt class, already canonical. Category I drops the
// <X,X>, <Y,Y> tail when <X,X> = 0 (the hyperbolic branch); category III
// drops vanishing sigma products.
WittClassQ witt_closed_form(const PretzelKnot& k);

// Sum of the signs of the closed-form generators; agrees with
// signature_of(symmetrize(seifert_matrix(k))).
long signature_closed_form(const PretzelKnot& k);

// The symmetric sum sum_i prod_{j != i} p_j; always odd, and equal to
// det_of(symmetrize(seifert_matrix(k))) up to sign.
BigInt determinant_closed_form(const PretzelKnot& k);

// Inserts p before position i and -p before position j of the twist tuple
// (0-based, i <= j <= strands); the result is re-classified. Witt class,
// signature, and the square class of the determinant are preserved.
// Throws EvenStabilizer.
PretzelKnot stabilize(const PretzelKnot& k, long long p, std::size_t i,
                      std::size_t j);

// Theorem-based order prediction, when one of the classified families
// applies. The printed 3-strand theorems split order 2 from order 4 by
// |det| mod 4; that test is refined here to "some prime = 3 (mod 4) divides
// det with odd multiplicity", which is what the residue maps actually see
// (|det| = 3 mod 4 implies it, but not conversely, e.g. det = -21).
struct OrderPrediction {
  WittOrder order;
  std::string rule;  // "three-odd" | "odd-odd-even" | "coprime-heads"
};
std::optional<OrderPrediction> predicted_order(const PretzelKnot& k);

}  // namespace wittknot
