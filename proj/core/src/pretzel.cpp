#include "wittknot/pretzel.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wittknot {

namespace {

int isign(long long x) { return (x > 0) - (x < 0); }

BigInt bi(long long x) { return BigInt(static_cast<long>(x)); }

// sum_i prod_{j != i} p_j over the given twists
BigInt symmetric_sum(std::span<const long long> p) {
  BigInt total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigInt prod = 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != i) prod *= bi(p[j]);
    }
    total += prod;
  }
  return total;
}

BigInt product(std::span<const long long> p) {
  BigInt r = 1;
  for (long long x : p) r *= bi(x);
  return r;
}

// sigma[i] = i-th elementary symmetric polynomial of (p_1, ..., p_{i+1})
std::vector<BigInt> partial_symmetric(std::span<const long long> p) {
  const std::size_t n = p.size();
  std::vector<BigInt> sigma(n);
  sigma[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    // e_i of the first i+1 twists, by the usual dp over e_0..e_i
    std::vector<BigInt> e(i + 1, 0);
    e[0] = 1;
    for (std::size_t m = 0; m < i + 1; ++m) {
      for (std::size_t j = std::min(m + 1, i); j >= 1; --j) {
        e[j] += bi(p[m]) * e[j - 1];
      }
    }
    sigma[i] = e[i];
  }
  return sigma;
}

}  // namespace

std::string to_string(PretzelCategory c) {
  switch (c) {
    case PretzelCategory::I:
      return "I";
    case PretzelCategory::II:
      return "II";
    case PretzelCategory::III:
      return "III";
  }
  return {};
}

std::string PretzelKnot::name() const {
  std::string s = "P(";
  for (std::size_t i = 0; i < twists_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(twists_[i]);
  }
  s += ')';
  return s;
}

PretzelKnot classify(std::span<const long long> raw) {
  if (raw.size() < 3) throw TooShort("pretzel needs at least 3 strands");
  std::size_t even_pos = raw.size();
  std::size_t even_count = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0) throw ZeroTwist("twist parameters must be nonzero");
    if (raw[i] % 2 == 0) {
      even_pos = i;
      ++even_count;
    }
  }
  PretzelKnot k;
  if (even_count == 0) {
    if (raw.size() % 2 == 0) {
      throw NotAKnot("even strand count with all twists odd is a link");
    }
    k.twists_.assign(raw.begin(), raw.end());
    k.category_ = PretzelCategory::III;
    return k;
  }
  if (even_count > 1) {
    throw NotAKnot("more than one even twist describes a link");
  }
  // rotate cyclically so the even twist sits last
  k.twists_.reserve(raw.size());
  for (std::size_t i = 1; i <= raw.size(); ++i) {
    k.twists_.push_back(raw[(even_pos + i) % raw.size()]);
  }
  k.category_ =
      raw.size() % 2 == 1 ? PretzelCategory::I : PretzelCategory::II;
  return k;
}

PretzelKnot classify(std::initializer_list<long long> raw) {
  return classify(std::span<const long long>(raw.begin(), raw.size()));
}

SeifertMatrix seifert_matrix(const PretzelKnot& k) {
  const auto& p = k.twists();
  const std::size_t n = p.size();

  if (k.category() == PretzelCategory::III) {
    IntMatrix l(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      l(i, i) = bi((p[i] + p[i + 1]) / 2);
      if (i + 2 < n) {
        l(i, i + 1) = bi(-(p[i + 1] + 1) / 2);
        l(i + 1, i) = bi(-(p[i + 1] - 1) / 2);
      }
    }
    return SeifertMatrix(std::move(l));
  }

  const bool cat1 = k.category() == PretzelCategory::I;
  const std::size_t blocks = cat1 ? n - 1 : n;
  std::size_t size = cat1 ? 2 : 1;
  for (std::size_t i = 0; i < blocks; ++i) size += std::llabs(p[i]) - 1;
  IntMatrix l(size, size);
  const std::size_t g = size - (cat1 ? 2 : 1);  // gamma row

  std::size_t off = 0;
  long long corner = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t strand = b + 1;  // 1-based, parity matters
    const long long pi = p[b];
    const std::size_t rho = std::llabs(pi) - 1;
    const bool even_strand = strand % 2 == 0;
    // diagonal block: -X, X^T, -X^T or X by sign and strand parity
    for (std::size_t r = 0; r < rho; ++r) {
      for (std::size_t c = 0; c < rho; ++c) {
        int v;
        if (pi > 0 && even_strand) {
          v = r >= c ? -1 : 0;
        } else if (pi < 0 && even_strand) {
          v = r <= c ? 1 : 0;
        } else if (pi > 0) {
          v = r <= c ? -1 : 0;
        } else {
          v = r >= c ? 1 : 0;
        }
        l(off + r, off + c) = v;
      }
    }
    // gamma pairings: lk(gamma, alpha) and lk(alpha, gamma) add up to -sign(p_i)
    int ga, ag;
    if (pi > 0 && even_strand) {
      ga = -1;
      ag = 0;
    } else if (pi < 0 && even_strand) {
      ga = 0;
      ag = 1;
    } else if (pi > 0) {
      ga = 0;
      ag = -1;
    } else {
      ga = 1;
      ag = 0;
    }
    for (std::size_t r = 0; r < rho; ++r) {
      l(g, off + r) = ga;
      l(off + r, g) = ag;
    }
    corner -= isign(pi);
    off += rho;
  }
  // the gamma-corner sums over all alpha blocks (n-1 of them for category I,
  // all n for category II); the count is even either way
  l(g, g) = bi(corner / 2);
  if (cat1) {
    const std::size_t d = size - 1;  // delta row
    l(g, d) = 0;
    l(d, g) = 1;
    l(d, d) = bi(p[n - 1] / 2);
  }
  return SeifertMatrix(std::move(l));
}

PretzelProfile profile(const PretzelKnot& k) {
  const auto& p = k.twists();
  const std::size_t n = p.size();
  PretzelProfile pr;
  pr.s.reserve(n);
  pr.rho.reserve(n);
  for (long long x : p) {
    pr.s.push_back(-isign(x));
    pr.rho.push_back(std::llabs(x) - 1);
  }
  pr.detp_full = symmetric_sum(p);
  switch (k.category()) {
    case PretzelCategory::III:
      pr.sigma = partial_symmetric(p);
      break;
    case PretzelCategory::I: {
      pr.corner = std::accumulate(pr.s.begin(), pr.s.end() - 1, 0LL);
      std::span<const long long> head(p.data(), n - 1);
      pr.detp_head = symmetric_sum(head);
      pr.xx = -product(head) * pr.detp_head;
      pr.yy = pr.detp_head * pr.detp_full;
      break;
    }
    case PretzelCategory::II:
      pr.corner = std::accumulate(pr.s.begin(), pr.s.end(), 0LL);
      break;
  }
  return pr;
}

namespace {

// raw closed-form generator list, zero entries dropped but not canonicalized
// (the signature reads off the signs of exactly this list)
std::vector<BigInt> closed_form_raw(const PretzelKnot& k) {
  const auto& p = k.twists();
  const std::size_t n = p.size();
  std::vector<BigInt> gens;

  if (k.category() == PretzelCategory::III) {
    const auto sigma = partial_symmetric(p);  // sigma[n-1] = det
    for (std::size_t i = 1; i < n; ++i) {
      BigInt g = sigma[i - 1] * sigma[i];
      if (g != 0) gens.push_back(std::move(g));
    }
    return gens;
  }

  const bool cat1 = k.category() == PretzelCategory::I;
  const std::size_t blocks = cat1 ? n - 1 : n;
  for (std::size_t b = 0; b < blocks; ++b) {
    const long long s = -isign(p[b]);
    for (long long kk = 1; kk < std::llabs(p[b]); ++kk) {
      gens.push_back(bi(s * kk * (kk + 1)));
    }
  }
  if (cat1) {
    std::span<const long long> head(p.data(), n - 1);
    BigInt detp_head = symmetric_sum(head);
    if (detp_head != 0) {  // <X,X> = 0 splits off a hyperbolic plane instead
      gens.push_back(-product(head) * detp_head);
      gens.push_back(detp_head * symmetric_sum(p));
    }
  } else {
    gens.push_back(-product(p) * symmetric_sum(p));
  }
  return gens;
}

}  // namespace

WittClassQ witt_closed_form(const PretzelKnot& k) {
  return WittClassQ::from_generators(closed_form_raw(k));
}

long signature_closed_form(const PretzelKnot& k) {
  long s = 0;
  for (const BigInt& g : closed_form_raw(k)) s += sgn(g);
  return s;
}

BigInt determinant_closed_form(const PretzelKnot& k) {
  return symmetric_sum(k.twists());
}

PretzelKnot stabilize(const PretzelKnot& k, long long p, std::size_t i,
                      std::size_t j) {
  if (p % 2 == 0) throw EvenStabilizer("stabilizing twist must be odd");
  const auto& t = k.twists();
  if (i > j || j > t.size()) {
    throw BadInput("stabilize: need insertion positions i <= j <= strands");
  }
  std::vector<long long> out;
  out.reserve(t.size() + 2);
  out.insert(out.end(), t.begin(), t.begin() + i);
  out.push_back(p);
  out.insert(out.end(), t.begin() + i, t.begin() + j);
  out.push_back(-p);
  out.insert(out.end(), t.begin() + j, t.end());
  return classify(out);
}

namespace {

// some prime = 3 (mod 4) divides n with odd multiplicity; equivalently the
// square-free part of |n| has a 3 (mod 4) factor
bool has_odd_power_3mod4_prime(const BigInt& n) {
  for (const auto& [prime, e] : factor(n).factors) {
    if (prime % 4 == 3 && e % 2 == 1) return true;
  }
  return false;
}

WittOrder torsion_order_from_det(const BigInt& det) {
  if (is_perfect_square(det)) return WittOrder::one;
  return has_odd_power_3mod4_prime(det) ? WittOrder::four : WittOrder::two;
}

}  // namespace

std::optional<OrderPrediction> predicted_order(const PretzelKnot& k) {
  const auto& p = k.twists();
  const BigInt det = determinant_closed_form(k);

  if (k.category() == PretzelCategory::III && p.size() == 3) {
    if (det > 0) return OrderPrediction{WittOrder::infinite, "three-odd"};
    return OrderPrediction{torsion_order_from_det(det), "three-odd"};
  }

  if (k.category() == PretzelCategory::I && p.size() == 3) {
    const long long head_sum = p[0] + p[1];
    if (head_sum == 0) {
      return OrderPrediction{WittOrder::one, "odd-odd-even"};
    }
    if ((head_sum == 2 || head_sum == -2) && det > 0) {
      return OrderPrediction{torsion_order_from_det(det), "odd-odd-even"};
    }
    return OrderPrediction{WittOrder::infinite, "odd-odd-even"};
  }

  if (k.category() == PretzelCategory::I) {
    // pairwise coprime heads: phi = 0 iff sigma = 0 and det = +-m^2
    for (std::size_t a = 0; a + 2 < p.size(); ++a) {
      for (std::size_t b = a + 1; b + 1 < p.size(); ++b) {
        if (std::gcd(p[a], p[b]) != 1) return std::nullopt;
      }
    }
    if (signature_closed_form(k) == 0 && is_perfect_square(det)) {
      return OrderPrediction{WittOrder::one, "coprime-heads"};
    }
    return std::nullopt;  // nonzero class, order not classified here
  }

  return std::nullopt;
}

}  // namespace wittknot
