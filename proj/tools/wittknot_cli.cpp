// wittknot: rational Witt classes, signatures, determinants and Alexander
// polynomials of knots from Seifert matrices, with closed forms for pretzels.
//
// Exit codes: 0 success, 2 invalid knot parameters, 3 unreadable or
// inadmissible matrix file, 4 sweep found a mismatch.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "wittknot/report.hpp"

namespace wk = wittknot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadKnot = 2;
constexpr int kExitBadFile = 3;
constexpr int kExitMismatch = 4;

struct Range {
  long long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("expected A..B");
  Range r;
  r.lo = std::stoll(s.substr(0, dots));
  r.hi = std::stoll(s.substr(dots + 2));
  if (r.lo > r.hi) throw CLI::ValidationError("empty range");
  return r;
}

wk::Knot knot_from_spec(const std::string& spec) {
  if (spec.rfind("pretzel:", 0) == 0) {
    std::vector<long long> twists;
    std::stringstream ss(spec.substr(8));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) twists.push_back(std::stoll(tok));
    }
    wk::PretzelKnot k = wk::classify(twists);
    return wk::Knot(k.name(), wk::seifert_matrix(k));
  }
  if (spec.rfind("file:", 0) == 0) {
    return wk::load_knot_file(spec.substr(5));
  }
  throw wk::BadInput("spec must be pretzel:a,b,c or file:PATH, got " + spec);
}

void print_report(const wk::Report& r, bool as_json) {
  std::cout << (as_json ? r.to_json() : r.to_text()) << "\n";
}

// ---------------------------------------------------------------------------
// sweep machinery

std::vector<std::vector<long long>> grid_tuples(wk::PretzelCategory cat,
                                                std::size_t n, Range odd,
                                                Range even) {
  std::vector<long long> odds, evens;
  for (long long v = odd.lo; v <= odd.hi; ++v) {
    if (v % 2 != 0) odds.push_back(v);
  }
  for (long long v = even.lo; v <= even.hi; ++v) {
    if (v != 0 && v % 2 == 0) evens.push_back(v);
  }
  const std::size_t odd_slots = cat == wk::PretzelCategory::III ? n : n - 1;
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(n);
  // odometer over the odd slots, with an even last slot for categories I/II
  std::vector<std::size_t> idx(odd_slots, 0);
  while (true) {
    for (std::size_t i = 0; i < odd_slots; ++i) cur[i] = odds[idx[i]];
    if (cat == wk::PretzelCategory::III) {
      out.push_back(cur);
    } else {
      for (long long e : evens) {
        cur[n - 1] = e;
        out.push_back(cur);
      }
    }
    std::size_t carry = odd_slots;
    while (carry > 0 && ++idx[carry - 1] == odds.size()) {
      idx[carry - 1] = 0;
      --carry;
    }
    if (carry == 0) break;
  }
  return out;
}

struct SweepPlan {
  std::vector<std::pair<wk::PretzelCategory, std::size_t>> slices;
};

SweepPlan default_plan(const std::string& category, long n_override) {
  SweepPlan plan;
  auto want = [&](wk::PretzelCategory c) {
    return category.empty() || category == wk::to_string(c);
  };
  auto add = [&](wk::PretzelCategory c, std::size_t n) {
    if (want(c) && (n_override == 0 || static_cast<std::size_t>(n_override) == n)) {
      plan.slices.emplace_back(c, n);
    }
  };
  add(wk::PretzelCategory::III, 3);
  add(wk::PretzelCategory::III, 5);
  add(wk::PretzelCategory::I, 3);
  add(wk::PretzelCategory::I, 5);
  add(wk::PretzelCategory::II, 4);
  return plan;
}

// runs fn over [0, count) on the requested number of threads; collects
// failure messages in index order so output stays deterministic
int parallel_check(std::size_t count, unsigned threads,
                   const std::function<std::optional<std::string>(std::size_t)>& fn) {
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto fail = fn(i)) {
        std::cout << "MISMATCH: " << *fail << "\n";
        return kExitMismatch;
      }
    }
    return kExitOk;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::vector<std::pair<std::size_t, std::string>> failures;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        if (auto fail = fn(i)) {
          std::lock_guard<std::mutex> lock(mu);
          failures.emplace_back(i, *fail);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failures.empty()) return kExitOk;
  std::sort(failures.begin(), failures.end());
  std::cout << "MISMATCH: " << failures.front().second << "\n";
  return kExitMismatch;
}

std::string tuple_name(const std::vector<long long>& t) {
  std::string s = "P(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::optional<std::string> check_closed_vs_direct(const std::vector<long long>& t) {
  wk::PretzelKnot k = wk::classify(t);
  wk::SeifertMatrix v = wk::seifert_matrix(k);
  const wk::IntMatrix& l = v.entries();
  if (wk::det_bareiss(l - l.transposed()) != 1) {
    return tuple_name(t) + ": det(L - L^T) != 1";
  }
  wk::DiagonalForm d = wk::diagonalize(wk::symmetrize(v));
  if (d.radical_dim != 0) {
    return tuple_name(t) + ": degenerate symmetrized form";
  }
  wk::WittClassQ direct = wk::WittClassQ::from_diagonal(d.entries);
  wk::WittClassQ closed = wk::witt_closed_form(k);
  if (!closed.equals(direct)) {
    return tuple_name(t) + ": closed-form Witt class differs from diagonalization";
  }
  long sig = 0;
  for (const auto& e : d.entries) sig += wk::sgn(e);
  if (sig != wk::signature_closed_form(k)) {
    return tuple_name(t) + ": signature mismatch";
  }
  wk::Rational det = wk::det_of(wk::symmetrize(v));
  wk::BigInt closed_det = wk::determinant_closed_form(k);
  if (wk::abs_int(det.get_num()) != wk::abs_int(closed_det) || det.get_den() != 1) {
    return tuple_name(t) + ": |determinant| mismatch";
  }
  if (closed_det % 2 == 0) {
    return tuple_name(t) + ": determinant is even";
  }
  return std::nullopt;
}

std::optional<std::string> check_predicted_order(const std::vector<long long>& t) {
  wk::PretzelKnot k = wk::classify(t);
  auto pred = wk::predicted_order(k);
  if (!pred) return std::nullopt;
  wk::WittOrder actual = wk::witt_closed_form(k).order();
  if (pred->order != actual) {
    return tuple_name(t) + ": predicted order " + wk::to_string(pred->order) +
           " (rule " + pred->rule + ") but computed " + wk::to_string(actual);
  }
  return std::nullopt;
}

int run_sweep(const std::string& category, long n_override, Range odd,
              Range even, const std::string& check, long count, unsigned seed,
              unsigned threads) {
  if (check == "stabilization") {
    std::mt19937 rng(seed);
    std::vector<std::vector<long long>> pool;
    for (auto& [cat, n] : default_plan(category, n_override).slices) {
      auto tuples = grid_tuples(cat, n, odd, even);
      pool.insert(pool.end(), tuples.begin(), tuples.end());
    }
    std::vector<long long> odd_values;
    for (long long v = odd.lo; v <= odd.hi; ++v)
      if (v % 2 != 0) odd_values.push_back(v);
    for (long i = 0; i < count; ++i) {
      const auto& t = pool[rng() % pool.size()];
      wk::PretzelKnot k = wk::classify(t);
      long long p = odd_values[rng() % odd_values.size()];
      std::size_t a = rng() % (k.strands() + 1);
      std::size_t b = a + rng() % (k.strands() + 1 - a);
      wk::PretzelKnot s = wk::stabilize(k, p, a, b);
      if (!wk::witt_closed_form(k).equals(wk::witt_closed_form(s))) {
        std::cout << "MISMATCH: " << k.name() << " vs stabilized " << s.name()
                  << ": Witt class changed\n";
        return kExitMismatch;
      }
      if (wk::signature_closed_form(k) != wk::signature_closed_form(s)) {
        std::cout << "MISMATCH: " << k.name() << " vs " << s.name()
                  << ": signature changed\n";
        return kExitMismatch;
      }
      wk::Knot ka(k.name(), wk::seifert_matrix(k));
      wk::Knot kb(s.name(), wk::seifert_matrix(s));
      wk::BigInt d1 = wk::signed_determinant(ka), d2 = wk::signed_determinant(kb);
      wk::BigInt q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), d2.get_mpz_t(), d1.get_mpz_t());
      if (r != 0 || q <= 0 || !wk::is_perfect_square(q)) {
        std::cout << "MISMATCH: " << k.name() << " -> " << s.name()
                  << ": determinant ratio " << d2.get_str() << "/"
                  << d1.get_str() << " is not a perfect square\n";
        return kExitMismatch;
      }
    }
    std::cout << "stabilization sweep ok (" << count << " random pairs)\n";
    return kExitOk;
  }

  std::optional<std::string> (*checker)(const std::vector<long long>&) = nullptr;
  if (check == "closed-vs-direct") {
    checker = &check_closed_vs_direct;
  } else if (check == "predicted-order") {
    checker = &check_predicted_order;
  } else {
    throw CLI::ValidationError("unknown --check " + check);
  }

  std::size_t total = 0;
  for (auto& [cat, n] : default_plan(category, n_override).slices) {
    auto tuples = grid_tuples(cat, n, odd, even);
    int rc = parallel_check(
        tuples.size(), threads,
        [&](std::size_t i) { return checker(tuples[i]); });
    if (rc != kExitOk) return rc;
    total += tuples.size();
    std::cout << "category " << wk::to_string(cat) << " n=" << n << ": "
              << tuples.size() << " knots ok\n";
  }
  std::cout << check << " sweep ok (" << total << " knots)\n";
  return kExitOk;
}

int run_tlsig(const std::string& spec, long samples) {
  wk::Knot k = knot_from_spec(spec);
  std::cout << k.name() << ": Tristram-Levine signatures at " << samples
            << " points omega = exp(2 pi i j/" << (samples + 1) << ")\n";
  const double tau = 2.0 * std::acos(-1.0);
  for (long j = 1; j <= samples; ++j) {
    const double angle = tau * static_cast<double>(j) / static_cast<double>(samples + 1);
    double re = std::cos(angle), im = std::sin(angle);
    // renormalize rounding drift off the circle
    double norm = std::hypot(re, im);
    re /= norm;
    im /= norm;
    std::cout << "  j=" << j << "  omega=(" << re << ", " << im << ")  sigma_w=";
    try {
      std::cout << wk::tristram_levine(k, re, im) << "\n";
    } catch (const wk::NearSingular&) {
      std::cout << "undefined (omega within tolerance of a root of Delta)\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rational Witt classes, signatures, determinants and Alexander\n"
      "polynomials of knots from Seifert matrices, with closed-form fast\n"
      "paths for pretzel knots"};
  app.require_subcommand(1);

  // pretzel
  auto* cmd_pretzel = app.add_subcommand("pretzel", "invariants of P(p1,...,pn)");
  std::vector<long long> twists;
  bool pz_json = false, pz_alex = false;
  cmd_pretzel->add_option("twists", twists, "twist parameters")->required();
  cmd_pretzel->add_flag("--json", pz_json, "emit JSON");
  cmd_pretzel->add_flag("--alexander", pz_alex, "include the Alexander polynomial");

  // seifert
  auto* cmd_seifert = app.add_subcommand("seifert", "invariants from a Seifert matrix file");
  std::string seifert_path;
  bool sf_json = false, sf_alex = false;
  cmd_seifert->add_option("file", seifert_path, "JSON file {\"name\",\"matrix\"}")->required();
  cmd_seifert->add_flag("--json", sf_json, "emit JSON");
  cmd_seifert->add_flag("--alexander", sf_alex, "include the Alexander polynomial");

  // sum
  auto* cmd_sum = app.add_subcommand("sum", "connected sum of knots given by specs");
  std::vector<std::string> specs;
  bool sum_json = false, sum_alex = false;
  cmd_sum->add_option("specs", specs, "pretzel:a,b,c or file:PATH")->required();
  cmd_sum->add_flag("--json", sum_json, "emit JSON");
  cmd_sum->add_flag("--alexander", sum_alex, "include the Alexander polynomial");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "verification sweeps over pretzel grids");
  std::string sw_category, sw_check = "closed-vs-direct";
  long sw_n = 0, sw_count = 500;
  unsigned sw_seed = 5381, sw_threads = 1;
  std::string sw_odd = "-9..9", sw_even = "-8..8";
  cmd_sweep->add_option("--category", sw_category, "I, II or III (default: all)")
      ->check(CLI::IsMember({"I", "II", "III"}));
  cmd_sweep->add_option("--n", sw_n, "restrict to one strand count");
  cmd_sweep->add_option("--odd-range", sw_odd, "odd twist range A..B (default -9..9)");
  cmd_sweep->add_option("--even-range", sw_even, "even twist range A..B (default -8..8)");
  cmd_sweep->add_option("--check", sw_check,
                        "closed-vs-direct | stabilization | predicted-order");
  cmd_sweep->add_option("--count", sw_count, "random pairs for stabilization (default 500)");
  cmd_sweep->add_option("--seed", sw_seed, "RNG seed for stabilization");
  cmd_sweep->add_option("--threads", sw_threads, "worker threads (default 1)");

  // tlsig
  auto* cmd_tlsig = app.add_subcommand("tlsig", "sampled Tristram-Levine signatures");
  std::string tl_spec;
  long tl_samples = 16;
  cmd_tlsig->add_option("spec", tl_spec, "pretzel:a,b,c or file:PATH")->required();
  cmd_tlsig->add_option("--samples", tl_samples, "number of sample points (default 16)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_pretzel) {
      wk::PretzelKnot k = wk::classify(twists);
      print_report(wk::report_for(k, pz_alex), pz_json);
      return kExitOk;
    }
    if (*cmd_seifert) {
      wk::Knot k = wk::load_knot_file(seifert_path);
      print_report(wk::report_for(k, sf_alex), sf_json);
      return kExitOk;
    }
    if (*cmd_sum) {
      std::optional<wk::Knot> total;
      for (const std::string& s : specs) {
        wk::Knot k = knot_from_spec(s);
        total = total ? wk::connected_sum(*total, k) : k;
      }
      print_report(wk::report_for(*total, sum_alex), sum_json);
      return kExitOk;
    }
    if (*cmd_sweep) {
      return run_sweep(sw_category, sw_n, parse_range(sw_odd), parse_range(sw_even),
                       sw_check, sw_count, sw_seed, sw_threads);
    }
    if (*cmd_tlsig) {
      return run_tlsig(tl_spec, tl_samples);
    }
  } catch (const wk::TooShort& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadKnot;
  } catch (const wk::ZeroTwist& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadKnot;
  } catch (const wk::NotAKnot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadKnot;
  } catch (const wk::EvenStabilizer& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadKnot;
  } catch (const wk::NotAdmissible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const wk::BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const wk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
