#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "twistbaker/counting.hpp"
#include "twistbaker/errors.hpp"
#include "twistbaker/periodic.hpp"
#include "twistbaker/serialize.hpp"
#include "twistbaker/spectral.hpp"
#include "twistbaker/statistics.hpp"
#include "twistbaker/symbolic.hpp"

namespace twistbaker::cli {

namespace {

using Check = std::function<CheckResult()>;

CheckResult pass(std::string name, std::string detail = {}) {
  return CheckResult{std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

// Children of [w] split one coordinate of [w] into two adjacent pieces.
bool refinement_covers(const BasicRectangle& parent, const BasicRectangle& a,
                       const BasicRectangle& b) {
  std::size_t split = parent.size();
  for (std::size_t j = 0; j < parent.size(); ++j) {
    const bool same_a = a.intervals[j].lo == parent.intervals[j].lo && a.intervals[j].hi == parent.intervals[j].hi;
    const bool same_b = b.intervals[j].lo == parent.intervals[j].lo && b.intervals[j].hi == parent.intervals[j].hi;
    if (same_a && same_b) continue;
    if (split != parent.size()) return false;
    split = j;
  }
  if (split == parent.size()) return false;
  const Interval& x = a.intervals[split];
  const Interval& y = b.intervals[split];
  const Interval& p = parent.intervals[split];
  const Interval& low = x.lo < y.lo ? x : y;
  const Interval& high = x.lo < y.lo ? y : x;
  return low.lo == p.lo && low.hi == high.lo && high.hi == p.hi;
}

std::vector<Check> lemma_checks(Dimension dim, std::size_t max_period, unsigned workers) {
  const std::size_t word_len = std::min<std::size_t>(max_period, 12);
  const std::size_t rect_len = std::min<std::size_t>(max_period, 8);
  const std::size_t m = dim.size();
  std::vector<Check> checks;

  checks.push_back([=] {
    const std::string name = "twist multiple of M gives a diagonal Jacobian with uniform sign";
    for (std::size_t n = 1; n <= word_len; ++n) {
      for (const Word& w : all_words(n)) {
        const std::size_t t = w.count_r();
        if (t % m != 0) continue;
        const MonomialMatrix mm = monomial_of_word(w, dim);
        const int sign = (t / m) % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < m; ++i) {
          if (mm.col[i] != static_cast<int>(i) || mm.entry[i].sign != sign) return fail(name, w.str());
        }
      }
    }
    return pass(name, "words up to length " + std::to_string(word_len));
  });

  checks.push_back([=] {
    const std::string name = "twist residue 0 is real, residues 1 and M-1 are complex";
    for (std::size_t n = 1; n <= word_len; ++n) {
      for (const Word& w : all_words(n)) {
        if (w.all_l()) continue;
        const std::size_t r = w.count_r() % m;
        const EigenClass c = classify(w, dim);
        if (r == 0 && c != EigenClass::Real) return fail(name, w.str());
        if ((r == 1 || r == m - 1) && c != EigenClass::Complex) return fail(name, w.str());
      }
    }
    return pass(name, "words up to length " + std::to_string(word_len));
  });

  checks.push_back([=] {
    const std::string name = "basic rectangles: refinement, shifted image, nesting, measure";
    std::vector<BasicRectangle> small;
    for (std::size_t n = 1; n <= rect_len; ++n) {
      for (const Word& w : all_words(n)) {
        const BasicRectangle r = rectangle(w, dim);
        if (r.normalized_measure() != pow2(-static_cast<long>(n))) return fail(name, "measure " + w.str());
        const auto [a, b] = refine(w, dim);
        if (!refinement_covers(r, a, b)) return fail(name, "refinement " + w.str());
        for (std::size_t k = 0; k < n; ++k) {
          if (!image_shift_check(w, k, dim)) return fail(name, "shift " + w.str());
        }
        if (n <= 6) small.push_back(r);
      }
    }
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j)
        if (!nested_or_disjoint(small[i], small[j])) return fail(name, "nesting " + small[i].word.str());
    return pass(name, "words up to length " + std::to_string(rect_len));
  });

  checks.push_back([=] {
    const std::string name = "no periodic point on the discontinuity set x1 = 0";
    const std::size_t top = std::min(word_len, default_period_cap(dim));
    EnumerateOptions opt;
    opt.workers = workers;
    for (std::size_t n = 1; n <= top; ++n) {
      for (const auto& r : enumerate_fix(n, dim, opt)) {
        if (r.point[0] == 0) return fail(name, r.word.str());
      }
    }
    return pass(name, "periods up to " + std::to_string(top));
  });

  checks.push_back([=] {
    const std::string name = "binomial multisection equals its trigonometric form";
    for (unsigned n = 0; n <= 50; ++n) {
      for (unsigned r = 0; r < m; ++r) {
        const double exact = multisection(n, static_cast<unsigned>(m), r).get_d();
        const double trig = multisection_trig(n, static_cast<unsigned>(m), r);
        if (std::fabs(exact - trig) > 1e-6 * std::max(1.0, exact)) {
          return fail(name, "n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
      }
    }
    return pass(name, "n <= 50");
  });

  checks.push_back([=] {
    const std::string name = "residue proportions within the multisection bound";
    for (unsigned n = 1; n <= 40; ++n) proportion_report(n, static_cast<unsigned>(m));
    return pass(name, "n <= 40");
  });

  checks.push_back([=] {
    const std::string name = "residue counts match enumeration";
    const std::size_t top = std::min(word_len, default_period_cap(dim));
    EnumerateOptions opt;
    opt.workers = workers;
    for (std::size_t n = 1; n <= top; ++n) {
      std::vector<long> hist(m, 0);
      for (const auto& r : enumerate_fix(n, dim, opt)) ++hist[r.twist % m];
      for (unsigned r = 0; r < m; ++r) {
        if (fix_count_residue(static_cast<unsigned>(n), static_cast<unsigned>(m), r) != hist[r]) {
          return fail(name, "n=" + std::to_string(n) + " r=" + std::to_string(r));
        }
      }
    }
    return pass(name, "periods up to " + std::to_string(top));
  });
  return checks;
}

std::vector<Check> theorem_a_checks(Dimension dim, std::size_t max_period, unsigned workers) {
  const std::size_t top = std::min(max_period, default_period_cap(dim));
  std::vector<Check> checks;
  checks.push_back([=] {
    const std::string name = "2^n - 1 distinct periodic points, hyperbolic repelling";
    EnumerateOptions opt;
    opt.workers = workers;
    for (std::size_t n = 1; n <= top; ++n) {
      const auto records = enumerate_fix(n, dim, opt);
      if (records.size() != (std::size_t{1} << n) - 1) return fail(name, "count at n=" + std::to_string(n));
      for (const auto& r : records) {
        if (r.min_cycle_exponent < 1) return fail(name, "modulus <= 1 at " + r.word.str());
      }
    }
    return pass(name, "periods up to " + std::to_string(top));
  });
  checks.push_back([=] {
    const std::string name = "real and complex periodic points in every cylinder";
    const std::size_t len = std::min<std::size_t>(max_period, 6);
    for (std::size_t n = 1; n <= len; ++n) {
      for (const Word& w : all_words(n)) {
        density_witness(w, dim, EigenClass::Real);
        density_witness(w, dim, EigenClass::Complex);
      }
    }
    return pass(name, "prefixes up to length " + std::to_string(len));
  });
  return checks;
}

std::vector<Check> theorem_b_checks(Dimension dim, std::ostream& out) {
  std::vector<Check> checks;
  checks.push_back([dim, &out] {
    const std::string name = "chi tends to 1 along biased words";
    TheoremBConfig cfg;
    cfg.m = dim.value();
    std::size_t count = 0;
    long total = 0;
    while (true) {
      const long next = total + cfg.p_at(count + 1);
      if (next > static_cast<long>(kTheoremBSymbolBudget)) break;
      total = next;
      ++count;
    }
    count -= count % dim.size();
    if (count == 0) return fail(name, "symbol budget too small for one term");
    const auto terms = theorem_b_sequence(cfg, count);
    out << "  j  length  chi_log2  bound_log2\n";
    for (const auto& t : terms) {
      out << "  " << t.j << "  " << t.word.size() << "  " << format_double(t.chi_log2.get_d()) << "  "
          << format_double(t.bound_log2.get_d()) << '\n';
    }
    return pass(name, std::to_string(terms.size()) + " terms, bounds strictly decreasing");
  });
  return checks;
}

std::vector<Check> theorem_c_checks(Dimension dim, std::size_t max_period, unsigned workers) {
  std::vector<Check> checks;
  checks.push_back([=] {
    const std::string name = "cylinder discrepancy of each class shrinks with the period";
    const std::size_t top = std::min(max_period, default_period_cap(dim));
    std::vector<std::size_t> ladder;
    for (std::size_t n : {8, 12, 16, 18}) {
      if (n <= top) ladder.push_back(n);
    }
    if (ladder.empty()) ladder.push_back(top);
    EnumerateOptions opt;
    opt.workers = workers;
    std::ostringstream detail;
    double prev_real = 1.0;
    double prev_complex = 1.0;
    for (std::size_t n : ladder) {
      const auto records = enumerate_fix(n, dim, opt);
      for (ClassFilter f : {ClassFilter::Real, ClassFilter::Complex}) {
        const auto rep = equidistribution_report(records, f, {}, 3);
        if (!rep.defined) return fail(name, std::string(to_string(f)) + " empty at n=" + std::to_string(n));
        const double d = rep.cylinder_discrepancy.get_d();
        double& prev = f == ClassFilter::Real ? prev_real : prev_complex;
        if (d > prev + 1e-3) return fail(name, "increase at n=" + std::to_string(n));
        prev = d;
        detail << to_string(f) << "(" << n << ")=" << format_double(d) << ' ';
      }
    }
    return pass(name, detail.str());
  });
  return checks;
}

std::vector<Check> theorem_d_checks(Dimension dim) {
  std::vector<Check> checks;
  checks.push_back([=] {
    const std::string name = "cylinder correlations vanish once n >= |u|";
    for (std::size_t lu = 1; lu <= 4; ++lu)
      for (std::size_t lv = 1; lv <= 4; ++lv)
        for (const Word& u : all_words(lu))
          for (const Word& v : all_words(lv)) {
            const auto series = mixing_correlation(u, v, lu + 2);
            for (std::size_t n = lu; n < series.size(); ++n) {
              if (series[n].second != 0) return fail(name, u.str() + "/" + v.str());
            }
          }
    return pass(name, "|u|, |v| <= 4");
  });
  checks.push_back([=] {
    const std::string name = "symbolic intersection measure matches rectangle geometry";
    for (std::size_t lu = 1; lu <= 3; ++lu)
      for (std::size_t lv = 1; lv <= 3; ++lv)
        for (const Word& u : all_words(lu))
          for (const Word& v : all_words(lv))
            for (std::size_t n = 0; n <= 4; ++n) {
              if (intersection_measure(u, n, v) != intersection_measure_geometric(u, n, v, dim)) {
                return fail(name, u.str() + "/" + v.str() + " n=" + std::to_string(n));
              }
            }
    return pass(name, "|u|, |v| <= 3, n <= 4");
  });
  return checks;
}

}  // namespace

bool is_suite(const std::string& name) {
  return name == "lemmas" || name == "theoremA" || name == "theoremB" || name == "theoremC" ||
         name == "theoremD" || name == "all";
}

std::vector<CheckResult> run_suite(const std::string& suite, Dimension dim, std::size_t max_period,
                                   unsigned workers, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<Check> checks;
  auto add = [&](std::vector<Check> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  const bool all = suite == "all";
  if (all || suite == "lemmas") add(lemma_checks(dim, max_period, workers));
  if (all || suite == "theoremA") add(theorem_a_checks(dim, max_period, workers));
  if (all || suite == "theoremB") add(theorem_b_checks(dim, out));
  if (all || suite == "theoremC") add(theorem_c_checks(dim, max_period, workers));
  if (all || suite == "theoremD") add(theorem_d_checks(dim));

  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = fail("check raised", e.what());
    }
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
    results.push_back(std::move(r));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out << "wall time " << format_double(secs) << " s\n";
  return results;
}

}  // namespace twistbaker::cli
