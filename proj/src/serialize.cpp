#include "twistbaker/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace twistbaker {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

Json rationals_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_fraction_string(v));
  return arr;
}

Json observables_json(const std::vector<ObservableResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json o;
    o["observable"] = r.name;
    o["average"] = to_fraction_string(r.average);
    o["average_approx"] = r.average.get_d();
    o["exact_mean"] = r.exact_mean ? Json(to_fraction_string(*r.exact_mean)) : Json(nullptr);
    o["deviation"] = r.deviation ? Json(*r.deviation) : Json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr;
}

void observable_csv_row(std::ostream& os, const ObservableResult& r) {
  os << r.name << ',' << to_fraction_string(r.average) << ','
     << (r.exact_mean ? to_fraction_string(*r.exact_mean) : "") << ','
     << (r.deviation ? format_double(*r.deviation) : "") << '\n';
}

}  // namespace

Json to_json(const BasicRectangle& rect) {
  Json j;
  j["word"] = rect.word.str();
  Json ivs = Json::array();
  for (const auto& iv : rect.intervals) {
    ivs.push_back(Json{{"lo", to_fraction_string(iv.lo)},
                       {"hi", to_fraction_string(iv.hi)},
                       {"lo_closed", iv.lo_closed},
                       {"hi_closed", iv.hi_closed}});
  }
  j["intervals"] = std::move(ivs);
  j["measure"] = to_fraction_string(rect.normalized_measure());
  return j;
}

Json to_json(const PeriodicPointRecord& rec) {
  Json j;
  j["word"] = rec.word.str();
  j["point"] = rationals_json(rec.point.coords());
  j["twist"] = rec.twist;
  j["prime_period"] = rec.prime_period;
  j["eigen_class"] = to_string(rec.eigen_class);
  j["chi_log2"] = to_fraction_string(rec.chi_log2);
  return j;
}

Json to_json(const ResidueCountReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["total"] = rep.total.get_str();
  Json rows = Json::array();
  for (const auto& [r, count] : rep.per_residue) {
    rows.push_back(Json{{"r", r},
                        {"count", count.get_str()},
                        {"ratio", to_fraction_string(rep.ratio.at(r))},
                        {"ratio_approx", rep.ratio.at(r).get_d()}});
  }
  j["per_residue"] = std::move(rows);
  j["bound"] = rep.bound;
  j["tolerance"] = rep.tolerance;
  j["max_deviation"] = rep.max_deviation;
  return j;
}

Json to_json(const EquidistributionReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["class"] = to_string(rep.filter);
  j["defined"] = rep.defined;
  j["count"] = rep.count;
  if (!rep.defined) {
    j["message"] = "class empty at this period";
    return j;
  }
  j["observables"] = observables_json(rep.observables);
  j["cylinder_depth"] = rep.cylinder_depth;
  j["cylinder_discrepancy"] = to_fraction_string(rep.cylinder_discrepancy);
  j["cylinder_discrepancy_approx"] = rep.cylinder_discrepancy.get_d();
  j["worst_word"] = rep.worst_word.str();
  return j;
}

Json to_json(const BirkhoffReport& rep) {
  Json j;
  j["steps"] = rep.steps;
  j["observables"] = observables_json(rep.observables);
  j["r_frequency"] = to_fraction_string(rep.r_frequency);
  j["r_frequency_approx"] = rep.r_frequency.get_d();
  return j;
}

Json to_json(const TheoremBTerm& term) {
  return Json{{"j", term.j},
              {"word_length", term.word.size()},
              {"chi_log2", to_fraction_string(term.chi_log2)},
              {"chi_log2_approx", term.chi_log2.get_d()},
              {"bound_log2", to_fraction_string(term.bound_log2)},
              {"bound_log2_approx", term.bound_log2.get_d()}};
}

Json mixing_to_json(const Word& u, const Word& v,
                    const std::vector<std::pair<std::size_t, Rational>>& series) {
  Json j;
  j["u"] = u.str();
  j["v"] = v.str();
  Json rows = Json::array();
  for (const auto& [n, c] : series) rows.push_back(Json{{"n", n}, {"correlation", to_fraction_string(c)}});
  j["series"] = std::move(rows);
  return j;
}

void write_records_csv(std::ostream& os, const std::vector<PeriodicPointRecord>& records) {
  os << "word,point,twist,prime_period,eigen_class,chi_log2\n";
  for (const auto& r : records) {
    os << r.word.str() << ',';
    for (std::size_t i = 0; i < r.point.size(); ++i) {
      if (i) os << ';';
      os << to_fraction_string(r.point[i]);
    }
    os << ',' << r.twist << ',' << r.prime_period << ',' << to_string(r.eigen_class) << ','
       << to_fraction_string(r.chi_log2) << '\n';
  }
}

void write_residue_csv(std::ostream& os, const ResidueCountReport& rep) {
  os << "n,m,r,count,ratio,bound\n";
  for (const auto& [r, count] : rep.per_residue) {
    os << rep.n << ',' << rep.m << ',' << r << ',' << count.get_str() << ','
       << to_fraction_string(rep.ratio.at(r)) << ',' << format_double(rep.bound) << '\n';
  }
}

void write_equidistribution_csv(std::ostream& os, const EquidistributionReport& rep) {
  os << "n,class,observable,average,exact_mean,deviation\n";
  if (!rep.defined) return;
  for (const auto& r : rep.observables) {
    os << rep.n << ',' << to_string(rep.filter) << ',';
    observable_csv_row(os, r);
  }
  os << rep.n << ',' << to_string(rep.filter) << ",cylinder_discrepancy(depth=" << rep.cylinder_depth
     << "),,," << format_double(rep.cylinder_discrepancy.get_d()) << '\n';
}

void write_mixing_csv(std::ostream& os, const std::vector<std::pair<std::size_t, Rational>>& series) {
  os << "n,correlation\n";
  for (const auto& [n, c] : series) os << n << ',' << to_fraction_string(c) << '\n';
}

void write_birkhoff_csv(std::ostream& os, const BirkhoffReport& rep) {
  os << "steps,observable,average,exact_mean,deviation\n";
  for (const auto& r : rep.observables) {
    os << rep.steps << ',';
    observable_csv_row(os, r);
  }
  os << rep.steps << ",r_frequency," << to_fraction_string(rep.r_frequency) << ",1/2,"
     << format_double(std::fabs(rep.r_frequency.get_d() - 0.5)) << '\n';
}

void write_theorem_b_csv(std::ostream& os, const std::vector<TheoremBTerm>& terms) {
  os << "j,word_length,chi_log2,bound_log2\n";
  for (const auto& t : terms) {
    os << t.j << ',' << t.word.size() << ',' << to_fraction_string(t.chi_log2) << ','
       << to_fraction_string(t.bound_log2) << '\n';
  }
}

std::string suffix_color(std::size_t index, std::size_t suffix_length) {
  static const char* const kPalette[8] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                          "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  if (suffix_length <= 3) return kPalette[index % 8];
  // Spread 2^k hues evenly around the color wheel.
  const double count = std::ldexp(1.0, static_cast<int>(suffix_length));
  const double hue = 360.0 * static_cast<double>(index) / count;
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.3f,65%%,55%%)", hue);
  return buf;
}

std::string rectangles_svg(const std::vector<BasicRectangle>& rects, std::size_t color_suffix) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 400.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  for (const auto& r : rects) {
    const double x0 = (r.intervals[0].lo.get_d() + 1.0) / 2.0 * kWidth;
    const double x1 = (r.intervals[0].hi.get_d() + 1.0) / 2.0 * kWidth;
    const double y0 = (1.0 - r.intervals[1].hi.get_d()) * kHeight;
    const double y1 = (1.0 - r.intervals[1].lo.get_d()) * kHeight;
    std::string fill = "#cccccc";
    if (color_suffix > 0) {
      const std::size_t k = std::min(color_suffix, r.word.size());
      std::size_t idx = 0;
      for (std::size_t i = r.word.size() - k; i < r.word.size(); ++i)
        idx = (idx << 1) | (r.word[i] == Symbol::R ? 1U : 0U);
      fill = suffix_color(idx, color_suffix);
    }
    os << "  <rect data-word=\"" << r.word.str() << "\" x=\"" << format_double(x0) << "\" y=\""
       << format_double(y0) << "\" width=\"" << format_double(x1 - x0) << "\" height=\""
       << format_double(y1 - y0) << "\" fill=\"" << fill
       << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace twistbaker
