#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistbaker/counting.hpp"
#include "twistbaker/periodic.hpp"
#include "twistbaker/statistics.hpp"
#include "twistbaker/symbolic.hpp"

namespace twistbaker {

using Json = nlohmann::ordered_json;

// {word, intervals: [{lo, hi, lo_closed, hi_closed}], measure}
Json to_json(const BasicRectangle& rect);
// {word, point, twist, prime_period, eigen_class, chi_log2}
Json to_json(const PeriodicPointRecord& rec);
Json to_json(const ResidueCountReport& rep);
Json to_json(const EquidistributionReport& rep);
Json to_json(const BirkhoffReport& rep);
Json to_json(const TheoremBTerm& term);
Json mixing_to_json(const Word& u, const Word& v,
                    const std::vector<std::pair<std::size_t, Rational>>& series);

// Point coordinates are joined with ';' inside one column.
void write_records_csv(std::ostream& os, const std::vector<PeriodicPointRecord>& records);
// n,m,r,count,ratio,bound
void write_residue_csv(std::ostream& os, const ResidueCountReport& rep);
// n,class,observable,average,exact_mean,deviation
void write_equidistribution_csv(std::ostream& os, const EquidistributionReport& rep);
// n,correlation
void write_mixing_csv(std::ostream& os, const std::vector<std::pair<std::size_t, Rational>>& series);
// steps,observable,average,exact_mean,deviation
void write_birkhoff_csv(std::ostream& os, const BirkhoffReport& rep);
// j,word_length,chi_log2,bound_log2
void write_theorem_b_csv(std::ostream& os, const std::vector<TheoremBTerm>& terms);

// x1 in [-1,1] spans the width, x2 in [0,1] the height with the y axis
// pointing up. Rectangles sharing their last `color_suffix` symbols share a
// fill; 0 draws every rectangle in one color.
std::string rectangles_svg(const std::vector<BasicRectangle>& rects, std::size_t color_suffix);

// Fill color for a suffix index; the 8-entry palette is used for k <= 3.
std::string suffix_color(std::size_t index, std::size_t suffix_length);

std::string format_double(double v);

}  // namespace twistbaker
