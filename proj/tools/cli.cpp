#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "twistbaker/counting.hpp"
#include "twistbaker/errors.hpp"
#include "twistbaker/periodic.hpp"
#include "twistbaker/serialize.hpp"
#include "twistbaker/statistics.hpp"
#include "twistbaker/symbolic.hpp"
#include "verify.hpp"

namespace twistbaker::cli {

namespace {

constexpr std::size_t kMaxDepth = 16;

struct Common {
  int dim = 2;
  std::string format = "json";
  std::string out_path;
  unsigned workers = 0;
  std::size_t max_period = 0;
};

ClassFilter parse_class(const std::string& s) {
  if (s == "real") return ClassFilter::Real;
  if (s == "complex") return ClassFilter::Complex;
  return ClassFilter::All;
}

std::vector<Observable> coordinate_observables(Dimension dim) {
  std::vector<Observable> obs;
  for (std::size_t j = 0; j < dim.size(); ++j) obs.push_back(Observable::coordinate(j));
  return obs;
}

Point parse_seed(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_rational(part));
  return Point(std::move(coords));
}

EnumerateOptions enum_options(const Common& c) {
  EnumerateOptions opt;
  opt.workers = c.workers;
  opt.max_period = c.max_period;
  return opt;
}

void add_format(CLI::App* sub, Common& c, std::vector<std::string> allowed) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(allowed)));
  sub->add_option("--out", c.out_path, "write to this file instead of stdout");
}

void add_dim(CLI::App* sub, Common& c) {
  sub->add_option("--dim", c.dim, "dimension M")->check(CLI::Range(2, 64));
}

void add_enumeration(CLI::App* sub, Common& c) {
  sub->add_option("--workers", c.workers, "worker threads, 0 for one per core")
      ->envname("TWISTBAKER_WORKERS");
  sub->add_option("--max-period", c.max_period, "enumeration cap, 0 for the default")
      ->envname("TWISTBAKER_MAX_PERIOD");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the twisted baker map", "twistbaker"};
  app.require_subcommand(1);

  Common c;
  std::size_t period = 1;
  std::size_t depth = 1;
  std::size_t color_suffix = 0;
  std::size_t cylinder_depth = 3;
  std::size_t n_max = 8;
  std::size_t steps = 100000;
  std::size_t count = 4;
  std::string class_name = "all";
  std::string suite;
  std::string u_text;
  std::string v_text;
  std::string seed_text;
  std::vector<long> p_values;

  auto* enumerate = app.add_subcommand("enumerate", "periodic points of a given period");
  add_dim(enumerate, c);
  enumerate->add_option("--period", period)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--class", class_name)->check(CLI::IsMember({"real", "complex", "all"}));
  add_format(enumerate, c, {"json", "csv"});
  add_enumeration(enumerate, c);

  auto* count_cmd = app.add_subcommand("count", "fixed-point counts by twist residue");
  add_dim(count_cmd, c);
  count_cmd->add_option("--period", period)->required()->check(CLI::Range(1, 100000));
  add_format(count_cmd, c, {"json", "csv"});

  auto* rectangles = app.add_subcommand("rectangles", "basic rectangles of a given depth");
  add_dim(rectangles, c);
  rectangles->add_option("--depth", depth)->required()->check(CLI::PositiveNumber);
  rectangles->add_option("--color-suffix", color_suffix, "color by the last k symbols");
  add_format(rectangles, c, {"json", "svg"});

  auto* equidist = app.add_subcommand("equidist", "periodic-point averages by eigenvalue class");
  add_dim(equidist, c);
  equidist->add_option("--period", period)->required()->check(CLI::PositiveNumber);
  equidist->add_option("--class", class_name)->check(CLI::IsMember({"real", "complex", "all"}));
  equidist->add_option("--cylinder-depth", cylinder_depth);
  add_format(equidist, c, {"json", "csv"});
  add_enumeration(equidist, c);

  auto* mixing = app.add_subcommand("mixing", "cylinder correlations");
  mixing->add_option("--u", u_text)->required();
  mixing->add_option("--v", v_text)->required();
  mixing->add_option("--n-max", n_max);
  add_format(mixing, c, {"json", "csv"});

  auto* orbit = app.add_subcommand("orbit", "exact Birkhoff averages along one orbit");
  add_dim(orbit, c);
  orbit->add_option("--seed", seed_text, "comma separated coordinates, e.g. 2/7,3/7")->required();
  orbit->add_option("--steps", steps)->check(CLI::Range(std::size_t{1}, std::size_t{10000000}));
  add_format(orbit, c, {"json", "csv"});

  auto* chi_seq = app.add_subcommand("chi-sequence", "expansion rates along biased words");
  add_dim(chi_seq, c);
  chi_seq->add_option("--count", count)->check(CLI::PositiveNumber);
  chi_seq->add_option("--p", p_values, "block lengths p_1, p_2, ...")->delimiter(',');
  add_format(chi_seq, c, {"json", "csv"});

  auto* verify = app.add_subcommand("verify", "run a property suite");
  add_dim(verify, c);
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "theoremA", "theoremB", "theoremC", "theoremD", "all"}));
  add_enumeration(verify, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  std::ostringstream buffer;
  try {
    const Dimension dim(c.dim);
    const ClassFilter filter = parse_class(class_name);

    if (enumerate->parsed()) {
      const auto all = enumerate_fix(period, dim, enum_options(c));
      std::vector<PeriodicPointRecord> rows;
      std::copy_if(all.begin(), all.end(), std::back_inserter(rows),
                   [&](const PeriodicPointRecord& r) { return matches(filter, r.eigen_class); });
      if (rows.empty()) err << "warning: class empty at this period\n";
      if (c.format == "csv") {
        write_records_csv(buffer, rows);
      } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        buffer << arr.dump(2) << '\n';
      }
    } else if (count_cmd->parsed()) {
      const auto rep = proportion_report(static_cast<unsigned>(period), static_cast<unsigned>(dim.size()));
      if (c.format == "csv") {
        write_residue_csv(buffer, rep);
      } else {
        buffer << to_json(rep).dump(2) << '\n';
      }
    } else if (rectangles->parsed()) {
      if (c.format == "svg" && dim.value() != 2) {
        err << "error: svg output needs --dim 2\n";
        return kUsage;
      }
      if (depth > kMaxDepth) {
        err << "error: depth " << depth << " exceeds the cap " << kMaxDepth << '\n';
        return kResource;
      }
      std::vector<BasicRectangle> rects;
      for (const Word& w : all_words(depth)) rects.push_back(rectangle(w, dim));
      if (c.format == "svg") {
        buffer << rectangles_svg(rects, color_suffix);
      } else {
        Json arr = Json::array();
        for (const auto& r : rects) arr.push_back(to_json(r));
        buffer << arr.dump(2) << '\n';
      }
    } else if (equidist->parsed()) {
      const auto rep = equidistribution_report(period, dim, filter, coordinate_observables(dim),
                                               cylinder_depth, enum_options(c));
      if (!rep.defined) err << "warning: class empty at this period\n";
      if (c.format == "csv") {
        write_equidistribution_csv(buffer, rep);
      } else {
        buffer << to_json(rep).dump(2) << '\n';
      }
    } else if (mixing->parsed()) {
      const Word u = Word::parse(u_text);
      const Word v = Word::parse(v_text);
      const auto series = mixing_correlation(u, v, n_max);
      if (c.format == "csv") {
        write_mixing_csv(buffer, series);
      } else {
        buffer << mixing_to_json(u, v, series).dump(2) << '\n';
      }
    } else if (orbit->parsed()) {
      const Point seed = parse_seed(seed_text);
      if (seed.size() != dim.size()) throw DomainError("seed has the wrong number of coordinates");
      const auto rep = birkhoff_average(seed, steps, coordinate_observables(dim));
      if (c.format == "csv") {
        write_birkhoff_csv(buffer, rep);
      } else {
        buffer << to_json(rep).dump(2) << '\n';
      }
    } else if (chi_seq->parsed()) {
      TheoremBConfig cfg;
      cfg.m = dim.value();
      cfg.p = p_values;
      const auto terms = theorem_b_sequence(cfg, count);
      if (c.format == "csv") {
        write_theorem_b_csv(buffer, terms);
      } else {
        Json arr = Json::array();
        for (const auto& t : terms) arr.push_back(to_json(t));
        buffer << arr.dump(2) << '\n';
      }
    } else if (verify->parsed()) {
      const std::size_t top = c.max_period ? c.max_period : default_period_cap(dim);
      const auto results = run_suite(suite, dim, top, c.workers, buffer);
      const bool ok = std::all_of(results.begin(), results.end(),
                                  [](const CheckResult& r) { return r.passed; });
      out << buffer.str();
      return ok ? kOk : kInvariant;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << c.out_path << '\n';
      return kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return kOk;
}

}  // namespace twistbaker::cli
