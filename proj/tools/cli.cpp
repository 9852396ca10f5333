#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "pairflip/catalecticant.hpp"
#include "pairflip/divisor_calculus.hpp"
#include "pairflip/errors.hpp"
#include "pairflip/pair_stability.hpp"
#include "pairflip/sampler.hpp"
#include "pairflip/serialize.hpp"
#include "pairflip/wall_tower.hpp"

namespace pairflip::cli {

namespace {

using nlohmann::json;

std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& what) {
  std::vector<std::string> items;
  if (!text.empty() && text.front() == '[') {
    const json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw ParseError(what + ": not a JSON array");
    for (const auto& el : j) {
      if (el.is_string())
        items.push_back(el.get<std::string>());
      else if (el.is_number_integer())
        items.push_back(std::to_string(el.get<long long>()));
      else
        throw ParseError(what + ": array entries must be rational strings");
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(item);
  }
  if (items.empty()) throw ParseError(what + ": empty list");
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(Rational::parse(s));
  return out;
}

// Witness input: --secant t1,t2 --coeffs c1,c2, JSON arrays, or a single
// JSON object {"t": [...], "coeffs": [...]} passed to --secant.
SecantWitness witness_from_flags(const std::string& secant,
                                 const std::string& coeffs) {
  SecantWitness w;
  if (!secant.empty() && secant.front() == '{') {
    if (!coeffs.empty())
      throw ParseError("--coeffs conflicts with a JSON witness object");
    const json j = json::parse(secant, nullptr, false);
    if (j.is_discarded() || !j.contains("t") || !j.contains("coeffs"))
      throw ParseError("witness object needs \"t\" and \"coeffs\"");
    w.params = parse_rational_list(j["t"].dump(), "witness t");
    w.coeffs = parse_rational_list(j["coeffs"].dump(), "witness coeffs");
  } else {
    w.params = parse_rational_list(secant, "--secant");
    if (coeffs.empty())
      w.coeffs.assign(w.params.size(), Rational(1));
    else
      w.coeffs = parse_rational_list(coeffs, "--coeffs");
  }
  w.validate();
  return w;
}

ProjPoint resolve_point(int degree, const std::string& secant,
                        const std::string& coeffs, std::uint64_t seed) {
  if (secant.empty()) {
    Sampler sampler(seed);
    return random_point(degree, sampler);
  }
  return secant_point(degree, witness_from_flags(secant, coeffs));
}

void print_matrix(std::ostream& out, const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m(i, j).str();
    }
    out << "\n";
  }
}

void print_rows(std::ostream& out, const std::vector<DiscrepancyRow>& rows) {
  out << "rows (j, codim, mult_F, coeff):\n";
  for (const auto& r : rows)
    out << "  " << r.j << "  " << r.codim << "  " << r.mult_f << "  "
        << r.coeff.str() << "\n";
}

struct Options {
  int genus = 0;
  int degree = 0;
  int wall = 0;
  int zeros = 0;
  int maxsub = 0;
  int rows = 0;
  int probes = 5;
  std::uint64_t seed = kDefaultSeed;
  std::string sigma;
  std::string lambda;
  std::string cols;
  std::string secant;
  std::string coeffs;
  std::string action = "matrix";
  bool as_json = false;
};

void emit(std::ostream& out, bool as_json, const json& doc,
          const std::function<void()>& text) {
  if (as_json)
    out << doc.dump(2) << "\n";
  else
    text();
}

void run_tower(const Options& opt, std::ostream& out) {
  const TowerReport report = tower(opt.genus, opt.degree);
  emit(out, opt.as_json, tower_json(report), [&] {
    out << "tower: genus " << report.g << ", degree " << report.d << "\n";
    out << "ambient projective dimension: " << report.ambient_dim << "\n";
    out << "spaces:\n";
    for (const auto& s : report.spaces) {
      out << "  X_" << s.index << "  chamber (" << s.chamber_lo.str() << ", "
          << s.chamber_hi.str() << ")";
      if (s.empty)
        out << "  empty\n";
      else
        out << "  dim " << s.dim << "\n";
    }
    out << "walls:\n";
    for (const auto& w : report.walls) {
      out << "  c = " << w.c << "  n = " << w.n << "  locus dim "
          << w.locus_dim << "  f- fiber " << w.fminus_fiber_dim << " (exc "
          << w.fminus_exc_dim << ")  f+ fiber " << w.fplus_fiber_dim
          << " (exc " << w.fplus_exc_dim << ")"
          << (w.divisorial ? "  divisorial" : "") << "  series |"
          << w.contracted_class.str() << "|\n";
    }
    const FinalTarget& fin = report.final_target;
    out << "final: " << fin.label << "  dim " << fin.dim
        << (fin.contraction ? "  contraction" : "  not a contraction")
        << "  series |" << fin.series.str() << "|\n";
  });
}

void run_classify(const Options& opt, std::ostream& out) {
  const PairInvariants p{opt.degree, opt.zeros, opt.maxsub};
  const Rational sigma = Rational::parse(opt.sigma);
  const StabilityVerdict v = classify_pair(p, sigma);
  json doc = classify_json(p, sigma, v);
  std::optional<Chamber> chamber;
  // Skip the lookup on critical values, where no chamber contains sigma;
  // the verdict itself carries a wall index only when semistability is
  // strict there.
  const bool critical = sigma.is_integer() &&
                        (p.d - sigma.to_long()) % 2 == 0;
  if (sigma.sign() > 0 && sigma < Rational(p.d) && !critical)
    chamber = chamber_of(sigma, p.d);
  if (chamber)
    doc["chamber"] = {{"lo", chamber->lo.str()},
                      {"hi", chamber->hi.str()},
                      {"index", chamber->index}};
  else
    doc["chamber"] = nullptr;
  emit(out, opt.as_json, doc, [&] {
    out << "pair (d=" << p.d << ", a=" << p.a << ", b=" << p.b
        << ") at sigma = " << sigma.str() << ": " << to_string(v.status)
        << "\n";
    if (v.wall) out << "wall: n = " << *v.wall << "\n";
    if (v.destabilizer)
      out << "destabilizer: " << to_string(v.destabilizer->kind) << " (slope "
          << v.destabilizer->slope.str() << ")\n";
    if (v.jh_graded) out << "jh graded: " << v.jh_graded->str() << "\n";
    if (chamber)
      out << "chamber: (" << chamber->lo.str() << ", " << chamber->hi.str()
          << "), X-index " << chamber->index << "\n";
  });
}

void run_slope(const Options& opt, std::ostream& out) {
  const PairInvariants p{opt.degree, opt.zeros, opt.maxsub};
  p.validate();
  const Rational sigma = Rational::parse(opt.sigma);
  emit(out, opt.as_json, slope_json(p, sigma), [&] {
    out << "pair slope: " << mu_sigma(p.triple(), sigma).str() << "\n";
    out << "section line (1,1,0," << p.a
        << "): " << mu_sigma({1, 1, 0, p.a}, sigma).str() << "\n";
    out << "plain line (0,1,0," << p.b
        << "): " << mu_sigma({0, 1, 0, p.b}, sigma).str() << "\n";
    out << "full bundle (0,2,0," << p.d
        << "): " << mu_sigma({0, 2, 0, p.d}, sigma).str() << "\n";
  });
}

void run_flip(const Options& opt, std::ostream& out) {
  const FlipCertificate cert =
      opt.lambda.empty()
          ? certify_log_flip(opt.genus, opt.degree, opt.wall)
          : certify_log_flip(opt.genus, opt.degree, opt.wall,
                             Rational::parse(opt.lambda));
  emit(out, opt.as_json, certificate_json(cert), [&] {
    out << "flip certificate: genus " << cert.g << ", degree " << cert.d
        << ", wall k = " << cert.k << "\n";
    out << "lambda = " << cert.lambda.str() << " (lc threshold "
        << cert.threshold.str() << ")\n";
    out << "B pairing = " << cert.b_pairing.str()
        << "   B+ pairing = " << cert.bplus_pairing.str() << "\n";
    print_rows(out, cert.lc_rows);
    out << "certified: " << (cert.certified ? "yes" : "no") << "\n";
  });
}

void run_lct(const Options& opt, std::ostream& out) {
  const Rational t = lc_threshold(opt.genus, opt.degree, opt.wall);
  emit(out, opt.as_json, threshold_json(opt.genus, opt.degree, opt.wall, t),
       [&] { out << t.str() << "\n"; });
}

void run_disc(const Options& opt, std::ostream& out) {
  const Rational lambda = Rational::parse(opt.lambda);
  const int j_lo = opt.wall > 0 ? opt.wall : 1;
  const auto rows =
      discrepancy_table(opt.genus, opt.degree, lambda, j_lo,
                        last_wall_index(opt.degree));
  emit(out, opt.as_json, discrepancy_json(opt.genus, opt.degree, lambda, rows),
       [&] { print_rows(out, rows); });
}

void run_hankel(const Options& opt, std::ostream& out) {
  const ProjPoint p =
      resolve_point(opt.degree, opt.secant, opt.coeffs, opt.seed);
  const RatMatrix m = hankel_matrix(opt.degree, opt.rows, p);
  json doc{{"schema", kSchema},
           {"kind", "hankel"},
           {"degree", opt.degree},
           {"rows", opt.rows},
           {"point", point_json(p)}};
  if (opt.action == "rank") {
    const int r = rank(m);
    doc["rank"] = r;
    emit(out, opt.as_json, doc, [&] { out << r << "\n"; });
  } else {
    doc["matrix"] = matrix_json(m);
    emit(out, opt.as_json, doc, [&] { print_matrix(out, m); });
  }
}

void run_split(const Options& opt, std::ostream& out) {
  const ProjPoint p =
      resolve_point(opt.degree, opt.secant, opt.coeffs, opt.seed);
  const SplittingType s = splitting_type(opt.degree, p);
  const json doc{{"schema", kSchema},
                 {"kind", "split"},
                 {"degree", opt.degree},
                 {"point", point_json(p)},
                 {"type", {s.m, s.complement}}};
  emit(out, opt.as_json, doc,
       [&] { out << "(" << s.m << ", " << s.complement << ")\n"; });
}

std::vector<std::vector<int>> all_column_choices(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  const std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int c = from; c <= d - k; ++c) {
      pick[static_cast<std::size_t>(depth)] = c;
      rec(c + 1, depth + 1);
    }
  };
  rec(1, 0);
  return out;
}

void run_multiplicity(const Options& opt, std::ostream& out) {
  const ProjPoint p =
      resolve_point(opt.degree, opt.secant, opt.coeffs, opt.seed);
  std::vector<std::vector<int>> choices;
  if (opt.cols.empty()) {
    choices = all_column_choices(opt.degree, opt.rows);
  } else {
    std::vector<int> cols;
    for (const auto& r : parse_rational_list(opt.cols, "--cols"))
      cols.push_back(static_cast<int>(r.to_long()));
    choices.push_back(std::move(cols));
  }
  json orders = json::array();
  for (const auto& cols : choices) {
    const auto order = det_multiplicity(opt.degree, opt.rows, cols, p,
                                        opt.probes, opt.seed);
    orders.push_back(
        {{"cols", cols}, {"order", order ? json(*order) : json(nullptr)}});
  }
  const json doc{{"schema", kSchema},
                 {"kind", "multiplicity"},
                 {"degree", opt.degree},
                 {"rows", opt.rows},
                 {"probes", opt.probes},
                 {"seed", opt.seed},
                 {"point", point_json(p)},
                 {"orders", orders}};
  emit(out, opt.as_json, doc, [&] {
    for (const auto& entry : orders) {
      out << "cols ";
      const auto& cols = entry["cols"];
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out << ",";
        out << cols[i].get<int>();
      }
      out << ": ";
      if (entry["order"].is_null())
        out << "infinite\n";
      else
        out << entry["order"].get<int>() << "\n";
    }
  });
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wall-crossing tower, flip certificates and Hankel strata "
               "for rank-2 pairs on a curve"};
  app.require_subcommand(1);
  Options opt;

  const auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opt.as_json, "emit JSON instead of text");
  };
  const auto add_witness = [&](CLI::App* cmd) {
    cmd->add_option("--secant", opt.secant,
                    "witness parameters t1,t2,... (or JSON)");
    cmd->add_option("--coeffs", opt.coeffs,
                    "witness weights c1,c2,... (default all 1)");
    cmd->add_option("--seed", opt.seed, "sampler seed for random fallbacks");
  };

  CLI::App* tower_cmd = app.add_subcommand("tower", "wall-by-wall tower report");
  tower_cmd->add_option("--genus", opt.genus)->required();
  tower_cmd->add_option("--degree", opt.degree)->required();
  add_json(tower_cmd);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "stability verdict for a pair");
  classify_cmd->add_option("--degree", opt.degree)->required();
  classify_cmd->add_option("--zeros", opt.zeros)->required();
  classify_cmd->add_option("--maxsub", opt.maxsub)->required();
  classify_cmd->add_option("--sigma", opt.sigma)->required();
  add_json(classify_cmd);

  CLI::App* slope_cmd =
      app.add_subcommand("slope", "sigma-slopes of a pair and its subobjects");
  slope_cmd->add_option("--degree", opt.degree)->required();
  slope_cmd->add_option("--zeros", opt.zeros)->required();
  slope_cmd->add_option("--maxsub", opt.maxsub)->required();
  slope_cmd->add_option("--sigma", opt.sigma)->required();
  add_json(slope_cmd);

  CLI::App* flip_cmd =
      app.add_subcommand("flip", "certify one birational step as a log flip");
  flip_cmd->add_option("--genus", opt.genus)->required();
  flip_cmd->add_option("--degree", opt.degree)->required();
  flip_cmd->add_option("--wall", opt.wall)->required();
  flip_cmd->add_option("--lambda", opt.lambda,
                       "coefficient of F (default: lc threshold)");
  add_json(flip_cmd);

  CLI::App* lct_cmd =
      app.add_subcommand("lct", "log canonical threshold across a wall");
  lct_cmd->add_option("--genus", opt.genus)->required();
  lct_cmd->add_option("--degree", opt.degree)->required();
  lct_cmd->add_option("--wall", opt.wall)->required();
  add_json(lct_cmd);

  CLI::App* disc_cmd =
      app.add_subcommand("disc", "discrepancy rows of K + lambda F");
  disc_cmd->add_option("--genus", opt.genus)->required();
  disc_cmd->add_option("--degree", opt.degree)->required();
  disc_cmd->add_option("--lambda", opt.lambda)->required();
  disc_cmd->add_option("--wall", opt.wall, "first row j (default 1)");
  add_json(disc_cmd);

  CLI::App* hankel_cmd =
      app.add_subcommand("hankel", "Hankel slice of a point");
  hankel_cmd->add_option("--degree", opt.degree)->required();
  hankel_cmd->add_option("--rows", opt.rows)->required();
  hankel_cmd->add_option("action", opt.action, "matrix or rank")
      ->check(CLI::IsMember({"matrix", "rank"}));
  add_witness(hankel_cmd);
  add_json(hankel_cmd);

  CLI::App* split_cmd =
      app.add_subcommand("split", "splitting type of a point");
  split_cmd->add_option("--degree", opt.degree)->required();
  add_witness(split_cmd);
  add_json(split_cmd);

  CLI::App* mult_cmd = app.add_subcommand(
      "multiplicity", "vanishing order of Hankel minors along probes");
  mult_cmd->add_option("--degree", opt.degree)->required();
  mult_cmd->add_option("--rows", opt.rows)->required();
  mult_cmd->add_option("--cols", opt.cols,
                       "minor columns i1,i2,... (default: all)");
  mult_cmd->add_option("--probes", opt.probes, "random directions per minor");
  add_witness(mult_cmd);
  add_json(mult_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (tower_cmd->parsed()) run_tower(opt, out);
    else if (classify_cmd->parsed()) run_classify(opt, out);
    else if (slope_cmd->parsed()) run_slope(opt, out);
    else if (flip_cmd->parsed()) run_flip(opt, out);
    else if (lct_cmd->parsed()) run_lct(opt, out);
    else if (disc_cmd->parsed()) run_disc(opt, out);
    else if (hankel_cmd->parsed()) run_hankel(opt, out);
    else if (split_cmd->parsed()) run_split(opt, out);
    else if (mult_cmd->parsed()) run_multiplicity(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pairflip::cli
