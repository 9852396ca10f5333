#include "pairflip/serialize.hpp"

namespace pairflip {

using nlohmann::json;

namespace {

json triple_json(const TripleInvariants& t) {
  return {{"r1", t.r1}, {"r2", t.r2}, {"d1", t.d1}, {"d2", t.d2}};
}

json subobject_json(const Subobject& s) {
  return {{"kind", to_string(s.kind)},
          {"invariants", triple_json(s.inv)},
          {"slope", s.slope.str()}};
}

json row_json(const DiscrepancyRow& r) {
  return {{"j", r.j},
          {"codim", r.codim},
          {"mult_F", r.mult_f},
          {"coeff", r.coeff.str()}};
}

}  // namespace

json div_class_json(const DivClass& c) {
  return {{"H", c.h.str()}, {"E", c.e.str()}};
}

json tower_json(const TowerReport& report) {
  json walls = json::array();
  for (const auto& w : report.walls) {
    walls.push_back({{"c", w.c},
                     {"n", w.n},
                     {"locus_dim", w.locus_dim},
                     {"fminus_fiber_dim", w.fminus_fiber_dim},
                     {"fplus_fiber_dim", w.fplus_fiber_dim},
                     {"fminus_exc_dim", w.fminus_exc_dim},
                     {"fplus_exc_dim", w.fplus_exc_dim},
                     {"divisorial", w.divisorial},
                     {"contracted_class", div_class_json(w.contracted_class)}});
  }
  json spaces = json::array();
  for (const auto& s : report.spaces) {
    spaces.push_back({{"index", s.index},
                      {"chamber", {s.chamber_lo.str(), s.chamber_hi.str()}},
                      {"dim", s.dim},
                      {"empty", s.empty}});
  }
  return {{"schema", kSchema},
          {"kind", "tower"},
          {"genus", report.g},
          {"degree", report.d},
          {"ambient_dim", report.ambient_dim},
          {"walls", walls},
          {"spaces", spaces},
          {"final_target",
           {{"label", report.final_target.label},
            {"dim", report.final_target.dim},
            {"contraction", report.final_target.contraction},
            {"series", div_class_json(report.final_target.series)}}}};
}

json classify_json(const PairInvariants& p, const Rational& sigma,
                   const StabilityVerdict& verdict) {
  json out{{"schema", kSchema},
           {"kind", "classify"},
           {"degree", p.d},
           {"zeros", p.a},
           {"maxsub", p.b},
           {"sigma", sigma.str()},
           {"status", to_string(verdict.status)}};
  out["wall"] = verdict.wall ? json(*verdict.wall) : json(nullptr);
  out["destabilizer"] =
      verdict.destabilizer ? subobject_json(*verdict.destabilizer) : json(nullptr);
  out["jh_graded"] =
      verdict.jh_graded ? json(verdict.jh_graded->str()) : json(nullptr);
  return out;
}

json slope_json(const PairInvariants& p, const Rational& sigma) {
  json subs = json::array();
  const TripleInvariants section{1, 1, 0, p.a};
  const TripleInvariants line{0, 1, 0, p.b};
  const TripleInvariants full{0, 2, 0, p.d};
  for (const auto& [kind, inv] :
       {std::pair{SubobjectKind::SectionLine, section},
        std::pair{SubobjectKind::PlainLine, line},
        std::pair{SubobjectKind::FullBundle, full}}) {
    subs.push_back({{"kind", to_string(kind)},
                    {"invariants", triple_json(inv)},
                    {"slope", mu_sigma(inv, sigma).str()}});
  }
  return {{"schema", kSchema},
          {"kind", "slope"},
          {"degree", p.d},
          {"zeros", p.a},
          {"maxsub", p.b},
          {"sigma", sigma.str()},
          {"pair_slope", mu_sigma(p.triple(), sigma).str()},
          {"subobjects", subs}};
}

json certificate_json(const FlipCertificate& cert) {
  json rows = json::array();
  for (const auto& r : cert.lc_rows) rows.push_back(row_json(r));
  return {{"schema", kSchema},
          {"kind", "flip"},
          {"genus", cert.g},
          {"degree", cert.d},
          {"wall", cert.k},
          {"lambda", cert.lambda.str()},
          {"B_pairing", cert.b_pairing.str()},
          {"Bplus_pairing", cert.bplus_pairing.str()},
          {"lc_threshold", cert.threshold.str()},
          {"lc_rows", rows},
          {"checks",
           {{"B_negative", cert.b_negative},
            {"Bplus_positive", cert.bplus_positive},
            {"lc_ok", cert.lc_ok}}},
          {"certified", cert.certified}};
}

json threshold_json(int g, int d, int k, const Rational& threshold) {
  return {{"schema", kSchema},
          {"kind", "lct"},
          {"genus", g},
          {"degree", d},
          {"wall", k},
          {"threshold", threshold.str()}};
}

json discrepancy_json(int g, int d, const Rational& lambda,
                      const std::vector<DiscrepancyRow>& rows) {
  json body = json::array();
  for (const auto& r : rows) body.push_back(row_json(r));
  return {{"schema", kSchema},
          {"kind", "disc"},
          {"genus", g},
          {"degree", d},
          {"lambda", lambda.str()},
          {"rows", body}};
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json point_json(const ProjPoint& p) {
  json out = json::array();
  for (const auto& c : p.coords) out.push_back(c.str());
  return out;
}

}  // namespace pairflip
