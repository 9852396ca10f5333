#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "pairflip/catalecticant.hpp"
#include "pairflip/divisor_calculus.hpp"
#include "pairflip/pair_stability.hpp"
#include "pairflip/wall_tower.hpp"

namespace pairflip {

// Every document carries schema = "pairflip/1"; rationals are "p/q"
// strings so they survive round trips exactly.
inline constexpr const char* kSchema = "pairflip/1";

nlohmann::json div_class_json(const DivClass& c);
nlohmann::json tower_json(const TowerReport& report);
nlohmann::json classify_json(const PairInvariants& p, const Rational& sigma,
                             const StabilityVerdict& verdict);
nlohmann::json slope_json(const PairInvariants& p, const Rational& sigma);
nlohmann::json certificate_json(const FlipCertificate& cert);
nlohmann::json threshold_json(int g, int d, int k, const Rational& threshold);
nlohmann::json discrepancy_json(int g, int d, const Rational& lambda,
                                const std::vector<DiscrepancyRow>& rows);
nlohmann::json matrix_json(const RatMatrix& m);
nlohmann::json point_json(const ProjPoint& p);

}  // namespace pairflip
