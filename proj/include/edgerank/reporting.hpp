#pragma once

#include <string>

#include <json.hpp>

#include "edgerank/axioms.hpp"
#include "edgerank/centrality.hpp"

namespace edgerank {

/// {"measure":..., "params":..., "values":{edge: number|"undefined"}}
nlohmann::json scores_to_json(const std::string& measure, const nlohmann::json& params,
                              const EdgeScores& scores,
                              const std::map<EdgeId, double>* std_error = nullptr);

/// edge_id,value rows sorted by label; full precision.
std::string scores_to_csv(const EdgeScores& scores);

/// Aligned two-column table rounded to 2 decimals.
std::string scores_to_table(const EdgeScores& scores);

nlohmann::json check_result_to_json(const AxiomCheckResult& result);

/// Full report of one falsification run:
/// {measure, axiom, status, trials, discrepancy, witness:{graph, params, diffs}}
nlohmann::json check_report_to_json(const MeasureSpec& spec, Axiom axiom,
                                    const FalsifyOutcome& outcome);
std::string check_report_to_line(const MeasureSpec& spec, Axiom axiom,
                                 const FalsifyOutcome& outcome);

nlohmann::json matrix_to_json(const SatisfactionMatrix& matrix);
std::string matrix_to_table(const SatisfactionMatrix& matrix);

}  // namespace edgerank
