#include "edgerank/reporting.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "edgerank/json_io.hpp"

namespace edgerank {

using nlohmann::json;

namespace {

json value_or_undefined(const std::optional<double>& v) {
    if (!v) return json("undefined");
    return json(*v);
}

std::string format2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

json scores_to_json(const std::string& measure, const json& params, const EdgeScores& scores,
                    const std::map<EdgeId, double>* std_error) {
    json values = json::object();
    for (const auto& [e, v] : scores.values) values[e] = value_or_undefined(v);
    json out{{"measure", measure}, {"params", params}, {"values", values}};
    if (std_error) {
        json errs = json::object();
        for (const auto& [e, v] : *std_error) errs[e] = v;
        out["std_error"] = errs;
    }
    return out;
}

std::string scores_to_csv(const EdgeScores& scores) {
    std::ostringstream out;
    out << "edge_id,value\n";
    out.precision(17);
    for (const auto& [e, v] : scores.values) {
        out << e << ',';
        if (v)
            out << *v;
        else
            out << "undefined";
        out << '\n';
    }
    return out.str();
}

std::string scores_to_table(const EdgeScores& scores) {
    size_t width = 0;
    for (const auto& [e, v] : scores.values) width = std::max(width, e.size());
    std::ostringstream out;
    for (const auto& [e, v] : scores.values) {
        out << e << std::string(width - e.size() + 2, ' ')
            << (v ? format2(*v) : "undefined") << '\n';
    }
    return out.str();
}

json check_result_to_json(const AxiomCheckResult& result) {
    json out{{"status", status_name(result.status)},
             {"discrepancy", result.max_discrepancy}};
    if (!result.note.empty()) out["note"] = result.note;
    if (result.witness) {
        json diffs = json::array();
        for (const ScoreDiff& d : result.witness->diffs)
            diffs.push_back({{"edge", d.edge},
                             {"expected", value_or_undefined(d.expected)},
                             {"actual", value_or_undefined(d.actual)}});
        out["witness"] = json{{"graph", graph_to_json(result.witness->graph)},
                              {"params", result.witness->transformation},
                              {"diffs", diffs}};
    }
    return out;
}

namespace {

json measure_params(const MeasureSpec& spec) {
    json params = json::object();
    if (spec.decay) params["alpha"] = *spec.decay;
    return params;
}

std::string outcome_status(const FalsifyOutcome& outcome) {
    if (outcome.counterexample) return "fail";
    return outcome.sites_checked > 0 ? "pass" : "vacuous";
}

}  // namespace

json check_report_to_json(const MeasureSpec& spec, Axiom axiom, const FalsifyOutcome& outcome) {
    json out{{"measure", measure_name(spec.kind)},
             {"params", measure_params(spec)},
             {"axiom", axiom_name(axiom)},
             {"status", outcome_status(outcome)},
             {"trials", outcome.trials_run},
             {"sites_checked", outcome.sites_checked},
             {"sites_skipped", outcome.sites_skipped},
             {"sites_vacuous", outcome.sites_vacuous},
             {"discrepancy", outcome.counterexample ? outcome.counterexample->max_discrepancy
                                                    : outcome.max_discrepancy}};
    if (outcome.counterexample) {
        json cx = check_result_to_json(*outcome.counterexample);
        if (cx.contains("witness")) out["witness"] = cx["witness"];
        if (cx.contains("note")) out["note"] = cx["note"];
    }
    return out;
}

std::string check_report_to_line(const MeasureSpec& spec, Axiom axiom,
                                 const FalsifyOutcome& outcome) {
    std::ostringstream out;
    out << measure_name(spec.kind) << " x " << axiom_name(axiom) << ": ";
    if (outcome.counterexample) {
        out << "FAIL (counterexample after " << outcome.trials_run << " trials";
        if (outcome.counterexample->witness)
            out << "; " << outcome.counterexample->witness->transformation;
        out << ")";
    } else if (outcome.sites_checked > 0) {
        out << "pass: no counterexample in " << outcome.trials_run << " trials ("
            << outcome.sites_checked << " sites, max discrepancy "
            << outcome.max_discrepancy << ")";
    } else {
        out << "vacuous: no valid site in " << outcome.trials_run << " trials";
    }
    return out.str();
}

json matrix_to_json(const SatisfactionMatrix& matrix) {
    json rows = json::array();
    for (size_t i = 0; i < matrix.measures.size(); ++i) {
        const MeasureSpec& spec = matrix.measures[i];
        json row{{"measure", measure_name(spec.kind)}, {"params", measure_params(spec)}};
        json cells = json::object();
        for (size_t j = 0; j < all_axioms().size(); ++j) {
            const MatrixCell& cell = matrix.cells[i][j];
            json entry{{"verdict", verdict_name(cell.verdict)},
                       {"trials", cell.outcome.trials_run},
                       {"sites_checked", cell.outcome.sites_checked}};
            if (cell.outcome.counterexample)
                entry["witness"] = check_result_to_json(*cell.outcome.counterexample);
            cells[axiom_name(all_axioms()[j])] = entry;
        }
        row["axioms"] = cells;
        rows.push_back(row);
    }
    return json{{"note", "satisfied entries are bounded evidence: no counterexample within "
                         "the trial budget, not a proof"},
                {"rows", rows}};
}

std::string matrix_to_table(const SatisfactionMatrix& matrix) {
    std::vector<std::string> headers{"measure"};
    for (Axiom a : all_axioms()) headers.push_back(axiom_name(a));

    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < matrix.measures.size(); ++i) {
        std::vector<std::string> row{measure_name(matrix.measures[i].kind)};
        for (size_t j = 0; j < all_axioms().size(); ++j) {
            switch (matrix.cells[i][j].verdict) {
                case MatrixVerdict::Satisfied: row.push_back("satisfied"); break;
                case MatrixVerdict::Violated: row.push_back("VIOLATED"); break;
                case MatrixVerdict::Vacuous: row.push_back("vacuous"); break;
            }
        }
        rows.push_back(std::move(row));
    }

    std::vector<size_t> widths(headers.size());
    for (size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (size_t c = 0; c < row.size(); ++c)
            out << row[c] << std::string(widths[c] - row[c].size() + 2, ' ');
        out << '\n';
    };
    emit(headers);
    for (const auto& row : rows) emit(row);
    out << "(satisfied = no counterexample within the trial budget)\n";
    return out.str();
}

}  // namespace edgerank
