#include "report.hpp"

namespace curskel::cli {

json make_report(const std::string& command, json inputs, json results) {
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    return report;
}

json to_json(const Matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const IndexSet& s) { return json(s.to_one_based()); }

json to_json(const CharacterizationReport& rep) {
    json out;
    out["rank_condition"] = rep.rank_condition;
    out["exact_cur"] = rep.exact_cur;
    out["exact_projection"] = rep.exact_projection;
    out["pinv_identity"] = rep.pinv_identity;
    out["rank_cr"] = rep.rank_cr;
    out["all_equivalent"] = rep.all_agree();
    out["residuals"] = rep.residuals;
    out["ranks"] = {{"a", rep.rank_a}, {"c", rep.rank_c}, {"u", rep.rank_u}, {"r", rep.rank_r}};
    return out;
}

json to_json(const SelectionResult& result, bool include_subsets) {
    json out;
    out["indices"] = to_json(result.indices);
    out["error_frobenius"] = result.error_frobenius;
    out["error_spectral"] = result.error_spectral;
    if (include_subsets) out["subsets_enumerated"] = result.subsets_examined;
    return out;
}

namespace {

json failure_to_json(const SweepFailure& f) {
    json out;
    out["trial"] = f.trial;
    out["rows"] = f.rows;
    out["cols"] = f.cols;
    out["row_set"] = to_json(f.row_set);
    out["col_set"] = to_json(f.col_set);
    return out;
}

}  // namespace

json to_json(const SweepReport& report) {
    json out;
    out["trials_run"] = report.trials_run;
    json agreement = json::array();
    for (const auto& f : report.agreement_failures) agreement.push_back(failure_to_json(f));
    out["agreement_failures"] = std::move(agreement);
    json identity = json::array();
    for (const auto& f : report.identity_failures) identity.push_back(failure_to_json(f));
    out["identity_failures"] = std::move(identity);
    out["max_residuals"] = {{"u_equals_r_adag_c", report.max_u_rac_residual},
                            {"exact_cur", report.max_exact_cur_residual},
                            {"exact_projection", report.max_exact_projection_residual}};
    return out;
}

json to_json(const OpenQuestionReport& report) {
    json out;
    out["trials_run"] = report.trials_run;
    out["premise_count"] = report.premise_count;
    json witnesses = json::array();
    for (const auto& w : report.counterexamples) {
        json item;
        item["trial"] = w.trial;
        item["a"] = to_json(w.a);
        item["row_set"] = to_json(w.row_set);
        item["col_set"] = to_json(w.col_set);
        item["premise_residual"] = w.premise_residual;
        item["conclusion_residual"] = w.conclusion_residual;
        witnesses.push_back(std::move(item));
    }
    out["counterexamples"] = std::move(witnesses);
    return out;
}

}  // namespace curskel::cli
