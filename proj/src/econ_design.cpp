#include "econlex/econ.hpp"

#include <nlohmann/json.hpp>

namespace econlex::econ {

DesignMatrix build_design(const std::map<std::string, Series>& series, const DesignSpec& spec) {
    if (spec.ar_lags < 0) fail("build_design: ar_lags must be >= 0");
    if (spec.horizon < 0) fail("build_design: horizon must be >= 0");
    const auto target_it = series.find(spec.target);
    if (target_it == series.end()) fail("build_design: unknown target series '" + spec.target + "'");
    const Series& target = target_it->second;

    std::vector<const Series*> regressors;
    for (const std::string& name : spec.regressors) {
        const auto it = series.find(name);
        if (it == series.end()) fail("build_design: unknown regressor series '" + name + "'");
        regressors.push_back(&it->second);
    }

    DesignMatrix design;
    design.target_name = spec.target;
    design.col_names.push_back("const");
    for (int lag = 1; lag <= spec.ar_lags; ++lag) {
        design.col_names.push_back(spec.target + ".l" + std::to_string(lag));
    }
    for (const std::string& name : spec.regressors) design.col_names.push_back(name);

    // Candidate months t: every month where some regressor or a target value
    // could anchor a row. Iterate over the target's own months shifted back by
    // the horizon so the led target exists by construction.
    std::vector<Date> rows;
    std::vector<double> ys;
    std::vector<std::vector<double>> xs;
    for (const auto& [when, value] : target) {
        const Date t = add_months(when, -spec.horizon);  // row date
        bool complete = true;
        std::vector<double> row;
        row.push_back(1.0);
        for (int lag = 1; lag <= spec.ar_lags && complete; ++lag) {
            const auto it = target.find(add_months(t, -lag));
            if (it == target.end()) complete = false;
            else row.push_back(it->second);
        }
        for (const Series* reg : regressors) {
            if (!complete) break;
            const auto it = reg->find(t);
            if (it == reg->end()) complete = false;
            else row.push_back(it->second);
        }
        if (!complete) continue;
        rows.push_back(t);
        ys.push_back(value);
        xs.push_back(std::move(row));
    }
    if (rows.empty()) fail("build_design: no usable rows after lag/lead alignment");

    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto k = static_cast<Eigen::Index>(design.col_names.size());
    design.X.resize(n, k);
    design.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design.y(i) = ys[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < k; ++j) {
            design.X(i, j) = xs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    design.row_dates = std::move(rows);
    return design;
}

double FitResult::coefficient(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return coef(static_cast<Eigen::Index>(i));
    }
    fail("no coefficient named '" + name + "'");
}

nlohmann::json FitResult::to_json() const {
    nlohmann::json coefs = nlohmann::json::object();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        coefs[names[i]] = {{"estimate", coef(idx)}, {"se", se(idx)}};
    }
    nlohmann::json j{
        {"coefficients", coefs},
        {"log_likelihood", log_likelihood},
        {"aic", aic},
        {"n_obs", n_obs},
        {"k_params", k_params},
    };
    if (!std::isnan(r2)) {
        j["r2"] = r2;
        j["adj_r2"] = adj_r2;
        j["sigma2"] = sigma2;
    }
    if (iterations > 0) {
        j["iterations"] = iterations;
        j["converged"] = converged;
    }
    if (!warnings.empty()) j["warnings"] = warnings;
    nlohmann::json cov_rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < cov.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index jj = 0; jj < cov.cols(); ++jj) row.push_back(cov(i, jj));
        cov_rows.push_back(std::move(row));
    }
    j["covariance"] = std::move(cov_rows);
    return j;
}

}  // namespace econlex::econ
