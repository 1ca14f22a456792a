#include <algorithm>
#include <cmath>
#include <sstream>
#include <iomanip>

#include "econlex/econ.hpp"

namespace econlex::econ {

namespace {

std::string stars(double estimate, double se) {
    if (se <= 0.0) return "";
    const double z = std::abs(estimate / se);
    const double p = 2.0 * (1.0 - normal_cdf(z));
    if (p < 0.01) return "***";
    if (p < 0.05) return "**";
    if (p < 0.1) return "*";
    return "";
}

std::string fixed3(double v) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << v;
    return ss.str();
}

void pad_row(std::vector<std::string>& row, std::size_t columns) { row.resize(columns); }

}  // namespace

std::string render_table(const std::vector<FitResult>& fits, const std::string& target_label) {
    if (fits.empty()) return "";

    // Coefficient rows in first-seen order across fits.
    std::vector<std::string> order;
    for (const FitResult& fit : fits) {
        for (const std::string& name : fit.names) {
            if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
        }
    }

    const std::size_t columns = fits.size() + 1;
    std::vector<std::vector<std::string>> grid;
    grid.push_back({target_label});
    pad_row(grid.back(), columns);

    for (const std::string& name : order) {
        std::vector<std::string> est_row{name};
        std::vector<std::string> se_row{""};
        for (const FitResult& fit : fits) {
            const auto it = std::find(fit.names.begin(), fit.names.end(), name);
            if (it == fit.names.end()) {
                est_row.push_back("");
                se_row.push_back("");
                continue;
            }
            const auto idx = static_cast<Eigen::Index>(it - fit.names.begin());
            est_row.push_back(fixed3(fit.coef(idx)) + stars(fit.coef(idx), fit.se(idx)));
            se_row.push_back("(" + fixed3(fit.se(idx)) + ")");
        }
        grid.push_back(est_row);
        grid.push_back(se_row);
    }

    const bool ols = !std::isnan(fits.front().r2);
    std::vector<std::string> obs_row{"Obs."};
    std::vector<std::string> stat1{ols ? "R2" : "Log Lik."};
    std::vector<std::string> stat2{ols ? "Adj. R2" : "AIC"};
    for (const FitResult& fit : fits) {
        obs_row.push_back(std::to_string(fit.n_obs));
        stat1.push_back(fixed3(ols ? fit.r2 : fit.log_likelihood));
        stat2.push_back(fixed3(ols ? fit.adj_r2 : fit.aic));
    }
    grid.push_back(obs_row);
    grid.push_back(stat1);
    grid.push_back(stat2);

    std::vector<std::size_t> widths(columns, 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::size_t total = 0;
    for (const std::size_t w : widths) total += w + 2;

    std::ostringstream out;
    const std::string rule(total, '-');
    const auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << std::setw(static_cast<int>(widths[c]) + 2)
                << (c == 0 ? row[c] + std::string(widths[c] - row[c].size(), ' ') : row[c]);
        }
        out << '\n';
    };

    out << rule << '\n';
    emit(grid[0]);
    out << rule << '\n';
    for (std::size_t r = 1; r + 3 < grid.size(); ++r) emit(grid[r]);
    out << rule << '\n';
    for (std::size_t r = grid.size() - 3; r < grid.size(); ++r) emit(grid[r]);
    out << rule << '\n';
    out << "Notes: *** 1%, ** 5%, * 10% significance; standard errors in parentheses.\n";
    return out.str();
}

}  // namespace econlex::econ
