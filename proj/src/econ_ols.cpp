#include <cmath>

#include "econlex/econ.hpp"

namespace econlex::econ {

namespace {

constexpr double kPi = 3.14159265358979323846;

int auto_bandwidth(Eigen::Index n) {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
}

}  // namespace

FitResult ols_newey_west(const DesignMatrix& design, std::optional<int> bandwidth) {
    const Eigen::Index n = design.X.rows();
    const Eigen::Index k = design.X.cols();
    if (n <= k) fail("ols: need more observations than parameters (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design.X);
    const double threshold = static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                             design.X.colwise().norm().maxCoeff();
    qr.setThreshold(threshold);
    if (qr.rank() < k) {
        fail("ols: design matrix is rank deficient (rank " + std::to_string(qr.rank()) + " of " +
             std::to_string(k) + ")");
    }

    FitResult fit;
    fit.names = design.col_names;
    fit.coef = qr.solve(design.y);
    fit.residuals = design.y - design.X * fit.coef;
    fit.n_obs = static_cast<std::size_t>(n);

    const int L = bandwidth ? *bandwidth : auto_bandwidth(n);
    if (L < 0) fail("ols: bandwidth must be >= 0");

    // Bartlett-kernel HAC meat: Gamma_0 + sum_j w_j (Gamma_j + Gamma_j').
    const Eigen::MatrixXd bread = (design.X.transpose() * design.X).inverse();
    Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j <= L; ++j) {
        Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index t = j; t < n; ++t) {
            gamma.noalias() += (design.X.row(t).transpose() * fit.residuals(t)) *
                               (design.X.row(t - j) * fit.residuals(t - j));
        }
        const double w = 1.0 - static_cast<double>(j) / (static_cast<double>(L) + 1.0);
        meat += j == 0 ? gamma : Eigen::MatrixXd(w * (gamma + gamma.transpose()));
    }
    fit.cov = bread * meat * bread;
    fit.se = fit.cov.diagonal().cwiseMax(0.0).cwiseSqrt();

    const double ssr = fit.residuals.squaredNorm();
    const double mean = design.y.mean();
    const double sst = (design.y.array() - mean).matrix().squaredNorm();
    fit.r2 = sst > 0.0 ? 1.0 - ssr / sst : std::numeric_limits<double>::quiet_NaN();
    fit.adj_r2 = sst > 0.0 ? 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) /
                                       static_cast<double>(n - k)
                           : std::numeric_limits<double>::quiet_NaN();
    fit.sigma2 = ssr / static_cast<double>(n - k);

    // Gaussian log-likelihood at the MLE variance ssr/n; sigma counts as a
    // parameter in the AIC.
    fit.log_likelihood = -0.5 * static_cast<double>(n) *
                         (std::log(2.0 * kPi) + std::log(ssr / static_cast<double>(n)) + 1.0);
    fit.k_params = static_cast<std::size_t>(k) + 1;
    fit.aic = 2.0 * static_cast<double>(fit.k_params) - 2.0 * fit.log_likelihood;
    return fit;
}

}  // namespace econlex::econ
