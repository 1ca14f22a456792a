#include <cmath>

#include "econlex/econ.hpp"

namespace econlex::econ {

namespace {

constexpr double kGradTol = 1e-8;
constexpr double kLoglikTol = 1e-12;
constexpr double kSeparationBound = 30.0;  // |eta| beyond this saturates the logistic

// log(1 + exp(x)) without overflow.
double log1pexp(double x) { return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

double bernoulli_loglik(const Eigen::VectorXd& eta, const Eigen::VectorXd& y) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < eta.size(); ++i) ll += y(i) * eta(i) - log1pexp(eta(i));
    return ll;
}

Eigen::VectorXd sigmoid(const Eigen::VectorXd& eta) {
    return eta.unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
}

}  // namespace

FitResult logit_mle(const DesignMatrix& design, int max_iter) {
    const Eigen::Index n = design.X.rows();
    const Eigen::Index k = design.X.cols();
    if (n <= k) fail("logit: need more observations than parameters");

    std::size_t ones = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (design.y(i) != 0.0 && design.y(i) != 1.0) {
            fail("logit: target must be binary, found " + format_double(design.y(i)));
        }
        if (design.y(i) == 1.0) ++ones;
    }
    if (ones == 0 || ones == static_cast<std::size_t>(n)) {
        fail("logit: target has a single class");
    }

    {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design.X);
        qr.setThreshold(static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                        design.X.colwise().norm().maxCoeff());
        if (qr.rank() < k) fail("logit: design matrix is rank deficient");
    }

    FitResult fit;
    fit.names = design.col_names;
    fit.n_obs = static_cast<std::size_t>(n);

    Eigen::VectorXd beta = Eigen::VectorXd::Zero(k);
    Eigen::VectorXd eta = design.X * beta;
    double ll = bernoulli_loglik(eta, design.y);
    bool converged = false;
    int iter = 0;

    for (; iter < max_iter && !converged; ++iter) {
        const Eigen::VectorXd p = sigmoid(eta);
        const Eigen::VectorXd grad = design.X.transpose() * (design.y - p);
        if (grad.lpNorm<Eigen::Infinity>() < kGradTol) {
            converged = true;
            break;
        }
        const Eigen::VectorXd w = p.array() * (1.0 - p.array());
        const Eigen::MatrixXd info = design.X.transpose() * w.asDiagonal() * design.X;
        const Eigen::VectorXd step = info.ldlt().solve(grad);

        // Step-halving keeps the likelihood monotone. The acceptance margin
        // scales with |ll|: near the optimum the true improvement sits below
        // the rounding noise of the log-likelihood sum.
        const double margin = 1e-12 * (std::abs(ll) + 1.0);
        double scale = 1.0;
        Eigen::VectorXd candidate;
        double candidate_ll = -std::numeric_limits<double>::infinity();
        for (int half = 0; half < 40; ++half) {
            candidate = beta + scale * step;
            candidate_ll = bernoulli_loglik(design.X * candidate, design.y);
            if (candidate_ll >= ll - margin) break;
            scale *= 0.5;
        }
        const double previous_ll = ll;
        beta = candidate;
        eta = design.X * beta;
        ll = candidate_ll;
        if (std::abs(ll - previous_ll) <= kLoglikTol * (std::abs(previous_ll) + 1.0)) {
            converged = true;
        }
    }
    fit.iterations = iter + (converged ? 1 : 0);
    fit.converged = converged;

    if (eta.lpNorm<Eigen::Infinity>() > kSeparationBound) {
        fit.warnings.push_back(
            "possible perfect separation: fitted probabilities saturate at 0/1, "
            "coefficients may diverge; reporting the last iterate");
    } else if (!converged) {
        fail("logit: no convergence after " + std::to_string(max_iter) + " iterations");
    }

    const Eigen::VectorXd p = sigmoid(eta);
    const Eigen::VectorXd w = p.array() * (1.0 - p.array());
    const Eigen::MatrixXd info = design.X.transpose() * w.asDiagonal() * design.X;
    fit.coef = beta;
    fit.fitted = p;
    fit.cov = info.inverse();  // inverse observed information
    fit.se = fit.cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    fit.log_likelihood = ll;
    fit.k_params = static_cast<std::size_t>(k);
    fit.aic = 2.0 * static_cast<double>(fit.k_params) - 2.0 * fit.log_likelihood;
    return fit;
}

}  // namespace econlex::econ
