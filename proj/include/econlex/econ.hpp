#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "econlex/common.hpp"
#include "econlex/lexicon.hpp"
#include "econlex/sentiment.hpp"

namespace econlex::econ {

using Series = std::map<Date, double>;

struct DesignSpec {
    std::string target;                   // name of the target series
    int ar_lags = 0;                      // lags of the target added as regressors
    int horizon = 0;                      // target is led by `horizon` months
    std::vector<std::string> regressors;  // regressor series, dated t
};

/// Time-ordered regression inputs. Column 0 is the intercept; rows are the
/// months where the led target, every lag, and every regressor all exist.
struct DesignMatrix {
    std::vector<std::string> col_names;
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    std::vector<Date> row_dates;
    std::string target_name;
};

DesignMatrix build_design(const std::map<std::string, Series>& series, const DesignSpec& spec);

struct FitResult {
    std::vector<std::string> names;
    Eigen::VectorXd coef;
    Eigen::MatrixXd cov;
    Eigen::VectorXd se;
    double log_likelihood = 0.0;
    double aic = 0.0;
    std::size_t n_obs = 0;
    std::size_t k_params = 0;  // parameter count entering the AIC
    // OLS only:
    double r2 = std::numeric_limits<double>::quiet_NaN();
    double adj_r2 = std::numeric_limits<double>::quiet_NaN();
    double sigma2 = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd residuals;
    // Logit only:
    Eigen::VectorXd fitted;  // predicted probabilities
    int iterations = 0;
    bool converged = true;
    std::vector<std::string> warnings;

    double coefficient(const std::string& name) const;
    nlohmann::json to_json() const;
};

/// OLS with Newey-West (Bartlett kernel) covariance. bandwidth == 0 gives
/// White errors; nullopt uses floor(4*(n/100)^(2/9)). Solved by column-pivoted
/// QR; rank deficiency is an error.
FitResult ols_newey_west(const DesignMatrix& design,
                         std::optional<int> bandwidth = std::nullopt);

/// Logistic regression by damped Newton iterations. Converges when the
/// gradient max-norm falls below 1e-8 or the relative log-likelihood change
/// below 1e-12. Perfect separation is reported as a warning on the last
/// iterate; non-convergence after max_iter is an error.
FitResult logit_mle(const DesignMatrix& design, int max_iter = 100);

struct RocResult {
    double auc = 0.0;
    std::vector<double> thresholds;  // descending unique scores
    std::vector<double> tpr;
    std::vector<double> fpr;
    double variance = 0.0;  // DeLong variance of the AUC
};

/// AUC as the Mann-Whitney statistic (concordant pairs + half ties); the
/// stored ROC curve integrates to the same value exactly.
RocResult roc_auc(std::span<const double> scores, std::span<const int> labels);

struct AucComparison {
    double auc_a = 0.0;
    double auc_b = 0.0;
    double variance = 0.0;  // var(auc_a - auc_b), DeLong paired estimate
    double z = 0.0;
    double p_value = 0.5;    // one-sided: P(Z < z) for H1: auc_a < auc_b
    bool degenerate = false; // zero variance of the difference
};

/// DeLong paired comparison of two score vectors on the same labels. Small
/// p-values reject "AUC of a >= AUC of b" in favour of "a is smaller".
AucComparison auc_compare(std::span<const double> scores_a, std::span<const double> scores_b,
                          std::span<const int> labels);

struct EpDecomposition {
    sentiment::EpSeries base;            // EP on the unmodified lexicon
    sentiment::EpSeries delta_disagree;  // EP(sign-corrected lexicon) - base
    sentiment::EpSeries delta_only_ref;  // EP(coverage-extended lexicon) - base
};

/// EP on `base`, on modify_disagree(base, reference) and on
/// modify_only_el(base, reference); the two modified series are returned as
/// differences from the base on the shared period index.
EpDecomposition delta_ep_decomposition(const std::vector<corpus::SentenceRecord>& records,
                                       const lexicon::Lexicon& base,
                                       const lexicon::Lexicon& reference,
                                       const sentiment::EpOptions& opts = {});

double normal_cdf(double z);

/// Aligned text table: one column per fit, coefficient rows with significance
/// stars and standard errors in parentheses, footer with fit statistics.
std::string render_table(const std::vector<FitResult>& fits, const std::string& target_label);

}  // namespace econlex::econ
