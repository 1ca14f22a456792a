#include <algorithm>
#include <cmath>

#include "econlex/econ.hpp"

namespace econlex::econ {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

struct LabelledScores {
    std::vector<double> positives;
    std::vector<double> negatives;
};

LabelledScores split_by_label(std::span<const double> scores, std::span<const int> labels) {
    if (scores.size() != labels.size()) fail("roc: scores and labels differ in length");
    LabelledScores out;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (labels[i] == 1) out.positives.push_back(scores[i]);
        else if (labels[i] == 0) out.negatives.push_back(scores[i]);
        else fail("roc: labels must be 0 or 1");
    }
    if (out.positives.empty() || out.negatives.empty()) {
        fail("roc: both classes must be present");
    }
    return out;
}

// Midrank kernel: 1 if the positive outranks the negative, 1/2 on ties.
double psi(double pos, double neg) {
    if (pos > neg) return 1.0;
    if (pos < neg) return 0.0;
    return 0.5;
}

// DeLong structural components: v10[i] = mean_j psi(pos_i, neg_j) and
// v01[j] = mean_i psi(pos_i, neg_j). The AUC is the mean of either vector.
struct Components {
    std::vector<double> v10;
    std::vector<double> v01;
    double auc = 0.0;
};

Components delong_components(const LabelledScores& data) {
    const std::size_t m = data.positives.size();
    const std::size_t n0 = data.negatives.size();
    Components c;
    c.v10.assign(m, 0.0);
    c.v01.assign(n0, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n0; ++j) {
            const double k = psi(data.positives[i], data.negatives[j]);
            c.v10[i] += k;
            c.v01[j] += k;
        }
    }
    double total = 0.0;
    for (double& v : c.v10) {
        total += v;
        v /= static_cast<double>(n0);
    }
    for (double& v : c.v01) v /= static_cast<double>(m);
    c.auc = total / (static_cast<double>(m) * static_cast<double>(n0));
    return c;
}

double sample_variance(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return ss / static_cast<double>(n - 1);
}

double sample_covariance(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (n < 2) return 0.0;
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (a[i] - ma) * (b[i] - mb);
    return ss / static_cast<double>(n - 1);
}

}  // namespace

RocResult roc_auc(std::span<const double> scores, std::span<const int> labels) {
    const LabelledScores data = split_by_label(scores, labels);
    const std::size_t n1 = data.positives.size();
    const std::size_t n0 = data.negatives.size();

    // Pair scores with labels, sorted by descending score.
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) ranked.emplace_back(scores[i], labels[i]);
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    RocResult roc;
    roc.fpr.push_back(0.0);
    roc.tpr.push_back(0.0);

    // Walk tie groups; accumulate the trapezoid numerator in exact integer
    // arithmetic so the curve area and the pair count cannot drift apart.
    unsigned long long area2 = 0;  // 2 * n0 * n1 * area
    std::size_t cum0 = 0, cum1 = 0;
    std::size_t i = 0;
    while (i < ranked.size()) {
        const double threshold = ranked[i].first;
        std::size_t g0 = 0, g1 = 0;
        while (i < ranked.size() && ranked[i].first == threshold) {
            if (ranked[i].second == 1) ++g1;
            else ++g0;
            ++i;
        }
        area2 += static_cast<unsigned long long>(g0) * (2 * cum1 + g1);
        cum0 += g0;
        cum1 += g1;
        roc.thresholds.push_back(threshold);
        roc.fpr.push_back(static_cast<double>(cum0) / static_cast<double>(n0));
        roc.tpr.push_back(static_cast<double>(cum1) / static_cast<double>(n1));
    }
    roc.auc = static_cast<double>(area2) /
              (2.0 * static_cast<double>(n0) * static_cast<double>(n1));

    const Components c = delong_components(data);
    roc.variance = sample_variance(c.v10) / static_cast<double>(n1) +
                   sample_variance(c.v01) / static_cast<double>(n0);
    return roc;
}

AucComparison auc_compare(std::span<const double> scores_a, std::span<const double> scores_b,
                          std::span<const int> labels) {
    if (scores_a.size() != scores_b.size()) fail("auc_compare: score vectors differ in length");
    const LabelledScores data_a = split_by_label(scores_a, labels);
    const LabelledScores data_b = split_by_label(scores_b, labels);
    const std::size_t n1 = data_a.positives.size();
    const std::size_t n0 = data_a.negatives.size();

    const Components ca = delong_components(data_a);
    const Components cb = delong_components(data_b);

    AucComparison cmp;
    cmp.auc_a = ca.auc;
    cmp.auc_b = cb.auc;
    const double var10 = sample_variance(ca.v10) + sample_variance(cb.v10) -
                         2.0 * sample_covariance(ca.v10, cb.v10);
    const double var01 = sample_variance(ca.v01) + sample_variance(cb.v01) -
                         2.0 * sample_covariance(ca.v01, cb.v01);
    cmp.variance = var10 / static_cast<double>(n1) + var01 / static_cast<double>(n0);

    if (cmp.variance <= 0.0) {
        // No sampling variance in the paired components. Identical rankings
        // give p = 0.5; a deterministic difference is decided by its sign.
        cmp.degenerate = true;
        cmp.z = 0.0;
        cmp.p_value = cmp.auc_a == cmp.auc_b ? 0.5 : (cmp.auc_a > cmp.auc_b ? 1.0 : 0.0);
        return cmp;
    }
    cmp.z = (cmp.auc_a - cmp.auc_b) / std::sqrt(cmp.variance);
    cmp.p_value = normal_cdf(cmp.z);
    return cmp;
}

EpDecomposition delta_ep_decomposition(const std::vector<corpus::SentenceRecord>& records,
                                       const lexicon::Lexicon& base,
                                       const lexicon::Lexicon& reference,
                                       const sentiment::EpOptions& opts) {
    EpDecomposition out;
    out.base = sentiment::ep_series(records, base, opts);
    const sentiment::EpSeries disagree =
        sentiment::ep_series(records, lexicon::modify_disagree(base, reference), opts);
    const sentiment::EpSeries only_ref =
        sentiment::ep_series(records, lexicon::modify_only_el(base, reference), opts);

    out.delta_disagree = out.base;
    out.delta_disagree.lexicon_name = base.name + ".delta_disagree";
    out.delta_only_ref = out.base;
    out.delta_only_ref.lexicon_name = base.name + ".delta_only_ref";
    for (auto& [date, v] : out.delta_disagree.values) v = disagree.values.at(date) - v;
    for (auto& [date, v] : out.delta_only_ref.values) v = only_ref.values.at(date) - v;
    return out;
}

}  // namespace econlex::econ
