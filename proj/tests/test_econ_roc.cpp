#include <doctest.h>

#include <cmath>
#include <random>

#include "econlex/econ.hpp"
#include "econlex/sentiment.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"
#include "support.hpp"

using namespace econlex;
using namespace econlex::econ;

namespace {

// Scores on a coarse grid so ties actually occur.
void random_case(std::mt19937& rng, std::size_t n, std::vector<double>& scores,
                 std::vector<int>& labels) {
    scores.clear();
    labels.clear();
    std::uniform_int_distribution<int> grid(0, 9);
    std::bernoulli_distribution coin(0.4);
    bool has0 = false, has1 = false;
    for (std::size_t i = 0; i < n; ++i) {
        const int label = coin(rng) ? 1 : 0;
        labels.push_back(label);
        scores.push_back(grid(rng) / 8.0 + 0.2 * label);
        has0 |= label == 0;
        has1 |= label == 1;
    }
    if (!has0) labels[0] = 0;
    if (!has1) labels[n - 1] = 1;
}

}  // namespace

TEST_CASE("roc_auc trivial cases") {
    SUBCASE("perfect separation") {
        const std::vector<double> scores = {0.9, 0.8, 0.2, 0.1};
        const std::vector<int> labels = {1, 1, 0, 0};
        CHECK(roc_auc(scores, labels).auc == 1.0);
    }
    SUBCASE("constant score is all ties") {
        const std::vector<double> scores(10, 0.5);
        std::vector<int> labels(10, 0);
        for (int i = 0; i < 4; ++i) labels[static_cast<std::size_t>(i)] = 1;
        CHECK(roc_auc(scores, labels).auc == 0.5);
    }
    SUBCASE("anti-separating scores") {
        const std::vector<double> scores = {0.1, 0.2, 0.8, 0.9};
        const std::vector<int> labels = {1, 1, 0, 0};
        CHECK(roc_auc(scores, labels).auc == 0.0);
    }
    SUBCASE("single class errors") {
        const std::vector<double> scores = {0.1, 0.2};
        const std::vector<int> ones = {1, 1};
        CHECK_THROWS_WITH_AS(roc_auc(scores, ones), doctest::Contains("both classes"), Error);
    }
}

TEST_CASE("trapezoidal AUC equals the exhaustive pair count exactly") {
    std::mt19937 rng(33001);
    std::vector<double> scores;
    std::vector<int> labels;
    for (int trial = 0; trial < 30; ++trial) {
        random_case(rng, 20 + static_cast<std::size_t>(rng() % 181), scores, labels);
        const RocResult roc = roc_auc(scores, labels);
        const double expected = oracles::auc_pair_count(scores, labels);
        CHECK(roc.auc == expected);  // exact equality, not approximate
    }
}

TEST_CASE("roc curve is monotone and anchored at the corners") {
    std::mt19937 rng(33002);
    std::vector<double> scores;
    std::vector<int> labels;
    random_case(rng, 150, scores, labels);
    const RocResult roc = roc_auc(scores, labels);
    REQUIRE(roc.fpr.size() == roc.tpr.size());
    CHECK(roc.fpr.front() == 0.0);
    CHECK(roc.tpr.front() == 0.0);
    CHECK(roc.fpr.back() == 1.0);
    CHECK(roc.tpr.back() == 1.0);
    for (std::size_t i = 1; i < roc.fpr.size(); ++i) {
        CHECK(roc.fpr[i] >= roc.fpr[i - 1]);
        CHECK(roc.tpr[i] >= roc.tpr[i - 1]);
    }
}

TEST_CASE("AUC is invariant under strictly monotone transforms") {
    std::mt19937 rng(33003);
    std::vector<double> scores;
    std::vector<int> labels;
    random_case(rng, 120, scores, labels);
    const double base = roc_auc(scores, labels).auc;

    const std::vector<std::function<double(double)>> transforms = {
        [](double x) { return 3.0 * x + 1.0; },   [](double x) { return x * x * x; },
        [](double x) { return std::tanh(x); },    [](double x) { return std::exp(x); },
        [](double x) { return std::atan(x); },    [](double x) { return x / 7.0 - 2.0; },
        [](double x) { return std::cbrt(x); },    [](double x) { return std::asinh(x); },
        [](double x) { return 5.0 * x; },         [](double x) { return x + 100.0; },
    };
    for (const auto& f : transforms) {
        std::vector<double> transformed;
        for (const double s : scores) transformed.push_back(f(s));
        CHECK(roc_auc(transformed, labels).auc == base);
    }
}

TEST_CASE("auc_compare of identical scores is exactly one half") {
    std::mt19937 rng(33004);
    std::vector<double> scores;
    std::vector<int> labels;
    random_case(rng, 80, scores, labels);
    const AucComparison cmp = auc_compare(scores, scores, labels);
    CHECK(cmp.p_value == 0.5);
    CHECK(cmp.degenerate);
    CHECK(cmp.auc_a == cmp.auc_b);
}

TEST_CASE("auc_compare detects a clearly better model") {
    const std::size_t n = 100;
    std::vector<double> a(n), b(n);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i % 2 == 0 ? 1 : 0;
        a[i] = labels[i] == 1 ? 1.0 + static_cast<double>(i) : static_cast<double>(i) * 0.001;
        b[i] = -a[i];  // anti-separating
    }
    const AucComparison cmp = auc_compare(a, b, labels);
    CHECK(cmp.auc_a == 1.0);
    CHECK(cmp.auc_b == 0.0);
    CHECK(cmp.p_value > 0.999);  // H1 is "a smaller": no evidence at all
}

TEST_CASE("delong one-sided p-value tracks a paired bootstrap") {
    std::mt19937 rng(33005);
    std::normal_distribution<double> noise(0.0, 1.0);
    const std::size_t n = 300;
    std::vector<double> a(n), b(n);
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double latent = noise(rng);
        labels[i] = latent + 0.3 * noise(rng) > 0 ? 1 : 0;
        a[i] = latent + 0.9 * noise(rng);
        b[i] = 0.7 * latent + 1.0 * noise(rng);
    }
    const AucComparison cmp = auc_compare(a, b, labels);
    const double boot = oracles::bootstrap_auc_p_value(a, b, labels, 2000, 33006);
    CHECK(std::abs(cmp.p_value - boot) < 0.05);
}

TEST_CASE("decomposition deltas are zero when the reference is the base") {
    const synthetic::Corpus corpus = synthetic::make_corpus(33007, 300, 6);
    sentiment::EpOptions opts;
    opts.mode = sentiment::Mode::fine;
    const EpDecomposition dec =
        delta_ep_decomposition(corpus.records, corpus.lexicon, corpus.lexicon, opts);
    for (const auto& [month, v] : dec.delta_disagree.values) CHECK(v == 0.0);
    for (const auto& [month, v] : dec.delta_only_ref.values) CHECK(v == 0.0);
}

TEST_CASE("coverage-only reference moves only the coverage delta") {
    std::vector<corpus::SentenceRecord> records;
    corpus::SentenceRecord rec;
    rec.date = {2020, 1, 10};
    rec.doc_id = "d";
    rec.tokens = {"novel", "x", "y", "z"};
    records.push_back(rec);

    const auto base = test_support::make_lexicon("base", {{"x", 0.5}});
    const auto reference = test_support::make_lexicon("ref", {{"novel", -0.8}, {"x", 0.5}});
    sentiment::EpOptions opts;
    opts.mode = sentiment::Mode::fine;
    const EpDecomposition dec = delta_ep_decomposition(records, base, reference, opts);
    CHECK(dec.delta_disagree.values.begin()->second == 0.0);
    // Adding "novel" (-0.8) over 4 tokens raises EP by 0.2.
    CHECK(dec.delta_only_ref.values.begin()->second == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("sign-flip reference reproduces the hand-computed disagreement delta") {
    std::vector<corpus::SentenceRecord> records;
    corpus::SentenceRecord rec;
    rec.date = {2020, 1, 10};
    rec.doc_id = "d";
    rec.tokens = {"spin", "spin", "w", "w", "w"};  // 5 tokens, two hits on "spin"
    records.push_back(rec);

    const auto base = test_support::make_lexicon("base", {{"spin", 0.4}});
    const auto reference = test_support::make_lexicon("ref", {{"spin", -0.6}});
    sentiment::EpOptions opts;
    opts.mode = sentiment::Mode::fine;
    const EpDecomposition dec = delta_ep_decomposition(records, base, reference, opts);
    // Base EP = -(2 * 0.4)/5 = -0.16; modified EP = -(2 * -0.6)/5 = 0.24.
    CHECK(dec.base.values.begin()->second == doctest::Approx(-0.16).epsilon(1e-12));
    CHECK(dec.delta_disagree.values.begin()->second == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(dec.delta_only_ref.values.begin()->second == 0.0);
}

TEST_CASE("decomposition identity holds by construction") {
    const synthetic::Corpus corpus = synthetic::make_corpus(33008, 400, 10);
    std::mt19937 rng(33009);
    lexicon::Lexicon reference = corpus.lexicon;
    // Flip some signs, add a few new words.
    for (auto& [term, score] : reference.entries) {
        if (rng() % 3 == 0) score = -score;
    }
    reference.entries["v200"] = -0.5;
    reference.entries["v201"] = 0.7;

    sentiment::EpOptions opts;
    opts.mode = sentiment::Mode::fine;
    const EpDecomposition dec =
        delta_ep_decomposition(corpus.records, corpus.lexicon, reference, opts);
    const sentiment::EpSeries modified = sentiment::ep_series(
        corpus.records, lexicon::modify_disagree(corpus.lexicon, reference), opts);
    for (const auto& [month, v] : modified.values) {
        const double reconstructed = dec.base.values.at(month) + dec.delta_disagree.values.at(month);
        CHECK(reconstructed == doctest::Approx(v).epsilon(1e-12));
    }
}
