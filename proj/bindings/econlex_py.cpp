#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "econlex/annotate.hpp"
#include "econlex/corpus.hpp"
#include "econlex/econ.hpp"
#include "econlex/lexicon.hpp"
#include "econlex/sentiment.hpp"

namespace py = pybind11;
using namespace econlex;

namespace {

lexicon::FileFormat parse_format(const std::string& format) {
    if (format == "tsv") return lexicon::FileFormat::tsv;
    if (format == "csv") return lexicon::FileFormat::csv;
    throw Error("format must be 'tsv' or 'csv'");
}

lexicon::Granularity parse_granularity(const std::string& granularity) {
    if (granularity == "categorical") return lexicon::Granularity::categorical;
    if (granularity == "fine") return lexicon::Granularity::fine_grained;
    throw Error("granularity must be 'categorical' or 'fine'");
}

sentiment::Mode parse_mode(const std::string& mode) {
    if (mode == "categorical") return sentiment::Mode::categorical;
    if (mode == "fine") return sentiment::Mode::fine;
    throw Error("mode must be 'categorical' or 'fine'");
}

py::dict comparison_to_dict(const lexicon::ComparisonReport& r) {
    const auto classes = [](const lexicon::ClassCounts& c) {
        py::dict d;
        d["negative"] = c.negative;
        d["neutral"] = c.neutral;
        d["positive"] = c.positive;
        return d;
    };
    py::dict d;
    d["a"] = r.name_a;
    d["b"] = r.name_b;
    d["common_terms"] = r.common_terms;
    d["agree_total"] = r.agree_total;
    d["agree_by_class"] = classes(r.agree_by_class);
    d["disagree"] = r.disagree;
    d["opposite_sign"] = r.opposite_sign;
    d["only_in_a"] = r.only_in_a;
    d["only_in_a_by_class"] = classes(r.only_in_a_by_class);
    d["only_in_b"] = r.only_in_b;
    d["only_in_b_by_class"] = classes(r.only_in_b_by_class);
    return d;
}

std::map<std::string, double> series_to_labels(const sentiment::EpSeries& series) {
    std::map<std::string, double> out;
    const bool monthly = series.freq == sentiment::Frequency::monthly;
    for (const auto& [date, v] : series.values) {
        out[monthly ? format_month(date) : format_date(date)] = v;
    }
    return out;
}

sentiment::EpSeries labels_to_series(const std::map<std::string, double>& values) {
    sentiment::EpSeries series;
    series.freq = sentiment::Frequency::monthly;
    for (const auto& [label, v] : values) {
        if (label.size() > 7) series.freq = sentiment::Frequency::daily;
        series.values[parse_date(label)] = v;
    }
    return series;
}

econ::DesignMatrix make_design(const std::vector<std::vector<double>>& rows,
                               const std::vector<double>& target,
                               std::vector<std::string> names, bool add_intercept) {
    if (rows.size() != target.size()) throw Error("X and y differ in length");
    if (rows.empty()) throw Error("empty design");
    const std::size_t width = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != width) throw Error("ragged design matrix");
    }
    econ::DesignMatrix design;
    const std::size_t k = width + (add_intercept ? 1 : 0);
    if (names.empty()) {
        if (add_intercept) names.push_back("const");
        for (std::size_t j = 0; j < width; ++j) names.push_back("x" + std::to_string(j + 1));
    }
    if (names.size() != k) throw Error("expected " + std::to_string(k) + " column names");
    design.col_names = std::move(names);
    design.X.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(k));
    design.y.resize(static_cast<Eigen::Index>(target.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto ei = static_cast<Eigen::Index>(i);
        Eigen::Index j = 0;
        if (add_intercept) design.X(ei, j++) = 1.0;
        for (const double v : rows[i]) design.X(ei, j++) = v;
        design.y(ei) = target[i];
    }
    return design;
}

py::dict fit_to_dict(const econ::FitResult& fit) {
    py::dict coefs;
    for (std::size_t i = 0; i < fit.names.size(); ++i) {
        const auto idx = static_cast<Eigen::Index>(i);
        py::dict entry;
        entry["estimate"] = fit.coef(idx);
        entry["se"] = fit.se(idx);
        coefs[py::str(fit.names[i])] = entry;
    }
    py::dict d;
    d["coefficients"] = coefs;
    d["log_likelihood"] = fit.log_likelihood;
    d["aic"] = fit.aic;
    d["n_obs"] = fit.n_obs;
    if (!std::isnan(fit.r2)) {
        d["r2"] = fit.r2;
        d["adj_r2"] = fit.adj_r2;
    }
    if (fit.iterations > 0) {
        d["iterations"] = fit.iterations;
        d["converged"] = fit.converged;
    }
    if (!fit.warnings.empty()) d["warnings"] = fit.warnings;
    return d;
}

std::vector<corpus::SentenceRecord> records_from_files(const std::string& corpus_path,
                                                       const std::string& concepts_path,
                                                       bool strict,
                                                       const std::string& exclude_topic) {
    const corpus::ConceptList concepts = corpus::ConceptList::load(concepts_path);
    corpus::IngestOptions opts;
    opts.strict = strict;
    opts.exclude_topic = exclude_topic;
    std::vector<corpus::SentenceRecord> records;
    corpus::ingest(corpus_path, opts, [&](corpus::Document&& doc) {
        auto recs = corpus::extract_records(doc, concepts);
        records.insert(records.end(), std::make_move_iterator(recs.begin()),
                       std::make_move_iterator(recs.end()));
    });
    return records;
}

}  // namespace

PYBIND11_MODULE(_econlex, m) {
    m.doc() = "economic sentiment lexicon toolkit (C++ core)";

    py::register_exception<Error>(m, "EconlexError");

    py::class_<lexicon::Lexicon>(m, "Lexicon")
        .def(py::init([](const std::string& name, const std::map<std::string, double>& entries) {
                 lexicon::Lexicon lex;
                 lex.name = name;
                 for (const auto& [term, score] : entries) {
                     if (!(score >= -1.0 && score <= 1.0)) {
                         throw Error("score out of range [-1,1] for term '" + term + "'");
                     }
                     const std::string folded = ascii_lower(term);
                     if (folded.empty()) throw Error("empty term");
                     if (!lex.entries.emplace(folded, score).second) {
                         throw Error("duplicate term '" + folded + "'");
                     }
                 }
                 return lex;
             }),
             py::arg("name"), py::arg("entries"))
        .def_readonly("name", &lexicon::Lexicon::name)
        .def_property_readonly("entries",
                               [](const lexicon::Lexicon& lex) { return lex.entries; })
        .def("__len__", [](const lexicon::Lexicon& lex) { return lex.entries.size(); })
        .def("__contains__",
             [](const lexicon::Lexicon& lex, const std::string& term) {
                 return lex.entries.contains(ascii_lower(term));
             })
        .def("__getitem__",
             [](const lexicon::Lexicon& lex, const std::string& term) {
                 const auto it = lex.entries.find(ascii_lower(term));
                 if (it == lex.entries.end()) throw py::key_error(term);
                 return it->second;
             })
        .def("__repr__", [](const lexicon::Lexicon& lex) {
            return "Lexicon('" + lex.name + "', " + std::to_string(lex.entries.size()) + " terms)";
        });

    m.def(
        "load_lexicon",
        [](const std::string& path, const std::string& format, const std::string& granularity,
           const std::string& name) {
            return lexicon::load_lexicon(path, parse_format(format), parse_granularity(granularity),
                                         name);
        },
        py::arg("path"), py::arg("format") = "tsv", py::arg("granularity") = "fine",
        py::arg("name") = "");
    m.def(
        "save_lexicon",
        [](const lexicon::Lexicon& lex, const std::string& path, const std::string& format) {
            lexicon::save_lexicon(lex, path, parse_format(format));
        },
        py::arg("lexicon"), py::arg("path"), py::arg("format") = "tsv");
    m.def(
        "category_counts",
        [](const lexicon::Lexicon& lex) {
            const auto c = lexicon::category_counts(lex);
            return py::make_tuple(c.negative, c.neutral, c.positive, c.total);
        },
        py::arg("lexicon"), "(negative, neutral, positive, total) term counts");
    m.def(
        "compare",
        [](const lexicon::Lexicon& a, const lexicon::Lexicon& b) {
            return comparison_to_dict(lexicon::compare(a, b));
        },
        py::arg("a"), py::arg("b"));
    m.def("modify_disagree", &lexicon::modify_disagree, py::arg("base"), py::arg("reference"));
    m.def("modify_only_el", &lexicon::modify_only_el, py::arg("base"), py::arg("reference"));
    m.def("to_categorical", &lexicon::to_categorical, py::arg("lexicon"));

    m.def("tokenize", [](const std::string& text) { return corpus::tokenize(text); },
          py::arg("sentence"));
    m.def("segment", [](const std::string& text) { return corpus::segment(text); },
          py::arg("body"));
    m.def(
        "score_tokens",
        [](const std::vector<std::string>& tokens, const lexicon::Lexicon& lex) {
            const sentiment::ScoringIndex index(lex);
            const sentiment::SentenceScore s = index.score(tokens);
            py::dict d;
            d["pos_count"] = s.pos_count;
            d["neg_count"] = s.neg_count;
            d["count_score"] = s.count_score;
            d["sum_score"] = s.sum_score;
            return d;
        },
        py::arg("tokens"), py::arg("lexicon"));

    m.def(
        "ep_series",
        [](const std::vector<std::pair<std::string, std::vector<std::string>>>& dated_tokens,
           const lexicon::Lexicon& lex, const std::string& mode, const std::string& freq) {
            std::vector<corpus::SentenceRecord> records;
            for (const auto& [date, tokens] : dated_tokens) {
                corpus::SentenceRecord rec;
                rec.date = parse_date(date);
                rec.tokens = tokens;
                records.push_back(std::move(rec));
            }
            sentiment::EpOptions opts;
            opts.mode = parse_mode(mode);
            opts.freq = freq == "daily" ? sentiment::Frequency::daily
                                        : sentiment::Frequency::monthly;
            return series_to_labels(sentiment::ep_series(records, lex, opts));
        },
        py::arg("dated_tokens"), py::arg("lexicon"), py::arg("mode") = "categorical",
        py::arg("freq") = "monthly",
        "EP over (date, tokens) sentences; returns {period label: value}");
    m.def(
        "ep_series_from_files",
        [](const std::string& corpus_path, const std::string& concepts_path,
           const std::string& lexicon_path, const std::string& mode, const std::string& freq,
           int smooth, bool standardize, bool strict, const std::string& exclude_topic) {
            const auto records = records_from_files(corpus_path, concepts_path, strict, exclude_topic);
            const lexicon::Lexicon lex = lexicon::load_lexicon(
                lexicon_path, parse_format(lexicon_path.ends_with(".csv") ? "csv" : "tsv"));
            sentiment::EpOptions opts;
            opts.mode = parse_mode(mode);
            opts.freq = freq == "daily" ? sentiment::Frequency::daily
                                        : sentiment::Frequency::monthly;
            sentiment::EpSeries series = sentiment::ep_series(records, lex, opts);
            if (standardize) series = sentiment::standardize(series);
            if (smooth > 1) series = sentiment::smooth(series, smooth);
            return series_to_labels(series);
        },
        py::arg("corpus"), py::arg("concepts"), py::arg("lexicon"),
        py::arg("mode") = "categorical", py::arg("freq") = "monthly", py::arg("smooth") = 1,
        py::arg("standardize") = false, py::arg("strict") = false,
        py::arg("exclude_topic") = "");
    m.def(
        "standardize_series",
        [](const std::map<std::string, double>& values) {
            return series_to_labels(sentiment::standardize(labels_to_series(values)));
        },
        py::arg("values"));
    m.def(
        "smooth_series",
        [](const std::map<std::string, double>& values, int window) {
            return series_to_labels(sentiment::smooth(labels_to_series(values), window));
        },
        py::arg("values"), py::arg("window"));
    m.def(
        "correlate",
        [](const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
            return sentiment::correlate(labels_to_series(a).values, labels_to_series(b).values);
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "aggregate_scores",
        [](const std::vector<double>& scores) {
            annotate::AnnotationSheet sheet;
            sheet.term = "<term>";
            sheet.scores = scores;
            const annotate::AggregatedTerm agg = annotate::aggregate(sheet);
            py::dict d;
            d["median"] = agg.median_score;
            d["sign_split"] = py::make_tuple(agg.sign_split.negative, agg.sign_split.zero,
                                             agg.sign_split.positive);
            return d;
        },
        py::arg("scores"));

    m.def(
        "ols_newey_west",
        [](const std::vector<std::vector<double>>& X, const std::vector<double>& y,
           std::vector<std::string> names, std::optional<int> bandwidth, bool add_intercept) {
            const econ::DesignMatrix design = make_design(X, y, std::move(names), add_intercept);
            return fit_to_dict(econ::ols_newey_west(design, bandwidth));
        },
        py::arg("X"), py::arg("y"), py::arg("names") = std::vector<std::string>{},
        py::arg("bandwidth") = std::nullopt, py::arg("add_intercept") = true);
    m.def(
        "logit_mle",
        [](const std::vector<std::vector<double>>& X, const std::vector<double>& y,
           std::vector<std::string> names, bool add_intercept) {
            const econ::DesignMatrix design = make_design(X, y, std::move(names), add_intercept);
            return fit_to_dict(econ::logit_mle(design));
        },
        py::arg("X"), py::arg("y"), py::arg("names") = std::vector<std::string>{},
        py::arg("add_intercept") = true);
    m.def(
        "roc_auc",
        [](const std::vector<double>& scores, const std::vector<int>& labels) {
            const econ::RocResult roc = econ::roc_auc(scores, labels);
            py::dict d;
            d["auc"] = roc.auc;
            d["variance"] = roc.variance;
            d["thresholds"] = roc.thresholds;
            d["tpr"] = roc.tpr;
            d["fpr"] = roc.fpr;
            return d;
        },
        py::arg("scores"), py::arg("labels"));
    m.def(
        "auc_compare",
        [](const std::vector<double>& scores_a, const std::vector<double>& scores_b,
           const std::vector<int>& labels) {
            const econ::AucComparison cmp = econ::auc_compare(scores_a, scores_b, labels);
            py::dict d;
            d["auc_a"] = cmp.auc_a;
            d["auc_b"] = cmp.auc_b;
            d["z"] = cmp.z;
            d["p_value"] = cmp.p_value;
            d["degenerate"] = cmp.degenerate;
            return d;
        },
        py::arg("scores_a"), py::arg("scores_b"), py::arg("labels"),
        "one-sided test of H0: AUC(a) >= AUC(b)");
}
