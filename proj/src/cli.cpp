#include "econlex/cli.hpp"

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "econlex/annotate.hpp"
#include "econlex/corpus.hpp"
#include "econlex/depparse.hpp"
#include "econlex/econ.hpp"
#include "econlex/lexicon.hpp"
#include "econlex/sentiment.hpp"

namespace econlex::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Shared plumbing

struct Manifest {
    std::string command;
    json config = json::object();
    std::vector<fs::path> inputs;
    std::vector<fs::path> outputs;

    void write(const fs::path& primary_output) const {
        json j;
        j["command"] = command;
        j["config"] = config;
        j["inputs"] = json::array();
        for (const fs::path& p : inputs) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(p)));
            j["inputs"].push_back({{"path", p.string()}, {"fnv1a64", buf}});
        }
        j["outputs"] = json::array();
        for (const fs::path& p : outputs) {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(fnv1a64_file(p)));
            j["outputs"].push_back({{"path", p.string()}, {"fnv1a64", buf}});
        }
        const std::time_t now = std::time(nullptr);
        std::tm tm{};
        gmtime_r(&now, &tm);
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
        j["created_utc"] = stamp;  // the only timestamp in any output
        std::ofstream out(primary_output.string() + ".manifest.json", std::ios::binary);
        out << j.dump(2) << '\n';
    }
};

void check_overwrite(const fs::path& path, bool force) {
    if (!force && fs::exists(path)) {
        fail("output " + path.string() + " already exists; pass --force to overwrite");
    }
}

lexicon::FileFormat format_for(const fs::path& path) {
    return path.extension() == ".csv" ? lexicon::FileFormat::csv : lexicon::FileFormat::tsv;
}

lexicon::Lexicon load_lexicon_auto(const fs::path& path, const std::string& name = "") {
    return lexicon::load_lexicon(path, format_for(path), lexicon::Granularity::fine_grained, name);
}

bool is_de_facto_categorical(const lexicon::Lexicon& lex) {
    for (const auto& [term, score] : lex.entries) {
        if (score != -1.0 && score != 0.0 && score != 1.0) return false;
    }
    return true;
}

std::string config_dir_default(const std::string& filename) {
    const char* dir = std::getenv("ECONLEX_CONFIG_DIR");
    if (dir == nullptr) return "";
    const fs::path candidate = fs::path(dir) / filename;
    return fs::exists(candidate) ? candidate.string() : "";
}

struct CorpusFlags {
    std::string corpus;
    std::string concepts;
    bool strict = false;
    std::string exclude_topic;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    void add_to(CLI::App* cmd) {
        cmd->add_option("--corpus", corpus, "JSON-lines corpus (id,date,source,title,body)")
            ->required();
        cmd->add_option("--concepts", concepts, "concept list, one term per line")
            ->default_val(config_dir_default("concepts.txt"));
        cmd->add_flag("--strict", strict, "treat malformed corpus lines as errors");
        cmd->add_option("--exclude-topic", exclude_topic, "drop documents with this topic");
        cmd->add_option("--jobs", jobs, "worker threads for corpus stages");
    }

    std::vector<corpus::SentenceRecord> load_records(Manifest& manifest) const {
        if (concepts.empty()) fail("--concepts is required (or set ECONLEX_CONFIG_DIR)");
        const corpus::ConceptList list = corpus::ConceptList::load(concepts);
        corpus::IngestOptions opts;
        opts.strict = strict;
        opts.exclude_topic = exclude_topic;
        std::vector<corpus::SentenceRecord> records;
        const corpus::IngestStats stats = corpus::ingest(corpus, opts, [&](corpus::Document&& doc) {
            auto recs = corpus::extract_records(doc, list);
            records.insert(records.end(), std::make_move_iterator(recs.begin()),
                           std::make_move_iterator(recs.end()));
        });
        if (stats.skipped > 0) {
            std::cerr << "warning: skipped " << stats.skipped << " malformed corpus line(s)\n";
        }
        manifest.inputs.push_back(corpus);
        manifest.inputs.push_back(concepts);
        manifest.config["corpus"] = corpus;
        manifest.config["concepts"] = concepts;
        manifest.config["strict"] = strict;
        if (!exclude_topic.empty()) manifest.config["exclude_topic"] = exclude_topic;
        return records;
    }
};

sentiment::Mode parse_mode(const std::string& mode) {
    if (mode == "categorical") return sentiment::Mode::categorical;
    if (mode == "fine") return sentiment::Mode::fine;
    throw CLI::ValidationError("--mode", "must be 'categorical' or 'fine'");
}

sentiment::Frequency parse_freq(const std::string& freq) {
    if (freq == "monthly") return sentiment::Frequency::monthly;
    if (freq == "daily") return sentiment::Frequency::daily;
    throw CLI::ValidationError("--freq", "must be 'monthly' or 'daily'");
}

void warn_mode_mismatch(const lexicon::Lexicon& lex, sentiment::Mode mode) {
    if (mode == sentiment::Mode::fine && is_de_facto_categorical(lex)) {
        std::cerr << "warning: lexicon '" << lex.name
                  << "' only carries categorical scores; fine mode proceeds with +-1/0\n";
    }
}

std::string series_name(const fs::path& path) { return path.stem().string(); }

std::vector<int> parse_horizons(const std::string& text) {
    std::vector<int> horizons;
    const auto push_range = [&](std::string_view part) {
        const std::size_t dots = part.find("..");
        if (dots == std::string_view::npos) {
            horizons.push_back(std::stoi(std::string(part)));
            return;
        }
        const int lo = std::stoi(std::string(part.substr(0, dots)));
        const int hi = std::stoi(std::string(part.substr(dots + 2)));
        if (hi < lo) throw CLI::ValidationError("--horizons", "range upper bound below lower");
        for (int h = lo; h <= hi; ++h) horizons.push_back(h);
    };
    for (const auto& part : split(text, ',')) {
        if (!trim(part).empty()) push_range(trim(part));
    }
    if (horizons.empty()) throw CLI::ValidationError("--horizons", "no horizons given");
    return horizons;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write " + path.string());
    out << content;
}

json ep_metadata(const sentiment::EpSeries& series, const std::string& denominator) {
    // Calendar gaps inside the covered range are legal but must be visible.
    std::size_t missing = 0;
    if (series.freq == sentiment::Frequency::monthly && series.values.size() > 1) {
        const Date first = series.values.begin()->first;
        const Date last = series.values.rbegin()->first;
        std::size_t span = 0;
        for (Date d = first; d <= last; d = add_months(d, 1)) ++span;
        missing = span - series.values.size();
    }
    return json{
        {"lexicon", series.lexicon_name},
        {"mode", series.mode == sentiment::Mode::categorical ? "categorical" : "fine"},
        {"freq", series.freq == sentiment::Frequency::monthly ? "monthly" : "daily"},
        {"standardized", series.standardized},
        {"smoothing_window", series.smoothing_window},
        {"denominator", denominator},
        {"periods", series.values.size()},
        {"missing_periods", missing},
    };
}

// ---------------------------------------------------------------------------
// Subcommand implementations. Each returns the primary output path (for the
// manifest) after writing its artifacts.

struct BuildLexiconArgs {
    std::string conllu, concepts, relations, votes, annotations, review_flags;
    std::string candidates_out, out, name = "lexicon";
    std::size_t min_count = 65, quorum = 2, min_flags = 1;
    std::string count_key = "lemma";
    double disagreement_threshold = 0.3;
    bool force = false;
};

int run_build_lexicon(const BuildLexiconArgs& a) {
    Manifest manifest;
    manifest.command = "build-lexicon";
    manifest.config = {{"min_count", a.min_count},   {"quorum", a.quorum},
                       {"min_flags", a.min_flags},   {"count_key", a.count_key},
                       {"disagreement_threshold", a.disagreement_threshold}};

    depparse::CandidateTable table;
    if (!a.conllu.empty()) {
        const std::string concepts_path =
            !a.concepts.empty() ? a.concepts : config_dir_default("concepts.txt");
        if (concepts_path.empty()) fail("--concepts is required with --conllu");
        const corpus::ConceptList concepts = corpus::ConceptList::load(concepts_path);
        depparse::RelationConfig relations;
        std::string relations_path =
            !a.relations.empty() ? a.relations : config_dir_default("relations.conf");
        if (!relations_path.empty()) relations = depparse::RelationConfig::load(relations_path);

        std::vector<depparse::NounPhrase> phrases;
        for (const depparse::DepSentence& sentence : depparse::parse_conllu(a.conllu)) {
            auto np = depparse::extract_noun_phrases(sentence, concepts, relations);
            phrases.insert(phrases.end(), std::make_move_iterator(np.begin()),
                           std::make_move_iterator(np.end()));
        }
        const depparse::CountKey key =
            a.count_key == "form" ? depparse::CountKey::form : depparse::CountKey::lemma;
        table = depparse::harvest_candidates(phrases, a.min_count, key);
        manifest.inputs.push_back(a.conllu);
        manifest.inputs.push_back(concepts_path);
        if (!relations_path.empty()) manifest.inputs.push_back(relations_path);

        if (!a.votes.empty()) {
            std::map<std::string, std::vector<bool>> votes;
            std::ifstream in(a.votes);
            if (!in) fail("cannot open votes " + a.votes);
            std::string raw;
            while (std::getline(in, raw)) {
                const std::string_view sv = trim(raw);
                if (sv.empty() || sv.front() == '#') continue;
                const auto fields = split(sv, '\t');
                if (fields.size() < 2) fail("votes: expected lemma<TAB>vote...");
                std::vector<bool>& ballot = votes[ascii_lower(fields[0])];
                for (std::size_t i = 1; i < fields.size(); ++i) {
                    ballot.push_back(trim(fields[i]) == "1" || ascii_lower(trim(fields[i])) == "t");
                }
            }
            const auto kept = depparse::shortlist(table, votes, a.quorum);
            depparse::CandidateTable pruned;
            pruned.total_instances = table.total_instances;
            for (const std::string& lemma : kept) pruned.counts[lemma] = table.counts.at(lemma);
            table = std::move(pruned);
            manifest.inputs.push_back(a.votes);
        }
        if (!a.candidates_out.empty()) {
            check_overwrite(a.candidates_out, a.force);
            depparse::save_candidates(table, a.candidates_out);
            manifest.outputs.push_back(a.candidates_out);
            std::cout << "candidates: " << table.counts.size() << " terms ("
                      << table.total_instances << " modifier instances)\n";
        }
    }

    if (a.annotations.empty()) {
        if (a.conllu.empty()) fail("nothing to do: pass --conllu and/or --annotations");
        if (a.candidates_out.empty()) fail("pass --candidates-out to write the candidate table");
        manifest.write(a.candidates_out);
        return 0;
    }

    if (a.out.empty()) fail("--out is required when building a lexicon from annotations");
    std::vector<annotate::AggregatedTerm> aggregated;
    for (const annotate::AnnotationSheet& sheet : annotate::load_annotations(a.annotations)) {
        aggregated.push_back(annotate::aggregate(sheet));
    }
    manifest.inputs.push_back(a.annotations);

    const auto flagged = annotate::flag_disagreement(aggregated, a.disagreement_threshold);
    if (!flagged.empty()) {
        std::cerr << "note: " << flagged.size()
                  << " term(s) show sign disagreement at threshold "
                  << format_double(a.disagreement_threshold) << '\n';
    }
    std::map<std::string, std::size_t> review;
    if (!a.review_flags.empty()) {
        review = annotate::load_review_flags(a.review_flags);
        manifest.inputs.push_back(a.review_flags);
        for (annotate::AggregatedTerm& term : aggregated) {
            const auto it = review.find(term.term);
            if (it != review.end()) term.ambiguous_flags = it->second;
        }
    }
    const lexicon::Lexicon lex = annotate::disambiguate(aggregated, review, a.min_flags, a.name);
    if (lex.entries.empty()) std::cerr << "warning: all terms were filtered; lexicon is empty\n";

    check_overwrite(a.out, a.force);
    lexicon::save_lexicon(lex, a.out, format_for(a.out));
    manifest.outputs.push_back(a.out);
    manifest.write(a.out);
    std::cout << "lexicon '" << lex.name << "': " << lex.entries.size() << " terms ("
              << aggregated.size() - lex.entries.size() << " removed)\n";
    return 0;
}

struct CompareArgs {
    std::string a, b, a_name, b_name, out;
    bool force = false;
};

json report_to_json(const lexicon::ComparisonReport& r) {
    const auto classes = [](const lexicon::ClassCounts& c) {
        return json{{"negative", c.negative}, {"neutral", c.neutral}, {"positive", c.positive}};
    };
    return json{
        {"a", r.name_a},
        {"b", r.name_b},
        {"common_terms", r.common_terms},
        {"agree_total", r.agree_total},
        {"agree_by_class", classes(r.agree_by_class)},
        {"disagree", r.disagree},
        {"opposite_sign", r.opposite_sign},
        {"only_in_a", r.only_in_a},
        {"only_in_a_by_class", classes(r.only_in_a_by_class)},
        {"only_in_b", r.only_in_b},
        {"only_in_b_by_class", classes(r.only_in_b_by_class)},
    };
}

int run_compare(const CompareArgs& args) {
    const lexicon::Lexicon a = load_lexicon_auto(args.a, args.a_name);
    const lexicon::Lexicon b = load_lexicon_auto(args.b, args.b_name);
    const lexicon::ComparisonReport report = lexicon::compare(a, b);

    const auto counts_a = lexicon::category_counts(a);
    const auto counts_b = lexicon::category_counts(b);
    std::cout << "lexicon " << a.name << ": " << counts_a.total << " terms (" << counts_a.negative
              << " neg, " << counts_a.neutral << " neu, " << counts_a.positive << " pos)\n";
    std::cout << "lexicon " << b.name << ": " << counts_b.total << " terms (" << counts_b.negative
              << " neg, " << counts_b.neutral << " neu, " << counts_b.positive << " pos)\n";
    std::cout << "common terms:        " << report.common_terms << '\n'
              << "  agree on class:    " << report.agree_total << " (" << report.agree_by_class.negative
              << " neg, " << report.agree_by_class.neutral << " neu, "
              << report.agree_by_class.positive << " pos)\n"
              << "  disagree on class: " << report.disagree << '\n'
              << "  opposite sign:     " << report.opposite_sign << '\n'
              << "only in " << a.name << ": " << report.only_in_a << '\n'
              << "only in " << b.name << ": " << report.only_in_b << '\n';

    if (!args.out.empty()) {
        check_overwrite(args.out, args.force);
        write_text(args.out, report_to_json(report).dump(2) + "\n");
        Manifest manifest;
        manifest.command = "compare";
        manifest.config = {{"a", args.a}, {"b", args.b}};
        manifest.inputs = {args.a, args.b};
        manifest.outputs = {args.out};
        manifest.write(args.out);
    }
    return 0;
}

struct ScoreArgs {
    CorpusFlags corpus;
    std::string lexicon, mode = "categorical", out;
    bool force = false;
};

int run_score(const ScoreArgs& args) {
    Manifest manifest;
    manifest.command = "score";
    const auto records = args.corpus.load_records(manifest);
    lexicon::Lexicon lex = load_lexicon_auto(args.lexicon);
    const sentiment::Mode mode = parse_mode(args.mode);
    warn_mode_mismatch(lex, mode);
    if (mode == sentiment::Mode::categorical) lex = lexicon::to_categorical(lex);
    const sentiment::ScoringIndex index(lex);

    check_overwrite(args.out, args.force);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) fail("cannot write " + args.out);
    out << "doc_id,date,pos_count,neg_count,count_score,sum_score\n";
    for (const corpus::SentenceRecord& rec : records) {
        const sentiment::SentenceScore s = sentiment::score_sentence(rec, index);
        out << rec.doc_id << ',' << format_date(rec.date) << ',' << s.pos_count << ','
            << s.neg_count << ',' << s.count_score << ',' << format_double(s.sum_score) << '\n';
    }
    out.close();
    manifest.inputs.push_back(args.lexicon);
    manifest.config["lexicon"] = args.lexicon;
    manifest.config["mode"] = args.mode;
    manifest.outputs.push_back(args.out);
    manifest.write(args.out);
    std::cout << "scored " << records.size() << " sentences\n";
    return 0;
}

struct EpArgs {
    CorpusFlags corpus;
    std::string lexicon, mode = "categorical", freq = "monthly", denominator = "filtered", out;
    int smooth_window = 1;
    bool standardize = false;
    bool force = false;
};

int run_ep_series(const EpArgs& args) {
    Manifest manifest;
    manifest.command = "ep-series";
    const lexicon::Lexicon lex = load_lexicon_auto(args.lexicon);

    sentiment::EpOptions opts;
    opts.mode = parse_mode(args.mode);
    opts.freq = parse_freq(args.freq);
    opts.jobs = args.corpus.jobs;
    warn_mode_mismatch(lex, opts.mode);

    std::map<Date, corpus::MonthlyCount> all_counts;
    std::vector<corpus::SentenceRecord> records;
    if (args.denominator == "all") {
        // Token totals over every sentence, before the concept filter.
        corpus::IngestOptions iopts;
        iopts.strict = args.corpus.strict;
        iopts.exclude_topic = args.corpus.exclude_topic;
        std::vector<corpus::SentenceRecord> all;
        corpus::ingest(args.corpus.corpus, iopts, [&](corpus::Document&& doc) {
            for (const std::string& sentence : corpus::segment(doc.body)) {
                corpus::SentenceRecord rec;
                rec.tokens = corpus::tokenize(sentence);
                if (rec.tokens.empty()) continue;
                rec.doc_id = doc.id;
                rec.date = doc.date;
                all.push_back(std::move(rec));
            }
        });
        // Keyed by exact date; ep_series floors to the requested frequency.
        for (const corpus::SentenceRecord& rec : all) {
            corpus::MonthlyCount& c = all_counts[rec.date];
            ++c.sentences;
            c.tokens += rec.tokens.size();
        }
        const corpus::ConceptList concepts = corpus::ConceptList::load(args.corpus.concepts);
        records = corpus::filter_economic(all, concepts);
        manifest.inputs.push_back(args.corpus.corpus);
        manifest.inputs.push_back(args.corpus.concepts);
        manifest.config["corpus"] = args.corpus.corpus;
        manifest.config["concepts"] = args.corpus.concepts;
        manifest.config["strict"] = args.corpus.strict;
        if (!args.corpus.exclude_topic.empty()) {
            manifest.config["exclude_topic"] = args.corpus.exclude_topic;
        }
        opts.denominator = sentiment::Denominator::all;
        opts.corpus_counts = &all_counts;
    } else if (args.denominator == "filtered") {
        records = args.corpus.load_records(manifest);
    } else {
        throw CLI::ValidationError("--denominator", "must be 'filtered' or 'all'");
    }

    sentiment::EpSeries series = sentiment::ep_series(records, lex, opts);
    if (args.standardize) series = sentiment::standardize(series);
    if (args.smooth_window > 1) series = sentiment::smooth(series, args.smooth_window);

    check_overwrite(args.out, args.force);
    sentiment::save_csv(series, args.out);
    write_text(fs::path(args.out).string() + ".meta.json",
               ep_metadata(series, args.denominator).dump(2) + "\n");

    manifest.inputs.push_back(args.lexicon);
    manifest.config["lexicon"] = args.lexicon;
    manifest.config["mode"] = args.mode;
    manifest.config["freq"] = args.freq;
    manifest.config["denominator"] = args.denominator;
    manifest.config["smooth"] = args.smooth_window;
    manifest.config["standardize"] = args.standardize;
    manifest.outputs.push_back(args.out);
    manifest.write(args.out);
    std::cout << "ep-series: " << series.values.size() << " periods from " << records.size()
              << " sentences\n";
    return 0;
}

struct RegressArgs {
    std::string target, target_name, bandwidth = "auto", out;
    std::vector<std::string> ep;
    int ar_lags = 2;
    bool force = false;
};

int run_regress(const RegressArgs& args) {
    std::map<std::string, econ::Series> series;
    const std::string target_name =
        args.target_name.empty() ? series_name(args.target) : args.target_name;
    series[target_name] = (sentiment::load_series_csv(args.target));

    econ::DesignSpec spec;
    spec.target = target_name;
    spec.ar_lags = args.ar_lags;
    for (const std::string& path : args.ep) {
        const std::string name = series_name(path);
        series[name] = (sentiment::load_series_csv(path));
        spec.regressors.push_back(name);
    }

    std::optional<int> bandwidth;
    if (args.bandwidth != "auto") bandwidth = std::stoi(args.bandwidth);

    const econ::DesignMatrix design = econ::build_design(series, spec);
    const econ::FitResult fit = econ::ols_newey_west(design, bandwidth);
    std::cout << econ::render_table({fit}, target_name);

    if (!args.out.empty()) {
        check_overwrite(args.out, args.force);
        json j = fit.to_json();
        j["model"] = "ols_newey_west";
        j["target"] = target_name;
        j["bandwidth"] = args.bandwidth;
        write_text(args.out, j.dump(2) + "\n");
        Manifest manifest;
        manifest.command = "regress";
        manifest.config = {{"target", args.target},
                           {"ar_lags", args.ar_lags},
                           {"bandwidth", args.bandwidth},
                           {"ep", args.ep}};
        manifest.inputs.push_back(args.target);
        for (const auto& p : args.ep) manifest.inputs.push_back(p);
        manifest.outputs.push_back(args.out);
        manifest.write(args.out);
    }
    return 0;
}

struct ForecastArgs {
    std::string recession, spread, ads, out;
    std::vector<std::string> ep;
    int horizon = 3;
    bool force = false;
};

econ::DesignMatrix forecast_design(const ForecastArgs& args, int horizon,
                                   const std::vector<std::string>& ep_paths) {
    std::map<std::string, econ::Series> series;
    const std::string target = series_name(args.recession);
    series[target] = (sentiment::load_series_csv(args.recession));

    econ::DesignSpec spec;
    spec.target = target;
    spec.horizon = horizon;
    if (!args.spread.empty()) {
        const std::string name = series_name(args.spread);
        series[name] = (sentiment::load_series_csv(args.spread));
        spec.regressors.push_back(name);
    }
    if (!args.ads.empty()) {
        const std::string name = series_name(args.ads);
        series[name] = (sentiment::load_series_csv(args.ads));
        spec.regressors.push_back(name);
    }
    for (const std::string& path : ep_paths) {
        const std::string name = series_name(path);
        series[name] = (sentiment::load_series_csv(path));
        spec.regressors.push_back(name);
    }
    return econ::build_design(series, spec);
}

int run_forecast(const ForecastArgs& args) {
    const econ::DesignMatrix design = forecast_design(args, args.horizon, args.ep);
    const econ::FitResult fit = econ::logit_mle(design);
    for (const std::string& warning : fit.warnings) std::cerr << "warning: " << warning << '\n';
    std::cout << econ::render_table({fit}, design.target_name + "(t+" +
                                              std::to_string(args.horizon) + ")");

    if (!args.out.empty()) {
        check_overwrite(args.out, args.force);
        json j = fit.to_json();
        j["model"] = "logit_mle";
        j["target"] = design.target_name;
        j["horizon"] = args.horizon;
        write_text(args.out, j.dump(2) + "\n");
        Manifest manifest;
        manifest.command = "forecast";
        manifest.config = {{"horizon", args.horizon}, {"ep", args.ep}};
        manifest.inputs.push_back(args.recession);
        if (!args.spread.empty()) manifest.inputs.push_back(args.spread);
        if (!args.ads.empty()) manifest.inputs.push_back(args.ads);
        for (const auto& p : args.ep) manifest.inputs.push_back(p);
        manifest.outputs.push_back(args.out);
        manifest.write(args.out);
    }
    return 0;
}

struct AucTestArgs {
    std::string recession, spread, ads, ep_a, ep_b, horizons = "1..12", out;
    bool force = false;
};

int run_auc_test(const AucTestArgs& args) {
    ForecastArgs base;
    base.recession = args.recession;
    base.spread = args.spread;
    base.ads = args.ads;

    json rows = json::array();
    std::cout << "h    auc_a    auc_b    z        p(one-sided)\n";
    for (const int h : parse_horizons(args.horizons)) {
        const econ::DesignMatrix da = forecast_design(base, h, {args.ep_a});
        const econ::DesignMatrix db = forecast_design(base, h, {args.ep_b});
        if (da.row_dates != db.row_dates) {
            fail("auc-test: the two models cover different samples at horizon " +
                 std::to_string(h));
        }
        const econ::FitResult fa = econ::logit_mle(da);
        const econ::FitResult fb = econ::logit_mle(db);
        std::vector<int> labels(static_cast<std::size_t>(da.y.size()));
        for (Eigen::Index i = 0; i < da.y.size(); ++i) {
            labels[static_cast<std::size_t>(i)] = da.y(i) == 1.0 ? 1 : 0;
        }
        const std::vector<double> sa(fa.fitted.data(), fa.fitted.data() + fa.fitted.size());
        const std::vector<double> sb(fb.fitted.data(), fb.fitted.data() + fb.fitted.size());
        const econ::AucComparison cmp = econ::auc_compare(sa, sb, labels);

        char line[96];
        std::snprintf(line, sizeof line, "%-4d %.4f   %.4f   %+.3f   %.4f%s\n", h, cmp.auc_a,
                      cmp.auc_b, cmp.z, cmp.p_value, cmp.degenerate ? " (degenerate)" : "");
        std::cout << line;
        rows.push_back({{"horizon", h},
                        {"auc_a", cmp.auc_a},
                        {"auc_b", cmp.auc_b},
                        {"z", cmp.z},
                        {"p_value", cmp.p_value},
                        {"degenerate", cmp.degenerate},
                        {"n_obs", labels.size()}});
    }
    if (!args.out.empty()) {
        check_overwrite(args.out, args.force);
        write_text(args.out, json{{"model_a", args.ep_a}, {"model_b", args.ep_b},
                                  {"results", rows}}
                                     .dump(2) +
                                 "\n");
        Manifest manifest;
        manifest.command = "auc-test";
        manifest.config = {{"horizons", args.horizons}};
        manifest.inputs = {args.recession, args.ep_a, args.ep_b};
        if (!args.spread.empty()) manifest.inputs.push_back(args.spread);
        if (!args.ads.empty()) manifest.inputs.push_back(args.ads);
        manifest.outputs.push_back(args.out);
        manifest.write(args.out);
    }
    return 0;
}

struct DecomposeArgs {
    CorpusFlags corpus;
    std::string base, reference, mode = "categorical", freq = "monthly", out;
    bool force = false;
};

int run_decompose(const DecomposeArgs& args) {
    Manifest manifest;
    manifest.command = "decompose";
    const auto records = args.corpus.load_records(manifest);
    const lexicon::Lexicon base = load_lexicon_auto(args.base);
    const lexicon::Lexicon reference = load_lexicon_auto(args.reference);

    sentiment::EpOptions opts;
    opts.mode = parse_mode(args.mode);
    opts.freq = parse_freq(args.freq);
    opts.jobs = args.corpus.jobs;
    warn_mode_mismatch(base, opts.mode);

    const econ::EpDecomposition dec = econ::delta_ep_decomposition(records, base, reference, opts);

    check_overwrite(args.out, args.force);
    std::ofstream out(args.out, std::ios::binary);
    if (!out) fail("cannot write " + args.out);
    const bool monthly = opts.freq == sentiment::Frequency::monthly;
    out << (monthly ? "month" : "date") << ",ep,delta_disagree,delta_only_ref\n";
    for (const auto& [date, ep] : dec.base.values) {
        out << (monthly ? format_month(date) : format_date(date)) << ',' << format_double(ep)
            << ',' << format_double(dec.delta_disagree.values.at(date)) << ','
            << format_double(dec.delta_only_ref.values.at(date)) << '\n';
    }
    out.close();

    manifest.inputs.push_back(args.base);
    manifest.inputs.push_back(args.reference);
    manifest.config["base"] = args.base;
    manifest.config["reference"] = args.reference;
    manifest.config["mode"] = args.mode;
    manifest.config["freq"] = args.freq;
    manifest.outputs.push_back(args.out);
    manifest.write(args.out);
    std::cout << "decompose: " << dec.base.values.size() << " periods\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
    CLI::App app{"econlex: build, compare and evaluate economic sentiment lexicons"};
    app.require_subcommand(1);

    BuildLexiconArgs bl;
    CLI::App* build = app.add_subcommand(
        "build-lexicon", "candidate extraction from parsed text and annotation aggregation");
    build->add_option("--conllu", bl.conllu, "dependency-parsed sentences (CoNLL-U)");
    build->add_option("--concepts", bl.concepts, "concept list for head matching");
    build->add_option("--relations", bl.relations, "modifier relation config override");
    build->add_option("--min-count", bl.min_count, "frequency threshold for candidates")
        ->default_val(65);
    build->add_option("--count-key", bl.count_key, "count by 'lemma' or 'form'")
        ->default_val("lemma");
    build->add_option("--votes", bl.votes, "sentiment votes: lemma<TAB>0/1 per annotator");
    build->add_option("--quorum", bl.quorum, "votes needed to keep a candidate")->default_val(2);
    build->add_option("--annotations", bl.annotations, "scores: term,annotator_id,score,phrase");
    build->add_option("--review-flags", bl.review_flags, "ambiguity flags: term,flag_count");
    build->add_option("--min-flags", bl.min_flags, "flags needed to drop a term")->default_val(1);
    build->add_option("--disagreement-threshold", bl.disagreement_threshold,
                      "minority-sign fraction that marks disagreement")
        ->default_val(0.3);
    build->add_option("--candidates-out", bl.candidates_out, "write the candidate table here");
    build->add_option("--out", bl.out, "write the aggregated lexicon here");
    build->add_option("--name", bl.name, "name recorded in the output lexicon");
    build->add_flag("--force", bl.force, "overwrite existing outputs");

    CompareArgs cmp;
    CLI::App* compare = app.add_subcommand("compare", "word-level comparison of two lexicons");
    compare->add_option("--a", cmp.a, "first lexicon file")->required();
    compare->add_option("--b", cmp.b, "second lexicon file")->required();
    compare->add_option("--a-name", cmp.a_name, "display name for the first lexicon");
    compare->add_option("--b-name", cmp.b_name, "display name for the second lexicon");
    compare->add_option("--out", cmp.out, "write the full report as JSON");
    compare->add_flag("--force", cmp.force, "overwrite existing outputs");

    ScoreArgs sc;
    CLI::App* score = app.add_subcommand("score", "per-sentence lexicon scores over a corpus");
    sc.corpus.add_to(score);
    score->add_option("--lexicon", sc.lexicon, "lexicon file")->required();
    score->add_option("--mode", sc.mode, "categorical or fine")->default_val("categorical");
    score->add_option("--out", sc.out, "output CSV")->required();
    score->add_flag("--force", sc.force, "overwrite existing outputs");

    EpArgs ep;
    CLI::App* eps = app.add_subcommand("ep-series", "economic pessimism time series");
    ep.corpus.add_to(eps);
    eps->add_option("--lexicon", ep.lexicon, "lexicon file")->required();
    eps->add_option("--mode", ep.mode, "categorical or fine")->default_val("categorical");
    eps->add_option("--freq", ep.freq, "monthly or daily")->default_val("monthly");
    eps->add_option("--denominator", ep.denominator,
                    "token universe: 'filtered' sentences or 'all' sentences")
        ->default_val("filtered");
    eps->add_option("--smooth", ep.smooth_window, "trailing moving-average window")
        ->default_val(1);
    eps->add_flag("--standardize", ep.standardize, "scale to mean 0, variance 1");
    eps->add_option("--out", ep.out, "output CSV")->required();
    eps->add_flag("--force", ep.force, "overwrite existing outputs");

    RegressArgs rg;
    CLI::App* regress = app.add_subcommand(
        "regress", "OLS with Newey-West errors: series on its lags plus pessimism measures");
    regress->add_option("--target", rg.target, "dependent series CSV (date,value)")->required();
    regress->add_option("--target-name", rg.target_name, "name override for the target");
    regress->add_option("--ep", rg.ep, "pessimism series CSV (repeatable)")->required();
    regress->add_option("--ar-lags", rg.ar_lags, "lags of the dependent variable")->default_val(2);
    regress->add_option("--bandwidth", rg.bandwidth, "Newey-West lag window or 'auto'")
        ->default_val("auto");
    regress->add_option("--out", rg.out, "write the fit as JSON");
    regress->add_flag("--force", rg.force, "overwrite existing outputs");

    ForecastArgs fc;
    CLI::App* forecast = app.add_subcommand(
        "forecast", "logistic recession forecast from pessimism and controls");
    forecast->add_option("--recession", fc.recession, "binary recession series CSV")->required();
    forecast->add_option("--spread", fc.spread, "term spread series CSV");
    forecast->add_option("--ads", fc.ads, "business conditions series CSV");
    forecast->add_option("--ep", fc.ep, "pessimism series CSV (repeatable)")->required();
    forecast->add_option("--horizon", fc.horizon, "forecast horizon in months")->default_val(3);
    forecast->add_option("--out", fc.out, "write the fit as JSON");
    forecast->add_flag("--force", fc.force, "overwrite existing outputs");

    AucTestArgs at;
    CLI::App* auc = app.add_subcommand(
        "auc-test", "one-sided AUC comparison of two forecast models across horizons");
    auc->add_option("--recession", at.recession, "binary recession series CSV")->required();
    auc->add_option("--spread", at.spread, "term spread series CSV");
    auc->add_option("--ads", at.ads, "business conditions series CSV");
    auc->add_option("--ep-a", at.ep_a, "pessimism series for model A")->required();
    auc->add_option("--ep-b", at.ep_b, "pessimism series for model B")->required();
    auc->add_option("--horizons", at.horizons, "e.g. '1..12' or '1,3,6'")->default_val("1..12");
    auc->add_option("--out", at.out, "write results as JSON");
    auc->add_flag("--force", at.force, "overwrite existing outputs");

    DecomposeArgs dc;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "pessimism deltas from sign corrections and coverage extension");
    dc.corpus.add_to(decompose);
    decompose->add_option("--base", dc.base, "lexicon being modified")->required();
    decompose->add_option("--reference", dc.reference, "reference lexicon supplying scores")
        ->required();
    decompose->add_option("--mode", dc.mode, "categorical or fine")->default_val("categorical");
    decompose->add_option("--freq", dc.freq, "monthly or daily")->default_val("monthly");
    decompose->add_option("--out", dc.out, "output CSV")->required();
    decompose->add_flag("--force", dc.force, "overwrite existing outputs");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return run_build_lexicon(bl);
        if (compare->parsed()) return run_compare(cmp);
        if (score->parsed()) return run_score(sc);
        if (eps->parsed()) return run_ep_series(ep);
        if (regress->parsed()) return run_regress(rg);
        if (forecast->parsed()) return run_forecast(fc);
        if (auc->parsed()) return run_auc_test(at);
        if (decompose->parsed()) return run_decompose(dc);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace econlex::cli
