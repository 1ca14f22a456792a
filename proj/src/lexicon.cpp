#include "econlex/lexicon.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace econlex::lexicon {

SentimentClass classify(double score) {
    if (score < 0.0) return SentimentClass::negative;
    if (score > 0.0) return SentimentClass::positive;
    return SentimentClass::neutral;
}

namespace {

char delimiter(FileFormat format) { return format == FileFormat::tsv ? '\t' : ','; }

bool is_categorical_score(double s) { return s == -1.0 || s == 0.0 || s == 1.0; }

void check_score(double score, const std::filesystem::path& path, std::size_t line, Granularity granularity) {
    if (!(score >= -1.0 && score <= 1.0)) {
        fail_at(path, line, "score out of range [-1,1]: " + format_double(score));
    }
    if (granularity == Granularity::categorical && !is_categorical_score(score)) {
        fail_at(path, line, "categorical lexicon requires scores in {-1,0,1}, got " + format_double(score));
    }
}

void insert_term(Lexicon& lex, std::string term, double score,
                 const std::filesystem::path& path, std::size_t line) {
    if (term.empty()) fail_at(path, line, "empty term");
    auto [it, inserted] = lex.entries.emplace(std::move(term), score);
    if (!inserted) fail_at(path, line, "duplicate term '" + it->first + "'");
}

std::string default_name(const std::filesystem::path& path, const std::string& name) {
    return name.empty() ? path.stem().string() : name;
}

void count_class(ClassCounts& counts, SentimentClass c) {
    switch (c) {
        case SentimentClass::negative: ++counts.negative; break;
        case SentimentClass::neutral: ++counts.neutral; break;
        case SentimentClass::positive: ++counts.positive; break;
    }
}

}  // namespace

Lexicon load_lexicon(const std::filesystem::path& path, FileFormat format,
                     Granularity granularity, std::string name) {
    std::ifstream in(path);
    if (!in) fail("cannot open lexicon file " + path.string());

    Lexicon lex;
    lex.name = default_name(path, name);
    lex.granularity = granularity;
    lex.source_note = "loaded from " + path.string();

    const char delim = delimiter(format);
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string_view sv = raw;
        if (trim(sv).empty() || trim(sv).front() == '#') continue;
        const auto fields = split(sv, delim);
        if (fields.size() != 2) {
            fail_at(path, line_no, "expected 2 fields (term, score), got " + std::to_string(fields.size()));
        }
        if (!header_seen) {
            header_seen = true;
            if (ascii_lower(trim(fields[0])) == "term") continue;  // header row
        }
        const double score = parse_double(fields[1], path, line_no);
        check_score(score, path, line_no, granularity);
        insert_term(lex, ascii_lower(trim(fields[0])), score, path, line_no);
    }
    return lex;
}

Lexicon load_word_list(const std::filesystem::path& path, double score, std::string name) {
    if (!(score >= -1.0 && score <= 1.0)) fail("word-list score out of range [-1,1]");
    std::ifstream in(path);
    if (!in) fail("cannot open word list " + path.string());

    Lexicon lex;
    lex.name = default_name(path, name);
    lex.granularity = is_categorical_score(score) ? Granularity::categorical : Granularity::fine_grained;
    lex.source_note = "word list " + path.string() + " coded " + format_double(score);

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string_view sv = trim(raw);
        if (sv.empty() || sv.front() == '#') continue;
        insert_term(lex, ascii_lower(sv), score, path, line_no);
    }
    return lex;
}

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path, FileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write lexicon file " + path.string());
    const char delim = delimiter(format);
    out << "term" << delim << "score\n";
    for (const auto& [term, score] : lex.entries) {
        out << term << delim << format_double(score) << '\n';
    }
}

CategoryCounts category_counts(const Lexicon& lex) {
    CategoryCounts c;
    for (const auto& [term, score] : lex.entries) {
        switch (classify(score)) {
            case SentimentClass::negative: ++c.negative; break;
            case SentimentClass::neutral: ++c.neutral; break;
            case SentimentClass::positive: ++c.positive; break;
        }
    }
    c.total = lex.entries.size();
    return c;
}

ComparisonReport compare(const Lexicon& a, const Lexicon& b) {
    ComparisonReport r;
    r.name_a = a.name;
    r.name_b = b.name;
    for (const auto& [term, score_a] : a.entries) {
        const auto it = b.entries.find(term);
        if (it == b.entries.end()) {
            ++r.only_in_a;
            count_class(r.only_in_a_by_class, classify(score_a));
            continue;
        }
        const double score_b = it->second;
        ++r.common_terms;
        r.paired_scores.push_back({term, score_a, score_b});
        const SentimentClass ca = classify(score_a);
        const SentimentClass cb = classify(score_b);
        if (ca == cb) {
            count_class(r.agree_by_class, ca);
        } else {
            ++r.disagree;
            const bool opposite = (ca == SentimentClass::negative && cb == SentimentClass::positive) ||
                                  (ca == SentimentClass::positive && cb == SentimentClass::negative);
            if (opposite) ++r.opposite_sign;
        }
    }
    for (const auto& [term, score_b] : b.entries) {
        if (!a.entries.contains(term)) {
            ++r.only_in_b;
            count_class(r.only_in_b_by_class, classify(score_b));
        }
    }
    r.agree_total = r.agree_by_class.total();
    return r;
}

namespace {

Granularity infer_granularity(const Lexicon& lex, Granularity fallback) {
    for (const auto& [term, score] : lex.entries) {
        if (!is_categorical_score(score)) return Granularity::fine_grained;
    }
    return fallback;
}

}  // namespace

Lexicon modify_disagree(const Lexicon& base, const Lexicon& reference) {
    Lexicon out = base;
    out.name = base.name + ".disagree";
    for (auto& [term, score] : out.entries) {
        const auto it = reference.entries.find(term);
        if (it == reference.entries.end()) continue;
        const SentimentClass cb = classify(score);
        const SentimentClass cr = classify(it->second);
        const bool opposite = (cb == SentimentClass::negative && cr == SentimentClass::positive) ||
                              (cb == SentimentClass::positive && cr == SentimentClass::negative);
        if (opposite) score = it->second;
    }
    out.granularity = infer_granularity(out, base.granularity);
    return out;
}

Lexicon modify_only_el(const Lexicon& base, const Lexicon& reference) {
    Lexicon out = base;
    out.name = base.name + ".onlyel";
    for (const auto& [term, ref_score] : reference.entries) {
        const auto it = out.entries.find(term);
        if (it == out.entries.end()) {
            out.entries.emplace(term, ref_score);
        } else if (it->second == 0.0) {
            it->second = ref_score;
        }
    }
    out.granularity = infer_granularity(out, base.granularity);
    return out;
}

Lexicon to_categorical(const Lexicon& lex) {
    Lexicon out = lex;
    for (auto& [term, score] : out.entries) {
        score = score > 0.0 ? 1.0 : (score < 0.0 ? -1.0 : 0.0);
    }
    out.granularity = Granularity::categorical;
    return out;
}

}  // namespace econlex::lexicon
