#include "econlex/annotate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace econlex::annotate {

namespace {

void check_score(double score, const std::filesystem::path& path, std::size_t line) {
    if (!(score >= -1.0 && score <= 1.0)) {
        fail_at(path, line, "annotation score out of range [-1,1]: " + format_double(score));
    }
    // One-decimal grid.
    const double scaled = score * 10.0;
    if (std::abs(scaled - std::round(scaled)) > 1e-9) {
        fail_at(path, line, "annotation score not on the one-decimal grid: " + format_double(score));
    }
}

}  // namespace

std::vector<AnnotationSheet> load_annotations(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open annotations " + path.string());

    std::map<std::string, AnnotationSheet> by_term;
    std::vector<std::string> order;  // keep first-seen term order
    std::string raw;
    std::size_t line_no = 0;
    bool header_checked = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string_view sv = raw;
        if (trim(sv).empty() || trim(sv).front() == '#') continue;
        if (!header_checked) {
            header_checked = true;
            if (ascii_lower(sv).starts_with("term,")) continue;
        }
        // term,annotator_id,score,phrase — the phrase may contain commas.
        const std::size_t c1 = sv.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : sv.find(',', c1 + 1);
        const std::size_t c3 = c2 == std::string_view::npos ? c2 : sv.find(',', c2 + 1);
        if (c3 == std::string_view::npos) {
            fail_at(path, line_no, "expected term,annotator_id,score,phrase");
        }
        const std::string term = ascii_lower(trim(sv.substr(0, c1)));
        if (term.empty()) fail_at(path, line_no, "empty term");
        const double score = parse_double(sv.substr(c2 + 1, c3 - c2 - 1), path, line_no);
        check_score(score, path, line_no);
        const std::string_view phrase = trim(sv.substr(c3 + 1));

        auto [it, inserted] = by_term.try_emplace(term);
        if (inserted) {
            it->second.term = term;
            order.push_back(term);
        }
        it->second.scores.push_back(score);
        if (it->second.context_phrase.empty()) it->second.context_phrase = std::string(phrase);
    }

    std::vector<AnnotationSheet> sheets;
    sheets.reserve(order.size());
    for (const std::string& term : order) sheets.push_back(std::move(by_term[term]));
    return sheets;
}

std::map<std::string, std::size_t> load_review_flags(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open review flags " + path.string());
    std::map<std::string, std::size_t> flags;
    std::string raw;
    std::size_t line_no = 0;
    bool header_checked = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string_view sv = raw;
        if (trim(sv).empty() || trim(sv).front() == '#') continue;
        if (!header_checked) {
            header_checked = true;
            if (ascii_lower(sv).starts_with("term,")) continue;
        }
        const auto fields = split(sv, ',');
        if (fields.size() != 2) fail_at(path, line_no, "expected term,flag_count");
        const std::string term = ascii_lower(trim(fields[0]));
        const double count = parse_double(fields[1], path, line_no);
        if (count < 0 || count != std::floor(count)) {
            fail_at(path, line_no, "flag count must be a non-negative integer");
        }
        flags[term] = static_cast<std::size_t>(count);
    }
    return flags;
}

AggregatedTerm aggregate(const AnnotationSheet& sheet) {
    if (sheet.scores.empty()) fail("empty score list for term '" + sheet.term + "'");
    for (const double s : sheet.scores) {
        if (!(s >= -1.0 && s <= 1.0)) {
            fail("score out of range for term '" + sheet.term + "': " + format_double(s));
        }
    }
    std::vector<double> sorted = sheet.scores;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    AggregatedTerm out;
    out.term = sheet.term;
    out.median_score = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
    for (const double s : sorted) {
        if (s < 0.0) ++out.sign_split.negative;
        else if (s > 0.0) ++out.sign_split.positive;
        else ++out.sign_split.zero;
    }
    return out;
}

std::vector<std::string> flag_disagreement(const std::vector<AggregatedTerm>& terms, double threshold) {
    if (!(threshold > 0.0 && threshold <= 0.5)) fail("disagreement threshold must be in (0, 0.5]");
    std::vector<std::string> flagged;
    for (const AggregatedTerm& term : terms) {
        const double n = static_cast<double>(term.sign_split.total());
        if (n == 0.0) continue;
        const double minority =
            static_cast<double>(std::min(term.sign_split.negative, term.sign_split.positive));
        if (minority / n >= threshold) flagged.push_back(term.term);
    }
    return flagged;
}

lexicon::Lexicon disambiguate(const std::vector<AggregatedTerm>& terms,
                              const std::map<std::string, std::size_t>& review_flags,
                              std::size_t min_flags, std::string name) {
    if (min_flags < 1) fail("min_flags must be >= 1");
    lexicon::Lexicon lex;
    lex.name = std::move(name);
    lex.granularity = lexicon::Granularity::fine_grained;
    lex.source_note = "annotation medians after ambiguity filtering";
    for (const AggregatedTerm& term : terms) {
        const auto it = review_flags.find(term.term);
        if (it != review_flags.end() && it->second >= min_flags) continue;
        lex.entries[term.term] = term.median_score;
    }
    return lex;
}

}  // namespace econlex::annotate
