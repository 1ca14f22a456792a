#include "econlex/sentiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

namespace econlex::sentiment {

// ---------------------------------------------------------------------------
// Sentence scoring

ScoringIndex::ScoringIndex(const lexicon::Lexicon& lex) {
    for (const auto& [term, score] : lex.entries) {
        const std::size_t space = term.find(' ');
        if (space == std::string::npos) {
            unigrams_.emplace(term, score);
        } else {
            bigrams_.emplace(std::make_pair(term.substr(0, space), term.substr(space + 1)), score);
        }
    }
}

SentenceScore ScoringIndex::score(const std::vector<std::string>& tokens) const {
    SentenceScore s;
    const auto tally = [&s](double value) {
        s.sum_score += value;
        if (value > 0.0) ++s.pos_count;
        else if (value < 0.0) ++s.neg_count;
    };
    std::size_t i = 0;
    while (i < tokens.size()) {
        if (!bigrams_.empty() && i + 1 < tokens.size()) {
            const auto it = bigrams_.find({tokens[i], tokens[i + 1]});
            if (it != bigrams_.end()) {
                tally(it->second);
                i += 2;  // longest match first; consumed tokens are not re-matched
                continue;
            }
        }
        const auto it = unigrams_.find(tokens[i]);
        if (it != unigrams_.end()) tally(it->second);
        ++i;
    }
    s.count_score = static_cast<long long>(s.pos_count) - static_cast<long long>(s.neg_count);
    return s;
}

SentenceScore score_sentence(const corpus::SentenceRecord& record, const ScoringIndex& index) {
    return index.score(record.tokens);
}

// ---------------------------------------------------------------------------
// EP series

namespace {

Date period_of(Date d, Frequency freq) { return freq == Frequency::monthly ? month_of(d) : d; }

std::vector<SentenceScore> score_all(const std::vector<corpus::SentenceRecord>& records,
                                     const ScoringIndex& index, unsigned jobs) {
    std::vector<SentenceScore> scores(records.size());
    if (jobs <= 1 || records.size() < 256) {
        for (std::size_t i = 0; i < records.size(); ++i) scores[i] = index.score(records[i].tokens);
        return scores;
    }
    // Scoring is pure per sentence; aggregation happens later in record order,
    // so the result is independent of the worker count.
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 64;
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= records.size()) return;
                const std::size_t end = std::min(begin + kChunk, records.size());
                for (std::size_t i = begin; i < end; ++i) scores[i] = index.score(records[i].tokens);
            }
        });
    }
    for (std::thread& t : workers) t.join();
    return scores;
}

}  // namespace

EpSeries ep_series(const std::vector<corpus::SentenceRecord>& records, const lexicon::Lexicon& lex,
                   const EpOptions& opts) {
    if (records.empty()) fail("ep_series: empty record stream");
    if (opts.denominator == Denominator::all && opts.corpus_counts == nullptr) {
        fail("ep_series: denominator 'all' requires corpus token counts");
    }

    const lexicon::Lexicon scored =
        opts.mode == Mode::categorical ? lexicon::to_categorical(lex) : lex;
    const ScoringIndex index(scored);
    const std::vector<SentenceScore> scores = score_all(records, index, opts.jobs);

    std::map<Date, double> numerator;   // sum of matched scores per period
    std::map<Date, double> denominator; // token totals per period
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Date period = period_of(records[i].date, opts.freq);
        numerator[period] += scores[i].sum_score;
        if (opts.denominator == Denominator::filtered) {
            denominator[period] += static_cast<double>(records[i].tokens.size());
        }
    }
    if (opts.denominator == Denominator::all) {
        for (const auto& [date, count] : *opts.corpus_counts) {
            denominator[period_of(date, opts.freq)] += static_cast<double>(count.tokens);
        }
    }

    EpSeries series;
    series.lexicon_name = lex.name;
    series.mode = opts.mode;
    series.freq = opts.freq;
    for (const auto& [period, num] : numerator) {
        const auto it = denominator.find(period);
        if (it == denominator.end() || it->second == 0.0) continue;  // missing, not zero
        series.values[period] = -num / it->second;
    }
    return series;
}

EpSeries standardize(const EpSeries& series) {
    const std::size_t n = series.values.size();
    if (n < 2) fail("standardize: need at least 2 values");
    double mean = 0.0;
    for (const auto& [date, v] : series.values) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (const auto& [date, v] : series.values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    if (sd == 0.0) fail("standardize: constant series");

    EpSeries out = series;
    for (auto& [date, v] : out.values) v = (v - mean) / sd;
    out.standardized = true;
    return out;
}

EpSeries smooth(const EpSeries& series, int window) {
    if (window < 1) fail("smooth: window must be >= 1");
    EpSeries out = series;
    std::vector<double> values;
    values.reserve(series.values.size());
    for (const auto& [date, v] : series.values) values.push_back(v);

    std::size_t i = 0;
    for (auto& [date, v] : out.values) {
        const std::size_t begin = i + 1 >= static_cast<std::size_t>(window)
                                      ? i + 1 - static_cast<std::size_t>(window)
                                      : 0;
        double sum = 0.0;
        for (std::size_t j = begin; j <= i; ++j) sum += values[j];
        v = sum / static_cast<double>(i - begin + 1);
        ++i;
    }
    out.smoothing_window = window;
    return out;
}

double correlate(const std::map<Date, double>& a, const std::map<Date, double>& b) {
    std::vector<double> xs, ys;
    for (const auto& [date, x] : a) {
        const auto it = b.find(date);
        if (it == b.end()) continue;
        xs.push_back(x);
        ys.push_back(it->second);
    }
    const std::size_t n = xs.size();
    if (n < 3) fail("correlate: need at least 3 overlapping dates, got " + std::to_string(n));
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) fail("correlate: zero variance in overlap");
    return sxy / std::sqrt(sxx * syy);
}

double correlate(const EpSeries& a, const EpSeries& b) { return correlate(a.values, b.values); }

void save_csv(const EpSeries& series, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write series " + path.string());
    const bool monthly = series.freq == Frequency::monthly;
    out << (monthly ? "month" : "date") << ",value\n";
    for (const auto& [date, v] : series.values) {
        out << (monthly ? format_month(date) : format_date(date)) << ',' << format_double(v) << '\n';
    }
}

std::map<Date, double> load_series_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open series " + path.string());
    std::map<Date, double> series;
    std::string raw;
    std::size_t line_no = 0;
    bool header_checked = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string_view sv = raw;
        if (trim(sv).empty() || trim(sv).front() == '#') continue;
        const auto fields = split(sv, ',');
        if (fields.size() != 2) fail_at(path, line_no, "expected date,value");
        if (!header_checked) {
            header_checked = true;
            const std::string first = ascii_lower(trim(fields[0]));
            if (first == "date" || first == "month") continue;
        }
        const Date date = parse_date(trim(fields[0]));
        const double value = parse_double(fields[1], path, line_no);
        if (!series.emplace(date, value).second) {
            fail_at(path, line_no, "duplicate date " + format_date(date));
        }
    }
    return series;
}

}  // namespace econlex::sentiment
