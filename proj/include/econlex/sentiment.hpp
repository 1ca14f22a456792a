#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "econlex/common.hpp"
#include "econlex/corpus.hpp"
#include "econlex/lexicon.hpp"

namespace econlex::sentiment {

struct SentenceScore {
    std::size_t pos_count = 0;
    std::size_t neg_count = 0;
    long long count_score = 0;  // pos_count - neg_count
    double sum_score = 0.0;     // sum of matched lexicon scores
};

/// Lookup structure for sentence scoring. Lexicon terms with one internal
/// space become bigram patterns matched on adjacent token pairs; bigrams take
/// precedence over unigrams and consume their tokens.
class ScoringIndex {
public:
    explicit ScoringIndex(const lexicon::Lexicon& lex);

    SentenceScore score(const std::vector<std::string>& tokens) const;

private:
    std::unordered_map<std::string, double> unigrams_;
    std::map<std::pair<std::string, std::string>, double> bigrams_;
};

SentenceScore score_sentence(const corpus::SentenceRecord& record, const ScoringIndex& index);

enum class Mode { categorical, fine };
enum class Frequency { monthly, daily };
enum class Denominator { filtered, all };

struct EpOptions {
    Mode mode = Mode::categorical;
    Frequency freq = Frequency::monthly;
    Denominator denominator = Denominator::filtered;
    /// Period token totals of the unfiltered corpus; required when
    /// denominator == all.
    const std::map<Date, corpus::MonthlyCount>* corpus_counts = nullptr;
    unsigned jobs = 1;
};

/// Economic Pessimism series: per period, the negated score-weighted match
/// frequency divided by the period's token total. Periods with no tokens are
/// missing, not zero.
struct EpSeries {
    std::string lexicon_name;
    Mode mode = Mode::categorical;
    Frequency freq = Frequency::monthly;
    std::map<Date, double> values;  // keys at month floor for monthly series
    bool standardized = false;
    int smoothing_window = 1;
};

EpSeries ep_series(const std::vector<corpus::SentenceRecord>& records,
                   const lexicon::Lexicon& lex, const EpOptions& opts = {});

/// (x - mean) / sd over non-missing values, sd with denominator n-1.
/// Errors on fewer than 2 values or a constant series.
EpSeries standardize(const EpSeries& series);

/// Trailing moving average over `window` periods; the first window-1 entries
/// average the available prefix. Missing periods stay missing.
EpSeries smooth(const EpSeries& series, int window);

/// Pearson correlation over the overlapping dates; requires >= 3.
double correlate(const std::map<Date, double>& a, const std::map<Date, double>& b);
double correlate(const EpSeries& a, const EpSeries& b);

/// CSV with header `month,value` (or `date,value` for daily series).
void save_csv(const EpSeries& series, const std::filesystem::path& path);

/// Reads `date,value` or `month,value` CSV into a date-keyed series.
std::map<Date, double> load_series_csv(const std::filesystem::path& path);

}  // namespace econlex::sentiment
