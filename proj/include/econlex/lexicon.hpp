#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "econlex/common.hpp"

namespace econlex::lexicon {

enum class Granularity { categorical, fine_grained };
enum class FileFormat { tsv, csv };

/// Sign of the stored score, compared exactly against zero.
enum class SentimentClass { negative, neutral, positive };

SentimentClass classify(double score);

/// A named term -> score map. Scores live in [-1, 1]; terms are unique,
/// non-empty, lowercased. Categorical lexicons only carry -1, 0, +1.
/// Immutable by convention after load: operations return new values.
struct Lexicon {
    std::string name;
    std::map<std::string, double> entries;
    Granularity granularity = Granularity::fine_grained;
    std::string source_note;

    std::size_t size() const { return entries.size(); }
};

struct CategoryCounts {
    std::size_t negative = 0;
    std::size_t neutral = 0;
    std::size_t positive = 0;
    std::size_t total = 0;
};

struct ClassCounts {
    std::size_t negative = 0;
    std::size_t neutral = 0;
    std::size_t positive = 0;

    std::size_t total() const { return negative + neutral + positive; }
};

struct PairedScore {
    std::string term;
    double score_a = 0.0;
    double score_b = 0.0;
};

/// Word-level comparison of two lexicons over their term intersection and
/// set differences. Agreement means identical SentimentClass; opposite_sign
/// counts the strict negative-vs-positive subset of the disagreements.
struct ComparisonReport {
    std::string name_a, name_b;
    std::size_t common_terms = 0;
    ClassCounts agree_by_class;
    std::size_t agree_total = 0;
    std::size_t disagree = 0;
    std::size_t opposite_sign = 0;
    std::size_t only_in_a = 0;
    std::size_t only_in_b = 0;
    ClassCounts only_in_a_by_class;
    ClassCounts only_in_b_by_class;
    std::vector<PairedScore> paired_scores;  // sorted by term
};

/// Reads `term<delim>score` with a header line, `#` comments, LF endings.
/// Duplicate terms (after lowercasing), empty terms, scores outside [-1,1]
/// and malformed rows are hard errors carrying the line number.
Lexicon load_lexicon(const std::filesystem::path& path, FileFormat format,
                     Granularity granularity = Granularity::fine_grained,
                     std::string name = "");

/// One term per line, all coded with the same score (LMD-style word list).
Lexicon load_word_list(const std::filesystem::path& path, double score, std::string name);

void save_lexicon(const Lexicon& lex, const std::filesystem::path& path,
                  FileFormat format = FileFormat::tsv);

CategoryCounts category_counts(const Lexicon& lex);

ComparisonReport compare(const Lexicon& a, const Lexicon& b);

/// Terms shared with `reference` whose classes are strictly opposite
/// (negative vs positive) take the reference score; everything else is kept.
Lexicon modify_disagree(const Lexicon& base, const Lexicon& reference);

/// Reference terms missing from `base`, or neutral (score exactly 0) in it,
/// are inserted with the reference score. Non-zero base scores are never
/// overwritten.
Lexicon modify_only_el(const Lexicon& base, const Lexicon& reference);

/// Maps every score to its sign: +1 / -1 / 0.
Lexicon to_categorical(const Lexicon& lex);

}  // namespace econlex::lexicon
