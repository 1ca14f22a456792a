#pragma once

#include <map>
#include <string>
#include <vector>

#include "econlex/common.hpp"
#include "econlex/lexicon.hpp"

namespace econlex::annotate {

/// Per-term annotator scores. Scores lie in [-1, 1] on the one-decimal grid.
struct AnnotationSheet {
    std::string term;
    std::vector<double> scores;
    std::string context_phrase;
};

struct SignSplit {
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;

    std::size_t total() const { return negative + zero + positive; }
};

struct AggregatedTerm {
    std::string term;
    double median_score = 0.0;
    SignSplit sign_split;
    std::size_t ambiguous_flags = 0;
};

/// Reads `term,annotator_id,score,phrase` rows (header optional, `#`
/// comments); the phrase is the remainder of the line and may contain commas.
std::vector<AnnotationSheet> load_annotations(const std::filesystem::path& path);

/// Reads `term,flag_count` rows.
std::map<std::string, std::size_t> load_review_flags(const std::filesystem::path& path);

/// Median (mean of the middle pair for even n) plus the sign split.
AggregatedTerm aggregate(const AnnotationSheet& sheet);

/// Terms whose minority-sign fraction min(neg, pos)/n reaches `threshold`.
/// Zeros count as neither sign. Requires 0 < threshold <= 0.5.
std::vector<std::string> flag_disagreement(const std::vector<AggregatedTerm>& terms,
                                           double threshold = 0.3);

/// Drops terms with at least `min_flags` review flags; the survivors become a
/// fine-grained Lexicon of median scores.
lexicon::Lexicon disambiguate(const std::vector<AggregatedTerm>& terms,
                              const std::map<std::string, std::size_t>& review_flags,
                              std::size_t min_flags = 1,
                              std::string name = "disambiguated");

}  // namespace econlex::annotate
