#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "econlex/common.hpp"

namespace econlex::corpus {

struct Document {
    std::string id;
    Date date;
    std::string source;
    std::string title;
    std::string body;
    std::string topic;  // optional; used by --exclude-topic
};

/// A tokenized sentence that matched at least one economic concept.
struct SentenceRecord {
    std::string doc_id;
    Date date;
    std::vector<std::string> tokens;             // lowercased
    std::vector<std::string> matched_concepts;   // sorted, unique
    std::string raw_text;
};

/// Lowercased concept terms, unigrams and bigrams only. Longer n-grams are
/// rejected at load time.
struct ConceptList {
    std::set<std::string> unigrams;
    std::set<std::pair<std::string, std::string>> bigrams;

    std::size_t size() const { return unigrams.size() + bigrams.size(); }
    bool empty() const { return unigrams.empty() && bigrams.empty(); }

    void add(const std::string& term);  // tokenizes; throws on >2 tokens
    static ConceptList load(const std::filesystem::path& path);
};

struct IngestOptions {
    bool strict = false;          // malformed lines become hard errors
    std::string exclude_topic;    // drop documents with this topic value
};

struct IngestStats {
    std::size_t documents = 0;
    std::size_t skipped = 0;   // malformed lines (non-strict mode)
    std::size_t excluded = 0;  // topic-filtered documents
};

/// Streams documents from a JSON-lines file (fields id, date, source, title,
/// body, optional topic) in file order.
IngestStats ingest(const std::filesystem::path& path, const IngestOptions& opts,
                   const std::function<void(Document&&)>& sink);

std::vector<Document> ingest_all(const std::filesystem::path& path, const IngestOptions& opts = {});

/// Rule-based splitter: [.?!] followed by whitespace and an uppercase letter,
/// with an abbreviation guard (Mr., U.S., Inc., month abbreviations, ...).
/// The concatenation of the output covers all non-whitespace input text.
std::vector<std::string> segment(std::string_view body);

/// Lowercases, splits on word boundaries, keeps intra-word hyphens /
/// periods / apostrophes, drops pure punctuation. Deterministic.
std::vector<std::string> tokenize(std::string_view sentence);

/// Concept terms whose unigram (or adjacent-token bigram) occurs in `tokens`;
/// sorted and unique.
std::vector<std::string> match_concepts(const std::vector<std::string>& tokens,
                                        const ConceptList& concepts);

/// Segment + tokenize + concept-filter one document.
std::vector<SentenceRecord> extract_records(const Document& doc, const ConceptList& concepts);

/// Keeps records containing at least one concept and (re)populates
/// matched_concepts. Idempotent; output is a subset of the input.
std::vector<SentenceRecord> filter_economic(const std::vector<SentenceRecord>& records,
                                            const ConceptList& concepts);

struct MonthlyCount {
    std::size_t sentences = 0;
    std::size_t tokens = 0;
};

/// Buckets by calendar month of the document date.
std::map<Date, MonthlyCount> monthly_counts(const std::vector<SentenceRecord>& records);

}  // namespace econlex::corpus
