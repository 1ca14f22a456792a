#include "econlex/corpus.hpp"

#include <algorithm>
#include <array>
#include <ctime>
#include <fstream>

#include <nlohmann/json.hpp>

namespace econlex::corpus {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Concept lists

void ConceptList::add(const std::string& term) {
    const auto toks = tokenize(term);
    if (toks.empty()) fail("concept '" + term + "' contains no word tokens");
    if (toks.size() == 1) {
        unigrams.insert(toks[0]);
    } else if (toks.size() == 2) {
        bigrams.insert({toks[0], toks[1]});
    } else {
        fail("concept '" + term + "' has " + std::to_string(toks.size()) +
             " tokens; only unigrams and bigrams are supported");
    }
}

ConceptList ConceptList::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open concept list " + path.string());
    ConceptList list;
    std::string raw;
    while (std::getline(in, raw)) {
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const std::string_view sv = trim(raw);
        if (sv.empty() || sv.front() == '#') continue;
        list.add(std::string(sv));
    }
    if (list.empty()) fail("concept list " + path.string() + " is empty");
    return list;
}

// ---------------------------------------------------------------------------
// Ingestion

namespace {

Date today() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    return Date{tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday};
}

Document parse_document(const json& j) {
    Document doc;
    doc.id = j.at("id").get<std::string>();
    doc.date = parse_date(j.at("date").get<std::string>());
    doc.source = j.value("source", "");
    doc.title = j.value("title", "");
    doc.body = j.at("body").get<std::string>();
    doc.topic = j.value("topic", "");
    if (doc.date < Date{1900, 1, 1}) fail("date before 1900-01-01");
    if (today() < doc.date) fail("date in the future");
    return doc;
}

}  // namespace

IngestStats ingest(const std::filesystem::path& path, const IngestOptions& opts,
                   const std::function<void(Document&&)>& sink) {
    std::ifstream in(path);
    if (!in) fail("cannot open corpus " + path.string());
    IngestStats stats;
    std::string line;
    std::size_t line_no = 0;
    std::set<std::string> seen_ids;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        Document doc;
        try {
            doc = parse_document(json::parse(line));
            if (!seen_ids.insert(doc.id).second) fail("duplicate document id '" + doc.id + "'");
        } catch (const std::exception& e) {
            if (opts.strict) fail_at(path, line_no, std::string("bad document: ") + e.what());
            ++stats.skipped;
            continue;
        }
        if (!opts.exclude_topic.empty() && doc.topic == opts.exclude_topic) {
            ++stats.excluded;
            continue;
        }
        ++stats.documents;
        sink(std::move(doc));
    }
    return stats;
}

std::vector<Document> ingest_all(const std::filesystem::path& path, const IngestOptions& opts) {
    std::vector<Document> docs;
    ingest(path, opts, [&](Document&& d) { docs.push_back(std::move(d)); });
    return docs;
}

// ---------------------------------------------------------------------------
// Segmentation

namespace {

// Abbreviations whose trailing period does not end a sentence. Lowercased,
// period included.
const std::set<std::string>& abbreviations() {
    static const std::set<std::string> abbrevs = {
        "mr.", "mrs.", "dr.", "u.s.", "u.k.", "inc.", "corp.", "e.g.", "i.e.", "vs.",
        "jan.", "feb.", "mar.", "apr.", "jun.", "jul.", "aug.", "sep.", "sept.", "oct.",
        "nov.", "dec.",
    };
    return abbrevs;
}

bool is_sentence_end(std::string_view text, std::size_t i) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') return false;
    // Require whitespace then an uppercase letter after the terminator run.
    std::size_t j = i + 1;
    while (j < text.size() && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
    if (j >= text.size()) return false;
    if (!std::isspace(static_cast<unsigned char>(text[j]))) return false;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j >= text.size() || !std::isupper(static_cast<unsigned char>(text[j]))) return false;
    if (c == '.') {
        // Word ending at i, period included.
        std::size_t k = i;
        while (k > 0 && !std::isspace(static_cast<unsigned char>(text[k - 1]))) --k;
        const std::string word = ascii_lower(text.substr(k, i - k + 1));
        if (abbreviations().contains(word)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::string> segment(std::string_view body) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (!is_sentence_end(body, i)) continue;
        std::size_t end = i + 1;
        while (end < body.size() && (body[end] == '.' || body[end] == '?' || body[end] == '!')) ++end;
        const std::string_view s = trim(body.substr(start, end - start));
        if (!s.empty()) sentences.emplace_back(s);
        start = end;
        i = end - 1;
    }
    const std::string_view tail = trim(body.substr(start));
    if (!tail.empty()) sentences.emplace_back(tail);
    return sentences;
}

// ---------------------------------------------------------------------------
// Tokenization

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

bool is_joiner(unsigned char c) {
    return c == '.' || c == '-' || c == '\'';
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t i = 0;
    const std::size_t n = sentence.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(sentence[i]);
        if (is_word_char(c)) {
            current += sentence[i];
            ++i;
            continue;
        }
        if (is_joiner(c) && !current.empty()) {
            // Keep a run of joiners only when word characters follow.
            std::size_t j = i;
            while (j < n && is_joiner(static_cast<unsigned char>(sentence[j]))) ++j;
            if (j < n && is_word_char(static_cast<unsigned char>(sentence[j]))) {
                current.append(sentence.substr(i, j - i));
                i = j;
                continue;
            }
        }
        if (!current.empty()) {
            tokens.push_back(ascii_lower(current));
            current.clear();
        }
        ++i;
    }
    if (!current.empty()) tokens.push_back(ascii_lower(current));
    return tokens;
}

// ---------------------------------------------------------------------------
// Concept matching

std::vector<std::string> match_concepts(const std::vector<std::string>& tokens,
                                        const ConceptList& concepts) {
    std::set<std::string> matched;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (concepts.unigrams.contains(tokens[i])) matched.insert(tokens[i]);
        if (i + 1 < tokens.size() && concepts.bigrams.contains({tokens[i], tokens[i + 1]})) {
            matched.insert(tokens[i] + " " + tokens[i + 1]);
        }
    }
    return {matched.begin(), matched.end()};
}

std::vector<SentenceRecord> extract_records(const Document& doc, const ConceptList& concepts) {
    std::vector<SentenceRecord> records;
    for (const std::string& sentence : segment(doc.body)) {
        SentenceRecord rec;
        rec.tokens = tokenize(sentence);
        if (rec.tokens.empty()) continue;
        rec.matched_concepts = match_concepts(rec.tokens, concepts);
        if (rec.matched_concepts.empty()) continue;
        rec.doc_id = doc.id;
        rec.date = doc.date;
        rec.raw_text = sentence;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SentenceRecord> filter_economic(const std::vector<SentenceRecord>& records,
                                            const ConceptList& concepts) {
    std::vector<SentenceRecord> kept;
    for (const SentenceRecord& rec : records) {
        auto matched = match_concepts(rec.tokens, concepts);
        if (matched.empty()) continue;
        SentenceRecord out = rec;
        out.matched_concepts = std::move(matched);
        kept.push_back(std::move(out));
    }
    return kept;
}

std::map<Date, MonthlyCount> monthly_counts(const std::vector<SentenceRecord>& records) {
    std::map<Date, MonthlyCount> counts;
    for (const SentenceRecord& rec : records) {
        MonthlyCount& c = counts[month_of(rec.date)];
        ++c.sentences;
        c.tokens += rec.tokens.size();
    }
    return counts;
}

}  // namespace econlex::corpus
