#include "econlex/depparse.hpp"

#include <algorithm>
#include <fstream>

namespace econlex::depparse {

const DepToken* DepSentence::token_at(int index) const {
    if (index < 1 || index > static_cast<int>(tokens.size())) return nullptr;
    return &tokens[static_cast<std::size_t>(index - 1)];
}

// ---------------------------------------------------------------------------
// CoNLL-U parsing

namespace {

void validate_sentence(const DepSentence& sentence, const std::filesystem::path& path,
                       std::size_t line_no) {
    const int n = static_cast<int>(sentence.tokens.size());
    int roots = 0;
    for (const DepToken& tok : sentence.tokens) {
        if (tok.head < 0 || tok.head > n) {
            fail_at(path, line_no, "head " + std::to_string(tok.head) + " out of range for token " +
                                       std::to_string(tok.index));
        }
        if (tok.head == tok.index) {
            fail_at(path, line_no, "cyclic head: token " + std::to_string(tok.index) +
                                       " governs itself");
        }
        if (tok.head == 0) ++roots;
    }
    if (roots != 1) {
        fail_at(path, line_no, "expected exactly one root, found " + std::to_string(roots));
    }
    // Every token must reach the root; a walk longer than n tokens is a cycle.
    for (const DepToken& tok : sentence.tokens) {
        int cur = tok.head;
        int steps = 0;
        while (cur != 0) {
            if (++steps > n) {
                fail_at(path, line_no, "cyclic head involving token " + std::to_string(tok.index));
            }
            cur = sentence.tokens[static_cast<std::size_t>(cur - 1)].head;
        }
    }
}

void apply_metadata(DepSentence& sentence, std::string_view line) {
    const std::string_view body = trim(line.substr(1));
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) return;
    const std::string key(trim(body.substr(0, eq)));
    const std::string value(trim(body.substr(eq + 1)));
    if (key == "sent_id") {
        sentence.sent_id = value;
    } else if (key == "text") {
        sentence.text = value;
    } else if (key == "date") {
        sentence.date = parse_date(value);
    }
}

}  // namespace

namespace {

int parse_index(std::string_view field, const std::filesystem::path& source, std::size_t line_no,
                const char* what) {
    int value = 0;
    const auto r = std::from_chars(field.data(), field.data() + field.size(), value);
    if (r.ec != std::errc{} || r.ptr != field.data() + field.size()) {
        fail_at(source, line_no, std::string("bad ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

std::vector<DepSentence> parse_conllu_text(std::string_view text, const std::filesystem::path& source) {
    std::vector<DepSentence> sentences;
    DepSentence current;

    const auto flush = [&](std::size_t line_no) {
        if (!current.tokens.empty()) {
            validate_sentence(current, source, line_no);
            sentences.push_back(std::move(current));
        }
        current = DepSentence{};
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (line.empty()) {
            flush(line_no);
            continue;
        }
        if (line.front() == '#') {
            apply_metadata(current, line);
            continue;
        }
        const auto cols = split(line, '\t');
        if (cols.size() != 10) {
            fail_at(source, line_no,
                    "expected 10 tab-separated columns, got " + std::to_string(cols.size()));
        }
        // Multi-word token ranges ("3-4") and empty nodes ("5.1") carry no tree edges.
        if (cols[0].find('-') != std::string_view::npos ||
            cols[0].find('.') != std::string_view::npos) {
            continue;
        }
        DepToken tok;
        tok.index = parse_index(cols[0], source, line_no, "token id");
        tok.form = std::string(cols[1]);
        tok.lemma = std::string(cols[2]);
        tok.upos = std::string(cols[3]);
        tok.head = parse_index(cols[6], source, line_no, "head");
        tok.deprel = std::string(cols[7]);
        if (tok.index != static_cast<int>(current.tokens.size()) + 1) {
            fail_at(source, line_no, "token id " + std::to_string(tok.index) + " out of sequence");
        }
        current.tokens.push_back(std::move(tok));
    }
    flush(line_no + 1);
    return sentences;
}

std::vector<DepSentence> parse_conllu(const std::filesystem::path& path) {
    return parse_conllu_text(read_file(path), path);
}

// ---------------------------------------------------------------------------
// Relation configuration

RelationConfig RelationConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open relation config " + path.string());
    RelationConfig config;
    config.head_child.clear();
    config.governor.clear();
    config.verb_child.clear();
    config.compound.clear();
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view sv = trim(raw);
        if (sv.empty() || sv.front() == '#') continue;
        const std::size_t space = sv.find_first_of(" \t");
        if (space == std::string_view::npos) fail_at(path, line_no, "expected '<group> <relation>'");
        const std::string group(trim(sv.substr(0, space)));
        const std::string rel(trim(sv.substr(space + 1)));
        if (group == "head_child") config.head_child.insert(rel);
        else if (group == "governor") config.governor.insert(rel);
        else if (group == "verb_child") config.verb_child.insert(rel);
        else if (group == "compound") config.compound.insert(rel);
        else fail_at(path, line_no, "unknown relation group '" + group + "'");
    }
    return config;
}

// ---------------------------------------------------------------------------
// Noun-phrase extraction

namespace {

bool is_nominal(const DepToken& tok) { return tok.upos == "NOUN" || tok.upos == "PROPN"; }

struct ConceptMatch {
    std::string term;
    std::set<int> concept_tokens;  // token indices spanned by the concept
};

std::optional<ConceptMatch> match_concept(const DepSentence& sentence, const DepToken& head,
                                          const corpus::ConceptList& concepts,
                                          const RelationConfig& config) {
    const std::string lemma = ascii_lower(head.lemma);
    // A bigram concept matches when the head lemma is the second word and a
    // compound/amod child carries the first; it takes precedence over a
    // unigram match on the head alone.
    for (const DepToken& child : sentence.tokens) {
        if (child.head != head.index || !config.compound.contains(child.deprel)) continue;
        const std::string first = ascii_lower(child.lemma);
        if (concepts.bigrams.contains({first, lemma})) {
            return ConceptMatch{first + " " + lemma, {head.index, child.index}};
        }
    }
    if (concepts.unigrams.contains(lemma)) {
        return ConceptMatch{lemma, {head.index}};
    }
    return std::nullopt;
}

void add_modifier(std::vector<Modifier>& out, std::set<int>& taken, const DepToken& tok,
                  const std::string& via) {
    if (!taken.insert(tok.index).second) return;
    out.push_back({ascii_lower(tok.lemma), ascii_lower(tok.form), tok.upos, via, tok.index});
}

}  // namespace

std::vector<NounPhrase> extract_noun_phrases(const DepSentence& sentence,
                                             const corpus::ConceptList& concepts,
                                             const RelationConfig& config) {
    std::vector<NounPhrase> phrases;
    for (const DepToken& head : sentence.tokens) {
        if (!is_nominal(head)) continue;
        const auto match = match_concept(sentence, head, concepts, config);
        if (!match) continue;

        NounPhrase np;
        np.head_term = match->term;
        np.head_index = head.index;
        np.sent_id = sentence.sent_id;
        np.date = sentence.date;

        std::set<int> taken = match->concept_tokens;  // concept tokens are never modifiers

        for (const DepToken& child : sentence.tokens) {
            if (child.head == head.index && config.head_child.contains(child.deprel)) {
                add_modifier(np.modifiers, taken, child, child.deprel);
            }
        }
        if (config.governor.contains(head.deprel)) {
            const DepToken* verb = sentence.token_at(head.head);
            if (verb != nullptr && verb->upos == "VERB") {
                add_modifier(np.modifiers, taken, *verb, head.deprel);
                for (const DepToken& sib : sentence.tokens) {
                    if (sib.head == verb->index && config.verb_child.contains(sib.deprel)) {
                        add_modifier(np.modifiers, taken, sib, sib.deprel);
                    }
                }
            }
        }
        std::sort(np.modifiers.begin(), np.modifiers.end(),
                  [](const Modifier& a, const Modifier& b) { return a.token_index < b.token_index; });
        phrases.push_back(std::move(np));
    }
    return phrases;
}

// ---------------------------------------------------------------------------
// Candidate harvesting

CandidateTable harvest_candidates(const std::vector<NounPhrase>& phrases, std::size_t min_count,
                                  CountKey key) {
    if (min_count < 1) fail("min_count must be >= 1");
    std::map<std::string, std::size_t> all;
    std::size_t total = 0;
    for (const NounPhrase& np : phrases) {
        for (const Modifier& mod : np.modifiers) {
            ++all[key == CountKey::lemma ? mod.lemma : mod.form];
            ++total;
        }
    }
    CandidateTable table;
    table.total_instances = total;
    for (const auto& [word, count] : all) {
        if (count >= min_count) table.counts.emplace(word, count);
    }
    return table;
}

std::vector<std::string> shortlist(const CandidateTable& table,
                                   const std::map<std::string, std::vector<bool>>& votes,
                                   std::size_t quorum) {
    std::vector<std::string> kept;
    for (const auto& [lemma, ballot] : votes) {
        if (!table.counts.contains(lemma)) {
            fail("vote for lemma '" + lemma + "' not present in the candidate table");
        }
        if (ballot.empty()) fail("empty vote list for lemma '" + lemma + "'");
        const std::size_t yes =
            static_cast<std::size_t>(std::count(ballot.begin(), ballot.end(), true));
        if (yes >= quorum) kept.push_back(lemma);
    }
    return kept;
}

void save_candidates(const CandidateTable& table, const std::filesystem::path& path) {
    std::vector<std::pair<std::string, std::size_t>> rows(table.counts.begin(), table.counts.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot write candidate table " + path.string());
    for (const auto& [word, count] : rows) out << word << '\t' << count << '\n';
}

}  // namespace econlex::depparse
