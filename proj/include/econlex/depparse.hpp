#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "econlex/common.hpp"
#include "econlex/corpus.hpp"

namespace econlex::depparse {

struct DepToken {
    int index = 0;  // 1-based
    std::string form;
    std::string lemma;
    std::string upos;
    int head = 0;   // 0 = root
    std::string deprel;
};

struct DepSentence {
    std::string sent_id;
    std::optional<Date> date;
    std::string text;
    std::vector<DepToken> tokens;

    const DepToken* token_at(int index) const;  // nullptr for 0 / out of range
};

/// Reads CoNLL-U: 10 tab-separated columns, blank line between sentences,
/// `# key = value` metadata (sent_id, text, date are captured). Multi-word
/// token ranges (`3-4`) and empty nodes (`5.1`) are skipped. Head indices are
/// validated: in range, acyclic, exactly one root.
std::vector<DepSentence> parse_conllu(const std::filesystem::path& path);
std::vector<DepSentence> parse_conllu_text(std::string_view text,
                                           const std::filesystem::path& source = "<string>");

/// Grammatical relations that define what counts as a modifier of a concept
/// head. Loadable from a file of `<group> <relation>` lines so the extraction
/// rule stays configuration, not code.
struct RelationConfig {
    // Children of the head token taken as modifiers.
    std::set<std::string> head_child = {"amod", "advmod", "nmod", "acl", "acl:relcl"};
    // Head-to-governor relations through which the governing verb is admitted.
    std::set<std::string> governor = {"nsubj", "nsubj:pass", "obj", "obl"};
    // Children of that governing verb also taken as modifiers.
    std::set<std::string> verb_child = {"advmod", "xcomp", "obj", "obl"};
    // Child relations that can attach the first word of a bigram concept.
    std::set<std::string> compound = {"compound", "amod"};

    static RelationConfig load(const std::filesystem::path& path);
};

struct Modifier {
    std::string lemma;
    std::string form;
    std::string upos;
    std::string deprel;  // relation that admitted the token
    int token_index = 0;
};

struct NounPhrase {
    std::string head_term;  // concept term; bigrams as "first second"
    int head_index = 0;
    std::string sent_id;
    std::optional<Date> date;
    std::vector<Modifier> modifiers;  // ordered by token index
};

/// One NounPhrase per NOUN/PROPN token whose lemma (or compound-child bigram)
/// matches a concept. Tokens forming the concept itself are never modifiers.
std::vector<NounPhrase> extract_noun_phrases(const DepSentence& sentence,
                                             const corpus::ConceptList& concepts,
                                             const RelationConfig& config = {});

enum class CountKey { lemma, form };

struct CandidateTable {
    std::map<std::string, std::size_t> counts;  // >= min_count survivors
    std::size_t total_instances = 0;            // all harvested modifier tokens
};

/// Frequency table of modifier lemmas (or surface forms) across noun phrases,
/// keeping entries seen at least `min_count` times.
CandidateTable harvest_candidates(const std::vector<NounPhrase>& phrases,
                                  std::size_t min_count = 65,
                                  CountKey key = CountKey::lemma);

/// Keeps table lemmas with at least `quorum` true votes. A vote for a lemma
/// missing from the table is an error.
std::vector<std::string> shortlist(const CandidateTable& table,
                                   const std::map<std::string, std::vector<bool>>& votes,
                                   std::size_t quorum = 2);

/// `lemma<TAB>count`, descending count then lexicographic.
void save_candidates(const CandidateTable& table, const std::filesystem::path& path);

}  // namespace econlex::depparse
