#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "embedrank/porter.hpp"

namespace embedrank::textproc {

/// One token of a document: surface form, Penn-style POS tag, ordinal
/// position, and character span into the source text.
struct Token {
  std::string surface;
  std::string pos;
  std::size_t token_index = 0;
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
};

/// A tokenized, POS-tagged document. sentence_boundaries holds the token
/// index of every sentence start; the first entry is 0 whenever the
/// document has tokens.
struct TaggedDocument {
  std::vector<Token> tokens;
  std::vector<std::size_t> sentence_boundaries;
  std::string source_text;

  /// Half-open [begin, end) token ranges, one per sentence.
  std::vector<std::pair<std::size_t, std::size_t>> sentence_ranges() const;
};

/// A candidate keyphrase: a contiguous run of zero or more adjectives
/// followed by one or more nouns. Occurrences of the same stem key are
/// merged; `tokens` and `surface` come from the first occurrence.
struct CandidatePhrase {
  std::string surface;              // lowercased, space-joined token surfaces
  std::vector<Token> tokens;        // tokens of the first occurrence
  std::string stem_key;
  std::vector<std::size_t> occurrences;  // first token index per occurrence, ascending
  std::size_t first_offset = 0;          // == occurrences.front()
};

/// Pluggable POS tagger. Implementations must be safe to call from several
/// threads once constructed, or document themselves as single-threaded.
class Tagger {
public:
  virtual ~Tagger() = default;
  virtual TaggedDocument tag(std::string_view text) const = 0;
};

bool is_adjective_tag(std::string_view pos);  // JJ, JJR, JJS
bool is_noun_tag(std::string_view pos);       // NN, NNS, NNP, NNPS

/// Splits raw text into tokens with character spans. Whitespace separates
/// tokens; leading and trailing punctuation become tokens of their own;
/// hyphenated words stay whole. Throws EncodingError on invalid UTF-8.
std::vector<Token> tokenize(std::string_view text);

/// Sentence start indices for a token sequence: a new sentence begins after
/// '.', '!' or '?' (runs of terminal punctuation do not split).
std::vector<std::size_t> sentence_starts(const std::vector<Token>& tokens);

/// Parses the pre-tagged interchange format: one sentence per line, tokens
/// separated by spaces, each token `surface_TAG` with the last underscore
/// as separator. Blank lines are skipped. Throws ParseError with the
/// offending line number on malformed input; empty input gives an empty
/// document.
TaggedDocument parse_pretagged(std::istream& in);
TaggedDocument parse_pretagged(std::string_view text);

/// Inverse of parse_pretagged for surfaces, tags and sentence boundaries.
std::string format_pretagged(const TaggedDocument& doc);

/// Runs the given tagger over raw text.
TaggedDocument tag(std::string_view text, const Tagger& tagger);

/// Extracts maximal, non-overlapping adjective*-noun+ spans, left to right,
/// never crossing a sentence boundary. Candidates sharing a stem key are
/// merged into one CandidatePhrase with several occurrences. Output is in
/// first-appearance order.
std::vector<CandidatePhrase> extract_candidates(const TaggedDocument& doc);

}  // namespace embedrank::textproc
