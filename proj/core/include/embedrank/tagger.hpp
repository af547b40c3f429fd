#pragma once

#include <string_view>

#include "embedrank/textproc.hpp"

namespace embedrank::textproc {

/// Lexicon plus suffix-rule tagger with a small bundled English lexicon.
/// Closed-class words (determiners, prepositions, pronouns, ...) come from
/// the lexicon; unknown words fall back to suffix heuristics ("-s" plural
/// noun, "-ing" gerund, "-ly" adverb, ...) and finally to NN. Intended for
/// desk use; reproduction-grade runs should feed the output of a real
/// tagger through parse_pretagged instead.
class BuiltinTagger final : public Tagger {
public:
  TaggedDocument tag(std::string_view text) const override;
};

}  // namespace embedrank::textproc
