#pragma once

#include <string>
#include <string_view>

namespace embedrank::textproc {

/// Porter stem of a single word. The input is lowercased before the rules
/// run; words containing anything but ASCII letters are returned unchanged,
/// as are words of one or two letters. Matches the canonical reference
/// implementation (including its two step-2 revisions) byte for byte.
std::string porter_stem(std::string_view word);

/// Canonical match key for a phrase: lowercase, collapse whitespace, Porter
/// stem each token, join with single spaces.
/// "Molecular  Equivalence Numbers" -> "molecular equival number".
std::string stem_key(std::string_view phrase_surface);

}  // namespace embedrank::textproc
