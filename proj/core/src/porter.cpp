#include "embedrank/porter.hpp"

#include <algorithm>
#include <cctype>
#include <span>

// Porter suffix stripping. Each step examines the longest matching suffix
// of its table; once a suffix matches, that step is decided (a failed
// measure condition leaves the word unchanged rather than trying shorter
// suffixes). Follows the canonical reference implementation, which differs
// from the original paper in three documented points: words of length <= 2
// are left alone, step 2 uses bli -> ble instead of abli -> able, and step
// 2 gains logi -> log.

namespace embedrank::textproc {
namespace {

bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m: the number of vowel-to-consonant transitions, i.e. VC blocks.
int measure(const std::string& s) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool cons = is_consonant(s, i);
    if (prev_vowel && cons) ++m;
    prev_vowel = !cons;
  }
  return m;
}

bool contains_vowel(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!is_consonant(s, i)) return true;
  return false;
}

bool ends_double_consonant(const std::string& w) {
  const auto n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: final consonant-vowel-consonant where the last consonant is not w, x
// or y.
bool ends_cvc(const std::string& w) {
  const auto n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  return is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
         is_consonant(w, n - 1) && last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string step1a(std::string w) {
  if (ends_with(w, "sses")) { w.resize(w.size() - 2); return w; }
  if (ends_with(w, "ies")) { w.resize(w.size() - 2); return w; }
  if (ends_with(w, "ss")) return w;
  if (ends_with(w, "s")) w.pop_back();
  return w;
}

std::string step1b(std::string w) {
  if (ends_with(w, "eed")) {
    std::string stem = w.substr(0, w.size() - 3);
    if (measure(stem) > 0) return stem + "ee";
    return w;
  }
  std::string stem;
  if (ends_with(w, "ed")) {
    stem = w.substr(0, w.size() - 2);
  } else if (ends_with(w, "ing")) {
    stem = w.substr(0, w.size() - 3);
  } else {
    return w;
  }
  if (!contains_vowel(stem)) return w;

  if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz"))
    return stem + "e";
  if (ends_double_consonant(stem)) {
    const char last = stem.back();
    if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
    return stem;
  }
  if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
  return stem;
}

std::string step1c(std::string w) {
  if (!w.empty() && w.back() == 'y' &&
      contains_vowel(w.substr(0, w.size() - 1))) {
    w.back() = 'i';
  }
  return w;
}

struct SuffixRule {
  std::string_view suffix;
  std::string_view replacement;
};

// Ordered so that the first match is always the longest match.
constexpr SuffixRule kStep2[] = {
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"bli", "ble"},     {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"},
    {"ation", "ate"},   {"ator", "ate"},    {"alism", "al"},  {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},  {"iviti", "ive"},
    {"biliti", "ble"},  {"logi", "log"},
};

constexpr SuffixRule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
};

std::string apply_measure_gt0(std::string w, std::span<const SuffixRule> rules) {
  for (const auto& rule : rules) {
    if (!ends_with(w, rule.suffix)) continue;
    std::string stem = w.substr(0, w.size() - rule.suffix.size());
    if (measure(stem) > 0) return stem + std::string(rule.replacement);
    return w;
  }
  return w;
}

constexpr std::string_view kStep4[] = {
    "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
    "ment", "ent", "ion",  "ou",  "ism", "ate",  "iti",  "ous", "ive", "ize",
};

std::string step4(std::string w) {
  for (const auto suffix : kStep4) {
    if (!ends_with(w, suffix)) continue;
    std::string stem = w.substr(0, w.size() - suffix.size());
    if (suffix == "ion") {
      if (measure(stem) > 1 && !stem.empty() &&
          (stem.back() == 's' || stem.back() == 't'))
        return stem;
      return w;
    }
    if (measure(stem) > 1) return stem;
    return w;
  }
  return w;
}

std::string step5a(std::string w) {
  if (!w.empty() && w.back() == 'e') {
    std::string stem = w.substr(0, w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) return stem;
  }
  return w;
}

std::string step5b(std::string w) {
  if (w.size() >= 2 && w.back() == 'l' && ends_double_consonant(w) &&
      measure(w.substr(0, w.size() - 1)) > 1) {
    w.pop_back();
  }
  return w;
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  for (const char c : w) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return w;
  }
  std::transform(w.begin(), w.end(), w.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (w.size() <= 2) return w;

  w = step1a(std::move(w));
  w = step1b(std::move(w));
  w = step1c(std::move(w));
  w = apply_measure_gt0(std::move(w), kStep2);
  w = apply_measure_gt0(std::move(w), kStep3);
  w = step4(std::move(w));
  w = step5a(std::move(w));
  w = step5b(std::move(w));
  return w;
}

std::string stem_key(std::string_view phrase_surface) {
  std::string key;
  std::size_t i = 0;
  const auto n = phrase_surface.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(phrase_surface[i]))) ++i;
    std::size_t j = i;
    while (j < n && !std::isspace(static_cast<unsigned char>(phrase_surface[j]))) ++j;
    if (j > i) {
      std::string token(phrase_surface.substr(i, j - i));
      std::transform(token.begin(), token.end(), token.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (!key.empty()) key += ' ';
      key += porter_stem(token);
    }
    i = j;
  }
  return key;
}

}  // namespace embedrank::textproc
