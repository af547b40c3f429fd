#include "embedrank/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "embedrank/errors.hpp"

namespace embedrank::textproc {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0 &&
         static_cast<unsigned char>(c) < 0x80;
}

bool is_sentence_terminal(const std::string& surface) {
  return surface == "." || surface == "!" || surface == "?";
}

void validate_utf8(std::string_view text) {
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    const auto b = static_cast<unsigned char>(text[i]);
    std::size_t extra;
    if (b < 0x80) {
      extra = 0;
    } else if (b >= 0xC2 && b <= 0xDF) {
      extra = 1;
    } else if (b >= 0xE0 && b <= 0xEF) {
      extra = 2;
    } else if (b >= 0xF0 && b <= 0xF4) {
      extra = 3;
    } else {
      throw EncodingError("invalid UTF-8 byte at offset " + std::to_string(i));
    }
    if (extra > 0 && i + extra >= n)
      throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto c = static_cast<unsigned char>(text[i + k]);
      if (c < 0x80 || c > 0xBF)
        throw EncodingError("invalid UTF-8 continuation at offset " +
                            std::to_string(i + k));
    }
    i += extra + 1;
  }
}

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

bool is_adjective_tag(std::string_view pos) {
  return pos == "JJ" || pos == "JJR" || pos == "JJS";
}

bool is_noun_tag(std::string_view pos) {
  return pos == "NN" || pos == "NNS" || pos == "NNP" || pos == "NNPS";
}

std::vector<std::pair<std::size_t, std::size_t>> TaggedDocument::sentence_ranges() const {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t s = 0; s < sentence_boundaries.size(); ++s) {
    const std::size_t begin = sentence_boundaries[s];
    const std::size_t end = s + 1 < sentence_boundaries.size()
                                ? sentence_boundaries[s + 1]
                                : tokens.size();
    ranges.emplace_back(begin, end);
  }
  return ranges;
}

std::vector<Token> tokenize(std::string_view text) {
  validate_utf8(text);
  std::vector<Token> tokens;
  auto emit = [&tokens](std::string_view surface, std::size_t begin) {
    Token t;
    t.surface = std::string(surface);
    t.token_index = tokens.size();
    t.char_begin = begin;
    t.char_end = begin + surface.size();
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    while (i < n && is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < n && !is_ascii_space(text[j])) ++j;
    if (j == i) break;

    // Peel leading and trailing punctuation into tokens of their own;
    // interior punctuation (hyphens, apostrophes) stays attached.
    std::size_t b = i, e = j;
    while (b < e - 1 && is_ascii_punct(text[b])) {
      emit(text.substr(b, 1), b);
      ++b;
    }
    std::size_t core_end = e;
    while (core_end > b + 1 && is_ascii_punct(text[core_end - 1])) --core_end;
    emit(text.substr(b, core_end - b), b);
    for (std::size_t k = core_end; k < e; ++k) emit(text.substr(k, 1), k);
    i = j;
  }
  return tokens;
}

std::vector<std::size_t> sentence_starts(const std::vector<Token>& tokens) {
  std::vector<std::size_t> starts;
  if (tokens.empty()) return starts;
  starts.push_back(0);
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (is_sentence_terminal(tokens[i].surface) &&
        !is_sentence_terminal(tokens[i + 1].surface)) {
      starts.push_back(i + 1);
    }
  }
  return starts;
}

TaggedDocument parse_pretagged(std::istream& in) {
  TaggedDocument doc;
  std::string line;
  std::size_t line_no = 0;
  std::string source;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const std::size_t sentence_start = doc.tokens.size();
    bool any_token = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ') ++end;
      if (end == pos) break;
      const std::string field = line.substr(pos, end - pos);
      pos = end;

      const auto sep = field.rfind('_');
      if (sep == std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": token '" + field +
                         "' has no tag separator");
      if (sep == 0 || sep + 1 == field.size())
        throw ParseError("line " + std::to_string(line_no) + ": token '" + field +
                         "' has an empty surface or tag");

      Token t;
      t.surface = field.substr(0, sep);
      t.pos = field.substr(sep + 1);
      t.token_index = doc.tokens.size();
      if (!source.empty()) source += any_token ? ' ' : '\n';
      t.char_begin = source.size();
      source += t.surface;
      t.char_end = source.size();
      doc.tokens.push_back(std::move(t));
      any_token = true;
    }
    if (any_token) doc.sentence_boundaries.push_back(sentence_start);
  }
  doc.source_text = std::move(source);
  return doc;
}

TaggedDocument parse_pretagged(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_pretagged(in);
}

std::string format_pretagged(const TaggedDocument& doc) {
  std::string out;
  for (const auto& [begin, end] : doc.sentence_ranges()) {
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) out += ' ';
      out += doc.tokens[i].surface;
      out += '_';
      out += doc.tokens[i].pos;
    }
    out += '\n';
  }
  return out;
}

TaggedDocument tag(std::string_view text, const Tagger& tagger) {
  return tagger.tag(text);
}

std::vector<CandidatePhrase> extract_candidates(const TaggedDocument& doc) {
  std::vector<CandidatePhrase> candidates;
  std::unordered_map<std::string, std::size_t> by_key;

  for (const auto& [s_begin, s_end] : doc.sentence_ranges()) {
    std::size_t i = s_begin;
    while (i < s_end) {
      std::size_t j = i;
      while (j < s_end && is_adjective_tag(doc.tokens[j].pos)) ++j;
      std::size_t k = j;
      while (k < s_end && is_noun_tag(doc.tokens[k].pos)) ++k;
      if (k == j) {
        // No noun after the adjective run; no suffix of the run can match
        // either, so resume right after it.
        i = std::max(j, i + 1);
        continue;
      }

      std::string surface;
      for (std::size_t t = i; t < k; ++t) {
        if (t > i) surface += ' ';
        surface += lowercased(doc.tokens[t].surface);
      }
      std::string key = stem_key(surface);

      if (const auto it = by_key.find(key); it != by_key.end()) {
        candidates[it->second].occurrences.push_back(i);
      } else {
        CandidatePhrase phrase;
        phrase.surface = std::move(surface);
        phrase.tokens.assign(doc.tokens.begin() + static_cast<std::ptrdiff_t>(i),
                             doc.tokens.begin() + static_cast<std::ptrdiff_t>(k));
        phrase.stem_key = key;
        phrase.occurrences.push_back(i);
        by_key.emplace(std::move(key), candidates.size());
        candidates.push_back(std::move(phrase));
      }
      i = k;
    }
  }

  for (auto& phrase : candidates) phrase.first_offset = phrase.occurrences.front();
  return candidates;
}

}  // namespace embedrank::textproc
