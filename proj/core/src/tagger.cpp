#include "embedrank/tagger.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>

namespace embedrank::textproc {
namespace {

struct LexiconEntry {
  std::string_view word;
  std::string_view tag;
};

// Small bundled lexicon: closed-class words plus a handful of frequent
// irregulars the suffix rules would get wrong.
constexpr LexiconEntry kLexicon[] = {
    // determiners
    {"the", "DT"}, {"a", "DT"}, {"an", "DT"}, {"this", "DT"}, {"that", "DT"},
    {"these", "DT"}, {"those", "DT"}, {"each", "DT"}, {"every", "DT"},
    {"either", "DT"}, {"neither", "DT"}, {"some", "DT"}, {"any", "DT"},
    {"no", "DT"}, {"all", "DT"}, {"both", "DT"}, {"another", "DT"},
    // prepositions, subordinating conjunctions
    {"of", "IN"}, {"in", "IN"}, {"on", "IN"}, {"at", "IN"}, {"by", "IN"},
    {"for", "IN"}, {"with", "IN"}, {"from", "IN"}, {"about", "IN"},
    {"into", "IN"}, {"over", "IN"}, {"after", "IN"}, {"before", "IN"},
    {"between", "IN"}, {"under", "IN"}, {"during", "IN"}, {"through", "IN"},
    {"against", "IN"}, {"among", "IN"}, {"within", "IN"}, {"along", "IN"},
    {"across", "IN"}, {"behind", "IN"}, {"beyond", "IN"}, {"despite", "IN"},
    {"toward", "IN"}, {"towards", "IN"}, {"upon", "IN"}, {"off", "IN"},
    {"above", "IN"}, {"below", "IN"}, {"near", "IN"}, {"since", "IN"},
    {"until", "IN"}, {"unless", "IN"}, {"although", "IN"}, {"because", "IN"},
    {"while", "IN"}, {"if", "IN"}, {"than", "IN"}, {"as", "IN"}, {"per", "IN"},
    {"via", "IN"}, {"without", "IN"}, {"like", "IN"},
    // coordinating conjunctions
    {"and", "CC"}, {"or", "CC"}, {"but", "CC"}, {"nor", "CC"}, {"yet", "CC"},
    {"plus", "CC"},
    // pronouns
    {"i", "PRP"}, {"you", "PRP"}, {"he", "PRP"}, {"she", "PRP"}, {"it", "PRP"},
    {"we", "PRP"}, {"they", "PRP"}, {"me", "PRP"}, {"him", "PRP"},
    {"her", "PRP"}, {"us", "PRP"}, {"them", "PRP"}, {"myself", "PRP"},
    {"yourself", "PRP"}, {"himself", "PRP"}, {"herself", "PRP"},
    {"itself", "PRP"}, {"ourselves", "PRP"}, {"themselves", "PRP"},
    {"my", "PRP$"}, {"your", "PRP$"}, {"his", "PRP$"}, {"its", "PRP$"},
    {"our", "PRP$"}, {"their", "PRP$"},
    // wh-words
    {"which", "WDT"}, {"what", "WP"}, {"who", "WP"}, {"whom", "WP"},
    {"whose", "WP$"}, {"when", "WRB"}, {"where", "WRB"}, {"why", "WRB"},
    {"how", "WRB"},
    // modals and auxiliaries
    {"can", "MD"}, {"could", "MD"}, {"may", "MD"}, {"might", "MD"},
    {"must", "MD"}, {"shall", "MD"}, {"should", "MD"}, {"will", "MD"},
    {"would", "MD"},
    {"be", "VB"}, {"is", "VBZ"}, {"are", "VBP"}, {"was", "VBD"},
    {"were", "VBD"}, {"am", "VBP"}, {"been", "VBN"}, {"being", "VBG"},
    {"has", "VBZ"}, {"have", "VBP"}, {"had", "VBD"}, {"having", "VBG"},
    {"do", "VBP"}, {"does", "VBZ"}, {"did", "VBD"}, {"doing", "VBG"},
    {"done", "VBN"},
    // frequent verbs the -s/-ed rules would misread
    {"says", "VBZ"}, {"said", "VBD"}, {"goes", "VBZ"}, {"went", "VBD"},
    {"gets", "VBZ"}, {"got", "VBD"}, {"makes", "VBZ"}, {"made", "VBD"},
    {"takes", "VBZ"}, {"took", "VBD"}, {"comes", "VBZ"}, {"came", "VBD"},
    {"sees", "VBZ"}, {"saw", "VBD"}, {"knows", "VBZ"}, {"knew", "VBD"},
    {"gives", "VBZ"}, {"gave", "VBD"}, {"finds", "VBZ"}, {"found", "VBD"},
    {"uses", "VBZ"}, {"shows", "VBZ"}, {"means", "VBZ"}, {"keeps", "VBZ"},
    {"seems", "VBZ"}, {"needs", "VBZ"}, {"becomes", "VBZ"},
    // adverbs and misc
    {"not", "RB"}, {"very", "RB"}, {"also", "RB"}, {"often", "RB"},
    {"never", "RB"}, {"always", "RB"}, {"perhaps", "RB"}, {"quite", "RB"},
    {"too", "RB"}, {"just", "RB"}, {"still", "RB"}, {"already", "RB"},
    {"soon", "RB"}, {"then", "RB"}, {"here", "RB"}, {"now", "RB"},
    {"however", "RB"}, {"thus", "RB"}, {"moreover", "RB"}, {"again", "RB"},
    {"once", "RB"}, {"well", "RB"}, {"more", "RBR"}, {"most", "RBS"},
    {"less", "RBR"}, {"least", "RBS"}, {"there", "EX"}, {"to", "TO"},
    // numbers
    {"one", "CD"}, {"two", "CD"}, {"three", "CD"}, {"four", "CD"},
    {"five", "CD"}, {"six", "CD"}, {"seven", "CD"}, {"eight", "CD"},
    {"nine", "CD"}, {"ten", "CD"}, {"zero", "CD"}, {"hundred", "CD"},
    {"thousand", "CD"}, {"million", "CD"}, {"billion", "CD"},
    // irregular plurals
    {"people", "NNS"}, {"children", "NNS"}, {"men", "NNS"}, {"women", "NNS"},
    {"feet", "NNS"}, {"teeth", "NNS"}, {"mice", "NNS"}, {"data", "NNS"},
    {"criteria", "NNS"}, {"phenomena", "NNS"}, {"indices", "NNS"},
    {"analyses", "NNS"}, {"hypotheses", "NNS"},
    // frequent adjectives that look like nouns or verbs
    {"good", "JJ"}, {"new", "JJ"}, {"first", "JJ"}, {"last", "JJ"},
    {"long", "JJ"}, {"great", "JJ"}, {"little", "JJ"}, {"own", "JJ"},
    {"other", "JJ"}, {"old", "JJ"}, {"right", "JJ"}, {"big", "JJ"},
    {"high", "JJ"}, {"small", "JJ"}, {"large", "JJ"}, {"same", "JJ"},
    {"few", "JJ"}, {"low", "JJ"}, {"only", "JJ"}, {"better", "JJR"},
    {"best", "JJS"}, {"worse", "JJR"}, {"worst", "JJS"},
};

const std::unordered_map<std::string_view, std::string_view>& lexicon() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string_view, std::string_view>();
    for (const auto& e : kLexicon) m->emplace(e.word, e.tag);
    return m;
  }();
  return *map;
}

bool is_number_like(const std::string& s) {
  bool digit = false;
  for (const char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '+' && c != '%') {
      return false;
    }
  }
  return digit;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string suffix_rule_tag(const std::string& lower) {
  const auto n = lower.size();
  if (n > 4 && ends_with(lower, "ing")) return "VBG";
  if (n > 3 && ends_with(lower, "ed")) return "VBD";
  if (n > 3 && ends_with(lower, "ly")) return "RB";
  for (const auto s : {"ness", "ment", "tion", "sion", "ship", "ism",
                       "ence", "ance", "ity", "ery", "hood"}) {
    if (n > 4 && ends_with(lower, s)) return "NN";
  }
  for (const auto s : {"ous", "ful", "less", "ive", "able", "ible", "ish",
                       "ic", "al", "ary"}) {
    if (n > 4 && ends_with(lower, s)) return "JJ";
  }
  if (n > 4 && ends_with(lower, "est")) return "JJS";
  if (n > 3 && ends_with(lower, "s") && !ends_with(lower, "ss") &&
      !ends_with(lower, "us") && !ends_with(lower, "is")) {
    return "NNS";
  }
  return "NN";
}

std::string classify(const std::string& surface, bool sentence_initial) {
  if (surface.empty()) return "NN";
  const char first = surface.front();
  if (is_ascii_punct_tag(first) && surface.size() == 1) return std::string(1, first);
  if (is_number_like(surface)) return "CD";

  std::string lower(surface);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (const auto it = lexicon().find(lower); it != lexicon().end())
    return std::string(it->second);

  // Capitalized away from a sentence start reads as a proper noun.
  if (!sentence_initial && std::isupper(static_cast<unsigned char>(first))) {
    return ends_with(lower, "s") && !ends_with(lower, "ss") ? "NNPS" : "NNP";
  }
  return suffix_rule_tag(lower);
}

}  // namespace

TaggedDocument BuiltinTagger::tag(std::string_view text) const {
  TaggedDocument doc;
  doc.source_text = std::string(text);
  doc.tokens = tokenize(text);
  doc.sentence_boundaries = sentence_starts(doc.tokens);

  std::size_t next_boundary = 0;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    bool initial = false;
    if (next_boundary < doc.sentence_boundaries.size() &&
        doc.sentence_boundaries[next_boundary] == i) {
      initial = true;
      ++next_boundary;
    }
    doc.tokens[i].pos = classify(doc.tokens[i].surface, initial);
  }
  return doc;
}

}  // namespace embedrank::textproc
