#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "embedrank/textproc.hpp"

namespace embedrank::embedding {

using Vector = std::vector<double>;

/// Anything that can embed an arbitrary-length token sequence into a fixed
/// Z-dimensional space. Implementations must be immutable after
/// construction so they can be shared across threads.
class Embedder {
public:
  virtual ~Embedder() = default;
  virtual std::size_t dim() const = 0;
  /// Throws OovError when nothing in the sequence is known.
  virtual Vector embed(std::span<const std::string> tokens) const = 0;
};

/// Additive word (and optional n-gram) vector model loaded from the text
/// vector-file format. Embedding a sequence averages the vectors of all
/// in-vocabulary unigrams plus, when the model ships n-grams, all
/// in-vocabulary contiguous n-grams of the sequence; the divisor is the
/// number of matched components.
class VectorModel final : public Embedder {
public:
  /// Text format: header line "vocab_size dim", then one "token v1 .. vZ"
  /// row per word. An optional section "NGRAMS count order" followed by
  /// `count` rows of "gram v1 .. vZ" adds n-gram vectors (grams join their
  /// tokens with '_'). Throws FormatError with the offending line number.
  static VectorModel load(const std::filesystem::path& path);
  static VectorModel parse(std::istream& in);

  std::size_t dim() const override { return dim_; }
  std::size_t vocab_size() const { return words_.size(); }
  std::size_t ngram_count() const { return ngrams_.size(); }
  int ngram_order() const { return ngram_order_; }

  const Vector* find(std::string_view token) const;
  const Vector* find_ngram(std::string_view gram) const;

  /// Lowercases, looks up unigram and n-gram components, returns their
  /// mean. Throws OovError if no component matches.
  Vector embed(std::span<const std::string> tokens) const override;

  /// Writes the model back out in the vector-file format with full
  /// round-trip precision.
  void save(std::ostream& out) const;

private:
  VectorModel() = default;
  std::size_t dim_ = 0;
  int ngram_order_ = 0;
  std::unordered_map<std::string, Vector> words_;
  std::unordered_map<std::string, Vector> ngrams_;
};

/// Mean embedding of a token sequence (see VectorModel::embed).
Vector embed_sequence(const Embedder& model, std::span<const std::string> tokens);

/// Document embedding: only adjective- and noun-tagged tokens participate,
/// in document order, every occurrence counted. Throws OovError when the
/// filtered sequence is empty or fully out of vocabulary.
Vector embed_document(const Embedder& model, const textproc::TaggedDocument& doc);

/// Embedding of a candidate phrase from its token surfaces.
Vector embed_candidate(const Embedder& model, const textproc::CandidatePhrase& phrase);

/// cos(a, b), clamped into [-1, 1]. Throws UndefinedSimilarityError on a
/// zero vector and std::invalid_argument on dimension mismatch.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace embedrank::embedding
