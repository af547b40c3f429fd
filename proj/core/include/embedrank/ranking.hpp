#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "embedrank/embedding.hpp"
#include "embedrank/textproc.hpp"

namespace embedrank::ranking {

/// How keyphrases are selected from the scored candidate set.
enum class Mode { plain, mmr, positional };

/// Denominator of the min-shifted cosine rescaling step: the maximum
/// similarity (as published) or the max-min range.
enum class NormDenominator { max, range };

/// Set over which candidate-candidate similarities are standardized inside
/// the greedy diversity loop: all pairwise similarities once up front, or
/// each candidate's similarities to the selected set, per step.
enum class CandidateNorm { global_pairs, per_step };

struct RankingConfig {
  int top_n = 10;
  double lambda = 1.0;  // 1 = pure relevance, 0 = pure diversity
  Mode mode = Mode::plain;
  NormDenominator norm_denominator = NormDenominator::max;
  CandidateNorm candidate_norm = CandidateNorm::global_pairs;

  /// Throws std::invalid_argument unless top_n >= 1 and lambda in [0, 1].
  void validate() const;
};

/// A candidate with its embedding and document similarities.
struct ScoredCandidate {
  textproc::CandidatePhrase candidate;
  embedding::Vector vector;
  double doc_similarity = 0.0;       // raw cosine to the document
  double norm_doc_similarity = 0.0;  // standardized value, mean 0.5, sd 1
};

struct KeyphraseGroup {
  ScoredCandidate representative;
  std::vector<ScoredCandidate> members;  // representative included, rank order
  double threshold = 0.0;
};

/// Standardizes a similarity family: rescale by (x - min) / denom, then
/// shift to mean 0.5 and population standard deviation 1. All-equal input
/// maps to all 0.5. A non-positive max denominator falls back to the
/// untouched values so the transform always preserves order; the
/// standardization output is identical either way whenever the rescale is
/// well defined.
std::vector<double> normalize_similarities(std::span<const double> sims,
                                           NormDenominator denom);

/// Fills norm_doc_similarity for every candidate from the family of raw
/// document similarities.
void normalize_doc_similarities(std::vector<ScoredCandidate>& candidates,
                                NormDenominator denom = NormDenominator::max);

/// Top-N candidates by raw document similarity, descending. Ties break by
/// earlier first occurrence, then lexicographic stem key.
std::vector<ScoredCandidate> rank_plain(std::span<const ScoredCandidate> candidates,
                                        int top_n);

/// Greedy maximal-marginal-relevance selection: each step picks the
/// candidate maximizing
///   lambda * ncos(c, doc) - (1 - lambda) * max over selected s of ncos(c, s)
/// over the remaining candidates, where both similarity families are
/// standardized (see normalize_similarities). The first pick maximizes the
/// relevance term alone. Ties break as in rank_plain. With lambda = 1 the
/// selection and order equal rank_plain's.
///
/// When `objectives` is given it receives the objective value of each pick.
std::vector<ScoredCandidate> mmr_select(std::span<const ScoredCandidate> candidates,
                                        const RankingConfig& config,
                                        std::vector<double>* objectives = nullptr);

/// Positional score of a candidate: document distance times normalized
/// first-occurrence offset, (1 - sim) * (first_offset + 1) / doc_token_count.
double positional_score(const ScoredCandidate& candidate, std::size_t doc_token_count);

/// Top-N candidates by positional score, ascending (smaller is better).
/// Ties break as in rank_plain.
std::vector<ScoredCandidate> rank_positional(std::span<const ScoredCandidate> candidates,
                                             std::size_t doc_token_count, int top_n);

/// Single-pass grouping of ranked keyphrases: each phrase joins the first
/// group whose representative is at least `threshold` cosine-similar,
/// otherwise founds a new group. The representative is the highest-ranked
/// member. Threshold must lie in (0, 1).
std::vector<KeyphraseGroup> group_keyphrases(std::span<const ScoredCandidate> selected,
                                             double threshold);

/// Candidate extraction plus embedding for one document. Candidates whose
/// embedding is out of vocabulary (or whose embedding is a zero vector) are
/// dropped with a warning; a document embedding that is out of vocabulary
/// throws OovError.
struct ScoredDocument {
  embedding::Vector document_vector;
  std::vector<ScoredCandidate> candidates;  // extraction order, norms filled
  std::vector<std::string> warnings;
  std::size_t doc_token_count = 0;
};
ScoredDocument score_candidates(const textproc::TaggedDocument& doc,
                                const embedding::Embedder& model,
                                NormDenominator denom = NormDenominator::max);

/// End-to-end extraction: candidates, embeddings, then the ranker picked by
/// config.mode. Scores are raw document cosines for plain mode, greedy
/// objective values for mmr, positional scores (ascending) for positional.
struct Keyphrase {
  std::string surface;
  double score = 0.0;
};
struct ExtractionResult {
  std::vector<Keyphrase> keyphrases;
  std::vector<ScoredCandidate> selected;
  std::vector<std::string> warnings;
  bool no_candidates = false;  // document yielded nothing embeddable
};
ExtractionResult extract_keyphrases(const textproc::TaggedDocument& doc,
                                    const embedding::Embedder& model,
                                    const RankingConfig& config);

}  // namespace embedrank::ranking
