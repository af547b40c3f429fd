#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "embedrank/textproc.hpp"

namespace embedrank::eval {

/// One benchmark document: raw or pre-tagged body plus the union of all
/// assigned keyphrase sets.
struct DatasetDocument {
  std::string id;
  std::string body;
  bool pretagged = false;
  std::vector<std::string> gold_keyphrases;
};

enum class DatasetFormat { inspec, duc_sgml, nus, generic_json };

struct Dataset {
  std::vector<DatasetDocument> documents;
  std::vector<std::string> warnings;  // per-document load problems
};

/// Loads a dataset directory (or, for generic_json, a .jsonl file).
/// Malformed individual documents are collected as warnings and skipped; an
/// empty result throws FormatError.
///
/// Layouts:
///   inspec       - directory of paired <id>.abstr / <id>.uncontr files;
///                  keyphrases separated by ';'.
///   duc_sgml     - directory of SGML files with <DOC> blocks; the body is
///                  the content of the first <TEXT> element only. Gold
///                  phrases come from an answer file (annotations.txt or
///                  *.ans) with lines "docid@kp;kp;..." (tab also accepted).
///   nus          - one subdirectory per document: a single .txt body plus
///                  any number of .kwd files (one phrase per line), unioned.
///   generic_json - JSON Lines; each object has "id", "keyphrases", and
///                  either "text" (raw) or "tagged_text" (pre-tagged
///                  format).
Dataset load_dataset(const std::filesystem::path& path, DatasetFormat format);

/// Table-style dataset statistics, all computed on stemmed forms. A gold
/// keyphrase is "in the document" iff its stemmed token sequence occurs
/// contiguously in the stemmed document token sequence, and "in the
/// candidates" iff some extracted candidate shares its stem key.
struct DatasetStats {
  std::size_t n_docs = 0;
  double avg_tokens = 0.0;
  double avg_unique_candidates = 0.0;
  std::size_t total_unique_keyphrases = 0;
  double avg_unique_keyphrases = 0.0;
  double pct_kp_missing_in_doc = 0.0;         // percent, 0..100
  double pct_kp_missing_in_candidates = 0.0;  // percent, 0..100
  double pct_missing_due_to_candidates = 0.0; // difference of the two above
};
DatasetStats compute_stats(std::span<const DatasetDocument> docs,
                           const textproc::Tagger& tagger, int jobs = 1);

/// An extraction method under evaluation: ordered keyphrases, best first.
/// Must be callable from several threads when jobs > 1.
using Extractor = std::function<std::vector<std::string>(const textproc::TaggedDocument&)>;

enum class F1Mode { of_macro_pr, mean_per_doc };
enum class PrecisionDenominator { extracted, cutoff };

struct EvalOptions {
  F1Mode f1_mode = F1Mode::of_macro_pr;
  PrecisionDenominator precision_denominator = PrecisionDenominator::extracted;
  int jobs = 1;
};

struct DocScores {
  int cutoff = 0;
  std::size_t true_positives = 0;
  std::size_t n_extracted = 0;  // distinct stems within the cutoff
  std::size_t n_gold = 0;       // distinct gold stems
  double precision = 0.0;       // fraction, 0..1
  double recall = 0.0;
};
struct DocResult {
  std::string doc_id;
  std::vector<DocScores> at;  // one entry per cutoff
};
struct CutoffScores {
  int cutoff = 0;
  double precision = 0.0;  // percent, 0..100, macro averaged
  double recall = 0.0;
  double f1 = 0.0;
};
struct EvalReport {
  std::vector<CutoffScores> cutoffs;
  std::vector<DocResult> per_document;
  std::vector<std::string> warnings;
};

/// Stemmed precision/recall/F1 at each cutoff. Per document: the top-N
/// extracted phrases and the gold set are both mapped to stem keys and
/// deduplicated; TP is the overlap. Precision and recall are
/// macro-averaged over documents; F1 is the harmonic mean of the macro
/// averages (or the mean of per-document F1 under F1Mode::mean_per_doc).
/// A document where the extractor returns nothing (or throws) counts as
/// precision and recall 0.
EvalReport evaluate(const Extractor& extractor,
                    std::span<const DatasetDocument> docs,
                    std::span<const int> cutoffs,
                    const textproc::Tagger& tagger,
                    const EvalOptions& options = {});

struct ComparisonRow {
  int cutoff = 0;
  std::string method;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};
struct Comparison {
  std::vector<ComparisonRow> rows;  // cutoff-major, methods in input order
  std::vector<std::string> errors;  // methods that failed outright
};

/// Runs evaluate once per named method; a failing method is reported in
/// `errors` without aborting the others.
Comparison compare(std::span<const std::pair<std::string, Extractor>> methods,
                   std::span<const DatasetDocument> docs,
                   std::span<const int> cutoffs,
                   const textproc::Tagger& tagger,
                   const EvalOptions& options = {});

/// Tags a raw body or parses a pre-tagged one.
textproc::TaggedDocument materialize(const DatasetDocument& doc,
                                     const textproc::Tagger& tagger);

}  // namespace embedrank::eval
