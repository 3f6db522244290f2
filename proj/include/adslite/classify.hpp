#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adslite/corpus.hpp"

namespace adslite {

struct ClassifierParams {
  std::uint32_t min_words = 20;             // gate on abstract token count
  std::map<std::string, double> word_weights;  // absent tokens weigh 1.0
  double citation_weight = 1.0;
  std::map<Database, std::set<std::string>> core_journals;
  double smoothing = 0.5;  // add-k

  double weight_of(const std::string& token) const {
    auto it = word_weights.find(token);
    return it == word_weights.end() ? 1.0 : it->second;
  }
};

/// Key = value parameter file: min_words, citation_weight, smoothing,
/// word_weights (token:weight pairs), core_journals (db:journal,journal ...).
ClassifierParams load_classifier_params(const std::filesystem::path& path);

struct DatabaseModel {
  Database db = Database::ast;
  std::map<std::string, std::uint64_t> term_counts;
  std::uint64_t total_tokens = 0;
};

struct ModelSet {
  std::map<Database, DatabaseModel> models;
  std::set<std::string> vocabulary;  // shared across all models

  // Pooled background counts.
  std::map<std::string, std::uint64_t> background_counts;
  std::uint64_t background_total = 0;

  double prob(const DatabaseModel& model, const std::string& token, double smoothing) const;
  double background_prob(const std::string& token, double smoothing) const;
};

/// Accumulates tokenized title+abstract of member records per database.
/// With an explicit database list, every listed id must have at least one
/// member record or EmptyDatabase is thrown; by default models are built
/// for the ids present in the corpus.
ModelSet train(const Corpus& corpus, const ClassifierParams& params,
               const std::set<Database>& databases = {});

/// score = sum over record tokens t of
///           weight(t) * log[P(t|model) / P(t|background)]
///         + citation_weight * |references into the model's core journals|
/// where P(t|m) = (count + s) / (total + s*|V|) and the background pools
/// all models. The caller enforces the min_words gate.
double score_against(const BibRecord& record, const DatabaseModel& model,
                     const ModelSet& all_models, const ClassifierParams& params);

struct ClassificationResult {
  std::map<Database, double> scores;  // empty when gated
  std::optional<Database> assigned;   // argmax; ties go to the smallest id
  bool gated = false;                 // abstract shorter than min_words
};

ClassificationResult classify(const BibRecord& record, const ModelSet& models,
                              const ClassifierParams& params);

struct ReclassEntry {
  std::string bibcode;
  std::set<Database> current;
  Database suggested = Database::ast;
  double margin = 0.0;  // best score minus best current-membership score
  std::uint32_t seq = 0;
};

/// Records in source_db whose argmax database is not among their current
/// memberships, sorted by descending margin. Gated records are skipped.
/// Throws UnknownDatabase when source_db has no trained model.
std::vector<ReclassEntry> reclassification_report(const Corpus& corpus,
                                                  const ModelSet& models,
                                                  const ClassifierParams& params,
                                                  Database source_db);

}  // namespace adslite
