#pragma once

#include <filesystem>
#include <string>

namespace adslite {

/// Service wiring. Unset optional paths disable the matching store.
/// Environment variables (ADSLITE_CORPUS, ADSLITE_SYNONYMS,
/// ADSLITE_GROUPS_DIR, ADSLITE_REFEREED, ADSLITE_PARAMS, ADSLITE_PROFILES,
/// ADSLITE_JOURNAL, ADSLITE_DIGEST_DIR, ADSLITE_LISTEN) override file
/// values.
struct ServiceConfig {
  std::filesystem::path corpus;             // required
  std::filesystem::path synonyms;           // optional; empty table if unset
  std::filesystem::path groups_dir;         // optional
  std::filesystem::path refereed;           // optional write store
  std::filesystem::path classifier_params;  // optional; defaults if unset
  std::filesystem::path profiles;           // optional
  std::filesystem::path libraries_journal;  // optional write store
  std::filesystem::path digest_dir;         // created on demand
  std::string listen = "127.0.0.1:8080";

  /// "key = value" lines, # comments. Unknown keys throw ConfigError.
  static ServiceConfig from_file(const std::filesystem::path& path);

  void apply_env();

  /// Fail fast: the corpus and any configured read store must exist;
  /// write stores only need an existing parent directory.
  void validate() const;
};

}  // namespace adslite
