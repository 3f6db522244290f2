#pragma once

#include <stdexcept>
#include <string>

namespace adslite {

enum class Err {
  malformed_bibcode,
  duplicate_bibcode,
  empty_authors,
  non_empty_databases_required,
  unknown_database,
  malformed_document,
  malformed_date,
  malformed_field,
  empty_query,
  unknown_group,
  unknown_token,
  empty_database,
  empty_pattern,
  empty_selection,
  config_error,
};

/// Stable reason name, e.g. "MalformedBibcode". Used verbatim in CLI and
/// HTTP error bodies and in ingest reports.
const char* err_name(Err code) noexcept;

class AdsError : public std::runtime_error {
 public:
  explicit AdsError(Err code, const std::string& detail = "");
  Err code() const noexcept { return code_; }
  const char* code_name() const noexcept { return err_name(code_); }

 private:
  Err code_;
};

}  // namespace adslite
