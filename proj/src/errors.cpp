#include "adslite/errors.hpp"

namespace adslite {

const char* err_name(Err code) noexcept {
  switch (code) {
    case Err::malformed_bibcode: return "MalformedBibcode";
    case Err::duplicate_bibcode: return "DuplicateBibcode";
    case Err::empty_authors: return "EmptyAuthors";
    case Err::non_empty_databases_required: return "NonEmptyDatabasesRequired";
    case Err::unknown_database: return "UnknownDatabase";
    case Err::malformed_document: return "MalformedDocument";
    case Err::malformed_date: return "MalformedDate";
    case Err::malformed_field: return "MalformedField";
    case Err::empty_query: return "EmptyQuery";
    case Err::unknown_group: return "UnknownGroup";
    case Err::unknown_token: return "UnknownToken";
    case Err::empty_database: return "EmptyDatabase";
    case Err::empty_pattern: return "EmptyPattern";
    case Err::empty_selection: return "EmptySelection";
    case Err::config_error: return "ConfigError";
  }
  return "UnknownError";
}

namespace {
std::string make_message(Err code, const std::string& detail) {
  std::string msg = err_name(code);
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

AdsError::AdsError(Err code, const std::string& detail)
    : std::runtime_error(make_message(code, detail)), code_(code) {}

}  // namespace adslite
