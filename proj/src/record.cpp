#include "adslite/record.hpp"

#include "adslite/errors.hpp"

namespace adslite {

const char* db_name(Database db) noexcept {
  switch (db) {
    case Database::ast: return "ast";
    case Database::phy: return "phy";
    case Database::pre: return "pre";
    case Database::gen: return "gen";
  }
  return "?";
}

Database db_from_name(std::string_view name) {
  if (name == "ast") return Database::ast;
  if (name == "phy") return Database::phy;
  if (name == "pre") return Database::pre;
  if (name == "gen") return Database::gen;
  throw AdsError(Err::unknown_database, std::string(name));
}

bool BibRecord::has_affiliation() const {
  for (const Author& a : authors) {
    if (a.affiliation && !a.affiliation->empty()) return true;
  }
  return false;
}

}  // namespace adslite
