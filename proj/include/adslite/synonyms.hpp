#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace adslite {

/// Disjoint groups of interchangeable index terms, expanded at query time.
/// Singleton groups are represented by absence.
class SynonymTable {
 public:
  /// One group per line, members whitespace-separated. Members are run
  /// through the tokenizer normalization; lines with fewer than two
  /// surviving members are ignored. A token in two groups throws
  /// MalformedDocument.
  static SynonymTable from_stream(std::istream& in);
  static SynonymTable from_file(const std::filesystem::path& path);

  void add_group(const std::vector<std::string>& members);

  /// nullptr when the token has no group.
  const std::set<std::string>* group_of(std::string_view token) const;

  /// exact => {token}; otherwise the token's whole group, or {token} when
  /// it has none.
  std::set<std::string> expand(const std::string& token, bool exact) const;

  std::size_t group_count() const { return groups_.size(); }
  const std::vector<std::set<std::string>>& groups() const { return groups_; }

 private:
  std::vector<std::set<std::string>> groups_;
  std::unordered_map<std::string, std::size_t> member_index_;
};

inline std::set<std::string> expand_term(const std::string& token,
                                         const SynonymTable& table,
                                         bool exact) {
  return table.expand(token, exact);
}

}  // namespace adslite
