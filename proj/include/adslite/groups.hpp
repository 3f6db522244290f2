#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace adslite {

/// Curated named bibcode sets ("papers by researchers at a given
/// institution"). One text file per group, one bibcode per line, group
/// named by the file stem. Curation happens by editing the files.
class GroupStore {
 public:
  GroupStore() = default;

  static GroupStore from_directory(const std::filesystem::path& dir);

  void add_group(const std::string& name, std::set<std::string> bibcodes);

  /// nullptr when undefined; callers surface UnknownGroup.
  const std::set<std::string>* find(std::string_view name) const;

  std::vector<std::string> names() const;

 private:
  std::map<std::string, std::set<std::string>> groups_;
};

}  // namespace adslite
