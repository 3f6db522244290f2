#include "adslite/synonyms.hpp"

#include <fstream>
#include <sstream>

#include "adslite/errors.hpp"
#include "adslite/text.hpp"

namespace adslite {

SynonymTable SynonymTable::from_stream(std::istream& in) {
  SynonymTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> members;
    std::string word;
    while (words >> word) {
      // One raw word may normalize away entirely ("X-") or split; keep
      // every surviving token as a member.
      for (std::string& tok : tokenize(word)) members.push_back(std::move(tok));
    }
    if (members.size() >= 2) table.add_group(members);
  }
  return table;
}

SynonymTable SynonymTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw AdsError(Err::config_error, "cannot open synonym table: " + path.string());
  return from_stream(in);
}

void SynonymTable::add_group(const std::vector<std::string>& members) {
  std::set<std::string> group(members.begin(), members.end());
  if (group.size() < 2) return;
  const std::size_t idx = groups_.size();
  for (const std::string& m : group) {
    if (member_index_.count(m))
      throw AdsError(Err::malformed_document, "synonym token in two groups: " + m);
  }
  for (const std::string& m : group) member_index_.emplace(m, idx);
  groups_.push_back(std::move(group));
}

const std::set<std::string>* SynonymTable::group_of(std::string_view token) const {
  auto it = member_index_.find(std::string(token));
  if (it == member_index_.end()) return nullptr;
  return &groups_[it->second];
}

std::set<std::string> SynonymTable::expand(const std::string& token, bool exact) const {
  if (exact) return {token};
  if (const std::set<std::string>* group = group_of(token)) return *group;
  return {token};
}

}  // namespace adslite
