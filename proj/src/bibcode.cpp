#include "adslite/bibcode.hpp"

#include <cctype>
#include <cstdio>

#include "adslite/errors.hpp"

namespace adslite {

namespace {

constexpr std::size_t kBibcodeLen = 19;

bool allowed_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '.': case '&': case '+': case '-': case ':': case '_':
      return true;
    default:
      return false;
  }
}

std::string strip_leading_dots(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] == '.') ++i;
  return std::string(s.substr(i));
}

std::string strip_trailing_dots(std::string_view s) {
  std::size_t n = s.size();
  while (n > 0 && s[n - 1] == '.') --n;
  return std::string(s.substr(0, n));
}

}  // namespace

std::string Bibcode::render() const {
  char head[8];
  std::snprintf(head, sizeof(head), "%04d", year);
  std::string out = head;
  out += journal;
  out.append(5 - journal.size(), '.');
  out.append(4 - volume.size(), '.');
  out += volume;
  out.push_back(qualifier);
  out.append(4 - page.size(), '.');
  out += page;
  out.push_back(author_initial);
  return out;
}

Bibcode parse_bibcode(const std::string& s) {
  if (s.size() != kBibcodeLen)
    throw AdsError(Err::malformed_bibcode, "length " + std::to_string(s.size()) + ": " + s);
  for (int i = 0; i < 4; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw AdsError(Err::malformed_bibcode, "non-numeric year: " + s);
  }
  for (std::size_t i = 4; i < kBibcodeLen; ++i) {
    if (!allowed_char(s[i]))
      throw AdsError(Err::malformed_bibcode, "forbidden character: " + s);
  }
  Bibcode b;
  b.year = std::stoi(s.substr(0, 4));
  if (b.year < 1000 || b.year > 2999)
    throw AdsError(Err::malformed_bibcode, "year out of range: " + s);
  b.journal = strip_trailing_dots(std::string_view(s).substr(4, 5));
  b.volume = strip_leading_dots(std::string_view(s).substr(9, 4));
  b.qualifier = s[13];
  b.page = strip_leading_dots(std::string_view(s).substr(14, 4));
  b.author_initial = s[18];
  return b;
}

bool is_valid_bibcode(const std::string& s) {
  try {
    parse_bibcode(s);
    return true;
  } catch (const AdsError&) {
    return false;
  }
}

}  // namespace adslite
