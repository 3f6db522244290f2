#pragma once

#include <compare>
#include <string>

namespace adslite {

/// Fixed-width 19-character identifier: YYYYJJJJJVVVVMPPPPA.
/// Journal is right-padded with dots in the rendered form, volume and page
/// are left-padded; the struct stores the unpadded values so that
/// render(parse(s)) == s byte-for-byte for every valid s.
struct Bibcode {
  int year = 0;
  std::string journal;        // trailing pad dots stripped, <= 5 chars
  std::string volume;         // leading pad dots stripped, <= 4 chars
  char qualifier = '.';
  std::string page;           // leading pad dots stripped, <= 4 chars
  char author_initial = '.';

  std::string render() const;
  auto operator<=>(const Bibcode&) const = default;
};

/// Throws MalformedBibcode on wrong length, non-numeric or out-of-range
/// year, or characters outside the bibcode alphabet.
Bibcode parse_bibcode(const std::string& s);

bool is_valid_bibcode(const std::string& s);

}  // namespace adslite
