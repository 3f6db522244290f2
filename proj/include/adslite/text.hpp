#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace adslite {

/// Splits on any non-alphanumeric rune, lowercases, folds Latin diacritics
/// to ASCII and drops tokens shorter than 2 characters. No stemming and no
/// stop-word list: morphology lives in the synonym table.
std::vector<std::string> tokenize(std::string_view text);

/// Name normalization for author matching: lowercase, diacritics folded,
/// whitespace runs collapsed to one space, ends trimmed. Punctuation is
/// kept so initials ("C.") stay recognizable.
std::string normalize_name(std::string_view name);

std::string ascii_lower(std::string_view s);
bool ci_equal(std::string_view a, std::string_view b);
bool ci_contains(std::string_view haystack, std::string_view needle);

}  // namespace adslite
