#include "adslite/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace adslite {

namespace {

// Decodes one UTF-8 sequence starting at i; advances i past it.
// Malformed bytes decode as U+FFFD and consume one byte.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFD;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

// Latin-1 Supplement and Latin Extended-A folded to ASCII.
// Returns nullptr when the codepoint has no letter mapping.
const char* fold_latin(char32_t cp) {
  if (cp >= 0x00C0 && cp <= 0x00FF) {
    switch (cp) {
      case 0x00C6: case 0x00E6: return "ae";
      case 0x00C7: case 0x00E7: return "c";
      case 0x00D0: case 0x00F0: return "d";
      case 0x00D1: case 0x00F1: return "n";
      case 0x00D7: case 0x00F7: return nullptr;  // multiply / divide signs
      case 0x00D8: case 0x00F8: return "o";
      case 0x00DD: case 0x00FD: case 0x00FF: return "y";
      case 0x00DE: case 0x00FE: return "th";
      case 0x00DF: return "ss";
      default: break;
    }
    if (cp <= 0x00C5 || (cp >= 0x00E0 && cp <= 0x00E5)) return "a";
    if (cp <= 0x00CB || (cp >= 0x00E8 && cp <= 0x00EB)) return "e";
    if (cp <= 0x00CF || (cp >= 0x00EC && cp <= 0x00EF)) return "i";
    if (cp <= 0x00D6 || (cp >= 0x00F2 && cp <= 0x00F6)) return "o";
    if (cp <= 0x00DC || (cp >= 0x00F9 && cp <= 0x00FC)) return "u";
    return nullptr;
  }
  if (cp >= 0x0100 && cp <= 0x017F) {
    if (cp <= 0x0105) return "a";
    if (cp <= 0x010D) return "c";
    if (cp <= 0x0111) return "d";
    if (cp <= 0x011B) return "e";
    if (cp <= 0x0123) return "g";
    if (cp <= 0x0127) return "h";
    if (cp <= 0x0131) return "i";
    if (cp <= 0x0133) return "ij";
    if (cp <= 0x0135) return "j";
    if (cp <= 0x0138) return "k";
    if (cp <= 0x0142) return "l";
    if (cp <= 0x014B) return "n";
    if (cp == 0x0152 || cp == 0x0153) return "oe";
    if (cp <= 0x0151) return "o";
    if (cp <= 0x0159) return "r";
    if (cp <= 0x0161) return "s";
    if (cp <= 0x0167) return "t";
    if (cp <= 0x0173) return "u";
    if (cp <= 0x0175) return "w";
    if (cp <= 0x0178) return "y";
    if (cp <= 0x017E) return "z";
    return "s";  // long s
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  std::size_t i = 0;
  auto flush = [&] {
    if (cur.size() >= 2) out.push_back(cur);
    cur.clear();
  };
  while (i < text.size()) {
    const char32_t cp = decode_utf8(text, i);
    if (cp < 0x80 && std::isalnum(static_cast<int>(cp))) {
      cur.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
      continue;
    }
    if (const char* folded = fold_latin(cp)) {
      cur += folded;
      continue;
    }
    flush();
  }
  flush();
  return out;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  std::size_t i = 0;
  bool pending_space = false;
  while (i < name.size()) {
    const char32_t cp = decode_utf8(name, i);
    if (cp < 0x80 && std::isspace(static_cast<int>(cp))) {
      pending_space = true;
      continue;
    }
    std::string piece;
    if (cp < 0x80) {
      piece.push_back(static_cast<char>(std::tolower(static_cast<int>(cp))));
    } else if (const char* folded = fold_latin(cp)) {
      piece = folded;
    } else {
      continue;  // unmapped non-ASCII dropped
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out += piece;
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool ci_equal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

bool ci_contains(std::string_view haystack, std::string_view needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  const std::string h = ascii_lower(haystack);
  const std::string n = ascii_lower(needle);
  return h.find(n) != std::string::npos;
}

}  // namespace adslite
