#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sostrust::simtrust {

/// Lowercases UTF-8 text. ASCII, Latin-1 Supplement, Latin Extended-A,
/// Greek and Cyrillic capitals are folded; other code points pass through.
/// Invalid UTF-8 bytes are mapped to U+FFFD.
std::string to_lower(std::string_view text);

/// Lowercase, split on anything that is not a letter or digit, and drop
/// tokens shorter than two code points. No stemming.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace sostrust::simtrust
