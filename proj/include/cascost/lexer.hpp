#pragma once

#include <string_view>
#include <vector>

#include "cascost/token.hpp"

namespace cascost {

// Splits CAS+ source text into tokens. Lines whose first non-blank character
// is '%' are comments and produce nothing. LF and CRLF line endings are both
// accepted. Throws LexError on any character outside the token alphabet.
std::vector<Token> tokenize(std::string_view source);

}  // namespace cascost
