#pragma once

#include <cstddef>

namespace cascost {

// 1-based line/column position of a lexeme plus its length in characters.
struct SourceSpan {
  int line = 1;
  int column = 1;
  std::size_t length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

}  // namespace cascost
