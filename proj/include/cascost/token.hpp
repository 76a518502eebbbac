#pragma once

#include <string>
#include <vector>

#include "cascost/source_span.hpp"

namespace cascost {

enum class TokenKind {
  Identifier,
  Integer,
  ProtocolName,  // free text to end of line after the 'protocol' keyword
  KwProtocol,
  KwIdentifiers,
  KwMessages,
  KwKnowledge,
  KwSessionInstances,
  KwGoal,
  Dot,
  Colon,
  Semicolon,
  Comma,
  Arrow,
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Eof,  // synthesized by the parser cursor, never emitted by tokenize()
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

// Human-readable token description for diagnostics, e.g. "identifier 'Na'".
std::string describe(const Token& token);
std::string describe(TokenKind kind);

}  // namespace cascost
