#include "cascost/lexer.hpp"

#include <cctype>
#include <optional>

#include "cascost/errors.hpp"

namespace cascost {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_blank(char c) { return c == ' ' || c == '\t'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        newline();
        continue;
      }
      if (c == '\r') {  // CRLF or stray CR: both end the line
        ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '\n') ++pos_;
        line_ += 1;
        col_ = 1;
        line_has_content_ = false;
        continue;
      }
      if (is_blank(c)) {
        advance(1);
        continue;
      }
      if (c == '%' && !line_has_content_) {
        skip_to_eol();
        continue;
      }
      line_has_content_ = true;
      if (is_ident_start(c)) {
        tokens.push_back(lex_word());
        if (tokens.back().kind == TokenKind::KwProtocol) {
          if (auto name = lex_protocol_name()) tokens.push_back(*name);
        }
        continue;
      }
      if (is_digit(c)) {
        tokens.push_back(lex_integer());
        continue;
      }
      tokens.push_back(lex_punct());
    }
    return tokens;
  }

 private:
  SourceSpan span_here(std::size_t length) const {
    return SourceSpan{line_, col_, length};
  }

  void advance(std::size_t n) {
    pos_ += n;
    col_ += static_cast<int>(n);
  }

  void newline() {
    ++pos_;
    line_ += 1;
    col_ = 1;
    line_has_content_ = false;
  }

  void skip_to_eol() {
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') advance(1);
  }

  Token lex_word() {
    std::size_t start = pos_;
    SourceSpan span = span_here(0);
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance(1);
    std::string text(src_.substr(start, pos_ - start));
    span.length = text.size();

    TokenKind kind = TokenKind::Identifier;
    if (text == "protocol") kind = TokenKind::KwProtocol;
    else if (text == "identifiers") kind = TokenKind::KwIdentifiers;
    else if (text == "messages") kind = TokenKind::KwMessages;
    else if (text == "knowledge") kind = TokenKind::KwKnowledge;
    else if (text == "goal") kind = TokenKind::KwGoal;
    else if (text == "session") {
      // `session-instances` is one keyword; whitespace around the hyphen is
      // accepted.
      if (auto joined = try_session_instances(span, start)) return *joined;
    }
    return Token{kind, std::move(text), span};
  }

  std::optional<Token> try_session_instances(SourceSpan start_span, std::size_t word_begin) {
    std::size_t save_pos = pos_;
    int save_col = col_;
    while (pos_ < src_.size() && is_blank(src_[pos_])) advance(1);
    if (pos_ >= src_.size() || src_[pos_] != '-' ||
        (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>')) {
      pos_ = save_pos;
      col_ = save_col;
      return std::nullopt;
    }
    advance(1);
    while (pos_ < src_.size() && is_blank(src_[pos_])) advance(1);
    std::size_t word_start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) advance(1);
    if (src_.substr(word_start, pos_ - word_start) != "instances") {
      pos_ = save_pos;
      col_ = save_col;
      return std::nullopt;
    }
    start_span.length = pos_ - word_begin;
    return Token{TokenKind::KwSessionInstances, "session-instances", start_span};
  }

  // Everything to the end of the line after `protocol` is the name, trimmed.
  std::optional<Token> lex_protocol_name() {
    while (pos_ < src_.size() && is_blank(src_[pos_])) advance(1);
    std::size_t start = pos_;
    SourceSpan span = span_here(0);
    while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') advance(1);
    std::size_t end = pos_;
    while (end > start && is_blank(src_[end - 1])) --end;
    if (end == start) return std::nullopt;
    span.length = end - start;
    return Token{TokenKind::ProtocolName, std::string(src_.substr(start, end - start)), span};
  }

  Token lex_integer() {
    std::size_t start = pos_;
    SourceSpan span = span_here(0);
    while (pos_ < src_.size() && is_digit(src_[pos_])) advance(1);
    std::string text(src_.substr(start, pos_ - start));
    span.length = text.size();
    return Token{TokenKind::Integer, std::move(text), span};
  }

  Token lex_punct() {
    char c = src_[pos_];
    SourceSpan span = span_here(1);
    switch (c) {
      case '.': advance(1); return Token{TokenKind::Dot, ".", span};
      case ':': advance(1); return Token{TokenKind::Colon, ":", span};
      case ';': advance(1); return Token{TokenKind::Semicolon, ";", span};
      case ',': advance(1); return Token{TokenKind::Comma, ",", span};
      case '{': advance(1); return Token{TokenKind::LBrace, "{", span};
      case '}': advance(1); return Token{TokenKind::RBrace, "}", span};
      case '(': advance(1); return Token{TokenKind::LParen, "(", span};
      case ')': advance(1); return Token{TokenKind::RParen, ")", span};
      case '[': advance(1); return Token{TokenKind::LBracket, "[", span};
      case ']': advance(1); return Token{TokenKind::RBracket, "]", span};
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          span.length = 2;
          advance(2);
          return Token{TokenKind::Arrow, "->", span};
        }
        break;
      default: break;
    }
    throw LexError(span, std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool line_has_content_ = false;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::ProtocolName: return "protocol name";
    case TokenKind::KwProtocol: return "'protocol'";
    case TokenKind::KwIdentifiers: return "'identifiers'";
    case TokenKind::KwMessages: return "'messages'";
    case TokenKind::KwKnowledge: return "'knowledge'";
    case TokenKind::KwSessionInstances: return "'session-instances'";
    case TokenKind::KwGoal: return "'goal'";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Eof: return "end of input";
  }
  return "?";
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Identifier: return "identifier '" + token.text + "'";
    case TokenKind::Integer: return "integer " + token.text;
    default: return describe(token.kind);
  }
}

}  // namespace cascost
