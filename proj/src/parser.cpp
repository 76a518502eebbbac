#include "cascost/parser.hpp"

#include <initializer_list>
#include <string>

#include "cascost/errors.hpp"
#include "cascost/lexer.hpp"

namespace cascost {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    SourceSpan end{1, 1, 0};
    if (!tokens_.empty()) {
      const Token& last = tokens_.back();
      end = SourceSpan{last.span.line,
                       last.span.column + static_cast<int>(last.span.length), 0};
    }
    eof_ = Token{TokenKind::Eof, "", end};
  }

  ProtocolSpec run() {
    ProtocolSpec spec;
    spec.name = parse_header();

    expect_section(TokenKind::KwIdentifiers, "identifiers",
                   {TokenKind::KwMessages, TokenKind::KwKnowledge,
                    TokenKind::KwSessionInstances, TokenKind::KwGoal});
    parse_declarations(spec);

    expect_section(TokenKind::KwMessages, "messages",
                   {TokenKind::KwKnowledge, TokenKind::KwSessionInstances,
                    TokenKind::KwGoal});
    parse_messages(spec);

    expect_section(TokenKind::KwKnowledge, "knowledge",
                   {TokenKind::KwSessionInstances, TokenKind::KwGoal});
    parse_knowledge(spec);

    if (peek().kind == TokenKind::KwSessionInstances) parse_session_instances(spec);
    if (peek().kind == TokenKind::KwGoal) parse_goals(spec);

    if (peek().kind != TokenKind::Eof)
      throw ParseError(peek().span, "end of input", describe(peek()));
    return spec;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : eof_;
  }

  const Token& consume() {
    const Token& t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().span, what, describe(peek()));
    return consume();
  }

  void expect_section(TokenKind kind, const std::string& name,
                      std::initializer_list<TokenKind> later_sections) {
    if (peek().kind == kind) {
      consume();
      return;
    }
    for (TokenKind later : later_sections) {
      if (peek().kind == later) throw MissingSectionError(peek().span, name);
    }
    if (peek().kind == TokenKind::Eof) throw MissingSectionError(peek().span, name);
    throw ParseError(peek().span, "'" + name + "' section", describe(peek()));
  }

  std::string parse_header() {
    if (peek().kind != TokenKind::KwProtocol) {
      if (peek().kind == TokenKind::Eof) throw MissingSectionError(peek().span, "protocol");
      throw ParseError(peek().span, "'protocol'", describe(peek()));
    }
    consume();
    return expect(TokenKind::ProtocolName, "protocol name").text;
  }

  void parse_declarations(ProtocolSpec& spec) {
    while (peek().kind == TokenKind::Identifier) {
      std::vector<Token> names;
      names.push_back(consume());
      while (peek().kind == TokenKind::Comma) {
        consume();
        names.push_back(expect(TokenKind::Identifier, "identifier"));
      }
      expect(TokenKind::Colon, "':'");
      const Token& kind_tok = expect(
          TokenKind::Identifier,
          "declaration kind (user, number, text, symmetric_key, public_key, function)");
      auto kind = decl_kind_from_name(kind_tok.text);
      if (!kind)
        throw ParseError(kind_tok.span,
                         "declaration kind (user, number, text, symmetric_key, "
                         "public_key, function)",
                         "identifier '" + kind_tok.text + "'");
      expect(TokenKind::Semicolon, "';'");
      for (const Token& n : names)
        spec.declarations.push_back(Declaration{n.text, *kind, n.span});
    }
  }

  void parse_messages(ProtocolSpec& spec) {
    if (peek().kind != TokenKind::Integer)
      throw ParseError(peek().span, "a numbered message", describe(peek()));
    while (peek().kind == TokenKind::Integer) {
      const Token& num = consume();
      int expected_index = static_cast<int>(spec.messages.size()) + 1;
      if (num.text.size() > 6 || std::stoi(num.text) != expected_index)
        throw ParseError(num.span, "message number " + std::to_string(expected_index),
                         num.text);
      expect(TokenKind::Dot, "'.'");
      const Token& sender = expect(TokenKind::Identifier, "sender identifier");
      expect(TokenKind::Arrow, "'->'");
      const Token& receiver = expect(TokenKind::Identifier, "receiver identifier");
      expect(TokenKind::Colon, "':'");
      Term payload = parse_term_list();
      Message msg;
      msg.index = expected_index;
      msg.sender = sender.text;
      msg.receiver = receiver.text;
      msg.payload = std::move(payload);
      msg.span = num.span;
      msg.sender_span = sender.span;
      msg.receiver_span = receiver.span;
      spec.messages.push_back(std::move(msg));
    }
  }

  // Comma list; two or more elements form a Tuple. Elements are never
  // themselves tuples, so flattening holds by construction.
  Term parse_term_list() {
    std::vector<Term> items;
    items.push_back(parse_element());
    while (peek().kind == TokenKind::Comma) {
      consume();
      items.push_back(parse_element());
    }
    if (items.size() == 1) return std::move(items.front());
    SourceSpan span = items.front().span;
    return Term::tuple(std::move(items), span);
  }

  // Function application binds tightest, then {body}Key encryption.
  Term parse_element() {
    if (peek().kind == TokenKind::LBrace) {
      consume();
      Term body = parse_term_list();
      expect(TokenKind::RBrace, "'}'");
      const Token& key = expect(TokenKind::Identifier, "key identifier after '}'");
      return Term::enc(std::move(body), key.text, key.span);
    }
    if (peek().kind == TokenKind::Identifier) {
      const Token& head = consume();
      if (peek().kind == TokenKind::LParen) {
        consume();
        std::vector<Term> args;
        args.push_back(parse_element());
        while (peek().kind == TokenKind::Comma) {
          consume();
          args.push_back(parse_element());
        }
        expect(TokenKind::RParen, "')'");
        return Term::apply(head.text, std::move(args), head.span);
      }
      return Term::atom(head.text, head.span);
    }
    throw ParseError(peek().span, "a term", describe(peek()));
  }

  void parse_knowledge(ProtocolSpec& spec) {
    while (peek().kind == TokenKind::Identifier) {
      const Token& role = consume();
      expect(TokenKind::Colon, "':'");
      KnowledgeEntry entry;
      entry.role = role.text;
      entry.span = role.span;
      entry.items.push_back(expect(TokenKind::Identifier, "identifier").text);
      while (peek().kind == TokenKind::Comma) {
        consume();
        entry.items.push_back(expect(TokenKind::Identifier, "identifier").text);
      }
      expect(TokenKind::Semicolon, "';'");
      spec.knowledge.push_back(std::move(entry));
    }
  }

  void parse_session_instances(ProtocolSpec& spec) {
    consume();  // session-instances
    while (peek().kind == TokenKind::LBracket) {
      SessionInstance inst;
      inst.span = consume().span;
      while (true) {
        const Token& lhs = expect(TokenKind::Identifier, "identifier");
        expect(TokenKind::Colon, "':'");
        if (peek().kind != TokenKind::Identifier && peek().kind != TokenKind::Integer)
          throw ParseError(peek().span, "instance name", describe(peek()));
        const Token& rhs = consume();
        inst.bindings.emplace_back(lhs.text, rhs.text);
        if (peek().kind != TokenKind::Comma) break;
        consume();
      }
      expect(TokenKind::RBracket, "']'");
      expect(TokenKind::Semicolon, "';'");
      spec.session_instances.push_back(std::move(inst));
    }
  }

  void parse_goals(ProtocolSpec& spec) {
    consume();  // goal
    while (peek().kind == TokenKind::Identifier) {
      Goal goal;
      const Token& kind = consume();
      goal.kind = kind.text;
      goal.span = kind.span;
      while (peek().kind == TokenKind::Identifier || peek().kind == TokenKind::Comma) {
        if (peek().kind == TokenKind::Comma) {
          consume();
          goal.args.push_back(expect(TokenKind::Identifier, "identifier").text);
        } else {
          goal.args.push_back(consume().text);
        }
      }
      if (peek().kind == TokenKind::LBracket) {
        consume();
        std::vector<std::string> refs;
        while (peek().kind == TokenKind::Identifier) {
          refs.push_back(consume().text);
          if (peek().kind == TokenKind::Comma) consume();
        }
        expect(TokenKind::RBracket, "']'");
        goal.session_refs = std::move(refs);
      }
      expect(TokenKind::Semicolon, "';'");
      spec.goals.push_back(std::move(goal));
    }
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  Token eof_;
};

}  // namespace

ProtocolSpec parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ProtocolSpec parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace cascost
