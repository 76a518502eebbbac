#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cascost/source_span.hpp"

namespace cascost {

enum class DeclKind {
  User,
  Number,
  Text,
  SymmetricKey,
  PublicKey,
  Function,
};

const char* decl_kind_name(DeclKind kind);
std::optional<DeclKind> decl_kind_from_name(const std::string& name);

struct Declaration {
  std::string name;
  DeclKind kind;
  SourceSpan span;
};

enum class TermKind {
  Atom,   // bare identifier
  Tuple,  // comma list, two or more children, never directly nested
  Enc,    // {body}Key: one child (the body), name = key identifier
  Apply,  // F(args): name = function identifier, children = arguments
};

// Uniform payload node. `name` is the atom, key, or function identifier;
// Tuple nodes leave it empty.
struct Term {
  TermKind kind = TermKind::Atom;
  std::string name;
  std::vector<Term> children;
  SourceSpan span;

  static Term atom(std::string name, SourceSpan span = {}) {
    return Term{TermKind::Atom, std::move(name), {}, span};
  }
  static Term tuple(std::vector<Term> items, SourceSpan span = {}) {
    return Term{TermKind::Tuple, {}, std::move(items), span};
  }
  static Term enc(Term body, std::string key, SourceSpan span = {}) {
    Term t{TermKind::Enc, std::move(key), {}, span};
    t.children.push_back(std::move(body));
    return t;
  }
  static Term apply(std::string function, std::vector<Term> args, SourceSpan span = {}) {
    return Term{TermKind::Apply, std::move(function), std::move(args), span};
  }

  const Term& enc_body() const { return children.front(); }
};

struct Message {
  int index = 0;  // 1-based, equals position in the messages section
  std::string sender;
  std::string receiver;
  Term payload;
  SourceSpan span;           // of the message number
  SourceSpan sender_span;
  SourceSpan receiver_span;
};

struct KnowledgeEntry {
  std::string role;
  std::vector<std::string> items;
  SourceSpan span;
};

// One [A: alice, B: bob, ...] line. Right-hand sides are opaque instance
// labels, not declared identifiers.
struct SessionInstance {
  std::vector<std::pair<std::string, std::string>> bindings;
  SourceSpan span;
};

struct Goal {
  std::string kind;                // e.g. secrecy_of
  std::vector<std::string> args;   // declared identifiers
  std::optional<std::vector<std::string>> session_refs;  // bracket group, if present
  SourceSpan span;
};

struct ProtocolSpec {
  std::string name;
  std::vector<Declaration> declarations;
  std::vector<Message> messages;
  std::vector<KnowledgeEntry> knowledge;
  std::vector<SessionInstance> session_instances;
  std::vector<Goal> goals;
};

// Structural equality; source spans are ignored throughout.
bool equal(const Term& a, const Term& b);
bool equal(const Message& a, const Message& b);
bool equal(const ProtocolSpec& a, const ProtocolSpec& b);

}  // namespace cascost
