#include "cascost/ast.hpp"

#include "cascost/errors.hpp"
#include "cascost/text_util.hpp"

namespace cascost {

std::string Diagnostic::to_string() const {
  if (!has_span) return "warning: " + message;
  return format_u64(static_cast<std::uint64_t>(span.line)) + ":" +
         format_u64(static_cast<std::uint64_t>(span.column)) + ": warning: " + message;
}

const char* decl_kind_name(DeclKind kind) {
  switch (kind) {
    case DeclKind::User: return "user";
    case DeclKind::Number: return "number";
    case DeclKind::Text: return "text";
    case DeclKind::SymmetricKey: return "symmetric_key";
    case DeclKind::PublicKey: return "public_key";
    case DeclKind::Function: return "function";
  }
  return "?";
}

std::optional<DeclKind> decl_kind_from_name(const std::string& name) {
  if (name == "user") return DeclKind::User;
  if (name == "number") return DeclKind::Number;
  if (name == "text") return DeclKind::Text;
  if (name == "symmetric_key") return DeclKind::SymmetricKey;
  if (name == "public_key") return DeclKind::PublicKey;
  if (name == "function") return DeclKind::Function;
  return std::nullopt;
}

bool equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!equal(a.children[i], b.children[i])) return false;
  return true;
}

bool equal(const Message& a, const Message& b) {
  return a.index == b.index && a.sender == b.sender && a.receiver == b.receiver &&
         equal(a.payload, b.payload);
}

bool equal(const ProtocolSpec& a, const ProtocolSpec& b) {
  if (a.name != b.name) return false;
  if (a.declarations.size() != b.declarations.size()) return false;
  for (std::size_t i = 0; i < a.declarations.size(); ++i) {
    if (a.declarations[i].name != b.declarations[i].name ||
        a.declarations[i].kind != b.declarations[i].kind)
      return false;
  }
  if (a.messages.size() != b.messages.size()) return false;
  for (std::size_t i = 0; i < a.messages.size(); ++i)
    if (!equal(a.messages[i], b.messages[i])) return false;
  if (a.knowledge.size() != b.knowledge.size()) return false;
  for (std::size_t i = 0; i < a.knowledge.size(); ++i) {
    if (a.knowledge[i].role != b.knowledge[i].role ||
        a.knowledge[i].items != b.knowledge[i].items)
      return false;
  }
  if (a.session_instances.size() != b.session_instances.size()) return false;
  for (std::size_t i = 0; i < a.session_instances.size(); ++i)
    if (a.session_instances[i].bindings != b.session_instances[i].bindings) return false;
  if (a.goals.size() != b.goals.size()) return false;
  for (std::size_t i = 0; i < a.goals.size(); ++i) {
    if (a.goals[i].kind != b.goals[i].kind || a.goals[i].args != b.goals[i].args ||
        a.goals[i].session_refs != b.goals[i].session_refs)
      return false;
  }
  return true;
}

}  // namespace cascost
