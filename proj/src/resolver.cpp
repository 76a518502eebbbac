#include "cascost/resolver.hpp"

#include "cascost/cost_model.hpp"

namespace cascost {

namespace {

class Resolver {
 public:
  Resolver(ProtocolSpec spec, const CostModel* model)
      : spec_(std::move(spec)), model_(model) {}

  ResolvedSpec run() {
    collect_declarations();
    check_messages();
    check_knowledge();
    check_session_instances();
    check_goals();
    lint_missing_knowledge();
    lint_unclassified_functions();

    ResolvedSpec out;
    out.kinds = std::move(kinds_);
    out.knowledge = std::move(knowledge_);
    out.warnings = std::move(warnings_);
    out.spec = std::move(spec_);
    return out;
  }

 private:
  void collect_declarations() {
    for (const auto& decl : spec_.declarations) {
      auto [it, inserted] = kinds_.emplace(decl.name, decl.kind);
      (void)it;
      if (!inserted)
        throw SemanticError(decl.span, "duplicate declaration of '" + decl.name + "'");
    }
  }

  DeclKind require_declared(const std::string& name, SourceSpan span) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end())
      throw SemanticError(span, "undeclared identifier '" + name + "'");
    return it->second;
  }

  void require_user(const std::string& name, SourceSpan span, const char* position) const {
    DeclKind kind = require_declared(name, span);
    if (kind != DeclKind::User)
      throw SemanticError(span, std::string(position) + " '" + name +
                                    "' must be declared as user, not " +
                                    decl_kind_name(kind));
  }

  void check_messages() {
    for (const auto& msg : spec_.messages) {
      require_user(msg.sender, msg.sender_span, "sender");
      require_user(msg.receiver, msg.receiver_span, "receiver");
      if (msg.sender == msg.receiver)
        throw SemanticError(msg.receiver_span,
                            "message " + std::to_string(msg.index) +
                                " sends from '" + msg.sender + "' to itself");
      check_term(msg.payload);
    }
  }

  void check_term(const Term& term) {
    switch (term.kind) {
      case TermKind::Atom:
        require_declared(term.name, term.span);
        break;
      case TermKind::Tuple:
        for (const auto& child : term.children) check_term(child);
        break;
      case TermKind::Enc: {
        DeclKind kind = require_declared(term.name, term.span);
        if (kind != DeclKind::SymmetricKey && kind != DeclKind::PublicKey)
          throw SemanticError(term.span, "'" + term.name +
                                             "' is used as an encryption key but is "
                                             "declared as " +
                                             decl_kind_name(kind));
        check_term(term.enc_body());
        break;
      }
      case TermKind::Apply: {
        DeclKind kind = require_declared(term.name, term.span);
        if (kind != DeclKind::Function)
          throw SemanticError(term.span, "'" + term.name +
                                             "' is applied to arguments but is declared "
                                             "as " +
                                             decl_kind_name(kind));
        for (const auto& arg : term.children) check_term(arg);
        break;
      }
    }
  }

  void check_knowledge() {
    for (const auto& entry : spec_.knowledge) {
      require_user(entry.role, entry.span, "knowledge role");
      if (!knowledge_.emplace(entry.role, std::set<std::string>(entry.items.begin(),
                                                                entry.items.end()))
               .second)
        throw SemanticError(entry.span,
                            "duplicate knowledge entry for role '" + entry.role + "'");
      for (const auto& item : entry.items) require_declared(item, entry.span);
    }
  }

  void check_session_instances() {
    for (const auto& inst : spec_.session_instances)
      for (const auto& [lhs, rhs] : inst.bindings) {
        (void)rhs;  // instance labels are opaque
        require_declared(lhs, inst.span);
      }
  }

  void check_goals() {
    for (const auto& goal : spec_.goals)
      for (const auto& arg : goal.args) require_declared(arg, goal.span);
  }

  void lint_missing_knowledge() {
    for (const auto& msg : spec_.messages) {
      note_endpoint(msg.sender, msg.sender_span);
      note_endpoint(msg.receiver, msg.receiver_span);
      warn_missing_keys(msg);
    }
  }

  void note_endpoint(const std::string& role, SourceSpan span) {
    if (knowledge_.count(role) || !warned_roles_.insert(role).second) return;
    warnings_.push_back(
        Diagnostic::at(span, "role '" + role + "' has no knowledge entry"));
  }

  // Every encryption in a received payload whose key is outside the
  // receiver's knowledge, inner occurrences included.
  void warn_missing_keys(const Message& msg) {
    auto it = knowledge_.find(msg.receiver);
    if (it == knowledge_.end()) return;  // already warned about the entry itself
    walk_encs(msg.payload, msg, it->second);
  }

  void walk_encs(const Term& term, const Message& msg, const std::set<std::string>& known) {
    if (term.kind == TermKind::Enc && !known.count(term.name)) {
      warnings_.push_back(Diagnostic::at(
          term.span, "receiver '" + msg.receiver + "' of message " +
                         std::to_string(msg.index) + " lacks key '" + term.name + "'"));
    }
    for (const auto& child : term.children) walk_encs(child, msg, known);
  }

  void lint_unclassified_functions() {
    if (!model_) return;
    for (const auto& decl : spec_.declarations) {
      if (decl.kind != DeclKind::Function) continue;
      if (!model_->classify_function(decl.name)) {
        warnings_.push_back(Diagnostic::at(
            decl.span, "function '" + decl.name + "' has no cost classification in model '" +
                           model_->name + "'; its applications are counted but not priced"));
      }
    }
  }

  ProtocolSpec spec_;
  const CostModel* model_;
  std::map<std::string, DeclKind> kinds_;
  std::map<std::string, std::set<std::string>> knowledge_;
  std::set<std::string> warned_roles_;
  std::vector<Diagnostic> warnings_;
};

}  // namespace

ResolvedSpec resolve(ProtocolSpec spec) { return Resolver(std::move(spec), nullptr).run(); }

ResolvedSpec resolve(ProtocolSpec spec, const CostModel& model) {
  return Resolver(std::move(spec), &model).run();
}

}  // namespace cascost
