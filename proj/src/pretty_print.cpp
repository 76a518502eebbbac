#include "cascost/pretty_print.hpp"

#include <string>

namespace cascost {

namespace {

void print_term(const Term& term, std::string& out) {
  switch (term.kind) {
    case TermKind::Atom:
      out += term.name;
      break;
    case TermKind::Tuple:
      for (std::size_t i = 0; i < term.children.size(); ++i) {
        if (i) out += ", ";
        print_term(term.children[i], out);
      }
      break;
    case TermKind::Enc:
      out += '{';
      print_term(term.enc_body(), out);
      out += '}';
      out += term.name;
      break;
    case TermKind::Apply:
      out += term.name;
      out += '(';
      for (std::size_t i = 0; i < term.children.size(); ++i) {
        if (i) out += ", ";
        print_term(term.children[i], out);
      }
      out += ')';
      break;
  }
}

}  // namespace

std::string pretty_print(const Term& term) {
  std::string out;
  print_term(term, out);
  return out;
}

std::string pretty_print(const ProtocolSpec& spec) {
  std::string out;
  out += "protocol " + spec.name + "\n\n";

  out += "identifiers\n";
  // consecutive declarations of one kind share a line
  std::size_t i = 0;
  while (i < spec.declarations.size()) {
    std::size_t j = i;
    while (j < spec.declarations.size() &&
           spec.declarations[j].kind == spec.declarations[i].kind)
      ++j;
    for (std::size_t k = i; k < j; ++k) {
      if (k > i) out += ", ";
      out += spec.declarations[k].name;
    }
    out += " : ";
    out += decl_kind_name(spec.declarations[i].kind);
    out += ";\n";
    i = j;
  }

  out += "\nmessages\n";
  for (std::size_t m = 0; m < spec.messages.size(); ++m) {
    const Message& msg = spec.messages[m];
    out += std::to_string(m + 1) + ". " + msg.sender + " -> " + msg.receiver + " : ";
    print_term(msg.payload, out);
    out += '\n';
  }

  out += "\nknowledge\n";
  for (const auto& entry : spec.knowledge) {
    out += entry.role + " : ";
    for (std::size_t k = 0; k < entry.items.size(); ++k) {
      if (k) out += ", ";
      out += entry.items[k];
    }
    out += ";\n";
  }

  if (!spec.session_instances.empty()) {
    out += "\nsession-instances\n";
    for (const auto& inst : spec.session_instances) {
      out += '[';
      for (std::size_t b = 0; b < inst.bindings.size(); ++b) {
        if (b) out += ", ";
        out += inst.bindings[b].first + ": " + inst.bindings[b].second;
      }
      out += "];\n";
    }
  }

  if (!spec.goals.empty()) {
    out += "\ngoal\n";
    for (const auto& goal : spec.goals) {
      out += goal.kind;
      for (std::size_t a = 0; a < goal.args.size(); ++a)
        out += (a ? ", " : " ") + goal.args[a];
      if (goal.session_refs) {
        out += " [";
        for (std::size_t r = 0; r < goal.session_refs->size(); ++r) {
          if (r) out += ", ";
          out += (*goal.session_refs)[r];
        }
        out += ']';
      }
      out += ";\n";
    }
  }

  return out;
}

}  // namespace cascost
