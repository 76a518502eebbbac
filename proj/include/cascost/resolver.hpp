#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cascost/ast.hpp"
#include "cascost/errors.hpp"

namespace cascost {

class CostModel;

// A spec that passed name resolution and kind checking, plus the lookup
// tables the analyzer needs and any lint warnings raised along the way.
struct ResolvedSpec {
  ProtocolSpec spec;
  std::map<std::string, DeclKind> kinds;
  std::map<std::string, std::set<std::string>> knowledge;  // role -> items
  std::vector<Diagnostic> warnings;

  DeclKind kind_of(const std::string& name) const { return kinds.at(name); }
};

// Checks that every used identifier is declared, encryption keys are key
// kinds, message endpoints are distinct users, and knowledge roles are users.
// Warnings (not errors): an endpoint without a knowledge entry, a receiver
// whose knowledge lacks the key of an encryption it receives.
// Throws SemanticError on the first violation.
ResolvedSpec resolve(ProtocolSpec spec);

// Same checks; additionally warns about declared functions the model leaves
// unclassified (their applications will be counted but not priced).
ResolvedSpec resolve(ProtocolSpec spec, const CostModel& model);

}  // namespace cascost
