#pragma once

#include <string_view>
#include <vector>

#include "cascost/ast.hpp"
#include "cascost/token.hpp"

namespace cascost {

// Builds an unresolved ProtocolSpec from a token stream. Sections must appear
// in order: protocol, identifiers, messages, knowledge, then the optional
// session-instances and goal sections. Throws ParseError or
// MissingSectionError.
ProtocolSpec parse(const std::vector<Token>& tokens);

// tokenize + parse in one step.
ProtocolSpec parse_source(std::string_view source);

}  // namespace cascost
