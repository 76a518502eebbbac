#pragma once

#include <string>

#include "cascost/ast.hpp"

namespace cascost {

// Emits canonical CAS+ text. parse(pretty_print(s)) is structurally equal
// to s. Consecutive declarations of one kind are grouped on one line;
// messages are numbered from 1.
std::string pretty_print(const ProtocolSpec& spec);

std::string pretty_print(const Term& term);

}  // namespace cascost
