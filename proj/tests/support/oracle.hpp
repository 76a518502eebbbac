#pragma once

// Brute-force recount, kept independent of the analyzer: an iterative
// worklist over every payload node instead of the analyzer's recursive
// visitor. Charging rules restated from scratch:
//   - symmetric-key encryption: Se to the sender, Sd to the receiver
//   - public-key encryption:    Pe to the sender, Pd to the receiver
//   - application classified Th/Pm: one count to the sender
//   - unclassified application: tallied under the function name at both ends

#include <map>
#include <string>
#include <vector>

#include "cascost/analyzer.hpp"

namespace oracle {

using namespace cascost;

struct Recount {
  OperationCounts total;
  std::map<std::string, OperationCounts> by_role;
};

inline Recount recount(const ResolvedSpec& spec, const CostModel& model) {
  Recount out;
  for (const auto& msg : spec.spec.messages) {
    std::vector<const Term*> work;
    work.push_back(&msg.payload);
    while (!work.empty()) {
      const Term* node = work.back();
      work.pop_back();
      for (const auto& child : node->children) work.push_back(&child);

      if (node->kind == TermKind::Enc) {
        bool symmetric = spec.kinds.at(node->name) == DeclKind::SymmetricKey;
        CostCategory enc = symmetric ? CostCategory::SymEnc : CostCategory::PubEnc;
        CostCategory dec = symmetric ? CostCategory::SymDec : CostCategory::PubDec;
        out.total[enc] += 1;
        out.total[dec] += 1;
        out.by_role[msg.sender][enc] += 1;
        out.by_role[msg.receiver][dec] += 1;
      } else if (node->kind == TermKind::Apply) {
        auto it = model.function_classes.find(node->name);
        if (it != model.function_classes.end()) {
          out.total[it->second] += 1;
          out.by_role[msg.sender][it->second] += 1;
        } else {
          out.total.unclassified_calls[node->name] += 2;
          out.by_role[msg.sender].unclassified_calls[node->name] += 1;
          out.by_role[msg.receiver].unclassified_calls[node->name] += 1;
        }
      }
    }
  }
  return out;
}

// Long-hand expected cost: digit-by-digit sum over the six categories.
inline double recount_cost(const OperationCounts& counts, const CostModel& model) {
  double total = 0.0;
  total += static_cast<double>(counts[CostCategory::Hash]) * model.unit_ms(CostCategory::Hash);
  total += static_cast<double>(counts[CostCategory::PointMul]) *
           model.unit_ms(CostCategory::PointMul);
  total += static_cast<double>(counts[CostCategory::PubEnc]) * model.unit_ms(CostCategory::PubEnc);
  total += static_cast<double>(counts[CostCategory::PubDec]) * model.unit_ms(CostCategory::PubDec);
  total += static_cast<double>(counts[CostCategory::SymEnc]) * model.unit_ms(CostCategory::SymEnc);
  total += static_cast<double>(counts[CostCategory::SymDec]) * model.unit_ms(CostCategory::SymDec);
  return total;
}

}  // namespace oracle
