#include "cascost/analyzer.hpp"

#include <set>

#include "cascost/text_util.hpp"

namespace cascost {

OperationCounts& OperationCounts::operator+=(const OperationCounts& other) {
  for (std::size_t i = 0; i < kCategoryCount; ++i)
    per_category[i] += other.per_category[i];
  for (const auto& [name, n] : other.unclassified_calls) unclassified_calls[name] += n;
  return *this;
}

bool OperationCounts::is_zero() const {
  for (auto n : per_category)
    if (n) return false;
  for (const auto& [name, n] : unclassified_calls) {
    (void)name;
    if (n) return false;
  }
  return true;
}

namespace {

struct Tally {
  std::map<std::string, OperationCounts> by_role;
  std::map<std::string, std::uint64_t> unclassified_total;

  void charge(const std::string& role, CostCategory category) {
    by_role[role][category] += 1;
  }
  void charge_unclassified(const std::string& role, const std::string& fn) {
    by_role[role].unclassified_calls[fn] += 1;
    unclassified_total[fn] += 1;
  }
};

// One payload node at a time. Encryption charges the sender's encryption and
// the receiver's decryption category; a classified application charges the
// sender; an unclassified application is tallied at both ends.
void walk(const Term& term, const Message& msg, const ResolvedSpec& spec,
          const CostModel& model, Tally& tally) {
  switch (term.kind) {
    case TermKind::Atom:
      return;
    case TermKind::Tuple:
      for (const auto& child : term.children) walk(child, msg, spec, model, tally);
      return;
    case TermKind::Enc: {
      if (spec.kind_of(term.name) == DeclKind::SymmetricKey) {
        tally.charge(msg.sender, CostCategory::SymEnc);
        tally.charge(msg.receiver, CostCategory::SymDec);
      } else {
        tally.charge(msg.sender, CostCategory::PubEnc);
        tally.charge(msg.receiver, CostCategory::PubDec);
      }
      walk(term.enc_body(), msg, spec, model, tally);
      return;
    }
    case TermKind::Apply: {
      if (auto category = model.classify_function(term.name)) {
        tally.charge(msg.sender, *category);
      } else {
        tally.charge_unclassified(msg.sender, term.name);
        tally.charge_unclassified(msg.receiver, term.name);
      }
      for (const auto& arg : term.children) walk(arg, msg, spec, model, tally);
      return;
    }
  }
}

}  // namespace

CountResult count_operations(const ResolvedSpec& spec, const CostModel& model) {
  Tally tally;
  std::set<std::string> endpoints;
  for (const auto& msg : spec.spec.messages) {
    endpoints.insert(msg.sender);
    endpoints.insert(msg.receiver);
    walk(msg.payload, msg, spec, model, tally);
  }

  CountResult result;
  // endpoint roles in declaration order
  for (const auto& decl : spec.spec.declarations) {
    if (decl.kind != DeclKind::User || !endpoints.count(decl.name)) continue;
    RoleAttribution attribution;
    attribution.role = decl.name;
    auto it = tally.by_role.find(decl.name);
    if (it != tally.by_role.end()) attribution.counts = it->second;
    result.counts += attribution.counts;
    result.per_role.push_back(std::move(attribution));
  }
  for (const auto& [fn, n] : tally.unclassified_total) {
    result.warnings.push_back(Diagnostic::plain(
        "function '" + fn + "' is not classified in model '" + model.name +
        "'; " + format_u64(n) + " endpoint call(s) counted at zero cost"));
  }
  return result;
}

std::uint64_t communication_cost(const ResolvedSpec& spec) {
  return spec.spec.messages.size();
}

double compute_cost(const OperationCounts& counts, const CostModel& model) {
  double total = 0.0;
  for (CostCategory c : kAllCategories)
    total += static_cast<double>(counts[c]) * model.unit_ms(c);
  return total;
}

AnalysisResult analyze(const ResolvedSpec& spec, const CostModel& model) {
  CountResult counted = count_operations(spec, model);

  AnalysisResult result;
  result.protocol_name = spec.spec.name;
  result.counts = counted.counts;
  result.per_role = std::move(counted.per_role);
  result.computation_ms = compute_cost(result.counts, model);
  result.communication = communication_cost(spec);
  result.model_name = model.name;
  result.model_digest = model.digest();
  for (const auto& warning : spec.warnings) result.warnings.push_back(warning.to_string());
  for (const auto& warning : counted.warnings) result.warnings.push_back(warning.to_string());
  return result;
}

}  // namespace cascost
