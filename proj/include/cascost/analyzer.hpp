#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cascost/cost_model.hpp"
#include "cascost/resolver.hpp"

namespace cascost {

// Occurrence counts per cost category plus calls to functions the model does
// not price. Addition is componentwise.
struct OperationCounts {
  std::array<std::uint64_t, kCategoryCount> per_category{};
  std::map<std::string, std::uint64_t> unclassified_calls;

  std::uint64_t& operator[](CostCategory c) { return per_category[category_index(c)]; }
  std::uint64_t operator[](CostCategory c) const { return per_category[category_index(c)]; }

  OperationCounts& operator+=(const OperationCounts& other);
  friend OperationCounts operator+(OperationCounts a, const OperationCounts& b) {
    a += b;
    return a;
  }
  friend bool operator==(const OperationCounts&, const OperationCounts&) = default;

  bool is_zero() const;
};

struct RoleAttribution {
  std::string role;
  OperationCounts counts;
};

struct AnalysisResult {
  std::string protocol_name;
  OperationCounts counts;
  std::vector<RoleAttribution> per_role;
  double computation_ms = 0.0;
  std::uint64_t communication = 0;
  std::string model_name;
  std::string model_digest;
  std::vector<std::string> warnings;
};

struct CountResult {
  OperationCounts counts;
  std::vector<RoleAttribution> per_role;  // endpoint roles, declaration order
  std::vector<Diagnostic> warnings;
};

// Walks every message payload. Each encryption occurrence charges the sender
// one encryption and the receiver one decryption, symmetric or public-key
// according to the key's declared kind. An application classified as Hash or
// PointMul charges the sender once. An unclassified application is tallied
// under its function name at both endpoints and warned about. Nested
// occurrences all count; repeats across messages count per occurrence.
CountResult count_operations(const ResolvedSpec& spec, const CostModel& model);

// Number of messages in one protocol run. A unitless count, never priced.
std::uint64_t communication_cost(const ResolvedSpec& spec);

// Sum over categories of count x unit cost. Unclassified calls contribute 0.
double compute_cost(const OperationCounts& counts, const CostModel& model);

// count_operations + compute_cost + communication_cost in one result. The
// result's warnings are the resolver's followed by the counting pass's.
AnalysisResult analyze(const ResolvedSpec& spec, const CostModel& model);

}  // namespace cascost
