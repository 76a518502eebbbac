#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace cascost {

enum class CostCategory {
  Hash,      // Th
  PointMul,  // Pm
  PubEnc,    // Pe
  PubDec,    // Pd
  SymEnc,    // Se
  SymDec,    // Sd
};

inline constexpr std::size_t kCategoryCount = 6;
inline constexpr std::array<CostCategory, kCategoryCount> kAllCategories = {
    CostCategory::Hash,   CostCategory::PointMul, CostCategory::PubEnc,
    CostCategory::PubDec, CostCategory::SymEnc,   CostCategory::SymDec,
};

constexpr std::size_t category_index(CostCategory c) {
  return static_cast<std::size_t>(c);
}

// Canonical short symbol: Th, Pm, Pe, Pd, Se, Sd.
const char* category_symbol(CostCategory c);
const char* category_description(CostCategory c);
std::optional<CostCategory> category_from_symbol(const std::string& symbol);

// A unit cost in milliseconds. The decimal text is the source of truth so
// values round-trip through model files verbatim; the double mirrors it for
// arithmetic.
struct DecimalMs {
  std::string text;
  double value = 0.0;

  static DecimalMs parse(const std::string& text);  // throws ModelValueError

  friend bool operator==(const DecimalMs& a, const DecimalMs& b) {
    return a.text == b.text && a.value == b.value;
  }
};

class CostModel {
 public:
  std::string name;
  std::array<DecimalMs, kCategoryCount> unit_cost_ms;
  // Only Hash and PointMul may be assigned to function names; encryption
  // categories are derived from key kinds, never from names.
  std::map<std::string, CostCategory> function_classes;
  std::array<std::string, kCategoryCount> display_symbols;

  double unit_ms(CostCategory c) const { return unit_cost_ms[category_index(c)].value; }
  const std::string& unit_text(CostCategory c) const {
    return unit_cost_ms[category_index(c)].text;
  }

  // Mapped category for a function name, or nullopt when unclassified.
  // Total: never throws.
  std::optional<CostCategory> classify_function(const std::string& name) const;

  // Stable fingerprint of the model contents, used to detect comparisons
  // across differently priced runs.
  std::string digest() const;

  friend bool operator==(const CostModel& a, const CostModel& b) {
    return a.name == b.name && a.unit_cost_ms == b.unit_cost_ms &&
           a.function_classes == b.function_classes &&
           a.display_symbols == b.display_symbols;
  }
};

// Unit costs in ms: Th 0.0023, Pm 2.226, Pe 3.8500, Pd 3.8500, Se 0.0046,
// Sd 0.0046. No functions are pre-classified.
CostModel default_model();

// Reads a JSON model file. Absent categories keep their defaults; unknown
// keys are rejected. Throws ModelFormatError / ModelValueError / IoError.
CostModel load_model(const std::filesystem::path& file);
CostModel parse_model_text(const std::string& text, const std::string& origin);

// Writes the model so that load_model reproduces it exactly, decimal texts
// included. Throws IoError.
void save_model(const CostModel& model, const std::filesystem::path& file);
std::string model_to_text(const CostModel& model);

}  // namespace cascost
