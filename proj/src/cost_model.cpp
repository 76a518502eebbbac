#include "cascost/cost_model.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cascost/errors.hpp"
#include "cascost/text_util.hpp"

namespace cascost {

using nlohmann::json;

const char* category_symbol(CostCategory c) {
  switch (c) {
    case CostCategory::Hash: return "Th";
    case CostCategory::PointMul: return "Pm";
    case CostCategory::PubEnc: return "Pe";
    case CostCategory::PubDec: return "Pd";
    case CostCategory::SymEnc: return "Se";
    case CostCategory::SymDec: return "Sd";
  }
  return "?";
}

const char* category_description(CostCategory c) {
  switch (c) {
    case CostCategory::Hash: return "Hash operation";
    case CostCategory::PointMul: return "Point multiplication";
    case CostCategory::PubEnc: return "Public-key encryption";
    case CostCategory::PubDec: return "Public-key decryption";
    case CostCategory::SymEnc: return "Symmetric-key encryption";
    case CostCategory::SymDec: return "Symmetric-key decryption";
  }
  return "?";
}

std::optional<CostCategory> category_from_symbol(const std::string& symbol) {
  for (CostCategory c : kAllCategories)
    if (symbol == category_symbol(c)) return c;
  return std::nullopt;
}

namespace {

// Plain JSON number syntax; rejects the extras strtod would accept (inf,
// nan, hex, leading '+').
bool is_json_number(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t n = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++n;
    return n;
  };
  if (i < s.size() && s[i] == '-') ++i;
  if (digits() == 0) return false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    if (digits() == 0) return false;
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (digits() == 0) return false;
  }
  return i == s.size();
}

}  // namespace

DecimalMs DecimalMs::parse(const std::string& text) {
  if (!is_json_number(text))
    throw ModelValueError("'" + text + "' is not a decimal number");
  double value = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ModelValueError("'" + text + "' is not a decimal number");
  if (value < 0.0) throw ModelValueError("cost '" + text + "' is negative");
  return DecimalMs{text, value};
}

std::optional<CostCategory> CostModel::classify_function(const std::string& name) const {
  auto it = function_classes.find(name);
  if (it == function_classes.end()) return std::nullopt;
  return it->second;
}

std::string CostModel::digest() const { return fnv1a_hex(model_to_text(*this)); }

CostModel default_model() {
  CostModel m;
  m.name = "default";
  m.unit_cost_ms[category_index(CostCategory::Hash)] = {"0.0023", 0.0023};
  m.unit_cost_ms[category_index(CostCategory::PointMul)] = {"2.226", 2.226};
  m.unit_cost_ms[category_index(CostCategory::PubEnc)] = {"3.8500", 3.8500};
  m.unit_cost_ms[category_index(CostCategory::PubDec)] = {"3.8500", 3.8500};
  m.unit_cost_ms[category_index(CostCategory::SymEnc)] = {"0.0046", 0.0046};
  m.unit_cost_ms[category_index(CostCategory::SymDec)] = {"0.0046", 0.0046};
  for (CostCategory c : kAllCategories)
    m.display_symbols[category_index(c)] = category_symbol(c);
  return m;
}

namespace {

// Records the raw text of every number under "unit_cost_ms" so values
// round-trip exactly as written.
struct RawCostCapture : nlohmann::json_sax<json> {
  std::map<std::string, std::string> raw;
  int depth = 0;
  std::string last_key;
  std::string costs_key_at_depth1;
  bool in_costs = false;

  bool note(const std::string& text) {
    if (in_costs && depth == 2) raw[last_key] = text;
    return true;
  }

  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t v) override { return note(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return note(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return note(s); }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_object(std::size_t) override {
    ++depth;
    if (depth == 2 && last_key == "unit_cost_ms") in_costs = true;
    return true;
  }
  bool key(string_t& s) override {
    last_key = s;
    return true;
  }
  bool end_object() override {
    if (depth == 2) in_costs = false;
    --depth;
    return true;
  }
  bool start_array(std::size_t) override {
    ++depth;
    return true;
  }
  bool end_array() override {
    --depth;
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception&) override {
    return false;
  }
};

}  // namespace

CostModel parse_model_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelFormatError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw ModelFormatError(origin + ": model must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "unit_cost_ms" && key != "function_classes")
      throw ModelFormatError(origin + ": unknown key '" + key + "'");
    (void)value;
  }
  if (!doc.contains("name") || !doc["name"].is_string())
    throw ModelFormatError(origin + ": missing string 'name'");

  RawCostCapture capture;
  json::sax_parse(text, &capture);

  CostModel model = default_model();
  model.name = doc["name"].get<std::string>();

  if (doc.contains("unit_cost_ms")) {
    const json& costs = doc["unit_cost_ms"];
    if (!costs.is_object())
      throw ModelFormatError(origin + ": 'unit_cost_ms' must be an object");
    for (const auto& [key, value] : costs.items()) {
      auto category = category_from_symbol(key);
      if (!category)
        throw ModelValueError(origin + ": unknown cost category '" + key + "'");
      if (!value.is_number())
        throw ModelFormatError(origin + ": cost '" + key + "' must be a number");
      auto raw = capture.raw.find(key);
      std::string literal = raw != capture.raw.end() ? raw->second : value.dump();
      model.unit_cost_ms[category_index(*category)] = DecimalMs::parse(literal);
    }
  }

  if (doc.contains("function_classes")) {
    const json& classes = doc["function_classes"];
    if (!classes.is_object())
      throw ModelFormatError(origin + ": 'function_classes' must be an object");
    for (const auto& [fname, value] : classes.items()) {
      if (!value.is_string())
        throw ModelFormatError(origin + ": class of '" + fname + "' must be a string");
      std::string symbol = value.get<std::string>();
      auto category = category_from_symbol(symbol);
      if (!category || (*category != CostCategory::Hash && *category != CostCategory::PointMul))
        throw ModelValueError(origin + ": function '" + fname +
                              "' maps to '" + symbol + "'; only Th and Pm are allowed");
      model.function_classes[fname] = *category;
    }
  }

  return model;
}

CostModel load_model(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot read model file '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str(), file.string());
}

std::string model_to_text(const CostModel& model) {
  std::string out = "{\n  \"name\": " + json(model.name).dump() + ",\n  \"unit_cost_ms\": {";
  bool first = true;
  for (CostCategory c : kAllCategories) {
    out += first ? "" : ", ";
    first = false;
    out += "\"" + std::string(category_symbol(c)) + "\": " + model.unit_text(c);
  }
  out += "},\n  \"function_classes\": {";
  first = true;
  for (const auto& [fname, category] : model.function_classes) {
    out += first ? "" : ", ";
    first = false;
    out += json(fname).dump() + ": \"" + category_symbol(category) + "\"";
  }
  out += "}\n}\n";
  return out;
}

void save_model(const CostModel& model, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write model file '" + file.string() + "'");
  out << model_to_text(model);
  out.flush();
  if (!out) throw IoError("failed writing model file '" + file.string() + "'");
}

}  // namespace cascost
