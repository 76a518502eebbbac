#include <doctest.h>

#include <filesystem>

#include "cascost/cost_model.hpp"
#include "cascost/errors.hpp"
#include "support/helpers.hpp"

using namespace cascost;

TEST_CASE("default unit costs are exact, digit for digit") {
  CostModel m = default_model();
  CHECK(m.unit_text(CostCategory::Hash) == "0.0023");
  CHECK(m.unit_text(CostCategory::PointMul) == "2.226");
  CHECK(m.unit_text(CostCategory::PubEnc) == "3.8500");
  CHECK(m.unit_text(CostCategory::PubDec) == "3.8500");
  CHECK(m.unit_text(CostCategory::SymEnc) == "0.0046");
  CHECK(m.unit_text(CostCategory::SymDec) == "0.0046");

  CHECK(m.unit_ms(CostCategory::PubEnc) == doctest::Approx(3.85).epsilon(1e-12));
  CHECK(m.unit_ms(CostCategory::Hash) == doctest::Approx(0.0023).epsilon(1e-12));
  CHECK(m.function_classes.empty());
  CHECK(m.display_symbols[category_index(CostCategory::Hash)] == "Th");
  CHECK(m.display_symbols[category_index(CostCategory::SymDec)] == "Sd");
}

TEST_CASE("classification is total") {
  CostModel m = default_model();
  CHECK_FALSE(m.classify_function("Dec").has_value());
  m.function_classes["h"] = CostCategory::Hash;
  m.function_classes["mul"] = CostCategory::PointMul;
  CHECK(m.classify_function("h") == CostCategory::Hash);
  CHECK(m.classify_function("mul") == CostCategory::PointMul);
  CHECK_FALSE(m.classify_function("H").has_value());  // case-sensitive
}

TEST_CASE("partial model files merge over the defaults") {
  CostModel m = parse_model_text(R"({"name": "tweak", "unit_cost_ms": {"Se": 0.01}})", "t");
  CHECK(m.name == "tweak");
  CHECK(m.unit_ms(CostCategory::SymEnc) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(m.unit_text(CostCategory::SymEnc) == "0.01");
  CHECK(m.unit_text(CostCategory::SymDec) == "0.0046");
  CHECK(m.unit_text(CostCategory::PubEnc) == "3.8500");
}

TEST_CASE("function classes load from the file") {
  CostModel m = parse_model_text(
      R"({"name": "t", "function_classes": {"H1": "Th", "ecmul": "Pm"}})", "t");
  CHECK(m.classify_function("H1") == CostCategory::Hash);
  CHECK(m.classify_function("ecmul") == CostCategory::PointMul);
  CHECK_FALSE(m.classify_function("other").has_value());
}

TEST_CASE("bad model files are rejected") {
  CHECK_THROWS_AS(parse_model_text(R"({"name": "x", "unit_cost_ms": {"Se": -1}})", "t"),
                  ModelValueError);
  CHECK_THROWS_AS(parse_model_text(R"({"name": "x", "unit_cost_ms": {"Zz": 1}})", "t"),
                  ModelValueError);
  CHECK_THROWS_AS(parse_model_text(R"({"name": "x", "function_classes": {"f": "Se"}})", "t"),
                  ModelValueError);
  CHECK_THROWS_AS(parse_model_text(R"({"name": "x", "surprise": 1})", "t"),
                  ModelFormatError);
  CHECK_THROWS_AS(parse_model_text(R"({"unit_cost_ms": {}})", "t"), ModelFormatError);
  CHECK_THROWS_AS(parse_model_text(R"({"name": "x", "unit_cost_ms": {"Se": "cheap"}})", "t"),
                  ModelFormatError);
  CHECK_THROWS_AS(parse_model_text("not json", "t"), ModelFormatError);
}

TEST_CASE("save then load reproduces the model, decimal text included") {
  helpers::TempDir dir;
  auto file = dir.path() / "model.json";

  CostModel original = default_model();
  original.name = "mine";
  original.function_classes["h"] = CostCategory::Hash;
  original.function_classes["pm"] = CostCategory::PointMul;

  save_model(original, file);
  CostModel loaded = load_model(file);
  CHECK(loaded == original);
  CHECK(loaded.unit_text(CostCategory::PubEnc) == "3.8500");  // trailing zeros kept
  CHECK(loaded.digest() == original.digest());
}

TEST_CASE("digest tracks content") {
  CostModel a = default_model();
  CostModel b = default_model();
  CHECK(a.digest() == b.digest());
  b.function_classes["h"] = CostCategory::Hash;
  CHECK(a.digest() != b.digest());
  CostModel c = default_model();
  c.unit_cost_ms[category_index(CostCategory::SymEnc)] = DecimalMs::parse("0.0047");
  CHECK(a.digest() != c.digest());
}

TEST_CASE("saving into a missing directory fails with IoError") {
  CHECK_THROWS_AS(save_model(default_model(), "/nonexistent-dir-xyz/model.json"), IoError);
  CHECK_THROWS_AS(load_model("/nonexistent-dir-xyz/model.json"), IoError);
}

TEST_CASE("the bundled corpus model is the default pricing plus classes") {
  CostModel corpus = load_model(helpers::corpus_dir() / "corpus.model.json");
  CostModel defaults = default_model();
  for (CostCategory c : kAllCategories) {
    CHECK(corpus.unit_text(c) == defaults.unit_text(c));
    CHECK(corpus.unit_ms(c) == defaults.unit_ms(c));
  }
  CHECK(corpus.classify_function("h") == CostCategory::Hash);
  CHECK(corpus.classify_function("pm") == CostCategory::PointMul);
}
