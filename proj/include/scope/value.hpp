#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "scope/errors.hpp"

namespace scope {

using json = nlohmann::json;

using Scalar = std::variant<std::int64_t, bool, std::string>;
using TextPair = std::pair<std::string, std::string>;

/// Map entries are restricted to: integer | list of integers | pair of text.
using MapEntry = std::variant<std::int64_t, std::vector<std::int64_t>, TextPair>;

enum class ValueShape {
  Int,
  Bool,
  Text,
  IntList,
  BoolList,
  TextList,
  EmptyList,
  PairList,
  Map,
};

std::string_view shape_name(ValueShape s);

/// A value in a structured representation. The value space is deliberately
/// small: scalars, homogeneous scalar lists, lists of text pairs, and flat
/// maps from text to (integer | integer list | text pair). Everything is
/// finitely enumerable by construction.
class Value {
public:
  using ScalarList = std::vector<Scalar>;
  using PairList = std::vector<TextPair>;
  using Map = std::map<std::string, MapEntry>;

  Value();  // empty list
  explicit Value(std::int64_t v);
  explicit Value(bool v);
  explicit Value(std::string v);
  explicit Value(const char* v);
  explicit Value(ScalarList v);
  explicit Value(PairList v);
  explicit Value(Map v);

  /// Throws NonEnumerableValue for anything outside the value space
  /// (floats, nulls, nesting beyond one map level, heterogeneous lists).
  static Value from_json(const json& j);
  json to_json() const;

  ValueShape shape() const;

  bool is_scalar() const;
  bool is_map() const { return std::holds_alternative<Map>(v_); }

  const Scalar& as_scalar() const;
  std::int64_t as_int() const;
  const std::string& as_text() const;
  bool as_bool() const;
  const ScalarList& as_scalar_list() const;
  const PairList& as_pair_list() const;
  const Map& as_map() const;

  std::vector<std::string> as_text_list() const;       // TextList or EmptyList
  std::vector<std::int64_t> as_int_list() const;       // IntList or EmptyList

  bool map_entries_all_int() const;
  bool map_entries_all_int_list() const;

  bool operator==(const Value& other) const;

private:
  std::variant<Scalar, ScalarList, PairList, Map> v_;
};

/// JSON parsing that rejects duplicate object keys instead of last-wins.
json parse_json_strict(std::string_view text);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

/// Strips trailing whitespace on every line and normalizes the result to end
/// with exactly one newline. Used both for exact-match scoring and for the
/// deliver-function criterion.
std::string normalize_text_block(std::string_view text);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

}  // namespace scope
