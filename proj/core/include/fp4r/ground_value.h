// Copyright 2026 The fp4r Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FP4R_GROUND_VALUE_H_
#define FP4R_GROUND_VALUE_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace fp4r {

struct Type;
using TypePtr = std::shared_ptr<const Type>;

// A value that contains no lambda or type abstraction at any depth. Ground
// values are the payloads of singleton types and the only values exchanged
// with P4Runtime servers.
class GroundValue {
 public:
  struct Unit {};
  struct Int {
    std::int64_t value;
  };
  struct Bool {
    bool value;
  };
  struct Str {
    std::string value;
  };
  struct Bytes {
    std::vector<std::uint8_t> octets;
  };
  // Server address a_{Tm,Ta,Tp}.
  struct Address {
    std::string name;
    TypePtr matches;
    TypePtr actions;
    TypePtr params;
  };
  // Client-server channel s_{Tm,Ta,Tp}.
  struct Channel {
    std::string id;
    TypePtr matches;
    TypePtr actions;
    TypePtr params;
  };
  // Proper list; the empty list is nil.
  struct List {
    std::vector<GroundValue> items;
  };
  struct Record {
    std::vector<std::pair<std::string, GroundValue>> fields;
  };

  using Node =
      std::variant<Unit, Int, Bool, Str, Bytes, Address, Channel, List, Record>;

  GroundValue() : node_(Unit{}) {}
  explicit GroundValue(Node node) : node_(std::move(node)) {}

  static GroundValue unit() { return GroundValue(Unit{}); }
  static GroundValue integer(std::int64_t v) { return GroundValue(Int{v}); }
  static GroundValue boolean(bool v) { return GroundValue(Bool{v}); }
  static GroundValue string(std::string v) {
    return GroundValue(Str{std::move(v)});
  }
  static GroundValue bytes(std::vector<std::uint8_t> octets) {
    return GroundValue(Bytes{std::move(octets)});
  }
  static GroundValue nil() { return GroundValue(List{}); }
  static GroundValue list(std::vector<GroundValue> items) {
    return GroundValue(List{std::move(items)});
  }
  static GroundValue record(
      std::vector<std::pair<std::string, GroundValue>> fields) {
    return GroundValue(Record{std::move(fields)});
  }
  static GroundValue address(std::string name, TypePtr tm, TypePtr ta,
                             TypePtr tp) {
    return GroundValue(
        Address{std::move(name), std::move(tm), std::move(ta), std::move(tp)});
  }
  static GroundValue channel(std::string id, TypePtr tm, TypePtr ta,
                             TypePtr tp) {
    return GroundValue(
        Channel{std::move(id), std::move(tm), std::move(ta), std::move(tp)});
  }

  const Node& node() const { return node_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(node_);
  }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

  bool is_string(std::string_view s) const {
    const auto* str = get_if<Str>();
    return str != nullptr && str->value == s;
  }

  // Field lookup on records; nullptr when absent or not a record.
  const GroundValue* field(std::string_view label) const;

 private:
  Node node_;
};

// Structural equality. Record fields are compared by label, independent of
// order; address and channel type annotations are compared up to
// alpha-equivalence.
bool operator==(const GroundValue& a, const GroundValue& b);
inline bool operator!=(const GroundValue& a, const GroundValue& b) {
  return !(a == b);
}

inline const GroundValue kWildcard = GroundValue::string("*");

}  // namespace fp4r

#endif  // FP4R_GROUND_VALUE_H_
