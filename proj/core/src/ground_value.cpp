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

#include "fp4r/ground_value.h"

#include <algorithm>

#include "fp4r/type.h"

namespace fp4r {

const GroundValue* GroundValue::field(std::string_view label) const {
  const auto* rec = get_if<Record>();
  if (rec == nullptr) return nullptr;
  for (const auto& [name, value] : rec->fields) {
    if (name == label) return &value;
  }
  return nullptr;
}

namespace {

bool same_config_types(const TypePtr& a1, const TypePtr& a2,
                       const TypePtr& b1, const TypePtr& b2,
                       const TypePtr& c1, const TypePtr& c2) {
  return alpha_equal(a1, a2) && alpha_equal(b1, b2) && alpha_equal(c1, c2);
}

}  // namespace

bool operator==(const GroundValue& a, const GroundValue& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = *b.get_if<T>();
        if constexpr (std::is_same_v<T, GroundValue::Unit>) {
          return true;
        } else if constexpr (std::is_same_v<T, GroundValue::Int> ||
                             std::is_same_v<T, GroundValue::Bool> ||
                             std::is_same_v<T, GroundValue::Str>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, GroundValue::Bytes>) {
          return x.octets == y.octets;
        } else if constexpr (std::is_same_v<T, GroundValue::Address>) {
          return x.name == y.name &&
                 same_config_types(x.matches, y.matches, x.actions, y.actions,
                                   x.params, y.params);
        } else if constexpr (std::is_same_v<T, GroundValue::Channel>) {
          return x.id == y.id &&
                 same_config_types(x.matches, y.matches, x.actions, y.actions,
                                   x.params, y.params);
        } else if constexpr (std::is_same_v<T, GroundValue::List>) {
          return x.items == y.items;
        } else {
          if (x.fields.size() != y.fields.size()) return false;
          return std::all_of(x.fields.begin(), x.fields.end(),
                             [&](const auto& f) {
                               const GroundValue* other = b.field(f.first);
                               return other != nullptr && *other == f.second;
                             });
        }
      },
      a.node());
}

}  // namespace fp4r
