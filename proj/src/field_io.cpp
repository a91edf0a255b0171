/**************************************************************************
 * src/field_io.cpp
 *
 * Copyright 2026 The galtower Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "galtower/field_io.hpp"

namespace galtower {

FieldValue evaluate_in_base(const BaseField& k, const Expr& e) {
  return evaluate(e, k, [&](const std::string& name) {
    const auto& vars = k.desc().variables;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == name) return k.variable(i);
    }
    if (name == "a" && k.finite_field().degree() > 1) return k.ff_generator();
    throw UnknownName("'" + name + "' is not a variable of the base field");
  });
}

FieldValue parse_field_value(const BaseField& k, const std::string& text) {
  return evaluate_in_base(k, parse_expression(text));
}

}  // namespace galtower
