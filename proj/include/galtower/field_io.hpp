/**************************************************************************
 * include/galtower/field_io.hpp
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

#pragma once

#include <string>

#include "galtower/base_field.hpp"
#include "galtower/expr.hpp"

namespace galtower {

/// Evaluates an expression in K; names are the base variables and, when
/// q is not prime, the F_q generator `a`.
FieldValue evaluate_in_base(const BaseField& k, const Expr& e);

/// Inverse of BaseField::to_string.
FieldValue parse_field_value(const BaseField& k, const std::string& text);

}  // namespace galtower
