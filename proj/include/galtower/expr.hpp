/**************************************************************************
 * include/galtower/expr.hpp
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

// Arithmetic expressions over named field elements: integers, names,
// + - * / ^ (integer exponents) and parentheses.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "galtower/errors.hpp"

namespace galtower {

class Expr {
 public:
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Div, Pow };

  Expr() = default;

  static Expr number(long long v);
  static Expr name(std::string n);
  static Expr unary(Kind k, Expr operand);
  static Expr binary(Kind k, Expr lhs, Expr rhs);
  static Expr power(Expr base, long long exponent);

  Kind kind() const { return node_->kind; }
  long long value() const { return node_->value; }  // Number literal or Pow exponent
  const std::string& identifier() const { return node_->text; }
  const Expr& lhs() const { return node_->children[0]; }
  const Expr& rhs() const { return node_->children[1]; }
  bool empty() const { return node_ == nullptr; }

  /// Every Name occurring in the expression, in first-occurrence order.
  std::vector<std::string> names() const;
  /// Canonical infix form; parse(to_string()) reproduces the same tree.
  std::string to_string() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node {
    Kind kind = Kind::Number;
    long long value = 0;
    std::string text;
    std::vector<Expr> children;
  };
  std::shared_ptr<const Node> node_;
};

/// Parse one expression. `line` and `column` locate the text in its file
/// for error messages.
Expr parse_expression(const std::string& text, int line = 1, int column = 1);

/// Evaluate with a field context providing from_int/add/sub/mul/div/neg/pow.
template <class Field, class Lookup>
typename Field::Elem evaluate(const Expr& e, const Field& field, const Lookup& lookup) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Number:
      return field.from_int(e.value());
    case K::Name:
      return lookup(e.identifier());
    case K::Neg:
      return field.neg(evaluate(e.lhs(), field, lookup));
    case K::Add:
      return field.add(evaluate(e.lhs(), field, lookup), evaluate(e.rhs(), field, lookup));
    case K::Sub:
      return field.sub(evaluate(e.lhs(), field, lookup), evaluate(e.rhs(), field, lookup));
    case K::Mul:
      return field.mul(evaluate(e.lhs(), field, lookup), evaluate(e.rhs(), field, lookup));
    case K::Div:
      return field.div(evaluate(e.lhs(), field, lookup), evaluate(e.rhs(), field, lookup));
    case K::Pow:
      return field.pow(evaluate(e.lhs(), field, lookup), e.value());
  }
  throw Error("unreachable expression kind");
}

}  // namespace galtower
