/**************************************************************************
 * src/expr.cpp
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

#include "galtower/expr.hpp"

#include <cctype>
#include <limits>

namespace galtower {

Expr Expr::number(long long v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Number;
  n->value = v;
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::name(std::string id) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Name;
  n->text = std::move(id);
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::unary(Kind k, Expr operand) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = {std::move(operand)};
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->children = {std::move(lhs), std::move(rhs)};
  Expr e;
  e.node_ = std::move(n);
  return e;
}

Expr Expr::power(Expr base, long long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->value = exponent;
  n->children = {std::move(base)};
  Expr e;
  e.node_ = std::move(n);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->kind == b.node_->kind && a.node_->value == b.node_->value && a.node_->text == b.node_->text &&
         a.node_->children == b.node_->children;
}

namespace {

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void collect_names(const Expr& e, std::vector<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Number:
      return;
    case Expr::Kind::Name:
      for (const auto& n : out) {
        if (n == e.identifier()) return;
      }
      out.push_back(e.identifier());
      return;
    case Expr::Kind::Neg:
    case Expr::Kind::Pow:
      collect_names(e.lhs(), out);
      return;
    default:
      collect_names(e.lhs(), out);
      collect_names(e.rhs(), out);
  }
}

std::string render(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& child, bool parens) {
    std::string s = render(child);
    return parens ? "(" + s + ")" : s;
  };
  const int prec = precedence(e.kind());
  switch (e.kind()) {
    case K::Number:
      return std::to_string(e.value());
    case K::Name:
      return e.identifier();
    case K::Neg:
      return "-" + wrap(e.lhs(), precedence(e.lhs().kind()) < prec);
    case K::Pow:
      return wrap(e.lhs(), precedence(e.lhs().kind()) <= prec) + "^" + std::to_string(e.value());
    default: {
      const char* op = e.kind() == K::Add ? " + " : e.kind() == K::Sub ? " - " : e.kind() == K::Mul ? "*" : "/";
      return wrap(e.lhs(), precedence(e.lhs().kind()) < prec) + op +
             wrap(e.rhs(), precedence(e.rhs().kind()) <= prec);
    }
  }
}

class Parser {
 public:
  Parser(const std::string& text, int line, int column) : text_(text), line_(line), column_(column) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Expr::Kind::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = Expr::binary(Expr::Kind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Expr::Kind::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Expr::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(Expr::Kind::Neg, parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (accept('^')) {
      bool negative = accept('-');
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected integer exponent");
      }
      long long e = read_integer();
      return Expr::power(base, negative ? -e : e);
    }
    return base;
  }

  long long read_integer() {
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int d = text_[pos_] - '0';
      if (v > (std::numeric_limits<long long>::max() - d) / 10) fail("integer literal too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::number(read_integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Expr::name(text_.substr(start, pos_ - start));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> Expr::names() const {
  std::vector<std::string> out;
  collect_names(*this, out);
  return out;
}

std::string Expr::to_string() const { return render(*this); }

Expr parse_expression(const std::string& text, int line, int column) { return Parser(text, line, column).parse(); }

}  // namespace galtower
