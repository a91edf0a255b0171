/**************************************************************************
 * src/towerfile.cpp
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

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "galtower/cli.hpp"
#include "galtower/errors.hpp"

namespace galtower {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct Token {
  std::string text;
  int column = 1;
};

/// Whitespace separated words with 1-based columns.
std::vector<Token> words(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::uint32_t parse_uint(const std::string& s, int line, int column) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a non-negative integer, got '" + s + "'", line, column);
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

class Parser {
 public:
  TowerFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto toks = words(raw);
      if (toks.empty()) continue;
      const std::string& kw = toks[0].text;
      if (kw == "field") {
        field(toks, line);
      } else if (!have_field_) {
        throw ParseError("the first directive must be 'field'", line, toks[0].column);
      } else if (kw == "vars") {
        vars(toks, line);
      } else if (kw == "gen") {
        gen(raw, toks, line);
      } else if (kw == "subfield") {
        subfield(raw, toks, line);
      } else if (kw == "designate") {
        designate(toks, line);
      } else {
        throw ParseError("unknown directive '" + kw + "'", line, toks[0].column);
      }
    }
    if (!have_field_) throw ParseError("missing 'field' directive", line + 1, 1);
    for (const auto& u : unresolved_) {
      const bool field_generator = u.name == "a" && file_.spec.base.ff.degree() > 1;
      if (names_.count(u.name) || field_generator) {
        if (u.later_allowed) continue;
        throw ForwardReference(where(u) + "'" + u.name + "' is defined after its use");
      }
      throw UnknownName(where(u) + "'" + u.name + "'");
    }
    if (file_.designated) {
      const auto& d = *file_.designated;
      bool found = false;
      for (const auto& s : file_.subfields) found = found || s.name == d;
      if (!found) throw UnknownName("designated subfield '" + d + "' is not declared");
    }
    return std::move(file_);
  }

 private:
  void field(const std::vector<Token>& toks, int line) {
    if (have_field_) throw ParseError("duplicate 'field' directive", line, toks[0].column);
    have_field_ = true;
    bool have_p = false;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const auto eq = toks[i].text.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value", line, toks[i].column);
      const std::string key = toks[i].text.substr(0, eq);
      const std::string value = toks[i].text.substr(eq + 1);
      const int col = toks[i].column + static_cast<int>(eq) + 1;
      if (key == "p") {
        file_.spec.base.ff.p = parse_uint(value, line, col);
        have_p = true;
      } else if (key == "modulus") {
        std::size_t start = 0;
        for (;;) {
          const auto comma = value.find(',', start);
          const std::string part = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
          file_.spec.base.ff.modulus.push_back(parse_uint(part, line, col + static_cast<int>(start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        throw ParseError("unknown field key '" + key + "'", line, toks[i].column);
      }
    }
    if (!have_p) throw ParseError("field needs p=<prime>", line, toks[0].column);
  }

  void declare(const std::string& name, int line, int column) {
    if (!is_identifier(name)) throw ParseError("invalid name '" + name + "'", line, column);
    if (name == "a" && file_.spec.base.ff.degree() > 1) {
      throw ParseError("'a' is reserved for the finite field generator", line, column);
    }
    if (!names_.insert(name).second) throw ParseError("name '" + name + "' declared twice", line, column);
  }

  void vars(const std::vector<Token>& toks, int line) {
    if (!file_.spec.generators.empty()) throw ParseError("'vars' must precede generators", line, toks[0].column);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      declare(toks[i].text, line, toks[i].column);
      file_.spec.base.variables.push_back(toks[i].text);
    }
  }

  struct Unresolved {
    std::string name;
    int line;
    int column;
    bool later_allowed;
  };

  static std::string where(const Unresolved& u) {
    return "line " + std::to_string(u.line) + ", column " + std::to_string(u.column) + ": ";
  }

  /// Names not declared yet are resolved once the whole file is read;
  /// generator values may only use earlier names, subfields any name.
  void check_names(const Expr& e, int line, int column, bool later_allowed) {
    for (const auto& n : e.names()) {
      if (names_.count(n) || (n == "a" && file_.spec.base.ff.degree() > 1)) continue;
      unresolved_.push_back({n, line, column, later_allowed});
    }
  }

  void gen(const std::string& raw, const std::vector<Token>& toks, int line) {
    // gen <name>^<m> = <expr>
    const auto eq = raw.find('=');
    if (toks.size() < 2 || eq == std::string::npos) throw ParseError("expected 'gen name^m = value'", line, toks[0].column);
    const std::string head = raw.substr(toks[1].column - 1, eq - (toks[1].column - 1));
    const auto caret = head.find('^');
    if (caret == std::string::npos) throw ParseError("expected 'name^m' before '='", line, toks[1].column);
    std::string name = head.substr(0, caret);
    std::string power = head.substr(caret + 1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!power.empty() && std::isspace(static_cast<unsigned char>(power.back()))) power.pop_back();
    while (!power.empty() && std::isspace(static_cast<unsigned char>(power.front()))) power.erase(0, 1);
    GeneratorSpec g;
    g.name = name;
    g.power = parse_uint(power, line, toks[1].column + static_cast<int>(caret) + 1);
    const int value_col = static_cast<int>(eq) + 2;
    g.value = parse_expression(raw.substr(eq + 1), line, value_col);
    check_names(g.value, line, value_col, false);
    declare(name, line, toks[1].column);
    file_.spec.generators.push_back(std::move(g));
  }

  void subfield(const std::string& raw, const std::vector<Token>& toks, int line) {
    const auto eq = raw.find('=');
    if (toks.size() < 2 || eq == std::string::npos) throw ParseError("expected 'subfield name = exprs'", line, toks[0].column);
    std::string name = raw.substr(toks[1].column - 1, eq - (toks[1].column - 1));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (!is_identifier(name)) throw ParseError("invalid subfield name '" + name + "'", line, toks[1].column);
    for (const auto& s : file_.subfields) {
      if (s.name == name) throw ParseError("subfield '" + name + "' declared twice", line, toks[1].column);
    }
    SubfieldEntry entry{name, {}};
    std::size_t start = eq + 1;
    for (;;) {
      const auto comma = raw.find(',', start);
      const std::string part = raw.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const int col = static_cast<int>(start) + 1;
      if (part.find_first_not_of(" \t") == std::string::npos) throw ParseError("empty generator expression", line, col);
      entry.generators.push_back(parse_expression(part, line, col));
      check_names(entry.generators.back(), line, col, true);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    file_.subfields.push_back(std::move(entry));
  }

  void designate(const std::vector<Token>& toks, int line) {
    if (toks.size() != 4 || toks[1].text != "F" || toks[2].text != "=") {
      throw ParseError("expected 'designate F = <subfield>'", line, toks[0].column);
    }
    if (file_.designated) throw ParseError("duplicate 'designate' directive", line, toks[0].column);
    file_.designated = toks[3].text;
  }

  TowerFile file_;
  bool have_field_ = false;
  std::set<std::string> names_;
  std::vector<Unresolved> unresolved_;
};

}  // namespace

TowerFile parse_tower_text(const std::string& text) { return Parser().run(text); }

TowerFile parse_tower_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tower_text(buf.str());
}

std::string serialize_tower_file(const TowerFile& f) {
  std::string out = "field p=" + std::to_string(f.spec.base.ff.p);
  if (!f.spec.base.ff.modulus.empty()) {
    out += " modulus=";
    for (std::size_t i = 0; i < f.spec.base.ff.modulus.size(); ++i) {
      out += (i ? "," : "") + std::to_string(f.spec.base.ff.modulus[i]);
    }
  }
  out += "\n";
  if (!f.spec.base.variables.empty()) {
    out += "vars";
    for (const auto& v : f.spec.base.variables) out += " " + v;
    out += "\n";
  }
  for (const auto& g : f.spec.generators) {
    out += "gen " + g.name + "^" + std::to_string(g.power) + " = " + g.value.to_string() + "\n";
  }
  for (const auto& s : f.subfields) {
    out += "subfield " + s.name + " =";
    for (std::size_t i = 0; i < s.generators.size(); ++i) out += (i ? ", " : " ") + s.generators[i].to_string();
    out += "\n";
  }
  if (f.designated) out += "designate F = " + *f.designated + "\n";
  return out;
}

NamedSubfield resolve_subfield(const FieldTower& t, const TowerFile& f, const std::string& name_or_exprs) {
  for (const auto& s : f.subfields) {
    if (s.name != name_or_exprs) continue;
    std::vector<TowerElem> gens;
    for (const auto& e : s.generators) gens.push_back(t.evaluate(e));
    return {s.name, subfield_generate(t, gens)};
  }
  std::vector<TowerElem> gens;
  std::size_t start = 0;
  for (;;) {
    const auto comma = name_or_exprs.find(',', start);
    gens.push_back(t.parse(name_or_exprs.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {name_or_exprs, subfield_generate(t, gens)};
}

std::vector<NamedSubfield> file_subfields(const FieldTower& t, const TowerFile& f) {
  std::vector<NamedSubfield> out;
  for (const auto& s : f.subfields) out.push_back(resolve_subfield(t, f, s.name));
  return out;
}

}  // namespace galtower
