/**************************************************************************
 * src/cache.cpp
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

#include <fstream>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "galtower/cli.hpp"
#include "galtower/errors.hpp"
#include "galtower/field_io.hpp"

namespace galtower {

namespace fs = std::filesystem;

namespace {

std::string header(const std::string& version, const std::string& kind) {
  return "galtower-cache " + version + " " + kind + "\n";
}

void append_subspace(const BaseField& k, const Subspace& s, std::string& out) {
  out += "subspace " + std::to_string(s.ambient_dim()) + " " + std::to_string(s.dim()) + "\n";
  for (const auto& row : s.basis()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_zero()) out += std::to_string(i) + " " + k.to_string(row[i]) + "\n";
    }
    out += "end\n";
  }
}

class Reader {
 public:
  explicit Reader(const std::string& text) : in_(text) {}

  std::string line() {
    std::string l;
    if (!std::getline(in_, l)) throw CorruptCache("unexpected end of cache entry");
    return l;
  }

  std::size_t number(std::istringstream& ls) {
    long long v = -1;
    if (!(ls >> v) || v < 0) throw CorruptCache("expected a count");
    return static_cast<std::size_t>(v);
  }

  Subspace subspace(const BaseField& k, std::size_t ambient) {
    std::istringstream ls(line());
    std::string word;
    ls >> word;
    if (word != "subspace") throw CorruptCache("expected a subspace block");
    if (number(ls) != ambient) throw CorruptCache("subspace has the wrong ambient dimension");
    const std::size_t dim = number(ls);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dim; ++r) {
      Vec row(ambient);
      for (std::string l = line(); l != "end"; l = line()) {
        const auto space = l.find(' ');
        if (space == std::string::npos) throw CorruptCache("malformed entry line");
        std::size_t idx = 0;
        try {
          idx = std::stoul(l.substr(0, space));
          if (idx >= ambient) throw CorruptCache("entry index out of range");
          row[idx] = parse_field_value(k, l.substr(space + 1));
        } catch (const CorruptCache&) {
          throw;
        } catch (const std::exception& e) {
          throw CorruptCache(std::string("bad element: ") + e.what());
        }
      }
      rows.push_back(std::move(row));
    }
    Subspace s = Subspace::span(k, ambient, rows);
    if (s.dim() != dim) throw CorruptCache("stored basis is dependent");
    return s;
  }

 private:
  std::istringstream in_;
};

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string multiplication_table_text(const FieldTower& t) {
  std::string out = canonical_spec_text(t.spec()) + "\n";
  out += "degree " + std::to_string(t.degree()) + "\n";
  for (std::size_t i = 0; i < t.degree(); ++i) {
    for (std::size_t j = i; j < t.degree(); ++j) {
      out += "e" + std::to_string(i) + "*e" + std::to_string(j) + " = " +
             t.to_string(t.mul(t.basis_elem(i), t.basis_elem(j))) + "\n";
    }
  }
  return out;
}

std::string diffops_text(const FieldTower& t, const DiffOpAlgebra& d) {
  const BaseField& k = t.base();
  std::string out = "tower " + t.hash() + "\n";
  out += "relative " + subfield_hash(t, d.relative_to) + "\n";
  out += "layers " + std::to_string(d.layers.size()) + "\n";
  for (const auto& l : d.layers) append_subspace(k, l, out);
  out += "dplus\n";
  append_subspace(k, d.dplus, out);
  return out;
}

DiffOpAlgebra parse_diffops_text(const FieldTower& t, const SubfieldHandle& m, const std::string& text) {
  const BaseField& k = t.base();
  const std::size_t nn = t.degree() * t.degree();
  Reader r(text);
  if (r.line() != "tower " + t.hash()) throw CorruptCache("tower hash mismatch");
  if (r.line() != "relative " + subfield_hash(t, m)) throw CorruptCache("subfield hash mismatch");
  std::istringstream ls(r.line());
  std::string word;
  ls >> word;
  if (word != "layers") throw CorruptCache("expected layer count");
  const std::size_t count = r.number(ls);
  if (count == 0 || count > t.degree() + 1) throw CorruptCache("implausible layer count");
  DiffOpAlgebra d;
  d.relative_to = m;
  for (std::size_t i = 0; i < count; ++i) d.layers.push_back(r.subspace(k, nn));
  if (r.line() != "dplus") throw CorruptCache("expected the augmentation block");
  d.dplus = r.subspace(k, nn);
  d.total = d.layers.back();
  if (d.layers.front() != endo_algebra(t).mult_space) throw CorruptCache("first layer is not L");
  if (!subspace_contains(k, d.total, d.dplus)) throw CorruptCache("augmentation part outside the total algebra");
  return d;
}

FileCache::FileCache(fs::path dir, std::ostream& warnings, std::string version)
    : dir_(std::move(dir)), warnings_(warnings), version_(std::move(version)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path probe = dir_ / (".probe-" + std::to_string(::getpid()));
  std::ofstream test(probe);
  if (ec || !test) {
    writable_ = false;
    warnings_ << "warning: cache directory " << dir_.string() << " is not writable; working in memory\n";
  } else {
    test.close();
    fs::remove(probe, ec);
  }
}

fs::path FileCache::entry_dir(const FieldTower& t) const { return dir_ / t.hash(); }

void FileCache::write_atomic(const fs::path& path, const std::string& text) {
  if (!writable_) return;
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  const fs::path tmp = path.string() + ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      warnings_ << "warning: cannot write cache entry " << path.string() << "\n";
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    warnings_ << "warning: cannot install cache entry " << path.string() << "\n";
    fs::remove(tmp, ec);
  }
}

bool FileCache::sync_multiplication_table(const FieldTower& t) {
  const fs::path path = entry_dir(t) / "multtable.txt";
  const std::string expected = header(version_, "multtable") + multiplication_table_text(t);
  if (const auto stored = read_file(path)) {
    if (*stored == expected) {
      ++hits_;
      return true;
    }
    if (stored->rfind(header(version_, "multtable"), 0) == 0) {
      warnings_ << "warning: " << CorruptCache("multiplication table differs from the tower").what()
                << "; rewriting\n";
    }
  }
  write_atomic(path, expected);
  return false;
}

std::optional<DiffOpAlgebra> FileCache::load(const FieldTower& t, const SubfieldHandle& m) {
  const fs::path path = entry_dir(t) / ("diffops-" + subfield_hash(t, m) + ".txt");
  const auto stored = read_file(path);
  if (!stored) return std::nullopt;
  const std::string head = header(version_, "diffops");
  if (stored->rfind(head, 0) != 0) return std::nullopt;  // other version: recompute
  try {
    DiffOpAlgebra d = parse_diffops_text(t, m, stored->substr(head.size()));
    ++hits_;
    return d;
  } catch (const CorruptCache& e) {
    warnings_ << "warning: " << e.what() << " in " << path.string() << "; recomputing\n";
    return std::nullopt;
  }
}

void FileCache::save(const FieldTower& t, const SubfieldHandle& m, const DiffOpAlgebra& d) {
  const fs::path path = entry_dir(t) / ("diffops-" + subfield_hash(t, m) + ".txt");
  write_atomic(path, header(version_, "diffops") + diffops_text(t, d));
}

}  // namespace galtower
