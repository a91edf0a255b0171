/**************************************************************************
 * include/galtower/cli.hpp
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

// Tower files, structured reports, the on-disk cache and the command-line
// entry point.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "galtower/correspondence.hpp"
#include "galtower/tower.hpp"

namespace galtower {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "galtower-report/1";

struct SubfieldEntry {
  std::string name;
  std::vector<Expr> generators;

  bool operator==(const SubfieldEntry&) const = default;
};

/// Parsed tower file:
///   field p=3 [modulus=c0,c1,...]
///   vars x y
///   gen u^3 = y
///   subfield F = u, v
///   designate F = F
/// `#` starts a comment.
struct TowerFile {
  TowerSpec spec;
  std::vector<SubfieldEntry> subfields;
  std::optional<std::string> designated;

  bool operator==(const TowerFile&) const = default;
};

/// Throws ParseError (with line and column), UnknownName or ForwardReference.
TowerFile parse_tower_text(const std::string& text);
TowerFile parse_tower_file(const std::filesystem::path& path);
/// Canonical text; parse_tower_text inverts it.
std::string serialize_tower_file(const TowerFile& f);

/// A subfield given by a file name or by a comma separated expression list.
NamedSubfield resolve_subfield(const FieldTower& t, const TowerFile& f, const std::string& name_or_exprs);
std::vector<NamedSubfield> file_subfields(const FieldTower& t, const TowerFile& f);

/// Cache layout: <dir>/<tower hash>/multtable.txt and
/// <dir>/<tower hash>/diffops-<subfield hash>.txt, each starting with a
/// version header. Writes go to a temporary file that is then renamed.
class FileCache : public DiffOpStore {
 public:
  FileCache(std::filesystem::path dir, std::ostream& warnings, std::string version = kToolVersion);

  std::optional<DiffOpAlgebra> load(const FieldTower& t, const SubfieldHandle& m) override;
  void save(const FieldTower& t, const SubfieldHandle& m, const DiffOpAlgebra& d) override;

  /// Stores the multiplication table, or checks the stored one against t.
  /// Returns true on a valid hit.
  bool sync_multiplication_table(const FieldTower& t);

  std::size_t hits() const { return hits_; }
  bool writable() const { return writable_; }

 private:
  std::filesystem::path entry_dir(const FieldTower& t) const;
  void write_atomic(const std::filesystem::path& path, const std::string& text);

  std::filesystem::path dir_;
  std::ostream& warnings_;
  std::string version_;
  bool writable_ = true;
  std::size_t hits_ = 0;
};

std::string multiplication_table_text(const FieldTower& t);
std::string diffops_text(const FieldTower& t, const DiffOpAlgebra& d);
/// Throws CorruptCache on malformed content.
DiffOpAlgebra parse_diffops_text(const FieldTower& t, const SubfieldHandle& m, const std::string& text);

using Json = nlohmann::ordered_json;

Json tower_json(const FieldTower& t);
Json subfield_json(const FieldTower& t, const SubfieldHandle& m, const std::string& label = {});
Json checks_json(const std::vector<Check>& checks);
Json classification_json(const Classification& c);
Json group_json(const FieldTower& t, const AutGroup& g);
Json diffops_json(const FieldTower& t, const DiffOpAlgebra& d, const std::string& label);
Json record_json(const FieldTower& t, const CorrespondenceRecord& r);
Json largest_json(const FieldTower& t, const LargestSubfields& l);
Json theorem_report_json(const FieldTower& t, const TheoremReport& r);

/// Wraps a command payload with schema, version, tower and summary blocks.
Json finish_report(const std::string& command, const FieldTower& t, Json payload, std::vector<std::string> warnings);
/// Asserted checks found anywhere in j, and how many of them failed.
std::pair<std::size_t, std::size_t> count_checks(const Json& j);
/// Indented key: value rendering of a report.
std::string render_text(const Json& j);

/// Runs the command line; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galtower
