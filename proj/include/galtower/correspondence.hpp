/**************************************************************************
 * include/galtower/correspondence.hpp
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

// The subfield <-> subalgebra correspondence of End_K(L), largest subfields,
// and the verification suites run over a tower. Every suite returns records
// whose checks carry the computed and the expected value; nothing here
// throws on a failed check except forward_map / inverse_map on normal
// towers, where disagreement is a bug.

#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "galtower/operators.hpp"
#include "galtower/symmetry.hpp"
#include "galtower/tower.hpp"

namespace galtower {

struct Check {
  std::string name;
  std::string computed;
  std::string expected;
  bool passed = false;
  bool asserted = true;  // false for theorem checks on non-normal towers
};

/// True when no asserted check failed.
bool all_passed(const std::vector<Check>& checks);

/// Persistence hook for relative operator algebras, keyed by subfield.
class DiffOpStore {
 public:
  virtual ~DiffOpStore() = default;
  virtual std::optional<DiffOpAlgebra> load(const FieldTower& t, const SubfieldHandle& m) = 0;
  virtual void save(const FieldTower& t, const SubfieldHandle& m, const DiffOpAlgebra& d) = 0;
};

/// Hex content hash of a subfield's canonical basis text.
std::string subfield_hash(const FieldTower& t, const SubfieldHandle& m);

/// The tower with its group, operator algebra and classification, plus a
/// memo of D(L/M) per subfield.
class ExtensionAnalysis {
 public:
  explicit ExtensionAnalysis(FieldTower t, DiffOpStore* store = nullptr);

  const FieldTower& tower() const { return tower_; }
  const AutGroup& group() const { return group_; }
  const EndoAlgebra& endo() const { return endo_; }
  const DiffOpAlgebra& diffops() const { return diffops_; }
  const Classification& classification() const { return classification_; }

  /// D(L/M), computed once per subfield.
  const DiffOpAlgebra& relative_diffops(const SubfieldHandle& m) const;

 private:
  FieldTower tower_;
  DiffOpStore* store_;
  EndoAlgebra endo_;
  AutGroup group_;
  DiffOpAlgebra diffops_;
  Classification classification_;
  mutable std::mutex memo_mutex_;
  mutable std::deque<std::pair<Subspace, DiffOpAlgebra>> memo_;  // deque keeps references stable
};

/// The three descriptions of C_E(M).
struct ForwardResult {
  Subspace centralizer;
  Subspace closure;  // algebra generated by D(L/M) and G(L/M)
  Subspace skew;     // span of D(L/M) G(L/M)
  Subgroup group;    // G(L/M)
  bool coincide = false;
};

ForwardResult forward_components(const ExtensionAnalysis& a, const SubfieldHandle& m);
/// C_E(M); throws CrossCheckFailure when the tower is normal and the three
/// descriptions differ.
Subspace forward_map(const ExtensionAnalysis& a, const SubfieldHandle& m);

struct InverseResult {
  SubfieldHandle centralizing;  // C_E(A) inside L
  SubfieldHandle formula;       // constants of A meet D+, fixed by A meet G
  bool agree = false;
};

/// Requires L inside A and A product-closed (NotAnAlgebra otherwise).
InverseResult inverse_components(const ExtensionAnalysis& a, const Subspace& algebra);
/// Throws FormulaMismatch when the tower is normal and the two ways differ.
SubfieldHandle inverse_map(const ExtensionAnalysis& a, const Subspace& algebra);

struct CorrespondenceRecord {
  std::string label;
  SubfieldHandle subfield;
  Subgroup group;
  std::size_t dim_forward = 0;
  std::size_t dim_diffops = 0;  // dim_K D(L/M)
  SubfieldHandle recovered;
  std::size_t triple[3] = {0, 0, 0};  // [M:K], |G(L/M)|, dim_K D(L/M)
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

CorrespondenceRecord verify_roundtrip(const ExtensionAnalysis& a, const SubfieldHandle& m, std::string label = {});

struct LargestSubfields {
  SubfieldHandle pi;
  SubfieldHandle sep;
  std::optional<SubfieldHandle> gal;  // normal towers only
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

LargestSubfields largest_subfields(const ExtensionAnalysis& a);

struct NormalSubfieldRecord {
  std::string label;
  SubfieldHandle subfield;
  SubfieldHandle m_pi;
  SubfieldHandle m_gal;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

NormalSubfieldRecord normal_subfield_suite(const ExtensionAnalysis& a, const SubfieldHandle& m, std::string label = {});

struct PurelyInseparableRecord {
  std::string label;
  SubfieldHandle subfield;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

/// Tower-level checks: D = E, Z(D) = K, End over D = K.
std::vector<Check> purely_insep_tower_checks(const ExtensionAnalysis& a);
PurelyInseparableRecord purely_insep_suite(const ExtensionAnalysis& a, const SubfieldHandle& m, std::string label = {});

struct GaloisSubgroupRecord {
  Subgroup subgroup;
  bool normal = false;
  SubfieldHandle fixed;
  std::vector<Check> checks;
};

struct GaloisSuiteRecord {
  std::vector<GaloisSubgroupRecord> subgroups;
  std::vector<Check> checks;

  bool passed() const;
};

GaloisSuiteRecord classical_galois_suite(const ExtensionAnalysis& a);

enum class Suite { Auto, Normal, PurelyInseparable, Galois, Full };

struct NamedSubfield {
  std::string label;
  SubfieldHandle subfield;
};

struct TheoremReport {
  std::string tower_hash;
  Classification classification;
  Completeness completeness = Completeness::Proven;
  std::vector<std::string> suites_run;
  LargestSubfields largest;
  std::vector<CorrespondenceRecord> records;
  std::vector<NormalSubfieldRecord> normal_records;
  std::vector<Check> pi_tower_checks;
  std::vector<PurelyInseparableRecord> pi_records;
  std::optional<GaloisSuiteRecord> galois;
  std::vector<Check> checks;  // suite preconditions
  std::vector<std::string> warnings;

  std::size_t failed_checks() const;
};

/// Classification, largest subfields, a round trip per listed subfield
/// (K and L are always included), and the selected suites.
TheoremReport run_report(const ExtensionAnalysis& a, const std::vector<NamedSubfield>& subfields, Suite suite);

}  // namespace galtower
