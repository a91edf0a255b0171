/**************************************************************************
 * include/galtower/symmetry.hpp
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

// Automorphism groups of binomial towers, fixed fields and stabilizers,
// skew group algebras, and the separable / purely inseparable / normal /
// Galois classification of L/K.

#include <string>
#include <vector>

#include "galtower/linalg.hpp"
#include "galtower/operators.hpp"
#include "galtower/tower.hpp"

namespace galtower {

struct Automorphism {
  std::vector<TowerElem> images;  // of each tower generator
  Mat matrix;                     // columns are images of basis monomials
};

enum class Completeness { Proven, LowerBound };

/// Sorted element indices of a subgroup.
using Subgroup = std::vector<std::size_t>;

struct AutGroup {
  std::vector<Automorphism> elements;  // identity first
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = elements[i] o elements[j]
  std::vector<std::size_t> inverse;
  Completeness completeness = Completeness::Proven;

  std::size_t order() const { return elements.size(); }
  Subgroup all() const;
};

AutGroup enumerate_automorphisms(const FieldTower& t);
/// Whether the candidate space {zeta * monomial} provably contains every
/// generator image: each c_i in K and m_i = p^e m' with m' | q-1, or
/// every m_i a power of p (then L/K is purely inseparable and G trivial).
bool automorphism_search_complete(const FieldTower& t);
/// The K-algebra homomorphism test on all basis pairs, plus invertibility.
bool is_automorphism(const FieldTower& t, const Mat& m);

/// Closed under composition and contains the identity.
bool is_subgroup(const AutGroup& g, const Subgroup& h);
Subgroup generated_subgroup(const AutGroup& g, const std::vector<std::size_t>& gens);

SubfieldHandle fixed_field(const FieldTower& t, const AutGroup& g, const Subgroup& h);
Subgroup stabilizer_subgroup(const FieldTower& t, const AutGroup& g, const SubfieldHandle& m);

struct SkewGroupAlgebra {
  Subspace coefficients;
  Subgroup group;
  Subspace span;
  bool direct = false;
};

/// span{d g : d in D, g in H}; throws NotStable unless g D g^{-1} = D.
SkewGroupAlgebra skew_group_algebra(const FieldTower& t, const AutGroup& g, const Subspace& d, const Subgroup& h);

/// g A g^{-1} = A for every g in the group.
bool g_stable_check(const FieldTower& t, const AutGroup& g, const Subspace& a);

struct SubgroupInfo {
  Subgroup elements;
  bool normal = false;
};

/// All subgroups, ordered by size then elements. Throws GroupTooLarge past 64.
std::vector<SubgroupInfo> subgroup_lattice(const AutGroup& g);

struct Classification {
  bool separable = false;
  bool purely_inseparable = false;
  bool normal = false;
  bool galois = false;
  bool d_ext = false;
  bool g_ext = false;
  bool b_ext = false;
  std::size_t degree = 0;
  std::size_t group_order = 0;
  std::size_t dim_diffops = 0;
  std::size_t dim_l_skew = 0;  // dim span(L G)
  std::size_t dim_d_skew = 0;  // dim span(D G)
  std::size_t fixed_degree = 0;
  std::size_t pi_degree = 0;
  Completeness completeness = Completeness::Proven;
};

/// Throws EquivalenceViolation unless galois <=> G-ext, purely inseparable
/// <=> D-ext and normal <=> B-ext.
Classification classify_extension(const FieldTower& t, const AutGroup& g, const DiffOpAlgebra& d);
Classification classify_extension(const FieldTower& t);

enum class PiStrategy { ViaAutomorphisms, Semilinear };

/// Via automorphisms: the fixed field of G, valid only for normal L/K
/// (normal_verified); semilinear: the Frobenius preimage chain.
SubfieldHandle purely_inseparable_part(const FieldTower& t, PiStrategy strategy, const AutGroup* g = nullptr,
                                       bool normal_verified = false);

}  // namespace galtower
