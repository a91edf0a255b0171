/**************************************************************************
 * include/galtower/operators.hpp
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

// K-linear endomorphisms of L, derivations, and the algebra of differential
// operators built by the order filtration. Endomorphisms act on coordinate
// columns; subspaces of End_K(L) live in K^{n^2} (row-major flattening).

#include <vector>

#include "galtower/linalg.hpp"
#include "galtower/tower.hpp"

namespace galtower {

struct EndoAlgebra {
  std::size_t n = 0;
  std::vector<Mat> mult_basis;  // mult(e_i)
  Subspace mult_space;          // L inside End_K(L)
  Subspace full;                // End_K(L)
  Mat identity;
};

EndoAlgebra endo_algebra(const FieldTower& t);

/// span{mult(m) : m in M}.
Subspace mult_subspace(const FieldTower& t, const SubfieldHandle& m);
/// End_M(L) = centralizer of mult(M).
Subspace end_over(const FieldTower& t, const SubfieldHandle& m);

struct DiffOpAlgebra {
  std::vector<Subspace> layers;  // D^0 = L, D^1, ..., last == total
  Subspace total;
  Subspace dplus;
  SubfieldHandle relative_to;

  std::size_t order() const { return layers.empty() ? 0 : layers.size() - 1; }
};

/// D^0 = mult(L); D^{m+1} = {d in End_M(L) : [d, mult(g)] in D^m for every
/// tower generator g}. Stops at the first repeated dimension.
DiffOpAlgebra diffop_filtration(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to = std::nullopt);

/// Same layer recursion, with the commutator condition imposed for every
/// basis element of L rather than the generators only.
Subspace diffop_total_all_basis(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to = std::nullopt);

/// M-linear d with d(e_i e_j) = e_i d(e_j) + e_j d(e_i) on all basis pairs.
Subspace derivations(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to = std::nullopt);

/// {d in total : d(1) = 0}; checks total = mult(L) + dplus is direct and
/// that dplus is a left L-ideal. Throws SplitFailure otherwise.
Subspace dplus_split(const FieldTower& t, const Subspace& total);

/// Order of an operator: the first layer that contains it.
std::size_t operator_order(const FieldTower& t, const DiffOpAlgebra& d, const Mat& op);

enum class ConstantsMode { Kernel, Centralizing };

/// Kernel mode: common kernel of the operators; centralizing mode: elements
/// whose multiplication commutes with every operator.
SubfieldHandle constants(const FieldTower& t, const Subspace& ops, ConstantsMode mode = ConstantsMode::Kernel);

/// Flattened commutator [a, b] as a vector in K^{n^2}.
Vec flat_commutator(const BaseField& k, const Mat& a, const Mat& b);

}  // namespace galtower
