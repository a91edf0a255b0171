/**************************************************************************
 * src/operators.cpp
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

#include "galtower/operators.hpp"

#include "galtower/errors.hpp"

namespace galtower {

namespace {

Vec combine(const BaseField& k, const Subspace& space, const Vec& coeffs) {
  Vec x(space.ambient_dim());
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (!coeffs[t].is_zero()) x = vec_add(k, x, vec_scale(k, space.basis()[t], coeffs[t]));
  }
  return x;
}

/// {x in space : f(x) in target for each listed f}, where images[c][j] is
/// the c-th map applied to basis vector j of space.
Subspace preimage_within(const BaseField& k, const Subspace& space, const std::vector<std::vector<Vec>>& images,
                         const Subspace& target) {
  const std::size_t unknowns = space.dim();
  EchelonBuilder eqs(unknowns);
  for (const auto& per_basis : images) {
    std::vector<Vec> reduced;
    reduced.reserve(unknowns);
    for (const auto& v : per_basis) reduced.push_back(target.reduce(k, v));
    for (std::size_t e = 0; e < target.ambient_dim() && eqs.dim() < unknowns; ++e) {
      Vec row(unknowns);
      for (std::size_t j = 0; j < unknowns; ++j) row[j] = reduced[j][e];
      if (!is_zero_vec(row)) eqs.insert(k, row);
    }
  }
  const Subspace coeffs = kernel_from_echelon(k, eqs);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) vectors.push_back(combine(k, space, c));
  return Subspace::span(k, space.ambient_dim(), vectors);
}

Subspace filtration_total(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to,
                          const std::vector<Mat>& conditions, std::vector<Subspace>* layers) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  const Subspace within = relative_to ? end_over(t, *relative_to) : Subspace::full(k, n * n);
  const std::vector<Mat> wb = basis_matrices(within);
  std::vector<std::vector<Vec>> images;
  for (const auto& g : conditions) {
    std::vector<Vec> per_basis;
    per_basis.reserve(wb.size());
    for (const auto& w : wb) per_basis.push_back(flat_commutator(k, w, g));
    images.push_back(std::move(per_basis));
  }
  Subspace current = endo_algebra(t).mult_space;
  if (layers) layers->push_back(current);
  for (std::size_t step = 0;; ++step) {
    if (step > n) throw InvariantViolation("order filtration did not stabilize within n steps");
    Subspace next = preimage_within(k, within, images, current);
    if (!subspace_contains(k, next, current)) throw InvariantViolation("order filtration is not ascending");
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
    if (layers) layers->push_back(current);
  }
}

}  // namespace

Vec flat_commutator(const BaseField& k, const Mat& a, const Mat& b) { return commutator(k, a, b).flat(); }

EndoAlgebra endo_algebra(const FieldTower& t) {
  const BaseField& k = t.base();
  EndoAlgebra e;
  e.n = t.degree();
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < e.n; ++i) {
    e.mult_basis.push_back(t.basis_mult_matrix(i));
    flat.push_back(e.mult_basis.back().flat());
  }
  e.mult_space = Subspace::span(k, e.n * e.n, flat);
  e.full = Subspace::full(k, e.n * e.n);
  e.identity = Mat::identity(e.n);
  return e;
}

Subspace mult_subspace(const FieldTower& t, const SubfieldHandle& m) {
  std::vector<Vec> flat;
  for (const auto& b : subfield_basis(m)) flat.push_back(t.mult_matrix(b).flat());
  return Subspace::span(t.base(), t.degree() * t.degree(), flat);
}

Subspace end_over(const FieldTower& t, const SubfieldHandle& m) {
  std::vector<Mat> mults;
  for (const auto& b : subfield_basis(m)) mults.push_back(t.mult_matrix(b));
  return centralizer(t.base(), t.degree(), mults);
}

DiffOpAlgebra diffop_filtration(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to) {
  DiffOpAlgebra d;
  d.relative_to = relative_to ? *relative_to : base_subfield(t);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < t.num_generators(); ++i) gens.push_back(t.mult_matrix(t.generator(i)));
  d.total = filtration_total(t, relative_to, gens, &d.layers);
  if (!is_product_closed(t.base(), t.degree(), d.total)) throw InvariantViolation("differential operators are not closed");
  d.dplus = dplus_split(t, d.total);
  return d;
}

Subspace diffop_total_all_basis(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to) {
  std::vector<Mat> all;
  for (std::size_t i = 0; i < t.degree(); ++i) all.push_back(t.basis_mult_matrix(i));
  return filtration_total(t, relative_to, all, nullptr);
}

Subspace derivations(const FieldTower& t, const std::optional<SubfieldHandle>& relative_to) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  const Subspace within = relative_to ? end_over(t, *relative_to) : Subspace::full(k, n * n);
  const std::vector<Mat> wb = basis_matrices(within);
  const std::size_t unknowns = wb.size();
  EchelonBuilder eqs(unknowns);
  for (std::size_t i = 0; i < n && eqs.dim() < unknowns; ++i) {
    for (std::size_t j = i; j < n && eqs.dim() < unknowns; ++j) {
      const Vec eij = t.mul(t.basis_elem(i), t.basis_elem(j)).coords;
      // d(e_i e_j) - e_i d(e_j) - e_j d(e_i), per unknown
      std::vector<Vec> residual;
      residual.reserve(unknowns);
      for (const auto& w : wb) {
        Vec r = mat_vec(k, w, eij);
        r = vec_sub(k, r, mat_vec(k, t.basis_mult_matrix(i), w.column(j)));
        r = vec_sub(k, r, mat_vec(k, t.basis_mult_matrix(j), w.column(i)));
        residual.push_back(std::move(r));
      }
      for (std::size_t e = 0; e < n; ++e) {
        Vec row(unknowns);
        for (std::size_t u = 0; u < unknowns; ++u) row[u] = residual[u][e];
        if (!is_zero_vec(row)) eqs.insert(k, row);
      }
    }
  }
  const Subspace coeffs = kernel_from_echelon(k, eqs);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) vectors.push_back(combine(k, within, c));
  return Subspace::span(k, n * n, vectors);
}

Subspace dplus_split(const FieldTower& t, const Subspace& total) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  // d(1) is column 0 of d.
  EchelonBuilder eqs(total.dim());
  for (std::size_t r = 0; r < n; ++r) {
    Vec row(total.dim());
    for (std::size_t j = 0; j < total.dim(); ++j) row[j] = total.basis()[j][r * n];
    if (!is_zero_vec(row)) eqs.insert(k, row);
  }
  const Subspace coeffs = kernel_from_echelon(k, eqs);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) vectors.push_back(combine(k, total, c));
  Subspace dplus = Subspace::span(k, n * n, vectors);

  const Subspace l = endo_algebra(t).mult_space;
  if (!subspace_contains(k, total, l)) throw SplitFailure("L is not contained in the operator algebra");
  if (subspace_intersect(k, l, dplus).dim() != 0) throw SplitFailure("L and the augmentation part intersect");
  if (l.dim() + dplus.dim() != total.dim()) throw SplitFailure("dimensions of L and the augmentation part do not add up");
  for (const auto& d : basis_matrices(dplus)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!dplus.contains(k, mat_mul(k, t.basis_mult_matrix(i), d).flat())) {
        throw SplitFailure("augmentation part is not a left L-ideal");
      }
    }
  }
  return dplus;
}

std::size_t operator_order(const FieldTower& t, const DiffOpAlgebra& d, const Mat& op) {
  for (std::size_t m = 0; m < d.layers.size(); ++m) {
    if (d.layers[m].contains(t.base(), op.flat())) return m;
  }
  throw NoSolution("operator lies in no layer of the filtration");
}

SubfieldHandle constants(const FieldTower& t, const Subspace& ops, ConstantsMode mode) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  EchelonBuilder eqs(n);
  for (const auto& d : basis_matrices(ops)) {
    if (eqs.dim() == n) break;
    if (mode == ConstantsMode::Kernel) {
      for (std::size_t r = 0; r < n; ++r) {
        Vec row = d.row(r);
        if (!is_zero_vec(row)) eqs.insert(k, row);
      }
    } else {
      std::vector<Vec> comms;
      for (std::size_t i = 0; i < n; ++i) comms.push_back(flat_commutator(k, t.basis_mult_matrix(i), d));
      for (std::size_t e = 0; e < n * n; ++e) {
        Vec row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = comms[i][e];
        if (!is_zero_vec(row)) eqs.insert(k, row);
      }
    }
  }
  return subfield_from_space(t, kernel_from_echelon(k, eqs));
}

}  // namespace galtower
