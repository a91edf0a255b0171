/**************************************************************************
 * include/galtower/linalg.hpp
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

// Exact linear algebra over K: matrices, canonical (RREF) subspaces,
// kernels, and the subalgebra/centralizer computations inside M_n(K).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galtower/base_field.hpp"

namespace galtower {

using Vec = std::vector<FieldValue>;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  /// Row-major n x n matrix from a flattened vector of length n^2.
  static Mat from_flat(std::size_t n, const Vec& flat);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldValue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldValue& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Vec& flat() const { return data_; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Mat mat_mul(const BaseField& k, const Mat& a, const Mat& b);
Mat mat_add(const BaseField& k, const Mat& a, const Mat& b);
Mat mat_sub(const BaseField& k, const Mat& a, const Mat& b);
Mat mat_scale(const BaseField& k, const Mat& a, const FieldValue& c);
Vec mat_vec(const BaseField& k, const Mat& a, const Vec& v);
/// a*b - b*a
Mat commutator(const BaseField& k, const Mat& a, const Mat& b);
/// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<Mat> mat_inverse(const BaseField& k, const Mat& a);
FieldValue determinant(const BaseField& k, Mat a);

Vec vec_add(const BaseField& k, const Vec& a, const Vec& b);
Vec vec_sub(const BaseField& k, const Vec& a, const Vec& b);
Vec vec_scale(const BaseField& k, const Vec& a, const FieldValue& c);
bool is_zero_vec(const Vec& v);

/// A K-subspace of K^N stored as its reduced row-echelon basis. Equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(const BaseField& k, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(const BaseField& k, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot columns; zero iff v is in the span.
  Vec reduce(const BaseField& k, Vec v) const;
  bool contains(const BaseField& k, const Vec& v) const;
  /// Rows a with a.v = 0 for all v in the subspace (one per non-pivot column).
  std::vector<Vec> annihilator(const BaseField& k) const;

  bool operator==(const Subspace&) const = default;

 private:
  friend class EchelonBuilder;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Incremental reduced row echelon form. Rows stay mutually reduced, so
/// reduction against them is order independent.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t ambient) : ambient_(ambient) {}

  /// Adds v to the span; returns false when v was already in it.
  bool insert(const BaseField& k, const Vec& v);
  Vec reduce(const BaseField& k, Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Subspace finish() const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const BaseField& k, const Mat& a);
std::size_t rank(const BaseField& k, const Mat& a);
/// {x : a x = 0}
Subspace kernel(const BaseField& k, const Mat& a);
/// {x : r.x = 0 for every row r}; rows may be produced lazily by the caller.
Subspace kernel_of_rows(const BaseField& k, std::size_t unknowns, const std::vector<Vec>& rows);
Subspace kernel_from_echelon(const BaseField& k, const EchelonBuilder& rows);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const BaseField& k, const Mat& a, const Vec& b);

Subspace subspace_sum(const BaseField& k, const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const BaseField& k, const Subspace& u, const Subspace& v);
/// inner is contained in outer.
bool subspace_contains(const BaseField& k, const Subspace& outer, const Subspace& inner);

/// Basis element i of a subspace of M_n(K) (flattened row-major) as a matrix.
Mat basis_matrix(const Subspace& s, std::size_t i);
std::vector<Mat> basis_matrices(const Subspace& s);
Subspace span_of_matrices(const BaseField& k, std::size_t n, const std::vector<Mat>& mats);

/// Smallest product-closed subspace of M_n(K) containing gens and the identity.
Subspace algebra_closure(const BaseField& k, std::size_t n, const std::vector<Mat>& gens);
/// {X in within : X s = s X for all s}; within = all of M_n(K) when omitted.
Subspace centralizer(const BaseField& k, std::size_t n, const std::vector<Mat>& s,
                     const std::optional<Subspace>& within = std::nullopt);
bool is_product_closed(const BaseField& k, std::size_t n, const Subspace& a);
/// centralizer(basis(A)) within A; throws NotAnAlgebra when A is not closed.
Subspace center(const BaseField& k, std::size_t n, const Subspace& a);

/// Canonical text serialization: "rows cols" header then one element per line.
std::string serialize_matrix(const BaseField& k, const Mat& m);

}  // namespace galtower
