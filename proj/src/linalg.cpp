/**************************************************************************
 * src/linalg.cpp
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

#include "galtower/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "galtower/errors.hpp"

namespace galtower {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldValue::from_scalar(1);
  return m;
}

Mat Mat::from_flat(std::size_t n, const Vec& flat) {
  if (flat.size() != n * n) throw DimensionMismatch("flattened matrix has wrong length");
  Mat m(n, n);
  m.data_ = flat;
  return m;
}

Vec Mat::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Mat mat_mul(const BaseField& k, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FieldValue& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const FieldValue& y = b(l, j);
        if (y.is_zero()) continue;
        out(i, j) = k.add(out(i, j), k.mul(x, y));
      }
    }
  }
  return out;
}

Mat mat_add(const BaseField& k, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.add(a(i, j), b(i, j));
  }
  return out;
}

Mat mat_sub(const BaseField& k, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.sub(a(i, j), b(i, j));
  }
  return out;
}

Mat mat_scale(const BaseField& k, const Mat& a, const FieldValue& c) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = k.mul(a(i, j), c);
  }
  return out;
}

Vec mat_vec(const BaseField& k, const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = k.add(out[i], k.mul(a(i, j), v[j]));
    }
  }
  return out;
}

Mat commutator(const BaseField& k, const Mat& a, const Mat& b) {
  return mat_sub(k, mat_mul(k, a, b), mat_mul(k, b, a));
}

std::optional<Mat> mat_inverse(const BaseField& k, const Mat& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = k.one();
  }
  RrefResult r = rref(k, aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  }
  return out;
}

FieldValue determinant(const BaseField& k, Mat a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionMismatch("determinant of a non-square matrix");
  FieldValue det = k.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return k.zero();
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = k.neg(det);
    }
    det = k.mul(det, a(c, c));
    const FieldValue inv = k.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const FieldValue f = k.mul(a(r, c), inv);
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) = k.sub(a(r, j), k.mul(f, a(c, j)));
      }
    }
  }
  return det;
}

Vec vec_add(const BaseField& k, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const BaseField& k, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const BaseField& k, const Vec& a, const FieldValue& c) {
  Vec out(a.size());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.mul(a[i], c);
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldValue& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------- echelon

namespace {

// v -= c * row, skipping zero entries of row
void axpy_neg(const BaseField& k, Vec& v, const FieldValue& c, const Vec& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    v[j] = k.sub(v[j], k.mul(c, row[j]));
  }
}

}  // namespace

Vec EchelonBuilder::reduce(const BaseField& k, Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldValue c = v[pivots_[r]];
    if (c.is_zero()) continue;
    axpy_neg(k, v, c, rows_[r]);
  }
  return v;
}

bool EchelonBuilder::insert(const BaseField& k, const Vec& v) {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  if (rows_.size() == ambient_) return false;
  Vec r = reduce(k, v);
  auto it = std::find_if(r.begin(), r.end(), [](const FieldValue& x) { return !x.is_zero(); });
  if (it == r.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - r.begin());
  if (!r[pivot].is_one()) r = vec_scale(k, r, k.inv(r[pivot]));
  for (auto& row : rows_) {
    const FieldValue c = row[pivot];
    if (!c.is_zero()) axpy_neg(k, row, c, r);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

Subspace EchelonBuilder::finish() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  Subspace s(ambient_);
  for (auto i : order) {
    s.rows_.push_back(rows_[i]);
    s.pivots_.push_back(pivots_[i]);
  }
  return s;
}

Subspace Subspace::span(const BaseField& k, std::size_t ambient, const std::vector<Vec>& vectors) {
  EchelonBuilder b(ambient);
  for (const auto& v : vectors) b.insert(k, v);
  return b.finish();
}

Subspace Subspace::full(const BaseField& k, std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient);
    e[i] = k.one();
    s.rows_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const BaseField& k, Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldValue c = v[pivots_[r]];
    if (c.is_zero()) continue;
    axpy_neg(k, v, c, rows_[r]);
  }
  return v;
}

bool Subspace::contains(const BaseField& k, const Vec& v) const { return is_zero_vec(reduce(k, v)); }

std::vector<Vec> Subspace::annihilator(const BaseField& k) const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (is_pivot[c]) continue;
    Vec a(ambient_);
    a[c] = k.one();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!rows_[r][c].is_zero()) a[pivots_[r]] = k.neg(rows_[r][c]);
    }
    out.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------- solvers

RrefResult rref(const BaseField& k, const Mat& a) {
  EchelonBuilder b(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) b.insert(k, a.row(r));
  Subspace s = b.finish();
  RrefResult out{Mat(a.rows(), a.cols()), s.pivots()};
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.reduced(r, c) = s.basis()[r][c];
  }
  return out;
}

std::size_t rank(const BaseField& k, const Mat& a) { return rref(k, a).pivots.size(); }

Subspace kernel_from_echelon(const BaseField& k, const EchelonBuilder& rows) {
  const Subspace s = rows.finish();
  const std::size_t n = s.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = k.one();
    for (std::size_t r = 0; r < s.dim(); ++r) {
      if (!s.basis()[r][f].is_zero()) x[s.pivots()[r]] = k.neg(s.basis()[r][f]);
    }
    basis.push_back(std::move(x));
  }
  return Subspace::span(k, n, basis);
}

Subspace kernel_of_rows(const BaseField& k, std::size_t unknowns, const std::vector<Vec>& rows) {
  EchelonBuilder b(unknowns);
  for (const auto& r : rows) {
    if (b.dim() == unknowns) break;
    if (!is_zero_vec(r)) b.insert(k, r);
  }
  return kernel_from_echelon(k, b);
}

Subspace kernel(const BaseField& k, const Mat& a) {
  EchelonBuilder b(a.cols());
  for (std::size_t r = 0; r < a.rows() && b.dim() < a.cols(); ++r) b.insert(k, a.row(r));
  return kernel_from_echelon(k, b);
}

std::optional<Vec> solve(const BaseField& k, const Mat& a, const Vec& rhs) {
  if (rhs.size() != a.rows()) throw DimensionMismatch("right-hand side length");
  const std::size_t n = a.cols();
  EchelonBuilder b(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row = a.row(r);
    row.push_back(rhs[r]);
    b.insert(k, row);
  }
  const Subspace s = b.finish();
  Vec x(n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const std::size_t p = s.pivots()[r];
    if (p == n) return std::nullopt;
    x[p] = s.basis()[r][n];
  }
  return x;
}

Subspace subspace_sum(const BaseField& k, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace sum");
  EchelonBuilder b(u.ambient_dim());
  for (const auto& r : u.basis()) b.insert(k, r);
  for (const auto& r : v.basis()) b.insert(k, r);
  return b.finish();
}

Subspace subspace_intersect(const BaseField& k, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace intersection");
  if (u.dim() == u.ambient_dim()) return v;
  if (v.dim() == v.ambient_dim()) return u;
  // parametrize by u's basis and impose v's annihilator
  const auto ann = v.annihilator(k);
  std::vector<Vec> rows;
  rows.reserve(ann.size());
  for (const auto& a : ann) {
    Vec row(u.dim());
    for (std::size_t t = 0; t < u.dim(); ++t) {
      FieldValue acc;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero() || u.basis()[t][j].is_zero()) continue;
        acc = k.add(acc, k.mul(a[j], u.basis()[t][j]));
      }
      row[t] = acc;
    }
    rows.push_back(std::move(row));
  }
  const Subspace coeffs = kernel_of_rows(k, u.dim(), rows);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) {
    Vec x(u.ambient_dim());
    for (std::size_t t = 0; t < u.dim(); ++t) {
      if (!c[t].is_zero()) x = vec_add(k, x, vec_scale(k, u.basis()[t], c[t]));
    }
    vectors.push_back(std::move(x));
  }
  return Subspace::span(k, u.ambient_dim(), vectors);
}

bool subspace_contains(const BaseField& k, const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim()) throw DimensionMismatch("subspace containment");
  for (const auto& r : inner.basis()) {
    if (!outer.contains(k, r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- algebras

namespace {

std::size_t matrix_order(std::size_t ambient) {
  std::size_t n = 0;
  while (n * n < ambient) ++n;
  if (n * n != ambient) throw DimensionMismatch("ambient dimension is not a square");
  return n;
}

}  // namespace

Mat basis_matrix(const Subspace& s, std::size_t i) {
  return Mat::from_flat(matrix_order(s.ambient_dim()), s.basis()[i]);
}

std::vector<Mat> basis_matrices(const Subspace& s) {
  std::vector<Mat> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(basis_matrix(s, i));
  return out;
}

Subspace span_of_matrices(const BaseField& k, std::size_t n, const std::vector<Mat>& mats) {
  EchelonBuilder b(n * n);
  for (const auto& m : mats) b.insert(k, m.flat());
  return b.finish();
}

Subspace algebra_closure(const BaseField& k, std::size_t n, const std::vector<Mat>& gens) {
  EchelonBuilder b(n * n);
  std::vector<Mat> members;
  const Mat id = Mat::identity(n);
  b.insert(k, id.flat());
  members.push_back(id);
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("closure generator size");
    if (b.insert(k, g.flat())) members.push_back(g);
  }
  // closing {1} under left multiplication by the generators spans every word
  for (std::size_t i = 0; i < members.size() && b.dim() < n * n; ++i) {
    for (const auto& g : gens) {
      Mat prod = mat_mul(k, g, members[i]);
      if (b.insert(k, prod.flat())) members.push_back(std::move(prod));
    }
  }
  return b.finish();
}

Subspace centralizer(const BaseField& k, std::size_t n, const std::vector<Mat>& s,
                     const std::optional<Subspace>& within) {
  const Subspace space = within ? *within : Subspace::full(k, n * n);
  if (space.ambient_dim() != n * n) throw DimensionMismatch("centralizer ambient");
  const std::size_t unknowns = space.dim();
  const std::vector<Mat> basis = basis_matrices(space);
  EchelonBuilder eqs(unknowns);
  for (const auto& m : s) {
    if (eqs.dim() == unknowns) break;
    std::vector<Mat> comms;
    comms.reserve(unknowns);
    for (const auto& w : basis) comms.push_back(commutator(k, w, m));
    for (std::size_t e = 0; e < n * n && eqs.dim() < unknowns; ++e) {
      Vec row(unknowns);
      for (std::size_t t = 0; t < unknowns; ++t) row[t] = comms[t].flat()[e];
      if (!is_zero_vec(row)) eqs.insert(k, row);
    }
  }
  const Subspace coeffs = kernel_from_echelon(k, eqs);
  std::vector<Vec> vectors;
  for (const auto& c : coeffs.basis()) {
    Vec x(n * n);
    for (std::size_t t = 0; t < unknowns; ++t) {
      if (!c[t].is_zero()) x = vec_add(k, x, vec_scale(k, space.basis()[t], c[t]));
    }
    vectors.push_back(std::move(x));
  }
  return Subspace::span(k, n * n, vectors);
}

bool is_product_closed(const BaseField& k, std::size_t n, const Subspace& a) {
  const auto mats = basis_matrices(a);
  for (const auto& x : mats) {
    for (const auto& y : mats) {
      if (!a.contains(k, mat_mul(k, x, y).flat())) return false;
    }
  }
  (void)n;
  return true;
}

Subspace center(const BaseField& k, std::size_t n, const Subspace& a) {
  if (!is_product_closed(k, n, a)) throw NotAnAlgebra("subspace is not closed under products");
  return centralizer(k, n, basis_matrices(a), a);
}

std::string serialize_matrix(const BaseField& k, const Mat& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (const auto& x : m.flat()) os << k.to_string(x) << "\n";
  return os.str();
}

}  // namespace galtower
