/**************************************************************************
 * include/galtower/tower.hpp
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

// Finite extensions L/K presented as binomial towers g_i^{m_i} = c_i, with
// arithmetic through a table of structure constants on the monomial basis.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galtower/base_field.hpp"
#include "galtower/expr.hpp"
#include "galtower/linalg.hpp"
#include "galtower/unipoly.hpp"

namespace galtower {

struct GeneratorSpec {
  std::string name;
  unsigned power = 2;
  Expr value;  // over the base variables and earlier generators

  bool operator==(const GeneratorSpec&) const = default;
};

struct TowerSpec {
  BaseFieldDesc base;
  std::vector<GeneratorSpec> generators;

  bool operator==(const TowerSpec&) const = default;
};

struct TowerOptions {
  std::size_t degree_cap = 64;
  /// Largest K/K^p basis (p^k) the semilinear solvers may use; 0 means p^4.
  std::size_t decomposition_cap = 0;
};

struct TowerElem {
  Vec coords;
  bool operator==(const TowerElem&) const = default;
};

enum class RootStatus { Found, NoRoot, Inconclusive };

struct RootResult {
  RootStatus status = RootStatus::NoRoot;
  TowerElem root;
};

/// A subfield K <= M <= L, stored as the RREF basis of a K-subspace of L.
struct SubfieldHandle {
  Subspace space;
  std::vector<TowerElem> generators;

  std::size_t degree() const { return space.dim(); }
  bool operator==(const SubfieldHandle& o) const { return space == o.space; }
};

using SparseVec = std::vector<std::pair<std::uint32_t, FieldValue>>;

class FieldTower {
 public:
  using Elem = TowerElem;

  /// Validates every binomial and the multiplication table.
  static FieldTower build(const TowerSpec& spec, const TowerOptions& options = {});

  const TowerSpec& spec() const { return data_->spec; }
  const TowerOptions& options() const { return data_->options; }
  const BaseField& base() const { return *data_->base; }
  std::size_t degree() const { return data_->n; }
  std::size_t num_generators() const { return data_->relative_degrees.size(); }
  const std::vector<unsigned>& relative_degrees() const { return data_->relative_degrees; }
  /// Exponent vector of basis monomial i (first generator varies fastest).
  const std::vector<unsigned>& exponents(std::size_t i) const { return data_->exponents[i]; }
  /// Relation values c_i as elements of L.
  const TowerElem& relation_value(std::size_t i) const { return data_->relation_values[i]; }
  /// False when some binomial could not be proven irreducible.
  bool irreducibility_verified() const { return data_->unverified.empty(); }
  const std::vector<std::string>& unverified_generators() const { return data_->unverified; }
  /// Deterministic content hash of the spec (16 hex digits).
  const std::string& hash() const { return data_->hash; }

  // field interface
  std::uint32_t characteristic() const { return base().characteristic(); }
  std::size_t degree_cap() const { return base().degree_cap(); }
  Elem zero() const;
  Elem one() const;
  Elem from_int(long long v) const { return embed(base().from_int(v)); }
  Elem embed(const FieldValue& c) const;
  Elem generator(std::size_t i) const;
  Elem basis_elem(std::size_t i) const;
  bool is_zero(const Elem& a) const { return is_zero_vec(a.coords); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(const Elem& a, const FieldValue& c) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, long long e) const;

  /// Coordinates of e_i * e_j.
  const SparseVec& product(std::size_t i, std::size_t j) const { return data_->table[i * data_->n + j]; }
  /// Matrix of x -> a x on coordinate columns.
  Mat mult_matrix(const Elem& a) const;
  const Mat& basis_mult_matrix(std::size_t i) const { return data_->basis_mult[i]; }
  /// The element if it lies in K.
  std::optional<FieldValue> as_base(const Elem& a) const;

  Elem frobenius_power(const Elem& a, unsigned e) const;
  /// beta with beta^{p^e} = d.
  RootResult pth_root(const Elem& d, unsigned e = 1) const;
  /// {beta : beta^p in w} for a K-subspace w of L.
  Subspace frobenius_preimage(const Subspace& w) const;
  /// Whether c is an l-th power in L (p does not divide l); Inconclusive
  /// when neither the search nor the available criteria decide.
  RootResult lth_root(const Elem& c, unsigned l) const;

  Elem evaluate(const Expr& e) const;
  Elem parse(const std::string& text) const;
  std::string to_string(const Elem& a) const;
  std::string monomial_name(std::size_t i) const;

 private:
  struct Data {
    TowerSpec spec;
    TowerOptions options;
    std::shared_ptr<const BaseField> base;
    std::size_t n = 1;
    std::vector<unsigned> relative_degrees;
    std::vector<std::vector<unsigned>> exponents;
    std::vector<TowerElem> relation_values;
    std::vector<SparseVec> table;
    std::vector<Mat> basis_mult;
    std::vector<TowerElem> frobenius_images;  // e_i^p
    Mat frobenius_matrix;                     // columns e_i^p
    bool frobenius_independent = false;
    // [i][l] = coordinates of (e_i^p)_l over K^p; empty when over the cap
    std::vector<std::vector<Vec>> frobenius_parts;
    std::vector<std::string> unverified;
    std::string hash;
  };

  explicit FieldTower(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static FieldTower trivial(const TowerSpec& spec, const TowerOptions& options,
                            std::shared_ptr<const BaseField> base);
  FieldTower extend(const GeneratorSpec& g, const TowerElem& c, std::vector<std::string> unverified) const;
  void check_binomial(std::size_t index, const GeneratorSpec& g, const TowerElem& c, std::vector<std::string>& unverified) const;
  std::size_t decomposition_cap() const;
  bool decomposable() const { return !data_->frobenius_parts.empty(); }

  std::shared_ptr<const Data> data_;
};

/// Canonical one-line text of a spec, used for hashing.
std::string canonical_spec_text(const TowerSpec& spec);
std::string content_hash(const std::string& text);

/// Multiplication-table invariants: identity, commutativity, associativity
/// (all basis triples when n <= 8, otherwise 200 seeded random triples).
bool validate_multiplication_table(const FieldTower& t);

/// Minimal polynomial of a over K (over == nullopt) or over a subfield.
UniPoly<FieldTower> min_poly(const FieldTower& t, const TowerElem& a,
                             const std::optional<SubfieldHandle>& over = std::nullopt);

SubfieldHandle base_subfield(const FieldTower& t);
SubfieldHandle whole_field(const FieldTower& t);
/// Smallest subalgebra of L containing K and gens; a field since L is.
SubfieldHandle subfield_generate(const FieldTower& t, const std::vector<TowerElem>& gens);
SubfieldHandle subfield_from_space(const FieldTower& t, const Subspace& s);
std::vector<TowerElem> subfield_basis(const SubfieldHandle& m);
bool is_product_closed(const FieldTower& t, const Subspace& s);

SubfieldHandle compositum(const FieldTower& t, const SubfieldHandle& m1, const SubfieldHandle& m2);
/// deg(M1 M2) == deg(M1) deg(M2), i.e. M1 (x) M2 -> M1 M2 is an isomorphism.
bool tensor_decomposition_check(const FieldTower& t, const SubfieldHandle& m1, const SubfieldHandle& m2);

/// {beta in L : beta^{p^e} in K for some e}, by the ascending chain of
/// Frobenius preimages of K.
SubfieldHandle purely_inseparable_part_semilinear(const FieldTower& t);

/// Every generator has g^{p^e} in K for some e.
bool is_purely_inseparable_tower(const FieldTower& t);

}  // namespace galtower
