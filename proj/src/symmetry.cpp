/**************************************************************************
 * src/symmetry.cpp
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

#include "galtower/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galtower/errors.hpp"

namespace galtower {

namespace {

std::size_t stride_of(const FieldTower& t, std::size_t i) {
  std::size_t s = 1;
  for (std::size_t j = 0; j < i; ++j) s *= t.relative_degrees()[j];
  return s;
}

/// Images of the basis monomials with index < limit, from generator images.
std::vector<TowerElem> monomial_images(const FieldTower& t, const std::vector<TowerElem>& gen_images,
                                       std::size_t limit) {
  std::vector<TowerElem> out{t.one()};
  for (std::size_t j = 1; j < limit; ++j) {
    const auto& e = t.exponents(j);
    std::size_t i = e.size();
    while (e[--i] == 0) {
    }
    out.push_back(t.mul(out[j - stride_of(t, i)], gen_images[i]));
  }
  return out;
}

TowerElem apply_images(const FieldTower& t, const std::vector<TowerElem>& mono, const TowerElem& a) {
  TowerElem out = t.zero();
  for (std::size_t j = 0; j < mono.size(); ++j) {
    if (!a.coords[j].is_zero()) out = t.add(out, t.scale(mono[j], a.coords[j]));
  }
  return out;
}

Mat matrix_from_columns(const std::vector<TowerElem>& cols) {
  const std::size_t n = cols.size();
  Mat m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c].coords[r];
  }
  return m;
}

Subgroup close(const AutGroup& g, std::set<std::size_t> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) grew = s.insert(g.table[a][b]).second || grew;
    }
  }
  return Subgroup(s.begin(), s.end());
}

}  // namespace

Subgroup AutGroup::all() const {
  Subgroup s(elements.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

bool automorphism_search_complete(const FieldTower& t) {
  const std::uint64_t q1 = t.base().finite_field().order() - 1;
  const std::uint32_t p = t.characteristic();
  // all degrees p-powers: purely inseparable, so only the identity exists
  const auto& degrees = t.relative_degrees();
  if (std::all_of(degrees.begin(), degrees.end(), [p](unsigned m) {
        while (m % p == 0) m /= p;
        return m == 1;
      })) {
    return true;
  }
  for (std::size_t i = 0; i < t.num_generators(); ++i) {
    if (!t.as_base(t.relation_value(i))) return false;
    unsigned m = t.relative_degrees()[i];
    while (m % p == 0) m /= p;
    if (q1 % m != 0) return false;
  }
  return true;
}

bool is_automorphism(const FieldTower& t, const Mat& m) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  if (m.column(0) != t.one().coords) return false;
  std::vector<TowerElem> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(TowerElem{m.column(j)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vec lhs = mat_vec(k, m, t.mul(t.basis_elem(i), t.basis_elem(j)).coords);
      if (lhs != t.mul(cols[i], cols[j]).coords) return false;
    }
  }
  return rank(k, m) == n;
}

AutGroup enumerate_automorphisms(const FieldTower& t) {
  const BaseField& k = t.base();
  const std::size_t gens = t.num_generators();
  AutGroup group;
  group.completeness = automorphism_search_complete(t) ? Completeness::Proven : Completeness::LowerBound;

  // candidates per generator: zeta * monomial, the generator itself first
  std::vector<std::vector<TowerElem>> candidates(gens);
  for (std::size_t i = 0; i < gens; ++i) {
    auto zetas = k.roots_of_unity(t.relative_degrees()[i]);
    std::stable_partition(zetas.begin(), zetas.end(), [](const FieldValue& z) { return z.is_one(); });
    const TowerElem g = t.generator(i);
    candidates[i].push_back(g);
    for (const auto& z : zetas) {
      for (std::size_t b = 0; b < t.degree(); ++b) {
        TowerElem c = t.scale(t.basis_elem(b), z);
        if (!(c == g)) candidates[i].push_back(std::move(c));
      }
    }
  }

  std::vector<TowerElem> chosen;
  std::vector<Automorphism> found;
  const auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == gens) {
      const auto mono = monomial_images(t, chosen, t.degree());
      Mat m = matrix_from_columns(mono);
      if (is_automorphism(t, m)) found.push_back(Automorphism{chosen, std::move(m)});
      return;
    }
    const std::size_t prefix = stride_of(t, i);
    const auto mono = monomial_images(t, chosen, prefix);
    TowerElem c = t.relation_value(i);
    c.coords.resize(prefix);
    const TowerElem target = apply_images(t, mono, c);
    for (const auto& cand : candidates[i]) {
      if (!(t.pow(cand, t.relative_degrees()[i]) == target)) continue;
      chosen.push_back(cand);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  search(search, 0);
  if (found.empty()) throw InvariantViolation("identity was not found among the automorphism candidates");

  // close under composition; with a proven search nothing may be missing
  group.elements = std::move(found);
  for (std::size_t a = 0; a < group.elements.size(); ++a) {
    for (std::size_t b = 0; b < group.elements.size(); ++b) {
      const Mat prod = mat_mul(k, group.elements[a].matrix, group.elements[b].matrix);
      auto it = std::find_if(group.elements.begin(), group.elements.end(),
                             [&](const Automorphism& e) { return e.matrix == prod; });
      if (it != group.elements.end()) continue;
      if (group.completeness == Completeness::Proven) {
        throw InvariantViolation("composition of automorphisms missing from a complete enumeration");
      }
      std::vector<TowerElem> images;
      for (std::size_t i = 0; i < gens; ++i) images.push_back(TowerElem{prod.column(stride_of(t, i))});
      group.elements.push_back(Automorphism{std::move(images), prod});
    }
  }
  const std::size_t order = group.elements.size();
  group.table.assign(order, std::vector<std::size_t>(order));
  group.inverse.assign(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const Mat prod = mat_mul(k, group.elements[a].matrix, group.elements[b].matrix);
      for (std::size_t c = 0; c < order; ++c) {
        if (group.elements[c].matrix == prod) group.table[a][b] = c;
      }
      if (group.table[a][b] == 0) group.inverse[a] = b;
    }
    if (group.inverse[a] == order) throw InvariantViolation("automorphism without inverse in the group");
  }
  return group;
}

bool is_subgroup(const AutGroup& g, const Subgroup& h) {
  if (h.empty() || !std::binary_search(h.begin(), h.end(), std::size_t{0})) return false;
  for (auto a : h) {
    if (a >= g.order()) return false;
    for (auto b : h) {
      if (!std::binary_search(h.begin(), h.end(), g.table[a][b])) return false;
    }
  }
  return true;
}

Subgroup generated_subgroup(const AutGroup& g, const std::vector<std::size_t>& gens) {
  return close(g, std::set<std::size_t>(gens.begin(), gens.end()));
}

SubfieldHandle fixed_field(const FieldTower& t, const AutGroup& g, const Subgroup& h) {
  if (!std::is_sorted(h.begin(), h.end()) || !is_subgroup(g, h)) throw NotASubgroup("set is not a subgroup");
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  EchelonBuilder eqs(n);
  for (auto idx : h) {
    const Mat d = mat_sub(k, g.elements[idx].matrix, Mat::identity(n));
    for (std::size_t r = 0; r < n; ++r) {
      Vec row = d.row(r);
      if (!is_zero_vec(row)) eqs.insert(k, row);
    }
  }
  return subfield_from_space(t, kernel_from_echelon(k, eqs));
}

Subgroup stabilizer_subgroup(const FieldTower& t, const AutGroup& g, const SubfieldHandle& m) {
  Subgroup out;
  const auto basis = subfield_basis(m);
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool fixes = true;
    for (const auto& b : basis) fixes = fixes && mat_vec(t.base(), g.elements[i].matrix, b.coords) == b.coords;
    if (fixes) out.push_back(i);
  }
  return out;
}

SkewGroupAlgebra skew_group_algebra(const FieldTower& t, const AutGroup& g, const Subspace& d, const Subgroup& h) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  if (!is_subgroup(g, h)) throw NotASubgroup("skew group algebra over a non-subgroup");
  if (!is_product_closed(k, n, d)) throw NotAnAlgebra("coefficient space is not product-closed");
  const auto dm = basis_matrices(d);
  for (auto idx : h) {
    const Mat& s = g.elements[idx].matrix;
    const Mat& s_inv = g.elements[g.inverse[idx]].matrix;
    for (const auto& x : dm) {
      if (!d.contains(k, mat_mul(k, mat_mul(k, s, x), s_inv).flat())) {
        throw NotStable("conjugation by a group element leaves the coefficient algebra");
      }
    }
  }
  EchelonBuilder span(n * n);
  for (auto idx : h) {
    for (const auto& x : dm) span.insert(k, mat_mul(k, x, g.elements[idx].matrix).flat());
  }
  SkewGroupAlgebra out;
  out.coefficients = d;
  out.group = h;
  out.span = span.finish();
  out.direct = out.span.dim() == d.dim() * h.size();
  return out;
}

bool g_stable_check(const FieldTower& t, const AutGroup& g, const Subspace& a) {
  const BaseField& k = t.base();
  const auto am = basis_matrices(a);
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    const Mat& s = g.elements[idx].matrix;
    const Mat& s_inv = g.elements[g.inverse[idx]].matrix;
    for (const auto& x : am) {
      if (!a.contains(k, mat_mul(k, mat_mul(k, s, x), s_inv).flat())) return false;
    }
  }
  return true;
}

std::vector<SubgroupInfo> subgroup_lattice(const AutGroup& g) {
  if (g.order() > 64) throw GroupTooLarge("group of order " + std::to_string(g.order()) + " exceeds 64");
  std::set<Subgroup> seen{Subgroup{0}};
  std::vector<Subgroup> queue{Subgroup{0}};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (std::binary_search(queue[i].begin(), queue[i].end(), x)) continue;
      std::set<std::size_t> s(queue[i].begin(), queue[i].end());
      s.insert(x);
      Subgroup h = close(g, std::move(s));
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  std::vector<SubgroupInfo> out;
  for (const auto& h : queue) {
    bool normal = true;
    for (std::size_t x = 0; x < g.order() && normal; ++x) {
      for (auto y : h) {
        const std::size_t conj = g.table[g.table[x][y]][g.inverse[x]];
        if (!std::binary_search(h.begin(), h.end(), conj)) {
          normal = false;
          break;
        }
      }
    }
    out.push_back(SubgroupInfo{h, normal});
  }
  std::sort(out.begin(), out.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
    return a.elements.size() != b.elements.size() ? a.elements.size() < b.elements.size() : a.elements < b.elements;
  });
  return out;
}

Classification classify_extension(const FieldTower& t, const AutGroup& g, const DiffOpAlgebra& d) {
  const std::size_t n = t.degree();
  Classification c;
  c.degree = n;
  c.group_order = g.order();
  c.completeness = g.completeness;
  c.dim_diffops = d.total.dim();
  c.separable = c.dim_diffops == n;
  c.purely_inseparable = is_purely_inseparable_tower(t);
  c.d_ext = c.dim_diffops == n * n;
  c.dim_l_skew = skew_group_algebra(t, g, endo_algebra(t).mult_space, g.all()).span.dim();
  c.g_ext = c.dim_l_skew == n * n;
  c.dim_d_skew = skew_group_algebra(t, g, d.total, g.all()).span.dim();
  c.b_ext = c.dim_d_skew == n * n;
  const SubfieldHandle fixed = fixed_field(t, g, g.all());
  const SubfieldHandle pi = purely_inseparable_part_semilinear(t);
  c.fixed_degree = fixed.degree();
  c.pi_degree = pi.degree();
  c.normal = fixed == pi;
  c.galois = c.separable && c.normal;

  const auto dims = "n=" + std::to_string(n) + " |G|=" + std::to_string(c.group_order) +
                    " dim D=" + std::to_string(c.dim_diffops) + " dim LG=" + std::to_string(c.dim_l_skew) +
                    " dim DG=" + std::to_string(c.dim_d_skew) + " [L^G:K]=" + std::to_string(c.fixed_degree) +
                    " [L^pi:K]=" + std::to_string(c.pi_degree);
  if (c.galois != c.g_ext) throw EquivalenceViolation("Galois and G-extension disagree (" + dims + ")");
  if (c.purely_inseparable != c.d_ext) {
    throw EquivalenceViolation("purely inseparable and D-extension disagree (" + dims + ")");
  }
  if (c.normal != c.b_ext) throw EquivalenceViolation("normal and B-extension disagree (" + dims + ")");
  return c;
}

Classification classify_extension(const FieldTower& t) {
  return classify_extension(t, enumerate_automorphisms(t), diffop_filtration(t));
}

SubfieldHandle purely_inseparable_part(const FieldTower& t, PiStrategy strategy, const AutGroup* g,
                                       bool normal_verified) {
  if (strategy == PiStrategy::Semilinear) return purely_inseparable_part_semilinear(t);
  if (!g || !normal_verified) {
    throw StrategyPreconditionFailed("the automorphism strategy needs a group and a verified normal extension");
  }
  return fixed_field(t, *g, g->all());
}

}  // namespace galtower
