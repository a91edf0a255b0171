/**************************************************************************
 * tests/acceptance.cpp
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

// Acceptance run: one PASS/FAIL line per criterion. Quantities are
// recomputed from matrices where possible instead of trusting the
// library's own check lists.

#include <algorithm>
#include <array>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galtower/cli.hpp"
#include "galtower/operators.hpp"
#include "galtower/symmetry.hpp"
#include "galtower/unipoly.hpp"
#include "test_support.hpp"

namespace galtower {
namespace {

namespace fs = std::filesystem;

const fs::path kTowers = GALTOWER_TOWER_DIR;

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    expect(got == want, s.str());
  }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

struct Loaded {
  TowerFile file;
  FieldTower tower;
};

Loaded load(const std::string& name) {
  TowerFile f = parse_tower_file(kTowers / name);
  FieldTower t = FieldTower::build(f.spec);
  return {std::move(f), std::move(t)};
}

SubfieldHandle gen(const FieldTower& t, const std::string& expr) { return subfield_generate(t, {t.parse(expr)}); }

std::size_t n_squared(const FieldTower& t) { return t.degree() * t.degree(); }

// M as multiplication operators, built directly from the subfield basis.
Subspace mult_of(const FieldTower& t, const SubfieldHandle& m) {
  std::vector<Mat> mats;
  for (const auto& b : m.space.basis()) mats.push_back(t.mult_matrix(TowerElem{b}));
  return span_of_matrices(t.base(), t.degree(), mats);
}

// Common fixed vectors of the given automorphisms.
Subspace fixed_vectors(const FieldTower& t, const AutGroup& g, const Subgroup& h) {
  const BaseField& k = t.base();
  const std::size_t n = t.degree();
  std::vector<Vec> rows;
  for (auto e : h) {
    const Mat d = mat_sub(k, g.elements[e].matrix, Mat::identity(n));
    for (std::size_t r = 0; r < n; ++r) rows.push_back(d.row(r));
  }
  return kernel_of_rows(k, n, rows);
}

// span{d * sigma}, straight from the definition.
std::size_t skew_span_dim(const FieldTower& t, const AutGroup& g, const Subspace& d) {
  std::vector<Mat> mats;
  for (const auto& a : basis_matrices(d)) {
    for (const auto& s : g.elements) mats.push_back(mat_mul(t.base(), a, s.matrix));
  }
  return span_of_matrices(t.base(), t.degree(), mats).dim();
}

// Products of the two bases are independent.
bool linearly_disjoint(const FieldTower& t, const SubfieldHandle& a, const SubfieldHandle& b) {
  std::vector<Vec> products;
  for (const auto& x : a.space.basis()) {
    for (const auto& y : b.space.basis()) products.push_back(t.mul(TowerElem{x}, TowerElem{y}).coords);
  }
  const Subspace s = Subspace::span(t.base(), t.degree(), products);
  return s.dim() == a.degree() * b.degree();
}

std::string triple_text(const std::size_t (&tr)[3]) {
  return "(" + std::to_string(tr[0]) + "," + std::to_string(tr[1]) + "," + std::to_string(tr[2]) + ")";
}

// K = F_3(x, y), L = K(y^(1/3), x^(1/2)).
void ac1(Criterion& c) {
  Loaded l = load("mixed.tower");
  const ExtensionAnalysis a(std::move(l.tower));
  const FieldTower& t = a.tower();
  const BaseField& k = t.base();
  c.expect_eq(t.degree(), 6u, "n");
  c.expect_eq(a.group().order(), 2u, "|G|");
  c.expect(a.group().completeness == Completeness::Proven, "group search complete");
  c.expect_eq(a.diffops().total.dim(), 18u, "dim D(L/K)");
  c.expect_eq(skew_span_dim(t, a.group(), a.diffops().total), 36u, "dim span(D x G)");
  const Classification& cl = a.classification();
  c.expect(cl.normal && cl.b_ext, "normal and B-extension");

  const SubfieldHandle lpi = gen(t, "u");
  const SubfieldHandle lgal = gen(t, "v");
  c.expect_eq(lpi.degree(), 3u, "[K(y^(1/3)):K]");
  c.expect_eq(lgal.degree(), 2u, "[K(x^(1/2)):K]");
  const LargestSubfields ls = largest_subfields(a);
  c.expect(ls.pi == lpi, "L^pi = K(y^(1/3))");
  c.expect(ls.gal && *ls.gal == lgal, "L^gal = K(x^(1/2))");
  c.expect(constants(t, a.diffops().dplus) == lgal, "L^(D+) = K(x^(1/2))");
  // fixed field of G is L^pi for a normal extension
  c.expect(fixed_vectors(t, a.group(), a.group().all()) == lpi.space, "L^G = L^pi");
  c.expect(linearly_disjoint(t, lpi, lgal) && lpi.degree() * lgal.degree() == t.degree(), "L = L^pi (x) L^gal");

  const std::vector<std::pair<SubfieldHandle, std::array<std::size_t, 3>>> cases{
      {base_subfield(t), {1, 2, 18}}, {lpi, {3, 2, 6}}, {lgal, {2, 1, 18}}, {whole_field(t), {6, 1, 6}}};
  for (const auto& [m, want] : cases) {
    const CorrespondenceRecord r = verify_roundtrip(a, m);
    const std::string tag = "M of degree " + std::to_string(m.degree());
    c.expect(r.passed(), tag + ": round trip checks");
    c.expect(r.recovered == m, tag + ": recovered subfield");
    c.expect_eq(triple_text(r.triple), triple_text({want[0], want[1], want[2]}), tag + ": triple");
    c.expect_eq(r.triple[0] * r.triple[1] * r.triple[2], 36u, tag + ": product");
    // the operator dimension again, from C_D(M)
    const Subspace rel = subspace_intersect(k, centralizer(k, t.degree(), basis_matrices(mult_of(t, m))), a.diffops().total);
    c.expect_eq(rel.dim(), want[2], tag + ": dim C_D(M)");
    c.expect_eq(stabilizer_subgroup(t, a.group(), m).size(), want[1], tag + ": |G(L/M)|");
  }
}

void pi_tower(Criterion& c, const std::string& file, std::size_t n, const std::vector<std::string>& names) {
  Loaded l = load(file);
  const TowerFile f = l.file;
  const ExtensionAnalysis a(std::move(l.tower));
  const FieldTower& t = a.tower();
  const BaseField& k = t.base();
  const std::string tag = file + ": ";
  c.expect_eq(t.degree(), n, tag + "n");
  c.expect(a.classification().purely_inseparable, tag + "purely inseparable");
  const Subspace& d = a.diffops().total;
  c.expect(d == Subspace::full(k, n * n), tag + "D(L/K) = End_K(L)");
  c.expect_eq(d.dim(), n * n, tag + "dim D");
  const Subspace kmult = mult_of(t, base_subfield(t));
  c.expect(center(k, n, d) == kmult, tag + "Z(D) = K");
  c.expect(centralizer(k, n, basis_matrices(d)) == kmult, tag + "End over D = K");

  std::vector<NamedSubfield> fields{{"K", base_subfield(t)}};
  for (const auto& name : names) fields.push_back(resolve_subfield(t, f, name));
  fields.push_back({"L", whole_field(t)});
  for (const auto& [label, m] : fields) {
    const std::string at = tag + "M = " + label + ": ";
    const Subspace mm = mult_of(t, m);
    const Subspace cd = subspace_intersect(k, centralizer(k, n, basis_matrices(mm)), d);
    const Subspace rel = a.relative_diffops(m).total;
    c.expect(rel == cd, at + "D(L/M) = C_D(M)");
    c.expect(center(k, n, rel) == mm, at + "center = M");
    const std::size_t lm = n / m.degree();
    c.expect_eq(rel.dim(), lm * lm * m.degree(), at + "dim D(L/M)");
    const Subspace back = subspace_intersect(k, centralizer(k, n, basis_matrices(rel)), d);
    c.expect(back == mm, at + "C_D(D(L/M)) = M");
    c.expect(subspace_intersect(k, centralizer(k, n, basis_matrices(back)), d) == rel, at + "double centralizer");
  }
}

void ac2(Criterion& c) {
  pi_tower(c, "pi2.tower", 2, {});
  pi_tower(c, "nonmodular.tower", 8, {"Kz", "Kz2", "Kw"});
}

// Biquadratic Kummer tower over F_3(x, y).
void ac3(Criterion& c) {
  Loaded l = load("kummer.tower");
  const ExtensionAnalysis a(std::move(l.tower));
  const FieldTower& t = a.tower();
  const BaseField& k = t.base();
  const AutGroup& g = a.group();
  c.expect_eq(g.order(), 4u, "|G|");
  const auto lattice = subgroup_lattice(g);
  c.expect_eq(lattice.size(), 5u, "subgroups");

  // the five intermediate fields, listed by hand
  const std::vector<SubfieldHandle> fields{base_subfield(t), gen(t, "s"), gen(t, "r"), gen(t, "s*r"), whole_field(t)};
  std::vector<Subspace> fixed_spaces;
  for (const auto& s : lattice) {
    const Subspace fixed = fixed_vectors(t, g, s.elements);
    if (std::find(fixed_spaces.begin(), fixed_spaces.end(), fixed) == fixed_spaces.end()) fixed_spaces.push_back(fixed);
    const SubfieldHandle m = fixed_field(t, g, s.elements);
    c.expect(m.space == fixed, "fixed field of a subgroup");
    c.expect(stabilizer_subgroup(t, g, m) == s.elements, "stabilizer of fixed field");
    c.expect_eq(m.degree() * s.elements.size(), 4u, "[M:K] |G(L/M)|");
    c.expect(std::any_of(fields.begin(), fields.end(), [&](const SubfieldHandle& f) { return f.space == fixed; }),
             "fixed field is one of the listed subfields");
  }
  c.expect_eq(fixed_spaces.size(), 5u, "distinct fixed fields");
  for (const auto& m : fields) {
    const Subgroup h = stabilizer_subgroup(t, g, m);
    c.expect(fixed_field(t, g, h) == m, "fixed field of the stabilizer");
    c.expect_eq(m.degree() * h.size(), 4u, "[M:K] |G(L/M)| per subfield");
  }
  const Subspace lmult = mult_of(t, whole_field(t));
  c.expect_eq(skew_span_dim(t, g, lmult), 16u, "dim L x G");
  c.expect(skew_group_algebra(t, g, lmult, g.all()).span == Subspace::full(k, 16), "L x G = End_K(L)");
}

// K = F_2(x), L = K(x^(1/3)).
void ac4(Criterion& c) {
  Loaded l = load("nonnormal.tower");
  const ExtensionAnalysis a(std::move(l.tower));
  const FieldTower& t = a.tower();
  const Classification& cl = a.classification();
  c.expect(cl.separable, "separable");
  c.expect_eq(a.group().order(), 1u, "|G|");
  c.expect(a.diffops().total == mult_of(t, whole_field(t)), "D = L");
  const std::size_t skew = skew_span_dim(t, a.group(), a.diffops().total);
  c.expect_eq(skew, 3u, "dim span(D x G)");
  c.expect(skew != n_squared(t), "span(D x G) is not End_K(L)");
  c.expect(!cl.normal && !cl.b_ext, "classified non-normal");
  const LargestSubfields ls = largest_subfields(a);
  c.expect(ls.pi == base_subfield(t), "L^pi = K");
  c.expect(ls.sep == whole_field(t), "L^sep = L");
}

// f_sep built as a product of distinct monic linear factors, so it is
// separable by construction; f = f_sep(t^(p^n)) is assembled by hand.
void ac5(Criterion& c) {
  using KPoly = UniPoly<BaseField>;
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> degree(1, 3);
  int generated = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const BaseField k = testing::make_base(p, {"x"});
    for (int i = 0; i < 25; ++i, ++generated) {
      const int d = degree(rng);
      std::vector<FieldValue> roots;
      while (static_cast<int>(roots.size()) < d) {
        const FieldValue r = testing::random_value(k, rng);
        if (std::none_of(roots.begin(), roots.end(), [&](const FieldValue& s) { return s == r; })) roots.push_back(r);
      }
      std::vector<FieldValue> fsep{k.one()};
      for (const auto& r : roots) {
        std::vector<FieldValue> next(fsep.size() + 1, FieldValue{});
        for (std::size_t j = 0; j < fsep.size(); ++j) {
          next[j + 1] = k.add(next[j + 1], fsep[j]);
          next[j] = k.sub(next[j], k.mul(r, fsep[j]));
        }
        fsep = std::move(next);
      }
      const unsigned n = static_cast<unsigned>(i % 3);
      std::size_t stride = 1;
      for (unsigned j = 0; j < n; ++j) stride *= p;
      std::vector<FieldValue> f((fsep.size() - 1) * stride + 1, FieldValue{});
      for (std::size_t j = 0; j < fsep.size(); ++j) f[j * stride] = fsep[j];

      const std::string tag = "F_" + std::to_string(p) + "(x) input " + std::to_string(i) + ": ";
      const KPoly fp{f};
      const auto sp = separable_presentation(k, fp);
      c.expect_eq(sp.n, n, tag + "n");
      c.expect(sp.f_sep == KPoly{fsep}, tag + "f_sep");
      c.expect(expand_presentation(k, sp) == fp, tag + "reconstruction");
    }
  }
  c.expect_eq(generated, 50, "inputs");
}

struct PropertyTower {
  std::string file;
  std::vector<std::string> subfields;  // generator expressions, nested or not
};

void ac6(Criterion& c) {
  const std::vector<PropertyTower> towers{{"mixed.tower", {"u", "v", "u*v"}},
                                          {"pi2.tower", {"s"}},
                                          {"nonmodular.tower", {"z", "z^2", "w", "z^2,w"}},
                                          {"kummer.tower", {"s", "r", "s*r"}},
                                          {"galois.tower", {"s"}},
                                          {"nonnormal.tower", {"r"}}};
  for (const auto& pt : towers) {
    Loaded l = load(pt.file);
    const ExtensionAnalysis a(std::move(l.tower));
    const FieldTower& t = a.tower();
    const BaseField& k = t.base();
    const std::size_t n = t.degree();
    const std::string tag = pt.file + ": ";
    const DiffOpAlgebra& d = a.diffops();

    std::vector<SubfieldHandle> fields{base_subfield(t), whole_field(t)};
    for (const auto& s : pt.subfields) fields.push_back(resolve_subfield(t, l.file, s).subfield);

    // triple centralizer
    for (const auto& m : fields) {
      const auto c1 = centralizer(k, n, basis_matrices(mult_of(t, m)));
      const auto c3 = centralizer(k, n, basis_matrices(centralizer(k, n, basis_matrices(c1))));
      c.expect(c3 == c1, tag + "C(C(C(S))) = C(S)");
    }

    // Grassmann formula over layers and subfield operator spaces
    std::vector<Subspace> spaces = d.layers;
    spaces.push_back(d.dplus);
    for (const auto& m : fields) spaces.push_back(mult_of(t, m));
    for (const auto& u : spaces) {
      for (const auto& v : spaces) {
        const std::size_t lhs = subspace_sum(k, u, v).dim() + subspace_intersect(k, u, v).dim();
        c.expect_eq(lhs, u.dim() + v.dim(), tag + "dim(U+V) + dim(U n V)");
      }
    }

    // filtration: strictly increasing, nested, stable, and equal to the
    // recursion run over every basis element
    for (const auto& m : fields) {
      const DiffOpAlgebra& rel = a.relative_diffops(m);
      for (std::size_t i = 1; i < rel.layers.size(); ++i) {
        c.expect(rel.layers[i - 1].dim() < rel.layers[i].dim(), tag + "layers strictly increase");
        c.expect(subspace_contains(k, rel.layers[i], rel.layers[i - 1]), tag + "layers nested");
      }
      c.expect(rel.layers.front() == mult_of(t, whole_field(t)), tag + "first layer is L");
      c.expect(rel.layers.back() == rel.total, tag + "last layer is the total");
      c.expect(diffop_total_all_basis(t, m) == rel.total, tag + "filtration stabilizes at the total");
      c.expect(is_product_closed(k, n, rel.total), tag + "operators closed under composition");
    }

    // D = L + D+ as a direct sum; D+ kills 1
    const Subspace lmult = mult_of(t, whole_field(t));
    c.expect(subspace_intersect(k, lmult, d.dplus).dim() == 0, tag + "L n D+ = 0");
    c.expect(subspace_sum(k, lmult, d.dplus) == d.total, tag + "L + D+ = D");
    const Vec one = t.one().coords;
    for (const auto& op : basis_matrices(d.dplus)) c.expect(is_zero_vec(mat_vec(k, op, one)), tag + "D+ annihilates 1");

    // Leibniz rule for every computed derivation, on all basis pairs
    for (const auto& m : fields) {
      for (const auto& op : basis_matrices(derivations(t, m))) {
        const auto apply = [&](const TowerElem& x) { return TowerElem{mat_vec(k, op, x.coords)}; };
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const TowerElem ei = t.basis_elem(i);
            const TowerElem ej = t.basis_elem(j);
            const TowerElem lhs = apply(t.mul(ei, ej));
            const TowerElem rhs = t.add(t.mul(ei, apply(ej)), t.mul(apply(ei), ej));
            c.expect(lhs == rhs, tag + "Leibniz");
          }
        }
        for (const auto& b : m.space.basis()) c.expect(is_zero_vec(mat_vec(k, op, b)), tag + "derivation kills M");
      }
    }

    // antitone correspondence: M1 <= M2 gives D(L/M2) <= D(L/M1)
    for (const auto& m1 : fields) {
      for (const auto& m2 : fields) {
        if (!subspace_contains(k, m2.space, m1.space)) continue;
        c.expect(subspace_contains(k, a.relative_diffops(m1).total, a.relative_diffops(m2).total),
                 tag + "antitone operators");
        if (!a.classification().normal) continue;
        c.expect(subspace_contains(k, forward_map(a, m1), forward_map(a, m2)), tag + "antitone forward map");
      }
    }
  }
}

std::string run_verify(const std::string& file) {
  const std::string path = (kTowers / file).string();
  const std::vector<std::string> args{"galtower", "verify", path, "--suite", "full", "--format", "structured"};
  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void ac7(Criterion& c) {
  for (const char* file : {"mixed.tower", "pi2.tower", "nonmodular.tower", "kummer.tower", "galois.tower", "nonnormal.tower"}) {
    const std::string first = run_verify(file);
    const std::string second = run_verify(file);
    c.expect(!first.empty(), std::string(file) + ": report produced");
    c.expect(first == second, std::string(file) + ": byte-identical reports");
  }
}

}  // namespace
}  // namespace galtower

int main() {
  using galtower::Criterion;
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"AC1 worked example F_3(x,y)(y^(1/3), x^(1/2))", galtower::ac1},
      {"AC2 purely inseparable suite", galtower::ac2},
      {"AC3 classical Galois suite", galtower::ac3},
      {"AC4 non-normal detection", galtower::ac4},
      {"AC5 separable presentation", galtower::ac5},
      {"AC6 property suites", galtower::ac6},
      {"AC7 determinism", galtower::ac7}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    std::string error;
    try {
      run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool pass = error.empty() && c.failures().empty();
    std::printf("%s %s (%zu checks)\n", pass ? "PASS" : "FAIL", name.c_str(), c.checks());
    if (!error.empty()) std::printf("  exception: %s\n", error.c_str());
    for (std::size_t i = 0; i < c.failures().size() && i < 10; ++i) std::printf("  %s\n", c.failures()[i].c_str());
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
