/**************************************************************************
 * src/report.cpp
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

#include <algorithm>

#include "galtower/cli.hpp"

namespace galtower {

namespace {

Json string_array(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json index_array(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

const char* completeness_name(Completeness c) { return c == Completeness::Proven ? "proven" : "lower-bound"; }

bool is_check(const Json& j) { return j.is_object() && j.contains("passed") && j.contains("asserted"); }

bool is_scalar_array(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (is_check(v)) {
      out += pad + (v["passed"].get<bool>() ? "[PASS] " : v["asserted"].get<bool>() ? "[FAIL] " : "[INFO] ") +
             v["name"].get<std::string>() + ": " + v["computed"].get<std::string>() + " (expected " +
             v["expected"].get<std::string>() + ")\n";
    } else if (v.is_primitive()) {
      out += pad + key + ": " + scalar_text(v) + "\n";
    } else if (is_scalar_array(v)) {
      std::string items;
      for (const auto& e : v) items += (items.empty() ? "" : ", ") + scalar_text(e);
      out += pad + key + ": [" + items + "]\n";
    } else if (!j.is_object() && v.is_object()) {
      // list item: first line carries the dash
      std::string item;
      render(v, indent + 2, item);
      if (item.size() >= pad.size() + 2) item.replace(0, pad.size() + 2, pad + "- ");
      out += item;
    } else {
      out += pad + key + ":\n";
      render(v, indent + 2, out);
    }
  }
}

void count(const Json& j, std::size_t& total, std::size_t& failed) {
  if (is_check(j)) {
    if (j["asserted"].get<bool>()) {
      ++total;
      failed += j["passed"].get<bool>() ? 0 : 1;
    }
    return;
  }
  if (j.is_structured()) {
    for (const auto& e : j) count(e, total, failed);
  }
}

}  // namespace

Json tower_json(const FieldTower& t) {
  Json j;
  j["p"] = t.characteristic();
  Json modulus = Json::array();
  for (auto c : t.spec().base.ff.modulus) modulus.push_back(c);
  j["modulus"] = modulus;
  j["variables"] = string_array(t.spec().base.variables);
  Json gens = Json::array();
  for (const auto& g : t.spec().generators) {
    gens.push_back(Json{{"name", g.name}, {"power", g.power}, {"value", g.value.to_string()}});
  }
  j["generators"] = gens;
  j["degree"] = t.degree();
  j["irreducibility_unverified"] = string_array(t.unverified_generators());
  return j;
}

Json subfield_json(const FieldTower& t, const SubfieldHandle& m, const std::string& label) {
  Json j;
  if (!label.empty()) j["label"] = label;
  j["degree"] = m.degree();
  Json basis = Json::array();
  for (const auto& b : subfield_basis(m)) basis.push_back(t.to_string(b));
  j["basis"] = basis;
  j["hash"] = subfield_hash(t, m);
  return j;
}

Json checks_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"name", c.name},
                       {"computed", c.computed},
                       {"expected", c.expected},
                       {"passed", c.passed},
                       {"asserted", c.asserted}});
  }
  return out;
}

Json classification_json(const Classification& c) {
  Json j;
  j["degree"] = c.degree;
  j["separable"] = c.separable;
  j["purely_inseparable"] = c.purely_inseparable;
  j["normal"] = c.normal;
  j["galois"] = c.galois;
  j["d_extension"] = c.d_ext;
  j["g_extension"] = c.g_ext;
  j["b_extension"] = c.b_ext;
  j["group_order"] = c.group_order;
  j["group_completeness"] = completeness_name(c.completeness);
  j["dim_diffops"] = c.dim_diffops;
  j["dim_l_skew_span"] = c.dim_l_skew;
  j["dim_d_skew_span"] = c.dim_d_skew;
  j["fixed_field_degree"] = c.fixed_degree;
  j["pi_degree"] = c.pi_degree;
  return j;
}

Json group_json(const FieldTower& t, const AutGroup& g) {
  Json j;
  j["order"] = g.order();
  j["completeness"] = completeness_name(g.completeness);
  Json elements = Json::array();
  for (std::size_t e = 0; e < g.order(); ++e) {
    Json images;
    for (std::size_t i = 0; i < t.num_generators(); ++i) {
      images[t.spec().generators[i].name] = t.to_string(g.elements[e].images[i]);
    }
    elements.push_back(Json{{"index", e}, {"images", images}});
  }
  j["elements"] = elements;
  Json table = Json::array();
  for (const auto& row : g.table) table.push_back(index_array(row));
  j["cayley_table"] = table;
  j["inverse"] = index_array(g.inverse);
  return j;
}

Json diffops_json(const FieldTower& t, const DiffOpAlgebra& d, const std::string& label) {
  Json j;
  j["relative_to"] = subfield_json(t, d.relative_to, label);
  j["dim_diffops"] = d.total.dim();
  j["dim_dplus"] = d.dplus.dim();
  Json layers = Json::array();
  for (const auto& l : d.layers) layers.push_back(l.dim());
  j["layer_dims"] = layers;
  j["order"] = d.order();
  return j;
}

Json record_json(const FieldTower& t, const CorrespondenceRecord& r) {
  Json j;
  j["subfield"] = subfield_json(t, r.subfield, r.label);
  j["group"] = index_array(r.group);
  j["dim_forward"] = r.dim_forward;
  j["dim_diffops"] = r.dim_diffops;
  j["triple"] = Json::array({r.triple[0], r.triple[1], r.triple[2]});
  j["recovered"] = subfield_json(t, r.recovered);
  j["checks"] = checks_json(r.checks);
  j["passed"] = r.passed();
  return j;
}

Json largest_json(const FieldTower& t, const LargestSubfields& l) {
  Json j;
  j["pi"] = subfield_json(t, l.pi);
  j["sep"] = subfield_json(t, l.sep);
  j["gal"] = l.gal ? subfield_json(t, *l.gal) : Json(nullptr);
  j["checks"] = checks_json(l.checks);
  j["notes"] = string_array(l.notes);
  return j;
}

Json theorem_report_json(const FieldTower& t, const TheoremReport& r) {
  Json j;
  j["classification"] = classification_json(r.classification);
  j["suites"] = string_array(r.suites_run);
  j["largest_subfields"] = largest_json(t, r.largest);
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(record_json(t, rec));
  j["correspondence"] = records;
  Json normal = Json::array();
  for (const auto& rec : r.normal_records) {
    normal.push_back(Json{{"subfield", subfield_json(t, rec.subfield, rec.label)},
                          {"m_pi", subfield_json(t, rec.m_pi)},
                          {"m_gal", subfield_json(t, rec.m_gal)},
                          {"checks", checks_json(rec.checks)}});
  }
  j["normal_subfields"] = normal;
  Json pi;
  pi["tower_checks"] = checks_json(r.pi_tower_checks);
  Json pi_records = Json::array();
  for (const auto& rec : r.pi_records) {
    pi_records.push_back(Json{{"subfield", subfield_json(t, rec.subfield, rec.label)}, {"checks", checks_json(rec.checks)}});
  }
  pi["subfields"] = pi_records;
  j["purely_inseparable"] = pi;
  if (r.galois) {
    Json g;
    Json subgroups = Json::array();
    for (const auto& s : r.galois->subgroups) {
      subgroups.push_back(Json{{"subgroup", index_array(s.subgroup)},
                               {"normal", s.normal},
                               {"fixed_field", subfield_json(t, s.fixed)},
                               {"checks", checks_json(s.checks)}});
    }
    g["subgroups"] = subgroups;
    g["checks"] = checks_json(r.galois->checks);
    j["galois"] = g;
  } else {
    j["galois"] = nullptr;
  }
  j["checks"] = checks_json(r.checks);
  return j;
}

Json finish_report(const std::string& command, const FieldTower& t, Json payload, std::vector<std::string> warnings) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["tower_hash"] = t.hash();
  j["tower"] = tower_json(t);
  j["result"] = std::move(payload);
  j["warnings"] = string_array(warnings);
  const auto [total, failed] = count_checks(j["result"]);
  j["summary"] = Json{{"checks", total}, {"failed", failed}, {"passed", failed == 0}};
  return j;
}

std::pair<std::size_t, std::size_t> count_checks(const Json& j) {
  std::size_t total = 0;
  std::size_t failed = 0;
  count(j, total, failed);
  return {total, failed};
}

std::string render_text(const Json& j) {
  std::string out;
  render(j, 0, out);
  return out;
}

}  // namespace galtower
