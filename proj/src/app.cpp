/**************************************************************************
 * src/app.cpp
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

#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "galtower/cli.hpp"
#include "galtower/errors.hpp"

namespace galtower {

namespace {

struct Options {
  std::string tower_path;
  std::string out_path;
  std::string cache_dir;
  std::string format = "text";
  std::vector<std::string> subfields;
  std::string suite = "auto";
};

Suite suite_from(const std::string& s) {
  if (s == "normal") return Suite::Normal;
  if (s == "pi") return Suite::PurelyInseparable;
  if (s == "galois") return Suite::Galois;
  if (s == "full") return Suite::Full;
  return Suite::Auto;
}

std::vector<NamedSubfield> requested_subfields(const FieldTower& t, const TowerFile& f, const Options& o) {
  if (o.subfields.empty()) return file_subfields(t, f);
  std::vector<NamedSubfield> out;
  for (const auto& s : o.subfields) out.push_back(resolve_subfield(t, f, s));
  return out;
}

Json run_command(const std::string& command, const ExtensionAnalysis& a, const TowerFile& f, const Options& o) {
  const FieldTower& t = a.tower();
  Json payload;
  if (command == "analyze") {
    const LargestSubfields l = largest_subfields(a);
    payload["classification"] = classification_json(a.classification());
    payload["largest_subfields"] = largest_json(t, l);
    payload["degrees"] = Json{{"L", t.degree()},
                              {"L_pi", l.pi.degree()},
                              {"L_sep", l.sep.degree()},
                              {"L_gal", l.gal ? Json(l.gal->degree()) : Json(nullptr)}};
    if (f.designated) {
      for (const auto& s : file_subfields(t, f)) {
        if (s.label == *f.designated) payload["designated"] = subfield_json(t, s.subfield, s.label);
      }
    }
  } else if (command == "group") {
    payload = group_json(t, a.group());
    if (a.group().order() <= 64) {
      Json lattice = Json::array();
      for (const auto& s : subgroup_lattice(a.group())) {
        Json elements = Json::array();
        for (auto e : s.elements) elements.push_back(e);
        lattice.push_back(Json{{"elements", elements},
                               {"normal", s.normal},
                               {"fixed_field_degree", fixed_field(t, a.group(), s.elements).degree()}});
      }
      payload["subgroups"] = lattice;
    }
  } else if (command == "diffops") {
    Json list = Json::array();
    std::vector<NamedSubfield> over{{"K", base_subfield(t)}};
    if (!o.subfields.empty()) over = requested_subfields(t, f, o);
    for (const auto& s : over) {
      Json j = diffops_json(t, a.relative_diffops(s.subfield), s.label);
      j["dim_derivations"] = derivations(t, s.subfield).dim();
      list.push_back(std::move(j));
    }
    payload["diffops"] = list;
  } else if (command == "correspond") {
    Json records = Json::array();
    for (const auto& s : requested_subfields(t, f, o)) records.push_back(record_json(t, verify_roundtrip(a, s.subfield, s.label)));
    payload["records"] = records;
  } else {
    payload = theorem_report_json(t, run_report(a, requested_subfields(t, f, o), suite_from(o.suite)));
  }
  return payload;
}

std::vector<std::string> report_warnings(const ExtensionAnalysis& a) {
  std::vector<std::string> w;
  if (a.group().completeness == Completeness::LowerBound) {
    w.push_back("automorphism search is not proven complete; |G| = " + std::to_string(a.group().order()) +
                " is a lower bound");
  }
  for (const auto& name : a.tower().unverified_generators()) {
    w.push_back("irreducibility of the relation for " + name + " is not verified");
  }
  return w;
}

int emit(const Json& report, const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = o.format == "structured" ? report.dump(2) + "\n" : render_text(report);
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Galois-type correspondences for binomial field towers", "galtower"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options o;
  app.add_option("--out", o.out_path, "Write the report to this file");
  app.add_option("--cache", o.cache_dir, "Cache directory for multiplication tables and operator bases");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "Classification, largest subfields and degrees"},
      {"group", "Automorphism group, Cayley table and subgroup lattice"},
      {"diffops", "Differential operator algebra dimensions and filtration"},
      {"correspond", "Correspondence records for the given subfields"},
      {"verify", "Full theorem report"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("tower", o.tower_path, "Tower file")->required();
    if (name == "correspond" || name == "diffops" || name == "verify") {
      CLI::Option* opt = sub->add_option("--subfield", o.subfields, "Subfield name or comma separated generators");
      if (name == "correspond") opt->required();
    }
    if (name == "verify") {
      sub->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember({"auto", "normal", "pi", "galois", "full"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const TowerFile f = parse_tower_file(o.tower_path);
    FieldTower t = FieldTower::build(f.spec);
    std::unique_ptr<FileCache> cache;
    if (!o.cache_dir.empty()) {
      cache = std::make_unique<FileCache>(o.cache_dir, err);
      cache->sync_multiplication_table(t);
    }
    const ExtensionAnalysis a(std::move(t), cache.get());
    const Json report = finish_report(command, a.tower(), run_command(command, a, f, o), report_warnings(a));
    if (const int rc = emit(report, o, out, err); rc != 0) return rc;
    return report["summary"]["failed"].get<std::size_t>() == 0 ? 0 : 1;
  } catch (const Error& e) {
    Json block{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
    if (o.format == "structured") {
      err << block.dump(2) << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  }
}

}  // namespace galtower
