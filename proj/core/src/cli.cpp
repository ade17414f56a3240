#include "skelcov/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skelcov/fixtures.hpp"
#include "skelcov/galois.hpp"
#include "skelcov/rigid.hpp"

namespace skelcov::cli {

namespace {

void emit(const Json& j, const Workspace& ws, std::ostream& out) {
  if (ws.format == "table") {
    if (j.is_object()) {
      for (const auto& [key, value] : j.items()) {
        if (value.is_string())
          out << key << ": " << value.get<std::string>() << "\n";
        else
          out << key << ": " << value.dump() << "\n";
      }
      return;
    }
  }
  out << j.dump(2) << "\n";
}

std::string detect_kind(const Json& j) {
  if (j.is_array()) return "divisor";
  if (j.contains("morphism")) return "morphism";
  if (j.contains("base") && j.contains("degree")) return "covering";
  if (j.contains("residue_char")) return "complex";
  if (j.contains("vertices")) {
    for (const auto& jv : j["vertices"])
      if (jv.contains("curve")) return "complex";
    return "graph";
  }
  throw std::invalid_argument("unrecognized input object");
}

MetrizedComplex load_complex(const Workspace& ws, const Json& j) {
  MetrizedComplex c = complex_or_graph_from_json(j);
  if (ws.residue_char_override)
    return MetrizedComplex(c.graph(), c.curves(), *ws.residue_char_override);
  return c;
}

SubcomplexSelection parse_selection(const MetrizedComplex& c, const std::string& text) {
  if (text == "all" || text.empty()) return c.full_selection();
  SubcomplexSelection s;
  std::vector<std::string> groups;
  std::string current;
  for (char ch : text + ";") {
    if (ch == ';') {
      groups.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  auto split = [](const std::string& g) {
    std::vector<std::string> items;
    std::string item;
    for (char ch : g + ",") {
      if (ch == ',') {
        if (!item.empty()) items.push_back(item);
        item.clear();
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        item += ch;
      }
    }
    return items;
  };
  if (!groups.empty())
    for (const auto& v : split(groups[0])) s.vertices.insert(v);
  if (groups.size() > 1)
    for (const auto& e : split(groups[1])) s.edges.insert(e);
  if (groups.size() > 2)
    for (const auto& l : split(groups[2])) s.leaves.insert(l);
  return s;
}

Json classes_to_json(const std::vector<CoveringRep>& reps) {
  Json out = Json::array();
  for (const auto& rep : reps) {
    Json voltages = Json::object();
    for (const auto& eid : rep.cotree_edges())
      voltages[eid] = rep.voltage(eid).one_line();
    Json jc;
    jc["voltages"] = voltages;
    out.push_back(jc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// subcommand handlers

int cmd_validate(Workspace& ws, const std::string& path, std::ostream& out) {
  const Json& j = ws.load(path);
  std::string kind = detect_kind(j);
  ValidationReport report;
  std::vector<std::string> non_essential;
  if (kind == "graph") {
    AugmentedMetricGraph g = graph_from_json(j);
    report = g.validate();
    non_essential = g.non_essential_vertices();
  } else if (kind == "complex") {
    MetrizedComplex c = load_complex(ws, j);
    report = c.validate();
    non_essential = c.graph().non_essential_vertices();
  } else if (kind == "morphism") {
    report = morphism_from_json(j).validate();
  } else if (kind == "covering") {
    CoveringInput in = covering_from_json(j);
    report = in.rep.base().validate();
  } else {
    throw std::invalid_argument("cannot validate an object of kind '" + kind + "'");
  }
  Json result;
  result["kind"] = kind;
  result.update(to_json(report));
  if (!non_essential.empty()) result["non_essential_vertices"] = non_essential;
  emit(result, ws, out);
  return report.ok() ? kOk : kValidationFailure;
}

int cmd_check_morphism(Workspace& ws, const std::string& path, bool skip_rh,
                       std::ostream& out) {
  HarmonicMorphism phi = morphism_from_json(ws.load(path));
  ValidationReport report = phi.validate();
  Json result;
  result["harmonic"] = report.ok();
  if (report.ok()) {
    result["finite"] = phi.is_finite();
    result["tame"] = phi.is_tame();
    ValidationReport rh = phi.check_local_rh();
    result["local_rh"] = rh.ok();
    result["covering"] = is_covering(phi, !skip_rh);
    result["degree"] = phi.degree();
    if (!rh.ok()) result.update(to_json(rh));
  }
  if (!report.ok()) result.update(to_json(report));
  emit(result, ws, out);
  return report.ok() ? kOk : kValidationFailure;
}

int cmd_degree(Workspace& ws, const std::string& path, std::ostream& out) {
  HarmonicMorphism phi = morphism_from_json(ws.load(path));
  ValidationReport report = phi.validate();
  if (!report.ok()) {
    emit(to_json(report), ws, out);
    return kValidationFailure;
  }
  Json result;
  result["degree"] = phi.degree();
  Json per = Json::object();
  for (const auto& [component, d] : phi.degree_per_component()) per[component] = d;
  result["per_component"] = per;
  emit(result, ws, out);
  return kOk;
}

int cmd_enumerate(Workspace& ws, const std::string& path, int degree, bool connected,
                  std::ostream& out) {
  MetrizedComplex c = load_complex(ws, ws.load(path));
  Json result;
  result["degree"] = degree;
  result["connected_only"] = connected;
  if (c.graph().is_connected()) {
    auto reps = enumerate_coverings(c.graph(), degree, connected, ws.bounds);
    result["count"] = reps.size();
    result["classes"] = classes_to_json(reps);
  } else {
    Json per = Json::array();
    for (const auto& component : c.graph().connected_components()) {
      auto reps = enumerate_coverings(component, degree, connected, ws.bounds);
      Json jc;
      jc["component"] = component.vertices().front().id;
      jc["count"] = reps.size();
      jc["classes"] = classes_to_json(reps);
      per.push_back(jc);
    }
    result["per_component"] = per;
  }
  emit(result, ws, out);
  return kOk;
}

int cmd_count_subgroups(Workspace& ws, long long rank, long long index,
                        std::ostream& out) {
  Json result;
  result["rank"] = rank;
  result["index"] = index;
  result["count"] = count_index_subgroups_free(rank, index);
  emit(result, ws, out);
  return kOk;
}

int cmd_count_abelian(Workspace& ws, long long genus, long long punctures, long long n,
                      std::ostream& out) {
  Json result;
  result["genus"] = genus;
  result["punctures"] = punctures;
  result["order"] = n;
  result["count"] = count_abelian_tame_covers(
      genus, punctures, n, ws.residue_char_override.value_or(0));
  emit(result, ws, out);
  return kOk;
}

int cmd_fiber_product(Workspace& ws, const std::string& path, std::ostream& out) {
  const Json& j = ws.load(path);
  if (!j.contains("covering1") || !j.contains("covering2"))
    throw std::invalid_argument("fiber-product input needs 'covering1' and 'covering2'");
  CoveringInput a = covering_from_json(j["covering1"]);
  CoveringInput b = covering_from_json(j["covering2"]);
  FiberProduct fp = fiber_product(a.rep, b.rep);
  Json result;
  result["degree"] = fp.product.degree();
  result["connected_components"] = fp.components.size();
  result["projections_equal"] = fp.projection1 == fp.projection2;
  result["product"] = to_json(fp.product);
  Json comps = Json::array();
  for (const auto& component : fp.components) comps.push_back(to_json(component));
  result["components"] = comps;
  emit(result, ws, out);
  return kOk;
}

int cmd_gluing_count(Workspace& ws, const std::string& path, std::ostream& out) {
  HarmonicMorphism phi = morphism_from_json(ws.load(path));
  Json result;
  result["count"] = gluing_data_count(phi);
  emit(result, ws, out);
  return kOk;
}

int cmd_lifting_classes(Workspace& ws, const std::string& path, std::ostream& out) {
  HarmonicMorphism phi = morphism_from_json(ws.load(path));
  ValidationReport report = phi.validate();
  if (!report.ok()) {
    emit(to_json(report), ws, out);
    return kValidationFailure;
  }
  LiftingClassification lifting = lifting_classes(phi, ws.bounds);
  Json result;
  result["gluing_total"] = lifting.gluing_total;
  result["automorphism_order"] = lifting.automorphism_order;
  result["class_count"] = lifting.classes.size();
  Json classes = Json::array();
  for (const auto& lc : lifting.classes) {
    Json jc;
    jc.update(gluing_to_json(phi, lc.representative));
    jc["orbit_size"] = lc.orbit_size;
    jc["stabilizer_order"] = lc.stabilizer_order;
    classes.push_back(jc);
  }
  result["classes"] = classes;
  emit(result, ws, out);
  return kOk;
}

int cmd_check_rigid(Workspace& ws, const std::string& path, std::ostream& out) {
  const Json& j = ws.load(path);
  for (const char* key : {"covering1", "gluing1", "covering2", "gluing2", "psi"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("check-rigid-morphism input needs '") +
                                  key + "'");
  HarmonicMorphism phi1 = morphism_from_json(j["covering1"]);
  HarmonicMorphism phi2 = morphism_from_json(j["covering2"]);
  GluingAssignment g1 = gluing_from_json(j["gluing1"]);
  GluingAssignment g2 = gluing_from_json(j["gluing2"]);
  const Json& jp = j["psi"];
  std::map<std::string, std::string> vm, em;
  std::map<std::string, long long> dil, deg;
  if (jp.contains("vertex_map"))
    for (const auto& [v, w] : jp["vertex_map"].items()) vm[v] = w.get<std::string>();
  if (jp.contains("edge_map"))
    for (const auto& [e, f] : jp["edge_map"].items()) em[e] = f.get<std::string>();
  if (jp.contains("dilation"))
    for (const auto& [e, d] : jp["dilation"].items()) dil[e] = d.get<long long>();
  if (jp.contains("vertex_degree"))
    for (const auto& [v, d] : jp["vertex_degree"].items()) deg[v] = d.get<long long>();
  RigidMorphism psi{HarmonicMorphism(phi1.source(), phi2.source(), std::move(vm),
                                     std::move(em), std::move(dil), std::move(deg)),
                    {}};
  if (j.contains("psi_corrections"))
    for (const auto& [v, per_edge] : j["psi_corrections"].items())
      for (const auto& [e, c] : per_edge.items())
        psi.corrections[v][e] = c.get<long long>();
  Json result;
  result["ok"] = rigidified_morphism_check(psi, phi1, g1, phi2, g2);
  emit(result, ws, out);
  return kOk;
}

int cmd_jacobian(Workspace& ws, const std::string& path, std::ostream& out) {
  MetrizedComplex c = load_complex(ws, ws.load(path));
  JacobianData jac = tropical_jacobian(c.graph());
  Json result;
  result["genus"] = jac.genus;
  result["cotree"] = jac.cotree;
  Json period = Json::array();
  for (const auto& row : jac.period) {
    Json jrow = Json::array();
    for (const auto& entry : row) jrow.push_back(entry.str());
    period.push_back(jrow);
  }
  result["period"] = period;
  Json cycles = Json::array();
  for (const auto& cycle : jac.cycles) {
    Json jc = Json::object();
    for (const auto& [eid, coeff] : cycle) jc[eid] = coeff;
    cycles.push_back(jc);
  }
  result["cycles"] = cycles;
  emit(result, ws, out);
  return kOk;
}

int cmd_divisor_class(Workspace& ws, const std::string& path, std::ostream& out) {
  const Json& j = ws.load(path);
  if (!j.contains("graph") || !j.contains("divisor"))
    throw std::invalid_argument("divisor-class input needs 'graph' and 'divisor'");
  AugmentedMetricGraph g = graph_from_json(j["graph"]);
  Divisor d = divisor_from_json(j["divisor"]);
  DivisorClass cls = divisor_class(g, d);
  Json result;
  Json coords = Json::array(), pairing = Json::array();
  for (const auto& x : cls.torus_coords) coords.push_back(x.str());
  for (const auto& x : cls.pairing) pairing.push_back(x.str());
  result["coordinates"] = coords;
  result["pairing"] = pairing;
  result["zero"] = cls.zero;
  auto witness = principal_witness(g, d);
  result["principal"] = witness.has_value();
  if (witness) {
    Json jw;
    Json slopes = Json::object();
    for (const auto& [eid, s] : witness->slopes) slopes[eid] = s;
    Json values = Json::object();
    for (const auto& [vid, value] : witness->values) values[vid] = value.str();
    jw["slopes"] = slopes;
    jw["values"] = values;
    result["witness"] = jw;
  }
  emit(result, ws, out);
  return kOk;
}

int cmd_torsion(Workspace& ws, const std::string& path, long long n, std::ostream& out) {
  MetrizedComplex c = load_complex(ws, ws.load(path));
  TorsionFiltration t = torsion_filtration(c, n);
  Json result;
  result["toric"] = t.toric;
  result["connected"] = t.connected;
  result["total"] = t.total;
  result["toric_rank"] = t.toric_rank;
  result["abelian_rank"] = t.abelian_rank;
  emit(result, ws, out);
  return kOk;
}

int cmd_classify(Workspace& ws, const std::string& path, long long n,
                 const std::string& selection_text, std::ostream& out) {
  MetrizedComplex c = load_complex(ws, ws.load(path));
  AbelianCoverClassification cls = classify_abelian_covers(c, n, ws.bounds);
  Json result;
  result["totally_split"] = cls.totally_split;
  result["etale_not_split"] = cls.etale_not_split;
  result["ramified"] = cls.ramified;
  if (!selection_text.empty() && selection_text != "all") {
    SubcomplexSelection sel = parse_selection(c, selection_text);
    c.subcomplex(sel);  // must be a genuine subcomplex
    unsigned long long split = 0, unramified = 0;
    for (const auto& cover : cls.split_covers) {
      VoltageCovering material = voltage_to_covering(cover.rep, c.residue_char());
      if (check_unramified(material.morphism, sel)) ++unramified;
      if (check_totally_split(material.morphism, sel)) ++split;
    }
    Json sub;
    sub["toric_classes_split_over_selection"] = split;
    sub["toric_classes_unramified_over_selection"] = unramified;
    result["subcomplex"] = sub;
  }
  emit(result, ws, out);
  return kOk;
}

int cmd_monodromy(Workspace& ws, const std::string& path, std::ostream& out) {
  CoveringInput in = covering_from_json(ws.load(path));
  MonodromyGroup m = monodromy_group(in.rep, ws.bounds);
  Json result;
  result["degree"] = m.degree;
  result["order"] = m.order;
  result["transitive"] = m.transitive;
  if (m.transitive) result["galois"] = is_galois(in.rep, ws.bounds);
  Json gens = Json::array();
  for (const auto& g : m.generators) gens.push_back(g.cycles());
  result["generators"] = gens;
  emit(result, ws, out);
  return kOk;
}

int cmd_galois_closure(Workspace& ws, const std::string& path, std::ostream& out) {
  CoveringInput in = covering_from_json(ws.load(path));
  GaloisClosure closure = galois_closure(in.rep, ws.bounds);
  Json result;
  result["closure_degree"] = closure.closure.degree();
  result["galois"] = is_galois(closure.closure, ws.bounds);
  result["stabilizer_order"] = closure.stabilizer_order;
  result["quotient_recovers_input"] =
      isomorphic_coverings(closure.quotient_by_stabilizer, in.rep, ws.bounds);
  result["closure"] = to_json(closure.closure);
  result["closure_graph"] = to_json(closure_graph(in.rep, closure));
  emit(result, ws, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// paper suite

struct FixtureCheck {
  std::string name;
  std::function<Json()> builtin_input;
  std::function<std::string(const Json&)> check;  // returns detail, throws on failure
};

void expect(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

MetrizedComplex valid_complex(const Json& j) {
  MetrizedComplex c = complex_from_json(j);
  ValidationReport report = c.validate();
  expect(report.ok(), report.ok() ? "" : "invalid fixture input: " +
                                             report.violations.front().code + " (" +
                                             report.violations.front().detail + ")");
  return c;
}

CoveringInput valid_covering(const Json& j) {
  CoveringInput in = covering_from_json(j);
  ValidationReport report = in.rep.base().validate();
  expect(report.ok(), report.ok() ? "" : "invalid fixture input: " +
                                             report.violations.front().code + " (" +
                                             report.violations.front().detail + ")");
  return in;
}

HarmonicMorphism valid_morphism(const Json& j) {
  HarmonicMorphism phi = morphism_from_json(j);
  ValidationReport report = phi.validate();
  expect(report.ok(), report.ok() ? "" : "invalid fixture input: " +
                                             report.violations.front().code + " (" +
                                             report.violations.front().detail + ")");
  return phi;
}

std::vector<FixtureCheck> fixture_checks() {
  std::vector<FixtureCheck> checks;

  checks.push_back(
      {"fiber-product", [] { return to_json(fixtures::split_double_cover()); },
       [](const Json& j) {
         CoveringInput in = valid_covering(j);
         FiberProduct fp = fiber_product(in.rep, in.rep);
         expect(fp.components.size() == 2, "expected 2 connected components");
         for (const auto& component : fp.components)
           expect(isomorphic_coverings(component, in.rep),
                  "component not isomorphic to the factor");
         expect(!(fp.projection1 == fp.projection2), "projections must differ");
         return "degree 4, two components isomorphic to the factor, distinct "
                "projections";
       }});

  checks.push_back(
      {"genus2-torsion", [] { return to_json(fixtures::genus2()); },
       [](const Json& j) {
         MetrizedComplex c = valid_complex(j);
         TateModuleRanks ranks = tate_module_ranks(c);
         expect(ranks.toric == 1 && ranks.connected == 3 && ranks.total == 4,
                "Tate module ranks must be (1, 3, 4)");
         TorsionFiltration t = torsion_filtration(c, 2);
         expect(t.toric == 2 && t.connected == 8 && t.total == 16,
                "2-torsion counts must be (2, 8, 16)");
         return "ranks (1, 3, 4); 2-torsion (2, 8, 16)";
       }});

  checks.push_back(
      {"rigidified-tate", [] { return to_json(fixtures::tate_cover()); },
       [](const Json& j) {
         HarmonicMorphism phi = valid_morphism(j);
         expect(gluing_data_count(phi) == 4, "|G| must be 4");
         expect(automorphism_group(phi).size() == 4, "|Aut| must be 4");
         LiftingClassification lifting = lifting_classes(phi);
         expect(lifting.classes.size() == 2, "expected 2 lifting classes");
         for (const auto& lc : lifting.classes)
           expect(lc.orbit_size == 2 && lc.stabilizer_order == 2,
                  "orbits must have size 2 and stabilizer order 2");
         return "|G| = 4, |Aut| = 4, 2 orbits of size 2 with stabilizer order 2";
       }});

  checks.push_back(
      {"tate-two-torsion", [] { return to_json(fixtures::tate()); },
       [](const Json& j) {
         MetrizedComplex c = valid_complex(j);
         TorsionFiltration t = torsion_filtration(c, 2);
         expect(t.toric == 2 && t.connected == 2 && t.total == 4,
                "2-torsion counts must be (2, 2, 4)");
         auto covers = cyclic_split_covers(c, 2);
         expect(covers.size() == 2, "expected 2 toric classes");
         int connected = 0;
         for (const auto& cover : covers)
           if (cover.rep.is_connected_cover()) ++connected;
         expect(connected == 1, "exactly one class must be connected");
         AbelianCoverClassification cls = classify_abelian_covers(c, 2);
         expect(cls.totally_split == 2 && cls.etale_not_split == 0 && cls.ramified == 2,
                "stratification must be (2, 0, 2)");
         return "2-torsion (2, 2, 4); 1 nontrivial split class; strata (2, 0, 2)";
       }});

  checks.push_back(
      {"troptame-s3", [] { return to_json(fixtures::s3_cover()); },
       [](const Json& j) {
         CoveringInput in = valid_covering(j);
         MonodromyGroup m = monodromy_group(in.rep);
         expect(m.order == 6 && m.transitive, "monodromy must be transitive of order 6");
         expect(!is_galois(in.rep), "the degree-3 covering must not be Galois");
         GaloisClosure closure = galois_closure(in.rep);
         expect(closure.closure.degree() == 6, "closure degree must be 6");
         expect(is_galois(closure.closure), "closure must be Galois");
         expect(closure.stabilizer_order == 2, "stabilizer must have order 2");
         expect(isomorphic_coverings(closure.quotient_by_stabilizer, in.rep),
                "quotient by the stabilizer must recover the covering");
         return "closure degree 6 with group S3, quotient by the order-2 "
                "stabilizer recovers the covering";
       }});

  return checks;
}

}  // namespace

std::vector<std::string> paper_fixture_names() {
  std::vector<std::string> names;
  for (const auto& check : fixture_checks()) names.push_back(check.name);
  return names;
}

Json paper_fixture_input(const std::string& name) {
  for (const auto& check : fixture_checks())
    if (check.name == name) return check.builtin_input();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

int run_paper_suite(std::ostream& out, std::ostream& err, bool list_only,
                    const std::optional<std::string>& fixtures_dir) {
  int status = kOk;
  for (const auto& check : fixture_checks()) {
    if (list_only) {
      out << check.name << "\n";
      continue;
    }
    try {
      Json input;
      if (fixtures_dir) {
        std::ifstream file(*fixtures_dir + "/" + check.name + ".json");
        if (!file)
          throw std::runtime_error("fixture file not found in " + *fixtures_dir);
        input = Json::parse(file);
      } else {
        input = check.builtin_input();
      }
      out << "PASS " << check.name << ": " << check.check(input) << "\n";
    } catch (const std::exception& e) {
      out << "FAIL " << check.name << ": " << e.what() << "\n";
      status = kValidationFailure;
    }
  }
  (void)err;
  return status;
}

const Json& Workspace::load(const std::string& path) {
  auto it = objects.find(path);
  if (it != objects.end()) return it->second;
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    Json parsed = Json::parse(file);
    return objects.emplace(path, std::move(parsed)).first->second;
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte offset; surface it with the path
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Workspace ws;
  CLI::App app{"workbench for finite tame coverings of metrized complexes"};
  app.name("skelcov");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  unsigned long long bound_override = 0;
  long long char_override = -1;
  app.add_option("--bound", bound_override, "master cap for all search budgets");
  app.add_option("--char", char_override, "override the residue characteristic");
  app.add_option("--format", ws.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string file, selection = "all";
  int degree = 2;
  long long order = 2, rank = 2, index = 2, genus = 0, punctures = 0;
  bool connected = false, list_only = false, skip_rh = false;
  std::string fixtures_dir;

  auto* validate = app.add_subcommand("validate", "validate a JSON object");
  validate->add_option("file", file)->required();
  auto* check_morphism = app.add_subcommand("check-morphism", "harmonicity report");
  check_morphism->add_option("file", file)->required();
  check_morphism->add_flag("--skip-rh", skip_rh,
                           "exclude local Riemann-Hurwitz from the covering verdict");
  auto* deg_cmd = app.add_subcommand("degree", "degree of a harmonic morphism");
  deg_cmd->add_option("file", file)->required();
  auto* enum_cmd = app.add_subcommand("enumerate-coverings",
                                      "covering classes of the underlying graph");
  enum_cmd->add_option("file", file)->required();
  enum_cmd->add_option("--degree,-n", degree)->required();
  enum_cmd->add_flag("--connected", connected);
  auto* subgroups = app.add_subcommand("count-subgroups", "Hall subgroup counts");
  subgroups->add_option("--rank", rank)->required();
  subgroups->add_option("--index", index)->required();
  auto* abelian = app.add_subcommand("count-abelian", "abelian tame cover counts");
  abelian->add_option("--genus", genus)->required();
  abelian->add_option("--punctures", punctures)->required();
  abelian->add_option("--order", order)->required();
  auto* fiber = app.add_subcommand("fiber-product", "fiber product of two coverings");
  fiber->add_option("file", file)->required();
  auto* gluing = app.add_subcommand("gluing-count", "size of the gluing data set");
  gluing->add_option("file", file)->required();
  auto* lifting = app.add_subcommand("lifting-classes",
                                     "orbits of gluing data under conjugation");
  lifting->add_option("file", file)->required();
  auto* rigid_cmd = app.add_subcommand("check-rigid-morphism",
                                       "morphism check for rigidified coverings");
  rigid_cmd->add_option("file", file)->required();
  auto* jacobian_cmd = app.add_subcommand("jacobian", "tropical Jacobian data");
  jacobian_cmd->add_option("file", file)->required();
  auto* divisor_cmd = app.add_subcommand("divisor-class", "Abel-Jacobi class");
  divisor_cmd->add_option("file", file)->required();
  auto* torsion_cmd = app.add_subcommand("torsion", "torsion filtration counts");
  torsion_cmd->add_option("file", file)->required();
  torsion_cmd->add_option("--order", order)->required();
  auto* classify_cmd = app.add_subcommand("classify", "abelian cover stratification");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--order", order)->required();
  classify_cmd->add_option("--subcomplex", selection);
  auto* monodromy_cmd = app.add_subcommand("monodromy", "monodromy group data");
  monodromy_cmd->add_option("file", file)->required();
  auto* closure_cmd = app.add_subcommand("galois-closure", "Galois closure data");
  closure_cmd->add_option("file", file)->required();
  auto* suite = app.add_subcommand("paper-suite", "bundled worked-example checks");
  suite->add_flag("--list", list_only);
  suite->add_option("--fixtures", fixtures_dir, "load fixture inputs from a directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  if (bound_override > 0) ws.bounds = Bounds::with_master(bound_override);
  if (char_override >= 0) ws.residue_char_override = char_override;

  try {
    if (*validate) return cmd_validate(ws, file, out);
    if (*check_morphism) return cmd_check_morphism(ws, file, skip_rh, out);
    if (*deg_cmd) return cmd_degree(ws, file, out);
    if (*enum_cmd) return cmd_enumerate(ws, file, degree, connected, out);
    if (*subgroups) return cmd_count_subgroups(ws, rank, index, out);
    if (*abelian) return cmd_count_abelian(ws, genus, punctures, order, out);
    if (*fiber) return cmd_fiber_product(ws, file, out);
    if (*gluing) return cmd_gluing_count(ws, file, out);
    if (*lifting) return cmd_lifting_classes(ws, file, out);
    if (*rigid_cmd) return cmd_check_rigid(ws, file, out);
    if (*jacobian_cmd) return cmd_jacobian(ws, file, out);
    if (*divisor_cmd) return cmd_divisor_class(ws, file, out);
    if (*torsion_cmd) return cmd_torsion(ws, file, order, out);
    if (*classify_cmd) return cmd_classify(ws, file, order, selection, out);
    if (*monodromy_cmd) return cmd_monodromy(ws, file, out);
    if (*closure_cmd) return cmd_galois_closure(ws, file, out);
    if (*suite)
      return run_paper_suite(out, err, list_only,
                             fixtures_dir.empty()
                                 ? std::nullopt
                                 : std::optional<std::string>(fixtures_dir));
  } catch (const ResourceError& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kResourceExceeded;
  } catch (const std::overflow_error& e) {
    err << "resource bound exceeded: " << e.what() << "\n";
    return kResourceExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace skelcov::cli
