#include "skelcov/json_io.hpp"

#include <stdexcept>

namespace skelcov {

namespace {

std::string require_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw std::invalid_argument(std::string("expected string field '") + key + "'");
  return j[key].get<std::string>();
}

long long integer_or_throw(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw std::invalid_argument("expected integer for " + what);
  return j.get<long long>();
}

Rational rational_from(const Json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected rational (string or integer) for " + what);
}

// an auts entry: "mu2" handled a level up; otherwise cycles or an object
CurveAutomorphism automorphism_from_json(const Json& j, const ResidueCurve& curve) {
  CurveAutomorphism out;
  for (const auto& [half_edge, label] : curve.marks) {
    (void)half_edge;
    out.mark_images[label] = label;
  }
  const Json* cycles = nullptr;
  if (j.is_array()) {
    cycles = &j;
  } else if (j.is_object()) {
    if (j.contains("cycles")) cycles = &j["cycles"];
    if (j.contains("corrections"))
      for (const auto& [edge, value] : j["corrections"].items())
        out.corrections[edge] = integer_or_throw(value, "correction residue");
  } else {
    throw std::invalid_argument("automorphism entry must be an array or object");
  }
  if (cycles) {
    // either a list of cycles or a single cycle of labels
    std::vector<std::vector<std::string>> parsed;
    if (!cycles->empty() && (*cycles)[0].is_string()) {
      parsed.push_back(cycles->get<std::vector<std::string>>());
    } else {
      for (const auto& c : *cycles) parsed.push_back(c.get<std::vector<std::string>>());
    }
    for (const auto& cycle : parsed)
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!out.mark_images.count(cycle[i]))
          throw std::invalid_argument("automorphism cycle names unknown mark '" +
                                      cycle[i] + "'");
        out.mark_images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
  }
  return out;
}

Json automorphism_to_json(const ResidueCurve& curve, const CurveAutomorphism& a) {
  Json out = Json::object();
  Json cycles = Json::array();
  std::set<std::string> seen;
  for (const auto& [mark, image] : a.mark_images) {
    if (seen.count(mark) || image == mark) continue;
    Json cycle = Json::array();
    std::string p = mark;
    while (!seen.count(p)) {
      seen.insert(p);
      cycle.push_back(p);
      p = a.mark_images.at(p);
    }
    cycles.push_back(cycle);
  }
  out["cycles"] = cycles;
  Json corrections = Json::object();
  for (const auto& [edge, c] : a.corrections)
    if (c != 0) corrections[edge] = c;
  if (!corrections.empty()) out["corrections"] = corrections;
  (void)curve;
  return out;
}

}  // namespace

Json to_json(const AugmentedMetricGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv;
    jv["id"] = v.id;
    jv["genus"] = v.genus;
    out["vertices"].push_back(jv);
  }
  out["edges"] = Json::array();
  for (const auto& e : g.finite_edges()) {
    Json je;
    je["id"] = e.id;
    je["from"] = e.from;
    je["to"] = e.to;
    je["length"] = e.length.str();
    out["edges"].push_back(je);
  }
  if (!g.leaf_edges().empty()) {
    out["leaves"] = Json::array();
    for (const auto& l : g.leaf_edges()) {
      Json jl;
      jl["at"] = l.at;
      jl["label"] = l.label;
      out["leaves"].push_back(jl);
    }
  }
  return out;
}

AugmentedMetricGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw std::invalid_argument("graph JSON needs a 'vertices' array");
  std::vector<Vertex> vs;
  for (const auto& jv : j["vertices"]) {
    Vertex v;
    v.id = require_string(jv, "id");
    v.genus = jv.contains("genus")
                  ? static_cast<int>(integer_or_throw(jv["genus"], "genus"))
                  : 0;
    vs.push_back(std::move(v));
  }
  std::vector<Edge> es;
  if (j.contains("edges"))
    for (const auto& je : j["edges"]) {
      Edge e;
      if (je.contains("id")) e.id = require_string(je, "id");
      e.from = require_string(je, "from");
      e.to = require_string(je, "to");
      if (!je.contains("length"))
        throw std::invalid_argument("edge needs a 'length'");
      e.length = rational_from(je["length"], "edge length");
      es.push_back(std::move(e));
    }
  std::vector<Leaf> ls;
  if (j.contains("leaves"))
    for (const auto& jl : j["leaves"])
      ls.push_back({require_string(jl, "label"), require_string(jl, "at")});
  return AugmentedMetricGraph(std::move(vs), std::move(es), std::move(ls));
}

Json to_json(const MetrizedComplex& c) {
  Json out = to_json(c.graph());
  for (auto& jv : out["vertices"]) {
    const std::string vid = jv["id"].get<std::string>();
    auto it = c.curves().find(vid);
    if (it == c.curves().end()) continue;
    const ResidueCurve& curve = it->second;
    Json jc;
    jc["genus"] = curve.genus;
    jc["marks"] = Json::object();
    for (const auto& [half_edge, label] : curve.marks) jc["marks"][half_edge] = label;
    bool only_identity = curve.automorphism_table.size() == 1 &&
                         curve.automorphism_table.front().is_identity();
    if (!only_identity) {
      jc["auts"] = Json::array();
      for (const auto& a : curve.automorphism_table) {
        if (a.is_identity()) continue;
        jc["auts"].push_back(automorphism_to_json(curve, a));
      }
    }
    jv["curve"] = jc;
  }
  out["residue_char"] = c.residue_char();
  return out;
}

MetrizedComplex complex_from_json(const Json& j) {
  AugmentedMetricGraph g = graph_from_json(j);
  long long p = 0;
  if (j.contains("residue_char")) p = integer_or_throw(j["residue_char"], "residue_char");
  std::map<std::string, ResidueCurve> curves;
  for (const auto& jv : j["vertices"]) {
    const std::string vid = require_string(jv, "id");
    if (!jv.contains("curve")) {
      // canonical curve: genus from the vertex, marks named by half-edges
      ResidueCurve c;
      c.genus = g.vertex(vid).genus;
      for (const auto& h : g.incident(vid)) c.marks[h.id] = h.id;
      curves[vid] = std::move(c);
      continue;
    }
    const Json& jc = jv["curve"];
    ResidueCurve c;
    c.genus = jc.contains("genus")
                  ? static_cast<int>(integer_or_throw(jc["genus"], "curve genus"))
                  : g.vertex(vid).genus;
    if (jc.contains("marks"))
      for (const auto& [half_edge, label] : jc["marks"].items())
        c.marks[half_edge] = label.get<std::string>();
    else
      for (const auto& h : g.incident(vid)) c.marks[h.id] = h.id;
    if (jc.contains("auts")) {
      if (jc["auts"].is_string()) {
        if (jc["auts"].get<std::string>() != "mu2")
          throw std::invalid_argument("unknown automorphism preset '" +
                                      jc["auts"].get<std::string>() + "'");
        c.automorphism_table = mu2_table(c);
      } else {
        CurveAutomorphism identity;
        for (const auto& [half_edge, label] : c.marks) {
          identity.mark_images[label] = label;
          identity.corrections[half_edge] = 0;
        }
        c.automorphism_table.push_back(identity);
        for (const auto& entry : jc["auts"]) {
          CurveAutomorphism a = automorphism_from_json(entry, c);
          if (!a.is_identity()) c.automorphism_table.push_back(std::move(a));
        }
      }
    }
    curves[vid] = std::move(c);
  }
  return MetrizedComplex(std::move(g), std::move(curves), p);
}

MetrizedComplex complex_or_graph_from_json(const Json& j) {
  bool has_curve = false;
  if (j.contains("vertices"))
    for (const auto& jv : j["vertices"])
      if (jv.contains("curve")) has_curve = true;
  if (has_curve || j.contains("residue_char")) return complex_from_json(j);
  return canonical_complex(graph_from_json(j), 0);
}

Json to_json(const HarmonicMorphism& phi) {
  Json out;
  out["source"] = to_json(phi.source());
  out["target"] = to_json(phi.target());
  Json m;
  m["vertex_map"] = Json::object();
  for (const auto& [v, w] : phi.vertex_map()) m["vertex_map"][v] = w;
  m["edge_map"] = Json::object();
  for (const auto& [e, f] : phi.edge_map()) m["edge_map"][e] = f;
  m["dilation"] = Json::object();
  for (const auto& [e, d] : phi.dilations()) m["dilation"][e] = d;
  m["vertex_degree"] = Json::object();
  for (const auto& [v, d] : phi.vertex_degrees()) m["vertex_degree"][v] = d;
  out["morphism"] = m;
  return out;
}

HarmonicMorphism morphism_from_json(const Json& j) {
  if (!j.contains("source") || !j.contains("target") || !j.contains("morphism"))
    throw std::invalid_argument(
        "morphism JSON needs 'source', 'target' and 'morphism'");
  MetrizedComplex source = complex_or_graph_from_json(j["source"]);
  MetrizedComplex target = complex_or_graph_from_json(j["target"]);
  const Json& m = j["morphism"];
  std::map<std::string, std::string> vm, em;
  std::map<std::string, long long> dil, deg;
  if (m.contains("vertex_map"))
    for (const auto& [v, w] : m["vertex_map"].items()) vm[v] = w.get<std::string>();
  if (m.contains("edge_map"))
    for (const auto& [e, f] : m["edge_map"].items()) em[e] = f.get<std::string>();
  if (m.contains("dilation"))
    for (const auto& [e, d] : m["dilation"].items())
      dil[e] = integer_or_throw(d, "dilation");
  if (m.contains("vertex_degree"))
    for (const auto& [v, d] : m["vertex_degree"].items())
      deg[v] = integer_or_throw(d, "vertex degree");
  std::map<std::string, std::map<std::string, MarkImage>> marks;
  if (m.contains("marks"))
    for (const auto& [v, mm] : m["marks"].items())
      for (const auto& [from, spec] : mm.items())
        marks[v][from] = {require_string(spec, "to"),
                          spec.contains("deg") ? integer_or_throw(spec["deg"], "deg") : 1};
  return HarmonicMorphism(std::move(source), std::move(target), std::move(vm),
                          std::move(em), std::move(dil), std::move(deg),
                          std::move(marks));
}

Json to_json(const CoveringRep& rep) {
  Json out;
  out["base"] = to_json(rep.base());
  out["degree"] = rep.degree();
  out["voltages"] = Json::object();
  for (const auto& eid : rep.cotree_edges())
    out["voltages"][eid] = rep.voltage(eid).one_line();
  if (!rep.extra_monodromy().empty()) {
    out["extra"] = Json::array();
    for (const auto& x : rep.extra_monodromy()) {
      Json jx;
      jx["perm"] = x.perm.cycles();
      if (!x.at.empty()) jx["at"] = x.at;
      out["extra"].push_back(jx);
    }
  }
  return out;
}

CoveringInput covering_from_json(const Json& j) {
  if (!j.contains("base") || !j.contains("degree"))
    throw std::invalid_argument("covering JSON needs 'base' and 'degree'");
  MetrizedComplex base = complex_or_graph_from_json(j["base"]);
  int n = static_cast<int>(integer_or_throw(j["degree"], "degree"));
  std::map<std::string, Perm> voltages;
  if (j.contains("voltages"))
    for (const auto& [eid, text] : j["voltages"].items())
      voltages[eid] = Perm::parse(text.get<std::string>(), n);
  std::vector<CoveringRep::ExtraMonodromy> extra;
  if (j.contains("extra"))
    for (const auto& jx : j["extra"]) {
      CoveringRep::ExtraMonodromy x;
      x.perm = Perm::parse(require_string(jx, "perm"), n);
      if (jx.contains("at")) x.at = require_string(jx, "at");
      extra.push_back(std::move(x));
    }
  return {CoveringRep(base.graph(), n, std::move(voltages), std::move(extra)),
          base.residue_char()};
}

Json to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& entry : d) {
    Json je;
    if (entry.at_vertex) {
      je["at"] = entry.vertex;
    } else {
      Json point;
      point["edge"] = entry.point.edge;
      point["pos"] = entry.point.position.str();
      je["at"] = point;
    }
    je["coeff"] = entry.coeff;
    out.push_back(je);
  }
  return out;
}

Divisor divisor_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("divisor JSON must be an array");
  Divisor d;
  for (const auto& je : j) {
    if (!je.contains("at") || !je.contains("coeff"))
      throw std::invalid_argument("divisor entry needs 'at' and 'coeff'");
    long long coeff = integer_or_throw(je["coeff"], "coeff");
    if (je["at"].is_string()) {
      d.push_back(DivisorEntry::on_vertex(je["at"].get<std::string>(), coeff));
    } else {
      d.push_back(DivisorEntry::on_edge(require_string(je["at"], "edge"),
                                        rational_from(je["at"]["pos"], "pos"), coeff));
    }
  }
  return d;
}

Json gluing_to_json(const HarmonicMorphism& phi, const GluingAssignment& g) {
  Json inner = Json::object();
  for (const auto& [edge, r] : g.residues)
    inner[edge] = std::to_string(r) + " mod " + std::to_string(phi.dilation(edge));
  Json out;
  out["gluing"] = inner;
  return out;
}

GluingAssignment gluing_from_json(const Json& j) {
  const Json& inner = j.contains("gluing") ? j["gluing"] : j;
  GluingAssignment out;
  for (const auto& [edge, value] : inner.items()) {
    if (value.is_number_integer()) {
      out.residues[edge] = value.get<long long>();
    } else if (value.is_string()) {
      std::string text = value.get<std::string>();
      auto mod_pos = text.find(" mod ");
      out.residues[edge] = std::stoll(mod_pos == std::string::npos
                                          ? text
                                          : text.substr(0, mod_pos));
    } else {
      throw std::invalid_argument("gluing residue must be an integer or 'r mod d'");
    }
  }
  return out;
}

Json to_json(const ValidationReport& r) {
  Json out;
  out["valid"] = r.ok();
  out["violations"] = Json::array();
  for (const auto& v : r.violations) {
    Json jv;
    jv["code"] = v.code;
    jv["detail"] = v.detail;
    out["violations"].push_back(jv);
  }
  return out;
}

}  // namespace skelcov
