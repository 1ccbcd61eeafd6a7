#pragma once

// JSON reports are the single machine-readable output of the CLI; the human
// text output is rendered from the same record. Key order is fixed by
// construction order, rationals are rendered as exact "p/q" strings, and all
// timing fields can be suppressed so repeated runs are byte identical.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "trifol/digraph.hpp"
#include "trifol/direction.hpp"
#include "trifol/expansion.hpp"
#include "trifol/fibration.hpp"
#include "trifol/germ.hpp"
#include "trifol/isoperimetric.hpp"
#include "trifol/normal_surface.hpp"
#include "trifol/rational.hpp"
#include "trifol/triangulation.hpp"
#include "trifol/version.hpp"

namespace trifol {

using Json = nlohmann::ordered_json;

inline std::string digest_string(const std::string& bytes) {
  std::uint64_t h = fnv1a64(bytes.data(), bytes.size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

inline Json json_f_vector(const Triangulation& tri) {
  return Json{{"vertices", tri.vertex_count()},
              {"edges", tri.edge_count()},
              {"faces", tri.face_count()},
              {"tets", tri.tet_count()}};
}

inline Json json_local_orientation(const LocalOrientationReport& rep) {
  Json links = Json::array();
  for (const auto& lv : rep.links) {
    links.push_back(Json{{"vertex", lv.vertex},
                         {"outgoing", lv.outgoing},
                         {"incoming", lv.incoming},
                         {"outgoing_nonempty", lv.outgoing_nonempty},
                         {"incoming_nonempty", lv.incoming_nonempty},
                         {"outgoing_connected", lv.outgoing_connected},
                         {"incoming_connected", lv.incoming_connected},
                         {"pass", lv.pass}});
  }
  Json order{{"pass", rep.tet_order.pass}};
  if (!rep.tet_order.pass) {
    order["tet"] = rep.tet_order.tet;
    order["cycle"] = rep.tet_order.cycle;
  }
  Json recurrence{{"pass", rep.recurrence.pass}, {"scc_count", rep.recurrence.scc_count}};
  if (!rep.recurrence.pass) recurrence["unreachable_pair"] = rep.recurrence.witness;
  return Json{{"links", links},
              {"links_pass", rep.links_pass},
              {"tet_order", order},
              {"recurrence", recurrence},
              {"pass", rep.pass}};
}

inline Json json_expansion(const ExpansionReport& rep) {
  int arcs_on_loops = 0;
  for (const auto& a : rep.arcs)
    if (a.on_loop) ++arcs_on_loops;
  Json j{{"arc_count", rep.arcs.size()},
         {"arcs_on_loops", arcs_on_loops},
         {"scc_count", rep.scc_count},
         {"expanding", rep.expanding}};
  if (rep.expanding) j["witness_face"] = rep.witness_face;
  return j;
}

inline Json json_isoperimetric(const IsoperimetricConstants& iso) {
  return Json{{"walk_length", iso.walk.size() - 1},
              {"c1", iso.c1},
              {"max_edge_degree", iso.max_edge_degree},
              {"k_bound", rat_str(iso.k_bound)}};
}

inline Json json_feasibility(const Triangulation& tri, const FeasibilityOutcome& out) {
  Json j{{"feasible", out.feasible}};
  if (out.feasible) {
    Json w = Json::array();
    for (int e = 0; e < tri.edge_count(); ++e)
      w.push_back(Json{{"edge", tri.edges()[e]}, {"weight", out.weights[e].str()}});
    j["weights"] = w;
  } else {
    Json c = Json::array();
    for (std::size_t i = 0; i < out.certificate.size(); ++i)
      if (out.certificate[i] != 0)
        c.push_back(Json{{"face", tri.faces()[i]}, {"coefficient", rat_str(out.certificate[i])}});
    j["certificate"] = c;
  }
  return j;
}

inline Json json_link_verification(const Triangulation& tri, const LinkVerification& lv) {
  Json counts = Json::array();
  for (int r = 0; r < tri.vertex_count(); ++r)
    counts.push_back(Json{{"vertex", tri.vertices()[r]}, {"circles", lv.circle_counts[r]}});
  return Json{{"circle_counts", counts}, {"pass", lv.pass}};
}

inline Json json_surface_stats(const SurfaceStats& st) {
  return Json{{"pieces", st.pieces},
              {"arcs", st.arcs},
              {"crossings", st.crossings},
              {"euler_characteristic", st.euler},
              {"components", st.components}};
}

inline Json json_germ(const GermComplex& germ, const GermAcyclicity& ac) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < germ.nodes.size(); ++i)
    nodes.push_back(Json{{"id", i},
                         {"representative", germ.nodes[i].representative},
                         {"endpoint", germ.nodes[i].endpoint}});
  Json arcs = Json::array();
  for (const auto& a : germ.arcs) arcs.push_back(a);
  Json j{{"base", germ.base},
         {"budget", germ.budget},
         {"node_count", germ.nodes.size()},
         {"arc_count", germ.arcs.size()},
         {"nodes", nodes},
         {"arcs", arcs},
         {"acyclic", ac.acyclic}};
  if (!ac.acyclic) {
    j["witness_nodes"] = ac.cycle_nodes;
    j["witness_vertices"] = ac.cycle_vertices;
  }
  return j;
}

// Plain-text rendering of a report record.
inline void render_human_value(const Json& v, const std::string& indent, std::string& out) {
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) {
      if (val.is_object() || val.is_array()) {
        out += indent + k + ":\n";
        render_human_value(val, indent + "  ", out);
      } else {
        out += indent + k + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
      }
    }
  } else if (v.is_array()) {
    bool scalars = true;
    for (const auto& e : v)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      std::string line;
      for (const auto& e : v) {
        if (!line.empty()) line += " ";
        line += e.is_string() ? e.get<std::string>() : e.dump();
      }
      out += indent + "[" + line + "]\n";
    } else {
      for (const auto& e : v) {
        out += indent + "-\n";
        render_human_value(e, indent + "  ", out);
      }
    }
  } else {
    out += indent + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
}

inline std::string render_human(const Json& report) {
  std::string out;
  out += std::string(kToolName) + " " + kToolVersion + " " +
         report.value("command", std::string("?")) + "\n";
  for (const auto& [k, v] : report.items()) {
    if (k == "tool" || k == "version" || k == "command") continue;
    if (v.is_object() || v.is_array()) {
      out += k + ":\n";
      render_human_value(v, "  ", out);
    } else {
      out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  return out;
}

// Removes every "time_ms" key, recursively.
inline void strip_timing(Json& v) {
  if (v.is_object()) {
    v.erase("time_ms");
    for (auto& [k, val] : v.items()) {
      (void)k;
      strip_timing(val);
    }
  } else if (v.is_array()) {
    for (auto& e : v) strip_timing(e);
  }
}

} // namespace trifol
