#pragma once

// Command line driver. Subcommands:
//   check    validate a triangulation + direction, report local orientation,
//            expanding and isoperimetric data; optionally build a cyclic
//            cover from solved weights and recheck the lifted direction
//   fiber    solve the face equations, build the circle-valued map, verify
//            the vertex link circles and extract the fiber at a phase theta
//   germ     build the germ at a base vertex and test it for directed loops
//   generate write built-in fixture files (pentachoron, products)
//
// Exit codes: 0 all gating checks pass, 1 a gating check fails, 2 usage,
// file or precondition errors. Manifold validation failures (NotClosed,
// BadLink, Degenerate) are reported results of `check` (exit 1) but input
// errors for every other subcommand (exit 2).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trifol/cover.hpp"
#include "trifol/errors.hpp"
#include "trifol/product.hpp"
#include "trifol/report.hpp"
#include "trifol/surface.hpp"

namespace trifol {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline Json input_entry(const std::string& role, const std::string& path,
                        const std::string& bytes) {
  return Json{{"role", role}, {"path", path}, {"digest", digest_string(bytes)}};
}

inline void emit(Json& report, bool json, bool no_timing, std::ostream& out) {
  if (no_timing) strip_timing(report);
  if (json) out << report.dump(2) << "\n";
  else out << render_human(report);
}

} // namespace detail

struct CliCommon {
  bool json = false;
  bool no_timing = false;
};

inline int cmd_check(const std::string& tri_path, const std::string& dir_path, int cover_n,
                     const CliCommon& opt, std::ostream& out) {
  Json report{{"tool", kToolName}, {"version", kToolVersion}, {"command", "check"}};
  std::string tri_text = detail::read_file(tri_path);
  std::string dir_text = detail::read_file(dir_path);
  report["inputs"] = Json::array({detail::input_entry("triangulation", tri_path, tri_text),
                                  detail::input_entry("direction", dir_path, dir_text)});
  Json checks = Json::array();
  Stopwatch total;
  bool status_pass = true;

  Stopwatch sw;
  Triangulation tri;
  bool valid = true;
  std::string invalid_code, invalid_reason;
  try {
    tri = parse_triangulation(tri_text);
  } catch (const SyntaxError&) {
    throw; // malformed file, not a verdict
  } catch (const Degenerate& e) {
    valid = false, invalid_code = e.code, invalid_reason = e.what();
  } catch (const NotClosed& e) {
    valid = false, invalid_code = e.code, invalid_reason = e.what();
  } catch (const BadLink& e) {
    valid = false, invalid_code = e.code, invalid_reason = e.what();
  }
  if (!valid) {
    checks.push_back(Json{{"name", "validate"},
                          {"pass", false},
                          {"error", invalid_code},
                          {"reason", invalid_reason},
                          {"time_ms", sw.ms()}});
    report["checks"] = checks;
    report["status"] = "fail";
    report["time_ms"] = total.ms();
    detail::emit(report, opt.json, opt.no_timing, out);
    return 1;
  }
  long euler = static_cast<long>(tri.vertex_count()) - tri.edge_count() + tri.face_count() -
               tri.tet_count();
  checks.push_back(Json{{"name", "validate"},
                        {"pass", true},
                        {"f_vector", json_f_vector(tri)},
                        {"euler_characteristic", euler},
                        {"time_ms", sw.ms()}});

  Direction d = parse_direction(tri, dir_text);

  sw = Stopwatch();
  LocalOrientationReport rep = check_local_orientation(tri, d);
  status_pass = status_pass && rep.pass;
  checks.push_back(Json{{"name", "local-orientation"},
                        {"pass", rep.pass},
                        {"details", json_local_orientation(rep)},
                        {"time_ms", sw.ms()}});

  sw = Stopwatch();
  if (rep.tet_order.pass) {
    ExpansionReport exp = check_expanding(tri, d);
    checks.push_back(Json{{"name", "expanding"},
                          {"pass", exp.expanding},
                          {"gates", false},
                          {"details", json_expansion(exp)},
                          {"time_ms", sw.ms()}});
  } else {
    checks.push_back(Json{{"name", "expanding"},
                          {"skipped", true},
                          {"reason", "no total order on some tetrahedron"},
                          {"time_ms", sw.ms()}});
  }

  sw = Stopwatch();
  if (rep.recurrence.pass) {
    IsoperimetricConstants iso = isoperimetric_constants(tri, d);
    checks.push_back(Json{{"name", "isoperimetric"},
                          {"pass", true},
                          {"gates", false},
                          {"details", json_isoperimetric(iso)},
                          {"time_ms", sw.ms()}});
  } else {
    checks.push_back(Json{{"name", "isoperimetric"},
                          {"skipped", true},
                          {"reason", "directed 1-skeleton is not recurrent"},
                          {"time_ms", sw.ms()}});
  }

  if (cover_n >= 1) {
    sw = Stopwatch();
    if (!rep.tet_order.pass) {
      checks.push_back(Json{{"name", "cover"},
                            {"skipped", true},
                            {"reason", "no total order, cannot solve for weights"},
                            {"time_ms", sw.ms()}});
    } else {
      TriangleSystem sys = triangle_system(tri, d);
      FeasibilityOutcome sol = solve_positive_kernel(sys.rows, sys.cols);
      if (!sol.feasible) {
        checks.push_back(Json{{"name", "cover"},
                              {"skipped", true},
                              {"reason", "face equations are infeasible, no weights"},
                              {"time_ms", sw.ms()}});
      } else {
        CyclicCover cover = cyclic_cover(tri, d, sol.weights, cover_n);
        LocalOrientationReport lift = check_local_orientation(cover.tri, cover.dir);
        bool gated = cover.components == 1;
        if (gated) status_pass = status_pass && lift.pass;
        checks.push_back(Json{{"name", "cover"},
                              {"pass", lift.pass},
                              {"degree", cover.degree},
                              {"components", cover.components},
                              {"gates", gated},
                              {"f_vector", json_f_vector(cover.tri)},
                              {"lift", json_local_orientation(lift)},
                              {"time_ms", sw.ms()}});
      }
    }
  }

  report["checks"] = checks;
  report["status"] = status_pass ? "pass" : "fail";
  report["time_ms"] = total.ms();
  detail::emit(report, opt.json, opt.no_timing, out);
  return status_pass ? 0 : 1;
}

inline int cmd_fiber(const std::string& tri_path, const std::string& dir_path,
                     const std::string& theta_text, const std::string& out_prefix,
                     const CliCommon& opt, std::ostream& out, std::ostream& err) {
  Json report{{"tool", kToolName}, {"version", kToolVersion}, {"command", "fiber"}};
  std::string tri_text = detail::read_file(tri_path);
  std::string dir_text = detail::read_file(dir_path);
  report["inputs"] = Json::array({detail::input_entry("triangulation", tri_path, tri_text),
                                  detail::input_entry("direction", dir_path, dir_text)});
  Json checks = Json::array();
  Stopwatch total;

  Triangulation tri = parse_triangulation(tri_text);
  Direction d = parse_direction(tri, dir_text);

  Stopwatch sw;
  TriangleSystem sys = triangle_system(tri, d);
  FeasibilityOutcome sol = solve_positive_kernel(sys.rows, sys.cols);
  checks.push_back(Json{{"name", "solve"},
                        {"pass", sol.feasible},
                        {"details", json_feasibility(tri, sol)},
                        {"time_ms", sw.ms()}});
  if (!sol.feasible) {
    report["checks"] = checks;
    report["status"] = "fail";
    report["time_ms"] = total.ms();
    detail::emit(report, opt.json, opt.no_timing, out);
    return 1;
  }

  FibrationMap map = build_fibration_map(tri, d, sol.weights);
  Rational theta;
  if (theta_text.empty()) {
    theta = default_theta(map);
  } else {
    theta = parse_rational(theta_text);
    if (!(theta > 0 && theta < 1))
      throw DomainError("theta must lie strictly between 0 and 1, got " + rat_str(theta));
  }
  report["parameters"] = Json{{"theta", rat_str(theta)}};

  sw = Stopwatch();
  LinkVerification lv = verify_vertex_links(tri, d, map);
  checks.push_back(Json{{"name", "verify-links"},
                        {"pass", lv.pass},
                        {"details", json_link_verification(tri, lv)},
                        {"time_ms", sw.ms()}});

  sw = Stopwatch();
  NormalVector fiber;
  try {
    fiber = extract_fiber(tri, d, map, theta);
  } catch (const ThetaCollision& e) {
    err << "error [" << e.code << "]: " << e.what() << "; try --theta "
        << rat_str(default_theta(map)) << "\n";
    return 2;
  }
  SurfaceStats st = surface_stats(tri, fiber);
  checks.push_back(Json{{"name", "fiber"},
                        {"pass", true},
                        {"details", json_surface_stats(st)},
                        {"time_ms", sw.ms()}});

  if (!out_prefix.empty()) {
    std::string wts = render_weights(tri, d, map.weights);
    std::string nsv = render_normal_vector(fiber);
    detail::write_file(out_prefix + ".wts", wts);
    detail::write_file(out_prefix + ".nsv", nsv);
    report["outputs"] =
        Json::array({Json{{"path", out_prefix + ".wts"}, {"digest", digest_string(wts)}},
                     Json{{"path", out_prefix + ".nsv"}, {"digest", digest_string(nsv)}}});
  }

  report["checks"] = checks;
  report["status"] = lv.pass ? "pass" : "fail";
  report["time_ms"] = total.ms();
  detail::emit(report, opt.json, opt.no_timing, out);
  return lv.pass ? 0 : 1;
}

inline int cmd_germ(const std::string& tri_path, const std::string& dir_path, int base, int m,
                    const std::string& out_prefix, const CliCommon& opt, std::ostream& out) {
  Json report{{"tool", kToolName}, {"version", kToolVersion}, {"command", "germ"}};
  std::string tri_text = detail::read_file(tri_path);
  std::string dir_text = detail::read_file(dir_path);
  report["inputs"] = Json::array({detail::input_entry("triangulation", tri_path, tri_text),
                                  detail::input_entry("direction", dir_path, dir_text)});
  report["parameters"] = Json{{"base", base}, {"m", m}};
  Stopwatch total;

  Triangulation tri = parse_triangulation(tri_text);
  Direction d = parse_direction(tri, dir_text);

  Stopwatch sw;
  GermComplex germ = build_germ(tri, d, base, m);
  GermAcyclicity ac = germ_acyclic(germ);
  Json checks = Json::array();
  checks.push_back(Json{{"name", "germ-acyclic"},
                        {"pass", ac.acyclic},
                        {"details", json_germ(germ, ac)},
                        {"time_ms", sw.ms()}});

  if (!out_prefix.empty()) {
    std::string dump = render_germ(germ);
    detail::write_file(out_prefix + ".germ", dump);
    report["outputs"] =
        Json::array({Json{{"path", out_prefix + ".germ"}, {"digest", digest_string(dump)}}});
  }

  report["checks"] = checks;
  report["status"] = ac.acyclic ? "pass" : "fail";
  report["time_ms"] = total.ms();
  detail::emit(report, opt.json, opt.no_timing, out);
  return ac.acyclic ? 0 : 1;
}

inline int cmd_generate(const std::string& type, int layers, const std::string& out_prefix,
                        const CliCommon& opt, std::ostream& out) {
  Json report{{"tool", kToolName}, {"version", kToolVersion}, {"command", "generate"}};
  report["parameters"] = Json{{"type", type}, {"layers", layers}};
  Stopwatch total;

  Json outputs = Json::array();
  auto emit_file = [&](const std::string& path, const std::string& content) {
    detail::write_file(path, content);
    outputs.push_back(Json{{"path", path}, {"digest", digest_string(content)}});
  };

  Triangulation tri;
  if (type == "pentachoron") {
    tri = pentachoron();
    emit_file(out_prefix + ".tri", render_triangulation(tri));
  } else {
    Surface base = (type == "product-s2") ? tetrahedron_boundary() : torus_seven();
    ProductBundle p = generate_product(base, layers);
    tri = p.tri;
    emit_file(out_prefix + ".tri", render_triangulation(p.tri));
    emit_file(out_prefix + ".dir", render_direction(p.tri, p.dir));
  }

  report["f_vector"] = json_f_vector(tri);
  report["outputs"] = outputs;
  report["status"] = "pass";
  report["time_ms"] = total.ms();
  detail::emit(report, opt.json, opt.no_timing, out);
  return 0;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorial circle-fibration checks on closed triangulated 3-manifolds"};
  app.name(kToolName);
  app.require_subcommand(1);
  app.fallthrough();

  CliCommon opt;
  app.add_flag("--json", opt.json, "emit the JSON record instead of text");
  app.add_flag("--no-timing", opt.no_timing, "omit timing fields from the report");

  std::string tri_path, dir_path;
  int cover_n = 0;
  auto* check = app.add_subcommand("check", "validate a triangulation and a direction on it");
  check->add_option("tri", tri_path, "triangulation file (.tri)")->required();
  check->add_option("dir", dir_path, "direction file (.dir)")->required();
  check->add_option("--cover", cover_n, "degree of a cyclic cover to build and recheck")
      ->check(CLI::PositiveNumber);

  std::string theta_text, fiber_out;
  auto* fiber = app.add_subcommand("fiber", "solve for weights and extract a fiber");
  fiber->add_option("tri", tri_path, "triangulation file (.tri)")->required();
  fiber->add_option("dir", dir_path, "direction file (.dir)")->required();
  fiber->add_option("--theta", theta_text, "cut phase in (0,1) as a rational p/q");
  fiber->add_option("--out", fiber_out, "prefix for .wts and .nsv output files");

  int base = 0, m = 0;
  std::string germ_out;
  auto* germ = app.add_subcommand("germ", "build the germ at a base vertex");
  germ->add_option("tri", tri_path, "triangulation file (.tri)")->required();
  germ->add_option("dir", dir_path, "direction file (.dir)")->required();
  germ->add_option("--base", base, "base vertex id")->required();
  germ->add_option("--m", m, "walk length and fill budget")->required();
  germ->add_option("--out", germ_out, "prefix for the .germ dump file");

  std::string gen_type, gen_out;
  int layers = 3;
  auto* generate = app.add_subcommand("generate", "write built-in fixture files");
  generate->add_option("--type", gen_type, "pentachoron, product-s2 or product-t2")
      ->required()
      ->check(CLI::IsMember({"pentachoron", "product-s2", "product-t2"}));
  generate->add_option("--layers", layers, "circle layers for products (>= 3)");
  generate->add_option("--out", gen_out, "output file prefix")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(tri_path, dir_path, cover_n, opt, out);
    if (fiber->parsed()) return cmd_fiber(tri_path, dir_path, theta_text, fiber_out, opt, out, err);
    if (germ->parsed()) return cmd_germ(tri_path, dir_path, base, m, germ_out, opt, out);
    if (generate->parsed()) return cmd_generate(gen_type, layers, gen_out, opt, out);
  } catch (const Error& e) {
    err << "error [" << e.code << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace trifol
