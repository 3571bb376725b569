// Command-line frontend: classify, decompose, normal-form, invert, green,
// raster, periodic, conjugate, bound, example.  Every run emits a
// self-contained JSON report (deterministic except the timing field).
// Exit codes: 0 success or mathematical refutation, 2 usage error,
// 3 resource or decision cap, 1 other runtime failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planeauto/planeauto.hpp"

using namespace planeauto;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

int exit_for(const error& e) {
  switch (e.code()) {
    case errc::resource_cap:
    case errc::undecided_at_cap:
    case errc::exponent_cap:
      return kExitCap;
    case errc::syntax_error:
    case errc::precondition:
    case errc::invalid_radius:
      return kExitUsage;
    default:
      return kExitError;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw error(errc::precondition, "cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Run {
  RunReport report;
  std::string input_bytes;  // accumulated for the digest
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  PolyMap load_map(const std::string& path) {
    const std::string bytes = read_file(path);
    input_bytes += bytes;
    return map_from_json(json::parse(bytes));
  }

  int finish(const std::string& out_path) {
    report.inputs_digest = digest_bytes(input_bytes);
    report.timing_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    const std::string text = report.to_json().dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out)
        throw error(errc::precondition, "cannot open output file: " + out_path);
      out << text;
    }
    return kExitOk;
  }
};

std::vector<double> parse_reals(const std::string& text, std::size_t want,
                                const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw error(errc::syntax_error,
                  std::string(what) + ": not a number: " + tok);
    }
  }
  if (out.size() != want)
    throw error(errc::syntax_error, std::string(what) + ": expected " +
                                        std::to_string(want) +
                                        " comma-separated values");
  return out;
}

json factor_json(const Factor& f) {
  return json{{"type", is_affine_factor(f) ? "affine" : "elementary"},
              {"map", map_to_json(factor_to_polymap(f))}};
}

const HenonForm& require_henon(const ClassificationResult& c,
                               const char* what) {
  if (c.cls != MapClass::loxodromic || !c.henon.has_value())
    throw error(errc::precondition,
                std::string(what) + " needs a loxodromic map");
  return *c.henon;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric tools for polynomial plane automorphisms"};
  app.require_subcommand(1);

  std::string input, f_path, g_path, out_path, format = "json";
  std::string grid_text, chart_text, point_text;
  int degree_cap = 2;
  long max_period = 1;
  double tol = 1e-6;
  long max_iter = 200;
  double escape_radius = 0.0;
  long m_param = 2, d_param = 2;
  long df = 0, dg = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON report here");
    sub->add_option("--seed", seed, "seed echoed into the report");
  };

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "dynamical class and degree growth");
  classify_cmd->add_option("-i,--input", input, "map JSON file")->required();
  add_common(classify_cmd);

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "affine-elementary factorization");
  decompose_cmd->add_option("-i,--input", input, "map JSON file")->required();
  add_common(decompose_cmd);

  CLI::App* normal_cmd =
      app.add_subcommand("normal-form", "conjugated cyclically reduced word");
  normal_cmd->add_option("-i,--input", input, "map JSON file")->required();
  add_common(normal_cmd);

  CLI::App* invert_cmd = app.add_subcommand("invert", "exact inverse map");
  invert_cmd->add_option("-i,--input", input, "map JSON file")->required();
  add_common(invert_cmd);

  CLI::App* green_cmd =
      app.add_subcommand("green", "escape-rate values at a point");
  green_cmd->add_option("-i,--input", input, "map JSON file")->required();
  green_cmd
      ->add_option("--point", point_text,
                   "evaluation point re(x),im(x),re(y),im(y)")
      ->required();
  green_cmd->add_option("--max-iter", max_iter, "iteration budget");
  green_cmd->add_option("--escape-radius", escape_radius,
                        "0 selects the certified radius");
  add_common(green_cmd);

  CLI::App* raster_cmd =
      app.add_subcommand("raster", "sample the escape rate on a plane chart");
  raster_cmd->add_option("-i,--input", input, "map JSON file")->required();
  raster_cmd->add_option("--grid", grid_text, "nx,ny samples")->required();
  raster_cmd
      ->add_option("--chart", chart_text, "ox,oy,ux,uy,vx,vy,r chart spec")
      ->required();
  raster_cmd->add_option("--format", format, "json, pgm, or csv");
  raster_cmd->add_option("--max-iter", max_iter, "iteration budget");
  raster_cmd->add_option("--escape-radius", escape_radius,
                         "0 selects the certified radius");
  add_common(raster_cmd);

  CLI::App* periodic_cmd =
      app.add_subcommand("periodic", "periodic orbits and multipliers");
  periodic_cmd->add_option("-i,--input", input, "map JSON file")->required();
  periodic_cmd->add_option("--max-period", max_period, "largest period");
  periodic_cmd->add_option("--tol", tol, "orbit identification tolerance");
  add_common(periodic_cmd);

  CLI::App* conjugate_cmd = app.add_subcommand(
      "conjugate", "decide conjugacy up to a conjugator degree cap");
  conjugate_cmd->add_option("-f", f_path, "first map JSON file")->required();
  conjugate_cmd->add_option("-g", g_path, "second map JSON file")->required();
  conjugate_cmd->add_option("-D,--degree-cap", degree_cap,
                            "largest conjugator degree searched");
  conjugate_cmd->add_option("--max-period", max_period,
                            "multiplier screen depth");
  conjugate_cmd->add_option("--tol", tol, "multiplier screen tolerance");
  add_common(conjugate_cmd);

  CLI::App* bound_cmd = app.add_subcommand(
      "bound", "theoretical completeness bound on conjugator degrees");
  bound_cmd->add_option("--df", df, "degree of the first map");
  bound_cmd->add_option("--dg", dg, "degree of the second map");
  bound_cmd->add_option("-f", f_path, "first map JSON file");
  bound_cmd->add_option("-g", g_path, "second map JSON file");
  add_common(bound_cmd);

  CLI::App* example_cmd = app.add_subcommand(
      "example", "rescaled family certificate over a radical extension");
  example_cmd->add_option("--m", m_param, "word exponent (map is degree m+1)");
  example_cmd->add_option("--d", d_param, "rescaling integer");
  add_common(example_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  Run run;
  {
    std::ostringstream echo;
    for (int i = 0; i < argc; ++i) echo << (i ? " " : "") << argv[i];
    run.report.command = echo.str();
  }

  try {
    if (*classify_cmd) {
      const PolyMap f = run.load_map(input);
      run.report.outputs = classification_to_json(classify(f));
    } else if (*decompose_cmd) {
      const PolyMap f = run.load_map(input);
      const JungWord w = jung_decompose(f);
      json factors = json::array();
      for (const Factor& fac : w.factors) factors.push_back(factor_json(fac));
      run.report.outputs = json{{"factors", factors},
                                {"count", w.factors.size()},
                                {"recomposes", w.recompose() == f}};
    } else if (*normal_cmd) {
      const PolyMap f = run.load_map(input);
      const ClassificationResult c = classify(f);
      run.report.outputs = classification_to_json(c);
      if (c.cls == MapClass::elliptic && c.elliptic.has_value())
        run.report.outputs["elliptic_target"] =
            factor_json(c.elliptic->target);
    } else if (*invert_cmd) {
      const PolyMap f = run.load_map(input);
      run.report.outputs = json{{"inverse", map_to_json(invert_map(f))}};
    } else if (*green_cmd) {
      const PolyMap f = run.load_map(input);
      const ClassificationResult c = classify(f);
      const HenonForm& h = require_henon(c, "escape-rate evaluation");
      const std::vector<double> pt = parse_reals(point_text, 4, "--point");
      const GreenKernel kernel(h);
      GreenOptions opt;
      opt.max_iter = max_iter;
      opt.escape_radius = escape_radius;
      const cplx x(pt[0], pt[1]), y(pt[2], pt[3]);
      run.report.outputs =
          json{{"gplus", green_to_json(kernel.plus(x, y, opt))},
               {"gminus", green_to_json(kernel.minus(x, y, opt))},
               {"escape_radius", detail::double_string(kernel.escape_radius())},
               {"criterion_constant",
                detail::double_string(kernel.criterion_constant())},
               {"defaults", json{{"max_iter", max_iter},
                                 {"escape_radius", escape_radius},
                                 {"tol", tol}}}};
    } else if (*raster_cmd) {
      const PolyMap f = run.load_map(input);
      const ClassificationResult c = classify(f);
      const HenonForm& h = require_henon(c, "raster sampling");
      const std::vector<double> g = parse_reals(grid_text, 2, "--grid");
      const std::vector<double> ch = parse_reals(chart_text, 7, "--chart");
      ChartSpec chart;
      chart.ox = ch[0];
      chart.oy = ch[1];
      chart.ux = ch[2];
      chart.uy = ch[3];
      chart.vx = ch[4];
      chart.vy = ch[5];
      chart.r = ch[6];
      GreenOptions opt;
      opt.max_iter = max_iter;
      opt.escape_radius = escape_radius;
      const RasterResult raster = raster_slice(
          GreenKernel(h), chart, long(g[0]), long(g[1]), opt);
      run.report.outputs =
          json{{"nx", raster.nx},
               {"ny", raster.ny},
               {"g_max", detail::double_string(raster.g_max)},
               {"format", format}};
      if (format == "json") {
        json values = json::array();
        for (double v : raster.values)
          values.push_back(detail::double_string(v));
        run.report.outputs["values"] = values;
      } else if (format == "pgm" || format == "csv") {
        if (out_path.empty())
          throw error(errc::precondition,
                      "--out is required for pgm/csv raster output");
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
          throw error(errc::precondition,
                      "cannot open output file: " + out_path);
        if (format == "pgm")
          write_pgm(file, raster);
        else
          write_csv(file, raster);
        run.report.outputs["raster_path"] = out_path;
        out_path.clear();  // the report itself goes to stdout
      } else {
        throw error(errc::precondition, "unknown format: " + format);
      }
    } else if (*periodic_cmd) {
      const PolyMap f = run.load_map(input);
      PeriodicOptions opt;
      opt.tol = tol;
      run.report.outputs =
          json{{"orbits", orbits_to_json(periodic_points(f, max_period, opt))},
               {"max_period", max_period}};
    } else if (*conjugate_cmd) {
      const PolyMap f = run.load_map(f_path);
      const PolyMap g = run.load_map(g_path);
      ConjugacySolveOptions opt;
      opt.screen_max_period = max_period;
      opt.screen_tol = tol;
      const ConjugacyOutcome out = solve_bounded_degree(f, g, degree_cap, opt);
      run.report.outputs["degree_cap"] = degree_cap;
      run.report.outputs["theorem_bound"] =
          theorem_a_bound(f.degree(), g.degree()).get_str();
      switch (out.status) {
        case ConjugacyOutcome::Status::certificate:
          run.report.outputs["status"] = "certificate";
          run.report.outputs["certificate"] =
              certificate_to_json(*out.certificate);
          break;
        case ConjugacyOutcome::Status::refuted:
          run.report.outputs["status"] = "refuted";
          run.report.outputs["refutation"] =
              refutation_to_json(*out.refutation);
          break;
        case ConjugacyOutcome::Status::undecided:
          run.report.outputs["status"] = "undecided";
          run.report.outputs["note"] = out.note;
          run.report.caps_hit.push_back(out.note);
          break;
        case ConjugacyOutcome::Status::residual:
          run.report.outputs["status"] = "residual";
          run.report.outputs["note"] = out.note;
          break;
      }
      const int rc = run.finish(out_path);
      return out.status == ConjugacyOutcome::Status::undecided ? kExitCap : rc;
    } else if (*bound_cmd) {
      if (!f_path.empty()) df = run.load_map(f_path).degree();
      if (!g_path.empty()) dg = run.load_map(g_path).degree();
      if (df < 2 || dg < 2)
        throw error(errc::precondition,
                    "bound needs --df/--dg >= 2 or -f/-g map files");
      run.report.outputs = json{{"df", df},
                                {"dg", dg},
                                {"bound", theorem_a_bound(df, dg).get_str()}};
    } else if (*example_cmd) {
      if (m_param < 1 || d_param < 2)
        throw error(errc::precondition, "example needs --m >= 1 and --d >= 2");
      auto s = FieldSpec::rationals();
      const std::string power = std::to_string(m_param + 1);
      const PolyMap f(parse_poly(s, "y"), parse_poly(s, "x + y^" + power));
      const PolyMap g(parse_poly(s, "y"),
                      parse_poly(s, "x + " + std::to_string(d_param) +
                                        "*y^" + power));
      run.input_bytes += f.p().to_string() + f.q().to_string() +
                         g.p().to_string() + g.q().to_string();
      const ScreenResult screen = screen_invariants(f, g);
      const ClassificationResult cf = classify(f);
      const ClassificationResult cg = classify(g);
      run.report.outputs = json{{"f", map_to_json(f)},
                                {"g", map_to_json(g)},
                                {"screen_passed", screen.pass}};
      if (!screen.pass) {
        run.report.outputs["status"] = "refuted";
        run.report.outputs["refutation"] =
            refutation_to_json(*screen.refutation);
        return run.finish(out_path);
      }
      const auto cert = solve_diagonal_ansatz(*cf.henon, *cg.henon);
      if (!cert.has_value())
        throw error(errc::ill_conditioned,
                    "diagonal ansatz unexpectedly failed on the family");
      const FieldSpecPtr S = cert->psi.spec();
      // alpha is the x-scale of psi; verify alpha^m Dy = y exactly.
      const FieldElement alpha = cert->psi.p().coefficient(1, 0);
      FieldElement pow = FieldElement::one(S);
      for (long t = 0; t < m_param; ++t) pow = pow * alpha;
      const bool alpha_ok =
          pow * FieldElement(S, Rat(d_param)) == FieldElement::one(S);
      run.report.outputs["status"] = "certificate";
      run.report.outputs["certificate"] = certificate_to_json(*cert);
      run.report.outputs["alpha"] = element_to_json(alpha);
      run.report.outputs["alpha_power_identity"] = alpha_ok;
      if (!alpha_ok)
        throw error(errc::ill_conditioned, "alpha^m != 1/D on the family");
    }
    return run.finish(out_path);
  } catch (const error& e) {
    run.report.outputs = json{{"error", e.what()}};
    const int code = exit_for(e);
    if (code == kExitCap) run.report.caps_hit.push_back(e.what());
    std::cerr << run.report.to_json().dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
