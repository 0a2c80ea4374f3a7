// Command-line front end for libhmap. Talks to the library exclusively
// through the public C API.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hmap/hmap.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(hm_status status) {
  if (status != HM_OK)
    die(kExitUsage,
        std::string(hm_status_name(status)) + ": " + hm_last_error());
}

using MapPtr = std::unique_ptr<hm_map, decltype(&hm_map_free)>;
using ReportPtr = std::unique_ptr<hm_report, decltype(&hm_report_free)>;

MapPtr build_map(const std::string& fn, int order) {
  hm_map* f = nullptr;
  check(hm_map_parse(fn.c_str(), order, &f));
  return MapPtr(f, &hm_map_free);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) die(kExitUsage, "cannot write " + path);
}

std::string report_json(const hm_report* rep) {
  char* buf = nullptr;
  check(hm_report_to_json(rep, &buf));
  std::string json(buf);
  hm_string_free(buf);
  return json;
}

// Prints a one-line summary, optionally writes the JSON report, and
// produces the process exit code.
int finish_check(const std::string& name, ReportPtr rep,
                 const std::string& out_path) {
  if (!out_path.empty()) write_file(out_path, report_json(rep.get()) + "\n");
  const bool passed = hm_report_passed(rep.get()) != 0;
  std::cout << name << ": " << (passed ? "PASS" : "FAIL")
            << " (worst margin " << hm_report_worst_margin(rep.get()) << ")\n";
  return passed ? kExitPass : kExitCheckFailed;
}

double parse_angle(const std::string& text) {
  if (text == "pi") return std::numbers::pi;
  if (text == "-pi") return -std::numbers::pi;
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (...) {
  }
  die(kExitUsage, "cannot parse angle '" + text + "' (use radians or 'pi')");
}

void print_coeff_table(const hm_map* f, int max_n) {
  std::printf("%4s  %22s %22s  %22s %22s\n", "n", "Re a_n", "Im a_n",
              "Re b_n", "Im b_n");
  for (int n = 0; n <= max_n; ++n) {
    hm_complex a, b;
    check(hm_map_coeff_a(f, n, &a));
    check(hm_map_coeff_b(f, n, &b));
    std::printf("%4d  %22.15g %22.15g  %22.15g %22.15g\n", n, a.re, a.im,
                b.re, b.im);
  }
}

// Flat or nested JSON objects as a CLI11 config source, so every flag can
// also come from --config; command-line values win.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool,
                        std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    input >> j;
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static void collect(const nlohmann::json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto deeper = parents;
        deeper.push_back(key);
        collect(value, deeper, items);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_string())
        item.inputs = {value.get<std::string>()};
      else
        item.inputs = {value.dump()};
      items.push_back(std::move(item));
    }
  }
};

struct GridArgs {
  int radii = 32;
  int angles = 128;
  double r_max = 0.95;

  hm_grid grid() const { return {radii, angles, r_max}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--grid-radii", radii, "radial grid count");
    cmd->add_option("--grid-angles", angles, "angular grid count");
    cmd->add_option("--rmax", r_max, "outermost grid radius");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic mapping construction, verification and rendering"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file (flags win)");
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for scans (0 = auto)")
      ->capture_default_str();

  std::string fn, out_path;
  int order = 64;

  // --- coeffs ---
  auto* cmd_coeffs = app.add_subcommand("coeffs", "print a_n / b_n table");
  std::string co_fn;
  int co_order = 64, co_depth = -1;
  cmd_coeffs->add_option("--fn", co_fn, "function spec")->required();
  cmd_coeffs->add_option("--order", co_order, "truncation order");
  cmd_coeffs->add_option("--depth", co_depth, "rows to print (default order)");

  // --- shear ---
  auto* cmd_shear = app.add_subcommand(
      "shear", "run the shearing construction on rational phi, omega");
  std::string sh_phi, sh_omega, sh_theta = "pi";
  int sh_order = 64;
  cmd_shear->add_option("--phi", sh_phi, "p or p/q coefficient lists")
      ->required();
  cmd_shear->add_option("--omega", sh_omega, "p or p/q coefficient lists")
      ->required();
  cmd_shear->add_option("--theta", sh_theta,
                        "epsilon = e^{i theta} (radians or 'pi')");
  cmd_shear->add_option("--order", sh_order, "truncation order");

  // --- verify ---
  auto* cmd_verify = app.add_subcommand("verify", "run a named bound check");
  cmd_verify->require_subcommand(1);

  auto* v_bounds = cmd_verify->add_subcommand("bounds", "coefficient bounds");
  std::string vb_fn, vb_class = "SH0S", vb_out;
  int vb_order = 64, vb_depth = -1;
  v_bounds->add_option("--fn", vb_fn)->required();
  v_bounds->add_option("--class", vb_class, "SH0S|CH0C|SHS|CHC");
  v_bounds->add_option("--order", vb_order);
  v_bounds->add_option("--depth", vb_depth, "max n (default order)");
  v_bounds->add_option("--out", vb_out, "JSON report path");

  struct GridCheckArgs {
    std::string fn, out;
    int order = 1024;
    GridArgs grid;
  };
  GridCheckArgs vg, vj, vd;
  for (auto [name, desc, args] :
       {std::tuple{"growth", "growth bounds |f|", &vg},
        std::tuple{"jacobian", "Jacobian bounds", &vj},
        std::tuple{"derivative", "|h'|, |g'| bounds", &vd}}) {
    auto* c = cmd_verify->add_subcommand(name, desc);
    c->add_option("--fn", args->fn)->required();
    c->add_option("--order", args->order, "truncation order");
    c->add_option("--out", args->out, "JSON report path");
    args->grid.attach(c);
  }

  auto* v_curv = cmd_verify->add_subcommand("curvature", "curvature bounds");
  std::string vc_fn, vc_out;
  int vc_order = 256, vc_angles = 512;
  std::vector<double> vc_radii = {0.05, 3.0 - 2.0 * std::sqrt(2.0), 0.3, 0.6};
  v_curv->add_option("--fn", vc_fn)->required();
  v_curv->add_option("--order", vc_order);
  v_curv->add_option("--radii", vc_radii, "circle radii")->delimiter(',');
  v_curv->add_option("--angles", vc_angles);
  v_curv->add_option("--out", vc_out, "JSON report path");

  auto* v_local = cmd_verify->add_subcommand("local", "J_f > 0 grid scan");
  std::string vl_fn, vl_out;
  int vl_order = 512;
  GridArgs vl_grid{64, 256, 0.999};
  v_local->add_option("--fn", vl_fn)->required();
  v_local->add_option("--order", vl_order);
  v_local->add_option("--out", vl_out, "JSON report path");
  vl_grid.attach(v_local);

  // --- curvature (pointwise) ---
  auto* cmd_curv = app.add_subcommand("curvature", "curvature at r e^{it}");
  std::string cv_fn, cv_t = "0";
  double cv_r = 0.3;
  int cv_order = 256;
  cmd_curv->add_option("--fn", cv_fn)->required();
  cmd_curv->add_option("--r", cv_r)->required();
  cmd_curv->add_option("--t", cv_t, "angle (radians or 'pi')");
  cmd_curv->add_option("--order", cv_order);

  // --- radius ---
  auto* cmd_radius =
      app.add_subcommand("radius", "radius of convexity by bisection");
  std::string rd_fn;
  int rd_order = 256, rd_angles = 512;
  double rd_tol = 1e-9;
  cmd_radius->add_option("--fn", rd_fn)->required();
  cmd_radius->add_option("--order", rd_order);
  cmd_radius->add_option("--angles", rd_angles);
  cmd_radius->add_option("--tol", rd_tol);

  // --- theta-search ---
  auto* cmd_theta = app.add_subcommand(
      "theta-search", "thetas with h + e^{i theta} g plausibly univalent");
  std::string th_fn, th_out;
  int th_grid = 360, th_depth = 40, th_order = 1280, th_samples = 4000;
  double th_rmax = 0.98, th_delta = 1e-4;
  cmd_theta->add_option("--fn", th_fn)->required();
  cmd_theta->add_option("--grid", th_grid, "theta cells");
  cmd_theta->add_option("--depth", th_depth, "coefficient filter depth");
  cmd_theta->add_option("--order", th_order);
  cmd_theta->add_option("--samples", th_samples);
  cmd_theta->add_option("--rmax", th_rmax);
  cmd_theta->add_option("--delta", th_delta);
  cmd_theta->add_option("--out", th_out, "JSON survivor list path");

  // --- stability ---
  auto* cmd_stab = app.add_subcommand(
      "stability", "univalence/convexity of all slices h + lambda g");
  std::string st_fn, st_mode = "univalent", st_out;
  int st_lambdas = 32, st_order = 1280;
  cmd_stab->add_option("--fn", st_fn)->required();
  cmd_stab->add_option("--mode", st_mode, "univalent|convex");
  cmd_stab->add_option("--lambdas", st_lambdas);
  cmd_stab->add_option("--order", st_order);
  cmd_stab->add_option("--out", st_out, "JSON report path");

  // --- render ---
  auto* cmd_render = app.add_subcommand("render", "SVG image of the disk grid");
  std::string rn_fn, rn_out = "out.svg";
  int rn_order = 1024;
  hm_render_spec rn = hm_render_spec_default();
  cmd_render->add_option("--fn", rn_fn)->required();
  cmd_render->add_option("--out", rn_out, "SVG path");
  cmd_render->add_option("--order", rn_order);
  cmd_render->add_option("--rays", rn.rays);
  cmd_render->add_option("--circles", rn.circles);
  cmd_render->add_option("--samples", rn.samples_per_curve);
  cmd_render->add_option("--rmax", rn.r_max);
  cmd_render->add_option("--width", rn.width);
  cmd_render->add_option("--height", rn.height);

  // --- catalog ---
  auto* cmd_catalog =
      app.add_subcommand("catalog", "list named functions and parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  hm_set_jobs(jobs);

  try {
    if (*cmd_coeffs) {
      MapPtr f = build_map(co_fn, co_order);
      print_coeff_table(f.get(), co_depth < 0 ? co_order : co_depth);
      return kExitPass;
    }
    if (*cmd_shear) {
      const std::string spec = "shear phi=" + sh_phi + " omega=" + sh_omega +
                               " theta=" + sh_theta;
      MapPtr f = build_map(spec, sh_order);
      print_coeff_table(f.get(), sh_order);
      return kExitPass;
    }
    if (*v_bounds) {
      MapPtr f = build_map(vb_fn, vb_order);
      hm_bound_class cls;
      if (vb_class == "SH0S")
        cls = HM_BOUNDS_SH0S;
      else if (vb_class == "CH0C")
        cls = HM_BOUNDS_CH0C;
      else if (vb_class == "SHS")
        cls = HM_BOUNDS_SHS;
      else if (vb_class == "CHC")
        cls = HM_BOUNDS_CHC;
      else
        die(kExitUsage, "unknown bound class " + vb_class);
      hm_report* rep = nullptr;
      check(hm_check_coeff_bounds(f.get(), vb_depth < 0 ? vb_order : vb_depth,
                                  cls, &rep));
      return finish_check("bounds[" + vb_class + "]",
                          ReportPtr(rep, &hm_report_free), vb_out);
    }
    for (auto [args, name, runner] : {
             std::tuple{&vg, "growth", &hm_check_growth},
             std::tuple{&vj, "jacobian", &hm_check_jacobian_bounds},
             std::tuple{&vd, "derivative", &hm_check_derivative_bounds}}) {
      auto* sub = cmd_verify->get_subcommand(name);
      if (!*sub) continue;
      MapPtr f = build_map(args->fn, args->order);
      const hm_family_constants consts = hm_family_constants_shs();
      hm_report* rep = nullptr;
      check(runner(f.get(), args->grid.grid(), &consts, &rep));
      return finish_check(name, ReportPtr(rep, &hm_report_free), args->out);
    }
    if (*v_curv) {
      MapPtr f = build_map(vc_fn, vc_order);
      const hm_family_constants consts = hm_family_constants_shs();
      hm_report* rep = nullptr;
      check(hm_check_curvature_bounds(f.get(), vc_radii.data(),
                                      vc_radii.size(), vc_angles, &consts,
                                      &rep));
      return finish_check("curvature", ReportPtr(rep, &hm_report_free),
                          vc_out);
    }
    if (*v_local) {
      MapPtr f = build_map(vl_fn, vl_order);
      hm_report* rep = nullptr;
      check(hm_check_local_univalence(f.get(), vl_grid.grid(), &rep));
      return finish_check("local", ReportPtr(rep, &hm_report_free), vl_out);
    }
    if (*cmd_curv) {
      MapPtr f = build_map(cv_fn, cv_order);
      double kappa = 0.0;
      check(hm_curvature_at(f.get(), cv_r, parse_angle(cv_t), &kappa));
      std::printf("%.15g\n", kappa);
      return kExitPass;
    }
    if (*cmd_radius) {
      MapPtr f = build_map(rd_fn, rd_order);
      double radius = 0.0;
      check(hm_radius_of_convexity(f.get(), rd_angles, rd_tol, &radius));
      std::printf("%.15g\n", radius);
      return kExitPass;
    }
    if (*cmd_theta) {
      MapPtr f = build_map(th_fn, th_order);
      std::vector<double> survivors(th_grid);
      size_t count = 0;
      check(hm_theta_search(f.get(), th_grid, th_depth, th_rmax, th_samples,
                            th_delta, survivors.data(), survivors.size(),
                            &count));
      survivors.resize(count);
      std::cout << count << " surviving theta cell(s) of " << th_grid << "\n";
      for (double t : survivors) {
        std::cout << "  theta = " << t;
        if (std::abs(t - std::numbers::pi) < 1e-12) std::cout << "  (pi)";
        std::cout << "\n";
      }
      if (!th_out.empty()) {
        nlohmann::json j;
        j["schema"] = 1;
        j["theta_count"] = th_grid;
        j["survivors"] = survivors;
        write_file(th_out, j.dump(2) + "\n");
      }
      return kExitPass;
    }
    if (*cmd_stab) {
      MapPtr f = build_map(st_fn, st_order);
      hm_stability_mode mode;
      if (st_mode == "univalent")
        mode = HM_STABILITY_UNIVALENT;
      else if (st_mode == "convex")
        mode = HM_STABILITY_CONVEX;
      else
        die(kExitUsage, "unknown stability mode " + st_mode);
      hm_report* rep = nullptr;
      check(hm_stability_scan(f.get(), st_lambdas, mode, &rep));
      return finish_check("stability[" + st_mode + "]",
                          ReportPtr(rep, &hm_report_free), st_out);
    }
    if (*cmd_render) {
      MapPtr f = build_map(rn_fn, rn_order);
      char* svg = nullptr;
      check(hm_render_grid(f.get(), &rn, &svg));
      std::string doc(svg);
      hm_string_free(svg);
      write_file(rn_out, doc);
      std::cout << "wrote " << rn_out << "\n";
      return kExitPass;
    }
    if (*cmd_catalog) {
      std::cout << hm_catalog_list();
      return kExitPass;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitUsage;
}
