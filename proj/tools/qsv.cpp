// Command-line front end.  Everything flows through the C API so this file
// doubles as its reference client; no core header is included here.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "qsvlab.h"

namespace {

bool parse_triple(const std::string& s, double v[3]) {
  char extra;
  return std::sscanf(s.c_str(), "%lf,%lf,%lf%c", &v[0], &v[1], &v[2],
                     &extra) == 3;
}

// "re" or "re,im".
bool parse_complex(const std::string& s, qsv_complex* z) {
  char extra;
  double re = 0.0;
  double im = 0.0;
  if (std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &extra) == 2) {
    z->re = re;
    z->im = im;
    return true;
  }
  if (std::sscanf(s.c_str(), "%lf%c", &re, &extra) == 1) {
    z->re = re;
    z->im = 0.0;
    return true;
  }
  return false;
}

bool parse_poles(const std::string& s, int p[3]) {
  char extra;
  return std::sscanf(s.c_str(), "%d,%d,%d%c", &p[0], &p[1], &p[2], &extra) ==
         3;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "qsv: %s\n", message.c_str());
  return 2;
}

int runtime_error_exit() {
  std::fprintf(stderr, "qsv: %s\n", qsv_last_error_message());
  return 1;
}

// Relative paths land under QSV_OUTPUT_DIR when it is set.
int emit(const std::string& out_path, const char* text) {
  if (out_path.empty()) {
    std::fputs(text, stdout);
    return 0;
  }
  std::filesystem::path path(out_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("QSV_OUTPUT_DIR")) {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "qsv: cannot open %s for writing\n", path.c_str());
    return 1;
  }
  std::fputs(text, f);
  std::fclose(f);
  return 0;
}

// One spatial direction from either a Cartesian triple or polar flags.
struct DirectionFlags {
  std::string cartesian;
  double theta = 0.0;
  double phi = 0.0;
  CLI::Option* cartesian_opt = nullptr;
  CLI::Option* theta_opt = nullptr;
  CLI::Option* phi_opt = nullptr;

  void attach(CLI::App* cmd, const std::string& name, const std::string& what) {
    cartesian_opt = cmd->add_option("--" + name, cartesian,
                                    what + " as x,y,z (normalized)");
    theta_opt = cmd->add_option("--" + name + "-theta", theta,
                                what + " polar angle from +z");
    phi_opt =
        cmd->add_option("--" + name + "-phi", phi, what + " azimuth from +x");
    cartesian_opt->excludes(theta_opt);
    cartesian_opt->excludes(phi_opt);
  }

  // Defaults to +z.  Returns false on a malformed triple.
  bool resolve(double v[3]) const {
    if (cartesian_opt->count() > 0) return parse_triple(cartesian, v);
    v[0] = std::sin(theta) * std::cos(phi);
    v[1] = std::sin(theta) * std::sin(phi);
    v[2] = std::cos(theta);
    return true;
  }
};

// Complex-valued flag with a default shown in help.  The preset survives
// untouched when the flag is absent; the help string is display-only.
struct ComplexFlag {
  std::string text;
  qsv_complex preset{};
  CLI::Option* opt = nullptr;

  void attach(CLI::App* cmd, const std::string& name, qsv_complex value,
              const std::string& what) {
    preset = value;
    char shown[64];
    if (preset.im == 0.0) {
      std::snprintf(shown, sizeof shown, "%g", preset.re);
    } else {
      std::snprintf(shown, sizeof shown, "%g,%g", preset.re, preset.im);
    }
    text = shown;
    opt = cmd->add_option("--" + name, text, what + " as re or re,im")
              ->capture_default_str();
  }

  bool resolve(qsv_complex* z) const {
    if (opt->count() == 0) {
      *z = preset;
      return true;
    }
    return parse_complex(text, z);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale state-vector laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qsv_version());

  std::string out_path;
  app.add_option("--out", out_path,
                 "write the report to this file instead of stdout; relative "
                 "paths land under $QSV_OUTPUT_DIR")
      ->group("Output");

  // bell
  auto* bell = app.add_subcommand(
      "bell", "singlet correlations along two measurement axes");
  bell->fallthrough();
  DirectionFlags bell_a, bell_b;
  bell_a.attach(bell, "a", "first axis");
  bell_b.attach(bell, "b", "second axis");

  // cat
  auto* cat = app.add_subcommand(
      "cat", "spin-orienter interaction: evolution and pre-images");
  cat->fallthrough();
  double cat_phi = M_PI;
  double cat_chi = 0.0;
  cat->add_option("--phi", cat_phi, "flip phase for the intact branch")
      ->capture_default_str();
  cat->add_option("--chi", cat_chi, "flip phase for the decayed branch")
      ->capture_default_str();

  // eraser
  auto* eraser = app.add_subcommand(
      "eraser", "which-path eraser joint probability tables");
  eraser->fallthrough();

  // ghz-check
  auto* ghz_check = app.add_subcommand(
      "ghz-check", "three-spin eigenvalue checks and the all-x paradox");
  ghz_check->fallthrough();

  // ghz-set
  auto* ghz_set = app.add_subcommand(
      "ghz-set", "construct and verify a consistent outcome assignment");
  ghz_set->fallthrough();
  qsv_ghz_set_params set_params;
  qsv_ghz_set_params_default(&set_params);
  std::string poles_str = "1,1,-1";
  std::string set_format = "json";
  ghz_set->add_option("--theta-i", set_params.theta_i,
                      "boundary latitude, particle 1")
      ->capture_default_str();
  ghz_set->add_option("--theta-j", set_params.theta_j,
                      "boundary latitude, particle 2")
      ->capture_default_str();
  ghz_set->add_option("--poles", poles_str, "per-particle poles, e.g. 1,1,-1")
      ->capture_default_str();
  ghz_set->add_option("--epsilon", set_params.epsilon,
                      "excluded half-width at each boundary")
      ->capture_default_str();
  ghz_set->add_option("--samples", set_params.samples,
                      "verification sample count")
      ->capture_default_str();
  ghz_set->add_option("--seed", set_params.seed, "verification RNG seed")
      ->capture_default_str();
  ghz_set->add_option("--tol", set_params.check_tol,
                      "orthogonality decision tolerance")
      ->capture_default_str();
  ghz_set->add_option("--map-theta-steps", set_params.map_theta_steps,
                      "region-map latitude resolution (csv)")
      ->capture_default_str();
  ghz_set->add_option("--map-phi-steps", set_params.map_phi_steps,
                      "region-map azimuth resolution (csv)")
      ->capture_default_str();
  ghz_set->add_option("--format", set_format, "json report or csv region map")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // zwm
  auto* zwm = app.add_subcommand(
      "zwm", "induced-coherence interferometer intensity and visibility");
  zwm->fallthrough();
  qsv_zwm_params zwm_params;
  qsv_zwm_params_default(&zwm_params);
  ComplexFlag zf_g1, zf_g2, zf_v1, zf_v2, zf_t, zf_b;
  zf_g1.attach(zwm, "g1", zwm_params.g1, "first converter coupling");
  zf_g2.attach(zwm, "g2", zwm_params.g2, "second converter coupling");
  zf_v1.attach(zwm, "v1", zwm_params.v1, "pump amplitude at converter 1");
  zf_v2.attach(zwm, "v2", zwm_params.v2, "pump amplitude at converter 2");
  zf_t.attach(zwm, "T", zwm_params.transmit, "attenuator transmission");
  zf_b.attach(zwm, "B", zwm_params.block, "attenuator blocking");
  std::string zwm_format = "json";
  zwm->add_option("--omega", zwm_params.omega_i, "idler angular frequency")
      ->capture_default_str();
  zwm->add_option("--d12", zwm_params.d12, "converter separation, m")
      ->capture_default_str();
  zwm->add_option("--t1", zwm_params.t1, "conversion time 1, s")
      ->capture_default_str();
  zwm->add_option("--t2", zwm_params.t2, "conversion time 2, s")
      ->capture_default_str();
  zwm->add_option("--theta1", zwm_params.theta1, "signal path phase 1")
      ->capture_default_str();
  zwm->add_option("--theta2", zwm_params.theta2, "signal path phase 2")
      ->capture_default_str();
  zwm->add_option("--d-att-dc2", zwm_params.d_attenuator_to_dc2,
                  "attenuator to converter 2 distance, m")
      ->capture_default_str();
  zwm->add_option("--d-dc2-det", zwm_params.d_dc2_to_detector,
                  "converter 2 to detector distance, m")
      ->capture_default_str();
  zwm->add_option("--scan-points", zwm_params.scan_points,
                  "fringe scan resolution (csv)")
      ->capture_default_str();
  zwm->add_option("--format", zwm_format, "json report or csv fringe scan")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // photo
  auto* photo = app.add_subcommand(
      "photo", "two-site photoelectric scattering report");
  photo->fallthrough();
  qsv_photo_params photo_params;
  qsv_photo_params_default(&photo_params);
  ComplexFlag pf_a, pf_bp, pf_bm, pf_cp, pf_cm;
  pf_a.attach(photo, "A", photo_params.a, "non-disturbance amplitude");
  pf_bp.attach(photo, "B-plus", photo_params.b_plus, "electron amplitude, +x");
  pf_bm.attach(photo, "B-minus", photo_params.b_minus,
               "electron amplitude, -x");
  pf_cp.attach(photo, "C-plus", photo_params.c_plus, "other amplitude, +x");
  pf_cm.attach(photo, "C-minus", photo_params.c_minus, "other amplitude, -x");
  double photo_phi = photo_params.phi;
  photo->add_option("--phi", photo_phi, "illumination phase")
      ->capture_default_str();

  // selftest
  auto* selftest = app.add_subcommand(
      "selftest", "full acceptance suite; exits nonzero on any failure");
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  char* text = nullptr;
  qsv_status status = QSV_OK;
  int selftest_all_pass = 1;

  if (*bell) {
    double a[3] = {0.0, 0.0, 1.0};
    double b[3] = {0.0, 0.0, 1.0};
    if (!bell_a.resolve(a)) return usage_error("--a expects x,y,z");
    if (!bell_b.resolve(b)) return usage_error("--b expects x,y,z");
    status = qsv_run_bell(a[0], a[1], a[2], b[0], b[1], b[2], &text);
  } else if (*cat) {
    status = qsv_run_cat(cat_phi, cat_chi, &text);
  } else if (*eraser) {
    status = qsv_run_eraser(&text);
  } else if (*ghz_check) {
    status = qsv_run_ghz_check(&text);
  } else if (*ghz_set) {
    int poles[3];
    if (!parse_poles(poles_str, poles)) {
      return usage_error("--poles expects three comma-separated signs");
    }
    set_params.pole1 = poles[0];
    set_params.pole2 = poles[1];
    set_params.pole3 = poles[2];
    status = qsv_run_ghz_set(&set_params, set_format == "csv" ? 1 : 0, &text);
  } else if (*zwm) {
    if (!zf_g1.resolve(&zwm_params.g1)) return usage_error("--g1 expects re[,im]");
    if (!zf_g2.resolve(&zwm_params.g2)) return usage_error("--g2 expects re[,im]");
    if (!zf_v1.resolve(&zwm_params.v1)) return usage_error("--v1 expects re[,im]");
    if (!zf_v2.resolve(&zwm_params.v2)) return usage_error("--v2 expects re[,im]");
    if (!zf_t.resolve(&zwm_params.transmit)) return usage_error("--T expects re[,im]");
    if (!zf_b.resolve(&zwm_params.block)) return usage_error("--B expects re[,im]");
    status = qsv_run_zwm(&zwm_params, zwm_format == "csv" ? 1 : 0, &text);
  } else if (*photo) {
    if (!pf_a.resolve(&photo_params.a)) return usage_error("--A expects re[,im]");
    if (!pf_bp.resolve(&photo_params.b_plus)) return usage_error("--B-plus expects re[,im]");
    if (!pf_bm.resolve(&photo_params.b_minus)) return usage_error("--B-minus expects re[,im]");
    if (!pf_cp.resolve(&photo_params.c_plus)) return usage_error("--C-plus expects re[,im]");
    if (!pf_cm.resolve(&photo_params.c_minus)) return usage_error("--C-minus expects re[,im]");
    photo_params.phi = photo_phi;
    status = qsv_run_photo(&photo_params, &text);
  } else if (*selftest) {
    status = qsv_run_selftest(&text, &selftest_all_pass);
  }

  if (status != QSV_OK) return runtime_error_exit();

  const int emit_rc = emit(out_path, text);
  qsv_string_free(text);
  if (emit_rc != 0) return emit_rc;
  if (*selftest && selftest_all_pass == 0) return 1;
  return 0;
}
