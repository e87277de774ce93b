#include "runners.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "bell.hpp"
#include "ghz.hpp"
#include "json_writer.hpp"
#include "serialize.hpp"

namespace qsv::runners {
namespace {

void write_direction(JsonWriter& w, const Direction& d) {
  const auto v = d.cartesian();
  w.begin_array().value(v[0]).value(v[1]).value(v[2]).end_array();
}

void write_hidden_table(JsonWriter& w, const bell::HiddenVariableTable& t) {
  w.begin_object();
  w.key("entries").begin_array();
  for (const auto& e : t.entries) {
    w.begin_object();
    w.key("a_sign").value(e.outcome.a_sign);
    w.key("b_sign").value(e.outcome.b_sign);
    w.key("rho").value(e.rho);
    w.end_object();
  }
  w.end_array();
  w.key("rho_sum").value(t.rho_sum);
  w.end_object();
}

std::string outcome_key(int s1, int s2) {
  std::string k;
  k += s1 > 0 ? '+' : '-';
  k += s2 > 0 ? '+' : '-';
  return k;
}

void write_sew_table(JsonWriter& w, cat_eraser::SewBasis b1,
                     cat_eraser::SewBasis b2) {
  w.begin_object();
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      w.key(outcome_key(s1, s2)).value(cat_eraser::sew_joint_prob(b1, b2, s1, s2));
    }
  }
  w.end_object();
}

void write_verification(JsonWriter& w, const ghz::VerificationReport& r) {
  w.begin_object();
  w.key("samples").value(r.samples);
  w.key("violations").value(r.violations);
  w.key("min_abs_amplitude").value(r.min_abs_amplitude);
  w.key("min_product_margin").value(r.min_product_margin);
  w.key("probe_evaluated").value(r.probe_evaluated);
  w.key("probe_violation").value(r.probe_violation);
  w.end_object();
}

ghz::ConsistentSet set_from_params(const GhzSetParams& p) {
  return ghz::build_consistent_set(p.theta_i, p.theta_j, p.poles, p.epsilon);
}

}  // namespace

std::string run_bell(const BellParams& p) {
  const bell::AxisPair axes{p.a, p.b};
  const auto table = bell::hidden_variable_table(axes);
  const double concurrent = bell::expectation_concurrent(axes);
  const double qm = bell::expectation_qm(axes);

  JsonWriter w;
  w.begin_object();
  w.key("a");
  write_direction(w, p.a);
  w.key("b");
  write_direction(w, p.b);
  w.key("dot").value(p.a.dot(p.b));
  w.key("P_concurrent").value(concurrent);
  w.key("P_qm").value(qm);
  w.key("P_product").value(-p.a.dot(p.b));
  w.key("diff").value(std::abs(concurrent - qm));
  w.key("table");
  write_hidden_table(w, table);
  w.end_object();
  return w.str();
}

std::string run_cat(const CatParams& p) {
  using cat_eraser::CatLabel;
  const auto s = cat_eraser::build_cat_s(p.phases);
  constexpr std::array<CatLabel, 4> kLabels = {
      CatLabel::plus_intact, CatLabel::minus_intact, CatLabel::plus_decayed,
      CatLabel::minus_decayed};

  JsonWriter w;
  w.begin_object();
  w.key("phi").value(p.phases.phi);
  w.key("chi").value(p.phases.chi);
  w.key("unitarity_residual").value(s.unitarity_residual());
  w.key("s");
  write_operator(w, s);
  w.key("evolved").begin_object();
  for (CatLabel l : kLabels) {
    w.key(s.basis().label_string(static_cast<std::size_t>(l)));
    write_ket(w, cat_eraser::evolve(l, p.phases));
  }
  w.end_object();
  w.key("initial_forms").begin_object();
  for (CatLabel l : kLabels) {
    w.key(s.basis().label_string(static_cast<std::size_t>(l)));
    write_ket(w, cat_eraser::initial_form_of_final(l, p.phases));
  }
  w.end_object();
  if (std::abs(p.phases.phi - M_PI) < 1e-12) {
    w.key("singlet_map");
    write_ket(w, cat_eraser::map_to_singlet(p.phases));
  }
  w.end_object();
  return w.str();
}

std::string run_eraser() {
  using cat_eraser::SewBasis;
  JsonWriter w;
  w.begin_object();
  w.key("state");
  write_ket(w, cat_eraser::sew_state());
  w.key("joint_probs").begin_object();
  w.key("xx");
  write_sew_table(w, SewBasis::x, SewBasis::x);
  w.key("zz");
  write_sew_table(w, SewBasis::z, SewBasis::z);
  w.key("xz");
  write_sew_table(w, SewBasis::x, SewBasis::z);
  w.key("zx");
  write_sew_table(w, SewBasis::z, SewBasis::x);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string run_ghz_check() {
  const auto eig = ghz::check_defining_eigenvalues();
  const auto paradox = ghz::mermin_paradox_report();

  JsonWriter w;
  w.begin_object();
  w.key("eigenvalues").begin_array();
  for (double v : eig.values) w.value(v);
  w.end_array();
  w.key("residuals").begin_array();
  for (double v : eig.residuals) w.value(v);
  w.end_array();
  w.key("single_site_x_residuals").begin_array();
  for (int particle = 0; particle < 3; ++particle) {
    w.value(ghz::single_site_x_residual(particle));
  }
  w.end_array();
  w.key("paradox").begin_object();
  w.key("minus_one_patterns").begin_array();
  for (const auto& pattern : paradox.minus_one_patterns) {
    w.begin_array();
    for (int s : pattern) w.value(s);
    w.end_array();
  }
  w.end_array();
  w.key("contradicted_witnesses").begin_array();
  for (const auto& ws : paradox.contradicted_witnesses) {
    w.begin_array();
    for (int i : ws) w.value(i);
    w.end_array();
  }
  w.end_array();
  w.key("consistent_pattern").begin_array();
  for (int s : paradox.consistent_pattern) w.value(s);
  w.end_array();
  w.key("consistent_xxx_eigenvalue")
      .value(paradox.consistent_pattern_xxx_eigenvalue);
  w.key("consistent_amplitude").value(paradox.consistent_pattern_ghz_amplitude);
  w.end_object();
  w.end_object();
  return w.str();
}

std::string run_ghz_set(const GhzSetParams& p) {
  const auto set = set_from_params(p);
  const auto report =
      ghz::verify_consistent_set(set, p.samples, p.seed, p.check_tol);

  JsonWriter w;
  w.begin_object();
  w.key("theta_i").value(set.boundaries[0]);
  w.key("theta_j").value(set.boundaries[1]);
  w.key("theta_k").value(set.boundaries[2]);
  w.key("poles").begin_array();
  for (int pole : set.poles) w.value(pole);
  w.end_array();
  w.key("epsilon").value(set.epsilon);
  w.key("bands").begin_array();
  for (int particle = 0; particle < 3; ++particle) {
    w.begin_array();
    for (const auto& band : ghz::allowed_theta_bands(set, particle)) {
      w.begin_array().value(band.first).value(band.second).end_array();
    }
    w.end_array();
  }
  w.end_array();
  w.key("seed").value(p.seed);
  w.key("verification");
  write_verification(w, report);
  w.end_object();
  return w.str();
}

std::string run_ghz_set_csv(const GhzSetParams& p) {
  if (p.map_theta_steps < 2 || p.map_phi_steps < 1) {
    throw InvalidArgument("region map needs at least 2 theta and 1 phi steps");
  }
  const auto set = set_from_params(p);
  std::string out = "particle,theta,phi,assignment\n";
  for (int particle = 0; particle < 3; ++particle) {
    for (std::size_t ti = 0; ti < p.map_theta_steps; ++ti) {
      const double theta = M_PI * static_cast<double>(ti) /
                           static_cast<double>(p.map_theta_steps - 1);
      for (std::size_t pi = 0; pi < p.map_phi_steps; ++pi) {
        const double phi = 2.0 * M_PI * static_cast<double>(pi) /
                           static_cast<double>(p.map_phi_steps);
        const int assignment =
            ghz::assign_spin(set, particle, Direction(theta, phi));
        out += std::to_string(particle + 1);
        out += ',';
        out += JsonWriter::format_double(theta);
        out += ',';
        out += JsonWriter::format_double(phi);
        out += ',';
        out += std::to_string(assignment);
        out += '\n';
      }
    }
  }
  return out;
}

ZwmParams default_zwm_params() {
  ZwmParams p;
  p.cfg.g1 = Complex(0.05, 0.0);
  p.cfg.g2 = Complex(0.05, 0.0);
  p.cfg.v1 = Complex(1.0, 0.0);
  p.cfg.v2 = Complex(1.0, 0.0);
  p.cfg.transmit = Complex(1.0 / std::sqrt(2.0), 0.0);
  p.cfg.block = Complex(1.0 / std::sqrt(2.0), 0.0);
  return p;
}

std::string run_zwm(const ZwmParams& p) {
  const auto warnings = zwm::validate(p.cfg);
  const double p1 = std::norm(p.cfg.g1 * p.cfg.v1);
  const double p2 = std::norm(p.cfg.g2 * p.cfg.v2);
  const double cross = 2.0 * std::sqrt(p1 * p2) * std::abs(p.cfg.transmit);
  const double intensity = zwm::signal_intensity(p.cfg);
  const auto amps = zwm::raw_amplitudes(p.cfg);
  const double raw_norm_sq =
      std::norm(amps.vacuum) + std::norm(amps.transmitted) +
      std::norm(amps.blocked) + std::norm(amps.converter2);

  JsonWriter w;
  w.begin_object();
  w.key("visibility").value(zwm::visibility(p.cfg));
  w.key("intensity").value(intensity);
  w.key("intensity_normalized").value(intensity / raw_norm_sq);
  w.key("i_max").value(p1 + p2 + cross);
  w.key("i_min").value(p1 + p2 - cross);
  w.key("fringe_phase").value(zwm::fringe_phase(p.cfg));
  w.key("min_time_lag")
      .value(zwm::min_time_lag(p.d_attenuator_to_dc2, p.d_dc2_to_detector));
  w.key("state");
  write_ket(w, zwm::build_state(p.cfg));
  w.key("warnings").begin_array();
  for (const auto& warning : warnings) w.value(warning);
  w.end_array();
  w.end_object();
  return w.str();
}

std::string run_zwm_csv(const ZwmParams& p) {
  if (p.scan_points < 1) {
    throw InvalidArgument("fringe scan needs at least one point");
  }
  std::vector<double> offsets;
  offsets.reserve(p.scan_points);
  for (std::size_t i = 0; i < p.scan_points; ++i) {
    offsets.push_back(2.0 * M_PI * static_cast<double>(i) /
                      static_cast<double>(p.scan_points));
  }
  std::string out = "offset,intensity\n";
  for (const auto& [offset, intensity] : zwm::scan_intensity(p.cfg, offsets)) {
    out += JsonWriter::format_double(offset);
    out += ',';
    out += JsonWriter::format_double(intensity);
    out += '\n';
  }
  return out;
}

std::string run_photo(const PhotoParams& p) {
  photo::validate(p.cfg);
  const auto s = photo::build_photo_s(p.cfg);
  const bool symmetric =
      std::abs(std::abs(p.cfg.b_plus) - std::abs(p.cfg.b_minus)) < 1e-12 &&
      std::abs(std::abs(p.cfg.c_plus) - std::abs(p.cfg.c_minus)) < 1e-12;

  JsonWriter w;
  w.begin_object();
  w.key("phi").value(p.phi);
  w.key("s");
  write_operator(w, s);
  w.key("uniform");
  write_ket(w, photo::uniform_illumination(p.phi));
  w.key("evolved");
  write_ket(w, photo::evolve_uniform(p.cfg, p.phi));
  for (int site : {1, -1}) {
    const bool has_coupling =
        std::norm(p.cfg.a) +
            std::norm(site == 1 ? p.cfg.b_plus : p.cfg.b_minus) >
        0.0;
    if (!has_coupling) continue;
    w.key(site == 1 ? "pre_image_electron@+x" : "pre_image_electron@-x");
    write_ket(w, photo::pre_image_of_local_electron(p.cfg, site));
  }
  if (symmetric) {
    const auto report = photo::uniformity_report(p.cfg, p.phi);
    w.key("uniformity").begin_object();
    w.key("photon_split").begin_array();
    for (double v : report.photon_split) w.value(v);
    w.end_array();
    w.key("electron_split").begin_array();
    for (double v : report.electron_split) w.value(v);
    w.end_array();
    w.key("other_split").begin_array();
    for (double v : report.other_split) w.value(v);
    w.end_array();
    w.key("pre_image_same_site_fraction").begin_array();
    w.value(report.pre_image_same_site_fraction_plus);
    w.value(report.pre_image_same_site_fraction_minus);
    w.end_array();
    w.end_object();
  }
  w.end_object();
  return w.str();
}

}  // namespace qsv::runners
