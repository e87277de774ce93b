#include "qsvlab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <type_traits>

#include "bell.hpp"
#include "cat_eraser.hpp"
#include "dense_operator.hpp"
#include "ghz.hpp"
#include "ket.hpp"
#include "photo.hpp"
#include "runners.hpp"
#include "selftest.hpp"
#include "spin.hpp"

struct qsv_ket {
  qsv::Ket value;
};

struct qsv_operator {
  qsv::Operator value;
};

namespace {

thread_local std::string g_last_error = "no error";

qsv_status fail(qsv_status code, const char* message) {
  g_last_error = message;
  return code;
}

// Runs fn, translating exceptions into status codes.  fn may itself return a
// status, which passes through.
template <typename F>
qsv_status guarded(F&& fn) {
  try {
    if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
      fn();
      return QSV_OK;
    } else {
      return fn();
    }
  } catch (const qsv::InvalidArgument& e) {
    return fail(QSV_ERR_INVALID_ARGUMENT, e.what());
  } catch (const qsv::CheckFailure& e) {
    return fail(QSV_ERR_CHECK_FAILED, e.what());
  } catch (const std::exception& e) {
    return fail(QSV_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QSV_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsv_status render(const std::string& text, char** out) {
  *out = dup_string(text);
  if (*out == nullptr) return fail(QSV_ERR_INTERNAL, "allocation failed");
  return QSV_OK;
}

qsv::Complex from_c(const qsv_complex& z) { return qsv::Complex(z.re, z.im); }

qsv_complex to_c(const qsv::Complex& z) { return qsv_complex{z.real(), z.imag()}; }

int check_pole(int pole) {
  if (pole != 1 && pole != -1) {
    throw qsv::InvalidArgument("poles must be +1 or -1");
  }
  return pole;
}

qsv::runners::GhzSetParams convert(const qsv_ghz_set_params& p) {
  qsv::runners::GhzSetParams out;
  out.theta_i = p.theta_i;
  out.theta_j = p.theta_j;
  out.poles = {check_pole(p.pole1), check_pole(p.pole2), check_pole(p.pole3)};
  out.epsilon = p.epsilon;
  out.samples = p.samples;
  out.seed = p.seed;
  out.check_tol = p.check_tol;
  out.map_theta_steps = p.map_theta_steps;
  out.map_phi_steps = p.map_phi_steps;
  return out;
}

qsv::runners::ZwmParams convert(const qsv_zwm_params& p) {
  qsv::runners::ZwmParams out;
  out.cfg.g1 = from_c(p.g1);
  out.cfg.g2 = from_c(p.g2);
  out.cfg.v1 = from_c(p.v1);
  out.cfg.v2 = from_c(p.v2);
  out.cfg.transmit = from_c(p.transmit);
  out.cfg.block = from_c(p.block);
  out.cfg.omega_i = p.omega_i;
  out.cfg.d12 = p.d12;
  out.cfg.t1 = p.t1;
  out.cfg.t2 = p.t2;
  out.cfg.theta1 = p.theta1;
  out.cfg.theta2 = p.theta2;
  out.d_attenuator_to_dc2 = p.d_attenuator_to_dc2;
  out.d_dc2_to_detector = p.d_dc2_to_detector;
  out.scan_points = p.scan_points;
  return out;
}

qsv::runners::PhotoParams convert(const qsv_photo_params& p) {
  qsv::runners::PhotoParams out;
  out.cfg.a = from_c(p.a);
  out.cfg.b_plus = from_c(p.b_plus);
  out.cfg.b_minus = from_c(p.b_minus);
  out.cfg.c_plus = from_c(p.c_plus);
  out.cfg.c_minus = from_c(p.c_minus);
  out.phi = p.phi;
  return out;
}

}  // namespace

extern "C" {

const char* qsv_version(void) { return "1.0.0"; }

const char* qsv_last_error_message(void) { return g_last_error.c_str(); }

void qsv_string_free(char* s) { std::free(s); }

void qsv_ket_free(qsv_ket* k) { delete k; }

void qsv_operator_free(qsv_operator* op) { delete op; }

qsv_status qsv_singlet_make(qsv_ket** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] { *out = new qsv_ket{qsv::bell::singlet()}; });
}

qsv_status qsv_ghz_make(qsv_ket** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] { *out = new qsv_ket{qsv::ghz::ghz_state()}; });
}

qsv_status qsv_eigenspinor_make(double theta, double phi, int sign,
                                qsv_ket** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] {
    *out = new qsv_ket{qsv::eigenspinor(qsv::Direction(theta, phi), sign)};
  });
}

qsv_status qsv_ket_tensor(const qsv_ket* a, const qsv_ket* b, qsv_ket** out) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] { *out = new qsv_ket{qsv::tensor(a->value, b->value)}; });
}

qsv_status qsv_sigma_dot_n_make(double theta, double phi, qsv_operator** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] {
    *out = new qsv_operator{qsv::sigma_dot_n(qsv::Direction(theta, phi))};
  });
}

qsv_status qsv_cat_s_make(double phi, double chi, qsv_operator** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] {
    *out = new qsv_operator{qsv::cat_eraser::build_cat_s({phi, chi})};
  });
}

qsv_status qsv_photo_s_make(qsv_complex a, qsv_complex b_plus,
                            qsv_complex b_minus, qsv_complex c_plus,
                            qsv_complex c_minus, qsv_operator** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] {
    const qsv::photo::PhotoConfig cfg{from_c(a), from_c(b_plus),
                                      from_c(b_minus), from_c(c_plus),
                                      from_c(c_minus)};
    *out = new qsv_operator{qsv::photo::build_photo_s(cfg)};
  });
}

qsv_status qsv_ket_dim(const qsv_ket* k, size_t* out) {
  if (k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  *out = k->value.dim();
  return QSV_OK;
}

qsv_status qsv_ket_amplitude(const qsv_ket* k, size_t index, qsv_complex* out) {
  if (k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  if (index >= k->value.dim()) {
    return fail(QSV_ERR_INVALID_ARGUMENT, "amplitude index out of range");
  }
  *out = to_c(k->value.amp(index));
  return QSV_OK;
}

qsv_status qsv_ket_label(const qsv_ket* k, size_t index, char** out) {
  if (k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  if (index >= k->value.dim()) {
    return fail(QSV_ERR_INVALID_ARGUMENT, "label index out of range");
  }
  return render(k->value.basis().label_string(index), out);
}

qsv_status qsv_ket_norm(const qsv_ket* k, double* out) {
  if (k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  *out = k->value.norm();
  return QSV_OK;
}

qsv_status qsv_ket_inner(const qsv_ket* bra, const qsv_ket* ket,
                         qsv_complex* out) {
  if (bra == nullptr || ket == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] { *out = to_c(qsv::inner(bra->value, ket->value)); });
}

qsv_status qsv_operator_dim(const qsv_operator* op, size_t* out) {
  if (op == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  *out = op->value.dim();
  return QSV_OK;
}

qsv_status qsv_operator_entry(const qsv_operator* op, size_t row, size_t col,
                              qsv_complex* out) {
  if (op == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  if (row >= op->value.dim() || col >= op->value.dim()) {
    return fail(QSV_ERR_INVALID_ARGUMENT, "entry index out of range");
  }
  *out = to_c(op->value.entry(row, col));
  return QSV_OK;
}

qsv_status qsv_operator_apply(const qsv_operator* op, const qsv_ket* k,
                              qsv_ket** out) {
  if (op == nullptr || k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] { *out = new qsv_ket{op->value.apply(k->value)}; });
}

qsv_status qsv_operator_apply_adjoint(const qsv_operator* op, const qsv_ket* k,
                                      qsv_ket** out) {
  if (op == nullptr || k == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] { *out = new qsv_ket{op->value.apply_adjoint(k->value)}; });
}

qsv_status qsv_operator_unitarity_residual(const qsv_operator* op,
                                           double* out) {
  if (op == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  *out = op->value.unitarity_residual();
  return QSV_OK;
}

qsv_status qsv_run_bell(double ax, double ay, double az, double bx, double by,
                        double bz, char** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] {
    qsv::runners::BellParams p{qsv::Direction::from_cartesian(ax, ay, az),
                               qsv::Direction::from_cartesian(bx, by, bz)};
    return render(qsv::runners::run_bell(p), out);
  });
}

qsv_status qsv_run_cat(double phi, double chi, char** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded(
      [&] { return render(qsv::runners::run_cat({{phi, chi}}), out); });
}

qsv_status qsv_run_eraser(char** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] { return render(qsv::runners::run_eraser(), out); });
}

qsv_status qsv_run_ghz_check(char** out) {
  if (out == nullptr) return fail(QSV_ERR_NULL_POINTER, "out is NULL");
  return guarded([&] { return render(qsv::runners::run_ghz_check(), out); });
}

void qsv_ghz_set_params_default(qsv_ghz_set_params* params) {
  if (params == nullptr) return;
  const qsv::runners::GhzSetParams d;
  params->theta_i = d.theta_i;
  params->theta_j = d.theta_j;
  params->pole1 = d.poles[0];
  params->pole2 = d.poles[1];
  params->pole3 = d.poles[2];
  params->epsilon = d.epsilon;
  params->samples = d.samples;
  params->seed = d.seed;
  params->check_tol = d.check_tol;
  params->map_theta_steps = d.map_theta_steps;
  params->map_phi_steps = d.map_phi_steps;
}

qsv_status qsv_run_ghz_set(const qsv_ghz_set_params* params, int as_csv,
                           char** out) {
  if (params == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] {
    const auto p = convert(*params);
    return render(as_csv != 0 ? qsv::runners::run_ghz_set_csv(p)
                              : qsv::runners::run_ghz_set(p),
                  out);
  });
}

void qsv_zwm_params_default(qsv_zwm_params* params) {
  if (params == nullptr) return;
  const qsv::runners::ZwmParams d = qsv::runners::default_zwm_params();
  params->g1 = to_c(d.cfg.g1);
  params->g2 = to_c(d.cfg.g2);
  params->v1 = to_c(d.cfg.v1);
  params->v2 = to_c(d.cfg.v2);
  params->transmit = to_c(d.cfg.transmit);
  params->block = to_c(d.cfg.block);
  params->omega_i = d.cfg.omega_i;
  params->d12 = d.cfg.d12;
  params->t1 = d.cfg.t1;
  params->t2 = d.cfg.t2;
  params->theta1 = d.cfg.theta1;
  params->theta2 = d.cfg.theta2;
  params->d_attenuator_to_dc2 = d.d_attenuator_to_dc2;
  params->d_dc2_to_detector = d.d_dc2_to_detector;
  params->scan_points = d.scan_points;
}

qsv_status qsv_run_zwm(const qsv_zwm_params* params, int as_csv, char** out) {
  if (params == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] {
    const auto p = convert(*params);
    return render(as_csv != 0 ? qsv::runners::run_zwm_csv(p)
                              : qsv::runners::run_zwm(p),
                  out);
  });
}

void qsv_photo_params_default(qsv_photo_params* params) {
  if (params == nullptr) return;
  const qsv::runners::PhotoParams d;
  params->a = to_c(d.cfg.a);
  params->b_plus = to_c(d.cfg.b_plus);
  params->b_minus = to_c(d.cfg.b_minus);
  params->c_plus = to_c(d.cfg.c_plus);
  params->c_minus = to_c(d.cfg.c_minus);
  params->phi = d.phi;
}

qsv_status qsv_run_photo(const qsv_photo_params* params, char** out) {
  if (params == nullptr || out == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded(
      [&] { return render(qsv::runners::run_photo(convert(*params)), out); });
}

qsv_status qsv_run_selftest(char** out, int* all_pass) {
  if (out == nullptr || all_pass == nullptr) {
    return fail(QSV_ERR_NULL_POINTER, "argument is NULL");
  }
  return guarded([&] {
    const auto report = qsv::selftest::run();
    *all_pass = report.all_pass ? 1 : 0;
    return render(qsv::selftest::format_report(report), out);
  });
}

}  // extern "C"
