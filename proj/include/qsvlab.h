/* C interface to the state-vector laboratory.  All heap objects cross the
 * boundary as opaque handles; every fallible call returns a status code and
 * leaves a thread-local message readable via qsv_last_error_message(). */
#ifndef QSVLAB_H
#define QSVLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsv_status {
  QSV_OK = 0,
  QSV_ERR_INVALID_ARGUMENT = 1, /* input violates a documented precondition */
  QSV_ERR_CHECK_FAILED = 2,     /* a construction-time consistency check failed */
  QSV_ERR_NULL_POINTER = 3,
  QSV_ERR_INTERNAL = 4,
} qsv_status;

typedef struct qsv_complex {
  double re;
  double im;
} qsv_complex;

/* Opaque handles.  Release with the matching *_free; free(NULL) is a no-op. */
typedef struct qsv_ket qsv_ket;
typedef struct qsv_operator qsv_operator;

const char* qsv_version(void);

/* Message from the most recent failing call on this thread; never NULL. */
const char* qsv_last_error_message(void);

/* Releases strings returned through char** out-parameters. */
void qsv_string_free(char* s);

void qsv_ket_free(qsv_ket* k);
void qsv_operator_free(qsv_operator* op);

/* ---- state construction ---- */

qsv_status qsv_singlet_make(qsv_ket** out);
qsv_status qsv_ghz_make(qsv_ket** out);

/* Eigenvector of the spin projection along (theta, phi); sign +1 or -1. */
qsv_status qsv_eigenspinor_make(double theta, double phi, int sign,
                                qsv_ket** out);

qsv_status qsv_ket_tensor(const qsv_ket* a, const qsv_ket* b, qsv_ket** out);

/* ---- operator construction ---- */

qsv_status qsv_sigma_dot_n_make(double theta, double phi, qsv_operator** out);

/* Spin-orienter interaction with the given flip phases. */
qsv_status qsv_cat_s_make(double phi, double chi, qsv_operator** out);

/* Two-site photon/electron/other scattering operator. */
qsv_status qsv_photo_s_make(qsv_complex a, qsv_complex b_plus,
                            qsv_complex b_minus, qsv_complex c_plus,
                            qsv_complex c_minus, qsv_operator** out);

/* ---- inspection ---- */

qsv_status qsv_ket_dim(const qsv_ket* k, size_t* out);
qsv_status qsv_ket_amplitude(const qsv_ket* k, size_t index, qsv_complex* out);

/* Basis label at index, tokens joined with commas; release with
 * qsv_string_free. */
qsv_status qsv_ket_label(const qsv_ket* k, size_t index, char** out);

qsv_status qsv_ket_norm(const qsv_ket* k, double* out);

/* <bra|ket>; fails unless the two kets share a basis. */
qsv_status qsv_ket_inner(const qsv_ket* bra, const qsv_ket* ket,
                         qsv_complex* out);

qsv_status qsv_operator_dim(const qsv_operator* op, size_t* out);
qsv_status qsv_operator_entry(const qsv_operator* op, size_t row, size_t col,
                              qsv_complex* out);
qsv_status qsv_operator_apply(const qsv_operator* op, const qsv_ket* k,
                              qsv_ket** out);
qsv_status qsv_operator_apply_adjoint(const qsv_operator* op, const qsv_ket* k,
                                      qsv_ket** out);
qsv_status qsv_operator_unitarity_residual(const qsv_operator* op,
                                           double* out);

/* ---- report runners ----
 *
 * Each runner renders a full machine-readable report (JSON, or CSV where
 * noted) into *out as a NUL-terminated string owned by the caller; release
 * with qsv_string_free.  Identical parameters yield identical bytes. */

qsv_status qsv_run_bell(double ax, double ay, double az, double bx, double by,
                        double bz, char** out);

qsv_status qsv_run_cat(double phi, double chi, char** out);

qsv_status qsv_run_eraser(char** out);

qsv_status qsv_run_ghz_check(char** out);

typedef struct qsv_ghz_set_params {
  double theta_i;
  double theta_j;
  int pole1; /* +1 or -1 per particle */
  int pole2;
  int pole3;
  double epsilon;
  uint64_t samples;
  uint64_t seed;
  double check_tol;
  size_t map_theta_steps; /* region-map CSV resolution */
  size_t map_phi_steps;
} qsv_ghz_set_params;

void qsv_ghz_set_params_default(qsv_ghz_set_params* params);

/* as_csv nonzero emits the region map instead of the JSON report. */
qsv_status qsv_run_ghz_set(const qsv_ghz_set_params* params, int as_csv,
                           char** out);

typedef struct qsv_zwm_params {
  qsv_complex g1;
  qsv_complex g2;
  qsv_complex v1;
  qsv_complex v2;
  qsv_complex transmit;
  qsv_complex block;
  double omega_i;
  double d12;
  double t1;
  double t2;
  double theta1;
  double theta2;
  double d_attenuator_to_dc2;
  double d_dc2_to_detector;
  size_t scan_points;
} qsv_zwm_params;

void qsv_zwm_params_default(qsv_zwm_params* params);

/* as_csv nonzero emits the fringe scan instead of the JSON report. */
qsv_status qsv_run_zwm(const qsv_zwm_params* params, int as_csv, char** out);

typedef struct qsv_photo_params {
  qsv_complex a;
  qsv_complex b_plus;
  qsv_complex b_minus;
  qsv_complex c_plus;
  qsv_complex c_minus;
  double phi;
} qsv_photo_params;

void qsv_photo_params_default(qsv_photo_params* params);

qsv_status qsv_run_photo(const qsv_photo_params* params, char** out);

/* Runs the full acceptance suite; *all_pass set to 1 when every criterion
 * holds.  The report is one line per criterion plus a summary. */
qsv_status qsv_run_selftest(char** out, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSVLAB_H */
