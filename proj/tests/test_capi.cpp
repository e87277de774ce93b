#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared-library boundary only: this translation unit must
// compile against qsvlab.h alone and link nothing but the C API.
#include "qsvlab.h"

#include <cmath>
#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string copy(s);
  qsv_string_free(s);
  return copy;
}

}  // namespace

TEST_CASE("version and error channel") {
  CHECK(std::strcmp(qsv_version(), "1.0.0") == 0);
  CHECK(qsv_last_error_message() != nullptr);
}

TEST_CASE("singlet handle round trip") {
  qsv_ket* singlet = nullptr;
  REQUIRE(qsv_singlet_make(&singlet) == QSV_OK);

  size_t dim = 0;
  CHECK(qsv_ket_dim(singlet, &dim) == QSV_OK);
  CHECK(dim == 4);

  const double inv = 1.0 / std::sqrt(2.0);
  qsv_complex amp{};
  CHECK(qsv_ket_amplitude(singlet, 1, &amp) == QSV_OK);
  CHECK(amp.re == inv);
  CHECK(amp.im == 0.0);
  CHECK(qsv_ket_amplitude(singlet, 2, &amp) == QSV_OK);
  CHECK(amp.re == -inv);

  char* label = nullptr;
  REQUIRE(qsv_ket_label(singlet, 1, &label) == QSV_OK);
  CHECK(take(label) == "+z,-z");

  double norm = 0.0;
  CHECK(qsv_ket_norm(singlet, &norm) == QSV_OK);
  CHECK(std::abs(norm - 1.0) < 1e-15);

  CHECK(qsv_ket_amplitude(singlet, 4, &amp) == QSV_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(qsv_last_error_message()) > 0);

  qsv_ket_free(singlet);
}

TEST_CASE("eigenspinors, tensor products and inner products") {
  qsv_ket* up = nullptr;
  qsv_ket* down = nullptr;
  REQUIRE(qsv_eigenspinor_make(0.6, 1.1, 1, &up) == QSV_OK);
  REQUIRE(qsv_eigenspinor_make(0.6, 1.1, -1, &down) == QSV_OK);

  qsv_complex amp{};
  CHECK(qsv_ket_amplitude(up, 0, &amp) == QSV_OK);
  CHECK(std::abs(amp.re - std::cos(0.3)) < 1e-15);
  CHECK(amp.im == 0.0);

  qsv_complex overlap{};
  CHECK(qsv_ket_inner(up, down, &overlap) == QSV_OK);
  CHECK(std::abs(overlap.re) < 1e-15);
  CHECK(std::abs(overlap.im) < 1e-15);

  qsv_ket* pair = nullptr;
  REQUIRE(qsv_ket_tensor(up, down, &pair) == QSV_OK);
  size_t dim = 0;
  CHECK(qsv_ket_dim(pair, &dim) == QSV_OK);
  CHECK(dim == 4);

  CHECK(qsv_eigenspinor_make(0.6, 1.1, 2, &up) == QSV_ERR_INVALID_ARGUMENT);

  qsv_ket_free(pair);
  qsv_ket_free(down);
  qsv_ket_free(up);
}

TEST_CASE("operators apply and report unitarity") {
  qsv_operator* sz = nullptr;
  REQUIRE(qsv_sigma_dot_n_make(0.0, 0.0, &sz) == QSV_OK);
  qsv_complex entry{};
  CHECK(qsv_operator_entry(sz, 0, 0, &entry) == QSV_OK);
  CHECK(entry.re == 1.0);
  CHECK(qsv_operator_entry(sz, 1, 1, &entry) == QSV_OK);
  CHECK(entry.re == -1.0);

  qsv_ket* minus = nullptr;
  REQUIRE(qsv_eigenspinor_make(M_PI, 0.0, 1, &minus) == QSV_OK);
  qsv_ket* image = nullptr;
  REQUIRE(qsv_operator_apply(sz, minus, &image) == QSV_OK);
  qsv_complex amp{};
  CHECK(qsv_ket_amplitude(image, 1, &amp) == QSV_OK);
  CHECK(std::abs(amp.re + 1.0) < 1e-15);

  qsv_operator* cat = nullptr;
  REQUIRE(qsv_cat_s_make(2.2, 0.4, &cat) == QSV_OK);
  double residual = 1.0;
  CHECK(qsv_operator_unitarity_residual(cat, &residual) == QSV_OK);
  CHECK(residual < 1e-12);
  size_t dim = 0;
  CHECK(qsv_operator_dim(cat, &dim) == QSV_OK);
  CHECK(dim == 4);

  qsv_operator* photo = nullptr;
  REQUIRE(qsv_photo_s_make({0.6, 0.0}, {0.3, 0.1}, {0.3, -0.1}, {0.0, 0.0},
                           {0.0, 0.0}, &photo) == QSV_OK);
  CHECK(qsv_operator_dim(photo, &dim) == QSV_OK);
  CHECK(dim == 6);

  qsv_ket* pre = nullptr;
  REQUIRE(qsv_operator_apply_adjoint(photo, image, &pre) ==
          QSV_ERR_INVALID_ARGUMENT);  // dimension mismatch

  qsv_operator_free(photo);
  qsv_operator_free(cat);
  qsv_ket_free(image);
  qsv_ket_free(minus);
  qsv_operator_free(sz);
  qsv_ket_free(pre);  // free(NULL) is a no-op
}

TEST_CASE("null pointers are rejected uniformly") {
  CHECK(qsv_singlet_make(nullptr) == QSV_ERR_NULL_POINTER);
  CHECK(qsv_ket_dim(nullptr, nullptr) == QSV_ERR_NULL_POINTER);
  CHECK(qsv_run_bell(0, 0, 1, 0, 0, 1, nullptr) == QSV_ERR_NULL_POINTER);
  CHECK(qsv_run_ghz_set(nullptr, 0, nullptr) == QSV_ERR_NULL_POINTER);
}

TEST_CASE("report runners render and validate") {
  char* out = nullptr;
  REQUIRE(qsv_run_bell(0.0, 0.0, 1.0, 1.0, 0.0, 0.0, &out) == QSV_OK);
  const std::string bell = take(out);
  CHECK(bell.find("P_concurrent") != std::string::npos);
  CHECK(bell.find("P_qm") != std::string::npos);

  out = nullptr;
  CHECK(qsv_run_bell(0.0, 0.0, 0.0, 0.0, 0.0, 1.0, &out) ==
        QSV_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(qsv_last_error_message()) > 0);

  REQUIRE(qsv_run_cat(1.1, 0.0, &out) == QSV_OK);
  CHECK(take(out).find("unitarity_residual") != std::string::npos);

  REQUIRE(qsv_run_eraser(&out) == QSV_OK);
  CHECK(take(out).find("joint_probs") != std::string::npos);

  REQUIRE(qsv_run_ghz_check(&out) == QSV_OK);
  CHECK(take(out).find("paradox") != std::string::npos);

  qsv_ghz_set_params params;
  qsv_ghz_set_params_default(&params);
  CHECK(params.pole3 == -1);
  params.samples = 200;
  REQUIRE(qsv_run_ghz_set(&params, 0, &out) == QSV_OK);
  CHECK(take(out).find("violations") != std::string::npos);
  REQUIRE(qsv_run_ghz_set(&params, 1, &out) == QSV_OK);
  CHECK(take(out).rfind("particle,theta,phi,assignment\n", 0) == 0);

  qsv_zwm_params zwm;
  qsv_zwm_params_default(&zwm);
  REQUIRE(qsv_run_zwm(&zwm, 0, &out) == QSV_OK);
  CHECK(take(out).find("visibility") != std::string::npos);
  zwm.transmit = {2.0, 0.0};  // breaks |T|^2 + |B|^2 = 1
  CHECK(qsv_run_zwm(&zwm, 0, &out) == QSV_ERR_INVALID_ARGUMENT);

  qsv_photo_params photo;
  qsv_photo_params_default(&photo);
  REQUIRE(qsv_run_photo(&photo, &out) == QSV_OK);
  CHECK(take(out).find("electron_split") != std::string::npos);
}
