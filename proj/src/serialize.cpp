#include "serialize.hpp"

namespace qsv {

void write_ket(JsonWriter& w, const Ket& ket) {
  w.begin_object();
  w.key("labels").begin_array();
  for (std::size_t i = 0; i < ket.dim(); ++i) {
    w.value(ket.basis().label_string(i));
  }
  w.end_array();
  w.key("amps").begin_array();
  for (std::size_t i = 0; i < ket.dim(); ++i) w.value(ket.amp(i));
  w.end_array();
  w.end_object();
}

void write_operator(JsonWriter& w, const Operator& op) {
  w.begin_object();
  w.key("labels").begin_array();
  for (std::size_t i = 0; i < op.dim(); ++i) {
    w.value(op.basis().label_string(i));
  }
  w.end_array();
  w.key("matrix").begin_array();
  for (std::size_t r = 0; r < op.dim(); ++r) {
    w.begin_array();
    for (std::size_t c = 0; c < op.dim(); ++c) w.value(op.entry(r, c));
    w.end_array();
  }
  w.end_array();
  w.end_object();
}

std::string ket_json(const Ket& ket) {
  JsonWriter w;
  write_ket(w, ket);
  return w.str();
}

std::string operator_json(const Operator& op) {
  JsonWriter w;
  write_operator(w, op);
  return w.str();
}

}  // namespace qsv
