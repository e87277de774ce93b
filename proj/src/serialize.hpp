#pragma once

#include <string>

#include "dense_operator.hpp"
#include "json_writer.hpp"
#include "ket.hpp"

namespace qsv {

// {"labels": [...], "amps": [[re, im], ...]}
void write_ket(JsonWriter& w, const Ket& ket);

// {"labels": [...], "matrix": [[[re, im], ...], ...]}
void write_operator(JsonWriter& w, const Operator& op);

std::string ket_json(const Ket& ket);
std::string operator_json(const Operator& op);

}  // namespace qsv
