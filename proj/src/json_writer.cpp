#include "json_writer.hpp"

#include <cstdio>

namespace qsv {

std::string JsonWriter::format_double(double v) {
  if (!is_finite(v)) {
    throw InvalidArgument("JSON output admits only finite numbers");
  }
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

void JsonWriter::before_value() {
  if (frames_.empty()) return;
  Frame& f = frames_.back();
  if (f.awaiting_value) {
    f.awaiting_value = false;  // value directly after its key
    return;
  }
  if (f.has_item) out_ += ',';
  f.has_item = true;
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_ += '{';
  frames_.push_back(Frame{});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  frames_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_ += '[';
  frames_.push_back(Frame{});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  frames_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  Frame& f = frames_.back();
  if (f.has_item) out_ += ',';
  f.has_item = true;
  f.awaiting_value = true;
  out_ += '"';
  out_.append(name);
  out_ += "\":";
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value();
  out_ += format_double(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  before_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_value();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_value();
  out_ += '"';
  for (char c : v) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      case '\r': out_ += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out_ += buf;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
  return *this;
}

JsonWriter& JsonWriter::value(const Complex& z) {
  begin_array();
  value(z.real());
  value(z.imag());
  end_array();
  return *this;
}

}  // namespace qsv
