#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "types.hpp"

namespace qsv {

// Streaming JSON emitter.  Keys keep insertion order and every floating-point
// number is printed with 17 significant digits, which the bundled JSON
// library does not offer; output is byte deterministic for identical input.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();

  JsonWriter& key(std::string_view name);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& value(const Complex& z);  // [re, im]

  const std::string& str() const { return out_; }

  static std::string format_double(double v);

 private:
  struct Frame {
    bool has_item = false;
    bool awaiting_value = false;
  };

  void before_value();

  std::string out_;
  std::vector<Frame> frames_;
};

}  // namespace qsv
