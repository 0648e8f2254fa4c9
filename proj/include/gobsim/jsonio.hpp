// SPDX-License-Identifier: Apache-2.0
#ifndef GOBSIM_JSONIO_HPP
#define GOBSIM_JSONIO_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gobsim {

// Formats a double with 17 significant digits ("%.17g"). Round-trips
// exactly and, unlike the default shortest-representation emitters,
// gives a single fixed convention for byte-identical record files.
std::string format_double(double v);

// Minimal streaming JSON writer for result records. Keys are emitted in
// the order given by the caller; callers keep that order fixed so two
// identical runs produce identical bytes.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value_raw(std::string_view v);  // pre-formatted token

  template <typename T>
  JsonWriter& kv(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  JsonWriter& array_of(std::string_view k, const std::vector<double>& xs);
  JsonWriter& array_of(std::string_view k, const std::vector<int>& xs);

  const std::string& str() const { return out_; }
  void clear();

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_;   // per nesting level
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace gobsim

#endif
