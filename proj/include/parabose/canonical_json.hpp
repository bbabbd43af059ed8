#pragma once

// Canonical JSON text: sorted object keys (nlohmann::json default map),
// no insignificant whitespace, reals as %.17g with a forced decimal point.
// Parsing the output and dumping it again reproduces it byte for byte.

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace parabose {

inline std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

inline void dump_canonical(const nlohmann::json& j, std::string& out) {
  using nlohmann::json;
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_canonical(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_canonical(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_real(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

inline std::string dump_canonical(const nlohmann::json& j) {
  std::string s;
  dump_canonical(j, s);
  return s;
}

}  // namespace parabose
