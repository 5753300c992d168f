#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gordian/error.hpp>
#include <gordian/poly.hpp>

namespace testutil {

inline std::string data_dir() {
  if (const char* env = std::getenv("GORDAN_DATA")) return env;
  return "data";
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gordian::MissingFixture("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture(const std::string& rel) {
  return slurp(data_dir() + "/" + rel);
}

// The ten-vertex realizations (8_x, 9_x), as shipped.
inline const std::vector<std::string>& ten_vertex_labels() {
  static const std::vector<std::string> v = {
      "8_1",  "8_2",  "8_3",  "8_4",  "8_5",  "8_6",  "8_7",  "8_8",
      "8_9",  "8_10", "8_11", "8_12", "8_13", "8_14", "8_15", "9_7",
      "9_16", "9_20", "9_26", "9_28", "9_32", "9_33"};
  return v;
}

// The twelve-vertex realizations (10_76 and the 13/14-crossing knots).
inline const std::vector<std::string>& twelve_vertex_labels() {
  static const std::vector<std::string> v = {
      "10_76",  "13n226",  "13n328", "13n342",  "13n343", "13n350",
      "13n512", "13n973",  "13n2641", "13n5018", "14n1753"};
  return v;
}

inline std::vector<std::string> all_labels() {
  std::vector<std::string> v = ten_vertex_labels();
  const auto& w = twelve_vertex_labels();
  v.insert(v.end(), w.begin(), w.end());
  return v;
}

inline gordian::PolygonalKnot load_polygon(const std::string& label) {
  return gordian::parse_polygon(fixture(label + ".poly"));
}

}  // namespace testutil
