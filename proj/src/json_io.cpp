// Copyright 2026 The schemetool authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schemes/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace schemes {

nlohmann::json raw_colors_to_json(const IntMatrix& colors) {
  nlohmann::json rows = nlohmann::json::array();
  for (int x = 0; x < colors.n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < colors.n; ++y) row.push_back(colors.at(x, y));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"n", colors.n}, {"colors", std::move(rows)}};
}

nlohmann::json configuration_to_json(const CoherentConfiguration& cc) {
  nlohmann::json j = raw_colors_to_json(cc.colors);
  if (!cc.names.empty()) j["names"] = cc.names;
  return j;
}

IntMatrix color_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("colors")) {
    throw SchemeError(ErrorCode::BadInput,
                      "scheme JSON needs \"n\" and \"colors\"");
  }
  int n = j.at("n").get<int>();
  const auto& rows = j.at("colors");
  if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw SchemeError(ErrorCode::BadInput, "colors must be an n x n array");
  }
  IntMatrix m(n);
  for (int x = 0; x < n; ++x) {
    const auto& row = rows.at(x);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw SchemeError(ErrorCode::BadInput, "colors must be an n x n array");
    }
    for (int y = 0; y < n; ++y) m.at(x, y) = row.at(y).get<int>();
  }
  return m;
}

CoherentConfiguration configuration_from_json(const nlohmann::json& j) {
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
  }
  return build_from_color_matrix(color_matrix_from_json(j), std::move(names));
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemeError(ErrorCode::BadInput, "cannot open file " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SchemeError(ErrorCode::BadInput,
                      "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) {
    throw SchemeError(ErrorCode::BadInput, "cannot write file " + path);
  }
  out << j.dump(2) << "\n";
}

double canonical_round(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace schemes
