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

#ifndef SCHEMES_JSON_IO_HPP
#define SCHEMES_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "schemes/configuration.hpp"

namespace schemes {

// Scheme file format: {"n": int, "colors": [[int,...],...], "names": [...]?}
// plus an optional "parent_color" array on closure outputs.

nlohmann::json configuration_to_json(const CoherentConfiguration& cc);
nlohmann::json raw_colors_to_json(const IntMatrix& colors);

/// Parses the color matrix without validating coherence (closure inputs).
IntMatrix color_matrix_from_json(const nlohmann::json& j);

/// Parses and validates; throws SchemeError on malformed or incoherent input.
CoherentConfiguration configuration_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

/// Canonical float formatting used in every report: 12 significant digits.
double canonical_round(double v);

}  // namespace schemes

#endif  // SCHEMES_JSON_IO_HPP
