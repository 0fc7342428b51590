#pragma once

#include "lefschetz/heisenberg.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace lefschetz {

inline constexpr const char* kModelFormatVersion = "1";

// Model file (JSON): format_version, genus, n_max, components,
// jacobian_components, operators. Operator names: mu_plus_pt, mu_minus_pt,
// mu_plus_C, mu_minus_C, AJ_n (with field "n"), e, fourier. Matrix entries are
// rational strings "p/q".
nlohmann::json model_to_json(const HeisenbergModule& m);

// Throws ParseError for malformed content and ShapeError (naming the
// operator and block) for blocks that do not fit their components.
HeisenbergModule model_from_json(const nlohmann::json& j);

// ParseError carries line and column for JSON syntax errors.
HeisenbergModule parse_model(std::string_view text);
HeisenbergModule load_model(const std::string& path);
void save_model(const HeisenbergModule& m, const std::string& path);
std::string dump_model(const HeisenbergModule& m);

}  // namespace lefschetz
