#pragma once

#include <json.hpp>

#include "bezout/bi_form.hpp"
#include "bezout/binary_form.hpp"

namespace bezout {

struct TransvectantSeries;

// Schemas:
//   form    {"order": e, "coeffs": ["num/den", ...]}   (index i = x0^(e-i) x1^i)
//   biform  {"xorder": m, "yorder": n, "coeffs": [[row i: "num/den" ...], ...]}
//   series  {"d": d, "terms": [form, ...]}
nlohmann::json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const nlohmann::json& j);

nlohmann::json biform_to_json(const BiForm& f);
BiForm biform_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TransvectantSeries& s);
TransvectantSeries series_from_json(const nlohmann::json& j);

} // namespace bezout
