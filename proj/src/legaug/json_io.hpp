// SPDX-License-Identifier: MIT
//
// Raw-DGA JSON serialization:
//   { "ring": "Z" | "Fp:<p>",
//     "components": <int>,
//     "grading": "none" | "weak" | "strict",
//     "generators": [ {"name", "degree", "kind", "r", "c"}, ... ],
//     "differential": { "<name>": [ [ "<coef>", ["<sym>", ...] ], ... ] } }
// Coefficients are decimal strings; symbols are generator names, with "^-1"
// marking inverse base-point powers. "components" and "grading" default to 1
// and "none" when absent. Output is deterministic: generators in declaration
// order, differential keys sorted, terms in the canonical word order.

#pragma once

#include <string>

#include "legaug/dga.hpp"

namespace legaug {

/// Serialize to the raw-DGA JSON text (2-space indent, stable key order).
std::string dga_to_json(const Dga& dga);

/// Parse raw-DGA JSON text. Throws Error on malformed input; the returned
/// DGA has been re-validated by the constructor (degrees, gradings, d^2 = 0).
Dga dga_from_json(const std::string& text);

/// Read or write a raw-DGA JSON file; throws Error on I/O failure.
Dga load_dga_json(const std::string& path);
void save_dga_json(const Dga& dga, const std::string& path);

}  // namespace legaug
