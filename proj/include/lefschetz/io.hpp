#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "lefschetz/chain_complex.hpp"
#include "lefschetz/covers.hpp"
#include "lefschetz/curve_pencil.hpp"

// Input documents are YAML (so JSON works too):
//
//   curve:   { curve: "x^3 + y^3 + z^3", variables: [x, y, z] }
//   profile: { degree: 2, base_genus: 0, fibers: [[2], [2]] }
//   complex: { ranks: [1, 2, 1], boundary: { 1: [[0, 0]], 2: [[0], [0]] } }
//
// Loaders throw Error(ParseError) on malformed documents.

namespace lefschetz::io {

std::string read_file(const std::string& path);

// `variables` may rename the coordinates; they are matched to x, y, z by
// position.
HomogeneousCurve load_curve(std::string_view document);
RamificationProfile load_profile(std::string_view document);
// `boundary` maps each degree to a row-major matrix; `boundaries` is accepted
// too. Integer entries may be arbitrarily large; write them as strings if they
// overflow YAML's integers.
ChainComplex load_complex(std::string_view document);

// "sha256:<hex>"
std::string digest(std::string_view bytes);

// 17 significant digits, so every double round-trips.
std::string format_real(double v);

// "0.01", "-2.5e-3", "0.01+0.02i", "-3i", "i"
std::optional<std::complex<double>> parse_complex(std::string_view text);

}  // namespace lefschetz::io
