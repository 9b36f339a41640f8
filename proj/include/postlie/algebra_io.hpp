#pragma once

#include <string>

#include "postlie/rmatrix.hpp"

namespace postlie {

/// Parsed algebra input: Lie algebra, r-matrix and MCYBE parameter.
struct AlgebraInput {
    LieAlgebraSpec L;
    LinearEndo R;
    Rational theta;
};

/// Loads the JSON algebra description:
///   { "dim": d, "labels": [...],
///     "bracket": [[i, j, [[k, "num/den"], ...]], ...],
///     "R": [[row scalars]], "theta": "1" }
/// Scalars are strings "p/q"; omitted bracket entries are zero.
/// Throws std::runtime_error on malformed input.
AlgebraInput load_algebra_file(const std::string& path);
AlgebraInput load_algebra_json(const std::string& text);

/// Serializes in the same schema (used to emit the bundled fixtures).
std::string algebra_to_json(const AlgebraInput& in);

}  // namespace postlie
