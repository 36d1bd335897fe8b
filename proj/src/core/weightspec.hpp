#ifndef STEKLOV_WEIGHTSPEC_HPP
#define STEKLOV_WEIGHTSPEC_HPP

#include "core/weight.hpp"

#include <string>

namespace steklov {

// Weight from a textual spec: either a trigonometric-polynomial expression
// (sums of constants, A*cos(N*t), A*sin(N*t), and exp(<trig poly>)) or a path
// to a coefficient CSV with header n,re,im. Syntax errors carry the offending
// position; non-positive weights are rejected with the attained minimum.
BoundaryWeight parse_weight(const std::string& spec, int grid_size = 1024);

// Coefficient CSV loader. Rows with only n >= 0 are mirrored to keep the
// weight real-valued.
BoundaryWeight load_weight_csv(const std::string& path, int grid_size = 1024);

} // namespace steklov

#endif
