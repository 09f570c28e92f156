#pragma once

#include <vector>

#include "qlrec/ratfunc.hpp"

namespace qlrec {

// Dense rectangular matrix of rational functions.
struct RFMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<RatFunc> entries; // row-major

    RFMatrix() = default;
    RFMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    RatFunc& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const RatFunc& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// Basis of the right nullspace, computed by fraction-free (Bareiss) elimination
// after clearing row denominators. Each basis vector is denominator-cleared and
// primitive, with the first nonzero entry having positive leading coefficient.
// Empty when the matrix has full column rank.
std::vector<std::vector<MultiPoly>> nullspace(const RFMatrix& m);

} // namespace qlrec
