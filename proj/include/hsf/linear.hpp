#ifndef HSF_LINEAR_HPP
#define HSF_LINEAR_HPP

#include <cstddef>
#include <vector>

#include "hsf/rational.hpp"

namespace hsf {

/// Dense exact matrix, row major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form with deterministic pivoting: columns are
/// eliminated left to right (unknowns in id order) and the first row with a
/// nonzero entry is chosen as pivot. Returns the pivot column indices.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of {x : A x = 0} over n_unknowns columns, one vector per free
/// column, in free-column order. The free unknown of each basis vector is set
/// to 1. Empty basis means the kernel is {0}. A with no rows is the
/// unconstrained system.
std::vector<std::vector<Rational>> nullspace_basis(RationalMatrix a, std::size_t n_unknowns);

struct LinearSolveResult {
    bool consistent = false;
    bool unique = false;
    std::vector<Rational> solution;  // a particular solution when consistent
    std::size_t rank = 0;
};

/// Solves A x = b exactly (A given by rows over n_unknowns columns).
LinearSolveResult solve_linear(RationalMatrix a, const std::vector<Rational>& b);

}  // namespace hsf

#endif
