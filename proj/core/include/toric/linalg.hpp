#pragma once

// Minimal exact linear algebra over Q used throughout the geometry layers:
// elimination, rank, determinant, kernels, a phase-1 simplex feasibility
// test, and a Hermite form for the few places that need lattice quotients.

#include <optional>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;
using IRow = std::vector<Int>;
using IMat = std::vector<IRow>;

size_t rank_of(QMat a);

Rat determinant(QMat a);  // square input

// Solution of A x = b when the system is consistent with a unique solution.
// Returns nullopt when inconsistent; throws when underdetermined.
std::optional<QRow> solve_unique(QMat a, QRow b);

// Some solution of A x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<QRow> solve_any(QMat a, QRow b);

// Rational basis of { x : A x = 0 }.
QMat kernel_basis(const QMat& a, size_t cols);

// Rank of the affine hull of a point set (0 for a single point).
size_t affine_rank(const QMat& points);

// Exact feasibility of { lambda >= 0 : A lambda = b } by phase-1 simplex with
// Bland's rule.
bool nonnegative_solution_exists(const QMat& a, const QRow& b);

// Row-style Hermite normal form: returns H and unimodular U with U*A = H.
void hermite_form(IMat a, IMat& h, IMat& u);

// Basis of the saturated lattice { x in Z^cols : A x = 0 }.
IMat integer_kernel(const IMat& a, size_t cols);

// Rows of an integer matrix P with P x = 0 exactly on the span of the given
// lattice vectors, surjective onto Z^(cols - rank). Used to form quotient
// lattices N -> N / (L cap N).
IMat quotient_projection(const IMat& lattice_vectors, size_t cols);

}  // namespace toric
