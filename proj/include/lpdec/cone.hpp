#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpdec/lp.hpp"
#include "lpdec/matrices.hpp"

namespace lpdec {

/// The fundamental cone K(H): omega_i >= 0 for all i, and for every row j
/// and every i in I_j, omega_i <= sum of the other coordinates of I_j.
/// Inequalities are stored in Ge form (coeffs . omega >= rhs) in a fixed
/// order: the n nonnegativity rows first, then row-major edge inequalities.
struct FundamentalConeSystem {
    std::size_t num_vars = 0;
    std::vector<LpConstraint> inequalities;
    // Provenance per inequality: {SIZE_MAX, i} for omega_i >= 0, {j, i} for
    // the edge inequality of row j at coordinate i.
    std::vector<std::pair<std::size_t, std::size_t>> origin;
};

/// The fundamental polytope P(H): box 0 <= x_i <= 1 plus, for every row j
/// and every odd-cardinality V subset of I_j,
///   sum_{i in V} x_i - sum_{i in I_j \ V} x_i <= |V| - 1.
struct FundamentalPolytopeSystem {
    std::size_t num_vars = 0;
    std::vector<LpConstraint> inequalities; // box rows first, then odd-subset rows
};

struct ConeMembership {
    bool member = false;
    // Index into FundamentalConeSystem::inequalities of the first violated
    // inequality, when not a member.
    std::optional<std::size_t> violated;
};

FundamentalConeSystem cone_inequalities(const BinaryMatrix& H);

/// Exact membership test; length mismatch throws std::invalid_argument.
ConeMembership cone_contains(const BinaryMatrix& H, const RealVector& omega);

/// Float membership with tolerance, for reporting on simulation vectors only.
bool cone_contains_approx(const BinaryMatrix& H, const std::vector<double>& omega,
                          double tol = 1e-9);

/// Guarded by max row weight (2^(w-1) inequalities per row).
FundamentalPolytopeSystem polytope_inequalities(const BinaryMatrix& H,
                                                std::size_t max_row_weight = 16);

/// Exact membership in P(H).
bool polytope_contains(const BinaryMatrix& H, const RealVector& x,
                       std::size_t max_row_weight = 16);

/// True iff omega is in K(H), integral, and omega mod 2 is a codeword.
bool is_unscaled_pseudocodeword(const BinaryMatrix& H, const RealVector& omega);

/// Plain-text polyhedron rendering, one inequality per line:
/// "c_1 c_2 ... c_n REL rhs" with REL in {<=, =, >=}.
std::string inequalities_to_text(const std::vector<LpConstraint>& inequalities);

} // namespace lpdec
