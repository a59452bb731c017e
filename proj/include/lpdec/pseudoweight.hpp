#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpdec/matrices.hpp"
#include "lpdec/rational.hpp"

namespace lpdec {

// Pseudo-weight functionals for nonnegative vectors. All five are invariant
// under positive scaling and equal the Hamming weight on 0/1 vectors; every
// one returns 0 for the zero vector. Negative entries throw
// std::invalid_argument.

/// ||omega||_1^2 / ||omega||_2^2.
Rat awgnc_pw(const RealVector& omega);

/// 2 F^{-1}(||omega||_1 / 2) where F is the piecewise-linear cumulative sum
/// of the entries sorted in non-increasing order (slope omega'_i on (i-1, i]).
Rat bsc_pw(const RealVector& omega);

/// With e the smallest integer such that the top-e sorted entries carry at
/// least half of the l1 mass: 2e on exact balance, 2e - 1 on strict excess.
long bsc_prime_pw(const RealVector& omega);

/// |supp(omega)|.
long bec_pw(const RealVector& omega);

/// ||omega||_1 / ||omega||_inf.
Rat maxfrac_weight(const RealVector& omega);

struct PseudoWeightReport {
    Rat awgnc;
    Rat bsc;
    long bsc_prime = 0;
    long bec = 0;
    Rat maxfrac;
};

PseudoWeightReport pseudoweight_report(const RealVector& omega);

enum class PwKind { Awgnc, Bsc, BscPrime, Bec, MaxFrac };

const char* pw_kind_name(PwKind kind);
std::optional<PwKind> pw_kind_from_name(const std::string& name);

/// An edge of the fundamental cone: generator normalized so that its first
/// nonzero entry is 1, plus the indices (into the FundamentalConeSystem
/// inequality list) that the generator satisfies with equality.
struct ExtremeRay {
    RealVector generator;
    std::vector<std::size_t> tight;
};

/// Complete, duplicate-free extreme-ray list of K(H) via the double
/// description method, sorted lexicographically. Guarded at n <= max_n.
/// K(H) = {0} yields an empty list.
std::vector<ExtremeRay> enumerate_extreme_rays(const BinaryMatrix& H, std::size_t max_n = 12);

/// Minimum of the functional over K(H) \ {0}, computed on the extreme rays
/// (each functional is scale-invariant, so the minimum over the polyhedral
/// cone is attained on an edge). nullopt means K(H) = {0} ("cone trivial").
std::optional<Rat> min_pseudoweight(const BinaryMatrix& H, PwKind kind, std::size_t max_n = 12);

/// LP route for the minimum max-fractional weight, usable at any size:
/// min over i of { min sum(omega) : omega in K(H), omega_i = 1, omega <= 1 }.
/// nullopt means all n programs are infeasible, i.e. K(H) = {0}.
std::optional<Rat> min_maxfrac_weight_lp(const BinaryMatrix& H);

} // namespace lpdec
