#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpdec/matrices.hpp"
#include "lpdec/rational.hpp"

namespace lpdec {

enum class DecodeStatus { Success, Fractional, Tie, Infeasible };

const char* decode_status_name(DecodeStatus status);

/// Decoder verdict. Success certifies a unique optimum; Tie carries an
/// alternative optimum with the same objective as witness; Fractional
/// (CC-LPD only) means the optimal vertex has a coordinate strictly inside
/// (0, 1). Ties and fractional optima count as decoding failures in all
/// success-rate statistics.
struct DecodeResult {
    DecodeStatus status = DecodeStatus::Infeasible;
    RealVector estimate;
    Rat objective{0};
    std::optional<RealVector> witness;
};

/// CS-LPD: min ||e||_1 subject to H e = s, via the split e = u - v with
/// u, v >= 0. Infeasible iff s is outside the column span of H. Uniqueness
/// of the optimum is decided exactly by a second LP over the optimal face.
DecodeResult cs_lpd(const BinaryMatrix& H, const RealVector& s);

/// CS-OPT brute-force oracle: smallest k <= k_max such that some support of
/// size k solves H_S e_S = s exactly. Estimate prefers the lexicographically
/// smallest support; distinct solutions of the minimal size report Tie.
/// status Infeasible means no support of size <= k_max is consistent.
/// Guards: n <= 20, k_max <= 4.
DecodeResult cs_opt(const BinaryMatrix& H, const RealVector& s, std::size_t k_max);

/// CC-LPD: min <llr, x> over the fundamental polytope P(H). Success iff the
/// optimum is unique and integral (then it is a codeword); a fractional
/// optimal vertex reports Fractional; an integral optimum on a face of
/// dimension >= 1 reports Tie.
DecodeResult cc_lpd(const BinaryMatrix& H, const LlrVector& llr, std::size_t max_row_weight = 16);

/// CC-MLD brute-force oracle: min <llr, x> over all codewords. Estimate is
/// the lexicographically smallest minimizer; Tie when two codewords attain
/// the optimum.
DecodeResult cc_mld(const BinaryMatrix& H, const LlrVector& llr, std::size_t max_dimension = 24);

/// BEC peeling outcome: success with the full codeword, or the residual
/// erasure set (a stopping set) when no check has exactly one erasure left.
struct PeelResult {
    bool success = false;
    BitVector codeword;
    SupportSet residual;
};

/// Peeling decoder: repeatedly pick the lowest-index row with exactly one
/// erased position and solve it over GF(2). Throws inconsistency_error when
/// a fully-known row has odd parity.
PeelResult bec_peel(const BinaryMatrix& H, const BitVector& observed, const SupportSet& erased);

struct BacksubResult {
    bool success = false;
    RealVector estimate;
    SupportSet residual;
};

/// Back-substitution recovery with known support: coordinates outside
/// `support` are zero; repeatedly pick the lowest-index row with exactly one
/// unresolved support position and solve it over the rationals. Same row
/// selection rule as bec_peel. Throws inconsistency_error when a fully
/// resolved row contradicts s.
BacksubResult cs_backsub(const BinaryMatrix& H, const RealVector& s, const SupportSet& support);

} // namespace lpdec
