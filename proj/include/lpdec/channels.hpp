#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpdec/matrices.hpp"

namespace lpdec {

enum class ChannelKind { Bsc, Awgnc, Bec };

/// Channel family with its single parameter: BSC(p) with p in (0, 1/2),
/// binary-input AWGNC(sigma) with sigma > 0, BEC(eps) with eps in (0, 1).
struct ChannelSpec {
    ChannelKind kind;
    double param;
};

ChannelSpec bsc_channel(double p);
ChannelSpec awgnc_channel(double sigma);
ChannelSpec bec_channel(double eps);

/// Parses "bsc:0.05", "awgnc:0.8" or "bec:0.3".
ChannelSpec parse_channel(const std::string& text);
std::string channel_to_string(const ChannelSpec& ch);

struct ChannelOutput {
    ChannelKind kind;
    BitVector bits;                  // BSC: received word; BEC: value at non-erased positions
    std::vector<double> real_values; // AWGNC outputs
    SupportSet flips;                // BSC flip set / BEC erasure set
    std::uint64_t seed;
};

/// Memoryless transmission, deterministic given the seed. Each coordinate
/// draws from the counter-based generator keyed by (seed, coordinate, draw),
/// so trials parallelize reproducibly. AWGNC maps bits by 0 -> +1, 1 -> -1.
ChannelOutput transmit(const BitVector& x, const ChannelSpec& ch, std::uint64_t seed);

/// Log-likelihood ratios as exact rationals. BSC uses the unit-magnitude
/// convention lambda_i = +1 for a received 0 and -1 for a received 1 (the
/// true magnitude ln((1-p)/p) cancels in the argmin, so it is scaled to 1
/// and p is recorded separately). AWGNC uses lambda_i = 2 y_i / sigma^2,
/// converted from the double to its exact binary value. BEC throws
/// std::invalid_argument: erasures go through the peeling decoder.
LlrVector llr(const ChannelOutput& out, const ChannelSpec& ch);

} // namespace lpdec
