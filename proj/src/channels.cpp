#include "lpdec/channels.hpp"

#include <stdexcept>

#include "lpdec/prng.hpp"

namespace lpdec {

ChannelSpec bsc_channel(double p) {
    if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("BSC requires p in (0, 1/2)");
    return {ChannelKind::Bsc, p};
}

ChannelSpec awgnc_channel(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("AWGNC requires sigma > 0");
    return {ChannelKind::Awgnc, sigma};
}

ChannelSpec bec_channel(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("BEC requires eps in (0, 1)");
    return {ChannelKind::Bec, eps};
}

ChannelSpec parse_channel(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("channel must be kind:param, e.g. bsc:0.05");
    const std::string kind = text.substr(0, colon);
    const double param = std::stod(text.substr(colon + 1));
    if (kind == "bsc") return bsc_channel(param);
    if (kind == "awgnc") return awgnc_channel(param);
    if (kind == "bec") return bec_channel(param);
    throw std::invalid_argument("unknown channel kind: " + kind);
}

std::string channel_to_string(const ChannelSpec& ch) {
    std::string kind;
    switch (ch.kind) {
        case ChannelKind::Bsc: kind = "bsc"; break;
        case ChannelKind::Awgnc: kind = "awgnc"; break;
        case ChannelKind::Bec: kind = "bec"; break;
    }
    return kind + ":" + std::to_string(ch.param);
}

ChannelOutput transmit(const BitVector& x, const ChannelSpec& ch, std::uint64_t seed) {
    ChannelOutput out;
    out.kind = ch.kind;
    out.seed = seed;
    const std::size_t n = x.size();
    switch (ch.kind) {
        case ChannelKind::Bsc:
            out.bits.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const bool flip = uniform01(hash_key(seed, i, 0)) < ch.param;
                out.bits[i] = static_cast<std::uint8_t>(x[i] ^ (flip ? 1 : 0));
                if (flip) out.flips.push_back(i);
            }
            break;
        case ChannelKind::Awgnc:
            out.real_values.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const double noise = gaussian(hash_key(seed, i, 0), hash_key(seed, i, 1));
                out.real_values[i] = (x[i] ? -1.0 : 1.0) + ch.param * noise;
            }
            break;
        case ChannelKind::Bec:
            out.bits.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                out.bits[i] = x[i];
                if (uniform01(hash_key(seed, i, 0)) < ch.param) out.flips.push_back(i);
            }
            break;
    }
    return out;
}

LlrVector llr(const ChannelOutput& out, const ChannelSpec& ch) {
    if (ch.kind == ChannelKind::Bec || out.kind == ChannelKind::Bec)
        throw std::invalid_argument("BEC outputs carry erasures, use bec_peel");
    LlrVector lam;
    if (ch.kind == ChannelKind::Bsc) {
        lam.reserve(out.bits.size());
        for (auto b : out.bits) lam.emplace_back(b ? -1 : 1);
    } else {
        lam.reserve(out.real_values.size());
        const double sigma_sq = ch.param * ch.param;
        for (double y : out.real_values) lam.emplace_back(Rat(2.0 * y / sigma_sq));
    }
    return lam;
}

} // namespace lpdec
