#include "lpdec/pseudoweight.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpdec/cone.hpp"
#include "lpdec/lp.hpp"

namespace lpdec {

namespace {

void require_nonnegative(const RealVector& omega) {
    for (const Rat& x : omega)
        if (sgn(x) < 0) throw std::invalid_argument("pseudo-weight of a negative entry");
}

RealVector sorted_desc(const RealVector& omega) {
    RealVector s = omega;
    std::sort(s.begin(), s.end(), [](const Rat& a, const Rat& b) { return a > b; });
    return s;
}

} // namespace

Rat awgnc_pw(const RealVector& omega) {
    require_nonnegative(omega);
    const Rat l2sq = l2_norm_sq(omega);
    if (sgn(l2sq) == 0) return Rat(0);
    const Rat l1 = l1_norm(omega);
    return l1 * l1 / l2sq;
}

Rat bsc_pw(const RealVector& omega) {
    require_nonnegative(omega);
    const Rat target = l1_norm(omega) / 2;
    if (sgn(target) == 0) return Rat(0);
    const RealVector s = sorted_desc(omega);
    // F(i) = s_1 + ... + s_i; find the first segment where F reaches target
    // and invert the linear piece exactly.
    Rat acc(0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Rat next = acc + s[i];
        if (next >= target) {
            const Rat e = Rat(i) + (target - acc) / s[i];
            return 2 * e;
        }
        acc = next;
    }
    throw std::logic_error("bsc_pw: F never reached half mass"); // unreachable
}

long bsc_prime_pw(const RealVector& omega) {
    require_nonnegative(omega);
    const Rat total = l1_norm(omega);
    if (sgn(total) == 0) return 0;
    const RealVector s = sorted_desc(omega);
    Rat head(0);
    for (std::size_t e = 1; e <= s.size(); ++e) {
        head += s[e - 1];
        const Rat tail = total - head;
        if (head >= tail) return head == tail ? 2 * static_cast<long>(e) : 2 * static_cast<long>(e) - 1;
    }
    throw std::logic_error("bsc_prime_pw: no balancing index"); // unreachable
}

long bec_pw(const RealVector& omega) {
    require_nonnegative(omega);
    return static_cast<long>(l0_norm(omega));
}

Rat maxfrac_weight(const RealVector& omega) {
    require_nonnegative(omega);
    const Rat mx = linf_norm(omega);
    if (sgn(mx) == 0) return Rat(0);
    return l1_norm(omega) / mx;
}

PseudoWeightReport pseudoweight_report(const RealVector& omega) {
    return {awgnc_pw(omega), bsc_pw(omega), bsc_prime_pw(omega), bec_pw(omega),
            maxfrac_weight(omega)};
}

const char* pw_kind_name(PwKind kind) {
    switch (kind) {
        case PwKind::Awgnc: return "awgnc";
        case PwKind::Bsc: return "bsc";
        case PwKind::BscPrime: return "bsc_prime";
        case PwKind::Bec: return "bec";
        case PwKind::MaxFrac: return "maxfrac";
    }
    return "?";
}

std::optional<PwKind> pw_kind_from_name(const std::string& name) {
    if (name == "awgnc") return PwKind::Awgnc;
    if (name == "bsc") return PwKind::Bsc;
    if (name == "bsc_prime" || name == "bscprime") return PwKind::BscPrime;
    if (name == "bec") return PwKind::Bec;
    if (name == "maxfrac") return PwKind::MaxFrac;
    return std::nullopt;
}

namespace {

using ZeroSet = std::vector<std::uint64_t>; // bitmask over inequality indices

ZeroSet make_zeroset(std::size_t bits) { return ZeroSet((bits + 63) / 64, 0); }

void set_bit(ZeroSet& z, std::size_t k) { z[k / 64] |= (1ULL << (k % 64)); }

bool is_subset(const ZeroSet& a, const ZeroSet& b) { // a subset of b
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) {
    ZeroSet out(a.size());
    for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
    return out;
}

struct DdRay {
    RealVector v;
    ZeroSet zero; // tight inequalities among those processed so far
};

void normalize_first_nonzero(RealVector& v) {
    for (const Rat& x : v) {
        if (sgn(x) != 0) {
            const Rat inv = Rat(1) / x;
            for (Rat& y : v) y *= inv;
            return;
        }
    }
}

} // namespace

// Double description over the cone's inequality list. The start cone is the
// nonnegative orthant (its extreme rays are the unit vectors and it already
// satisfies the first n inequalities); the edge inequalities are then added
// one at a time. Adjacency of a plus/minus pair uses the standard
// combinatorial test: no third ray's tight set contains the pair's common
// tight set.
std::vector<ExtremeRay> enumerate_extreme_rays(const BinaryMatrix& H, std::size_t max_n) {
    const std::size_t n = H.cols();
    if (n > max_n)
        throw guard_error("extreme-ray guard exceeded: n = " + std::to_string(n) + " > " +
                          std::to_string(max_n));
    const FundamentalConeSystem sys = cone_inequalities(H);
    const std::size_t total = sys.inequalities.size();

    std::vector<DdRay> rays;
    for (std::size_t i = 0; i < n; ++i) {
        DdRay r;
        r.v.assign(n, Rat(0));
        r.v[i] = 1;
        r.zero = make_zeroset(total);
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) set_bit(r.zero, k);
        rays.push_back(std::move(r));
    }

    for (std::size_t k = n; k < total; ++k) {
        const RealVector& a = sys.inequalities[k].coeffs;
        std::vector<Rat> value(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) value[r] = inner_product(a, rays[r].v);

        std::vector<DdRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (sgn(value[r]) >= 0) {
                DdRay keep = rays[r];
                if (sgn(value[r]) == 0) set_bit(keep.zero, k);
                next.push_back(std::move(keep));
            }
        }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (sgn(value[p]) <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (sgn(value[q]) >= 0) continue;
                const ZeroSet common = intersect(rays[p].zero, rays[q].zero);
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && is_subset(common, rays[r].zero)) adjacent = false;
                if (!adjacent) continue;
                DdRay nu;
                nu.v.assign(n, Rat(0));
                for (std::size_t i = 0; i < n; ++i)
                    nu.v[i] = value[p] * rays[q].v[i] - value[q] * rays[p].v[i];
                normalize_first_nonzero(nu.v);
                // Recompute tight set over inequalities 0..k.
                nu.zero = make_zeroset(total);
                for (std::size_t t = 0; t <= k; ++t)
                    if (sgn(inner_product(sys.inequalities[t].coeffs, nu.v)) == 0)
                        set_bit(nu.zero, t);
                bool duplicate = false;
                for (const DdRay& ex : next)
                    if (ex.v == nu.v) {
                        duplicate = true;
                        break;
                    }
                if (!duplicate) next.push_back(std::move(nu));
            }
        }
        rays = std::move(next);
        if (rays.empty()) break; // cone collapsed to {0}
    }

    std::vector<ExtremeRay> out;
    for (DdRay& r : rays) {
        ExtremeRay er;
        normalize_first_nonzero(r.v);
        er.generator = std::move(r.v);
        for (std::size_t k = 0; k < total; ++k)
            if (sgn(inner_product(sys.inequalities[k].coeffs, er.generator)) == 0)
                er.tight.push_back(k);
        out.push_back(std::move(er));
    }
    std::sort(out.begin(), out.end(),
              [](const ExtremeRay& a, const ExtremeRay& b) { return a.generator < b.generator; });
    return out;
}

std::optional<Rat> min_pseudoweight(const BinaryMatrix& H, PwKind kind, std::size_t max_n) {
    const auto rays = enumerate_extreme_rays(H, max_n);
    if (rays.empty()) return std::nullopt;
    std::optional<Rat> best;
    for (const auto& ray : rays) {
        Rat w;
        switch (kind) {
            case PwKind::Awgnc: w = awgnc_pw(ray.generator); break;
            case PwKind::Bsc: w = bsc_pw(ray.generator); break;
            case PwKind::BscPrime: w = Rat(bsc_prime_pw(ray.generator)); break;
            case PwKind::Bec: w = Rat(bec_pw(ray.generator)); break;
            case PwKind::MaxFrac: w = maxfrac_weight(ray.generator); break;
        }
        if (!best || w < *best) best = w;
    }
    return best;
}

std::optional<Rat> min_maxfrac_weight_lp(const BinaryMatrix& H) {
    const std::size_t n = H.cols();
    std::optional<Rat> best;
    for (std::size_t i = 0; i < n; ++i) {
        LinearProgram lp(n);
        RealVector c(n, Rat(1));
        lp.set_objective(std::move(c));
        for (std::size_t v = 0; v < n; ++v) {
            lp.set_lower(v, Rat(0));
            lp.set_upper(v, Rat(1));
        }
        for (std::size_t j = 0; j < H.rows(); ++j) {
            const auto& I_j = H.row_support(j);
            for (std::size_t t : I_j) {
                RealVector row(n, Rat(0));
                for (std::size_t ip : I_j) row[ip] = (ip == t) ? Rat(-1) : Rat(1);
                lp.add_constraint(std::move(row), Rel::Ge, Rat(0));
            }
        }
        {
            RealVector row(n, Rat(0));
            row[i] = 1;
            lp.add_constraint(std::move(row), Rel::Eq, Rat(1));
        }
        const LpSolution sol = solve_lp(lp);
        if (sol.status != LpStatus::Optimal) continue; // omega_i forced to 0 in K
        if (!best || sol.objective < *best) best = sol.objective;
    }
    return best;
}

} // namespace lpdec
