#include "lpdec/decoders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "lpdec/cone.hpp"
#include "lpdec/lp.hpp"

namespace lpdec {

const char* decode_status_name(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::Success: return "success";
        case DecodeStatus::Fractional: return "fractional";
        case DecodeStatus::Tie: return "tie";
        case DecodeStatus::Infeasible: return "infeasible";
    }
    return "?";
}

namespace {

// Shared CS-LPD program skeleton: variables (u_0..u_{n-1}, v_0..v_{n-1}),
// measurement rows sum_{i in I_j} (u_i - v_i) = s_j.
LinearProgram cs_lpd_program(const BinaryMatrix& H, const RealVector& s) {
    const std::size_t n = H.cols();
    LinearProgram lp(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) lp.set_lower(i, Rat(0));
    for (std::size_t j = 0; j < H.rows(); ++j) {
        RealVector row(2 * n, Rat(0));
        for (std::size_t i : H.row_support(j)) {
            row[i] = 1;
            row[n + i] = -1;
        }
        lp.add_constraint(std::move(row), Rel::Eq, s[j]);
    }
    return lp;
}

RealVector split_to_e(const RealVector& uv, std::size_t n) {
    RealVector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = uv[i] - uv[n + i];
    return e;
}

} // namespace

DecodeResult cs_lpd(const BinaryMatrix& H, const RealVector& s) {
    if (s.size() != H.rows()) throw std::invalid_argument("cs_lpd: syndrome length mismatch");
    const std::size_t n = H.cols();

    LinearProgram lp = cs_lpd_program(H, s);
    RealVector c(2 * n, Rat(1));
    lp.set_objective(std::move(c));
    const LpSolution base = solve_lp(lp);

    DecodeResult result;
    if (base.status == LpStatus::Infeasible) {
        result.status = DecodeStatus::Infeasible;
        return result;
    }
    // min ||e||_1 over a nonempty affine set is never unbounded.
    if (base.status != LpStatus::Optimal) throw std::logic_error("cs_lpd: unexpected LP status");

    const RealVector estimate = split_to_e(base.point, n);
    const Rat z = base.objective;

    // Uniqueness test. Over the optimal face {H e = s, ||e||_1 = z} the
    // signed-support functional psi(e) = sum_i sign(est_i) e_i satisfies
    // psi(e) <= z with equality iff e is sign-aligned and supported inside
    // supp(est); at a basic optimal solution the support columns of H are
    // linearly independent, so psi(e) = z forces e = est. Hence
    // min psi < z iff a second optimum exists.
    LinearProgram face = cs_lpd_program(H, s);
    RealVector psi(2 * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        const int sg = sgn(estimate[i]);
        psi[i] = Rat(sg);
        psi[n + i] = Rat(-sg);
    }
    face.set_objective(std::move(psi));
    face.add_constraint(RealVector(2 * n, Rat(1)), Rel::Eq, z);
    const LpSolution probe = solve_lp(face);
    if (probe.status != LpStatus::Optimal) throw std::logic_error("cs_lpd: face probe failed");

    result.estimate = estimate;
    result.objective = z;
    if (probe.objective < z) {
        result.status = DecodeStatus::Tie;
        result.witness = split_to_e(probe.point, n);
    } else {
        result.status = DecodeStatus::Success;
    }
    return result;
}

namespace {

// Exact solve of H_S e_S = s. Returns nullopt when inconsistent; skips
// rank-deficient supports (their consistent syndromes were already found at
// a smaller support size).
std::optional<RealVector> solve_support(const BinaryMatrix& H, const RealVector& s,
                                        const std::vector<std::size_t>& S) {
    const std::size_t m = H.rows();
    const std::size_t k = S.size();
    std::vector<RealVector> a(m, RealVector(k + 1, Rat(0)));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t t = 0; t < k; ++t) a[j][t] = Rat(H.at(j, S[t]));
        a[j][k] = s[j];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
    for (std::size_t c = 0; c < k && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(a[rank], a[p]);
        const Rat inv = Rat(1) / a[rank][c];
        for (Rat& x : a[rank]) x *= inv;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == rank || sgn(a[j][c]) == 0) continue;
            const Rat f = a[j][c];
            for (std::size_t t = c; t <= k; ++t) a[j][t] -= f * a[rank][t];
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    for (std::size_t j = rank; j < m; ++j)
        if (sgn(a[j][k]) != 0) return std::nullopt; // inconsistent
    if (rank < k) return std::nullopt;              // covered at a smaller size

    RealVector e(H.cols(), Rat(0));
    for (std::size_t c = 0; c < k; ++c) e[S[c]] = a[pivot_of_col[c]][k];
    return e;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (comb[i] + (k - i) < n) {
            ++comb[i];
            for (std::size_t t = i + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

DecodeResult cs_opt(const BinaryMatrix& H, const RealVector& s, std::size_t k_max) {
    if (s.size() != H.rows()) throw std::invalid_argument("cs_opt: syndrome length mismatch");
    if (H.cols() > 20 || k_max > 4)
        throw guard_error("cs_opt enumeration guard: n <= 20 and k_max <= 4 required");
    const std::size_t n = H.cols();

    for (std::size_t k = 0; k <= std::min(k_max, n); ++k) {
        std::optional<RealVector> first;
        std::optional<RealVector> second;
        std::vector<std::size_t> S(k);
        for (std::size_t t = 0; t < k; ++t) S[t] = t;
        bool more = true;
        while (more) {
            auto e = solve_support(H, s, S);
            if (e) {
                if (!first) {
                    first = std::move(e);
                } else if (*e != *first && !second) {
                    second = std::move(e);
                }
            }
            more = (k > 0) && next_combination(S, n);
            if (k == 0) break;
        }
        if (first) {
            DecodeResult result;
            result.estimate = *first;
            result.objective = Rat(static_cast<long>(k));
            if (second) {
                result.status = DecodeStatus::Tie;
                result.witness = *second;
            } else {
                result.status = DecodeStatus::Success;
            }
            return result;
        }
    }
    DecodeResult result;
    result.status = DecodeStatus::Infeasible; // no solution within k_max
    return result;
}

DecodeResult cc_lpd(const BinaryMatrix& H, const LlrVector& llr, std::size_t max_row_weight) {
    if (llr.size() != H.cols()) throw std::invalid_argument("cc_lpd: llr length mismatch");
    const std::size_t n = H.cols();
    const FundamentalPolytopeSystem sys = polytope_inequalities(H, max_row_weight);

    auto make_program = [&]() {
        LinearProgram lp(n);
        for (std::size_t i = 0; i < n; ++i) {
            lp.set_lower(i, Rat(0));
            lp.set_upper(i, Rat(1));
        }
        // The first 2n inequalities are the box and are covered by bounds.
        for (std::size_t t = 2 * n; t < sys.inequalities.size(); ++t)
            lp.add_constraint(sys.inequalities[t].coeffs, sys.inequalities[t].rel,
                              sys.inequalities[t].rhs);
        return lp;
    };

    LinearProgram lp = make_program();
    lp.set_objective(llr);
    const LpSolution base = solve_lp(lp);
    if (base.status != LpStatus::Optimal)
        throw std::logic_error("cc_lpd: polytope LP must be optimal"); // 0 in P, P bounded

    DecodeResult result;
    result.estimate = base.point;
    result.objective = base.objective;

    bool integral = true;
    for (const Rat& x : base.point)
        if (x != 0 && x != 1) {
            integral = false;
            break;
        }
    if (!integral) {
        result.status = DecodeStatus::Fractional;
        return result;
    }

    // Integral candidate: the optimum is unique iff the maximum L1 distance
    // to it over the optimal face is zero (linear since P is in the unit
    // box: |x_i - b| is x_i or 1 - x_i for b in {0,1}).
    LinearProgram face = make_program();
    RealVector dist(n, Rat(0));
    Rat offset(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (base.point[i] == 0) {
            dist[i] = Rat(-1); // minimize -x_i
        } else {
            dist[i] = Rat(1); // minimize x_i - 1
            offset -= 1;
        }
    }
    face.set_objective(std::move(dist));
    face.add_constraint(llr, Rel::Eq, base.objective);
    const LpSolution probe = solve_lp(face);
    if (probe.status != LpStatus::Optimal) throw std::logic_error("cc_lpd: face probe failed");
    const Rat max_distance = -(probe.objective + offset);
    if (sgn(max_distance) > 0) {
        result.status = DecodeStatus::Tie;
        result.witness = probe.point;
    } else {
        result.status = DecodeStatus::Success;
    }
    return result;
}

DecodeResult cc_mld(const BinaryMatrix& H, const LlrVector& llr, std::size_t max_dimension) {
    if (llr.size() != H.cols()) throw std::invalid_argument("cc_mld: llr length mismatch");
    const std::size_t n = H.cols();
    const std::size_t dim = n - gf2_rank(H);
    if (dim > max_dimension)
        throw guard_error("cc_mld enumeration guard exceeded: dimension " + std::to_string(dim));
    const std::vector<BitVector> basis = gf2_nullspace_basis(H);

    auto objective_of = [&](const BitVector& x) {
        Rat v(0);
        for (std::size_t i = 0; i < n; ++i)
            if (x[i]) v += llr[i];
        return v;
    };

    // Gray-code walk over all 2^dim codewords.
    BitVector x(n, 0);
    Rat best_obj = objective_of(x);
    BitVector best = x;
    std::optional<BitVector> second;
    const std::uint64_t count = std::uint64_t(1) << basis.size();
    for (std::uint64_t step = 1; step < count; ++step) {
        const std::size_t flip = static_cast<std::size_t>(std::countr_zero(step));
        for (std::size_t i = 0; i < n; ++i) x[i] ^= basis[flip][i];
        const Rat obj = objective_of(x);
        if (obj < best_obj) {
            best_obj = obj;
            best = x;
            second.reset();
        } else if (obj == best_obj) {
            if (x < best) {
                second = best;
                best = x;
            } else if (!second || x < *second) {
                second = x;
            }
        }
    }

    DecodeResult result;
    result.objective = best_obj;
    result.estimate.reserve(n);
    for (auto b : best) result.estimate.emplace_back(static_cast<long>(b));
    if (second) {
        result.status = DecodeStatus::Tie;
        RealVector w;
        w.reserve(n);
        for (auto b : *second) w.emplace_back(static_cast<long>(b));
        result.witness = std::move(w);
    } else {
        result.status = DecodeStatus::Success;
    }
    return result;
}

PeelResult bec_peel(const BinaryMatrix& H, const BitVector& observed, const SupportSet& erased) {
    if (observed.size() != H.cols()) throw std::invalid_argument("bec_peel: length mismatch");
    validate_support(erased, H.cols());
    const std::size_t m = H.rows();

    BitVector value = observed;
    std::vector<bool> unknown(H.cols(), false);
    for (std::size_t i : erased) unknown[i] = true;
    std::size_t remaining = erased.size();

    auto check_known_row = [&](std::size_t j) {
        std::uint8_t parity = 0;
        for (std::size_t i : H.row_support(j)) parity ^= (value[i] & 1);
        if (parity)
            throw inconsistency_error("bec_peel: fully-known row " + std::to_string(j) +
                                      " has odd parity");
    };
    auto unknown_count = [&](std::size_t j) {
        std::size_t c = 0;
        for (std::size_t i : H.row_support(j))
            if (unknown[i]) ++c;
        return c;
    };

    for (std::size_t j = 0; j < m; ++j)
        if (unknown_count(j) == 0) check_known_row(j);

    while (remaining > 0) {
        std::size_t pick = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (unknown_count(j) == 1) {
                pick = j;
                break;
            }
        }
        if (pick == m) break; // stuck
        std::size_t target = H.cols();
        std::uint8_t parity = 0;
        for (std::size_t i : H.row_support(pick)) {
            if (unknown[i])
                target = i;
            else
                parity ^= (value[i] & 1);
        }
        value[target] = parity;
        unknown[target] = false;
        --remaining;
        for (std::size_t j : H.col_support(target))
            if (unknown_count(j) == 0) check_known_row(j);
    }

    PeelResult result;
    if (remaining == 0) {
        result.success = true;
        result.codeword = std::move(value);
    } else {
        for (std::size_t i = 0; i < H.cols(); ++i)
            if (unknown[i]) result.residual.push_back(i);
    }
    return result;
}

BacksubResult cs_backsub(const BinaryMatrix& H, const RealVector& s, const SupportSet& support) {
    if (s.size() != H.rows()) throw std::invalid_argument("cs_backsub: syndrome length mismatch");
    validate_support(support, H.cols());
    const std::size_t m = H.rows();

    RealVector value(H.cols(), Rat(0));
    std::vector<bool> unresolved(H.cols(), false);
    for (std::size_t i : support) unresolved[i] = true;
    std::size_t remaining = support.size();

    auto check_resolved_row = [&](std::size_t j) {
        Rat sum(0);
        for (std::size_t i : H.row_support(j)) sum += value[i];
        if (sum != s[j])
            throw inconsistency_error("cs_backsub: fully-resolved row " + std::to_string(j) +
                                      " contradicts the syndrome");
    };
    auto unresolved_count = [&](std::size_t j) {
        std::size_t c = 0;
        for (std::size_t i : H.row_support(j))
            if (unresolved[i]) ++c;
        return c;
    };

    for (std::size_t j = 0; j < m; ++j)
        if (unresolved_count(j) == 0) check_resolved_row(j);

    while (remaining > 0) {
        std::size_t pick = m;
        for (std::size_t j = 0; j < m; ++j) {
            if (unresolved_count(j) == 1) {
                pick = j;
                break;
            }
        }
        if (pick == m) break; // stuck
        std::size_t target = H.cols();
        Rat known(0);
        for (std::size_t i : H.row_support(pick)) {
            if (unresolved[i])
                target = i;
            else
                known += value[i];
        }
        value[target] = s[pick] - known;
        unresolved[target] = false;
        --remaining;
        for (std::size_t j : H.col_support(target))
            if (unresolved_count(j) == 0) check_resolved_row(j);
    }

    BacksubResult result;
    if (remaining == 0) {
        result.success = true;
        result.estimate = std::move(value);
    } else {
        for (std::size_t i = 0; i < H.cols(); ++i)
            if (unresolved[i]) result.residual.push_back(i);
    }
    return result;
}

} // namespace lpdec
