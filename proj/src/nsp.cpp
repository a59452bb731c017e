#include "lpdec/nsp.hpp"

#include <stdexcept>

#include "lpdec/cone.hpp"
#include "lpdec/lp.hpp"
#include "lpdec/pseudoweight.hpp"

namespace lpdec {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t next = r * (n - t) / (t + 1);
        if (next < r) return SIZE_MAX; // overflow, certainly over budget
        r = next;
    }
    return r;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
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

struct SupportScan {
    bool unbounded = false;
    Rat max_mass{0};     // sup of ||nu_S||_1 subject to ||nu_Sbar||_1 <= 1
    RealVector arg_nu;   // attaining vector (a scalable witness when unbounded)
};

// Scans all sign patterns of nu_S (first coordinate pinned to +1 by the
// nu <-> -nu symmetry). The scan is independent of C: it maximizes
// ||nu_S||_1 over the nullspace slice { ||nu_Sbar||_1 <= 1 }.
SupportScan scan_support(const BinaryMatrix& H, const SupportSet& S) {
    const std::size_t n = H.cols();
    const std::size_t m = H.rows();
    const std::size_t k = S.size();
    SupportScan scan;
    scan.arg_nu.assign(n, Rat(0));
    if (k == 0) return scan;

    const SupportSet Sbar = complement(S, n);
    const std::size_t num_vars = n + Sbar.size(); // nu free, then magnitudes t >= 0

    const std::uint64_t patterns = std::uint64_t(1) << (k - 1);
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        LinearProgram lp(num_vars);
        for (std::size_t p = 0; p < Sbar.size(); ++p) lp.set_lower(n + p, Rat(0));

        RealVector c(num_vars, Rat(0));
        c[S[0]] = Rat(-1); // maximize => minimize the negation
        for (std::size_t t = 1; t < k; ++t) c[S[t]] = (mask >> (t - 1)) & 1 ? Rat(1) : Rat(-1);
        lp.set_objective(std::move(c));

        for (std::size_t j = 0; j < m; ++j) {
            RealVector row(num_vars, Rat(0));
            for (std::size_t i : H.row_support(j)) row[i] = 1;
            lp.add_constraint(std::move(row), Rel::Eq, Rat(0));
        }
        for (std::size_t p = 0; p < Sbar.size(); ++p) {
            RealVector up(num_vars, Rat(0));
            up[n + p] = 1;
            up[Sbar[p]] = -1;
            lp.add_constraint(std::move(up), Rel::Ge, Rat(0)); // t >= nu
            RealVector dn(num_vars, Rat(0));
            dn[n + p] = 1;
            dn[Sbar[p]] = 1;
            lp.add_constraint(std::move(dn), Rel::Ge, Rat(0)); // t >= -nu
        }
        {
            RealVector budget(num_vars, Rat(0));
            for (std::size_t p = 0; p < Sbar.size(); ++p) budget[n + p] = 1;
            lp.add_constraint(std::move(budget), Rel::Le, Rat(1));
        }

        const LpSolution sol = solve_lp(lp);
        if (sol.status == LpStatus::Unbounded) {
            scan.unbounded = true;
            scan.arg_nu.assign(sol.ray.begin(), sol.ray.begin() + static_cast<std::ptrdiff_t>(n));
            return scan;
        }
        if (sol.status != LpStatus::Optimal)
            throw std::logic_error("nsp scan: LP must be feasible (nu = 0)");
        const Rat value = -sol.objective;
        if (value > scan.max_mass) {
            scan.max_mass = value;
            scan.arg_nu.assign(sol.point.begin(), sol.point.begin() + static_cast<std::ptrdiff_t>(n));
        }
    }
    return scan;
}

NspCertificate make_certificate(const RealVector& nu, const SupportSet& S, const Rat& C) {
    NspCertificate cert;
    cert.nu = nu;
    cert.support = S;
    cert.lhs = C * l1_on_support(nu, S);
    cert.rhs = l1_off_support(nu, S);
    return cert;
}

// Nonzero nullspace vector of H supported inside S, when one exists.
std::optional<RealVector> kernel_inside_support(const BinaryMatrix& H, const SupportSet& S) {
    const std::size_t m = H.rows();
    const std::size_t k = S.size();
    if (k == 0) return std::nullopt;
    std::vector<RealVector> a(m, RealVector(k, Rat(0)));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t t = 0; t < k; ++t) a[j][t] = Rat(H.at(j, S[t]));
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(a[r], a[p]);
        const Rat inv = Rat(1) / a[r][c];
        for (Rat& x : a[r]) x *= inv;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == r || sgn(a[j][c]) == 0) continue;
            const Rat f = a[j][c];
            for (std::size_t t = c; t < k; ++t) a[j][t] -= f * a[r][t];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (pivot_cols.size() == k) return std::nullopt; // full column rank
    std::vector<bool> is_pivot(k, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RealVector nu(H.cols(), Rat(0));
    nu[S[free_col]] = 1;
    for (std::size_t rr = 0; rr < pivot_cols.size(); ++rr) nu[S[pivot_cols[rr]]] = -a[rr][free_col];
    return nu;
}

} // namespace

NspReport check_nsp_support(const BinaryMatrix& H, const SupportSet& S, const Rat& C,
                            bool strict) {
    validate_support(S, H.cols());
    if (sgn(C) < 0) throw std::invalid_argument("NSP constant must be >= 0");
    NspReport report;

    // C = 0: the nonstrict property 0 <= ||nu_Sbar||_1 always holds; the
    // strict one fails exactly when some nonzero nullspace vector lives
    // inside S, which the sign-pattern scan (objective identically 0)
    // cannot see. Decide by rank and skip the LPs.
    if (sgn(C) == 0) {
        if (strict) {
            if (auto nu = kernel_inside_support(H, S)) {
                report.holds = false;
                report.certificate = make_certificate(*nu, S, C);
                return report;
            }
        }
        report.holds = true;
        return report;
    }
    if (S.empty()) {
        report.holds = true;
        return report;
    }

    const SupportScan scan = scan_support(H, S);
    if (scan.unbounded) {
        report.holds = false;
        report.certificate = make_certificate(scan.arg_nu, S, C);
        return report;
    }
    const Rat value = C * scan.max_mass; // sup of C ||nu_S||_1 at ||nu_Sbar||_1 <= 1
    if (value > 1 || (strict && value == 1)) {
        report.holds = false;
        report.certificate = make_certificate(scan.arg_nu, S, C);
        return report;
    }
    report.holds = true;
    return report;
}

NspReport check_nsp_k(const BinaryMatrix& H, std::size_t k, const Rat& C, bool strict,
                      std::size_t max_lps) {
    const std::size_t n = H.cols();
    if (k > n) throw std::invalid_argument("check_nsp_k: k > n");
    NspReport report;
    report.holds = true;
    if (k == 0) return report;

    const std::size_t lp_count = binomial(n, k) << (k - 1);
    if (lp_count > max_lps)
        throw guard_error("NSP LP budget exceeded: " + std::to_string(lp_count) + " > " +
                          std::to_string(max_lps));

    std::vector<std::size_t> S(k);
    for (std::size_t t = 0; t < k; ++t) S[t] = t;
    do {
        NspReport r = check_nsp_support(H, S, C, strict);
        if (!r.holds) return r;
    } while (next_combination(S, n));
    return report;
}

std::optional<Rat> nsp_critical_ratio(const BinaryMatrix& H, std::size_t k, std::size_t max_lps) {
    const std::size_t n = H.cols();
    if (k > n) throw std::invalid_argument("nsp_critical_ratio: k > n");
    if (k == 0) return Rat(0);
    const std::size_t lp_count = binomial(n, k) << (k - 1);
    if (lp_count > max_lps) throw guard_error("NSP LP budget exceeded");

    Rat best(0);
    std::vector<std::size_t> S(k);
    for (std::size_t t = 0; t < k; ++t) S[t] = t;
    do {
        const SupportScan scan = scan_support(H, S);
        if (scan.unbounded) return std::nullopt;
        if (scan.max_mass > best) best = scan.max_mass;
    } while (next_combination(S, n));
    return best;
}

BridgeReport bridge_map(const BinaryMatrix& H, const RealVector& nu) {
    if (nu.size() != H.cols()) throw std::invalid_argument("bridge_map: length mismatch");
    const RealVector s = syndrome_real(H, nu);
    for (const Rat& x : s)
        if (sgn(x) != 0) throw std::invalid_argument("bridge_map: input not in the nullspace");

    BridgeReport report;
    report.omega = abs_vector(nu);
    const ConeMembership membership = cone_contains(H, report.omega);
    report.member = membership.member;
    report.violated_inequality = membership.violated;
    report.support_preserved = support(nu) == support(report.omega);
    return report;
}

ImplicationReport bsc_pw_implies_nsp(const BinaryMatrix& H, std::size_t k, std::size_t max_n) {
    ImplicationReport report;
    const std::optional<Rat> min_pw = min_pseudoweight(H, PwKind::Bsc, max_n);
    report.cone_trivial = !min_pw.has_value();
    report.min_bsc_pw = min_pw;
    // An empty cone has an empty minimum, conventionally +infinity.
    report.premise = report.cone_trivial || *min_pw > Rat(2 * static_cast<long>(k));
    report.conclusion = check_nsp_k(H, k, Rat(1), /*strict=*/true).holds;
    report.satisfied = !report.premise || report.conclusion;
    if (!report.satisfied)
        throw soundness_error("BSC pseudo-weight premise holds but strict NSP(k, 1) fails");
    return report;
}

bool balancedness_check(const RealVector& omega, const SupportSet& S) {
    for (const Rat& x : omega)
        if (sgn(x) < 0) throw std::invalid_argument("balancedness_check: negative entry");
    return l1_on_support(omega, S) < l1_off_support(omega, S);
}

Rat l1l1_bound(const Rat& C, const RealVector& e, const SupportSet& S) {
    if (C <= 1) throw std::invalid_argument("l1l1_bound requires C > 1");
    return 2 * (C + 1) / (C - 1) * l1_off_support(e, S);
}

GuaranteeBound l2l1_bound(const Rat& Cprime, std::size_t k, const RealVector& e,
                          const SupportSet& S, unsigned precision_bits) {
    if (k == 0 || S.size() != k) throw std::invalid_argument("l2l1_bound requires |S| = k >= 1");
    const Rat four_k(4 * static_cast<long>(k));
    if (Cprime <= four_k) throw std::invalid_argument("l2l1_bound requires C' > 4k");
    const Rat mass = l1_off_support(e, S);
    if (sgn(mass) == 0) return {Rat(0), Rat(0), true};

    // bound = mass / (sqrt(k) (sqrt(C'/4k) - 1)); outward rounding needs a
    // lower enclosure end strictly above 1, so refine until it is.
    SqrtEnclosure root = sqrt_enclosure(Cprime / four_k, precision_bits);
    unsigned bits = precision_bits;
    while (root.lower <= 1) {
        bits *= 2;
        root = sqrt_enclosure(Cprime / four_k, bits);
    }
    const SqrtEnclosure rk = sqrt_enclosure(Rat(static_cast<long>(k)), precision_bits);

    GuaranteeBound bound;
    bound.value = mass / ((root.lower - 1) * rk.lower);
    bound.lower = mass / ((root.upper - 1) * rk.upper);
    bound.exact = root.exact && rk.exact;
    if (bound.exact) bound.lower = bound.value;
    return bound;
}

Rat linfl1_bound(const Rat& Cprime, std::size_t k, const RealVector& e, const SupportSet& S) {
    if (k == 0 || S.size() != k) throw std::invalid_argument("linfl1_bound requires |S| = k >= 1");
    const Rat two_k(2 * static_cast<long>(k));
    if (Cprime <= two_k) throw std::invalid_argument("linfl1_bound requires C' > 2k");
    const Rat csecond = Rat(1) / (Cprime / two_k - 1);
    return csecond / Rat(static_cast<long>(k)) * l1_off_support(e, S);
}

} // namespace lpdec
