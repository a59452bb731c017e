#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpdec/matrices.hpp"
#include "lpdec/rational.hpp"

namespace lpdec {

/// Exact witness of a nullspace-property failure: a nullspace vector nu and
/// the queried support S with the two sides of the inequality,
/// lhs = C ||nu_S||_1 and rhs = ||nu_Sbar||_1. The witness violates the
/// queried inequality exactly (lhs > rhs, or lhs >= rhs for strict queries).
struct NspCertificate {
    RealVector nu;
    SupportSet support;
    Rat lhs;
    Rat rhs;
};

struct NspReport {
    bool holds = false;
    std::optional<NspCertificate> certificate; // present iff !holds
};

/// Decides whether C ||nu_S||_1 <= ||nu_Sbar||_1 (or < for strict, over
/// nonzero nu) holds for every nu in the real nullspace of H.
///
/// One LP per sign pattern sigma of nu_S (the first S coordinate is fixed
/// to +1 by the nu <-> -nu symmetry):
///   max C sum_{i in S} sigma_i nu_i  s.t.  H nu = 0, ||nu_Sbar||_1 <= 1
/// (absolute values linearized with auxiliary magnitude variables).
/// Unbounded means a nullspace vector with nu_Sbar = 0, which fails both
/// variants; a bounded maximum M fails the nonstrict property iff M > 1 and
/// the strict property iff M >= 1.
NspReport check_nsp_support(const BinaryMatrix& H, const SupportSet& S, const Rat& C, bool strict);

/// Property over all supports with |S| <= k. Checking |S| = k suffices:
/// shrinking S only decreases the left side and increases the right side.
/// Guarded by the total LP count.
NspReport check_nsp_k(const BinaryMatrix& H, std::size_t k, const Rat& C, bool strict,
                      std::size_t max_lps = 1 << 20);

/// Largest value of ||nu_S||_1 / ||nu_Sbar||_1 over the nullspace and all
/// supports of size k (sup over nonzero nu; nullopt when it is unbounded,
/// i.e. some nullspace vector is supported inside some S). The property
/// NSP<=(k, C) holds iff C * ratio <= 1.
std::optional<Rat> nsp_critical_ratio(const BinaryMatrix& H, std::size_t k,
                                      std::size_t max_lps = 1 << 20);

struct BridgeReport {
    RealVector omega; // |nu|
    bool member = false;
    bool support_preserved = false;
    std::optional<std::size_t> violated_inequality;
};

/// The nullspace-to-cone map omega = |nu| with its verified cone-membership
/// proof. Throws std::invalid_argument when H nu != 0.
BridgeReport bridge_map(const BinaryMatrix& H, const RealVector& nu);

struct ImplicationReport {
    bool premise = false;       // min BSC pseudo-weight > 2k (true for trivial cone)
    bool conclusion = false;    // strict NSP(k, C = 1) holds
    bool satisfied = false;     // !premise || conclusion
    bool cone_trivial = false;
    std::optional<Rat> min_bsc_pw;
};

/// Checks min-BSC-pseudo-weight(H) > 2k  =>  H in strict NSP(k, 1), both
/// sides computed independently. A violated implication is an implementation
/// bug and throws soundness_error.
ImplicationReport bsc_pw_implies_nsp(const BinaryMatrix& H, std::size_t k,
                                     std::size_t max_n = 12);

/// Strict balancedness ||omega_S||_1 < ||omega_Sbar||_1 for nonnegative
/// omega.
bool balancedness_check(const RealVector& omega, const SupportSet& S);

/// l1/l1 guarantee value 2 (C+1)/(C-1) ||e_Sbar||_1; requires C > 1.
Rat l1l1_bound(const Rat& C, const RealVector& e, const SupportSet& S);

/// Rational enclosure of a guarantee value that involves a square root.
/// `value` (the upper end) is always a valid bound; `lower` supports
/// rigorous violation checks; exact when the root is rational.
struct GuaranteeBound {
    Rat value;
    Rat lower;
    bool exact = false;
};

/// l2/l1 guarantee (C''/sqrt(k)) ||e_Sbar||_1 with C'' = 1/(sqrt(C'/4k) - 1);
/// requires C' > 4k and |S| = k >= 1.
GuaranteeBound l2l1_bound(const Rat& Cprime, std::size_t k, const RealVector& e,
                          const SupportSet& S, unsigned precision_bits = 128);

/// linf/l1 guarantee (C''/k) ||e_Sbar||_1 with C'' = 1/(C'/2k - 1); exact;
/// requires C' > 2k and |S| = k >= 1.
Rat linfl1_bound(const Rat& Cprime, std::size_t k, const RealVector& e, const SupportSet& S);

} // namespace lpdec
