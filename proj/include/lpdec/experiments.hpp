#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpdec/channels.hpp"
#include "lpdec/decoders.hpp"
#include "lpdec/matrices.hpp"
#include "lpdec/nsp.hpp"
#include "lpdec/pseudoweight.hpp"

namespace lpdec {

// Experiment runners. Each trial is a pure function of (seed, trial index),
// so any row of a result file can be reproduced in isolation and identical
// configs yield byte-identical files.

/// Point-wise translation experiment: for every support of size 1..k where
/// CC-LPD corrects the all-zero codeword under flips at S (llr = -1 on S,
/// +1 elsewhere), CS-LPD must recover random sparse signals supported on S.
struct TranslateOutcome {
    struct SupportRow {
        SupportSet S;
        bool cc_success = false;
    };
    struct TrialRow {
        std::size_t trial = 0;
        std::size_t support_index = 0; // into eligible supports
        bool cs_success = false;
    };
    std::vector<SupportRow> supports;    // all supports of size 1..k
    std::vector<std::size_t> eligible;   // indices of cc-successful supports
    std::vector<TrialRow> trials;
    std::size_t satisfied = 0;
    bool vacuous = false; // no support is cc-successful
};

TranslateOutcome run_translate(const BinaryMatrix& H, std::size_t k, std::size_t trials,
                               std::uint64_t seed);

enum class BoundKind { L1L1, L2L1, LinfL1 };

const char* bound_kind_name(BoundKind kind);
std::optional<BoundKind> bound_kind_from_name(const std::string& name);

/// Approximation-guarantee experiment. The premise is certified before any
/// trial runs: l1/l1 by a direct NSP(k, C) check (C defaults to the best
/// certifiable constant), l2/l1 by the minimum AWGNC pseudo-weight over the
/// extreme rays, linf/l1 by the LP minimum max-fractional weight. Runs on an
/// uncertified premise are skipped (premise_certified = false, no trials).
struct GuaranteeOutcome {
    BoundKind kind = BoundKind::L1L1;
    bool premise_certified = false;
    std::string premise_note;
    Rat constant{0};                 // C (l1l1) or C' (l2l1, linfl1)
    std::optional<Rat> certified_min; // quantity backing the premise
    struct TrialRow {
        std::size_t trial = 0;
        SupportSet S;
        Rat bound;  // reported (valid) bound value
        Rat error;  // error norm; squared norm for l2/l1
        bool ok = false;
    };
    std::vector<TrialRow> rows;
    std::size_t violations = 0;
};

GuaranteeOutcome run_guarantee(const BinaryMatrix& H, BoundKind kind, std::size_t k,
                               std::optional<Rat> constant, std::size_t trials,
                               std::uint64_t seed);

/// Peeling equivalence sweep: random supports; bec_peel on the all-zero
/// codeword with erasures at S must match cs_backsub on a random signal
/// supported on S, in success/stuck and in residual sets.
struct PeelEquivOutcome {
    struct TrialRow {
        std::size_t trial = 0;
        SupportSet S;
        bool peel_success = false;
        bool backsub_success = false;
        bool residual_equal = false;
        bool values_recovered = false; // backsub estimate equals the signal on success
        bool agree = false;
    };
    std::vector<TrialRow> rows;
    std::size_t disagreements = 0;
};

PeelEquivOutcome run_peel_equiv(const BinaryMatrix& H, std::size_t trials, std::uint64_t seed,
                                double density = 0.3);

/// Bridge soundness sweep: random rational nullspace vectors, each mapped
/// through |.| and checked for cone membership and support preservation.
struct BridgeSweepOutcome {
    std::size_t trials = 0;
    std::size_t membership_failures = 0;
    std::size_t support_failures = 0;
    std::size_t nullspace_dim = 0;
};

BridgeSweepOutcome run_bridge_sweep(const BinaryMatrix& H, std::size_t trials, std::uint64_t seed);

/// Channel Monte-Carlo sweep for CC-LPD, optionally against the CC-MLD
/// oracle (relaxation sandwich: lpd objective <= mld objective, equality
/// whenever lpd reports Success). BEC runs the peeling decoder instead.
struct CcSweepOutcome {
    struct TrialRow {
        std::size_t trial = 0;
        std::uint64_t trial_seed = 0;
        std::size_t noise_weight = 0; // flips or erasures (0 for AWGNC)
        DecodeStatus status = DecodeStatus::Infeasible;
        Rat objective{0};
        std::optional<Rat> mld_objective;
        bool sandwich_ok = true;
        bool correct = false; // decoded the transmitted codeword
    };
    std::vector<TrialRow> rows;
    std::size_t successes = 0;
    std::size_t sandwich_violations = 0;
};

CcSweepOutcome run_cc_sweep(const BinaryMatrix& H, const ChannelSpec& ch, std::size_t trials,
                            std::uint64_t seed, bool with_mld);

// --- rendering ----------------------------------------------------------

std::string decode_result_to_json(const DecodeResult& r);
std::string nsp_report_to_json(const NspReport& r);
std::string pseudoweight_report_to_json(const PseudoWeightReport& r);
std::string bridge_report_to_json(const BridgeReport& r);

std::string support_to_string(const SupportSet& S); // "1;4;7" ('-' when empty)

std::string translate_to_csv(const TranslateOutcome& o, const std::string& matrix_id,
                             std::uint64_t seed);
std::string guarantee_to_csv(const GuaranteeOutcome& o, const std::string& matrix_id,
                             std::uint64_t seed);
std::string peel_equiv_to_csv(const PeelEquivOutcome& o, const std::string& matrix_id,
                              std::uint64_t seed);
std::string cc_sweep_to_csv(const CcSweepOutcome& o, const std::string& matrix_id,
                            const ChannelSpec& ch, std::uint64_t seed);

std::string translate_to_json(const TranslateOutcome& o, const std::string& matrix_id,
                              std::uint64_t seed, double wall_ms);
std::string guarantee_to_json(const GuaranteeOutcome& o, const std::string& matrix_id,
                              std::uint64_t seed, double wall_ms);
std::string peel_equiv_to_json(const PeelEquivOutcome& o, const std::string& matrix_id,
                               std::uint64_t seed, double wall_ms);
std::string bridge_sweep_to_json(const BridgeSweepOutcome& o, const std::string& matrix_id,
                                 std::uint64_t seed, double wall_ms);
std::string cc_sweep_to_json(const CcSweepOutcome& o, const std::string& matrix_id,
                             const ChannelSpec& ch, std::uint64_t seed, double wall_ms);

} // namespace lpdec
