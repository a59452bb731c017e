#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lpdec/matrices.hpp"
#include "lpdec/rational.hpp"

namespace lpdec {

enum class Rel { Le, Eq, Ge };

struct LpConstraint {
    RealVector coeffs;
    Rel rel;
    Rat rhs;
};

/// Minimization linear program over exact rationals. Variables are free by
/// default; bounds are optional per side.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars)
        : objective_(num_vars, Rat(0)), lower_(num_vars), upper_(num_vars) {}

    std::size_t num_vars() const { return objective_.size(); }

    void set_objective(RealVector c);
    void add_constraint(RealVector coeffs, Rel rel, Rat rhs);
    void set_lower(std::size_t var, Rat bound) { lower_[var] = std::move(bound); }
    void set_upper(std::size_t var, Rat bound) { upper_[var] = std::move(bound); }

    const RealVector& objective() const { return objective_; }
    const std::vector<LpConstraint>& constraints() const { return constraints_; }
    const std::optional<Rat>& lower(std::size_t var) const { return lower_[var]; }
    const std::optional<Rat>& upper(std::size_t var) const { return upper_[var]; }

private:
    RealVector objective_;
    std::vector<LpConstraint> constraints_;
    std::vector<std::optional<Rat>> lower_;
    std::vector<std::optional<Rat>> upper_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    RealVector point;      // when Optimal: satisfies every constraint exactly
    Rat objective{0};      // when Optimal: equals c . point exactly
    RealVector ray;        // when Unbounded: feasible recession direction with c . ray < 0
    Rat infeasibility{0};  // when Infeasible: phase-one optimum (> 0)
    // True when every nonbasic column priced strictly positive at the
    // optimum, which certifies a unique optimal point. False is
    // inconclusive (degenerate or genuinely tied).
    bool unique_certified = false;
};

/// Exact two-phase dense-tableau simplex with Bland's anti-cycling rule.
/// Deterministic: entering variable is the lowest eligible index, leaving row
/// breaks ratio ties by lowest basic index.
LpSolution solve_lp(const LinearProgram& p);

} // namespace lpdec
