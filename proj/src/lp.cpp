#include "lpdec/lp.hpp"

#include <stdexcept>

namespace lpdec {

void LinearProgram::set_objective(RealVector c) {
    if (c.size() != num_vars()) throw std::invalid_argument("objective length mismatch");
    objective_ = std::move(c);
}

void LinearProgram::add_constraint(RealVector coeffs, Rel rel, Rat rhs) {
    if (coeffs.size() != num_vars()) throw std::invalid_argument("constraint length mismatch");
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// How an original variable maps into the nonnegative standard-form space.
struct VarMap {
    enum Kind { LowerShift, UpperFlip, Split } kind;
    std::size_t col = 0;      // primary column
    std::size_t neg_col = 0;  // second column when Split
    Rat offset{0};            // LowerShift: x = offset + y; UpperFlip: x = offset - y
};

struct Tableau {
    // rows: x_B = rhs - sum_j T[i][j] x_j over nonbasic j; rhs >= 0 invariant.
    std::vector<RealVector> rows;
    RealVector rhs;
    std::vector<std::size_t> basis;   // basic column per row
    RealVector cost;                  // reduced costs (length = num cols)
    Rat objective_negated{0};         // -(current objective of the phase)
    std::vector<bool> eligible;       // artificial columns become ineligible

    std::size_t num_cols() const { return cost.size(); }

    void pivot(std::size_t r, std::size_t e) {
        const Rat inv = Rat(1) / rows[r][e];
        for (Rat& v : rows[r]) v *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][e]) == 0) continue;
            const Rat f = rows[i][e];
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
            rhs[i] -= f * rhs[r];
        }
        if (sgn(cost[e]) != 0) {
            const Rat f = cost[e];
            for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * rows[r][j];
            objective_negated -= f * rhs[r];
        }
        basis[r] = e;
    }

    // Subtract basic-cost multiples so reduced costs of basic columns are 0.
    void price_out(const RealVector& costs) {
        cost = costs;
        objective_negated = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rat f = cost[basis[i]];
            if (sgn(f) == 0) continue;
            for (std::size_t j = 0; j < cost.size(); ++j) cost[j] -= f * rows[i][j];
            objective_negated -= f * rhs[i];
        }
    }
};

enum class PhaseOutcome { Optimal, Unbounded };

// Bland's rule: entering = lowest eligible index with negative reduced cost;
// leaving = ratio-test minimizer, ties broken by lowest basic variable index.
PhaseOutcome run_simplex(Tableau& t, std::size_t* unbounded_col = nullptr) {
    for (;;) {
        std::size_t entering = t.num_cols();
        for (std::size_t j = 0; j < t.num_cols(); ++j) {
            if (t.eligible[j] && sgn(t.cost[j]) < 0) {
                entering = j;
                break;
            }
        }
        if (entering == t.num_cols()) return PhaseOutcome::Optimal;

        std::size_t leaving = t.rows.size();
        Rat best_ratio(0);
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            if (sgn(t.rows[i][entering]) <= 0) continue;
            Rat ratio = t.rhs[i] / t.rows[i][entering];
            if (leaving == t.rows.size() || ratio < best_ratio ||
                (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving == t.rows.size()) {
            if (unbounded_col) *unbounded_col = entering;
            return PhaseOutcome::Unbounded;
        }
        t.pivot(leaving, entering);
    }
}

} // namespace

LpSolution solve_lp(const LinearProgram& p) {
    const std::size_t n = p.num_vars();
    LpSolution sol;

    // --- standard form: min c~ . y, A y = b, y >= 0 -----------------------
    std::vector<VarMap> vmap(n);
    std::size_t cols = 0;
    std::vector<LpConstraint> extra_rows; // range rows from two-sided bounds
    for (std::size_t v = 0; v < n; ++v) {
        const auto& lo = p.lower(v);
        const auto& hi = p.upper(v);
        if (lo && hi && *lo > *hi) {
            sol.status = LpStatus::Infeasible;
            sol.infeasibility = *lo - *hi;
            return sol;
        }
        if (lo) {
            vmap[v] = {VarMap::LowerShift, cols++, 0, *lo};
            if (hi) {
                RealVector row(n, Rat(0));
                row[v] = 1;
                extra_rows.push_back({std::move(row), Rel::Le, *hi});
            }
        } else if (hi) {
            vmap[v] = {VarMap::UpperFlip, cols++, 0, *hi};
        } else {
            vmap[v] = {VarMap::Split, cols, cols + 1, Rat(0)};
            cols += 2;
        }
    }
    const std::size_t num_structural = cols;

    std::vector<LpConstraint> all_rows = p.constraints();
    for (auto& r : extra_rows) all_rows.push_back(std::move(r));
    const std::size_t m = all_rows.size();

    // Substitute the variable maps into each row; collect adjusted rhs.
    std::vector<RealVector> a(m, RealVector(num_structural, Rat(0)));
    RealVector b(m, Rat(0));
    std::vector<Rel> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat rhs = all_rows[i].rhs;
        rel[i] = all_rows[i].rel;
        for (std::size_t v = 0; v < n; ++v) {
            const Rat& cv = all_rows[i].coeffs[v];
            if (sgn(cv) == 0) continue;
            switch (vmap[v].kind) {
                case VarMap::LowerShift:
                    a[i][vmap[v].col] += cv;
                    rhs -= cv * vmap[v].offset;
                    break;
                case VarMap::UpperFlip:
                    a[i][vmap[v].col] -= cv;
                    rhs -= cv * vmap[v].offset;
                    break;
                case VarMap::Split:
                    a[i][vmap[v].col] += cv;
                    a[i][vmap[v].neg_col] -= cv;
                    break;
            }
        }
        b[i] = rhs;
        if (sgn(b[i]) < 0) { // normalize to b >= 0
            for (Rat& x : a[i]) x = -x;
            b[i] = -b[i];
            if (rel[i] == Rel::Le)
                rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge)
                rel[i] = Rel::Le;
        }
    }

    // Slack/surplus columns; rows without a natural basic slack get an
    // artificial column in phase 1.
    std::size_t num_slack = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (rel[i] != Rel::Eq) ++num_slack;
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    std::size_t next = num_structural;
    for (std::size_t i = 0; i < m; ++i)
        if (rel[i] != Rel::Eq) slack_col[i] = next++;
    std::vector<bool> needs_artificial(m, false);
    std::size_t num_artificial = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (rel[i] == Rel::Le) continue; // slack is basic
        needs_artificial[i] = true;
        ++num_artificial;
    }
    std::vector<std::size_t> art_col(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        if (needs_artificial[i]) art_col[i] = next++;
    const std::size_t total_cols = next;

    Tableau t;
    t.rows.assign(m, RealVector(total_cols, Rat(0)));
    t.rhs = b;
    t.basis.assign(m, 0);
    t.eligible.assign(total_cols, true);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < num_structural; ++j) t.rows[i][j] = a[i][j];
        if (rel[i] == Rel::Le) {
            t.rows[i][slack_col[i]] = 1;
            t.basis[i] = slack_col[i];
        } else if (rel[i] == Rel::Ge) {
            t.rows[i][slack_col[i]] = -1;
        }
        if (needs_artificial[i]) {
            t.rows[i][art_col[i]] = 1;
            t.basis[i] = art_col[i];
        }
    }

    // --- phase 1 ----------------------------------------------------------
    if (num_artificial > 0) {
        RealVector phase1(total_cols, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (needs_artificial[i]) phase1[art_col[i]] = 1;
        t.price_out(phase1);
        const PhaseOutcome out = run_simplex(t);
        if (out != PhaseOutcome::Optimal)
            throw std::logic_error("phase 1 cannot be unbounded"); // objective >= 0
        const Rat phase1_opt = -t.objective_negated;
        if (sgn(phase1_opt) > 0) {
            sol.status = LpStatus::Infeasible;
            sol.infeasibility = phase1_opt;
            return sol;
        }
        // Drive remaining artificials out of the (degenerate) basis; a row
        // with no structural pivot is redundant and gets dropped.
        std::vector<bool> is_artificial(total_cols, false);
        for (std::size_t i = 0; i < m; ++i)
            if (needs_artificial[i]) is_artificial[art_col[i]] = true;
        for (std::size_t i = 0; i < t.rows.size();) {
            if (!is_artificial[t.basis[i]]) {
                ++i;
                continue;
            }
            std::size_t pivot_col = total_cols;
            for (std::size_t j = 0; j < total_cols; ++j) {
                if (!is_artificial[j] && sgn(t.rows[i][j]) != 0) {
                    pivot_col = j;
                    break;
                }
            }
            if (pivot_col == total_cols) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.rhs.erase(t.rhs.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                t.pivot(i, pivot_col); // rhs is 0 here, feasibility preserved
                ++i;
            }
        }
        for (std::size_t j = 0; j < total_cols; ++j)
            if (is_artificial[j]) t.eligible[j] = false;
    }

    // --- phase 2 ----------------------------------------------------------
    RealVector phase2(total_cols, Rat(0));
    for (std::size_t v = 0; v < n; ++v) {
        const Rat& cv = p.objective()[v];
        if (sgn(cv) == 0) continue;
        switch (vmap[v].kind) {
            case VarMap::LowerShift: phase2[vmap[v].col] += cv; break;
            case VarMap::UpperFlip: phase2[vmap[v].col] -= cv; break;
            case VarMap::Split:
                phase2[vmap[v].col] += cv;
                phase2[vmap[v].neg_col] -= cv;
                break;
        }
    }
    t.price_out(phase2);
    std::size_t unbounded_col = 0;
    const PhaseOutcome out = run_simplex(t, &unbounded_col);

    auto y_to_x = [&](const RealVector& y) {
        RealVector x(n, Rat(0));
        for (std::size_t v = 0; v < n; ++v) {
            switch (vmap[v].kind) {
                case VarMap::LowerShift: x[v] = vmap[v].offset + y[vmap[v].col]; break;
                case VarMap::UpperFlip: x[v] = vmap[v].offset - y[vmap[v].col]; break;
                case VarMap::Split: x[v] = y[vmap[v].col] - y[vmap[v].neg_col]; break;
            }
        }
        return x;
    };
    auto dy_to_dx = [&](const RealVector& dy) {
        RealVector dx(n, Rat(0));
        for (std::size_t v = 0; v < n; ++v) {
            switch (vmap[v].kind) {
                case VarMap::LowerShift: dx[v] = dy[vmap[v].col]; break;
                case VarMap::UpperFlip: dx[v] = -dy[vmap[v].col]; break;
                case VarMap::Split: dx[v] = dy[vmap[v].col] - dy[vmap[v].neg_col]; break;
            }
        }
        return dx;
    };

    if (out == PhaseOutcome::Unbounded) {
        RealVector dy(total_cols, Rat(0));
        dy[unbounded_col] = 1;
        for (std::size_t i = 0; i < t.rows.size(); ++i) dy[t.basis[i]] = -t.rows[i][unbounded_col];
        sol.status = LpStatus::Unbounded;
        sol.ray = dy_to_dx(dy);
        return sol;
    }

    RealVector y(total_cols, Rat(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rhs[i];
    sol.status = LpStatus::Optimal;
    sol.point = y_to_x(y);
    sol.objective = inner_product(p.objective(), sol.point);

    sol.unique_certified = true;
    {
        std::vector<bool> is_basic(total_cols, false);
        for (std::size_t c : t.basis) is_basic[c] = true;
        for (std::size_t j = 0; j < total_cols && sol.unique_certified; ++j)
            if (t.eligible[j] && !is_basic[j] && sgn(t.cost[j]) <= 0) sol.unique_certified = false;
    }
    return sol;
}

} // namespace lpdec
