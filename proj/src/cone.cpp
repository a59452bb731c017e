#include "lpdec/cone.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace lpdec {

FundamentalConeSystem cone_inequalities(const BinaryMatrix& H) {
    const std::size_t n = H.cols();
    FundamentalConeSystem sys;
    sys.num_vars = n;
    for (std::size_t i = 0; i < n; ++i) {
        RealVector row(n, Rat(0));
        row[i] = 1;
        sys.inequalities.push_back({std::move(row), Rel::Ge, Rat(0)});
        sys.origin.emplace_back(SIZE_MAX, i);
    }
    for (std::size_t j = 0; j < H.rows(); ++j) {
        const auto& I_j = H.row_support(j);
        for (std::size_t i : I_j) {
            RealVector row(n, Rat(0));
            for (std::size_t ip : I_j) row[ip] = (ip == i) ? Rat(-1) : Rat(1);
            sys.inequalities.push_back({std::move(row), Rel::Ge, Rat(0)});
            sys.origin.emplace_back(j, i);
        }
    }
    return sys;
}

ConeMembership cone_contains(const BinaryMatrix& H, const RealVector& omega) {
    if (omega.size() != H.cols()) throw std::invalid_argument("cone_contains: length mismatch");
    const std::size_t n = H.cols();
    for (std::size_t i = 0; i < n; ++i)
        if (sgn(omega[i]) < 0) return {false, i};
    std::size_t idx = n;
    for (std::size_t j = 0; j < H.rows(); ++j) {
        const auto& I_j = H.row_support(j);
        Rat row_sum(0);
        for (std::size_t i : I_j) row_sum += omega[i];
        for (std::size_t i : I_j) {
            // omega_i <= row_sum - omega_i
            if (2 * omega[i] > row_sum) return {false, idx};
            ++idx;
        }
    }
    return {true, std::nullopt};
}

bool cone_contains_approx(const BinaryMatrix& H, const std::vector<double>& omega, double tol) {
    if (omega.size() != H.cols()) throw std::invalid_argument("cone_contains_approx: length mismatch");
    for (double v : omega)
        if (v < -tol) return false;
    for (std::size_t j = 0; j < H.rows(); ++j) {
        double row_sum = 0;
        for (std::size_t i : H.row_support(j)) row_sum += omega[i];
        for (std::size_t i : H.row_support(j))
            if (2 * omega[i] > row_sum + tol) return false;
    }
    return true;
}

FundamentalPolytopeSystem polytope_inequalities(const BinaryMatrix& H, std::size_t max_row_weight) {
    const std::size_t n = H.cols();
    if (H.max_row_weight() > max_row_weight)
        throw guard_error("polytope row-weight guard exceeded: " + std::to_string(H.max_row_weight()) +
                          " > " + std::to_string(max_row_weight));
    FundamentalPolytopeSystem sys;
    sys.num_vars = n;
    for (std::size_t i = 0; i < n; ++i) {
        RealVector row(n, Rat(0));
        row[i] = 1;
        sys.inequalities.push_back({std::move(row), Rel::Ge, Rat(0)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        RealVector row(n, Rat(0));
        row[i] = 1;
        sys.inequalities.push_back({std::move(row), Rel::Le, Rat(1)});
    }
    for (std::size_t j = 0; j < H.rows(); ++j) {
        const auto& I_j = H.row_support(j);
        const std::size_t w = I_j.size();
        if (w == 0) continue;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << w); ++mask) {
            if (std::popcount(mask) % 2 == 0) continue;
            RealVector row(n, Rat(0));
            for (std::size_t t = 0; t < w; ++t) row[I_j[t]] = (mask >> t) & 1 ? Rat(1) : Rat(-1);
            sys.inequalities.push_back({std::move(row), Rel::Le, Rat(std::popcount(mask)) - 1});
        }
    }
    return sys;
}

bool polytope_contains(const BinaryMatrix& H, const RealVector& x, std::size_t max_row_weight) {
    if (x.size() != H.cols()) throw std::invalid_argument("polytope_contains: length mismatch");
    const auto sys = polytope_inequalities(H, max_row_weight);
    for (const auto& ineq : sys.inequalities) {
        const Rat lhs = inner_product(ineq.coeffs, x);
        if (ineq.rel == Rel::Le && lhs > ineq.rhs) return false;
        if (ineq.rel == Rel::Ge && lhs < ineq.rhs) return false;
        if (ineq.rel == Rel::Eq && lhs != ineq.rhs) return false;
    }
    return true;
}

bool is_unscaled_pseudocodeword(const BinaryMatrix& H, const RealVector& omega) {
    if (omega.size() != H.cols()) throw std::invalid_argument("length mismatch");
    if (!cone_contains(H, omega).member) return false;
    BitVector mod2(omega.size(), 0);
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (omega[i].get_den() != 1) return false;
        mpz_class r = omega[i].get_num() % 2;
        mod2[i] = static_cast<std::uint8_t>(r != 0);
    }
    const BitVector s = syndrome_gf2(H, mod2);
    for (auto b : s)
        if (b) return false;
    return true;
}

std::string inequalities_to_text(const std::vector<LpConstraint>& inequalities) {
    std::ostringstream out;
    for (const auto& ineq : inequalities) {
        for (const Rat& c : ineq.coeffs) out << rat_to_string(c) << ' ';
        switch (ineq.rel) {
            case Rel::Le: out << "<="; break;
            case Rel::Eq: out << "="; break;
            case Rel::Ge: out << ">="; break;
        }
        out << ' ' << rat_to_string(ineq.rhs) << '\n';
    }
    return out.str();
}

} // namespace lpdec
