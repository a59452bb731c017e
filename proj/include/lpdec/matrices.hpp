#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lpdec/errors.hpp"
#include "lpdec/rational.hpp"

namespace lpdec {

/// Vector over the rationals (signals, estimates, nullspace vectors,
/// pseudo-codewords, LLR vectors).
using RealVector = std::vector<Rat>;

/// Vector over GF(2); entries are 0 or 1.
using BitVector = std::vector<std::uint8_t>;

/// Sorted set of coordinate indices (0-based).
using SupportSet = std::vector<std::size_t>;

/// LLR cost vector of CC-LPD; finite rational entries (BEC erasures never
/// enter here, they go through the peeling decoder).
using LlrVector = RealVector;

// --- norms and supports ------------------------------------------------

std::size_t l0_norm(const RealVector& a);
Rat l1_norm(const RealVector& a);
Rat l2_norm_sq(const RealVector& a);
Rat linf_norm(const RealVector& a);
RealVector abs_vector(const RealVector& a);
SupportSet support(const RealVector& a);
SupportSet support(const BitVector& a);
std::size_t hamming_weight(const BitVector& a);

/// l1 mass of the coordinates listed in S (S must be sorted, in range).
Rat l1_on_support(const RealVector& a, const SupportSet& S);
/// l1 mass of the coordinates outside S.
Rat l1_off_support(const RealVector& a, const SupportSet& S);

SupportSet complement(const SupportSet& S, std::size_t n);
/// Validates sortedness, uniqueness and range; throws std::invalid_argument.
void validate_support(const SupportSet& S, std::size_t n);

Rat inner_product(const RealVector& a, const RealVector& b);

/// A 0/1 matrix used both as a real measurement matrix and as a GF(2)
/// parity-check matrix. Immutable after construction; row and column
/// supports are precomputed.
class BinaryMatrix {
public:
    /// entries is row-major, size rows*cols, each 0 or 1; rows, cols >= 1.
    BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t at(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }

    /// I_j: column indices with a 1 in row j (sorted).
    const SupportSet& row_support(std::size_t row) const { return row_supports_[row]; }
    /// J_i: row indices with a 1 in column i (sorted).
    const SupportSet& col_support(std::size_t col) const { return col_supports_[col]; }

    std::size_t max_row_weight() const;
    std::size_t max_col_weight() const;

    bool operator==(const BinaryMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> entries_;
    std::vector<SupportSet> row_supports_;
    std::vector<SupportSet> col_supports_;
};

// --- parsing and serialization ------------------------------------------

/// Parses the ALIST interchange format:
///   n m / max-col-deg max-row-deg / col degrees / row degrees /
///   one line per column with 1-based row indices / one line per row with
///   1-based column indices. Zero padding to the max degree is accepted.
/// Errors carry the offending line number.
BinaryMatrix parse_alist(const std::string& text);

/// Parses whitespace-separated rows of 0/1 tokens (equal row lengths).
BinaryMatrix parse_dense(const std::string& text);

std::string to_alist(const BinaryMatrix& H);
std::string to_dense(const BinaryMatrix& H);

// --- ranks, nullspaces, syndromes ----------------------------------------

std::size_t gf2_rank(const BinaryMatrix& H);
std::size_t real_rank(const BinaryMatrix& H);

/// Exact rational basis of { a : H a = 0 over the reals }, in reduced-echelon
/// parametric form (one basis vector per free column, deterministic).
std::vector<RealVector> real_nullspace_basis(const BinaryMatrix& H);

/// GF(2) nullspace basis of H (one vector per free column of the RREF).
std::vector<BitVector> gf2_nullspace_basis(const BinaryMatrix& H);

/// All codewords of the GF(2) code with parity-check matrix H. Guarded:
/// throws guard_error when n - gf2_rank(H) > max_dimension.
std::vector<BitVector> enumerate_codewords(const BinaryMatrix& H, std::size_t max_dimension = 24);

/// s = H y over the rationals (length m).
RealVector syndrome_real(const BinaryMatrix& H, const RealVector& y);

/// s = H y over GF(2) (length m).
BitVector syndrome_gf2(const BinaryMatrix& H, const BitVector& y);

} // namespace lpdec
