#include "lpdec/matrices.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lpdec {

std::size_t l0_norm(const RealVector& a) {
    std::size_t count = 0;
    for (const Rat& x : a)
        if (sgn(x) != 0) ++count;
    return count;
}

Rat l1_norm(const RealVector& a) {
    Rat sum(0);
    for (const Rat& x : a) sum += abs(x);
    return sum;
}

Rat l2_norm_sq(const RealVector& a) {
    Rat sum(0);
    for (const Rat& x : a) sum += x * x;
    return sum;
}

Rat linf_norm(const RealVector& a) {
    Rat best(0);
    for (const Rat& x : a) {
        Rat m(abs(x));
        if (m > best) best = m;
    }
    return best;
}

RealVector abs_vector(const RealVector& a) {
    RealVector out;
    out.reserve(a.size());
    for (const Rat& x : a) out.emplace_back(abs(x));
    return out;
}

SupportSet support(const RealVector& a) {
    SupportSet s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0) s.push_back(i);
    return s;
}

SupportSet support(const BitVector& a) {
    SupportSet s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) s.push_back(i);
    return s;
}

std::size_t hamming_weight(const BitVector& a) {
    std::size_t w = 0;
    for (auto b : a) w += b ? 1 : 0;
    return w;
}

void validate_support(const SupportSet& S, std::size_t n) {
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (S[i] >= n) throw std::invalid_argument("support index out of range");
        if (i > 0 && S[i] <= S[i - 1]) throw std::invalid_argument("support not sorted/unique");
    }
}

Rat l1_on_support(const RealVector& a, const SupportSet& S) {
    validate_support(S, a.size());
    Rat sum(0);
    for (std::size_t i : S) sum += abs(a[i]);
    return sum;
}

Rat l1_off_support(const RealVector& a, const SupportSet& S) {
    return l1_norm(a) - l1_on_support(a, S);
}

SupportSet complement(const SupportSet& S, std::size_t n) {
    validate_support(S, n);
    SupportSet out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < S.size() && S[k] == i) {
            ++k;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

Rat inner_product(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product length mismatch");
    Rat sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be >= 1");
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count mismatch");
    for (auto e : entries_)
        if (e > 1) throw std::invalid_argument("matrix entry not 0/1");
    row_supports_.resize(rows_);
    col_supports_.resize(cols_);
    for (std::size_t j = 0; j < rows_; ++j)
        for (std::size_t i = 0; i < cols_; ++i)
            if (at(j, i)) {
                row_supports_[j].push_back(i);
                col_supports_[i].push_back(j);
            }
}

std::size_t BinaryMatrix::max_row_weight() const {
    std::size_t w = 0;
    for (const auto& s : row_supports_) w = std::max(w, s.size());
    return w;
}

std::size_t BinaryMatrix::max_col_weight() const {
    std::size_t w = 0;
    for (const auto& s : col_supports_) w = std::max(w, s.size());
    return w;
}

namespace {

// Non-blank lines of the input with their 1-based line numbers.
struct NumberedLine {
    std::size_t number;
    std::vector<long> tokens;
};

std::vector<NumberedLine> tokenize_lines(const std::string& text) {
    std::vector<NumberedLine> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::vector<long> tokens;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t pos = 0;
                long v = std::stol(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument("");
                tokens.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(number, "not an integer token: '" + tok + "'");
            }
        }
        if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    }
    return out;
}

} // namespace

BinaryMatrix parse_alist(const std::string& text) {
    const auto lines = tokenize_lines(text);
    auto need_line = [&](std::size_t idx, const char* what) -> const NumberedLine& {
        if (idx >= lines.size())
            throw parse_error(lines.empty() ? 1 : lines.back().number, std::string("missing ") + what);
        return lines[idx];
    };

    const auto& header = need_line(0, "header");
    if (header.tokens.size() != 2)
        throw parse_error(header.number, "header must be 'n m'");
    const long n_signed = header.tokens[0];
    const long m_signed = header.tokens[1];
    if (n_signed < 1 || m_signed < 1) throw parse_error(header.number, "n and m must be >= 1");
    const std::size_t n = static_cast<std::size_t>(n_signed);
    const std::size_t m = static_cast<std::size_t>(m_signed);

    const auto& maxdeg = need_line(1, "max-degree line");
    if (maxdeg.tokens.size() != 2)
        throw parse_error(maxdeg.number, "expected 'max-col-degree max-row-degree'");
    const long max_col = maxdeg.tokens[0];
    const long max_row = maxdeg.tokens[1];
    if (max_col < 0 || max_row < 0) throw parse_error(maxdeg.number, "negative max degree");

    const auto& coldeg = need_line(2, "column degree list");
    if (coldeg.tokens.size() != n)
        throw parse_error(coldeg.number, "expected " + std::to_string(n) + " column degrees");
    const auto& rowdeg = need_line(3, "row degree list");
    if (rowdeg.tokens.size() != m)
        throw parse_error(rowdeg.number, "expected " + std::to_string(m) + " row degrees");
    for (long d : coldeg.tokens)
        if (d < 0 || d > max_col) throw parse_error(coldeg.number, "column degree out of range");
    for (long d : rowdeg.tokens)
        if (d < 0 || d > max_row) throw parse_error(rowdeg.number, "row degree out of range");

    std::vector<std::uint8_t> entries(m * n, 0);

    // Adjacency lines may list exactly deg indices or be zero-padded to the
    // max degree.
    auto read_adjacency = [&](const NumberedLine& line, std::size_t deg, std::size_t pad,
                              long upper) -> std::vector<std::size_t> {
        if (line.tokens.size() != deg && line.tokens.size() != pad)
            throw parse_error(line.number, "expected " + std::to_string(deg) + " (or padded " +
                                               std::to_string(pad) + ") adjacency entries, got " +
                                               std::to_string(line.tokens.size()));
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < line.tokens.size(); ++t) {
            const long v = line.tokens[t];
            if (t < deg) {
                if (v < 1 || v > upper)
                    throw parse_error(line.number, "adjacency index out of range: " + std::to_string(v));
                idx.push_back(static_cast<std::size_t>(v - 1));
            } else if (v != 0) {
                throw parse_error(line.number, "nonzero entry in padding position");
            }
        }
        std::vector<std::size_t> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error(line.number, "duplicate adjacency index");
        return idx;
    };

    std::size_t cursor = 4;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& line = need_line(cursor++, "column adjacency line");
        const auto rows_of_col = read_adjacency(line, static_cast<std::size_t>(coldeg.tokens[i]),
                                                static_cast<std::size_t>(max_col), m_signed);
        for (std::size_t j : rows_of_col) entries[j * n + i] = 1;
    }
    for (std::size_t j = 0; j < m; ++j) {
        const auto& line = need_line(cursor++, "row adjacency line");
        const auto cols_of_row = read_adjacency(line, static_cast<std::size_t>(rowdeg.tokens[j]),
                                                static_cast<std::size_t>(max_row), n_signed);
        // Verify the row list against the matrix built from the column lists.
        std::vector<std::uint8_t> expect(n, 0);
        for (std::size_t i : cols_of_row) expect[i] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (expect[i] != entries[j * n + i])
                throw parse_error(line.number,
                                  "row adjacency disagrees with column adjacency in row " +
                                      std::to_string(j + 1));
    }
    if (cursor < lines.size())
        throw parse_error(lines[cursor].number, "trailing content after adjacency lists");

    return BinaryMatrix(m, n, std::move(entries));
}

BinaryMatrix parse_dense(const std::string& text) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw parse_error(1, "empty matrix");
    const std::size_t n = lines[0].tokens.size();
    std::vector<std::uint8_t> entries;
    entries.reserve(lines.size() * n);
    for (const auto& line : lines) {
        if (line.tokens.size() != n)
            throw parse_error(line.number, "ragged row: expected " + std::to_string(n) +
                                               " entries, got " + std::to_string(line.tokens.size()));
        for (long v : line.tokens) {
            if (v != 0 && v != 1)
                throw parse_error(line.number, "non-binary token: " + std::to_string(v));
            entries.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return BinaryMatrix(lines.size(), n, std::move(entries));
}

std::string to_alist(const BinaryMatrix& H) {
    const std::size_t m = H.rows();
    const std::size_t n = H.cols();
    std::ostringstream out;
    out << n << ' ' << m << '\n';
    out << H.max_col_weight() << ' ' << H.max_row_weight() << '\n';
    for (std::size_t i = 0; i < n; ++i) out << H.col_support(i).size() << (i + 1 < n ? ' ' : '\n');
    for (std::size_t j = 0; j < m; ++j) out << H.row_support(j).size() << (j + 1 < m ? ' ' : '\n');
    const std::size_t max_col = H.max_col_weight();
    const std::size_t max_row = H.max_row_weight();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& s = H.col_support(i);
        for (std::size_t t = 0; t < max_col; ++t)
            out << (t < s.size() ? s[t] + 1 : 0) << (t + 1 < max_col ? ' ' : '\n');
        if (max_col == 0) out << '\n';
    }
    for (std::size_t j = 0; j < m; ++j) {
        const auto& s = H.row_support(j);
        for (std::size_t t = 0; t < max_row; ++t)
            out << (t < s.size() ? s[t] + 1 : 0) << (t + 1 < max_row ? ' ' : '\n');
        if (max_row == 0) out << '\n';
    }
    return out.str();
}

std::string to_dense(const BinaryMatrix& H) {
    std::ostringstream out;
    for (std::size_t j = 0; j < H.rows(); ++j) {
        for (std::size_t i = 0; i < H.cols(); ++i)
            out << static_cast<int>(H.at(j, i)) << (i + 1 < H.cols() ? ' ' : '\n');
    }
    return out.str();
}

namespace {

// GF(2) rows packed into 64-bit words.
std::vector<std::vector<std::uint64_t>> pack_rows(const BinaryMatrix& H) {
    const std::size_t words = (H.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(H.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i : H.row_support(j)) rows[j][i / 64] ^= (1ULL << (i % 64));
    return rows;
}

} // namespace

std::size_t gf2_rank(const BinaryMatrix& H) {
    auto rows = pack_rows(H);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < H.cols() && rank < rows.size(); ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t bit = 1ULL << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != rank && (rows[j][w] & bit))
                for (std::size_t t = 0; t < rows[j].size(); ++t) rows[j][t] ^= rows[rank][t];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Rational reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<RealVector>& a, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.size() && sgn(a[pivot][c]) == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[r], a[pivot]);
        const Rat inv = Rat(1) / a[r][c];
        for (std::size_t t = c; t < cols; ++t) a[r][t] *= inv;
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == r || sgn(a[j][c]) == 0) continue;
            const Rat f = a[j][c];
            for (std::size_t t = c; t < cols; ++t) a[j][t] -= f * a[r][t];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

std::vector<RealVector> to_rational_rows(const BinaryMatrix& H) {
    std::vector<RealVector> a(H.rows(), RealVector(H.cols(), Rat(0)));
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i : H.row_support(j)) a[j][i] = 1;
    return a;
}

} // namespace

std::size_t real_rank(const BinaryMatrix& H) {
    auto a = to_rational_rows(H);
    return rref(a, H.cols()).size();
}

std::vector<RealVector> real_nullspace_basis(const BinaryMatrix& H) {
    auto a = to_rational_rows(H);
    const std::size_t n = H.cols();
    const auto pivot_cols = rref(a, n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<RealVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RealVector v(n, Rat(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> gf2_nullspace_basis(const BinaryMatrix& H) {
    const std::size_t n = H.cols();
    auto rows = pack_rows(H);
    const std::size_t words = (n + 63) / 64;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = 1ULL << (c % 64);
        std::size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != r && (rows[j][w] & bit))
                for (std::size_t t = 0; t < words; ++t) rows[j][t] ^= rows[r][t];
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n, 0);
        v[f] = 1;
        for (std::size_t rr = 0; rr < pivot_cols.size(); ++rr) {
            const std::size_t w = f / 64;
            if (rows[rr][w] & (1ULL << (f % 64))) v[pivot_cols[rr]] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> enumerate_codewords(const BinaryMatrix& H, std::size_t max_dimension) {
    const std::size_t n = H.cols();
    const std::size_t dim = n - gf2_rank(H);
    if (dim > max_dimension)
        throw guard_error("codeword enumeration guard exceeded: dimension " + std::to_string(dim) +
                          " > " + std::to_string(max_dimension));
    const std::vector<BitVector> basis = gf2_nullspace_basis(H);

    std::vector<BitVector> out;
    out.reserve(std::size_t(1) << basis.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << basis.size()); ++mask) {
        BitVector x(n, 0);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (mask & (std::uint64_t(1) << b))
                for (std::size_t i = 0; i < n; ++i) x[i] ^= basis[b][i];
        out.push_back(std::move(x));
    }
    return out;
}

RealVector syndrome_real(const BinaryMatrix& H, const RealVector& y) {
    if (y.size() != H.cols()) throw std::invalid_argument("syndrome_real: length mismatch");
    RealVector s(H.rows(), Rat(0));
    for (std::size_t j = 0; j < H.rows(); ++j)
        for (std::size_t i : H.row_support(j)) s[j] += y[i];
    return s;
}

BitVector syndrome_gf2(const BinaryMatrix& H, const BitVector& y) {
    if (y.size() != H.cols()) throw std::invalid_argument("syndrome_gf2: length mismatch");
    BitVector s(H.rows(), 0);
    for (std::size_t j = 0; j < H.rows(); ++j) {
        std::uint8_t acc = 0;
        for (std::size_t i : H.row_support(j)) acc ^= (y[i] & 1);
        s[j] = acc;
    }
    return s;
}

} // namespace lpdec
