#include "advshare/gfp.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "advshare/error.hpp"
#include "advshare/limits.hpp"

namespace advshare {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result *= base;
    }
    return result;
}

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

void require_supported_prime(int p) {
    if (!is_supported_prime(p)) {
        throw InvalidArgument("unsupported modulus " + std::to_string(p) + " (expected one of 2, 3, 5, 7)");
    }
}

int inverse_mod(int a, int p) {
    a = mod_p(a, p);
    if (a == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(p));
    // Fermat: a^(p-2).
    long long result = 1;
    long long base = a;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

namespace {

void require_same_modulus(int a, int b) {
    if (a != b) throw InvalidArgument("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw InvalidArgument("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

FpScalar::FpScalar(long long value, int p) : value_(0), p_(p) {
    require_supported_prime(p);
    value_ = mod_p(value, p);
}

FpScalar FpScalar::inverse() const { return FpScalar(inverse_mod(value_, p_), p_); }

FpScalar operator+(FpScalar a, FpScalar b) {
    require_same_modulus(a.p_, b.p_);
    return FpScalar(a.value_ + b.value_, a.p_);
}

FpScalar operator-(FpScalar a, FpScalar b) {
    require_same_modulus(a.p_, b.p_);
    return FpScalar(a.value_ - b.value_, a.p_);
}

FpScalar operator*(FpScalar a, FpScalar b) {
    require_same_modulus(a.p_, b.p_);
    return FpScalar(static_cast<long long>(a.value_) * b.value_, a.p_);
}

// ---------------------------------------------------------------------------
// FpVector

FpVector::FpVector(int p, std::size_t size) : p_(p), entries_(size, 0) { require_supported_prime(p); }

FpVector::FpVector(int p, std::vector<int> entries) : p_(p), entries_(std::move(entries)) {
    require_supported_prime(p);
    for (auto& e : entries_) e = mod_p(e, p);
}

FpVector::FpVector(int p, std::initializer_list<int> entries) : FpVector(p, std::vector<int>(entries)) {}

bool FpVector::is_zero() const {
    for (int e : entries_) {
        if (e != 0) return false;
    }
    return true;
}

std::size_t FpVector::weight() const {
    std::size_t w = 0;
    for (int e : entries_) w += e != 0;
    return w;
}

FpVector& FpVector::operator+=(const FpVector& other) {
    require_same_modulus(p_, other.p_);
    require_same_size(size(), other.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = mod_p(entries_[i] + other.entries_[i], p_);
    return *this;
}

FpVector& FpVector::operator-=(const FpVector& other) {
    require_same_modulus(p_, other.p_);
    require_same_size(size(), other.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = mod_p(entries_[i] - other.entries_[i], p_);
    return *this;
}

FpVector& FpVector::operator*=(int scalar) {
    for (auto& e : entries_) e = mod_p(static_cast<long long>(e) * scalar, p_);
    return *this;
}

std::string FpVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ' ';
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

FpScalar dot(const FpVector& a, const FpVector& b) {
    require_same_modulus(a.modulus(), b.modulus());
    require_same_size(a.size(), b.size());
    long long acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long long>(a[i]) * b[i];
    return FpScalar(acc, a.modulus());
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    require_supported_prime(p);
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows, std::size_t cols) {
    FpMatrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InvalidArgument("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<FpVector>& rows, std::size_t cols) {
    FpMatrix m(p, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

FpMatrix FpMatrix::identity(int p, std::size_t size) {
    FpMatrix m(p, size, size);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
}

FpVector FpMatrix::row(std::size_t r) const {
    auto s = row_span(r);
    return FpVector(p_, std::vector<int>(s.begin(), s.end()));
}

std::vector<FpVector> FpMatrix::row_vectors() const {
    std::vector<FpVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void FpMatrix::append_row(const FpVector& v) {
    require_same_modulus(p_, v.modulus());
    require_same_size(cols_, v.size());
    data_.insert(data_.end(), v.entries().begin(), v.entries().end());
    ++rows_;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
    return t;
}

FpMatrix FpMatrix::select_columns(std::span<const std::size_t> columns) const {
    FpMatrix out(p_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) out.data_[r * columns.size() + c] = at(r, columns[c]);
    return out;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> rows) const {
    FpMatrix out(p_, 0, cols_);
    for (auto r : rows) out.append_row(row(r));
    return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& other) const {
    require_same_modulus(p_, other.p_);
    require_same_size(cols_, other.cols_);
    FpMatrix out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ += other.rows_;
    return out;
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void FpMatrix::scale_row(std::size_t r, int factor) {
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, static_cast<long long>(at(r, c)) * factor);
}

void FpMatrix::add_row_multiple(std::size_t dst, std::size_t src, int factor) {
    factor = mod_p(factor, p_);
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) set(dst, c, at(dst, c) + static_cast<long long>(factor) * at(src, c));
}

std::string FpMatrix::str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    require_same_modulus(a.modulus(), b.modulus());
    require_same_size(a.cols(), b.rows());
    FpMatrix out(a.modulus(), a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            long long acc = 0;
            for (std::size_t i = 0; i < a.cols(); ++i) acc += static_cast<long long>(a.at(r, i)) * b.at(i, c);
            out.set(r, c, acc);
        }
    }
    return out;
}

FpVector operator*(const FpMatrix& m, const FpVector& v) {
    require_same_modulus(m.modulus(), v.modulus());
    require_same_size(m.cols(), v.size());
    FpVector out(m.modulus(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc += static_cast<long long>(m.at(r, c)) * v[c];
        out.set(r, acc);
    }
    return out;
}

FpVector row_times(const FpVector& v, const FpMatrix& m) {
    require_same_modulus(m.modulus(), v.modulus());
    require_same_size(m.rows(), v.size());
    FpVector out(m.modulus(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        long long acc = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) acc += static_cast<long long>(v[r]) * m.at(r, c);
        out.set(c, acc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

Rref rref(const FpMatrix& m) {
    Rref out{m, 0, {}};
    FpMatrix& r = out.reduced;
    const int p = m.modulus();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < r.rows() && r.at(pivot, col) == 0) ++pivot;
        if (pivot == r.rows()) continue;
        r.swap_rows(lead, pivot);
        r.scale_row(lead, inverse_mod(r.at(lead, col), p));
        for (std::size_t other = 0; other < r.rows(); ++other) {
            if (other != lead && r.at(other, col) != 0) r.add_row_multiple(other, lead, -r.at(other, col));
        }
        out.pivot_columns.push_back(col);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix kernel(const FpMatrix& m) {
    const Rref r = rref(m);
    const int p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_columns) is_pivot[c] = true;

    FpMatrix basis(p, 0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FpVector v(p, m.cols());
        v.set(free, 1);
        for (std::size_t i = 0; i < r.rank; ++i) v.set(r.pivot_columns[i], -r.reduced.at(i, free));
        basis.append_row(v);
    }
    return basis;
}

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b) {
    require_same_modulus(m.modulus(), b.modulus());
    if (b.size() != m.rows()) {
        throw InvalidArgument("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                              std::to_string(m.rows()));
    }
    const int p = m.modulus();
    FpMatrix augmented(p, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) augmented.set(r, c, m.at(r, c));
        augmented.set(r, m.cols(), b[r]);
    }
    const Rref r = rref(augmented);
    FpVector x(p, m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t col = r.pivot_columns[i];
        if (col == m.cols()) return std::nullopt;
        x.set(col, r.reduced.at(i, m.cols()));
    }
    return x;
}

FpMatrix row_basis(const FpMatrix& m) {
    Rref r = rref(m);
    std::vector<std::size_t> keep(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
    return r.reduced.select_rows(keep);
}

bool in_row_space(const FpMatrix& basis, const FpVector& v) {
    FpMatrix extended = basis;
    extended.append_row(v);
    return rank(extended) == rank(basis);
}

bool same_row_space(const FpMatrix& a, const FpMatrix& b) { return row_basis(a) == row_basis(b); }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const int p = m.modulus();
    FpMatrix augmented(p, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented.set(r, c, m.at(r, c));
        augmented.set(r, n + r, 1);
    }
    const Rref r = rref(augmented);
    if (r.rank < n || (n > 0 && r.pivot_columns[n - 1] != n - 1)) return std::nullopt;
    FpMatrix inv(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) inv.set(i, c, r.reduced.at(i, n + c));
    return inv;
}

}  // namespace advshare
