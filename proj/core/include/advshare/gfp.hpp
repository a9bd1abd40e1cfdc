#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace advshare {

// Primes accepted as alphabet sizes. Exhaustive searches elsewhere keep the
// useful range small, so the field is restricted to {2, 3, 5, 7}.
bool is_supported_prime(int p);
void require_supported_prime(int p);

// Canonical residue of v modulo p, in [0, p).
constexpr int mod_p(long long v, int p) {
    const long long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

// Multiplicative inverse of a nonzero residue.
int inverse_mod(int a, int p);

class FpScalar {
public:
    FpScalar(long long value, int p);

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FpScalar inverse() const;

    friend FpScalar operator+(FpScalar a, FpScalar b);
    friend FpScalar operator-(FpScalar a, FpScalar b);
    friend FpScalar operator*(FpScalar a, FpScalar b);
    friend FpScalar operator-(FpScalar a) { return FpScalar(-a.value_, a.p_); }
    friend bool operator==(FpScalar a, FpScalar b) = default;

private:
    int value_;
    int p_;
};

class FpVector {
public:
    FpVector(int p, std::size_t size);
    FpVector(int p, std::vector<int> entries);
    FpVector(int p, std::initializer_list<int> entries);

    int modulus() const noexcept { return p_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    int operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, long long v) { entries_[i] = mod_p(v, p_); }
    std::span<const int> entries() const noexcept { return entries_; }

    bool is_zero() const;
    // Number of nonzero entries.
    std::size_t weight() const;

    FpVector& operator+=(const FpVector& other);
    FpVector& operator-=(const FpVector& other);
    FpVector& operator*=(int scalar);
    friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
    friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }
    friend FpVector operator*(int s, FpVector v) { return v *= s; }
    friend bool operator==(const FpVector&, const FpVector&) = default;

    std::string str() const;

private:
    int p_;
    std::vector<int> entries_;
};

// Euclidean inner product.
FpScalar dot(const FpVector& a, const FpVector& b);

class FpMatrix {
public:
    FpMatrix(int p, std::size_t rows, std::size_t cols);
    // Rows must all have the same length; entries are reduced mod p.
    static FpMatrix from_rows(int p, const std::vector<std::vector<int>>& rows, std::size_t cols);
    static FpMatrix from_rows(int p, const std::vector<FpVector>& rows, std::size_t cols);
    static FpMatrix from_rows(int p, std::initializer_list<std::initializer_list<int>> rows, std::size_t cols) {
        std::vector<std::vector<int>> copy;
        for (const auto& r : rows) copy.emplace_back(r);
        return from_rows(p, copy, cols);
    }
    static FpMatrix identity(int p, std::size_t size);

    int modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0; }

    int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = mod_p(v, p_); }

    std::span<const int> row_span(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    FpVector row(std::size_t r) const;
    std::vector<FpVector> row_vectors() const;

    void append_row(const FpVector& v);
    FpMatrix transpose() const;
    FpMatrix select_columns(std::span<const std::size_t> columns) const;
    FpMatrix select_rows(std::span<const std::size_t> rows) const;
    // Stack `other` below this matrix; column counts must agree.
    FpMatrix vstack(const FpMatrix& other) const;

    // Row operations used by elimination routines.
    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t r, int factor);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, int factor);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

    std::string str() const;

private:
    int p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
// M · v with v treated as a column.
FpVector operator*(const FpMatrix& m, const FpVector& v);
// v · M with v treated as a row.
FpVector row_times(const FpVector& v, const FpMatrix& m);

struct Rref {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form. Pivot = first row (from the current one down)
// with a nonzero entry in the leftmost unsettled column; pivots scaled to 1.
Rref rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

// Basis (as rows) of the right null space {v : M v = 0}. One vector per free
// column, with a 1 in that column.
FpMatrix kernel(const FpMatrix& m);

// Some x with M x = b, or nullopt when b is outside the column space.
// Free variables are set to zero.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b);

// Nonzero rows of rref(m): a canonical basis of the row space.
FpMatrix row_basis(const FpMatrix& m);
bool in_row_space(const FpMatrix& basis, const FpVector& v);
bool same_row_space(const FpMatrix& a, const FpMatrix& b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

}  // namespace advshare
