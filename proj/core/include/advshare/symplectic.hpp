#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "advshare/gfp.hpp"
#include "advshare/limits.hpp"

namespace advshare {

// Sorted, duplicate-free set of 0-based share indices.
using IndexSet = std::vector<std::size_t>;

// Sorts, deduplicates and range-checks against n.
IndexSet make_index_set(std::vector<std::size_t> indices, std::size_t n);
IndexSet complement(const IndexSet& set, std::size_t n);

// Share i owns classical coordinates i (x-part) and n + i (z-part).
std::vector<std::size_t> owned_columns(const IndexSet& set, std::size_t n);

// (a | b) in F_p^{2n}.
class SymplecticVector {
public:
    SymplecticVector(int p, std::size_t n);
    SymplecticVector(const FpVector& x, const FpVector& z);
    // Splits a length-2n vector into its x and z halves.
    static SymplecticVector from_concatenated(const FpVector& v);

    int modulus() const noexcept { return data_.modulus(); }
    std::size_t n() const noexcept { return n_; }

    int x(std::size_t i) const { return data_[i]; }
    int z(std::size_t i) const { return data_[n_ + i]; }
    void set_x(std::size_t i, long long v) { data_.set(i, v); }
    void set_z(std::size_t i, long long v) { data_.set(n_ + i, v); }

    FpVector x_part() const;
    FpVector z_part() const;
    const FpVector& concatenated() const noexcept { return data_; }

    bool is_zero() const { return data_.is_zero(); }
    // Number of positions i with (a_i, b_i) != (0, 0).
    std::size_t weight() const;
    IndexSet support() const;

    SymplecticVector& operator+=(const SymplecticVector& o);
    SymplecticVector& operator-=(const SymplecticVector& o);
    SymplecticVector& operator*=(int s);
    friend SymplecticVector operator+(SymplecticVector a, const SymplecticVector& b) { return a += b; }
    friend SymplecticVector operator-(SymplecticVector a, const SymplecticVector& b) { return a -= b; }
    friend SymplecticVector operator*(int s, SymplecticVector v) { return v *= s; }
    friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;

    // "(1 1 1 1 | 0 0 0 0)"
    std::string str() const;

private:
    std::size_t n_;
    FpVector data_;
};

// <(a|b), (c|d)>_s = <a, d> - <b, c>
FpScalar symplectic_product(const SymplecticVector& u, const SymplecticVector& v);

// F_p-linear subspace of F_p^{2n}, held as the canonical rref basis of its rows.
class SymplecticCode {
public:
    // Row space of `generators` (2n columns). Dependent rows are fine here.
    static SymplecticCode span(std::size_t n, const FpMatrix& generators);
    static SymplecticCode span(std::size_t n, int p, const std::vector<SymplecticVector>& generators);
    static SymplecticCode zero(int p, std::size_t n);
    static SymplecticCode full(int p, std::size_t n);

    int modulus() const noexcept { return basis_.modulus(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return basis_.rows(); }
    const FpMatrix& basis() const noexcept { return basis_; }
    std::vector<SymplecticVector> basis_vectors() const;

    bool contains(const SymplecticVector& v) const;
    bool contains(const SymplecticCode& other) const;

    friend bool operator==(const SymplecticCode&, const SymplecticCode&) = default;

private:
    SymplecticCode(std::size_t n, FpMatrix basis) : n_(n), basis_(std::move(basis)) {}

    std::size_t n_;
    FpMatrix basis_;
};

SymplecticCode symplectic_dual(const SymplecticCode& c);

// Keep codewords vanishing on every coordinate owned by J, then delete those
// coordinates. Result lives on n - |J| positions.
SymplecticCode shorten(const SymplecticCode& c, const IndexSet& j);

// Delete the coordinates owned by J from every codeword.
SymplecticCode puncture(const SymplecticCode& c, const IndexSet& j);

// Visits every linear combination of the rows of `basis` (p^rows vectors,
// zero first). The callback sees the current codeword as a flat span over the
// basis columns and the coefficient vector; returning false stops the walk.
// Throws BudgetExceeded when p^rows > limits.max_codewords.
void for_each_combination(const FpMatrix& basis, const Limits& limits,
                          const std::function<bool(std::span<const int> word, std::span<const int> coeffs)>& visit);

// Exact minimum symplectic weight over the nonzero codewords of c, found by
// exhaustive scan. Requires dim(c) > 0.
std::size_t min_symplectic_weight(const SymplecticCode& c, const Limits& limits = {});

}  // namespace advshare
