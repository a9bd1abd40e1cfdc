#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "advshare/gfp.hpp"
#include "advshare/limits.hpp"
#include "advshare/symplectic.hpp"

namespace advshare {

// omega^power with omega = exp(2 pi i / p).
std::complex<double> omega_power(int p, long long power);

// omega^t X(a) Z(b) on n qudits of dimension p, with t in Z_p. For p = 2 the
// phases are {+1, -1}. The triple (t, a, b) is the canonical form.
class PauliOperator {
public:
    // Identity.
    PauliOperator(int p, std::size_t n);
    explicit PauliOperator(SymplecticVector v, long long phase_exponent = 0);

    // X^x_exp Z^z_exp on one qudit, identity elsewhere.
    static PauliOperator single(int p, std::size_t n, std::size_t qudit, int x_exp, int z_exp);
    // Tensor string over {I, X, Z, Y}, with Y meaning the canonical product XZ.
    static PauliOperator from_letters(int p, std::string_view letters);

    int modulus() const noexcept { return vec_.modulus(); }
    std::size_t n() const noexcept { return vec_.n(); }
    int phase_exponent() const noexcept { return phase_; }
    const SymplecticVector& vector() const noexcept { return vec_; }
    int x(std::size_t i) const { return vec_.x(i); }
    int z(std::size_t i) const { return vec_.z(i); }

    bool is_identity() const { return phase_ == 0 && vec_.is_zero(); }
    std::size_t weight() const { return vec_.weight(); }

    PauliOperator with_phase(long long phase_exponent) const { return PauliOperator(vec_, phase_exponent); }

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

    // e.g. "w^1 X1Z1 I X1Z0"; one token per qudit, "I" for the identity factor.
    std::string str() const;

private:
    SymplecticVector vec_;
    int phase_;
};

// Canonical form of the matrix product P * Q:
// X(a)Z(b) * X(c)Z(d) = omega^{<b, c>} X(a + c) Z(b + d).
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b);

// P^e for e >= 0.
PauliOperator pauli_pow(const PauliOperator& a, int e);

// The exponent e with P Q = omega^e Q P. Equals -<f(P), f(Q)>_s.
FpScalar commutation_exponent(const PauliOperator& a, const PauliOperator& b);

// Entry (i, j) is commutation_exponent(ops[i], ops[j]).
FpMatrix commutation_matrix(int p, const std::vector<PauliOperator>& ops);

// Phase-stripped image in F_p^{2n}.
SymplecticVector f_map(const PauliOperator& a);
PauliOperator f_inv(const SymplecticVector& v, long long phase_exponent = 0);

// Dense p^n x p^n matrix, qudit 0 being the most significant digit of the
// basis index. Throws BudgetExceeded past limits.max_dense_dimension.
Eigen::MatrixXcd dense_matrix(const PauliOperator& a, const Limits& limits = {});

// A stabilizer with a validated check matrix [H_X | H_Z]: rows independent and
// pairwise symplectically orthogonal.
class StabilizerCode {
public:
    int modulus() const noexcept { return check_.modulus(); }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return n_ - check_.rows(); }
    const FpMatrix& check_matrix() const noexcept { return check_; }
    std::size_t num_generators() const noexcept { return check_.rows(); }

    // Row r of the check matrix as a Pauli operator with phase 0.
    PauliOperator generator(std::size_t r) const;
    std::vector<PauliOperator> generators() const;
    // f(S), the row space of the check matrix.
    SymplecticCode image() const;

    friend bool operator==(const StabilizerCode&, const StabilizerCode&) = default;

private:
    friend StabilizerCode validate_stabilizer(const FpMatrix&, int, std::size_t);
    StabilizerCode(std::size_t n, FpMatrix check) : n_(n), check_(std::move(check)) {}

    std::size_t n_;
    FpMatrix check_;
};

// Throws NotCommutative naming the first offending row pair, or DependentRows.
StabilizerCode validate_stabilizer(const FpMatrix& check, int p, std::size_t n);

// Minimum symplectic weight over f(S)^perp \ f(S). Requires k >= 1; scans
// p^(n+k) dual codewords.
std::size_t code_distance(const StabilizerCode& code, const Limits& limits = {});

}  // namespace advshare
