#include "advshare/pauli.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "advshare/error.hpp"

namespace advshare {

std::complex<double> omega_power(int p, long long power) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod_p(power, p)) / p;
    return {std::cos(angle), std::sin(angle)};
}

PauliOperator::PauliOperator(int p, std::size_t n) : vec_(p, n), phase_(0) {}

PauliOperator::PauliOperator(SymplecticVector v, long long phase_exponent)
    : vec_(std::move(v)), phase_(mod_p(phase_exponent, vec_.modulus())) {}

PauliOperator PauliOperator::single(int p, std::size_t n, std::size_t qudit, int x_exp, int z_exp) {
    if (qudit >= n) throw InvalidArgument("qudit index out of range");
    SymplecticVector v(p, n);
    v.set_x(qudit, x_exp);
    v.set_z(qudit, z_exp);
    return PauliOperator(std::move(v));
}

PauliOperator PauliOperator::from_letters(int p, std::string_view letters) {
    SymplecticVector v(p, letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
            case 'I': break;
            case 'X': v.set_x(i, 1); break;
            case 'Z': v.set_z(i, 1); break;
            case 'Y':
                v.set_x(i, 1);
                v.set_z(i, 1);
                break;
            default: throw InvalidArgument(std::string("unknown Pauli letter '") + letters[i] + "'");
        }
    }
    return PauliOperator(std::move(v));
}

std::string PauliOperator::str() const {
    std::ostringstream out;
    out << "w^" << phase_;
    for (std::size_t i = 0; i < n(); ++i) {
        out << ' ';
        if (x(i) == 0 && z(i) == 0) {
            out << 'I';
        } else {
            out << 'X' << x(i) << 'Z' << z(i);
        }
    }
    return out.str();
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
    if (a.n() != b.n() || a.modulus() != b.modulus()) {
        throw InvalidArgument("Pauli product of operators with different size or modulus");
    }
    // Z^b X^c = omega^{bc} X^c Z^b per qudit.
    const FpScalar cross = dot(a.vector().z_part(), b.vector().x_part());
    return PauliOperator(a.vector() + b.vector(),
                         static_cast<long long>(a.phase_exponent()) + b.phase_exponent() + cross.value());
}

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b) { return a * b; }

PauliOperator pauli_pow(const PauliOperator& a, int e) {
    PauliOperator out(a.modulus(), a.n());
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

FpScalar commutation_exponent(const PauliOperator& a, const PauliOperator& b) {
    if (a.n() != b.n() || a.modulus() != b.modulus()) {
        throw InvalidArgument("commutation exponent of operators with different size or modulus");
    }
    return -symplectic_product(a.vector(), b.vector());
}

FpMatrix commutation_matrix(int p, const std::vector<PauliOperator>& ops) {
    FpMatrix m(p, ops.size(), ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = 0; j < ops.size(); ++j) m.set(i, j, commutation_exponent(ops[i], ops[j]).value());
    return m;
}

SymplecticVector f_map(const PauliOperator& a) { return a.vector(); }

PauliOperator f_inv(const SymplecticVector& v, long long phase_exponent) { return PauliOperator(v, phase_exponent); }

Eigen::MatrixXcd dense_matrix(const PauliOperator& a, const Limits& limits) {
    const int p = a.modulus();
    const std::size_t n = a.n();
    const std::uint64_t dim = checked_power(static_cast<std::uint64_t>(p), n);
    if (dim > limits.max_dense_dimension) {
        throw BudgetExceeded("dense Pauli matrix of dimension " + std::to_string(dim) + " exceeds budget");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    std::vector<int> digits(n, 0);
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::uint64_t rest = col;
        for (std::size_t q = n; q-- > 0;) {
            digits[q] = static_cast<int>(rest % p);
            rest /= p;
        }
        long long phase = a.phase_exponent();
        std::uint64_t row = 0;
        for (std::size_t q = 0; q < n; ++q) {
            phase += static_cast<long long>(a.z(q)) * digits[q];
            row = row * p + static_cast<std::uint64_t>((digits[q] + a.x(q)) % p);
        }
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = omega_power(p, phase);
    }
    return m;
}

// ---------------------------------------------------------------------------

PauliOperator StabilizerCode::generator(std::size_t r) const {
    return PauliOperator(SymplecticVector::from_concatenated(check_.row(r)));
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> out;
    for (std::size_t r = 0; r < check_.rows(); ++r) out.push_back(generator(r));
    return out;
}

SymplecticCode StabilizerCode::image() const { return SymplecticCode::span(n_, check_); }

StabilizerCode validate_stabilizer(const FpMatrix& check, int p, std::size_t n) {
    require_supported_prime(p);
    if (check.modulus() != p) throw InvalidArgument("check matrix modulus differs from p");
    if (check.cols() != 2 * n) {
        throw InvalidArgument("check matrix has " + std::to_string(check.cols()) + " columns, expected 2n = " +
                              std::to_string(2 * n));
    }
    const auto rows = check.row_vectors();
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const auto va = SymplecticVector::from_concatenated(rows[a]);
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            if (!symplectic_product(va, SymplecticVector::from_concatenated(rows[b])).is_zero()) {
                throw NotCommutative(a, b);
            }
        }
    }
    if (rank(check) != check.rows()) {
        throw DependentRows("rows dependent: check matrix has rank " + std::to_string(rank(check)) + " but " +
                            std::to_string(check.rows()) + " rows");
    }
    return StabilizerCode(n, check);
}

std::size_t code_distance(const StabilizerCode& code, const Limits& limits) {
    if (code.k() == 0) throw InvalidArgument("distance is undefined for k = 0");
    const std::size_t n = code.n();
    const SymplecticCode stab = code.image();
    const SymplecticCode dual = symplectic_dual(stab);

    // Basis of the dual = basis of f(S) followed by 2k extension vectors, so a
    // codeword lies in f(S) iff every extension coefficient is zero.
    FpMatrix basis = stab.basis();
    const std::size_t inner = basis.rows();
    for (std::size_t r = 0; r < dual.dimension(); ++r) {
        const FpVector v = dual.basis().row(r);
        if (!in_row_space(basis, v)) basis.append_row(v);
    }
    if (basis.rows() != dual.dimension()) throw InvariantViolation("f(S) is not contained in its dual");

    std::size_t best = n + 1;
    for_each_combination(basis, limits, [&](std::span<const int> w, std::span<const int> coeffs) {
        bool outside = false;
        for (std::size_t i = inner; i < coeffs.size(); ++i) outside |= coeffs[i] != 0;
        if (!outside) return true;
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) weight += (w[i] != 0 || w[n + i] != 0);
        best = std::min(best, weight);
        return best > 1;
    });
    return best;
}

}  // namespace advshare
