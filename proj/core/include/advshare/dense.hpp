#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "advshare/symplectic.hpp"

// Kernels acting in place on dense amplitude vectors of m qudits of
// dimension p. Qudit 0 is the most significant digit of the basis index.
namespace advshare::dense {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

// tau^e with tau = exp(i pi / p), so tau^2 = omega.
Complex tau_power(int p, long long e);

std::uint64_t stride(int p, std::size_t qudits, std::size_t wire);

// Applies a p x p matrix to one wire.
void apply_single(Amplitudes& amps, int p, std::size_t qudits, std::size_t wire, const Eigen::MatrixXcd& u);

// |a>_control |b>_target -> |a>|b + power * a>.
void apply_sum(Amplitudes& amps, int p, std::size_t qudits, std::size_t control, std::size_t target, int power = 1);

// tau^tau_phase X(x) Z(z), where component l of `op` acts on wires[l].
void apply_pauli(Amplitudes& amps, int p, std::size_t qudits, std::span<const std::size_t> wires,
                 const SymplecticVector& op, long long tau_phase = 0);

double norm(const Amplitudes& amps);
Complex inner(const Amplitudes& a, const Amplitudes& b);

}  // namespace advshare::dense
