#include "advshare/dense.hpp"

#include <cmath>
#include <numbers>

#include "advshare/error.hpp"
#include "advshare/gfp.hpp"

namespace advshare::dense {

Complex tau_power(int p, long long e) {
    const long long r = mod_p(e, 2 * p);
    const double angle = std::numbers::pi * static_cast<double>(r) / p;
    return {std::cos(angle), std::sin(angle)};
}

std::uint64_t stride(int p, std::size_t qudits, std::size_t wire) {
    std::uint64_t s = 1;
    for (std::size_t q = wire + 1; q < qudits; ++q) s *= static_cast<std::uint64_t>(p);
    return s;
}

namespace {

void require_wire(std::size_t wire, std::size_t qudits) {
    if (wire >= qudits) throw InvalidArgument("wire " + std::to_string(wire) + " out of range");
}

}  // namespace

void apply_single(Amplitudes& amps, int p, std::size_t qudits, std::size_t wire, const Eigen::MatrixXcd& u) {
    require_wire(wire, qudits);
    const std::uint64_t s = stride(p, qudits, wire);
    const std::uint64_t block = s * static_cast<std::uint64_t>(p);
    std::vector<Complex> in(static_cast<std::size_t>(p));
    for (std::uint64_t hi = 0; hi < amps.size(); hi += block) {
        for (std::uint64_t lo = 0; lo < s; ++lo) {
            const std::uint64_t base = hi + lo;
            for (int a = 0; a < p; ++a) in[static_cast<std::size_t>(a)] = amps[base + static_cast<std::uint64_t>(a) * s];
            for (int r = 0; r < p; ++r) {
                Complex acc = 0;
                for (int a = 0; a < p; ++a) acc += u(r, a) * in[static_cast<std::size_t>(a)];
                amps[base + static_cast<std::uint64_t>(r) * s] = acc;
            }
        }
    }
}

void apply_sum(Amplitudes& amps, int p, std::size_t qudits, std::size_t control, std::size_t target, int power) {
    require_wire(control, qudits);
    require_wire(target, qudits);
    if (control == target) throw InvalidArgument("SUM needs distinct control and target");
    const std::uint64_t sc = stride(p, qudits, control);
    const std::uint64_t st = stride(p, qudits, target);
    Amplitudes out(amps.size());
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        const int a = static_cast<int>((idx / sc) % static_cast<std::uint64_t>(p));
        const int b = static_cast<int>((idx / st) % static_cast<std::uint64_t>(p));
        const int nb = mod_p(b + static_cast<long long>(power) * a, p);
        out[idx - static_cast<std::uint64_t>(b) * st + static_cast<std::uint64_t>(nb) * st] = amps[idx];
    }
    amps.swap(out);
}

void apply_pauli(Amplitudes& amps, int p, std::size_t qudits, std::span<const std::size_t> wires,
                 const SymplecticVector& op, long long tau_phase) {
    if (wires.size() != op.n()) throw InvalidArgument("Pauli width differs from wire count");
    std::vector<std::uint64_t> strides;
    for (auto w : wires) {
        require_wire(w, qudits);
        strides.push_back(stride(p, qudits, w));
    }
    Amplitudes out(amps.size());
    for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        long long phase = tau_phase;
        std::uint64_t target = idx;
        for (std::size_t l = 0; l < wires.size(); ++l) {
            const int d = static_cast<int>((idx / strides[l]) % static_cast<std::uint64_t>(p));
            phase += 2LL * op.z(l) * d;
            const int nd = (d + op.x(l)) % p;
            target = target - static_cast<std::uint64_t>(d) * strides[l] + static_cast<std::uint64_t>(nd) * strides[l];
        }
        out[target] = tau_power(p, phase) * amps[idx];
    }
    amps.swap(out);
}

double norm(const Amplitudes& amps) {
    double acc = 0;
    for (const auto& a : amps) acc += std::norm(a);
    return std::sqrt(acc);
}

Complex inner(const Amplitudes& a, const Amplitudes& b) {
    if (a.size() != b.size()) throw InvalidArgument("inner product of states with different dimension");
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace advshare::dense
