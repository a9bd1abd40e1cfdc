#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "advshare/dense.hpp"
#include "advshare/gfp.hpp"
#include "advshare/limits.hpp"
#include "advshare/pauli.hpp"
#include "advshare/symplectic.hpp"

namespace advshare {

// Elementary qudit Clifford gates.
//
//   Fourier   F|a> = p^{-1/2} sum_b omega^{ab} |b>        X -> Z,  Z -> X^{-1}
//   Phase     diag(omega^{g a^2 / 2}) (p odd), diag(1, i^g) (p = 2)   (x, z) -> (x, z + g x)
//   Multiply  |a> -> |g a>, g invertible                   (x, z) -> (g x, z / g)
//   Sum       |a>|b> -> |a>|a + b>                        X_c -> X_c X_t, Z_t -> Z_c^{-1} Z_t
//   PauliX    X^g,  PauliZ  Z^g
enum class GateKind { Fourier, Phase, Multiply, Sum, PauliX, PauliZ };

struct Gate {
    GateKind kind;
    std::size_t qudit;       // target of single-qudit gates; control of Sum
    std::size_t target = 0;  // Sum only
    int exponent = 0;        // Phase / Multiply / PauliX / PauliZ

    friend bool operator==(const Gate&, const Gate&) = default;
};

class CliffordCircuit {
public:
    CliffordCircuit(int p, std::size_t qudits);

    int modulus() const noexcept { return p_; }
    std::size_t qudits() const noexcept { return qudits_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    bool empty() const noexcept { return gates_.empty(); }

    // Validates indices and invertibility, reduces exponents mod p.
    void add(Gate g);
    void fourier(std::size_t q) { add({GateKind::Fourier, q}); }
    void phase(std::size_t q, int g) { add({GateKind::Phase, q, 0, g}); }
    void multiply(std::size_t q, int g) { add({GateKind::Multiply, q, 0, g}); }
    void sum(std::size_t control, std::size_t target) { add({GateKind::Sum, control, target}); }
    void pauli_x(std::size_t q, int g) { add({GateKind::PauliX, q, 0, g}); }
    void pauli_z(std::size_t q, int g) { add({GateKind::PauliZ, q, 0, g}); }
    void append(const CliffordCircuit& other);

    friend bool operator==(const CliffordCircuit&, const CliffordCircuit&) = default;

private:
    int p_;
    std::size_t qudits_;
    std::vector<Gate> gates_;
};

// Exact operator inverse (not just up to phase).
CliffordCircuit inverse(const CliffordCircuit& c);

// Line format:
//   p=<prime> m=<qudits>
//   F q | PHASE q g | MUL q g | SUM c t | X q g | Z q g
// Blank lines and '#' comments are ignored.
std::string to_text(const CliffordCircuit& c);
CliffordCircuit parse_circuit(std::string_view text);

// tau^phase X(a) Z(b) with tau = exp(i pi / p). Odd p keeps phase even
// (a power of omega); for p = 2 conjugation by Phase can produce i.
struct PhasedPauli {
    SymplecticVector vec;
    int phase = 0;  // in Z_{2p}

    static PhasedPauli from(const PauliOperator& op);
    friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

// Exact U P U^dag for the circuit's unitary U.
PhasedPauli conjugate_pauli(const CliffordCircuit& c, const PauliOperator& op);
PhasedPauli conjugate_pauli(const CliffordCircuit& c, PhasedPauli op);

// 2m x 2m matrix whose column j is the image of the j-th unit vector
// (x-part first) under conjugation.
FpMatrix symplectic_matrix(const CliffordCircuit& c);

Eigen::MatrixXcd gate_matrix(int p, GateKind kind, int exponent);
Eigen::MatrixXcd to_unitary(const CliffordCircuit& c, const Limits& limits = {});
Eigen::MatrixXcd dense_matrix(const PhasedPauli& op, const Limits& limits = {});

// Applies the circuit to a register; circuit qudit l acts on wires[l].
void apply_circuit(dense::Amplitudes& amps, std::size_t register_qudits, std::span<const std::size_t> wires,
                   const CliffordCircuit& c);

struct Synthesis {
    CliffordCircuit circuit;
    // U from_i U^dag = tau^{phases[i]} to_i; each entry is 0 for odd p and
    // 0 or 1 for p = 2.
    std::vector<int> phases;
};

// Builds U mapping each operator in `from` to the matching one in `to` up to
// a root of unity. Both lists need linearly independent f-images and equal
// commutation matrices (GramMismatch otherwise).
Synthesis synthesize(const std::vector<PauliOperator>& from, const std::vector<PauliOperator>& to, std::size_t m,
                     int p);

}  // namespace advshare
