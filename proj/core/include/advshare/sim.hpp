#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "advshare/advance.hpp"
#include "advshare/clifford.hpp"
#include "advshare/dense.hpp"
#include "advshare/limits.hpp"
#include "advshare/pauli.hpp"

namespace advshare {

// Pure state of m qudits; qudit 0 is the most significant digit.
struct QuditState {
    int p = 2;
    std::size_t m = 0;
    dense::Amplitudes amps;

    static QuditState basis(int p, std::size_t m, std::uint64_t index = 0, const Limits& limits = {});
    double norm() const { return dense::norm(amps); }
};

// sum_i |ii> / sqrt(p).
QuditState make_epr(int p);
QuditState tensor(const QuditState& a, const QuditState& b, const Limits& limits = {});
// |<a|b>|^2.
double fidelity(const QuditState& a, const QuditState& b);

struct DensityOperator {
    int p = 2;
    std::vector<std::size_t> labels;  // qudits of the parent state, in order
    Eigen::MatrixXcd rho;
};

// Reduced state on `keep` (any order; the result follows that order).
DensityOperator reduced_state(const QuditState& s, const std::vector<std::size_t>& keep);
// Von Neumann entropy in units of log p.
double entropy(const DensityOperator& d);

// Deterministic source of randomness for measurements and random secrets.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Uniform in [0, 1) from 53 random bits.
    double uniform();
    double normal();

private:
    std::mt19937_64 engine_;
};

// Haar-like random pure state from normalised complex Gaussians.
QuditState random_state(int p, std::size_t m, Rng& rng, const Limits& limits = {});

// Everything needed to run the protocol for one stabilizer and share set.
struct AdvanceScheme {
    StabilizerCode code;
    EaqeccPlan plan;
    // U with U target_i U^dag = tau^{circuit_phases[i]} source_i, acting on plan.kept.
    CliffordCircuit circuit;
    std::vector<int> circuit_phases;
};

AdvanceScheme build_scheme(const StabilizerCode& code, const IndexSet& shares, const Limits& limits = {});

struct EncodedState {
    // n shares followed by any reference qudits carried along with the secret.
    QuditState state;
    // <G_r> = tau^{syndrome[r]} for every check-matrix row r, in Z_{2p}.
    std::vector<int> syndrome;
};

// `secret` holds k secret qudits followed by optional reference qudits; the
// references end up after the n shares, untouched.
EncodedState encode_advance(const AdvanceScheme& scheme, const QuditState& secret, const Limits& limits = {});

// tau^s with s in Z_{2p} such that <G_r> = tau^s. Throws InvariantViolation
// if some generator does not have a definite value.
std::vector<int> measure_expectations(const StabilizerCode& code, const QuditState& state);

struct DecodeResult {
    QuditState state;
    std::vector<int> measured_syndrome;
    // Pauli X(x)Z(z) applied, supported on the erased shares.
    SymplecticVector correction;
};

// Algebraic test: no element of f(S)^perp \ f(S) is supported on `erased`.
bool is_correctable(const StabilizerCode& code, const IndexSet& erased);

// Replaces every erased share with a fresh |0>, measures all generators and
// applies a Pauli correction back to `target_syndrome`.
DecodeResult erase_and_decode(const QuditState& state, const StabilizerCode& code,
                              const std::vector<int>& target_syndrome, const IndexSet& erased, Rng& rng);

enum class AccessClass { Qualified, Forbidden, Intermediate };
std::string to_string(AccessClass c);

AccessClass classify_access(const StabilizerCode& code, const IndexSet& a);

// I(R : A) in units of log p with the secret maximally entangled with a
// k-qudit reference.
double entropic_audit(const AdvanceScheme& scheme, const IndexSet& a, const Limits& limits = {});

struct AccessEntry {
    IndexSet set;
    AccessClass label;
    std::optional<double> mutual_information;
};

// Every subset of shares, ordered by size then lexicographically (the empty
// set first). Mutual information is filled in when `with_audit`.
std::vector<AccessEntry> access_table(const AdvanceScheme& scheme, bool with_audit, const Limits& limits = {});

// Erases A^c, decodes, inverts the encoding and returns the secret qudits
// (followed by any reference qudits).
QuditState reconstruct(const AdvanceScheme& scheme, const EncodedState& encoded, const IndexSet& a, Rng& rng,
                       DecodeResult* decode_out = nullptr);

struct TrialRecord {
    std::size_t trial = 0;
    IndexSet qualified_set;
    IndexSet erased;
    std::vector<int> measured_syndrome;
    SymplecticVector correction;
    double fidelity = 0.0;
};

struct ProtocolTranscript {
    std::uint64_t seed = 0;
    IndexSet shares;
    std::vector<int> syndrome;  // of the last encoding; identical across trials
    std::vector<AccessEntry> access;
    std::vector<TrialRecord> trials;
};

// For each trial: random secret, encode, then reconstruct from every
// qualified set. trials = 0 only builds the (algebraic) access table.
ProtocolTranscript run_protocol(const AdvanceScheme& scheme, std::uint64_t seed, std::size_t trials,
                                const Limits& limits = {});

}  // namespace advshare
