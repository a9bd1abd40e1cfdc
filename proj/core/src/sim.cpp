#include "advshare/sim.hpp"

#include <cmath>
#include <numbers>

#include "advshare/error.hpp"

namespace advshare {

namespace {

std::uint64_t dense_dimension(int p, std::size_t m, const Limits& limits) {
    const std::uint64_t dim = checked_power(static_cast<std::uint64_t>(p), m);
    if (dim > limits.max_dense_dimension) {
        throw BudgetExceeded("dense state of " + std::to_string(m) + " qudits (dimension " + std::to_string(dim) +
                             ") exceeds budget " + std::to_string(limits.max_dense_dimension));
    }
    return dim;
}

int digit(std::uint64_t index, int p, std::size_t qudits, std::size_t wire) {
    return static_cast<int>((index / dense::stride(p, qudits, wire)) % static_cast<std::uint64_t>(p));
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i < to; ++i) out.push_back(i);
    return out;
}

void normalize(dense::Amplitudes& amps, const char* what) {
    const double nrm = dense::norm(amps);
    if (nrm < 1e-12) throw NumericalFailure(std::string(what) + ": projection norm below 1e-12");
    for (auto& a : amps) a /= nrm;
}

std::string join(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// States

QuditState QuditState::basis(int p, std::size_t m, std::uint64_t index, const Limits& limits) {
    require_supported_prime(p);
    const std::uint64_t dim = dense_dimension(p, m, limits);
    if (index >= dim) throw InvalidArgument("basis index out of range");
    QuditState s{p, m, dense::Amplitudes(dim, 0.0)};
    s.amps[index] = 1.0;
    return s;
}

QuditState make_epr(int p) {
    require_supported_prime(p);
    QuditState s{p, 2, dense::Amplitudes(static_cast<std::size_t>(p * p), 0.0)};
    const double a = 1.0 / std::sqrt(static_cast<double>(p));
    for (int i = 0; i < p; ++i) s.amps[static_cast<std::size_t>(i * p + i)] = a;
    return s;
}

QuditState tensor(const QuditState& a, const QuditState& b, const Limits& limits) {
    if (a.p != b.p) throw InvalidArgument("tensor of states over different primes");
    dense_dimension(a.p, a.m + b.m, limits);
    QuditState out{a.p, a.m + b.m, {}};
    out.amps.reserve(a.amps.size() * b.amps.size());
    for (const auto& x : a.amps)
        for (const auto& y : b.amps) out.amps.push_back(x * y);
    return out;
}

double fidelity(const QuditState& a, const QuditState& b) {
    if (a.p != b.p || a.m != b.m) throw InvalidArgument("fidelity of states with different shapes");
    return std::norm(dense::inner(a.amps, b.amps));
}

DensityOperator reduced_state(const QuditState& s, const std::vector<std::size_t>& keep) {
    std::vector<bool> kept(s.m, false);
    for (auto q : keep) {
        if (q >= s.m || kept[q]) throw InvalidArgument("invalid subsystem list for partial trace");
        kept[q] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < s.m; ++q)
        if (!kept[q]) rest.push_back(q);

    const auto dk = static_cast<Eigen::Index>(checked_power(static_cast<std::uint64_t>(s.p), keep.size()));
    const auto dr = static_cast<Eigen::Index>(checked_power(static_cast<std::uint64_t>(s.p), rest.size()));
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(dk, dr);
    for (std::uint64_t idx = 0; idx < s.amps.size(); ++idx) {
        Eigen::Index row = 0;
        Eigen::Index col = 0;
        for (auto q : keep) row = row * s.p + digit(idx, s.p, s.m, q);
        for (auto q : rest) col = col * s.p + digit(idx, s.p, s.m, q);
        psi(row, col) = s.amps[idx];
    }
    return {s.p, keep, psi * psi.adjoint()};
}

double entropy(const DensityOperator& d) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d.rho, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalFailure("eigenvalue solver failed");
    double h = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double l = solver.eigenvalues()(i);
        if (l > 1e-14) h -= l * std::log(l);
    }
    return h / std::log(static_cast<double>(d.p));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

QuditState random_state(int p, std::size_t m, Rng& rng, const Limits& limits) {
    QuditState s = QuditState::basis(p, m, 0, limits);
    for (auto& a : s.amps) {
        const double re = rng.normal();
        const double im = rng.normal();
        a = {re, im};
    }
    normalize(s.amps, "random state");
    return s;
}

// ---------------------------------------------------------------------------
// Encoding

AdvanceScheme build_scheme(const StabilizerCode& code, const IndexSet& shares, const Limits& limits) {
    EaqeccPlan plan = construct_eaqecc(code, shares, limits);
    Synthesis synth = synthesize(plan.target_generators, plan.source_generators, plan.length(), plan.p);
    return {code, std::move(plan), std::move(synth.circuit), std::move(synth.phases)};
}

std::vector<int> measure_expectations(const StabilizerCode& code, const QuditState& state) {
    const std::size_t n = code.n();
    if (state.p != code.modulus() || state.m < n) throw InvalidArgument("state does not carry the code's shares");
    const auto wires = iota(0, n);
    const int p = state.p;
    std::vector<int> out;
    for (std::size_t r = 0; r < code.num_generators(); ++r) {
        dense::Amplitudes g = state.amps;
        dense::apply_pauli(g, p, state.m, wires, code.generator(r).vector());
        const dense::Complex value = dense::inner(state.amps, g);
        int best = 0;
        double best_err = 1e300;
        for (int s = 0; s < 2 * p; ++s) {
            const double err = std::abs(value - dense::tau_power(p, s));
            if (err < best_err) best_err = err, best = s;
        }
        if (best_err > 1e-8) {
            throw InvariantViolation("generator " + std::to_string(r + 1) + " has no definite eigenvalue (|<G>| = " +
                                     std::to_string(std::abs(value)) + ")");
        }
        out.push_back(best);
    }
    return out;
}

EncodedState encode_advance(const AdvanceScheme& scheme, const QuditState& secret, const Limits& limits) {
    const EaqeccPlan& plan = scheme.plan;
    const int p = plan.p;
    const std::size_t n = plan.n;
    if (secret.p != p || secret.m < plan.k) throw InvalidArgument("secret must hold k qudits over F_p");
    if (scheme.circuit.qudits() != plan.length() || scheme.code.n() != n) {
        throw InvalidArgument("plan and circuit do not match the code");
    }
    const std::size_t refs = secret.m - plan.k;
    const std::size_t total = n + refs;
    const std::uint64_t dim = dense_dimension(p, total, limits);

    std::vector<std::size_t> placement = plan.secret_positions;
    for (std::size_t r = 0; r < refs; ++r) placement.push_back(n + r);
    QuditState state{p, total, dense::Amplitudes(dim, 0.0)};
    for (std::uint64_t idx = 0; idx < secret.amps.size(); ++idx) {
        std::uint64_t target = 0;
        for (std::size_t l = 0; l < secret.m; ++l) {
            target += static_cast<std::uint64_t>(digit(idx, p, secret.m, l)) * dense::stride(p, total, placement[l]);
        }
        state.amps[target] = secret.amps[idx];
    }

    const Eigen::MatrixXcd f = gate_matrix(p, GateKind::Fourier, 0);
    for (std::size_t i = 0; i < plan.c; ++i) {
        dense::apply_single(state.amps, p, total, plan.x_positions[i], f);
        dense::apply_sum(state.amps, p, total, plan.x_positions[i], plan.shares[i]);
    }
    apply_circuit(state.amps, total, plan.kept, scheme.circuit);
    std::vector<int> syndrome = measure_expectations(scheme.code, state);
    return {std::move(state), std::move(syndrome)};
}

// ---------------------------------------------------------------------------
// Erasure decoding

namespace {

// Does every element of f(S)^perp supported inside `set` lie in f(S)?
bool dual_inside_is_stabilizer(const StabilizerCode& code, const IndexSet& set) {
    const std::size_t n = code.n();
    const FpMatrix dual = symplectic_dual(code.image()).basis();
    const auto outside = owned_columns(complement(set, n), n);
    FpMatrix coeffs = FpMatrix::identity(code.modulus(), dual.rows());
    if (!outside.empty()) coeffs = kernel(dual.select_columns(outside).transpose());
    if (coeffs.rows() == 0) return true;
    const FpMatrix words = coeffs * dual;
    const FpMatrix& h = code.check_matrix();
    return rank(h.vstack(words)) == rank(h);
}

}  // namespace

bool is_correctable(const StabilizerCode& code, const IndexSet& erased) {
    return dual_inside_is_stabilizer(code, make_index_set(erased, code.n()));
}

DecodeResult erase_and_decode(const QuditState& input, const StabilizerCode& code,
                              const std::vector<int>& target_syndrome, const IndexSet& erased_in, Rng& rng) {
    const std::size_t n = code.n();
    const int p = code.modulus();
    const IndexSet erased = make_index_set(erased_in, n);
    if (input.p != p || input.m < n) throw InvalidArgument("state does not carry the code's shares");
    if (target_syndrome.size() != code.num_generators()) throw InvalidArgument("syndrome length mismatch");
    if (!is_correctable(code, erased)) {
        throw UncorrectableErasure("uncorrectable erasure: shares " + join(erased) +
                                   " support a logical operator");
    }

    QuditState state = input;
    const std::size_t m = state.m;

    // Lose each erased share: measure it and reset to |0>.
    for (auto q : erased) {
        std::vector<double> prob(static_cast<std::size_t>(p), 0.0);
        for (std::uint64_t idx = 0; idx < state.amps.size(); ++idx) {
            prob[static_cast<std::size_t>(digit(idx, p, m, q))] += std::norm(state.amps[idx]);
        }
        double u = rng.uniform();
        int outcome = p - 1;
        for (int a = 0; a < p; ++a) {
            if (u < prob[static_cast<std::size_t>(a)]) {
                outcome = a;
                break;
            }
            u -= prob[static_cast<std::size_t>(a)];
        }
        while (prob[static_cast<std::size_t>(outcome)] < 1e-12 && outcome > 0) --outcome;
        for (std::uint64_t idx = 0; idx < state.amps.size(); ++idx) {
            if (digit(idx, p, m, q) != outcome) state.amps[idx] = 0.0;
        }
        normalize(state.amps, "erasure");
        dense::apply_single(state.amps, p, m, q, gate_matrix(p, GateKind::PauliX, -outcome));
    }

    // Projective measurement of every generator.
    const auto wires = iota(0, n);
    std::vector<int> measured;
    for (std::size_t r = 0; r < code.num_generators(); ++r) {
        const SymplecticVector g = code.generator(r).vector();
        const int parity = (p - 1) * dot(g.x_part(), g.z_part()).value() % 2;
        std::vector<dense::Amplitudes> powers{state.amps};
        for (int j = 1; j < p; ++j) {
            powers.push_back(powers.back());
            dense::apply_pauli(powers.back(), p, m, wires, g);
        }
        std::vector<int> candidates;
        std::vector<dense::Amplitudes> projected;
        std::vector<double> prob;
        for (int s = parity; s < 2 * p; s += 2) {
            dense::Amplitudes v(state.amps.size(), 0.0);
            for (int j = 0; j < p; ++j) {
                const dense::Complex c = dense::tau_power(p, -static_cast<long long>(s) * j) / static_cast<double>(p);
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * powers[static_cast<std::size_t>(j)][i];
            }
            candidates.push_back(s);
            prob.push_back(dense::norm(v) * dense::norm(v));
            projected.push_back(std::move(v));
        }
        double u = rng.uniform();
        std::size_t pick = candidates.size() - 1;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (u < prob[c]) {
                pick = c;
                break;
            }
            u -= prob[c];
        }
        while (prob[pick] < 1e-12 && pick > 0) --pick;
        state.amps = std::move(projected[pick]);
        normalize(state.amps, "syndrome measurement");
        measured.push_back(candidates[pick]);
    }

    // Correction E on the erased shares: omega^{e(G_r, E)} moves tau^{measured} to tau^{target}.
    const std::size_t w = erased.size();
    FpMatrix rows(p, 0, 2 * w);
    std::vector<int> rhs;
    for (std::size_t r = 0; r < code.num_generators(); ++r) {
        const SymplecticVector g = code.generator(r).vector();
        FpVector row(p, 2 * w);
        for (std::size_t t = 0; t < w; ++t) {
            row.set(t, g.z(erased[t]));
            row.set(w + t, -g.x(erased[t]));
        }
        rows.append_row(row);
        const int diff = mod_p(target_syndrome[r] - measured[r], 2 * p);
        if (diff % 2 != 0) throw InvariantViolation("measured syndrome has the wrong parity");
        rhs.push_back(diff / 2);
    }
    SymplecticVector correction(p, n);
    if (w > 0) {
        const auto sol = solve(rows, FpVector(p, rhs));
        if (!sol) throw UncorrectableErasure("uncorrectable erasure: no correction supported on " + join(erased));
        for (std::size_t t = 0; t < w; ++t) {
            correction.set_x(erased[t], (*sol)[t]);
            correction.set_z(erased[t], (*sol)[w + t]);
        }
    } else if (measured != target_syndrome) {
        throw InvariantViolation("syndrome changed without any erasure");
    }
    dense::apply_pauli(state.amps, p, m, wires, correction);
    return {std::move(state), std::move(measured), std::move(correction)};
}

// ---------------------------------------------------------------------------
// Access structure

std::string to_string(AccessClass c) {
    switch (c) {
        case AccessClass::Qualified: return "qualified";
        case AccessClass::Forbidden: return "forbidden";
        case AccessClass::Intermediate: return "intermediate";
    }
    return "unknown";
}

AccessClass classify_access(const StabilizerCode& code, const IndexSet& a_in) {
    const IndexSet a = make_index_set(a_in, code.n());
    if (dual_inside_is_stabilizer(code, complement(a, code.n()))) return AccessClass::Qualified;
    if (dual_inside_is_stabilizer(code, a)) return AccessClass::Forbidden;
    return AccessClass::Intermediate;
}

double entropic_audit(const AdvanceScheme& scheme, const IndexSet& a_in, const Limits& limits) {
    const EaqeccPlan& plan = scheme.plan;
    const IndexSet a = make_index_set(a_in, plan.n);
    const int p = plan.p;
    const std::size_t k = plan.k;
    if (k == 0) return 0.0;

    QuditState secret = QuditState::basis(p, 2 * k, 0, limits);
    secret.amps[0] = 0.0;
    const std::uint64_t dk = checked_power(static_cast<std::uint64_t>(p), k);
    const double amp = 1.0 / std::sqrt(static_cast<double>(dk));
    for (std::uint64_t s = 0; s < dk; ++s) secret.amps[s * dk + s] = amp;

    const EncodedState enc = encode_advance(scheme, secret, limits);
    const auto ref = iota(plan.n, plan.n + k);
    std::vector<std::size_t> joint = a;
    joint.insert(joint.end(), ref.begin(), ref.end());
    const double s_r = entropy(reduced_state(enc.state, ref));
    const double s_a = entropy(reduced_state(enc.state, a));
    const double s_ra = entropy(reduced_state(enc.state, joint));
    return s_r + s_a - s_ra;
}

std::vector<AccessEntry> access_table(const AdvanceScheme& scheme, bool with_audit, const Limits& limits) {
    const std::size_t n = scheme.plan.n;
    if (checked_power(2, n) > limits.max_codewords) throw BudgetExceeded("access table over 2^n subsets exceeds budget");
    std::vector<AccessEntry> out;
    IndexSet current;
    for (std::size_t size = 0; size <= n; ++size) {
        // Lexicographic walk over size-subsets.
        auto walk = [&](auto&& self, std::size_t start) -> void {
            if (current.size() == size) {
                AccessEntry e{current, classify_access(scheme.code, current), std::nullopt};
                if (with_audit) e.mutual_information = entropic_audit(scheme, current, limits);
                out.push_back(std::move(e));
                return;
            }
            for (std::size_t i = start; i + (size - current.size()) <= n; ++i) {
                current.push_back(i);
                self(self, i + 1);
                current.pop_back();
            }
        };
        walk(walk, 0);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reconstruction

QuditState reconstruct(const AdvanceScheme& scheme, const EncodedState& encoded, const IndexSet& a_in, Rng& rng,
                       DecodeResult* decode_out) {
    const EaqeccPlan& plan = scheme.plan;
    const int p = plan.p;
    const std::size_t n = plan.n;
    const IndexSet a = make_index_set(a_in, n);
    DecodeResult decoded = erase_and_decode(encoded.state, scheme.code, encoded.syndrome, complement(a, n), rng);

    dense::Amplitudes amps = decoded.state.amps;
    const std::size_t total = decoded.state.m;
    apply_circuit(amps, total, plan.kept, inverse(scheme.circuit));
    const Eigen::MatrixXcd f_inv = gate_matrix(p, GateKind::Fourier, 0).adjoint();
    for (std::size_t i = 0; i < plan.c; ++i) {
        dense::apply_sum(amps, p, total, plan.x_positions[i], plan.shares[i], p - 1);
        dense::apply_single(amps, p, total, plan.x_positions[i], f_inv);
    }

    std::vector<std::size_t> placement = plan.secret_positions;
    for (std::size_t r = n; r < total; ++r) placement.push_back(r);
    const std::size_t out_m = placement.size();
    QuditState out{p, out_m, dense::Amplitudes(checked_power(static_cast<std::uint64_t>(p), out_m), 0.0)};
    double weight = 0.0;
    for (std::uint64_t idx = 0; idx < out.amps.size(); ++idx) {
        std::uint64_t src = 0;
        for (std::size_t l = 0; l < out_m; ++l) {
            src += static_cast<std::uint64_t>(digit(idx, p, out_m, l)) * dense::stride(p, total, placement[l]);
        }
        out.amps[idx] = amps[src];
        weight += std::norm(amps[src]);
    }
    if (std::abs(weight - 1.0) > 1e-6) {
        throw InvariantViolation("decoded register is not back in the encoding frame (weight " +
                                 std::to_string(weight) + ")");
    }
    normalize(out.amps, "reconstruction");
    if (decode_out) *decode_out = std::move(decoded);
    return out;
}

ProtocolTranscript run_protocol(const AdvanceScheme& scheme, std::uint64_t seed, std::size_t trials,
                                const Limits& limits) {
    ProtocolTranscript t;
    t.seed = seed;
    t.shares = scheme.plan.shares;
    t.access = access_table(scheme, trials > 0, limits);
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const QuditState secret = random_state(scheme.plan.p, scheme.plan.k, rng, limits);
        const EncodedState enc = encode_advance(scheme, secret, limits);
        t.syndrome = enc.syndrome;
        for (const auto& entry : t.access) {
            if (entry.label != AccessClass::Qualified) continue;
            DecodeResult decoded{secret, {}, SymplecticVector(scheme.plan.p, scheme.plan.n)};
            const QuditState out = reconstruct(scheme, enc, entry.set, rng, &decoded);
            t.trials.push_back({trial, entry.set, complement(entry.set, scheme.plan.n), decoded.measured_syndrome,
                                decoded.correction, fidelity(out, secret)});
        }
    }
    return t;
}

}  // namespace advshare
