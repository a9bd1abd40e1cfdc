#include "advshare/clifford.hpp"

#include <cmath>
#include <sstream>

#include "advshare/error.hpp"

namespace advshare {

CliffordCircuit::CliffordCircuit(int p, std::size_t qudits) : p_(p), qudits_(qudits) { require_supported_prime(p); }

void CliffordCircuit::add(Gate g) {
    if (g.qudit >= qudits_) throw InvalidArgument("gate qudit " + std::to_string(g.qudit) + " out of range");
    if (g.kind == GateKind::Sum) {
        if (g.target >= qudits_) throw InvalidArgument("gate target " + std::to_string(g.target) + " out of range");
        if (g.target == g.qudit) throw InvalidArgument("SUM control equals target");
    } else {
        g.target = 0;
    }
    g.exponent = (g.kind == GateKind::Fourier || g.kind == GateKind::Sum) ? 0 : mod_p(g.exponent, p_);
    if (g.kind == GateKind::Multiply && g.exponent == 0) throw InvalidArgument("MUL factor must be invertible");
    gates_.push_back(g);
}

void CliffordCircuit::append(const CliffordCircuit& other) {
    if (other.p_ != p_ || other.qudits_ != qudits_) throw InvalidArgument("appending incompatible circuit");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

CliffordCircuit inverse(const CliffordCircuit& c) {
    const int p = c.modulus();
    CliffordCircuit out(p, c.qudits());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        const Gate& g = *it;
        switch (g.kind) {
            case GateKind::Fourier:
                // F^4 = I.
                for (int i = 0; i < 3; ++i) out.fourier(g.qudit);
                break;
            case GateKind::Phase:
                if (p == 2) {
                    // diag(1, i)^{-1} = diag(1, i) Z.
                    if (g.exponent != 0) {
                        out.phase(g.qudit, 1);
                        out.pauli_z(g.qudit, 1);
                    }
                } else {
                    out.phase(g.qudit, -g.exponent);
                }
                break;
            case GateKind::Multiply: out.multiply(g.qudit, inverse_mod(g.exponent, p)); break;
            case GateKind::Sum:
                for (int i = 0; i < p - 1; ++i) out.sum(g.qudit, g.target);
                break;
            case GateKind::PauliX: out.pauli_x(g.qudit, -g.exponent); break;
            case GateKind::PauliZ: out.pauli_z(g.qudit, -g.exponent); break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string to_text(const CliffordCircuit& c) {
    std::ostringstream out;
    out << "p=" << c.modulus() << " m=" << c.qudits() << '\n';
    for (const auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Fourier: out << "F " << g.qudit; break;
            case GateKind::Phase: out << "PHASE " << g.qudit << ' ' << g.exponent; break;
            case GateKind::Multiply: out << "MUL " << g.qudit << ' ' << g.exponent; break;
            case GateKind::Sum: out << "SUM " << g.qudit << ' ' << g.target; break;
            case GateKind::PauliX: out << "X " << g.qudit << ' ' << g.exponent; break;
            case GateKind::PauliZ: out << "Z " << g.qudit << ' ' << g.exponent; break;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::string strip_comment(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line;
}

long long parse_int(const std::string& token, std::size_t line_no) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw ParseError(line_no, "expected an integer, got '" + token + "'");
    return v;
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    const long long v = parse_int(token, line_no);
    if (v < 0) throw ParseError(line_no, "negative qudit index");
    return static_cast<std::size_t>(v);
}

}  // namespace

CliffordCircuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<CliffordCircuit> circuit;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(strip_comment(raw));
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!circuit) {
            if (tok.size() != 2 || tok[0].rfind("p=", 0) != 0 || tok[1].rfind("m=", 0) != 0) {
                throw ParseError(line_no, "expected header 'p=<prime> m=<qudits>'");
            }
            const long long p = parse_int(tok[0].substr(2), line_no);
            const long long m = parse_int(tok[1].substr(2), line_no);
            if (!is_supported_prime(static_cast<int>(p))) throw ParseError(line_no, "unsupported prime");
            if (m < 0) throw ParseError(line_no, "negative qudit count");
            circuit.emplace(static_cast<int>(p), static_cast<std::size_t>(m));
            continue;
        }
        const std::string& op = tok[0];
        try {
            if (op == "F" && tok.size() == 2) {
                circuit->fourier(parse_index(tok[1], line_no));
            } else if (op == "SUM" && tok.size() == 3) {
                circuit->sum(parse_index(tok[1], line_no), parse_index(tok[2], line_no));
            } else if ((op == "PHASE" || op == "MUL" || op == "X" || op == "Z") && tok.size() == 3) {
                const auto q = parse_index(tok[1], line_no);
                const auto g = static_cast<int>(parse_int(tok[2], line_no));
                if (op == "PHASE") circuit->phase(q, g);
                if (op == "MUL") circuit->multiply(q, g);
                if (op == "X") circuit->pauli_x(q, g);
                if (op == "Z") circuit->pauli_z(q, g);
            } else {
                throw ParseError(line_no, "unrecognised gate line '" + raw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InvalidArgument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!circuit) throw ParseError(line_no, "missing header");
    return *circuit;
}

// ---------------------------------------------------------------------------
// Symbolic conjugation

PhasedPauli PhasedPauli::from(const PauliOperator& op) { return {op.vector(), 2 * op.phase_exponent()}; }

namespace {

// Phase (in tau units) picked up by Phase(g) X Phase(g)^dag.
int phase_gate_offset(int p, int g) {
    if (p == 2) return g;
    return 2 * mod_p(static_cast<long long>(g) * inverse_mod(2, p), p);
}

void conjugate_gate(const Gate& g, int p, SymplecticVector& v, long long& phase) {
    const std::size_t q = g.qudit;
    const long long x = v.x(q);
    const long long z = v.z(q);
    switch (g.kind) {
        case GateKind::Fourier:
            // Z^x X^{-z} = omega^{-xz} X^{-z} Z^x
            v.set_x(q, -z);
            v.set_z(q, x);
            phase += 2 * (-x * z);
            break;
        case GateKind::Phase:
            v.set_z(q, z + g.exponent * x);
            phase += x * phase_gate_offset(p, g.exponent) + static_cast<long long>(g.exponent) * x * (x - 1);
            break;
        case GateKind::Multiply:
            v.set_x(q, g.exponent * x);
            v.set_z(q, inverse_mod(g.exponent, p) * z);
            break;
        case GateKind::Sum: {
            const std::size_t t = g.target;
            v.set_x(t, v.x(t) + x);
            v.set_z(q, z - v.z(t));
            break;
        }
        case GateKind::PauliX: phase += 2 * (-static_cast<long long>(g.exponent) * z); break;
        case GateKind::PauliZ: phase += 2 * (static_cast<long long>(g.exponent) * x); break;
    }
    phase = mod_p(phase, 2 * p);
}

}  // namespace

PhasedPauli conjugate_pauli(const CliffordCircuit& c, PhasedPauli op) {
    if (op.vec.n() != c.qudits() || op.vec.modulus() != c.modulus()) {
        throw InvalidArgument("Pauli operator does not match circuit");
    }
    long long phase = op.phase;
    for (const auto& g : c.gates()) conjugate_gate(g, c.modulus(), op.vec, phase);
    op.phase = static_cast<int>(mod_p(phase, 2 * c.modulus()));
    return op;
}

PhasedPauli conjugate_pauli(const CliffordCircuit& c, const PauliOperator& op) {
    return conjugate_pauli(c, PhasedPauli::from(op));
}

FpMatrix symplectic_matrix(const CliffordCircuit& c) {
    const std::size_t m = c.qudits();
    const int p = c.modulus();
    FpMatrix out(p, 2 * m, 2 * m);
    for (std::size_t j = 0; j < 2 * m; ++j) {
        SymplecticVector v(p, m);
        if (j < m) {
            v.set_x(j, 1);
        } else {
            v.set_z(j - m, 1);
        }
        long long phase = 0;
        for (const auto& g : c.gates()) conjugate_gate(g, p, v, phase);
        for (std::size_t r = 0; r < 2 * m; ++r) out.set(r, j, v.concatenated()[r]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense realisation

Eigen::MatrixXcd gate_matrix(int p, GateKind kind, int exponent) {
    using dense::tau_power;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(p, p);
    switch (kind) {
        case GateKind::Fourier: {
            const double s = 1.0 / std::sqrt(static_cast<double>(p));
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b) u(b, a) = s * omega_power(p, static_cast<long long>(a) * b);
            break;
        }
        case GateKind::Phase:
            for (int a = 0; a < p; ++a) {
                const long long e = p == 2 ? static_cast<long long>(exponent) * a
                                           : 2LL * mod_p(static_cast<long long>(exponent) * inverse_mod(2, p) * a * a, p);
                u(a, a) = tau_power(p, e);
            }
            break;
        case GateKind::Multiply:
            for (int a = 0; a < p; ++a) u(mod_p(static_cast<long long>(exponent) * a, p), a) = 1;
            break;
        case GateKind::PauliX:
            for (int a = 0; a < p; ++a) u(mod_p(a + exponent, p), a) = 1;
            break;
        case GateKind::PauliZ:
            for (int a = 0; a < p; ++a) u(a, a) = omega_power(p, static_cast<long long>(exponent) * a);
            break;
        case GateKind::Sum: throw InvalidArgument("SUM is a two-qudit gate");
    }
    return u;
}

void apply_circuit(dense::Amplitudes& amps, std::size_t register_qudits, std::span<const std::size_t> wires,
                   const CliffordCircuit& c) {
    if (wires.size() != c.qudits()) throw InvalidArgument("wire map size differs from circuit width");
    const int p = c.modulus();
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Sum) {
            dense::apply_sum(amps, p, register_qudits, wires[g.qudit], wires[g.target]);
        } else {
            dense::apply_single(amps, p, register_qudits, wires[g.qudit], gate_matrix(p, g.kind, g.exponent));
        }
    }
}

Eigen::MatrixXcd to_unitary(const CliffordCircuit& c, const Limits& limits) {
    const int p = c.modulus();
    const std::uint64_t dim = checked_power(static_cast<std::uint64_t>(p), c.qudits());
    if (dim > limits.max_dense_dimension) {
        throw BudgetExceeded("dense unitary of dimension " + std::to_string(dim) + " exceeds budget");
    }
    std::vector<std::size_t> wires(c.qudits());
    for (std::size_t i = 0; i < wires.size(); ++i) wires[i] = i;
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd u(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        dense::Amplitudes amps(dim, 0.0);
        amps[static_cast<std::size_t>(col)] = 1.0;
        apply_circuit(amps, c.qudits(), wires, c);
        for (Eigen::Index r = 0; r < d; ++r) u(r, col) = amps[static_cast<std::size_t>(r)];
    }
    return u;
}

Eigen::MatrixXcd dense_matrix(const PhasedPauli& op, const Limits& limits) {
    Eigen::MatrixXcd m = dense_matrix(PauliOperator(op.vec), limits);
    return dense::tau_power(op.vec.modulus(), op.phase) * m;
}

// ---------------------------------------------------------------------------
// Synthesis

namespace {

int form(const SymplecticVector& a, const SymplecticVector& b) { return symplectic_product(a, b).value(); }

// One row per vector h: coefficients of the functional g -> <h, g>_s.
FpMatrix pairing_rows(const std::vector<SymplecticVector>& vs, int p, std::size_t m) {
    FpMatrix rows(p, 0, 2 * m);
    for (const auto& h : vs) {
        FpVector r(p, 2 * m);
        for (std::size_t i = 0; i < m; ++i) {
            r.set(i, -h.z(i));
            r.set(m + i, h.x(i));
        }
        rows.append_row(r);
    }
    return rows;
}

struct PartialBasis {
    std::vector<SymplecticVector> e;  // first halves of hyperbolic pairs
    std::vector<SymplecticVector> f;
    std::vector<SymplecticVector> isotropic;
};

// Gives every isotropic vector a partner and fills the rest of F_p^{2m} with
// hyperbolic pairs, returning the ordered basis (e..., f...).
std::vector<SymplecticVector> complete_basis(const PartialBasis& part, int p, std::size_t m) {
    std::vector<SymplecticVector> es = part.e;
    std::vector<SymplecticVector> fs = part.f;
    std::vector<SymplecticVector> partners;
    for (std::size_t j = 0; j < part.isotropic.size(); ++j) {
        std::vector<SymplecticVector> cons;
        std::vector<int> rhs_values;
        for (const auto& v : part.e) cons.push_back(v), rhs_values.push_back(0);
        for (const auto& v : part.f) cons.push_back(v), rhs_values.push_back(0);
        for (std::size_t i = 0; i < part.isotropic.size(); ++i) {
            cons.push_back(part.isotropic[i]);
            rhs_values.push_back(i == j ? 1 : 0);
        }
        for (const auto& g : partners) cons.push_back(g), rhs_values.push_back(0);
        auto sol = solve(pairing_rows(cons, p, m), FpVector(p, rhs_values));
        if (!sol) throw InvariantViolation("no symplectic partner for an isotropic generator");
        partners.push_back(SymplecticVector::from_concatenated(*sol));
    }
    for (std::size_t j = 0; j < part.isotropic.size(); ++j) {
        es.push_back(part.isotropic[j]);
        fs.push_back(partners[j]);
    }
    while (es.size() < m) {
        std::vector<SymplecticVector> all = es;
        all.insert(all.end(), fs.begin(), fs.end());
        const FpMatrix comp = kernel(pairing_rows(all, p, m));
        if (comp.rows() == 0) throw InvariantViolation("symplectic complement unexpectedly empty");
        const auto e = SymplecticVector::from_concatenated(comp.row(0));
        bool found = false;
        for (std::size_t r = 1; r < comp.rows() && !found; ++r) {
            auto w = SymplecticVector::from_concatenated(comp.row(r));
            const int s = form(e, w);
            if (s != 0) {
                es.push_back(e);
                fs.push_back(inverse_mod(s, p) * w);
                found = true;
            }
        }
        if (!found) throw InvariantViolation("symplectic complement is degenerate");
    }
    std::vector<SymplecticVector> out = es;
    out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

FpMatrix columns_matrix(const std::vector<SymplecticVector>& cols, int p, std::size_t m) {
    FpMatrix out(p, 2 * m, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < 2 * m; ++r) out.set(r, c, cols[c].concatenated()[r]);
    return out;
}

// Records gates while driving the columns of a symplectic matrix back to the
// identity.
class Reducer {
public:
    Reducer(int p, std::size_t m, const FpMatrix& target) : p_(p), m_(m), reduce_(p, m) {
        for (std::size_t j = 0; j < 2 * m; ++j) {
            FpVector col(p, 2 * m);
            for (std::size_t r = 0; r < 2 * m; ++r) col.set(r, target.at(r, j));
            cols_.push_back(SymplecticVector::from_concatenated(col));
        }
    }

    CliffordCircuit run() {
        for (std::size_t q = 0; q < m_; ++q) {
            clear_x_column(q);
            clear_z_column(q);
        }
        for (std::size_t j = 0; j < 2 * m_; ++j) {
            SymplecticVector unit(p_, m_);
            if (j < m_) {
                unit.set_x(j, 1);
            } else {
                unit.set_z(j - m_, 1);
            }
            if (!(cols_[j] == unit)) throw InvariantViolation("symplectic reduction did not reach the identity");
        }
        return inverse(reduce_);
    }

private:
    void apply(const Gate& g) {
        reduce_.add(g);
        long long ignored = 0;
        for (auto& c : cols_) conjugate_gate(reduce_.gates().back(), p_, c, ignored);
    }
    void fourier(std::size_t q) { apply({GateKind::Fourier, q}); }
    void phase(std::size_t q, int g) { apply({GateKind::Phase, q, 0, g}); }
    void multiply(std::size_t q, int g) { apply({GateKind::Multiply, q, 0, g}); }
    void sum(std::size_t c, std::size_t t, int times) {
        for (int i = 0; i < mod_p(times, p_); ++i) apply({GateKind::Sum, c, t});
    }
    int inv(int a) const { return inverse_mod(a, p_); }

    void clear_x_column(std::size_t q) {
        const auto& v = cols_[q];
        bool has_x = false;
        for (std::size_t j = q; j < m_; ++j) has_x |= v.x(j) != 0;
        if (!has_x) {
            std::size_t j = q;
            while (j < m_ && v.z(j) == 0) ++j;
            if (j == m_) throw InvariantViolation("matrix is not symplectic");
            fourier(j);
        }
        if (v.x(q) == 0) {
            std::size_t j = q + 1;
            while (v.x(j) == 0) ++j;
            sum(j, q, 1);
        }
        for (std::size_t j = q + 1; j < m_; ++j) {
            if (v.x(j) != 0) sum(q, j, -v.x(j) * inv(v.x(q)));
        }
        for (std::size_t j = q + 1; j < m_; ++j) {
            if (v.z(j) != 0) {
                fourier(j);
                sum(q, j, -v.x(j) * inv(v.x(q)));
            }
        }
        if (v.x(q) != 1) multiply(q, inv(v.x(q)));
        if (v.z(q) != 0) phase(q, -v.z(q));
    }

    void clear_z_column(std::size_t q) {
        const auto& w = cols_[m_ + q];
        if (w.z(q) != 1) throw InvariantViolation("matrix is not symplectic");
        for (std::size_t j = q + 1; j < m_; ++j) {
            if (w.x(j) != 0 && w.z(j) != 0) phase(j, -w.z(j) * inv(w.x(j)));
            if (w.x(j) != 0) fourier(j);
            if (w.z(j) != 0) sum(j, q, w.z(j));
        }
        if (w.x(q) != 0) {
            // F^{-1} Phase(a) F : (x, z) -> (x - a z, z)
            const int a = w.x(q);
            fourier(q);
            phase(q, a);
            for (int i = 0; i < 3; ++i) fourier(q);
        }
    }

    int p_;
    std::size_t m_;
    CliffordCircuit reduce_;
    std::vector<SymplecticVector> cols_;
};

}  // namespace

Synthesis synthesize(const std::vector<PauliOperator>& from, const std::vector<PauliOperator>& to, std::size_t m,
                     int p) {
    require_supported_prime(p);
    if (from.size() != to.size()) throw InvalidArgument("generator lists differ in length");
    if (from.size() > 2 * m) throw InvalidArgument("more generators than 2m");
    for (const auto* list : {&from, &to}) {
        for (const auto& g : *list) {
            if (g.n() != m || g.modulus() != p) throw InvalidArgument("generator does not act on m qudits over F_p");
        }
        FpMatrix images(p, 0, 2 * m);
        for (const auto& g : *list) images.append_row(g.vector().concatenated());
        if (rank(images) != list->size()) throw DependentRows("dependent generators");
    }
    if (!(commutation_matrix(p, from) == commutation_matrix(p, to))) {
        throw GramMismatch("gram mismatch: commutation exponents of the two generator lists differ");
    }

    // Symplectic Gram-Schmidt, decided on the `from` side and mirrored on the
    // `to` side. Equal Gram matrices keep both sides in lockstep.
    std::vector<std::pair<SymplecticVector, SymplecticVector>> pending;
    for (std::size_t i = 0; i < from.size(); ++i) pending.emplace_back(from[i].vector(), to[i].vector());
    PartialBasis side_a;
    PartialBasis side_b;
    while (!pending.empty()) {
        auto u = pending.front();
        pending.erase(pending.begin());
        std::size_t partner = pending.size();
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (form(u.first, pending[i].first) != 0) {
                partner = i;
                break;
            }
        }
        if (partner == pending.size()) {
            side_a.isotropic.push_back(u.first);
            side_b.isotropic.push_back(u.second);
            continue;
        }
        auto w = pending[partner];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(partner));
        const int s_inv = inverse_mod(form(u.first, w.first), p);
        auto ea = u.first, eb = u.second;
        auto fa = s_inv * w.first, fb = s_inv * w.second;
        for (auto& x : pending) {
            const int xf = form(x.first, fa);
            const int xe = form(x.first, ea);
            if (xf != form(x.second, fb) || xe != form(x.second, eb)) {
                throw InvariantViolation("Gram-Schmidt sides diverged");
            }
            x.first = x.first - xf * ea + xe * fa;
            x.second = x.second - xf * eb + xe * fb;
        }
        side_a.e.push_back(ea);
        side_a.f.push_back(fa);
        side_b.e.push_back(eb);
        side_b.f.push_back(fb);
    }

    const FpMatrix basis_a = columns_matrix(complete_basis(side_a, p, m), p, m);
    const FpMatrix basis_b = columns_matrix(complete_basis(side_b, p, m), p, m);
    const auto basis_a_inv = inverse(basis_a);
    if (!basis_a_inv) throw InvariantViolation("completed basis is singular");
    const FpMatrix target = basis_b * *basis_a_inv;

    Synthesis out{Reducer(p, m, target).run(), {}};
    if (!(symplectic_matrix(out.circuit) == target)) throw InvariantViolation("synthesised circuit has wrong action");

    // Pauli frame E with <f(E), f(to_i)>_s = floor(d_i / 2) leaves phases in {0, 1}.
    std::vector<SymplecticVector> tos;
    std::vector<int> rhs;
    for (std::size_t i = 0; i < from.size(); ++i) {
        const PhasedPauli img = conjugate_pauli(out.circuit, from[i]);
        if (!(img.vec == to[i].vector())) throw InvariantViolation("conjugated generator has wrong support");
        const int d = mod_p(img.phase - 2LL * to[i].phase_exponent(), 2 * p);
        tos.push_back(to[i].vector());
        rhs.push_back(d / 2);
    }
    if (!tos.empty()) {
        FpMatrix rows(p, 0, 2 * m);
        for (const auto& t : tos) {
            FpVector r(p, 2 * m);
            for (std::size_t i = 0; i < m; ++i) {
                r.set(i, t.z(i));
                r.set(m + i, -t.x(i));
            }
            rows.append_row(r);
        }
        auto e = solve(rows, FpVector(p, rhs));
        if (!e) throw InvariantViolation("no Pauli frame fixes the phases");
        for (std::size_t q = 0; q < m; ++q) {
            if ((*e)[m + q] != 0) out.circuit.pauli_z(q, (*e)[m + q]);
            if ((*e)[q] != 0) out.circuit.pauli_x(q, (*e)[q]);
        }
    }
    for (std::size_t i = 0; i < from.size(); ++i) {
        const PhasedPauli img = conjugate_pauli(out.circuit, from[i]);
        out.phases.push_back(mod_p(img.phase - 2LL * to[i].phase_exponent(), 2 * p));
        if (out.phases.back() > 1) throw InvariantViolation("phase correction failed");
    }
    return out;
}

}  // namespace advshare
