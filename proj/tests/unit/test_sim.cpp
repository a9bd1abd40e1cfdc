#include <cmath>

#include <gtest/gtest.h>

#include "advshare/error.hpp"
#include "advshare/sim.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace advshare;

namespace {

std::vector<IndexSet> all_subsets(std::size_t n) {
    std::vector<IndexSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        IndexSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

// <psi| P_s |psi> with P_s the projector onto the tau^s eigenspace of G, built
// from the oracle's dense matrices.
double eigenspace_weight(const QuditState& st, const PauliOperator& g, int s) {
    const int p = st.p;
    oracle::Vec x(st.m, 0), z(st.m, 0);
    for (std::size_t i = 0; i < g.n(); ++i) x[i] = g.x(i), z[i] = g.z(i);
    const Eigen::MatrixXcd gm = oracle::pauli_matrix(p, x, z);
    const double a = std::acos(-1.0) * s / p;
    const Eigen::MatrixXcd scaled = std::complex<double>(std::cos(-a), std::sin(-a)) * gm;
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(gm.rows(), gm.cols());
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(gm.rows(), gm.cols());
    for (int r = 0; r < p; ++r) {
        proj += power;
        power = power * scaled;
    }
    proj /= static_cast<double>(p);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(st.amps.size()));
    for (std::size_t i = 0; i < st.amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = st.amps[i];
    return std::real(v.dot(proj * v));
}

QuditState maximally_entangled_secret(int p, std::size_t k) {
    QuditState s = QuditState::basis(p, 2 * k);
    s.amps[0] = 0.0;
    std::size_t dk = 1;
    for (std::size_t i = 0; i < k; ++i) dk *= static_cast<std::size_t>(p);
    for (std::size_t i = 0; i < dk; ++i) s.amps[i * dk + i] = 1.0 / std::sqrt(static_cast<double>(dk));
    return s;
}

}  // namespace

TEST(States, EprAmplitudes) {
    const auto e2 = make_epr(2);
    EXPECT_NEAR(e2.amps[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(e2.amps[3].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(std::abs(e2.amps[1]), 0.0);
    const auto e3 = make_epr(3);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(e3.amps[static_cast<std::size_t>(4 * i)].real(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(entropy(reduced_state(e3, {0})), 1.0, 1e-12);
    EXPECT_NEAR(entropy(reduced_state(e3, {0, 1})), 0.0, 1e-12);
}

TEST(States, ReducedStateIsADensityOperator) {
    Rng rng(3);
    const auto s = random_state(3, 3, rng);
    EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    const auto d = reduced_state(s, {2, 0});
    EXPECT_NEAR(std::abs(d.rho.trace() - 1.0), 0.0, 1e-12);
    EXPECT_LT((d.rho - d.rho.adjoint()).norm(), 1e-12);
    // Complementary subsystems of a pure state share their spectrum.
    EXPECT_NEAR(entropy(d), entropy(reduced_state(s, {1})), 1e-9);
}

TEST(States, TensorAndFidelity) {
    const auto a = QuditState::basis(2, 1, 1);
    const auto b = QuditState::basis(2, 1, 0);
    const auto ab = tensor(a, b);
    EXPECT_EQ(ab.amps[2], dense::Complex(1.0));
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(a, b), 0.0, 1e-15);
}

TEST(States, RngIsReproducible) {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(), b.uniform());
}

class SchemeTest : public ::testing::TestWithParam<std::pair<int, IndexSet>> {
protected:
    StabilizerCode code() const {
        switch (GetParam().first) {
            case 0: return fixtures::qubit422();
            case 1: return fixtures::five_qubit();
            default: return fixtures::qutrit422();
        }
    }
};

TEST_P(SchemeTest, EncodingHasDefiniteSyndrome) {
    const auto c = code();
    const auto scheme = build_scheme(c, GetParam().second);
    Rng rng(5);
    const auto secret = random_state(c.modulus(), c.k(), rng);
    const auto enc = encode_advance(scheme, secret);
    EXPECT_NEAR(enc.state.norm(), 1.0, 1e-10);
    for (std::size_t r = 0; r < c.num_generators(); ++r) {
        EXPECT_NEAR(eigenspace_weight(enc.state, c.generator(r), enc.syndrome[r]), 1.0, 1e-9);
    }
}

TEST_P(SchemeTest, AdvanceSharesAreMaximallyMixed) {
    const auto c = code();
    const auto& j = GetParam().second;
    const auto scheme = build_scheme(c, j);
    Rng rng(6);
    const auto enc = encode_advance(scheme, random_state(c.modulus(), c.k(), rng));
    EXPECT_NEAR(entropy(reduced_state(enc.state, j)), static_cast<double>(j.size()), 1e-9);
}

TEST_P(SchemeTest, SingleErasuresAreCorrected) {
    const auto c = code();
    const auto scheme = build_scheme(c, GetParam().second);
    Rng rng(7);
    const auto enc = encode_advance(scheme, random_state(c.modulus(), c.k(), rng));
    for (std::size_t q = 0; q < c.n(); ++q) {
        const auto out = erase_and_decode(enc.state, c, enc.syndrome, {q}, rng);
        EXPECT_NEAR(fidelity(out.state, enc.state), 1.0, 1e-9);
        for (std::size_t o = 0; o < c.n(); ++o) {
            if (o != q) EXPECT_EQ(out.correction.x(o) + out.correction.z(o), 0);
        }
    }
    const auto none = erase_and_decode(enc.state, c, enc.syndrome, {}, rng);
    EXPECT_NEAR(fidelity(none.state, enc.state), 1.0, 1e-12);
}

TEST_P(SchemeTest, QualifiedSetsReconstruct) {
    const auto c = code();
    const auto scheme = build_scheme(c, GetParam().second);
    Rng rng(8);
    const auto secret = random_state(c.modulus(), c.k(), rng);
    const auto enc = encode_advance(scheme, secret);
    for (const auto& a : all_subsets(c.n())) {
        if (classify_access(c, a) != AccessClass::Qualified) continue;
        EXPECT_NEAR(fidelity(reconstruct(scheme, enc, a, rng), secret), 1.0, 1e-9);
    }
}

TEST_P(SchemeTest, LabelsAgreeWithEntropy) {
    const auto c = code();
    const auto scheme = build_scheme(c, GetParam().second);
    const double full = 2.0 * static_cast<double>(c.k());
    for (const auto& a : all_subsets(c.n())) {
        const double mi = entropic_audit(scheme, a);
        switch (classify_access(c, a)) {
            case AccessClass::Qualified: EXPECT_NEAR(mi, full, 1e-6); break;
            case AccessClass::Forbidden: EXPECT_NEAR(mi, 0.0, 1e-6); break;
            case AccessClass::Intermediate:
                EXPECT_GT(mi, 1e-6);
                EXPECT_LT(mi, full - 1e-6);
                break;
        }
    }
}

TEST_P(SchemeTest, ComplementarityOfLabels) {
    const auto c = code();
    for (const auto& a : all_subsets(c.n())) {
        const bool q = classify_access(c, a) == AccessClass::Qualified;
        const bool f = classify_access(c, complement(a, c.n())) == AccessClass::Forbidden;
        EXPECT_EQ(q, f);
    }
}

TEST_P(SchemeTest, BaselineHasTheSameAudit) {
    const auto c = code();
    const auto with_j = build_scheme(c, GetParam().second);
    const auto baseline = build_scheme(c, {});
    for (const auto& a : all_subsets(c.n())) {
        EXPECT_NEAR(entropic_audit(with_j, a), entropic_audit(baseline, a), 1e-9);
    }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, SchemeTest,
                         ::testing::Values(std::make_pair(0, IndexSet{3}), std::make_pair(0, IndexSet{0}),
                                           std::make_pair(0, IndexSet{}), std::make_pair(1, IndexSet{4}),
                                           std::make_pair(1, IndexSet{1, 3}), std::make_pair(2, IndexSet{1})));

TEST(Access, Qubit422Labels) {
    const auto c = fixtures::qubit422();
    for (const auto& a : all_subsets(4)) {
        const auto label = classify_access(c, a);
        if (a.size() >= 3) EXPECT_EQ(label, AccessClass::Qualified);
        if (a.size() <= 1) EXPECT_EQ(label, AccessClass::Forbidden);
        if (a.size() == 2) EXPECT_EQ(label, AccessClass::Intermediate);
    }
}

TEST(Access, RespectsDistanceBounds) {
    for (const auto& c : {fixtures::qubit422(), fixtures::five_qubit(), fixtures::qutrit422()}) {
        const std::size_t d = code_distance(c);
        for (const auto& a : all_subsets(c.n())) {
            const auto label = classify_access(c, a);
            if (a.size() >= c.n() + 1 - d) EXPECT_EQ(label, AccessClass::Qualified);
            if (a.size() < d) EXPECT_EQ(label, AccessClass::Forbidden);
        }
    }
}

TEST(Access, CorrectabilityMatchesBruteForce) {
    // Erasure of E is correctable iff no element of f(S)^perp \ f(S) is supported on E.
    for (const auto& c : {fixtures::qubit422(), fixtures::five_qubit(), fixtures::qutrit422()}) {
        const auto rows = oracle::rows_of(c.check_matrix());
        const auto dual = oracle::dual(c.modulus(), rows, c.n());
        for (const auto& e : all_subsets(c.n())) {
            bool expected = true;
            for (const auto& v : dual) {
                bool inside = true;
                for (std::size_t q = 0; q < c.n(); ++q) {
                    const bool erased = std::find(e.begin(), e.end(), q) != e.end();
                    if (!erased && (v[q] != 0 || v[c.n() + q] != 0)) inside = false;
                }
                if (inside && !oracle::in_span(c.modulus(), rows, v)) expected = false;
            }
            EXPECT_EQ(is_correctable(c, e), expected);
        }
    }
}

TEST(Access, Qubit422PairErasureIsUncorrectable) {
    const auto scheme = build_scheme(fixtures::qubit422(), {3});
    Rng rng(9);
    const auto enc = encode_advance(scheme, random_state(2, 2, rng));
    EXPECT_THROW(erase_and_decode(enc.state, scheme.code, enc.syndrome, {0, 1}, rng), UncorrectableErasure);
}

TEST(Access, Qubit422RegressionValues) {
    // Frozen from the dense computation: every pair leaks exactly one of the
    // two secret qubits' worth of correlation.
    const auto scheme = build_scheme(fixtures::qubit422(), {3});
    EXPECT_NEAR(entropic_audit(scheme, {0, 1, 2, 3}), 4.0, 1e-9);
    for (const auto& a : all_subsets(4)) {
        if (a.size() == 2) EXPECT_NEAR(entropic_audit(scheme, a), 2.0, 1e-9);
    }
}

TEST(Access, ReferenceSurvivesReconstruction) {
    const auto scheme = build_scheme(fixtures::qubit422(), {3});
    const auto secret = maximally_entangled_secret(2, 2);
    const auto enc = encode_advance(scheme, secret);
    Rng rng(10);
    EXPECT_NEAR(fidelity(reconstruct(scheme, enc, {0, 2, 3}, rng), secret), 1.0, 1e-9);
    // Single shares are maximally mixed.
    for (std::size_t q = 0; q < 4; ++q) EXPECT_NEAR(entropy(reduced_state(enc.state, {q})), 1.0, 1e-9);
}

TEST(Protocol, SameSeedSameTranscript) {
    const auto scheme = build_scheme(fixtures::five_qubit(), {4});
    const auto a = run_protocol(scheme, 123, 2);
    const auto b = run_protocol(scheme, 123, 2);
    ASSERT_EQ(a.trials.size(), b.trials.size());
    for (std::size_t i = 0; i < a.trials.size(); ++i) {
        EXPECT_EQ(a.trials[i].measured_syndrome, b.trials[i].measured_syndrome);
        EXPECT_EQ(a.trials[i].correction, b.trials[i].correction);
        EXPECT_EQ(a.trials[i].fidelity, b.trials[i].fidelity);
        EXPECT_NEAR(a.trials[i].fidelity, 1.0, 1e-9);
        for (std::size_t q = 0; q < 5; ++q) {
            const bool erased =
                std::find(a.trials[i].erased.begin(), a.trials[i].erased.end(), q) != a.trials[i].erased.end();
            if (!erased) EXPECT_EQ(a.trials[i].correction.x(q) + a.trials[i].correction.z(q), 0);
        }
    }
}

TEST(Protocol, ZeroTrialsOnlyBuildsTable) {
    const auto scheme = build_scheme(fixtures::qubit422(), {3});
    const auto t = run_protocol(scheme, 1, 0);
    EXPECT_TRUE(t.trials.empty());
    EXPECT_EQ(t.access.size(), 16u);
    for (const auto& e : t.access) EXPECT_FALSE(e.mutual_information.has_value());
}

TEST(Protocol, DenseBudgetIsEnforced) {
    Limits tiny;
    tiny.max_dense_dimension = 8;
    const auto scheme = build_scheme(fixtures::qubit422(), {3});
    Rng rng(1);
    EXPECT_THROW(encode_advance(scheme, random_state(2, 2, rng), tiny), BudgetExceeded);
}
