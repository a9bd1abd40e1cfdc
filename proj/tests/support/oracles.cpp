#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

int md(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

int inv(int a, int p) {
    for (int b = 1; b < p; ++b)
        if (md(static_cast<long long>(a) * b, p) == 1) return b;
    throw std::logic_error("no inverse");
}

std::size_t rank(int p, Rows rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const int iv = inv(rows[r][c], p);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) continue;
            const int f = md(static_cast<long long>(rows[o][c]) * iv, p);
            for (std::size_t k = 0; k < cols; ++k) rows[o][k] = md(rows[o][k] - static_cast<long long>(f) * rows[r][k], p);
        }
        ++r;
    }
    return r;
}

std::vector<Vec> all_vectors(int p, std::size_t len) {
    std::vector<Vec> out;
    Vec v(len, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < len && ++v[i] == p) v[i++] = 0;
        if (i == len) break;
    }
    return out;
}

std::vector<Vec> span(int p, const Rows& rows, std::size_t len) {
    std::vector<Vec> out;
    for (const auto& coeffs : all_vectors(p, rows.size())) {
        Vec w(len, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t k = 0; k < len; ++k) w[k] = md(w[k] + static_cast<long long>(coeffs[r]) * rows[r][k], p);
        bool seen = false;
        for (const auto& o : out) seen |= o == w;
        if (!seen) out.push_back(w);
    }
    return out;
}

int symp(int p, const Vec& u, const Vec& v) {
    const std::size_t n = u.size() / 2;
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(u[i]) * v[n + i] - static_cast<long long>(u[n + i]) * v[i];
    return md(s, p);
}

std::size_t symp_weight(const Vec& v) {
    const std::size_t n = v.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += (v[i] != 0 || v[n + i] != 0);
    return w;
}

std::vector<Vec> dual(int p, const Rows& rows, std::size_t n) {
    std::vector<Vec> out;
    for (const auto& v : all_vectors(p, 2 * n)) {
        bool ok = true;
        for (const auto& r : rows) ok &= symp(p, r, v) == 0;
        if (ok) out.push_back(v);
    }
    return out;
}

bool in_span(int p, const Rows& rows, const Vec& v) {
    Rows ext = rows;
    ext.push_back(v);
    return rank(p, ext) == rank(p, rows);
}

std::size_t shortened_dimension(int p, const Rows& rows, std::size_t n, const std::vector<std::size_t>& j) {
    std::size_t count = 0;
    for (const auto& w : span(p, rows, 2 * n)) {
        bool zero = true;
        for (auto q : j) zero &= w[q] == 0 && w[n + q] == 0;
        count += zero;
    }
    std::size_t d = 0;
    while (count > 1) count /= static_cast<std::size_t>(p), ++d;
    return d;
}

std::size_t dual_min_weight(int p, const Rows& rows, std::size_t n) {
    std::size_t best = 0;
    for (const auto& v : dual(p, rows, n)) {
        const std::size_t w = symp_weight(v);
        if (w > 0 && (best == 0 || w < best)) best = w;
    }
    return best;
}

std::size_t code_distance(int p, const Rows& rows, std::size_t n) {
    std::size_t best = 0;
    for (const auto& v : dual(p, rows, n)) {
        if (in_span(p, rows, v)) continue;
        const std::size_t w = symp_weight(v);
        if (best == 0 || w < best) best = w;
    }
    return best;
}

std::complex<double> omega(int p, long long e) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(md(e, p)) / p;
    return {std::cos(a), std::sin(a)};
}

Eigen::MatrixXcd pauli_matrix(int p, const Vec& x, const Vec& z) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = 0; q < x.size(); ++q) {
        Eigen::MatrixXcd xm = Eigen::MatrixXcd::Zero(p, p);
        Eigen::MatrixXcd zm = Eigen::MatrixXcd::Zero(p, p);
        for (int a = 0; a < p; ++a) {
            xm(md(a + 1, p), a) = 1.0;
            zm(a, a) = omega(p, a);
        }
        Eigen::MatrixXcd block = Eigen::MatrixXcd::Identity(p, p);
        for (int i = 0; i < x[q]; ++i) block = block * xm;
        for (int i = 0; i < z[q]; ++i) block = block * zm;
        Eigen::MatrixXcd next(out.rows() * p, out.cols() * p);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(r * p, c * p, p, p) = out(r, c) * block;
        out = next;
    }
    return out;
}

Rows rows_of(const advshare::FpMatrix& m) {
    Rows out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row_span(r).begin(), m.row_span(r).end());
    return out;
}

advshare::FpMatrix matrix_of(int p, const Rows& rows, std::size_t cols) {
    return advshare::FpMatrix::from_rows(p, rows, cols);
}

advshare::FpMatrix random_stabilizer(int p, std::size_t n, std::size_t r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, p - 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Rows rows;
        int misses = 0;
        while (rows.size() < r && misses < 20000) {
            Vec v(2 * n);
            for (auto& e : v) e = digit(rng);
            bool ok = true;
            for (const auto& o : rows) ok &= symp(p, o, v) == 0;
            Rows ext = rows;
            ext.push_back(v);
            if (ok && rank(p, ext) == ext.size()) {
                rows.push_back(v);
            } else {
                ++misses;
            }
        }
        if (rows.size() == r) return matrix_of(p, rows, 2 * n);
    }
    throw std::runtime_error("random_stabilizer: could not sample");
}

advshare::PauliOperator random_pauli(int p, std::size_t m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, p - 1);
    advshare::SymplecticVector v(p, m);
    for (std::size_t i = 0; i < m; ++i) {
        v.set_x(i, digit(rng));
        v.set_z(i, digit(rng));
    }
    return advshare::PauliOperator(v, digit(rng));
}

}  // namespace oracle
