#include "advshare/symplectic.hpp"

#include <algorithm>
#include <sstream>

#include "advshare/error.hpp"

namespace advshare {

IndexSet make_index_set(std::vector<std::size_t> indices, std::size_t n) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (!indices.empty() && indices.back() >= n) {
        throw InvalidArgument("share index " + std::to_string(indices.back() + 1) + " out of range 1.." +
                              std::to_string(n));
    }
    return indices;
}

IndexSet complement(const IndexSet& set, std::size_t n) {
    IndexSet out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (k < set.size() && set[k] == i) {
            ++k;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> owned_columns(const IndexSet& set, std::size_t n) {
    std::vector<std::size_t> cols;
    cols.reserve(2 * set.size());
    for (auto j : set) cols.push_back(j);
    for (auto j : set) cols.push_back(n + j);
    return cols;
}

// ---------------------------------------------------------------------------

SymplecticVector::SymplecticVector(int p, std::size_t n) : n_(n), data_(p, 2 * n) {}

SymplecticVector::SymplecticVector(const FpVector& x, const FpVector& z) : n_(x.size()), data_(x.modulus(), 0) {
    if (x.size() != z.size() || x.modulus() != z.modulus()) {
        throw InvalidArgument("x and z parts must share length and modulus");
    }
    std::vector<int> e(x.entries().begin(), x.entries().end());
    e.insert(e.end(), z.entries().begin(), z.entries().end());
    data_ = FpVector(x.modulus(), std::move(e));
}

SymplecticVector SymplecticVector::from_concatenated(const FpVector& v) {
    if (v.size() % 2 != 0) throw InvalidArgument("symplectic vector needs even length");
    SymplecticVector out(v.modulus(), v.size() / 2);
    out.data_ = v;
    return out;
}

FpVector SymplecticVector::x_part() const {
    auto e = data_.entries();
    return FpVector(modulus(), std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n_)));
}

FpVector SymplecticVector::z_part() const {
    auto e = data_.entries();
    return FpVector(modulus(), std::vector<int>(e.begin() + static_cast<std::ptrdiff_t>(n_), e.end()));
}

std::size_t SymplecticVector::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n_; ++i) w += (x(i) != 0 || z(i) != 0);
    return w;
}

IndexSet SymplecticVector::support() const {
    IndexSet s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (x(i) != 0 || z(i) != 0) s.push_back(i);
    }
    return s;
}

SymplecticVector& SymplecticVector::operator+=(const SymplecticVector& o) {
    data_ += o.data_;
    return *this;
}

SymplecticVector& SymplecticVector::operator-=(const SymplecticVector& o) {
    data_ -= o.data_;
    return *this;
}

SymplecticVector& SymplecticVector::operator*=(int s) {
    data_ *= s;
    return *this;
}

std::string SymplecticVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < n_; ++i) out << x(i) << (i + 1 < n_ ? " " : "");
    out << " |";
    for (std::size_t i = 0; i < n_; ++i) out << ' ' << z(i);
    out << ')';
    return out.str();
}

FpScalar symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
    if (u.n() != v.n() || u.modulus() != v.modulus()) {
        throw InvalidArgument("symplectic product of vectors with different length or modulus");
    }
    long long acc = 0;
    for (std::size_t i = 0; i < u.n(); ++i) {
        acc += static_cast<long long>(u.x(i)) * v.z(i) - static_cast<long long>(u.z(i)) * v.x(i);
    }
    return FpScalar(acc, u.modulus());
}

// ---------------------------------------------------------------------------

SymplecticCode SymplecticCode::span(std::size_t n, const FpMatrix& generators) {
    if (generators.cols() != 2 * n) {
        throw InvalidArgument("generator matrix has " + std::to_string(generators.cols()) + " columns, expected " +
                              std::to_string(2 * n));
    }
    return SymplecticCode(n, row_basis(generators));
}

SymplecticCode SymplecticCode::span(std::size_t n, int p, const std::vector<SymplecticVector>& generators) {
    FpMatrix m(p, 0, 2 * n);
    for (const auto& g : generators) m.append_row(g.concatenated());
    return span(n, m);
}

SymplecticCode SymplecticCode::zero(int p, std::size_t n) { return SymplecticCode(n, FpMatrix(p, 0, 2 * n)); }

SymplecticCode SymplecticCode::full(int p, std::size_t n) { return SymplecticCode(n, FpMatrix::identity(p, 2 * n)); }

std::vector<SymplecticVector> SymplecticCode::basis_vectors() const {
    std::vector<SymplecticVector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(SymplecticVector::from_concatenated(basis_.row(r)));
    return out;
}

bool SymplecticCode::contains(const SymplecticVector& v) const {
    if (v.n() != n_ || v.modulus() != modulus()) return false;
    return in_row_space(basis_, v.concatenated());
}

bool SymplecticCode::contains(const SymplecticCode& other) const {
    if (other.n_ != n_ || other.modulus() != modulus()) return false;
    return rank(basis_.vstack(other.basis_)) == dimension();
}

SymplecticCode symplectic_dual(const SymplecticCode& c) {
    // v is in the dual iff <h, v>_s = <h_x, v_z> - <h_z, v_x> = 0 for each basis row h,
    // i.e. v lies in the kernel of [-H_z | H_x].
    const std::size_t n = c.n();
    const FpMatrix& h = c.basis();
    FpMatrix constraints(c.modulus(), h.rows(), 2 * n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            constraints.set(r, i, -h.at(r, n + i));
            constraints.set(r, n + i, h.at(r, i));
        }
    }
    return SymplecticCode::span(n, kernel(constraints));
}

namespace {

FpMatrix drop_owned_columns(const FpMatrix& m, std::size_t n, const IndexSet& j) {
    const IndexSet keep = complement(j, n);
    std::vector<std::size_t> cols;
    for (auto i : keep) cols.push_back(i);
    for (auto i : keep) cols.push_back(n + i);
    return m.select_columns(cols);
}

void require_index_set(const IndexSet& j, std::size_t n) {
    if (make_index_set(j, n) != j) throw InvalidArgument("index set must be sorted and duplicate-free");
}

}  // namespace

SymplecticCode shorten(const SymplecticCode& c, const IndexSet& j) {
    require_index_set(j, c.n());
    const std::size_t n = c.n();
    const FpMatrix& g = c.basis();
    const auto cols = owned_columns(j, n);
    // Coefficient vectors y with y * G vanishing on the owned columns.
    const FpMatrix coeffs = kernel(g.select_columns(cols).transpose());
    const FpMatrix words = coeffs.rows() == 0 ? FpMatrix(c.modulus(), 0, 2 * n) : coeffs * g;
    return SymplecticCode::span(n - j.size(), drop_owned_columns(words, n, j));
}

SymplecticCode puncture(const SymplecticCode& c, const IndexSet& j) {
    require_index_set(j, c.n());
    return SymplecticCode::span(c.n() - j.size(), drop_owned_columns(c.basis(), c.n(), j));
}

void for_each_combination(const FpMatrix& basis, const Limits& limits,
                          const std::function<bool(std::span<const int>, std::span<const int>)>& visit) {
    const int p = basis.modulus();
    const std::size_t dim = basis.rows();
    const std::size_t width = basis.cols();
    const std::uint64_t count = checked_power(static_cast<std::uint64_t>(p), dim);
    if (count > limits.max_codewords) {
        throw BudgetExceeded("enumeration limit: " + std::to_string(p) + "^" + std::to_string(dim) +
                             " codewords exceeds budget of " + std::to_string(limits.max_codewords));
    }
    std::vector<int> word(width, 0);
    std::vector<int> coeffs(dim, 0);
    if (!visit(word, coeffs)) return;
    for (std::uint64_t step = 1; step < count; ++step) {
        // Odometer increment. Every digit that changes (including wraps from
        // p-1 to 0) adds its basis row once, since p * row = 0.
        for (std::size_t d = 0; d < dim; ++d) {
            auto row = basis.row_span(d);
            for (std::size_t c = 0; c < width; ++c) {
                int v = word[c] + row[c];
                word[c] = v >= p ? v - p : v;
            }
            if (++coeffs[d] < p) break;
            coeffs[d] = 0;
        }
        if (!visit(word, coeffs)) return;
    }
}

std::size_t min_symplectic_weight(const SymplecticCode& c, const Limits& limits) {
    if (c.dimension() == 0) throw InvalidArgument("minimum weight of the zero code is undefined");
    const std::size_t n = c.n();
    std::size_t best = n + 1;
    for_each_combination(c.basis(), limits, [&](std::span<const int> w, std::span<const int> coeffs) {
        bool nonzero = false;
        for (int v : coeffs) nonzero |= v != 0;
        if (!nonzero) return true;
        std::size_t weight = 0;
        for (std::size_t i = 0; i < n; ++i) weight += (w[i] != 0 || w[n + i] != 0);
        best = std::min(best, weight);
        return best > 1;
    });
    return best;
}

}  // namespace advshare
