#include "advshare/advance.hpp"

#include <algorithm>
#include <functional>

#include "advshare/error.hpp"

namespace advshare {

namespace {

void require_valid_shares(const StabilizerCode& code, const IndexSet& shares) {
    if (make_index_set(shares, code.n()) != shares) {
        throw InvalidArgument("share set must be sorted, duplicate-free and within 1..n");
    }
}

std::string join(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace

bool is_advance_shareable(const StabilizerCode& code, const IndexSet& shares) {
    require_valid_shares(code, shares);
    const std::size_t dim = code.num_generators();
    if (2 * shares.size() > dim) return false;
    return shorten(code.image(), shares).dimension() == dim - 2 * shares.size();
}

bool is_advance_shareable_sufficient(const StabilizerCode& code, const IndexSet& shares, const Limits& limits) {
    require_valid_shares(code, shares);
    const SymplecticCode dual = symplectic_dual(code.image());
    return shares.size() < min_symplectic_weight(dual, limits);
}

int pairing_outside(const FpMatrix& check, std::size_t n, std::size_t x_row, std::size_t z_row, std::size_t skip) {
    long long acc = 0;
    for (std::size_t l = 0; l < n; ++l) {
        if (l == skip) continue;
        acc += static_cast<long long>(check.at(x_row, l)) * check.at(z_row, n + l);
        acc -= static_cast<long long>(check.at(z_row, l)) * check.at(x_row, n + l);
    }
    return mod_p(acc, check.modulus());
}

NormalForm normal_form(const StabilizerCode& code, const IndexSet& shares) {
    require_valid_shares(code, shares);
    const std::size_t n = code.n();
    const std::size_t m = shares.size();
    const int p = code.modulus();
    FpMatrix w = code.check_matrix();
    if (2 * m > w.rows()) {
        throw NotAdvanceShareable("not advance shareable: " + join(shares) + " needs 2|J| = " +
                                  std::to_string(2 * m) + " independent generators, code has " +
                                  std::to_string(w.rows()));
    }

    // Z pivots first (rows 0..m-1), then X pivots (rows m..2m-1).
    std::vector<std::size_t> pivot_cols;
    for (auto j : shares) pivot_cols.push_back(n + j);
    for (auto j : shares) pivot_cols.push_back(j);

    for (std::size_t lead = 0; lead < pivot_cols.size(); ++lead) {
        const std::size_t col = pivot_cols[lead];
        std::size_t pivot = lead;
        while (pivot < w.rows() && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows()) {
            throw NotAdvanceShareable("not advance shareable: columns owned by " + join(shares) +
                                      " have rank below 2|J|");
        }
        w.swap_rows(lead, pivot);
        const bool z_pivot = lead < m;
        if (z_pivot) w.scale_row(lead, -inverse_mod(w.at(lead, col), p));
        const int inv = inverse_mod(w.at(lead, col), p);
        for (std::size_t other = 0; other < w.rows(); ++other) {
            if (other == lead || w.at(other, col) == 0) continue;
            w.add_row_multiple(other, lead, -static_cast<long long>(w.at(other, col)) * inv % p);
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i) order.push_back(m + i);
    for (std::size_t i = 0; i < m; ++i) order.push_back(i);
    FpMatrix form = w.select_rows(order);
    std::vector<std::size_t> rest;
    for (std::size_t r = 2 * m; r < w.rows(); ++r) rest.push_back(r);
    form = form.vstack(row_basis(w.select_rows(rest)));
    if (form.rows() != w.rows()) throw InvariantViolation("normal form lost rank");

    NormalForm out{shares, form, {}};
    for (std::size_t i = 0; i < m; ++i) {
        const int pivot = form.at(i, shares[i]);
        const int expected = pairing_outside(form, n, i, m + i, shares[i]);
        if (pivot == 0 || pivot != expected) {
            throw InvariantViolation("X pivot " + std::to_string(pivot) + " for share " +
                                     std::to_string(shares[i] + 1) + " differs from pairing value " +
                                     std::to_string(expected));
        }
        out.mu.push_back(pivot);
    }
    return out;
}

std::optional<std::string> normal_form_violation(const NormalForm& form, const StabilizerCode& code) {
    const std::size_t n = code.n();
    const std::size_t m = form.shares.size();
    const FpMatrix& h = form.check;
    const int minus_one = code.modulus() - 1;
    if (h.rows() != code.num_generators() || h.cols() != 2 * n) return "shape differs from the check matrix";
    if (!same_row_space(h, code.check_matrix())) return "row space differs from the check matrix";
    if (form.mu.size() != m) return "mu list has wrong length";
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t t = 0; t < m; ++t) {
            const std::size_t j = form.shares[t];
            const int xv = h.at(r, j);
            const int zv = h.at(r, n + j);
            const int want_x = (r == t) ? form.mu[t] : 0;
            const int want_z = (r == m + t) ? minus_one : 0;
            if (xv != want_x || zv != want_z) {
                return "row " + std::to_string(r + 1) + " has (" + std::to_string(xv) + "|" + std::to_string(zv) +
                       ") on share " + std::to_string(j + 1) + ", expected (" + std::to_string(want_x) + "|" +
                       std::to_string(want_z) + ")";
            }
        }
    }
    for (std::size_t t = 0; t < m; ++t) {
        if (form.mu[t] == 0) return "mu_" + std::to_string(t + 1) + " is zero";
        if (pairing_outside(h, n, t, m + t, form.shares[t]) != form.mu[t]) {
            return "mu_" + std::to_string(t + 1) + " disagrees with the pairing formula";
        }
    }
    return std::nullopt;
}

std::size_t EaqeccPlan::local_index(std::size_t global) const {
    auto it = std::lower_bound(kept.begin(), kept.end(), global);
    if (it == kept.end() || *it != global) throw InvalidArgument("share is not part of the encoded block");
    return static_cast<std::size_t>(it - kept.begin());
}

EaqeccPlan construct_eaqecc(const StabilizerCode& code, const IndexSet& shares, const Limits& limits) {
    if (!is_advance_shareable(code, shares)) {
        throw NotAdvanceShareable("not advance shareable: " + join(shares));
    }
    EaqeccPlan plan{code.modulus(), code.n(), code.k(), shares, shares.size(),
                    code.num_generators() - 2 * shares.size(), std::nullopt, normal_form(code, shares),
                    {}, {}, {}, {}, {}, {}};
    plan.kept = complement(shares, plan.n);
    if (plan.k >= 1) {
        try {
            plan.distance = code_distance(code, limits);
        } catch (const BudgetExceeded&) {
            plan.distance.reset();
        }
    }

    // Smallest free positions first: x's, then z's, then the secret.
    const std::size_t len = plan.length();
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < plan.c; ++i) plan.x_positions.push_back(plan.kept[cursor++]);
    for (std::size_t i = 0; i < plan.ancillas; ++i) plan.z_positions.push_back(plan.kept[cursor++]);
    while (cursor < len) plan.secret_positions.push_back(plan.kept[cursor++]);
    if (plan.secret_positions.size() != plan.k) throw InvariantViolation("position bookkeeping mismatch");

    const FpMatrix& h = plan.form.check;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        SymplecticVector v(plan.p, len);
        for (std::size_t l = 0; l < len; ++l) {
            v.set_x(l, h.at(r, plan.kept[l]));
            v.set_z(l, h.at(r, plan.n + plan.kept[l]));
        }
        plan.source_generators.emplace_back(std::move(v));
    }

    for (std::size_t i = 0; i < plan.c; ++i) {
        plan.target_generators.push_back(PauliOperator::single(plan.p, len, i, plan.form.mu[i], 0));
    }
    for (std::size_t i = 0; i < plan.c; ++i) {
        plan.target_generators.push_back(PauliOperator::single(plan.p, len, i, 0, 1));
    }
    for (std::size_t r = 0; r < plan.ancillas; ++r) {
        plan.target_generators.push_back(PauliOperator::single(plan.p, len, plan.c + r, 0, 1));
    }

    if (!(commutation_matrix(plan.p, plan.source_generators) == commutation_matrix(plan.p, plan.target_generators))) {
        throw InvariantViolation("source and target generators have different commutation exponents");
    }
    return plan;
}

ShareableEnumeration enumerate_advance_shareable(const StabilizerCode& code, std::size_t max_size,
                                                 const Limits& limits) {
    ShareableEnumeration out;
    out.max_size = std::min(max_size, code.num_generators() / 2);
    try {
        out.dual_min_weight = min_symplectic_weight(symplectic_dual(code.image()), limits);
    } catch (const BudgetExceeded&) {
        out.budget_exceeded = true;
    }

    const std::size_t n = code.n();
    IndexSet current;
    for (std::size_t size = 1; size <= out.max_size; ++size) {
        // Lexicographic walk over size-subsets of {0..n-1}.
        std::function<void(std::size_t)> walk = [&](std::size_t start) {
            if (current.size() == size) {
                if (is_advance_shareable(code, current)) {
                    ShareableSet entry{current, true, std::nullopt};
                    if (out.dual_min_weight) entry.sufficient = current.size() < *out.dual_min_weight;
                    out.sets.push_back(std::move(entry));
                }
                return;
            }
            for (std::size_t i = start; i + (size - current.size()) <= n; ++i) {
                current.push_back(i);
                walk(i + 1);
                current.pop_back();
            }
        };
        walk(0);
    }
    return out;
}

}  // namespace advshare
