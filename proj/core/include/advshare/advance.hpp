#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "advshare/gfp.hpp"
#include "advshare/limits.hpp"
#include "advshare/pauli.hpp"
#include "advshare/symplectic.hpp"

namespace advshare {

// Exact test: J can be handed out ahead of the secret iff shortening f(S)
// on J drops the dimension by exactly 2|J|.
bool is_advance_shareable(const StabilizerCode& code, const IndexSet& shares);

// Cheaper one-way certificate: |J| < d_min(f(S)^perp) implies shareability.
bool is_advance_shareable_sufficient(const StabilizerCode& code, const IndexSet& shares, const Limits& limits = {});

// Row-equivalent check matrix isolating the J-owned columns.
//
// With m = |J| and J = {j_1 < ... < j_m}:
//   rows 0..m-1   ("X rows")  entry mu_i at x-column j_i, zero on every other J-owned column;
//   rows m..2m-1  ("Z rows")  entry -1 at z-column j_i, zero on every other J-owned column;
//   rows 2m..     vanish on all J-owned columns (kept in rref).
// Each mu_i is nonzero and equals the symplectic pairing of rows i and m+i
// restricted to the columns outside share j_i.
struct NormalForm {
    IndexSet shares;
    FpMatrix check;
    std::vector<int> mu;
};

// Throws NotAdvanceShareable when the J-owned columns of H have rank < 2|J|.
NormalForm normal_form(const StabilizerCode& code, const IndexSet& shares);

// Sum over columns l != skip of h[x_row][l] h[z_row][n+l] - h[z_row][l] h[x_row][n+l].
int pairing_outside(const FpMatrix& check, std::size_t n, std::size_t x_row, std::size_t z_row, std::size_t skip);

// First violated NormalForm property, or nullopt when all hold (including row
// equivalence with the code's check matrix).
std::optional<std::string> normal_form_violation(const NormalForm& form, const StabilizerCode& code);

// Entanglement-assisted code built from a stabilizer and a shareable set J.
//
// The n - |J| qudits outside J are indexed locally in increasing global order
// (`kept`). source_generators are the normal-form rows restricted to them;
// target_generators are the sparse frame operators with the same commutation
// exponents:
//   row i      : X^{mu_i} at x_positions[i]
//   row c + i  : Z        at x_positions[i]
//   row 2c + r : Z        at z_positions[r]
// A unitary U with U target_i U^dag ~ source_i turns EPR halves at the x
// positions, |0> ancillas at the z positions and the secret at
// secret_positions into a codeword of Q(S) (together with the J halves).
struct EaqeccPlan {
    int p = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    IndexSet shares;
    std::size_t c = 0;
    std::size_t ancillas = 0;
    std::optional<std::size_t> distance;
    NormalForm form;
    IndexSet kept;
    std::vector<PauliOperator> source_generators;
    std::vector<PauliOperator> target_generators;
    // Global share indices (0-based).
    std::vector<std::size_t> x_positions;
    std::vector<std::size_t> z_positions;
    std::vector<std::size_t> secret_positions;

    std::size_t length() const { return n - c; }
    // Local index of a kept global share index.
    std::size_t local_index(std::size_t global) const;
};

// distance is filled in when code_distance fits the budget (and k >= 1).
EaqeccPlan construct_eaqecc(const StabilizerCode& code, const IndexSet& shares, const Limits& limits = {});

struct ShareableSet {
    IndexSet shares;
    bool exact = true;                  // exact dimension test
    std::optional<bool> sufficient;     // |J| < d_min(f(S)^perp); empty if d_min was over budget
};

struct ShareableEnumeration {
    std::size_t max_size = 0;           // after clamping to floor((n-k)/2)
    std::optional<std::size_t> dual_min_weight;
    bool budget_exceeded = false;
    std::vector<ShareableSet> sets;     // nonempty sets, by size then lexicographic
};

ShareableEnumeration enumerate_advance_shareable(const StabilizerCode& code, std::size_t max_size,
                                                 const Limits& limits = {});

}  // namespace advshare
