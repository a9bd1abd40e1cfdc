#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond plain data types.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "advshare/pauli.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Rows = std::vector<Vec>;

int md(long long v, int p);
int inv(int a, int p);

// Gaussian elimination on a copy.
std::size_t rank(int p, Rows rows);

// Every vector of F_p^len (p^len of them).
std::vector<Vec> all_vectors(int p, std::size_t len);
// Every element of the row span, each exactly once.
std::vector<Vec> span(int p, const Rows& rows, std::size_t len);

int symp(int p, const Vec& u, const Vec& v);
std::size_t symp_weight(const Vec& v);

// f(S)^perp by enumerating F_p^{2n}.
std::vector<Vec> dual(int p, const Rows& rows, std::size_t n);
bool in_span(int p, const Rows& rows, const Vec& v);

// dim of the shortened code, counted as log_p |{c in span : c = 0 on J}|.
std::size_t shortened_dimension(int p, const Rows& rows, std::size_t n, const std::vector<std::size_t>& j);
// min symplectic weight over nonzero dual vectors; 0 if none.
std::size_t dual_min_weight(int p, const Rows& rows, std::size_t n);
// min weight over f(S)^perp \ f(S); 0 if empty.
std::size_t code_distance(int p, const Rows& rows, std::size_t n);

// Dense X(a)Z(b) as a Kronecker product of p x p blocks.
Eigen::MatrixXcd pauli_matrix(int p, const Vec& x, const Vec& z);
std::complex<double> omega(int p, long long e);

Rows rows_of(const advshare::FpMatrix& m);
advshare::FpMatrix matrix_of(int p, const Rows& rows, std::size_t cols);

// Random commuting, independent check matrix with r rows on n qudits.
advshare::FpMatrix random_stabilizer(int p, std::size_t n, std::size_t r, std::mt19937_64& rng);
// Random element of E_m (phase included).
advshare::PauliOperator random_pauli(int p, std::size_t m, std::mt19937_64& rng);

}  // namespace oracle
