#pragma once

// Differential operators on superspace: partial derivatives in x, interior
// products in theta, the generalized exterior derivatives d_i, and the
// Vandermonde-based forms d_I Delta_n.

#include "superharm/permutation.hpp"
#include "superharm/superpoly.hpp"

#include <span>
#include <vector>

namespace superharm {

SuperPolynomial partial_x(int i, const SuperPolynomial& p);
/// (d/dx_i)^e p in one pass.
SuperPolynomial partial_x_power(int i, int e, const SuperPolynomial& p);

/// Removes theta_i with sign (-1)^{#{c in thetas : c < i}}.
SuperPolynomial interior_theta(int i, const SuperPolynomial& p);

/// Left multiplication by theta_i.
SuperPolynomial theta_times(int i, const SuperPolynomial& p);

/// partial_g p. For each monomial of g the x-derivatives are taken first, then
/// the theta interior products in increasing index order (the smallest index
/// acts first).
SuperPolynomial apply_diff_operator(const SuperPolynomial& g, const SuperPolynomial& p);

/// sum over sigma of sgn(sigma) prod x_i^{sigma(i)-1}.
SuperPolynomial vandermonde(int n);

/// e_r(S) in n variables; zero when r < 0 or r > |S|.
SuperPolynomial elementary(int n, int r, std::span<const int> S);
/// e_r({1..m}).
SuperPolynomial elementary(int n, int r, int m);

/// partial_{e_r(S)} p, computed by a dynamic program over S instead of
/// expanding e_r(S).
SuperPolynomial apply_elementary(int r, std::span<const int> S, const SuperPolynomial& p);
SuperPolynomial apply_elementary(int r, int m, const SuperPolynomial& p);

/// d_i p = sum_j theta_j (d/dx_j)^i p.
SuperPolynomial d_op(int i, const SuperPolynomial& p);

/// d_{w_1} ... d_{w_k} p (w_k applied first). Any word; repeats give 0.
SuperPolynomial d_word(std::span<const int> word, const SuperPolynomial& p);

/// d_I Delta_n for strictly increasing I in [n-1].
SuperPolynomial d_I_vandermonde(std::span<const int> I, int n);

/// d_J Delta_n for a multiset J in [n-1] given in non-decreasing order; 0 when
/// an entry repeats.
SuperPolynomial d_J_vandermonde(std::span<const int> J, int n);

/// Substitutes x_a -> x_{sigma(a)}, theta_a -> theta_{sigma(a)}.
SuperPolynomial permute_variables(const Permutation& sigma, const SuperPolynomial& p);

}  // namespace superharm
