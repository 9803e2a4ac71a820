#pragma once

// Low-level univariate polynomial kernels shared by the basis and
// quadrature modules. Arguments are on x in [-1, 1] unless noted.

#include <vector>

namespace lscm::poly {

/// Legendre P_0..P_d at x (d+1 values).
std::vector<double> legendre_values(int d, double x);

/// Derivatives P_0'..P_d' at x.
std::vector<double> legendre_derivatives(int d, double x);

/// Chebyshev T_0..T_d at x.
std::vector<double> chebyshev_values(int d, double x);

/// Value of sum_k a[k] T_k(x) by Clenshaw's recurrence.
double chebyshev_series_value(const std::vector<double>& a, double x);

/// Coefficients of the antiderivative F of sum_k a[k] T_k with F(-1) = 0.
/// The result has one more coefficient than the input.
std::vector<double> chebyshev_series_integral(const std::vector<double>& a);

}  // namespace lscm::poly
