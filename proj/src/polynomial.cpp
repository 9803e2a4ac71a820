#include "lscm/polynomial.hpp"

namespace lscm::poly {

std::vector<double> legendre_values(int d, double x) {
  std::vector<double> p(d + 1);
  p[0] = 1.0;
  if (d >= 1) p[1] = x;
  for (int n = 1; n < d; ++n)
    p[n + 1] = ((2.0 * n + 1.0) * x * p[n] - n * p[n - 1]) / (n + 1.0);
  return p;
}

std::vector<double> legendre_derivatives(int d, double x) {
  // P'_{n+1} = P'_{n-1} + (2n+1) P_n avoids the endpoint singularity of the
  // (1-x^2) form.
  auto p = legendre_values(d, x);
  std::vector<double> dp(d + 1, 0.0);
  if (d >= 1) dp[1] = 1.0;
  for (int n = 1; n < d; ++n) dp[n + 1] = dp[n - 1] + (2.0 * n + 1.0) * p[n];
  return dp;
}

std::vector<double> chebyshev_values(int d, double x) {
  std::vector<double> t(d + 1);
  t[0] = 1.0;
  if (d >= 1) t[1] = x;
  for (int n = 1; n < d; ++n) t[n + 1] = 2.0 * x * t[n] - t[n - 1];
  return t;
}

double chebyshev_series_value(const std::vector<double>& a, double x) {
  double b1 = 0.0, b2 = 0.0;
  for (int k = static_cast<int>(a.size()) - 1; k >= 1; --k) {
    double b0 = a[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  double a0 = a.empty() ? 0.0 : a[0];
  return a0 + x * b1 - b2;
}

std::vector<double> chebyshev_series_integral(const std::vector<double>& a) {
  std::vector<double> b(a.size() + 1, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == 0) {
      b[1] += a[0];
    } else if (k == 1) {
      b[2] += a[1] / 4.0;
    } else {
      b[k + 1] += a[k] / (2.0 * (k + 1));
      b[k - 1] -= a[k] / (2.0 * (k - 1));
    }
  }
  b[0] -= chebyshev_series_value(b, -1.0);
  return b;
}

}  // namespace lscm::poly
