#include "lscm/mesh.hpp"

#include <algorithm>
#include <stdexcept>

namespace lscm {

Partition::Partition(std::vector<double> breakpoints) : t_(std::move(breakpoints)) {
  if (t_.size() < 2) throw std::invalid_argument("partition needs at least two breakpoints");
  h_max_ = 0.0;
  h_min_ = t_[1] - t_[0];
  for (std::size_t j = 0; j + 1 < t_.size(); ++j) {
    double h = t_[j + 1] - t_[j];
    if (!(h > 0.0)) throw std::invalid_argument("breakpoints must be strictly increasing");
    h_max_ = std::max(h_max_, h);
    h_min_ = std::min(h_min_, h);
  }
}

bool Partition::is_uniform() const {
  return h_max_ - h_min_ <= 1e-13 * h_max_;
}

int Partition::locate(double t) const {
  if (t < a() || t > b()) throw std::out_of_range("point outside the partitioned interval");
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  int j = static_cast<int>(it - t_.begin()) - 1;
  return std::min(j, n() - 1);
}

Partition make_uniform_partition(double a, double b, int n) {
  if (!(a < b)) throw std::invalid_argument("uniform partition requires a < b");
  if (n < 1) throw std::invalid_argument("uniform partition requires n >= 1");
  std::vector<double> t(n + 1);
  for (int j = 0; j < n; ++j) t[j] = a + j * (b - a) / n;
  t[n] = b;
  return Partition(std::move(t));
}

Partition make_partition(std::vector<double> breakpoints) {
  return Partition(std::move(breakpoints));
}

}  // namespace lscm
