#pragma once

#include <vector>

namespace lscm {

/// Partition a = t_0 < t_1 < ... < t_n = b of a bounded interval.
/// Intervals are indexed 0..n-1; interval j is [t_j, t_{j+1}).
class Partition {
 public:
  explicit Partition(std::vector<double> breakpoints);

  int n() const { return static_cast<int>(t_.size()) - 1; }
  double a() const { return t_.front(); }
  double b() const { return t_.back(); }
  double breakpoint(int j) const { return t_.at(j); }
  const std::vector<double>& breakpoints() const { return t_; }

  /// Length of interval j.
  double step(int j) const { return t_.at(j + 1) - t_.at(j); }
  double max_step() const { return h_max_; }
  double min_step() const { return h_min_; }
  double mesh_ratio() const { return h_max_ / h_min_; }
  bool is_uniform() const;

  /// Interval containing t under the half-open convention, with t = b
  /// assigned to the last interval. Throws std::out_of_range outside [a, b].
  int locate(double t) const;

 private:
  std::vector<double> t_;
  double h_max_ = 0.0;
  double h_min_ = 0.0;
};

Partition make_uniform_partition(double a, double b, int n);
Partition make_partition(std::vector<double> breakpoints);

}  // namespace lscm
