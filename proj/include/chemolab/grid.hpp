#pragma once

#include <array>
#include <span>
#include <vector>

namespace chemolab {

/// Axis-aligned domain box [0, L0] (x [0, L1] in 2d).
struct Box {
  int dim = 1;
  std::array<double, 2> length{1.0, 1.0};

  bool operator==(const Box&) const = default;
};

/// Vertex-centered uniform grid on a Box. Nodes along axis a sit at
/// i * spacing(a), i = 0 .. count(a)-1, with spacing = length / (count-1).
/// Boundary nodes own half cells, so trapezoidal weights double as finite
/// volume cell sizes.
class Grid {
 public:
  Grid(Box box, std::array<int, 2> counts);

  static Grid make_1d(double length, int count);
  static Grid make_2d(double lx, double ly, int nx, int ny);

  int dim() const { return box_.dim; }
  const Box& box() const { return box_; }
  double length(int axis) const { return box_.length[axis]; }
  int count(int axis) const { return counts_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double min_spacing() const;

  /// Total number of nodes (nx in 1d, nx*ny in 2d).
  int size() const { return size_; }

  /// Flattened index of node (ix, iy); x runs fastest.
  int index(int ix, int iy = 0) const { return ix + iy * counts_[0]; }

  double coord(int axis, int i) const { return i * spacing_[axis]; }

  /// Coordinates of a flattened node (second entry 0 in 1d).
  std::array<double, 2> node(int idx) const;

  /// Trapezoidal weight along one axis: h in the interior, h/2 at the ends.
  double cell_weight(int axis, int i) const;

  /// Product of per-axis cell weights for a flattened node.
  double node_volume(int idx) const;

  /// Trapezoidal integral of a nodal field over the box.
  double integrate(std::span<const double> f) const;

 private:
  Box box_;
  std::array<int, 2> counts_;
  std::array<double, 2> spacing_;
  int size_;
};

/// Prognostic fields at one instant: species densities u, v and the signal
/// concentration w on grid nodes.
struct FieldState {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> w;
};

}  // namespace chemolab
