#include "chemolab/grid.hpp"

#include <algorithm>
#include <string>

#include "chemolab/errors.hpp"

namespace chemolab {

Grid::Grid(Box box, std::array<int, 2> counts) : box_(box), counts_(counts) {
  if (box.dim != 1 && box.dim != 2) {
    throw Error("grid: dim must be 1 or 2, got " + std::to_string(box.dim));
  }
  for (int a = 0; a < box.dim; ++a) {
    if (!(box.length[a] > 0.0)) {
      throw Error("grid: length must be > 0 on axis " + std::to_string(a));
    }
    if (counts[a] < 3) {
      throw Error("grid: need at least 3 nodes per axis, got " +
                  std::to_string(counts[a]));
    }
    spacing_[a] = box.length[a] / (counts[a] - 1);
  }
  if (box.dim == 1) {
    counts_[1] = 1;
    spacing_[1] = 0.0;
    box_.length[1] = 0.0;
  }
  size_ = counts_[0] * counts_[1];
}

Grid Grid::make_1d(double length, int count) {
  return Grid(Box{1, {length, 0.0}}, {count, 1});
}

Grid Grid::make_2d(double lx, double ly, int nx, int ny) {
  return Grid(Box{2, {lx, ly}}, {nx, ny});
}

double Grid::min_spacing() const {
  double h = spacing_[0];
  if (dim() == 2) h = std::min(h, spacing_[1]);
  return h;
}

std::array<double, 2> Grid::node(int idx) const {
  const int ix = idx % counts_[0];
  const int iy = idx / counts_[0];
  return {coord(0, ix), dim() == 2 ? coord(1, iy) : 0.0};
}

double Grid::cell_weight(int axis, int i) const {
  const double h = spacing_[axis];
  return (i == 0 || i == counts_[axis] - 1) ? 0.5 * h : h;
}

double Grid::node_volume(int idx) const {
  const int ix = idx % counts_[0];
  double v = cell_weight(0, ix);
  if (dim() == 2) v *= cell_weight(1, idx / counts_[0]);
  return v;
}

double Grid::integrate(std::span<const double> f) const {
  double acc = 0.0;
  for (int i = 0; i < size_; ++i) acc += node_volume(i) * f[i];
  return acc;
}

}  // namespace chemolab
