#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gll/complex_poly.hpp"
#include "gll/electrostatics.hpp"

namespace gll {

struct BoundingBox {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

/// Scalar samples of the potential at the centers of an nx-by-ny cell
/// partition of the box, row-major with y as the outer index. Samples whose
/// cell center falls too close to a charge are masked (stored as NaN).
class Grid {
 public:
  Grid(BoundingBox box, int nx, int ny);

  /// Grid filled from an arbitrary scalar function; used by checks that need
  /// analytically known fields.
  static Grid from_function(BoundingBox box, int nx, int ny,
                            const std::function<double(Complex)>& f);

  const BoundingBox& box() const { return box_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return box_.width() / nx_; }
  double dy() const { return box_.height() / ny_; }
  double cell_diagonal() const;
  Complex cell_center(int i, int j) const;

  double value(int i, int j) const { return values_[static_cast<std::size_t>(j) * nx_ + i]; }
  bool masked(int i, int j) const;
  void set_value(int i, int j, double v) { values_[static_cast<std::size_t>(j) * nx_ + i] = v; }
  void mask(int i, int j);
  std::size_t masked_count() const;

  const std::vector<double>& values() const { return values_; }

  /// Charge locations the grid was sampled from; harmonicity checks stay
  /// clear of them. Empty for hand-built grids.
  const std::vector<Complex>& sources() const { return sources_; }
  void set_sources(std::vector<Complex> s) { sources_ = std::move(s); }

 private:
  BoundingBox box_;
  int nx_ = 0, ny_ = 0;
  std::vector<double> values_;
  std::vector<Complex> sources_;
};

using Polyline = std::vector<Complex>;

/// Sample phi on the grid; cell centers within half a cell diagonal of a
/// charge are masked.
Grid sample_potential(const ChargeConfiguration& cfg, BoundingBox box, int nx, int ny);

/// n level values at the quantiles k/(n+1), k = 1..n, of the unmasked value
/// distribution. Throws TooFewSamples when no strictly increasing choice
/// exists.
std::vector<double> auto_levels(const Grid& g, int n);

/// Marching-squares level curves over the sample lattice. Cells touching a
/// masked sample are skipped; polylines are closed (first point repeated) or
/// end on the lattice boundary / mask seam.
std::vector<Polyline> contour_lines(const Grid& g, std::span<const double> levels);

/// Max |five-point discrete Laplacian| over interior unmasked samples at
/// least three cell diagonals from any source; O(h^2) for harmonic data.
double harmonicity_residual(const Grid& g);

struct Scene {
  std::vector<Polyline> contours;
  std::vector<Complex> charge_marks;
  std::vector<Complex> critical_marks;
  BoundingBox bbox;
};

/// Standalone SVG: black 1px contour paths, red charge dots (radius 0.8% of
/// the box width), blue critical-point dots, y axis flipped to screen
/// convention. Byte-identical output for identical scenes.
std::string render_svg_string(const Scene& scene);

/// Writes render_svg_string to path; throws IoFailure.
void render_svg(const Scene& scene, const std::string& path);

/// CSV export "x,y,value" of unmasked samples, row-major.
void write_grid_csv(const Grid& g, std::ostream& out);

/// Hull bounding box of the charges inflated 40% per side (unit padding for
/// a single charge); the default render window.
BoundingBox default_figure_bbox(const ChargeConfiguration& cfg);

}  // namespace gll
