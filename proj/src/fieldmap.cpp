#include "gll/fieldmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "gll/errors.hpp"

namespace gll {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_box(const BoundingBox& box) {
  if (!(box.x1 > box.x0) || !(box.y1 > box.y0)) {
    throw std::invalid_argument("bounding box must have positive extent");
  }
}

}  // namespace

Grid::Grid(BoundingBox box, int nx, int ny) : box_(box), nx_(nx), ny_(ny) {
  require_box(box);
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs nx, ny >= 2");
  values_.assign(static_cast<std::size_t>(nx) * ny, 0.0);
}

Grid Grid::from_function(BoundingBox box, int nx, int ny,
                         const std::function<double(Complex)>& f) {
  Grid g(box, nx, ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      g.set_value(i, j, f(g.cell_center(i, j)));
    }
  }
  return g;
}

double Grid::cell_diagonal() const { return std::hypot(dx(), dy()); }

Complex Grid::cell_center(int i, int j) const {
  return {box_.x0 + (i + 0.5) * dx(), box_.y0 + (j + 0.5) * dy()};
}

bool Grid::masked(int i, int j) const { return std::isnan(value(i, j)); }

void Grid::mask(int i, int j) { set_value(i, j, kNaN); }

std::size_t Grid::masked_count() const {
  std::size_t count = 0;
  for (double v : values_) {
    if (std::isnan(v)) ++count;
  }
  return count;
}

Grid sample_potential(const ChargeConfiguration& cfg, BoundingBox box, int nx, int ny) {
  Grid g(box, nx, ny);
  const double mask_radius = 0.5 * g.cell_diagonal();
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Complex z = g.cell_center(i, j);
      double nearest = std::numeric_limits<double>::infinity();
      for (const RootEntry& e : cfg.charges.entries()) {
        nearest = std::min(nearest, std::abs(z - e.location));
      }
      if (nearest <= mask_radius) {
        g.mask(i, j);
      } else {
        double sum = 0.0;
        for (const RootEntry& e : cfg.charges.entries()) {
          sum += e.multiplicity * std::log(std::abs(z - e.location));
        }
        g.set_value(i, j, -sum / (2.0 * std::numbers::pi));
      }
    }
  }
  g.set_sources(cfg.charges.locations());
  return g;
}

std::vector<double> auto_levels(const Grid& g, int n) {
  if (n < 1) throw std::invalid_argument("auto_levels: n must be positive");
  std::vector<double> vals;
  vals.reserve(g.values().size());
  for (double v : g.values()) {
    if (!std::isnan(v)) vals.push_back(v);
  }
  if (static_cast<int>(vals.size()) < n) {
    throw TooFewSamples("auto_levels: fewer unmasked samples than requested levels");
  }
  std::sort(vals.begin(), vals.end());

  std::vector<double> levels(n);
  const double top = static_cast<double>(vals.size() - 1);
  for (int k = 1; k <= n; ++k) {
    const double h = top * k / (n + 1.0);
    const std::size_t lo = static_cast<std::size_t>(h);
    const double frac = h - lo;
    levels[k - 1] = lo + 1 < vals.size() ? vals[lo] + frac * (vals[lo + 1] - vals[lo]) : vals[lo];
  }
  for (int k = 1; k < n; ++k) {
    if (!(levels[k] > levels[k - 1])) {
      throw TooFewSamples("auto_levels: value distribution admits no strictly increasing levels");
    }
  }
  return levels;
}

namespace {

// Lattice edges carry the interpolated crossings; keying chains by edge
// identity makes matching exact (no coordinate quantization).
struct LevelTracer {
  const Grid& g;
  double level = 0.0;

  std::unordered_map<std::uint64_t, Complex> crossing;
  struct Segment {
    std::uint64_t e0, e1;
  };
  std::vector<Segment> segments;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge;

  explicit LevelTracer(const Grid& grid) : g(grid) {}

  std::uint64_t h_edge(int i, int j) const {
    return static_cast<std::uint64_t>(j) * (g.nx() - 1) + i;
  }
  std::uint64_t v_edge(int i, int j) const {
    const std::uint64_t offset = static_cast<std::uint64_t>(g.nx() - 1) * g.ny();
    return offset + static_cast<std::uint64_t>(j) * g.nx() + i;
  }

  Complex interpolate(Complex p0, double v0, Complex p1, double v1) const {
    const double t = (level - v0) / (v1 - v0);
    return p0 + t * (p1 - p0);
  }

  std::uint64_t cross_h(int i, int j) {
    const std::uint64_t key = h_edge(i, j);
    if (!crossing.count(key)) {
      crossing[key] = interpolate(g.cell_center(i, j), g.value(i, j), g.cell_center(i + 1, j),
                                  g.value(i + 1, j));
    }
    return key;
  }
  std::uint64_t cross_v(int i, int j) {
    const std::uint64_t key = v_edge(i, j);
    if (!crossing.count(key)) {
      crossing[key] = interpolate(g.cell_center(i, j), g.value(i, j), g.cell_center(i, j + 1),
                                  g.value(i, j + 1));
    }
    return key;
  }

  void emit(std::uint64_t e0, std::uint64_t e1) {
    by_edge[e0].push_back(segments.size());
    by_edge[e1].push_back(segments.size());
    segments.push_back({e0, e1});
  }

  void march_cell(int i, int j) {
    const double v00 = g.value(i, j), v10 = g.value(i + 1, j);
    const double v01 = g.value(i, j + 1), v11 = g.value(i + 1, j + 1);
    if (std::isnan(v00) || std::isnan(v10) || std::isnan(v01) || std::isnan(v11)) return;

    int idx = 0;
    if (v00 >= level) idx |= 1;
    if (v10 >= level) idx |= 2;
    if (v11 >= level) idx |= 4;
    if (v01 >= level) idx |= 8;
    if (idx == 0 || idx == 15) return;

    const auto bottom = [&] { return cross_h(i, j); };
    const auto top = [&] { return cross_h(i, j + 1); };
    const auto left = [&] { return cross_v(i, j); };
    const auto right = [&] { return cross_v(i + 1, j); };

    switch (idx) {
      case 1: case 14: emit(bottom(), left()); break;
      case 2: case 13: emit(bottom(), right()); break;
      case 3: case 12: emit(left(), right()); break;
      case 4: case 11: emit(top(), right()); break;
      case 6: case 9: emit(bottom(), top()); break;
      case 7: case 8: emit(left(), top()); break;
      case 5: {
        // Saddle: connect according to which side of the level the cell
        // center falls on.
        const double center = 0.25 * (v00 + v10 + v01 + v11);
        if (center >= level) {
          emit(bottom(), right());
          emit(left(), top());
        } else {
          emit(bottom(), left());
          emit(top(), right());
        }
        break;
      }
      case 10: {
        const double center = 0.25 * (v00 + v10 + v01 + v11);
        if (center >= level) {
          emit(bottom(), left());
          emit(top(), right());
        } else {
          emit(bottom(), right());
          emit(left(), top());
        }
        break;
      }
      default: break;
    }
  }

  std::size_t next_segment(std::uint64_t edge, std::size_t current,
                           const std::vector<bool>& used) const {
    auto it = by_edge.find(edge);
    if (it == by_edge.end()) return SIZE_MAX;
    for (std::size_t s : it->second) {
      if (s != current && !used[s]) return s;
    }
    return SIZE_MAX;
  }

  Polyline walk(std::size_t start, std::uint64_t start_edge, std::vector<bool>& used) const {
    Polyline poly;
    poly.push_back(crossing.at(start_edge));
    std::size_t seg = start;
    std::uint64_t edge = start_edge;
    while (seg != SIZE_MAX) {
      used[seg] = true;
      edge = segments[seg].e0 == edge ? segments[seg].e1 : segments[seg].e0;
      poly.push_back(crossing.at(edge));
      seg = next_segment(edge, seg, used);
    }
    return poly;
  }

  void extract(std::vector<Polyline>& out) {
    std::vector<bool> used(segments.size(), false);
    // Open chains first, walked from a free end; what remains are cycles.
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (used[s]) continue;
      const bool e0_free = by_edge.at(segments[s].e0).size() == 1;
      const bool e1_free = by_edge.at(segments[s].e1).size() == 1;
      if (e0_free) {
        out.push_back(walk(s, segments[s].e0, used));
      } else if (e1_free) {
        out.push_back(walk(s, segments[s].e1, used));
      }
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
      if (!used[s]) out.push_back(walk(s, segments[s].e0, used));
    }
  }
};

}  // namespace

std::vector<Polyline> contour_lines(const Grid& g, std::span<const double> levels) {
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!(levels[k] > levels[k - 1])) {
      throw std::invalid_argument("contour_lines: levels must be strictly increasing");
    }
  }
  std::vector<Polyline> out;
  for (double level : levels) {
    LevelTracer tracer(g);
    tracer.level = level;
    for (int j = 0; j + 1 < g.ny(); ++j) {
      for (int i = 0; i + 1 < g.nx(); ++i) {
        tracer.march_cell(i, j);
      }
    }
    tracer.extract(out);
  }
  return out;
}

double harmonicity_residual(const Grid& g) {
  if (g.nx() < 3 || g.ny() < 3) {
    throw std::invalid_argument("harmonicity_residual needs nx, ny >= 3");
  }
  const double inv_dx2 = 1.0 / (g.dx() * g.dx());
  const double inv_dy2 = 1.0 / (g.dy() * g.dy());
  const double clear_radius = 3.0 * g.cell_diagonal();

  double worst = 0.0;
  for (int j = 1; j + 1 < g.ny(); ++j) {
    for (int i = 1; i + 1 < g.nx(); ++i) {
      if (g.masked(i, j) || g.masked(i - 1, j) || g.masked(i + 1, j) || g.masked(i, j - 1) ||
          g.masked(i, j + 1)) {
        continue;
      }
      const Complex z = g.cell_center(i, j);
      bool near_source = false;
      for (Complex s : g.sources()) {
        if (std::abs(z - s) < clear_radius) {
          near_source = true;
          break;
        }
      }
      if (near_source) continue;
      const double lap = (g.value(i + 1, j) - 2.0 * g.value(i, j) + g.value(i - 1, j)) * inv_dx2 +
                         (g.value(i, j + 1) - 2.0 * g.value(i, j) + g.value(i, j - 1)) * inv_dy2;
      worst = std::max(worst, std::abs(lap));
    }
  }
  return worst;
}

namespace {

constexpr double kCanvasWidth = 800.0;

void append_num(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  out += buf;
}

}  // namespace

std::string render_svg_string(const Scene& scene) {
  require_box(scene.bbox);
  const double scale = kCanvasWidth / scene.bbox.width();
  const double height = scene.bbox.height() * scale;
  const auto px = [&](Complex z) {
    return Complex{(z.real() - scene.bbox.x0) * scale, (scene.bbox.y1 - z.imag()) * scale};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"";
  append_num(svg, height);
  svg += "\" viewBox=\"0 0 800 ";
  append_num(svg, height);
  svg += "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"";
  append_num(svg, height);
  svg += "\" fill=\"white\"/>\n";

  for (const Polyline& line : scene.contours) {
    if (line.size() < 2) continue;
    const bool closed = line.front() == line.back();
    const std::size_t count = closed ? line.size() - 1 : line.size();
    svg += "<path d=\"";
    for (std::size_t k = 0; k < count; ++k) {
      const Complex p = px(line[k]);
      svg += k == 0 ? "M " : " L ";
      append_num(svg, p.real());
      svg += ' ';
      append_num(svg, p.imag());
    }
    if (closed) svg += " Z";
    svg += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  const double mark_radius = 0.008 * kCanvasWidth;
  const auto circles = [&](const std::vector<Complex>& marks, const char* color) {
    for (Complex m : marks) {
      const Complex p = px(m);
      svg += "<circle cx=\"";
      append_num(svg, p.real());
      svg += "\" cy=\"";
      append_num(svg, p.imag());
      svg += "\" r=\"";
      append_num(svg, mark_radius);
      svg += "\" fill=\"";
      svg += color;
      svg += "\"/>\n";
    }
  };
  circles(scene.charge_marks, "red");
  circles(scene.critical_marks, "blue");

  svg += "</svg>\n";
  return svg;
}

void render_svg(const Scene& scene, const std::string& path) {
  const std::string svg = render_svg_string(scene);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("render_svg: cannot open output file: " + path);
  out.write(svg.data(), static_cast<std::streamsize>(svg.size()));
  out.flush();
  if (!out) throw IoFailure("render_svg: write failed: " + path);
}

void write_grid_csv(const Grid& g, std::ostream& out) {
  out << "x,y,value\n";
  char buf[96];
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (g.masked(i, j)) continue;
      const Complex z = g.cell_center(i, j);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", z.real(), z.imag(), g.value(i, j));
      out << buf;
    }
  }
}

BoundingBox default_figure_bbox(const ChargeConfiguration& cfg) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const RootEntry& e : cfg.charges.entries()) {
    xlo = std::min(xlo, e.location.real());
    xhi = std::max(xhi, e.location.real());
    ylo = std::min(ylo, e.location.imag());
    yhi = std::max(yhi, e.location.imag());
  }
  const double pad_x = xhi > xlo ? 0.4 * (xhi - xlo) : 1.0;
  const double pad_y = yhi > ylo ? 0.4 * (yhi - ylo) : 1.0;
  return {xlo - pad_x, ylo - pad_y, xhi + pad_x, yhi + pad_y};
}

}  // namespace gll
