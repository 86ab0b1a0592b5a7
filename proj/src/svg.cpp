#include "fibermovie/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fibermovie/error.hpp"

namespace fibermovie {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(Point a, double k) { return {a.x * k, a.y * k}; }

Point unit(Point p) {
  const double n = std::hypot(p.x, p.y);
  return n < 1e-12 ? Point{0, 0} : p * (1.0 / n);
}

std::string num(double v) {
  if (std::fabs(v) < 0.005) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xy(Point p) { return num(p.x) + " " + num(p.y); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void open_svg(std::ostringstream& out, double size) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size) << "\" height=\""
      << num(size) << "\" viewBox=\"0 0 " << num(size) << ' ' << num(size) << "\">\n";
  out << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
         "<path d=\"M0 0 L8 4 L0 8 z\" fill=\"#c0392b\"/></marker></defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(size) << "\" height=\"" << num(size) << "\" fill=\"white\"/>\n";
}

class Layout {
 public:
  Layout(const SliceFibration& sf, const RenderStyle& style) : sf_(sf), style_(style) {
    const double usable = style.canvas * 0.7;
    pitch_ = sf.rows > 1 ? std::min(style.max_row_pitch, usable / (sf.rows - 1)) : style.max_row_pitch;
    radius_ = std::min(style.max_circle_radius, pitch_ / 3.0);
    top_ = style.canvas / 2 - pitch_ * (sf.rows - 1) / 2.0;
  }

  double radius() const { return radius_; }
  double pitch() const { return pitch_; }

  Point center(const CircleLabel& c) const {
    const double x = style_.canvas * (c.column == Column::Left ? 0.35 : 0.65);
    return {x, top_ + pitch_ * (c.row - 1)};
  }

  /// Outward unit normal at the point of circle `c` where the fibration takes value theta.
  Point normal(const CircleLabel& c, const Angle& theta) const {
    const Circle* circle = sf_.find_circle(c);
    const Rational phase = circle ? circle->phase : Rational(0);
    const int degree = circle ? circle->degree : 1;
    const Rational s = Angle(Rational(degree) * (theta.value() - phase)).value();
    const double a = 2 * std::numbers::pi * s.to_double();
    return {std::cos(a), -std::sin(a)};
  }

  Point on_circle(const CircleLabel& c, const Angle& theta) const {
    return center(c) + normal(c, theta) * radius_;
  }

  std::string arc_path(const CircleLabel& from, const CircleLabel& to, const Angle& theta) const {
    const Point p = on_circle(from, theta);
    const Point q = on_circle(to, theta);
    const double reach = pitch_ * 0.6;
    const Point c1 = p + normal(from, theta) * reach;
    const Point c2 = q + normal(to, theta) * reach;
    return "M" + xy(p) + " C" + xy(c1) + " " + xy(c2) + " " + xy(q);
  }

 private:
  const SliceFibration& sf_;
  const RenderStyle& style_;
  double pitch_ = 0;
  double radius_ = 0;
  double top_ = 0;
};

std::vector<Angle> regular_angles(const SliceFibration& sf, int n) {
  std::vector<Angle> out;
  for (int k = 0; k < n; ++k) {
    Angle a(Rational(2 * k + 1, 2 * n));
    for (int step = 1; is_singular(sf, a); ++step) a = a + Rational(1, 1000 * n * step);
    out.push_back(a);
  }
  return out;
}

}  // namespace

std::string render_slice_svg(const SliceFibration& sf, const RenderStyle& style) {
  const ValidationReport report = validate_slice(sf);
  if (!report.valid()) throw Error(ErrorCode::InvalidSlice, report.summary());
  const Layout layout(sf, style);
  std::ostringstream out;
  open_svg(out, style.canvas);

  out << "<g id=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  std::vector<Circle> circles = sf.circles;
  std::sort(circles.begin(), circles.end(), [](const Circle& a, const Circle& b) { return a.label < b.label; });
  for (const auto& c : circles) {
    const Point p = layout.center(c.label);
    out << "<circle data-label=\"" << c.label.str() << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
        << "\" r=\"" << num(layout.radius()) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"regular\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"0.8\">\n";
  if (sf.rows > 0) {
    for (const auto& theta : regular_angles(sf, style.regular_leaves)) {
      for (const auto& leaf : regular_leaf(sf, theta)) {
        if (leaf.closed) continue;
        out << "<path data-theta=\"" << theta << "\" d=\"" << layout.arc_path(leaf.from, leaf.to, theta) << "\"/>\n";
      }
    }
  }
  out << "</g>\n";

  out << "<g id=\"singular\" fill=\"none\" stroke=\"black\" stroke-width=\"3\">\n";
  for (const auto& x : sf.xsings) {
    const auto below_it = std::find_if(sf.chambers.begin(), sf.chambers.end(),
                                       [&](const Chamber& c) { return c.span.hi == x.theta; });
    if (below_it == sf.chambers.end()) throw Error(ErrorCode::InvalidSlice, "no chamber below a singularity");
    const Chamber& below = *below_it;
    std::vector<Point> germ_points;
    Point hub{0, 0};
    for (const auto& g : x.germs) {
      germ_points.push_back(layout.on_circle(g, x.theta));
      hub = hub + germ_points.back() * 0.25;
    }
    out << "<g data-id=\"" << x.id << "\" data-theta=\"" << x.theta << "\">\n";
    for (std::size_t k = 0; k < germ_points.size(); ++k) {
      const Point ctrl = germ_points[k] + layout.normal(x.germs[k], x.theta) * (layout.pitch() * 0.3);
      out << "<path d=\"M" << xy(hub) << " Q" << xy(ctrl) << " " << xy(germ_points[k]) << "\"/>\n";
    }
    for (int i = 1; i <= sf.rows; ++i) {
      const CircleLabel left = CircleLabel::left(i);
      if (std::find(x.germs.begin(), x.germs.end(), left) != x.germs.end()) continue;
      out << "<path d=\"" << layout.arc_path(left, CircleLabel::right(below.targets[i - 1]), x.theta) << "\"/>\n";
    }
    for (const auto& region : quadrants(x).outward) {
      const Point dir = unit(unit(germ_points[region.first_germ] - hub) + unit(germ_points[region.second_germ] - hub));
      out << "<path class=\"arrow\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#head)\" d=\"M"
          << xy(hub) << " L" << xy(hub + dir * style.arrow_length) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_fiber_svg(const FiberSurface& fs, const FiberSample& sample, const RenderStyle& style) {
  std::ostringstream out;
  open_svg(out, style.canvas);
  const double margin = 60;
  const double width = style.canvas - 2 * margin;
  const std::size_t columns = std::max<std::size_t>(fs.cross_sections.size(), 2);
  const double dx = width / static_cast<double>(columns - 1);
  const double base = style.canvas * 0.75;
  const double dy = 30;

  out << "<text x=\"" << num(margin) << "\" y=\"" << num(margin) << "\" font-family=\"monospace\" font-size=\"22\">"
      << escape("theta " + sample.theta.str() + "  chi " + std::to_string(sample.chi) + "  boundary " +
                std::to_string(sample.boundary) + "  genus " +
                (sample.genus ? std::to_string(*sample.genus) : std::string("-")))
      << "</text>\n";

  out << "<g id=\"cross-sections\" fill=\"#2c3e50\">\n";
  for (std::size_t k = 0; k < fs.cross_sections.size(); ++k) {
    const double x = margin + dx * static_cast<double>(k);
    for (std::size_t a = 0; a < fs.cross_sections[k].size(); ++a) {
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(base - dy * static_cast<double>(a)) << "\" r=\"4\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g id=\"events\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\">\n";
  for (const auto& e : fs.events) {
    const Point p{margin + dx * (e.record + 0.5), base + 60};
    out << "<g data-kind=\"" << to_string(e.kind) << "\" data-record=\"" << e.record << "\">";
    switch (e.kind) {
      case EffectKind::Saddle:
        out << "<path d=\"M" << xy(p + Point{-8, -8}) << " L" << xy(p + Point{8, 8}) << " M" << xy(p + Point{-8, 8})
            << " L" << xy(p + Point{8, -8}) << "\"/>";
        break;
      case EffectKind::ArcBirth:
        out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"8\"/>";
        break;
      case EffectKind::ArcDeath:
        out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"8\" fill=\"#c0392b\"/>";
        break;
      case EffectKind::BoundaryMinMark:
        out << "<path d=\"M" << xy(p + Point{-8, 8}) << " L" << xy(p + Point{0, -8}) << " L" << xy(p + Point{8, 8})
            << " z\"/>";
        break;
      case EffectKind::BoundaryMaxMark:
        out << "<path d=\"M" << xy(p + Point{-8, -8}) << " L" << xy(p + Point{0, 8}) << " L"
            << xy(p + Point{8, -8}) << " z\"/>";
        break;
      case EffectKind::None: break;
    }
    out << "</g>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

std::vector<Frame> movie_frames(const Movie& m, int per_segment) {
  if (per_segment < 1) throw Error(ErrorCode::PatternMismatch, "at least one frame per segment");
  std::vector<Frame> frames;
  for (std::size_t k = 0; k < m.records.size(); ++k) {
    const MoveRecord& r = m.records[k];
    const SliceFibration& before = m.slices.at(k);
    for (int i = 0; i < per_segment; ++i) {
      Frame f;
      f.t = r.t_begin + (r.t_end - r.t_begin) * Rational(i, per_segment);
      f.record = static_cast<int>(k);
      // Mid-crossing frames show the band already performed, before the strands trade places.
      f.slice = (i > 0 && r.kind == MoveKind::CrossingMove && r.eta) ? band_movie(before, *r.eta).first : before;
      frames.push_back(std::move(f));
    }
  }
  Frame last;
  last.t = m.records.empty() ? Rational(0) : m.records.back().t_end;
  last.slice = m.slices.back();
  frames.push_back(std::move(last));
  return frames;
}

std::string frame_summary(const std::vector<Frame>& frames) {
  std::ostringstream out;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const Frame& f = frames[k];
    int components = f.slice.rows;
    if (!f.slice.chambers.empty()) components += f.slice.chambers.front().closed_leaves;
    char index[16];
    std::snprintf(index, sizeof index, "%03zu", k);
    out << "frame " << index << " t " << f.t << " record " << f.record << " circles " << f.slice.circles.size()
        << " xsings " << f.slice.xsings.size() << " leaf_components " << components << '\n';
  }
  return out.str();
}

}  // namespace fibermovie
