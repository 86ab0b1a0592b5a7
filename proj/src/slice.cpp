#include "fibermovie/slice.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fibermovie/error.hpp"

namespace fibermovie {

CircleLabel CircleLabel::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'L' && text[0] != 'R')) {
    throw Error(ErrorCode::ParseError, "bad circle label '" + text + "'");
  }
  int row = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), row);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || row < 1) {
    throw Error(ErrorCode::ParseError, "bad circle label '" + text + "'");
  }
  return {text[0] == 'L' ? Column::Left : Column::Right, row};
}

const XSingularity* SliceFibration::find_xsing(int id) const {
  for (const auto& x : xsings) {
    if (x.id == id) return &x;
  }
  return nullptr;
}

const Circle* SliceFibration::find_circle(const CircleLabel& label) const {
  for (const auto& c : circles) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

bool ValidationReport::valid() const {
  return std::none_of(violations.begin(), violations.end(), [](const Violation& v) { return !v.warning; });
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << (v.warning ? "warning " : "error ") << v.code << " [" << v.element << "] " << v.detail << "\n";
  }
  return os.str();
}

SliceFibration empty_slice() { return SliceFibration{}; }

SliceFibration initial_annulus_fibration() {
  SliceFibration sf;
  sf.rows = 1;
  sf.circles = {{CircleLabel::left(1), 1, Rational(0)}, {CircleLabel::right(1), -1, Rational(0)}};
  sf.chambers = {{ArcInterval{Angle(), Angle()}, {1}, 0}};
  sf.twist = {0, 0};
  sf.pair_sign = {};
  return sf;
}

void sort_xsings(SliceFibration& sf) {
  std::stable_sort(sf.xsings.begin(), sf.xsings.end(),
                   [](const XSingularity& a, const XSingularity& b) { return a.theta < b.theta; });
}

std::vector<Angle> singular_values(const SliceFibration& sf) {
  std::set<Angle> values;
  for (const auto& x : sf.xsings) values.insert(x.theta);
  for (const auto& m : sf.critical_marks) values.insert(m.theta);
  return {values.begin(), values.end()};
}

bool is_singular(const SliceFibration& sf, const Angle& theta) {
  for (const auto& x : sf.xsings) {
    if (x.theta == theta) return true;
  }
  for (const auto& m : sf.critical_marks) {
    if (m.theta == theta) return true;
  }
  return false;
}

const Chamber& chamber_at(const SliceFibration& sf, const Angle& theta) {
  if (sf.chambers.empty()) throw Error(ErrorCode::InvalidSlice, "slice has no chambers");
  if (sf.chambers.size() == 1) return sf.chambers.front();
  for (const auto& c : sf.chambers) {
    if (c.span.contains(theta)) return c;
  }
  throw Error(ErrorCode::SingularAngle, "theta " + theta.str() + " is a singular value");
}

std::vector<LeafComponent> regular_leaf(const SliceFibration& sf, const Angle& theta) {
  if (is_singular(sf, theta)) {
    throw Error(ErrorCode::SingularAngle, "theta " + theta.str() + " is a singular value");
  }
  std::vector<LeafComponent> out;
  if (sf.rows == 0) return out;
  const Chamber& c = chamber_at(sf, theta);
  for (int i = 0; i < sf.rows; ++i) {
    out.push_back({false, CircleLabel::left(i + 1), CircleLabel::right(c.targets[i])});
  }
  for (int k = 0; k < c.closed_leaves; ++k) out.push_back({true, {}, {}});
  return out;
}

Quadrants quadrants(const XSingularity& x) {
  if (x.germs.size() != 4) {
    throw Error(ErrorCode::MalformedSingularity,
                "singularity " + std::to_string(x.id) + " has " + std::to_string(x.germs.size()) + " germs");
  }
  const std::array<Region, 2> even{Region{0, 1}, Region{2, 3}};
  const std::array<Region, 2> odd{Region{3, 0}, Region{1, 2}};
  if (x.outward_axis == OutwardAxis::Germs02) return {odd, even};
  return {even, odd};
}

std::optional<std::vector<CircleLabel>> transition_germs(const std::vector<int>& below,
                                                         const std::vector<int>& above) {
  if (below.size() != above.size()) return std::nullopt;
  std::vector<int> diff;
  for (std::size_t i = 0; i < below.size(); ++i) {
    if (below[i] != above[i]) diff.push_back(static_cast<int>(i));
  }
  if (diff.size() != 2) return std::nullopt;
  const int a = diff[0];
  const int c = diff[1];
  if (above[a] != below[c] || above[c] != below[a]) return std::nullopt;
  return std::vector<CircleLabel>{CircleLabel::left(a + 1), CircleLabel::right(below[a]),
                                  CircleLabel::left(c + 1), CircleLabel::right(below[c])};
}

namespace {

bool is_permutation_of_rows(const std::vector<int>& t, int rows) {
  if (static_cast<int>(t.size()) != rows) return false;
  std::vector<bool> seen(rows + 1, false);
  for (int v : t) {
    if (v < 1 || v > rows || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool same_germs_up_to_half_turn(const std::vector<CircleLabel>& a, const std::vector<CircleLabel>& b) {
  if (a == b) return true;
  return a.size() == 4 && b.size() == 4 && a[0] == b[2] && a[1] == b[3] && a[2] == b[0] && a[3] == b[1];
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int CombinatorialMap::face_count() const {
  const int n = static_cast<int>(rotation.size());
  std::vector<bool> seen(n, false);
  int faces = 0;
  for (int h = 0; h < n; ++h) {
    if (seen[h]) continue;
    ++faces;
    for (int g = h; !seen[g]; g = rotation[g ^ 1]) seen[g] = true;
  }
  return faces;
}

int CombinatorialMap::component_count() const {
  UnionFind uf(vertex_count);
  for (std::size_t h = 0; h + 1 < origin.size(); h += 2) uf.unite(origin[h], origin[h + 1]);
  std::set<int> roots;
  for (int v = 0; v < vertex_count; ++v) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

CombinatorialMap leaf_complex_map(const SliceFibration& sf) {
  CombinatorialMap map;
  if (sf.rows == 0) return map;

  std::vector<Angle> values;
  for (const auto& x : sf.xsings) values.push_back(x.theta);
  for (const auto& m : sf.critical_marks) values.push_back(m.theta);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const bool reference_only = values.empty();
  if (reference_only) values.push_back(Angle());

  // Circle point vertices: point_vertex[circle][value index].
  const int nc = static_cast<int>(sf.circles.size());
  const int nv = static_cast<int>(values.size());
  std::map<CircleLabel, int> circle_index;
  for (int c = 0; c < nc; ++c) circle_index[sf.circles[c].label] = c;
  auto point_vertex = [&](int c, int k) { return c * nv + k; };
  map.vertex_count = nc * nv;

  // Per vertex, the half-edges in counterclockwise order.
  std::vector<std::vector<int>> around(nc * nv);
  std::vector<int> origin;
  auto add_edge = [&](int u, int v) {
    const int h = static_cast<int>(origin.size());
    origin.push_back(u);
    origin.push_back(v);
    return h;
  };

  // Circle edges: slots per point are [toward cw-previous, leaf..., toward ccw-next].
  std::vector<int> prev_half(nc * nv), next_half(nc * nv);
  for (int c = 0; c < nc; ++c) {
    const Circle& circ = sf.circles[c];
    std::vector<std::pair<Rational, int>> order;
    for (int k = 0; k < nv; ++k) {
      const Rational s = circ.degree > 0 ? Angle::forward_distance(Angle(circ.phase), values[k])
                                         : Angle::forward_distance(values[k], Angle(circ.phase));
      order.emplace_back(s, k);
    }
    std::sort(order.begin(), order.end());
    for (int i = 0; i < nv; ++i) {
      const int from = point_vertex(c, order[i].second);
      const int to = point_vertex(c, order[(i + 1) % nv].second);
      const int h = add_edge(from, to);
      next_half[from] = h;
      prev_half[to] = h + 1;
    }
  }

  std::vector<std::vector<int>> leaf_halves(nc * nv);
  for (int k = 0; k < nv; ++k) {
    const Angle& v = values[k];
    std::set<CircleLabel> used;
    const XSingularity* xs = nullptr;
    for (const auto& x : sf.xsings) {
      if (x.theta == v) xs = &x;
    }
    if (xs != nullptr && xs->germs.size() == 4) {
      const int xv = map.vertex_count++;
      around.emplace_back();
      for (const auto& g : xs->germs) {
        auto it = circle_index.find(g);
        if (it == circle_index.end()) continue;
        const int pv = point_vertex(it->second, k);
        const int h = add_edge(xv, pv);
        around[xv].push_back(h);
        leaf_halves[pv].push_back(h + 1);
        used.insert(g);
      }
    }
    // Remaining arcs follow the chamber just below v (or the reference chamber).
    const Chamber* below = nullptr;
    if (reference_only || sf.chambers.size() == 1) {
      below = &sf.chambers.front();
    } else {
      for (const auto& c : sf.chambers) {
        if (c.span.hi == v) below = &c;
      }
    }
    if (below == nullptr) continue;
    for (int i = 0; i < sf.rows && i < static_cast<int>(below->targets.size()); ++i) {
      const CircleLabel l = CircleLabel::left(i + 1);
      const CircleLabel r = CircleLabel::right(below->targets[i]);
      if (used.count(l) || used.count(r)) continue;
      auto li = circle_index.find(l);
      auto ri = circle_index.find(r);
      if (li == circle_index.end() || ri == circle_index.end()) continue;
      const int lv = point_vertex(li->second, k);
      const int rv = point_vertex(ri->second, k);
      const int h = add_edge(lv, rv);
      leaf_halves[lv].push_back(h);
      leaf_halves[rv].push_back(h + 1);
    }
  }

  around.resize(map.vertex_count);
  for (int p = 0; p < nc * nv; ++p) {
    around[p].push_back(prev_half[p]);
    for (int h : leaf_halves[p]) around[p].push_back(h);
    around[p].push_back(next_half[p]);
  }
  map.origin = origin;
  map.rotation.assign(origin.size(), -1);
  for (const auto& ring : around) {
    for (std::size_t i = 0; i < ring.size(); ++i) map.rotation[ring[i]] = ring[(i + 1) % ring.size()];
  }
  return map;
}

ValidationReport validate_slice(const SliceFibration& sf) {
  ValidationReport report;
  auto fail = [&](std::string code, std::string element, std::string detail, bool warning = false) {
    report.violations.push_back({std::move(code), std::move(element), std::move(detail), warning});
  };

  if (sf.rows < 0) {
    fail("BadRowCount", "slice", "negative row count");
    return report;
  }
  if (sf.rows == 0) {
    if (!sf.circles.empty() || !sf.xsings.empty() || !sf.chambers.empty()) {
      fail("NonEmptyCap", "slice", "a slice without rows must be empty");
    }
    return report;
  }

  // Boundary circles: one Left(+1) and one Right(-1) per row.
  std::set<CircleLabel> labels;
  for (const auto& c : sf.circles) {
    if (!labels.insert(c.label).second) fail("DuplicateCircle", c.label.str(), "label repeated");
    if (c.label.row < 1 || c.label.row > sf.rows) fail("CircleOutOfGrid", c.label.str(), "row outside grid");
    const int expected = c.label.column == Column::Left ? 1 : -1;
    if (c.degree != expected) fail("BoundaryDegree", c.label.str(), "circle map has wrong degree");
  }
  for (int r = 1; r <= sf.rows; ++r) {
    if (!labels.count(CircleLabel::left(r))) fail("MissingCircle", CircleLabel::left(r).str(), "absent");
    if (!labels.count(CircleLabel::right(r))) fail("MissingCircle", CircleLabel::right(r).str(), "absent");
  }
  if (static_cast<int>(sf.twist.size()) != sf.rows + 1) fail("BadTwist", "slice", "twist table size");
  if (static_cast<int>(sf.pair_sign.size()) != sf.rows - 1) fail("BadPairSigns", "slice", "pair sign table size");

  // Boundary critical marks come in min/max pairs on each circle.
  std::map<CircleLabel, int> balance;
  for (const auto& m : sf.critical_marks) {
    if (!labels.count(m.circle)) fail("DanglingMark", m.circle.str(), "mark on missing circle");
    if (m.kind == MarkKind::BoundaryMin) ++balance[m.circle];
    if (m.kind == MarkKind::BoundaryMax) --balance[m.circle];
    if (m.kind == MarkKind::LeafEndpoint) fail("StoredEndpoint", m.circle.str(), "leaf endpoints are implicit");
  }
  for (const auto& [label, b] : balance) {
    if (b != 0) fail("UnbalancedBoundaryCritical", label.str(), "boundary minima and maxima differ");
  }

  // Singularities.
  std::set<int> ids;
  for (std::size_t i = 0; i < sf.xsings.size(); ++i) {
    const auto& x = sf.xsings[i];
    const std::string el = "x" + std::to_string(x.id);
    if (!ids.insert(x.id).second) fail("DuplicateSingularity", el, "id repeated");
    if (x.germs.size() != 4) {
      fail("MalformedSingularity", el, std::to_string(x.germs.size()) + " germs");
      continue;
    }
    for (int g = 0; g < 4; ++g) {
      if (!labels.count(x.germs[g])) fail("DanglingGerm", el, x.germs[g].str());
      const Column want = (g % 2 == 0) ? x.germs[0].column : (x.germs[0].column == Column::Left ? Column::Right : Column::Left);
      if (x.germs[g].column != want) fail("MalformedSingularity", el, "germs must alternate columns");
    }
    if (i > 0 && !(sf.xsings[i - 1].theta < x.theta)) {
      fail("SingularityOrder", el, "singular values must be distinct and sorted");
    }
  }

  // Chambers partition the regular values.
  const auto values = singular_values(sf);
  if (values.empty()) {
    if (sf.chambers.size() != 1) fail("ChamberPartition", "chambers", "expected a single chamber");
  } else if (sf.chambers.size() != values.size()) {
    fail("ChamberPartition", "chambers", "chamber count differs from singular value count");
  } else {
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto& c = sf.chambers[k];
      if (!(c.span.lo == values[k]) || !(c.span.hi == values[(k + 1) % values.size()])) {
        fail("ChamberPartition", "chamber" + std::to_string(k), "span does not match singular values");
      }
    }
  }
  for (std::size_t k = 0; k < sf.chambers.size(); ++k) {
    const auto& c = sf.chambers[k];
    const std::string el = "chamber" + std::to_string(k);
    if (!is_permutation_of_rows(c.targets, sf.rows)) {
      fail("ImproperLeaf", el, "leaf arcs must use every boundary point exactly once");
    }
    if (c.closed_leaves > 0) fail("CircleLeaf", el, "closed leaf component", true);
  }
  if (!report.valid()) return report;

  // Transitions across every singular value.
  if (values.size() > 0 && sf.chambers.size() == values.size()) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      const auto& below = sf.chambers[(k + values.size() - 1) % values.size()];
      const auto& above = sf.chambers[k];
      const XSingularity* xs = nullptr;
      for (const auto& x : sf.xsings) {
        if (x.theta == values[k]) xs = &x;
      }
      if (xs == nullptr) {
        if (below.targets != above.targets) {
          fail("UnexplainedTransition", values[k].str(), "leaf changes without a singularity");
        }
        continue;
      }
      const auto germs = transition_germs(below.targets, above.targets);
      if (!germs || !same_germs_up_to_half_turn(*germs, xs->germs)) {
        fail("SingularityMismatch", "x" + std::to_string(xs->id),
             "germs do not match the band surgery between adjacent chambers");
      }
    }
  }

  const auto map = leaf_complex_map(sf);
  if (map.vertex_count - map.edge_count() + map.face_count() != 2 * map.component_count()) {
    fail("NonPlanarLeafComplex", "leaf_complex", "Euler characteristic of the leaf complex is not planar");
  }
  return report;
}

}  // namespace fibermovie
