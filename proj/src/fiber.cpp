#include "fibermovie/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fibermovie/error.hpp"

namespace fibermovie {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) n += find(i) == i;
    return n;
  }
};

int classes_of(int n, const std::vector<std::pair<int, int>>& joins) {
  DisjointSets ds(n);
  for (const auto& [a, b] : joins) ds.unite(a, b);
  return ds.classes();
}

std::set<Angle> excluded_angles(const Movie& m) {
  std::set<Angle> out;
  for (const auto& s : m.slices) {
    for (const auto& v : singular_values(s)) out.insert(v);
  }
  for (const auto& r : m.records) {
    out.insert(r.effects.cuts.begin(), r.effects.cuts.end());
    if (r.eta) out.insert(r.eta->endpoint);
  }
  return out;
}

}  // namespace

std::vector<Angle> sample_regular_angles(const Movie& m, int k) {
  if (k <= 0) return {};
  const std::set<Angle> excluded = excluded_angles(m);
  std::vector<Angle> out;
  if (excluded.empty()) {
    for (int i = 0; i < k; ++i) out.emplace_back(Rational(i, k));
    return out;
  }
  // (start, length) gaps between excluded angles; repeatedly bisect the largest.
  std::vector<std::pair<Angle, Rational>> gaps;
  const std::vector<Angle> cuts(excluded.begin(), excluded.end());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Rational len = Angle::forward_distance(cuts[i], cuts[(i + 1) % cuts.size()]);
    gaps.emplace_back(cuts[i], len == Rational(0) ? Rational(1) : len);
  }
  while (static_cast<int>(out.size()) < k) {
    auto it = std::max_element(gaps.begin(), gaps.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second < b.second;
      return b.first < a.first;  // earlier start wins ties
    });
    const Angle start = it->first;
    const Rational half = it->second / Rational(2);
    out.push_back(start + half);
    *it = {start, half};
    gaps.emplace_back(start + half, half);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiberSurface extract_fiber(const Movie& m, const Angle& theta) {
  for (const auto& s : m.slices) {
    if (is_singular(s, theta)) throw Error(ErrorCode::SingularAngle, "theta " + theta.str() + " is singular");
  }
  FiberSurface fs;
  fs.theta = theta;
  std::map<CircleLabel, int> track;
  auto add_arcs = [&](const std::vector<LeafComponent>& leaf) {
    for (const auto& c : leaf) {
      if (!c.closed) fs.arc_joins.emplace_back(track.at(c.from), track.at(c.to));
    }
  };
  fs.cross_sections.push_back(m.slices.empty() ? std::vector<LeafComponent>{} : regular_leaf(m.slices.front(), theta));

  for (std::size_t k = 0; k < m.records.size() && k + 1 < m.slices.size(); ++k) {
    const MoveRecord& rec = m.records[k];
    const SliceFibration& before = m.slices[k];
    const SliceFibration& after = m.slices[k + 1];
    const EffectKind kind = rec.effects.at(theta);
    if (kind != EffectKind::None) fs.events.push_back({kind, static_cast<int>(k)});

    switch (rec.kind) {
      case MoveKind::MeridionalStart:
      case MoveKind::MinMovie: {
        const int r = after.rows;
        track[CircleLabel::left(r)] = fs.tracks++;
        track[CircleLabel::right(r)] = fs.tracks++;
        fs.boundary_joins.emplace_back(track[CircleLabel::left(r)], track[CircleLabel::right(r)]);
        break;
      }
      case MoveKind::MaxMovie:
      case MoveKind::CapOff: {
        const int r = before.rows;
        fs.boundary_joins.emplace_back(track.at(CircleLabel::left(r)), track.at(CircleLabel::right(r)));
        track.erase(CircleLabel::left(r));
        track.erase(CircleLabel::right(r));
        break;
      }
      case MoveKind::CrossingMove:
        std::swap(track.at(CircleLabel::left(rec.index)), track.at(CircleLabel::left(rec.index + 1)));
        break;
      case MoveKind::RotationIsotopy:
      case MoveKind::BandMovie:
        break;
    }
    fs.cross_sections.push_back(regular_leaf(after, theta));
    add_arcs(fs.cross_sections.back());
  }
  return fs;
}

int euler_characteristic(const FiberSurface& fs) {
  int chi = 0;
  for (const auto& e : fs.events) {
    switch (e.kind) {
      case EffectKind::ArcBirth: chi += 1; break;
      case EffectKind::Saddle:
      case EffectKind::BoundaryMaxMark: chi -= 1; break;
      default: break;
    }
  }
  return chi;
}

int boundary_components(const FiberSurface& fs) { return classes_of(fs.tracks, fs.boundary_joins); }

int fiber_components(const FiberSurface& fs) {
  auto joins = fs.boundary_joins;
  joins.insert(joins.end(), fs.arc_joins.begin(), fs.arc_joins.end());
  return classes_of(fs.tracks, joins);
}

MorseProfile morse_profile(const FiberSurface& fs) {
  MorseProfile p;
  for (const auto& e : fs.events) {
    switch (e.kind) {
      case EffectKind::Saddle: ++p.interior_saddle; break;
      case EffectKind::ArcBirth:
      case EffectKind::BoundaryMinMark: ++p.boundary_min; break;
      case EffectKind::ArcDeath:
      case EffectKind::BoundaryMaxMark: ++p.boundary_max; break;
      case EffectKind::None: break;
    }
  }
  for (std::size_t k = 1; k < fs.cross_sections.size(); ++k) {
    auto closed = [](const std::vector<LeafComponent>& leaf) {
      return std::count_if(leaf.begin(), leaf.end(), [](const LeafComponent& c) { return c.closed; });
    };
    const auto delta = closed(fs.cross_sections[k]) - closed(fs.cross_sections[k - 1]);
    if (delta > 0) p.interior_min += static_cast<int>(delta);
    if (delta < 0) p.interior_max += static_cast<int>(-delta);
  }
  return p;
}

FiberSample sample_fiber(const Movie& m, const Angle& theta) {
  const FiberSurface fs = extract_fiber(m, theta);
  FiberSample s;
  s.theta = theta;
  s.chi = euler_characteristic(fs);
  s.boundary = boundary_components(fs);
  s.components = fiber_components(fs);
  if (s.components == 1) s.genus = (2 - s.chi - s.boundary) / 2;
  s.profile = morse_profile(fs);
  s.events = static_cast<int>(fs.events.size());
  return s;
}

namespace {

void summarize(FiberReport& r, const Movie& m) {
  r.braid = m.braid;
  r.oracle = classical_invariants(m.braid);
  const int b = m.braid.strands;
  const int c = m.braid.length();
  for (const auto& s : r.samples) {
    const auto& f = r.samples.front();
    if (s.chi != f.chi || s.boundary != f.boundary || s.components != f.components ||
        s.profile.interior_min != f.profile.interior_min || s.profile.interior_max != f.profile.interior_max ||
        s.profile.boundary_min != f.profile.boundary_min || s.profile.boundary_max != f.profile.boundary_max) {
      r.consistent = false;
    }
    if (s.chi != r.oracle.chi || s.boundary != r.oracle.components || s.components != 1 || s.genus != r.oracle.genus) {
      r.matches_oracle = false;
    }
    if (s.profile.interior_min != 0 || s.profile.interior_max != 0 || s.profile.boundary_min != b ||
        s.profile.boundary_max != b) {
      r.morse_statement = false;
    }
    if (s.profile.interior_saddle != b + c) r.saddle_count = false;
  }
}

}  // namespace

FiberReport fiber_report_serial(const Movie& m, int k) {
  FiberReport r;
  for (const auto& theta : sample_regular_angles(m, k)) r.samples.push_back(sample_fiber(m, theta));
  summarize(r, m);
  return r;
}

FiberReport fiber_report(const Movie& m, int k) {
  const auto angles = sample_regular_angles(m, k);
  FiberReport r;
  r.samples.resize(angles.size());
  const long n = static_cast<long>(angles.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) r.samples[i] = sample_fiber(m, angles[i]);
  summarize(r, m);
  return r;
}

}  // namespace fibermovie
