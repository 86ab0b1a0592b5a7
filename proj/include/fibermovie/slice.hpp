#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fibermovie/angle.hpp"

namespace fibermovie {

enum class Column { Left, Right };

/// Left(i) is C_i (a meridian of braid strand i), Right(i) is C_i' (the return strand).
struct CircleLabel {
  Column column = Column::Left;
  int row = 1;

  static CircleLabel left(int row) { return {Column::Left, row}; }
  static CircleLabel right(int row) { return {Column::Right, row}; }
  std::string str() const { return (column == Column::Left ? "L" : "R") + std::to_string(row); }
  static CircleLabel parse(const std::string& text);

  friend bool operator==(const CircleLabel&, const CircleLabel&) = default;
  friend auto operator<=>(const CircleLabel&, const CircleLabel&) = default;
};

/// A boundary circle. The fibration restricted to it is theta(s) = phase + degree * s for s in [0,1),
/// s measured counterclockwise from the circle's east point.
struct Circle {
  CircleLabel label;
  int degree = 1;
  Rational phase;
  friend bool operator==(const Circle&, const Circle&) = default;
};

enum class MarkKind { LeafEndpoint, BoundaryMin, BoundaryMax };

struct MarkedPoint {
  CircleLabel circle;
  int rank = 0;  // cyclic position around the circle
  Angle theta;
  MarkKind kind = MarkKind::LeafEndpoint;
  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Which opposite germ pair bounds the outward regions.
///
/// Germs are numbered 0..3 counterclockwise and region k lies between germ k and germ k+1.
/// Regions 0 and 2 carry the leaves just below the singular value, regions 1 and 3 the leaves
/// just above it. Axis (0,2) makes regions 3 and 1 outward; axis (1,3) makes regions 0 and 2 outward.
enum class OutwardAxis { Germs02, Germs13 };

enum class Side { Below, Above };

struct XSingularity {
  int id = 0;
  Angle theta;
  std::vector<CircleLabel> germs;  // counterclockwise; well-formed iff exactly 4
  OutwardAxis outward_axis = OutwardAxis::Germs02;
  friend bool operator==(const XSingularity&, const XSingularity&) = default;
};

/// Side of the singular value (in theta) on which the outward regions lie.
inline Side outward_side(const XSingularity& x) {
  return x.outward_axis == OutwardAxis::Germs02 ? Side::Above : Side::Below;
}
inline OutwardAxis axis_for_outward(Side side) {
  return side == Side::Above ? OutwardAxis::Germs02 : OutwardAxis::Germs13;
}
inline Side opposite(Side s) { return s == Side::Above ? Side::Below : Side::Above; }

/// A maximal open theta-interval of regular values and the arcs of every leaf in it.
/// targets[i] is the right-column row joined to Left(i+1).
struct Chamber {
  ArcInterval span;
  std::vector<int> targets;
  int closed_leaves = 0;
  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// Combinatorial singular fibration on a planar slice: a sphere minus 2*rows disks arranged on a
/// two-column grid. Leaf arcs always join a left circle to a right circle.
struct SliceFibration {
  int rows = 0;
  std::vector<Circle> circles;
  std::vector<MarkedPoint> critical_marks;  // BoundaryMin / BoundaryMax only
  std::vector<XSingularity> xsings;         // sorted by theta
  std::vector<Chamber> chambers;            // in counterclockwise order
  std::vector<int> twist;                   // pending half-turns beneath rows 1..rows+1
  std::vector<int> pair_sign;               // sign of the rotation that created rows k, k+1
  int next_id = 0;

  friend bool operator==(const SliceFibration&, const SliceFibration&) = default;

  const XSingularity* find_xsing(int id) const;
  const Circle* find_circle(const CircleLabel& label) const;
};

struct Violation {
  std::string code;
  std::string element;
  std::string detail;
  bool warning = false;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const;
  bool has(const std::string& code) const;
  std::string summary() const;
};

/// One component of a regular leaf.
struct LeafComponent {
  bool closed = false;
  CircleLabel from;
  CircleLabel to;
  friend bool operator==(const LeafComponent&, const LeafComponent&) = default;
};

struct Region {
  int first_germ;
  int second_germ;
  friend bool operator==(const Region&, const Region&) = default;
};

struct Quadrants {
  std::array<Region, 2> outward;
  std::array<Region, 2> inward;
};

/// Embedded graph: half-edge h has twin h^1, rotation[h] is the next half-edge
/// counterclockwise around the same vertex.
struct CombinatorialMap {
  int vertex_count = 0;
  std::vector<int> rotation;
  std::vector<int> origin;

  int edge_count() const { return static_cast<int>(rotation.size()) / 2; }
  int face_count() const;
  int component_count() const;
};

SliceFibration empty_slice();
SliceFibration initial_annulus_fibration();

ValidationReport validate_slice(const SliceFibration& sf);

std::vector<Angle> singular_values(const SliceFibration& sf);
bool is_singular(const SliceFibration& sf, const Angle& theta);

const Chamber& chamber_at(const SliceFibration& sf, const Angle& theta);
std::vector<LeafComponent> regular_leaf(const SliceFibration& sf, const Angle& theta);

Quadrants quadrants(const XSingularity& x);

/// Leaf complex drawn from the boundary circles and every singular leaf (or one regular reference
/// leaf when there are none).
CombinatorialMap leaf_complex_map(const SliceFibration& sf);

/// Germs of the singularity separating two chambers whose targets differ on exactly two left rows.
std::optional<std::vector<CircleLabel>> transition_germs(const std::vector<int>& below,
                                                         const std::vector<int>& above);

/// Rebuilds xsings' theta order, ids untouched.
void sort_xsings(SliceFibration& sf);

}  // namespace fibermovie
