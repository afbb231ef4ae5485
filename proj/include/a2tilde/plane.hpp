#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "a2tilde/errors.hpp"

namespace a2t {

using PointIndex = int;
using LineIndex = int;

struct Line {
  LineIndex index = -1;
  std::vector<PointIndex> points;  // sorted ascending, size q+1
};

// Finite projective plane of order q: q^2+q+1 points and lines, q+1 points
// per line, any two distinct lines meeting in exactly one point. The case
// q = 1 is the degenerate triangle geometry (3 points, 3 two-point lines).
class ProjectivePlane {
 public:
  ProjectivePlane(int order, std::vector<std::string> point_names,
                  std::vector<Line> lines);

  int order() const { return order_; }
  int num_points() const { return static_cast<int>(point_names_.size()); }
  int num_lines() const { return static_cast<int>(lines_.size()); }

  const std::string& point_name(PointIndex p) const { return point_names_[p]; }
  const std::vector<std::string>& point_names() const { return point_names_; }
  const Line& line(LineIndex l) const { return lines_[l]; }
  const std::vector<Line>& lines() const { return lines_; }

  bool incident(PointIndex p, LineIndex l) const {
    return incidence_[static_cast<size_t>(p) * lines_.size() + l] != 0;
  }
  const std::vector<LineIndex>& lines_through(PointIndex p) const {
    return lines_through_[p];
  }

  // Unique common point of two distinct lines.
  PointIndex meet(LineIndex l1, LineIndex l2) const;
  // Unique line through two distinct points.
  LineIndex line_through(PointIndex p1, PointIndex p2) const;

  PointIndex point_by_name(const std::string& name) const;  // -1 if absent
  LineIndex line_by_points(const std::vector<PointIndex>& pts) const;  // -1 if absent

 private:
  int order_;
  std::vector<std::string> point_names_;
  std::vector<Line> lines_;
  std::vector<uint8_t> incidence_;             // point * num_lines + line
  std::vector<std::vector<LineIndex>> lines_through_;
  std::vector<int> line_through_pair_;         // p1 * n + p2 -> line, -1 on diag
  std::vector<int> meet_table_;                // l1 * n + l2 -> point, -1 on diag
};

// Coordinate plane PG(2,q) for prime q, with points and lines ordered
// lexicographically on normalized homogeneous coordinates. q = 1 yields the
// degenerate triangle geometry. Non-prime orders are rejected.
ProjectivePlane build_desarguesian_plane(int q);

struct PlaneViolation {
  std::string condition;  // e.g. "point count", "line size", "line intersection"
  std::string witness;
};

// Empty iff all projective plane axioms hold for the stated order.
std::vector<PlaneViolation> validate_plane(const ProjectivePlane& plane);

// Bijection point -> line (the correspondence pairing each generator with
// the line that indexes its inverse-side relations).
class PointLineCorrespondence {
 public:
  PointLineCorrespondence(const ProjectivePlane& plane,
                          std::vector<LineIndex> point_to_line);

  LineIndex line_of(PointIndex p) const { return point_to_line_[p]; }
  PointIndex point_of(LineIndex l) const { return line_to_point_[l]; }
  const std::vector<LineIndex>& mapping() const { return point_to_line_; }

  // Points of the line lambda(p).
  const std::vector<PointIndex>& lambda(const ProjectivePlane& plane,
                                        PointIndex p) const {
    return plane.line(point_to_line_[p]).points;
  }

 private:
  std::vector<LineIndex> point_to_line_;
  std::vector<PointIndex> line_to_point_;
};

enum class CorrespondenceFamily { kSinger, kAll };

// Deterministic enumeration of point-line correspondences. family=kAll walks
// every bijection in lexicographic order and is refused for q >= 3 unless
// allow_large is set (13! and beyond). family=kSinger yields the cyclic-shift
// correspondences of a difference-set labelling of the plane, pulled back
// through a fixed incidence isomorphism.
//
// The callback returns false to stop the enumeration early.
void enumerate_correspondences(
    const ProjectivePlane& plane, CorrespondenceFamily family,
    const std::function<bool(const PointLineCorrespondence&)>& callback,
    bool allow_large = false);

// Lexicographically least perfect difference set mod q^2+q+1 with q+1
// elements (exists for prime q; found by backtracking).
std::vector<int> perfect_difference_set(int q);

}  // namespace a2t
