#include "a2tilde/plane.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "a2tilde/graph.hpp"

namespace a2t {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

ProjectivePlane::ProjectivePlane(int order, std::vector<std::string> point_names,
                                 std::vector<Line> lines)
    : order_(order), point_names_(std::move(point_names)), lines_(std::move(lines)) {
  const int np = num_points();
  const int nl = num_lines();
  for (int l = 0; l < nl; ++l) {
    lines_[l].index = l;
    std::sort(lines_[l].points.begin(), lines_[l].points.end());
  }
  incidence_.assign(static_cast<size_t>(np) * nl, 0);
  lines_through_.assign(np, {});
  for (int l = 0; l < nl; ++l)
    for (PointIndex p : lines_[l].points) {
      if (p < 0 || p >= np) throw DomainError("line references unknown point");
      incidence_[static_cast<size_t>(p) * nl + l] = 1;
      lines_through_[p].push_back(l);
    }
  line_through_pair_.assign(static_cast<size_t>(np) * np, -1);
  for (int l = 0; l < nl; ++l)
    for (PointIndex p : lines_[l].points)
      for (PointIndex r : lines_[l].points)
        if (p != r) line_through_pair_[static_cast<size_t>(p) * np + r] = l;
  meet_table_.assign(static_cast<size_t>(nl) * nl, -1);
  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2) {
      if (l1 == l2) continue;
      for (PointIndex p : lines_[l1].points)
        if (incident(p, l2)) {
          meet_table_[static_cast<size_t>(l1) * nl + l2] = p;
          break;
        }
    }
}

PointIndex ProjectivePlane::meet(LineIndex l1, LineIndex l2) const {
  if (l1 == l2) throw PreconditionError("meet of a line with itself is ambiguous");
  int p = meet_table_[static_cast<size_t>(l1) * num_lines() + l2];
  if (p < 0) throw DomainError("lines do not meet; plane is not projective");
  return p;
}

LineIndex ProjectivePlane::line_through(PointIndex p1, PointIndex p2) const {
  if (p1 == p2) throw PreconditionError("line through a repeated point is ambiguous");
  int l = line_through_pair_[static_cast<size_t>(p1) * num_points() + p2];
  if (l < 0) throw DomainError("points lie on no common line; plane is not projective");
  return l;
}

PointIndex ProjectivePlane::point_by_name(const std::string& name) const {
  for (int p = 0; p < num_points(); ++p)
    if (point_names_[p] == name) return p;
  return -1;
}

LineIndex ProjectivePlane::line_by_points(const std::vector<PointIndex>& pts) const {
  std::vector<PointIndex> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  for (const Line& l : lines_)
    if (l.points == sorted) return l.index;
  return -1;
}

ProjectivePlane build_desarguesian_plane(int q) {
  if (q == 1) {
    std::vector<std::string> names = {"a0", "a1", "a2"};
    std::vector<Line> lines(3);
    lines[0].points = {0, 1};
    lines[1].points = {0, 2};
    lines[2].points = {1, 2};
    return ProjectivePlane(1, std::move(names), std::move(lines));
  }
  if (!is_prime(q))
    throw UnsupportedOrderError("plane order must be prime (or 1); got " +
                                std::to_string(q));

  // Homogeneous coordinates over F_q, normalized so the first nonzero
  // coordinate is 1, ordered lexicographically. Lines use the same
  // coordinate list as dual vectors.
  std::vector<std::array<int, 3>> coords;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        std::array<int, 3> v = {x, y, z};
        int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (lead != 1) continue;  // keeps exactly one representative per ray
        coords.push_back(v);
      }
  std::sort(coords.begin(), coords.end());
  const int n = static_cast<int>(coords.size());  // q^2+q+1

  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));

  std::vector<Line> lines(n);
  for (int l = 0; l < n; ++l)
    for (int p = 0; p < n; ++p) {
      int dot = coords[l][0] * coords[p][0] + coords[l][1] * coords[p][1] +
                coords[l][2] * coords[p][2];
      if (dot % q == 0) lines[l].points.push_back(p);
    }
  return ProjectivePlane(q, std::move(names), std::move(lines));
}

std::vector<PlaneViolation> validate_plane(const ProjectivePlane& plane) {
  std::vector<PlaneViolation> out;
  const int q = plane.order();
  const int n = q * q + q + 1;
  auto point_label = [&](PointIndex p) { return plane.point_name(p); };

  if (plane.num_points() != n)
    out.push_back({"point count", "expected " + std::to_string(n) + ", got " +
                                      std::to_string(plane.num_points())});
  if (plane.num_lines() != n)
    out.push_back({"line count", "expected " + std::to_string(n) + ", got " +
                                     std::to_string(plane.num_lines())});

  for (const Line& l : plane.lines())
    if (static_cast<int>(l.points.size()) != q + 1)
      out.push_back({"line size", "line " + std::to_string(l.index) + " has " +
                                      std::to_string(l.points.size()) + " points"});

  for (int p = 0; p < plane.num_points(); ++p)
    if (static_cast<int>(plane.lines_through(p).size()) != q + 1)
      out.push_back({"point degree", point_label(p) + " lies on " +
                                         std::to_string(plane.lines_through(p).size()) +
                                         " lines"});

  for (int p1 = 0; p1 < plane.num_points(); ++p1)
    for (int p2 = p1 + 1; p2 < plane.num_points(); ++p2) {
      int common = 0;
      for (int l = 0; l < plane.num_lines(); ++l)
        if (plane.incident(p1, l) && plane.incident(p2, l)) ++common;
      if (common != 1)
        out.push_back({"point pair", point_label(p1) + "," + point_label(p2) +
                                         " lie on " + std::to_string(common) +
                                         " common lines"});
    }

  for (int l1 = 0; l1 < plane.num_lines(); ++l1)
    for (int l2 = l1 + 1; l2 < plane.num_lines(); ++l2) {
      int common = 0;
      for (PointIndex p : plane.line(l1).points)
        if (plane.incident(p, l2)) ++common;
      if (common != 1)
        out.push_back({"line intersection", std::to_string(l1) + "," +
                                                std::to_string(l2) + " share " +
                                                std::to_string(common) + " points"});
    }
  return out;
}

PointLineCorrespondence::PointLineCorrespondence(const ProjectivePlane& plane,
                                                 std::vector<LineIndex> point_to_line)
    : point_to_line_(std::move(point_to_line)) {
  const int n = plane.num_points();
  if (static_cast<int>(point_to_line_.size()) != n)
    throw DomainError("correspondence must map every point");
  line_to_point_.assign(plane.num_lines(), -1);
  for (int p = 0; p < n; ++p) {
    LineIndex l = point_to_line_[p];
    if (l < 0 || l >= plane.num_lines())
      throw DomainError("correspondence maps to unknown line");
    if (line_to_point_[l] != -1)
      throw DomainError("correspondence is not a bijection: line " +
                        std::to_string(l) + " hit twice");
    line_to_point_[l] = p;
  }
}

std::vector<int> perfect_difference_set(int q) {
  const int n = q * q + q + 1;
  const int k = q + 1;
  std::vector<int> set = {0};
  std::vector<uint8_t> used(n, 0);  // nonzero differences covered so far

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(set.size()) == k) return true;
    for (int c = set.back() + 1; c < n; ++c) {
      std::vector<int> diffs;
      bool ok = true;
      for (int d : set) {
        int d1 = ((c - d) % n + n) % n;
        int d2 = ((d - c) % n + n) % n;
        if (used[d1] || used[d2] || d1 == d2) {
          ok = false;
          break;
        }
        diffs.push_back(d1);
        diffs.push_back(d2);
      }
      if (!ok) continue;
      for (int d : diffs) used[d] = 1;
      set.push_back(c);
      if (extend()) return true;
      set.pop_back();
      for (int d : diffs) used[d] = 0;
    }
    return false;
  };

  if (!extend())
    throw UnsupportedOrderError("no perfect difference set mod " + std::to_string(n));
  return set;
}

namespace {

// Incidence graph of the plane with points on the left.
BipartiteGraph incidence_graph(const ProjectivePlane& plane) {
  BipartiteGraph g;
  g.right_size = plane.num_lines();
  g.left_adj.resize(plane.num_points());
  for (int p = 0; p < plane.num_points(); ++p) {
    g.left_adj[p] = plane.lines_through(p);
    std::sort(g.left_adj[p].begin(), g.left_adj[p].end());
  }
  return g;
}

void enumerate_singer(const ProjectivePlane& plane,
                      const std::function<bool(const PointLineCorrespondence&)>& cb) {
  const int q = plane.order();
  const int n = plane.num_points();
  std::vector<int> ds;
  if (q == 1) {
    ds = {0, 1};  // lines of the triangle geometry are {j, j+1} mod 3
  } else {
    ds = perfect_difference_set(q);
  }

  // Difference-set model: point i, line j = { d + j mod n : d in D }.
  BipartiteGraph model;
  model.right_size = n;
  model.left_adj.resize(n);
  for (int j = 0; j < n; ++j)
    for (int d : ds) model.left_adj[(d + j) % n].push_back(j);
  for (auto& adj : model.left_adj) std::sort(adj.begin(), adj.end());

  auto iso = bipartite_isomorphism(model, incidence_graph(plane));
  if (!iso) throw DomainError("plane is not isomorphic to its cyclic model");

  // Shift correspondences: model point i -> model line i+k, pulled back.
  for (int k = 0; k < n; ++k) {
    std::vector<LineIndex> map(n, -1);
    for (int i = 0; i < n; ++i) map[iso->left_map[i]] = iso->right_map[(i + k) % n];
    PointLineCorrespondence corr(plane, std::move(map));
    if (!cb(corr)) return;
  }
}

}  // namespace

void enumerate_correspondences(
    const ProjectivePlane& plane, CorrespondenceFamily family,
    const std::function<bool(const PointLineCorrespondence&)>& callback,
    bool allow_large) {
  if (family == CorrespondenceFamily::kSinger) {
    enumerate_singer(plane, callback);
    return;
  }
  if (plane.order() >= 3 && !allow_large)
    throw ResourceLimitError(
        "full bijection enumeration needs (q^2+q+1)! steps; pass the override "
        "flag to force it");
  std::vector<LineIndex> perm(plane.num_lines());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    PointLineCorrespondence corr(plane, perm);
    if (!callback(corr)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace a2t
