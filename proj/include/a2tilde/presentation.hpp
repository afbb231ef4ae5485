#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "a2tilde/plane.hpp"

namespace a2t {

using Triple = std::array<PointIndex, 3>;

// A set of point triples, cyclically closed, with at most one completion per
// ordered pair, presenting the group <x in P | xyz = e for (x,y,z) in T>.
// Stored triples are always the full cyclic closure, sorted.
class TrianglePresentation {
 public:
  TrianglePresentation(std::shared_ptr<const ProjectivePlane> plane,
                       PointLineCorrespondence lambda, std::vector<Triple> triples,
                       std::string label = "");

  const ProjectivePlane& plane() const { return *plane_; }
  std::shared_ptr<const ProjectivePlane> plane_ptr() const { return plane_; }
  const PointLineCorrespondence& correspondence() const { return lambda_; }
  const std::vector<Triple>& triples() const { return triples_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  int order() const { return plane_->order(); }
  int num_points() const { return plane_->num_points(); }

  // Points of the line lambda(x).
  const std::vector<PointIndex>& lambda(PointIndex x) const {
    return lambda_.lambda(*plane_, x);
  }
  bool in_lambda(PointIndex member, PointIndex x) const {
    return in_lambda_[static_cast<size_t>(x) * num_points() + member] != 0;
  }

  // The unique z with (x,y,z) in T, or -1. Meaningful only when the
  // presentation validates; an ambiguous pair keeps its first triple.
  PointIndex triple_completion(PointIndex x, PointIndex y) const {
    return completion_[static_cast<size_t>(x) * num_points() + y];
  }
  bool has_triple(const Triple& t) const;

  // Presentation with every triple reversed, over the transpose
  // correspondence; reversing a word swaps the two groups' elements.
  // Used to compute right normal forms with the left-form engine.
  const TrianglePresentation& reversed() const;

  bool same_group(const TrianglePresentation& other) const { return this == &other; }

 private:
  std::shared_ptr<const ProjectivePlane> plane_;
  PointLineCorrespondence lambda_;
  std::vector<Triple> triples_;
  std::string label_;
  std::vector<int16_t> completion_;  // x*n+y -> z or -1
  std::vector<uint8_t> in_lambda_;   // x*n+member
  mutable std::shared_ptr<const TrianglePresentation> reversed_;
};

struct PresentationViolation {
  std::string condition;  // "(i)", "(ii)", "(iii)", "lambda recovery"
  std::string witness;
};

// Exhaustive check of the triangle presentation conditions plus agreement of
// the incidence recovered from the triples with the stored correspondence.
std::vector<PresentationViolation> validate(const TrianglePresentation& tp);

// Cyclic closure and deduplication of a raw triple list.
std::vector<Triple> cyclic_closure(std::vector<Triple> triples);

// Line-oriented text format:
//   q <integer>
//   points <name> ...                       (q^2+q+1 names)
//   lambda <name>: <name> ... <name>        (one per point, q+1 names)
//   triples
//   <name> <name> <name>                    (one representative per cyclic class)
//   end
// '#' starts a comment. The loader applies cyclic closure and deduplicates.
TrianglePresentation parse_presentation(std::istream& in);
TrianglePresentation parse_presentation_text(const std::string& text);
TrianglePresentation load_presentation_file(const std::string& path);

// Canonical serialization: one lexicographically least representative per
// cyclic class, sorted; parse(serialize(tp)) == tp byte for byte.
std::string serialize(const TrianglePresentation& tp);

// Deterministic backtracking over the ordered incident pairs (x,y), assigning
// the third element of each triple subject to cyclic closure and uniqueness.
// Every emitted presentation validates cleanly. Stops after `limit` results.
// require_commuting_triple keeps only presentations containing three distinct
// pairwise commuting generators (detected combinatorially: both orientations
// of a triple present).
std::vector<TrianglePresentation> search_presentations(
    std::shared_ptr<const ProjectivePlane> plane, const PointLineCorrespondence& lambda,
    size_t limit, bool require_commuting_triple = false);

}  // namespace a2t
