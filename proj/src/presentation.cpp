#include "a2tilde/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

namespace a2t {

namespace {

Triple least_rotation(const Triple& t) {
  Triple a = t;
  Triple b = {t[1], t[2], t[0]};
  Triple c = {t[2], t[0], t[1]};
  return std::min({a, b, c});
}

}  // namespace

std::vector<Triple> cyclic_closure(std::vector<Triple> triples) {
  std::set<Triple> closed;
  for (const Triple& t : triples) {
    closed.insert(t);
    closed.insert({t[1], t[2], t[0]});
    closed.insert({t[2], t[0], t[1]});
  }
  return {closed.begin(), closed.end()};
}

TrianglePresentation::TrianglePresentation(
    std::shared_ptr<const ProjectivePlane> plane, PointLineCorrespondence lambda,
    std::vector<Triple> triples, std::string label)
    : plane_(std::move(plane)),
      lambda_(std::move(lambda)),
      triples_(cyclic_closure(std::move(triples))),
      label_(std::move(label)) {
  const int n = plane_->num_points();
  completion_.assign(static_cast<size_t>(n) * n, -1);
  for (const Triple& t : triples_) {
    auto& slot = completion_[static_cast<size_t>(t[0]) * n + t[1]];
    if (slot == -1) slot = static_cast<int16_t>(t[2]);
  }
  in_lambda_.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (PointIndex m : lambda(x)) in_lambda_[static_cast<size_t>(x) * n + m] = 1;
}

bool TrianglePresentation::has_triple(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

const TrianglePresentation& TrianglePresentation::reversed() const {
  if (!reversed_) {
    const int n = num_points();
    // Transpose correspondence: the line of x collects the y with x on
    // lambda(y); these sets are the lines of a plane (the dual structure
    // relabelled through lambda).
    std::vector<Line> lines(n);
    for (int y = 0; y < n; ++y)
      for (PointIndex m : lambda(y)) lines[m].points.push_back(y);
    auto dual_plane = std::make_shared<ProjectivePlane>(order(), plane_->point_names(),
                                                        std::move(lines));
    std::vector<LineIndex> map(n);
    for (int x = 0; x < n; ++x) {
      std::vector<PointIndex> pts;
      for (int y = 0; y < n; ++y)
        if (in_lambda(x, y)) pts.push_back(y);
      LineIndex l = dual_plane->line_by_points(pts);
      if (l < 0) throw DomainError("transpose correspondence is not line-valued");
      map[x] = l;
    }
    std::vector<Triple> rev;
    rev.reserve(triples_.size());
    for (const Triple& t : triples_) rev.push_back({t[2], t[1], t[0]});
    auto r = std::make_shared<TrianglePresentation>(
        std::move(dual_plane), PointLineCorrespondence(*plane_, std::move(map)),
        std::move(rev), label_.empty() ? "" : label_ + ".reversed");
    reversed_ = std::move(r);
  }
  return *reversed_;
}

std::vector<PresentationViolation> validate(const TrianglePresentation& tp) {
  std::vector<PresentationViolation> out;
  const int n = tp.num_points();
  const auto& plane = tp.plane();
  auto name = [&](PointIndex p) { return plane.point_name(p); };
  auto pair_str = [&](int x, int y) { return "(" + name(x) + "," + name(y) + ")"; };

  // (ii) cyclic closure.
  for (const Triple& t : tp.triples()) {
    Triple rot = {t[1], t[2], t[0]};
    if (!tp.has_triple(rot))
      out.push_back({"(ii)", "(" + name(t[0]) + "," + name(t[1]) + "," + name(t[2]) +
                                 ") lacks its rotation"});
  }

  // (i) existence iff incident and (iii) uniqueness, per ordered pair.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int count = 0;
      for (const Triple& t : tp.triples())
        if (t[0] == x && t[1] == y) ++count;
      bool incident = tp.in_lambda(y, x);
      if (incident && count == 0)
        out.push_back({"(i)", pair_str(x, y) + " incident but has no triple"});
      if (!incident && count > 0)
        out.push_back({"(i)", pair_str(x, y) + " not incident but has a triple"});
      if (count > 1)
        out.push_back({"(iii)", pair_str(x, y) + " has " + std::to_string(count) +
                                    " completions"});
    }

  // Lambda recovered from the triples must match the stored map.
  for (int x = 0; x < n; ++x) {
    std::vector<PointIndex> recovered;
    for (int y = 0; y < n; ++y)
      if (tp.triple_completion(x, y) != -1) recovered.push_back(y);
    std::vector<PointIndex> stored = tp.lambda(x);
    std::sort(stored.begin(), stored.end());
    if (recovered != stored)
      out.push_back({"lambda recovery", name(x) + ": triples give a different line"});
  }
  return out;
}

namespace {

struct Tokenizer {
  std::istream& in;
  int line_no = 0;
  bool next_line(std::vector<std::string>& tokens, std::string& keyword) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.assign(std::istream_iterator<std::string>(ls),
                    std::istream_iterator<std::string>());
      if (tokens.empty()) continue;
      keyword = tokens.front();
      return true;
    }
    return false;
  }
};

}  // namespace

TrianglePresentation parse_presentation(std::istream& in) {
  Tokenizer tz{in};
  std::vector<std::string> tok;
  std::string kw;

  if (!tz.next_line(tok, kw) || kw != "q" || tok.size() != 2)
    throw FileParseError(tz.line_no, "expected 'q <integer>'");
  int q = 0;
  try {
    q = std::stoi(tok[1]);
  } catch (const std::exception&) {
    throw FileParseError(tz.line_no, "bad order '" + tok[1] + "'");
  }
  if (q < 1) throw FileParseError(tz.line_no, "order must be >= 1");
  const int n = q * q + q + 1;

  if (!tz.next_line(tok, kw) || kw != "points")
    throw FileParseError(tz.line_no, "expected 'points <name> ...'");
  std::vector<std::string> names(tok.begin() + 1, tok.end());
  if (static_cast<int>(names.size()) != n)
    throw FileParseError(tz.line_no, "expected " + std::to_string(n) + " point names, got " +
                                         std::to_string(names.size()));
  std::map<std::string, PointIndex> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(names[i], i).second)
      throw FileParseError(tz.line_no, "duplicate point name '" + names[i] + "'");
  }
  auto lookup = [&](const std::string& name) -> PointIndex {
    auto it = index.find(name);
    if (it == index.end())
      throw FileParseError(tz.line_no, "unknown point name '" + name + "'");
    return it->second;
  };

  // Lambda lines double as the plane's line list.
  std::vector<int> point_to_line(n, -1);
  std::vector<Line> lines;
  std::vector<std::vector<PointIndex>> lambda_sets(n);
  for (int i = 0; i < n; ++i) {
    if (!tz.next_line(tok, kw) || kw != "lambda" || tok.size() < 2)
      throw FileParseError(tz.line_no, "expected 'lambda <name>: <name> ...'");
    std::string owner = tok[1];
    if (owner.empty() || owner.back() != ':')
      throw FileParseError(tz.line_no, "expected ':' after the point name");
    owner.pop_back();
    PointIndex x = lookup(owner);
    if (!lambda_sets[x].empty())
      throw FileParseError(tz.line_no, "duplicate lambda line for '" + owner + "'");
    if (static_cast<int>(tok.size()) - 2 != q + 1)
      throw FileParseError(tz.line_no, "lambda line needs " + std::to_string(q + 1) +
                                           " names, got " + std::to_string(tok.size() - 2));
    for (size_t j = 2; j < tok.size(); ++j) lambda_sets[x].push_back(lookup(tok[j]));
    std::sort(lambda_sets[x].begin(), lambda_sets[x].end());
    if (std::adjacent_find(lambda_sets[x].begin(), lambda_sets[x].end()) !=
        lambda_sets[x].end())
      throw FileParseError(tz.line_no, "repeated point in lambda line for '" + owner + "'");
  }
  // Deduplicate line point sets in canonical (first occurrence by point) order.
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (size_t l = 0; l < lines.size(); ++l)
      if (lines[l].points == lambda_sets[x]) {
        found = static_cast<int>(l);
        break;
      }
    if (found == -1) {
      found = static_cast<int>(lines.size());
      lines.push_back(Line{found, lambda_sets[x]});
    }
    if (std::count(point_to_line.begin(), point_to_line.end(), found) > 0)
      throw FileParseError(tz.line_no, "lambda is not a bijection: line of '" +
                                           names[x] + "' already used");
    point_to_line[x] = found;
  }
  if (static_cast<int>(lines.size()) != n)
    throw FileParseError(tz.line_no, "lambda images give " + std::to_string(lines.size()) +
                                         " distinct lines, expected " + std::to_string(n));

  if (!tz.next_line(tok, kw) || kw != "triples" || tok.size() != 1)
    throw FileParseError(tz.line_no, "expected 'triples'");

  std::vector<Triple> triples;
  bool saw_end = false;
  while (tz.next_line(tok, kw)) {
    if (kw == "end" && tok.size() == 1) {
      saw_end = true;
      break;
    }
    if (tok.size() != 3)
      throw FileParseError(tz.line_no, "expected '<name> <name> <name>' or 'end'");
    triples.push_back({lookup(tok[0]), lookup(tok[1]), lookup(tok[2])});
  }
  if (!saw_end) throw FileParseError(tz.line_no, "missing 'end'");

  auto plane = std::make_shared<ProjectivePlane>(q, names, std::move(lines));
  PointLineCorrespondence lambda(*plane, std::move(point_to_line));
  return TrianglePresentation(std::move(plane), std::move(lambda), std::move(triples));
}

TrianglePresentation parse_presentation_text(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

TrianglePresentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  TrianglePresentation tp = parse_presentation(in);
  tp.set_label(path);
  return tp;
}

std::string serialize(const TrianglePresentation& tp) {
  const auto& plane = tp.plane();
  std::ostringstream out;
  out << "q " << tp.order() << "\n";
  out << "points";
  for (const auto& name : plane.point_names()) out << " " << name;
  out << "\n";
  for (int x = 0; x < tp.num_points(); ++x) {
    out << "lambda " << plane.point_name(x) << ":";
    std::vector<PointIndex> pts = tp.lambda(x);
    std::sort(pts.begin(), pts.end());
    for (PointIndex p : pts) out << " " << plane.point_name(p);
    out << "\n";
  }
  out << "triples\n";
  std::set<Triple> reps;
  for (const Triple& t : tp.triples()) reps.insert(least_rotation(t));
  for (const Triple& t : reps)
    out << plane.point_name(t[0]) << " " << plane.point_name(t[1]) << " "
        << plane.point_name(t[2]) << "\n";
  out << "end\n";
  return out.str();
}

std::vector<TrianglePresentation> search_presentations(
    std::shared_ptr<const ProjectivePlane> plane, const PointLineCorrespondence& lambda,
    size_t limit, bool require_commuting_triple) {
  if (limit < 1) throw PreconditionError("search limit must be >= 1");
  const int n = plane->num_points();

  // Slot s = ordered incident pair (x,y), y on lambda(x); assigning z there
  // creates the cyclic class of (x,y,z), which also fills slots (y,z) and
  // (z,x). Candidates must keep both forced slots incident:
  //   z on lambda(y) (slot (y,z) exists) and x on lambda(z) (slot (z,x) exists).
  std::vector<std::pair<PointIndex, PointIndex>> slots;
  std::vector<int> slot_of(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (PointIndex y : lambda.lambda(*plane, x)) {
      slot_of[static_cast<size_t>(x) * n + y] = static_cast<int>(slots.size());
      slots.emplace_back(x, y);
    }

  std::vector<uint8_t> in_lambda(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (PointIndex m : lambda.lambda(*plane, x))
      in_lambda[static_cast<size_t>(x) * n + m] = 1;

  std::vector<std::vector<PointIndex>> cand(slots.size());
  for (size_t s = 0; s < slots.size(); ++s) {
    auto [x, y] = slots[s];
    for (PointIndex z = 0; z < n; ++z)
      if (in_lambda[static_cast<size_t>(y) * n + z] &&
          in_lambda[static_cast<size_t>(z) * n + x])
        cand[s].push_back(z);
  }

  std::vector<PointIndex> assign(slots.size(), -1);
  std::vector<TrianglePresentation> results;

  std::function<bool(size_t)> rec = [&](size_t from) -> bool {
    size_t s = from;
    while (s < slots.size() && assign[s] != -1) ++s;
    if (s == slots.size()) {
      std::vector<Triple> triples;
      triples.reserve(slots.size());
      for (size_t i = 0; i < slots.size(); ++i)
        triples.push_back({slots[i].first, slots[i].second, assign[i]});
      TrianglePresentation tp(plane, lambda, std::move(triples));
      if (require_commuting_triple) {
        bool found = false;
        for (const Triple& t : tp.triples()) {
          if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) continue;
          if (tp.has_triple({t[1], t[0], t[2]})) {
            found = true;
            break;
          }
        }
        if (!found) return true;
      }
      results.push_back(std::move(tp));
      return results.size() < limit;
    }
    auto [x, y] = slots[s];
    for (PointIndex z : cand[s]) {
      int s2 = slot_of[static_cast<size_t>(y) * n + z];
      int s3 = slot_of[static_cast<size_t>(z) * n + x];
      // The three slots of a cyclic class may coincide (torsion triples).
      if (assign[s2] != -1 && assign[s2] != x) continue;
      if (assign[s3] != -1 && assign[s3] != y) continue;
      int old2 = assign[s2], old3 = assign[s3];
      assign[s] = z;
      if (static_cast<size_t>(s2) != s) assign[s2] = x;
      if (static_cast<size_t>(s3) != s && s3 != s2) assign[s3] = y;
      bool keep_going = rec(s + 1);
      assign[s] = -1;
      assign[s2] = old2;
      assign[s3] = old3;
      if (s2 == static_cast<int>(s)) assign[s2] = -1;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(0);

  std::sort(results.begin(), results.end(),
            [](const TrianglePresentation& a, const TrianglePresentation& b) {
              return a.triples() < b.triples();
            });
  return results;
}

}  // namespace a2t
