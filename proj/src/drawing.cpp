#include "rac/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>

namespace rac {

namespace {

std::string point_str(const Point& p) {
  return "(" + to_fraction_string(p.x.value) + "," + to_fraction_string(p.y.value) + ")";
}

struct Piece {
  int edge;   // index into d.edges
  int index;  // piece index within the polyline
  Point a, b;
  double xlo, xhi, ylo, yhi;
};

}  // namespace

const Vertex& Drawing::vertex(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw InvalidDrawing("unknown vertex id: " + id);
}

int Drawing::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  throw InvalidDrawing("unknown vertex id: " + id);
}

const Edge& Drawing::edge(const std::string& id) const {
  for (const auto& e : edges)
    if (e.id == id) return e;
  throw InvalidDrawing("unknown edge id: " + id);
}

std::vector<Point> Drawing::polyline(const Edge& e) const {
  std::vector<Point> pts;
  pts.push_back(vertex(e.source).pos);
  for (const auto& b : e.bends) pts.push_back(b);
  pts.push_back(vertex(e.target).pos);
  return pts;
}

void Drawing::check_structure() const {
  std::set<std::string> vids;
  for (const auto& v : vertices) {
    if (!vids.insert(v.id).second) throw InvalidDrawing("duplicate vertex id " + v.id);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i].pos == vertices[j].pos)
        throw InvalidDrawing("coincident vertices " + vertices[i].id + ", " + vertices[j].id);
  std::set<std::string> eids;
  for (const auto& e : edges) {
    if (!eids.insert(e.id).second) throw InvalidDrawing("duplicate edge id " + e.id);
    vertex(e.source);
    vertex(e.target);
    if (e.source == e.target && !allow_self_loops)
      throw InvalidDrawing("self-loop " + e.id + " not allowed");
    auto pts = polyline(e);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
      if (pts[i] == pts[i + 1])
        throw InvalidDrawing("repeated consecutive polyline point on edge " + e.id);
    for (const auto& b : e.bends)
      for (const auto& v : vertices)
        if (b == v.pos) throw InvalidDrawing("bend of edge " + e.id + " coincides with vertex " + v.id);
  }
}

bool Drawing::connected() const {
  if (vertices.empty()) return true;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges) {
    adj[e.source].push_back(e.target);
    adj[e.target].push_back(e.source);
  }
  std::set<std::string> seen;
  std::queue<std::string> q;
  q.push(vertices.front().id);
  seen.insert(vertices.front().id);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (const auto& w : adj[u])
      if (seen.insert(w).second) q.push(w);
  }
  return seen.size() == vertices.size();
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NonRightAngle: return "non-right-angle";
    case ViolationKind::TooManyBends: return "too-many-bends";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::EdgeThroughVertex: return "edge-through-vertex";
    case ViolationKind::TriplePoint: return "triple-point";
  }
  return "?";
}

ValidationReport validate(const Drawing& d, double eps) {
  d.check_structure();
  ValidationReport rep;

  std::vector<Piece> pieces;
  for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
    const Edge& e = d.edges[ei];
    if (!e.auxiliary && static_cast<int>(e.bends.size()) > d.bend_limit) {
      rep.violations.push_back(
          {ViolationKind::TooManyBends, "edge " + e.id + " has " + std::to_string(e.bends.size()) + " bends"});
    }
    auto pts = d.polyline(e);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      Piece pc{static_cast<int>(ei), static_cast<int>(i), pts[i], pts[i + 1], 0, 0, 0, 0};
      pc.xlo = std::min(pc.a.xd(), pc.b.xd());
      pc.xhi = std::max(pc.a.xd(), pc.b.xd());
      pc.ylo = std::min(pc.a.yd(), pc.b.yd());
      pc.yhi = std::max(pc.a.yd(), pc.b.yd());
      pieces.push_back(std::move(pc));
    }
  }

  // Map from exact point to the set of pieces whose interior passes through
  // it; used for the triple-point check.
  auto pt_key = [](const Point& p) {
    return to_fraction_string(p.x.value) + "," + to_fraction_string(p.y.value);
  };
  std::map<std::string, std::set<std::pair<int, int>>> interior_hits;
  std::map<std::string, Point> key_pt;

  const double slack = 1e-9;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const Piece& A = pieces[i];
      const Piece& B = pieces[j];
      if (A.xhi + slack < B.xlo || B.xhi + slack < A.xlo || A.yhi + slack < B.ylo ||
          B.yhi + slack < A.ylo)
        continue;
      bool same_edge = A.edge == B.edge;
      bool adjacent_pieces = same_edge && std::abs(A.index - B.index) == 1;
      Segment sa(A.a, A.b), sb(B.a, B.b);
      auto isect = intersect(sa, sb);
      if (!isect) continue;
      const Edge& ea = d.edges[A.edge];
      const Edge& eb = d.edges[B.edge];
      switch (isect->kind) {
        case IsectKind::Overlap:
          if (adjacent_pieces) {
            // A degenerate bend (angle pi, fold-back); structural check keeps
            // consecutive points distinct, so the fold overlaps.
            rep.violations.push_back(
                {ViolationKind::Overlap, "edge " + ea.id + " folds back on itself at piece " +
                                             std::to_string(std::min(A.index, B.index))});
          } else {
            rep.violations.push_back({ViolationKind::Overlap,
                                      "edges " + ea.id + " and " + eb.id + " overlap near " +
                                          point_str(isect->at)});
          }
          break;
        case IsectKind::Endpoint: {
          if (adjacent_pieces) break;  // shared bend of one polyline
          const Point& p = isect->at;
          // Interior touch: the point is an endpoint of one piece but interior
          // to the other, or endpoints of both pieces that are not a shared
          // graph vertex.
          auto is_piece_end = [&](const Piece& pc) { return p == pc.a || p == pc.b; };
          bool endA = is_piece_end(A), endB = is_piece_end(B);
          auto vertex_at = [&](const Point& q) -> const Vertex* {
            for (const auto& v : d.vertices)
              if (v.pos == q) return &v;
            return nullptr;
          };
          const Vertex* v = vertex_at(p);
          if (endA && endB) {
            if (same_edge) {
              // Non-consecutive pieces of one edge touching: the polyline
              // revisits a point.
              rep.violations.push_back({ViolationKind::EdgeThroughVertex,
                                        "edge " + ea.id + " revisits point " + point_str(p)});
            } else if (v != nullptr) {
              bool incidentA = ea.source == v->id || ea.target == v->id;
              bool incidentB = eb.source == v->id || eb.target == v->id;
              if (!(incidentA && incidentB))
                rep.violations.push_back({ViolationKind::EdgeThroughVertex,
                                          "edges " + ea.id + ", " + eb.id + " touch at vertex " +
                                              v->id + " without both being incident"});
            } else {
              rep.violations.push_back({ViolationKind::EdgeThroughVertex,
                                        "bends of edges " + ea.id + ", " + eb.id + " coincide at " +
                                            point_str(p)});
            }
          } else {
            const Edge& through = endA ? eb : ea;  // the edge whose interior is hit
            if (v != nullptr) {
              rep.violations.push_back({ViolationKind::EdgeThroughVertex,
                                        "edge " + through.id + " passes through vertex " + v->id});
            } else {
              rep.violations.push_back({ViolationKind::EdgeThroughVertex,
                                        "edge " + through.id + " passes through a bend of edge " +
                                            (endA ? ea.id : eb.id) + " at " + point_str(p)});
            }
          }
          break;
        }
        case IsectKind::Proper: {
          auto k = pt_key(isect->at);
          key_pt.emplace(k, isect->at);
          interior_hits[k].insert({A.edge, A.index});
          interior_hits[k].insert({B.edge, B.index});
          CrossingRec c;
          bool swap = eb.id < ea.id;
          c.edge1 = swap ? eb.id : ea.id;
          c.edge2 = swap ? ea.id : eb.id;
          c.piece1 = swap ? B.index : A.index;
          c.piece2 = swap ? A.index : B.index;
          c.at = isect->at;
          c.angle = crossing_angle(sa, sb);
          rep.crossings.push_back(c);
          if (!is_right_angle(sa, sb, eps)) {
            std::ostringstream os;
            os << "edges " << c.edge1 << " x " << c.edge2 << " cross at " << point_str(c.at)
               << " with angle " << c.angle;
            rep.violations.push_back({ViolationKind::NonRightAngle, os.str()});
          }
          break;
        }
      }
    }
  }

  for (const auto& [k, hits] : interior_hits) {
    if (hits.size() >= 3) {
      rep.violations.push_back({ViolationKind::TriplePoint,
                                ">=3 edge interiors meet at " + point_str(key_pt.at(k))});
    }
  }

  auto cr_less = [](const CrossingRec& a, const CrossingRec& b) {
    if (a.edge1 != b.edge1) return a.edge1 < b.edge1;
    if (a.edge2 != b.edge2) return a.edge2 < b.edge2;
    if (a.at.x.value != b.at.x.value) return a.at.x.value < b.at.x.value;
    return a.at.y.value < b.at.y.value;
  };
  std::sort(rep.crossings.begin(), rep.crossings.end(), cr_less);
  std::sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.details < b.details;
  });
  rep.is_rac = rep.violations.empty();
  return rep;
}

EdgePartition partition_edges(const Drawing& d, const ValidationReport& r) {
  if (!r.is_rac) throw InvalidDrawing("partition_edges requires a valid RAC drawing");
  EdgePartition part;
  for (const auto& e : d.edges) part.e0.insert(e.id);
  for (const auto& c : r.crossings) {
    part.e0.erase(c.edge1);
    part.e0.erase(c.edge2);
    part.e1.insert(c.edge1);
    part.e1.insert(c.edge2);
  }
  return part;
}

BoundVerdict density_check(const Drawing& d) {
  auto rep = validate(d);
  if (!rep.is_rac) throw PreconditionViolated("drawing is not RAC-1");
  if (!d.connected()) throw PreconditionViolated("drawing is not connected");
  BoundVerdict v;
  v.n = static_cast<long>(d.vertices.size());
  if (v.n < 5) throw PreconditionViolated("n < 5");
  for (const auto& e : d.edges)
    if (!e.auxiliary) ++v.m;
  v.bound = Rational(11, 2) * v.n - 11;
  v.satisfied = Rational(v.m) <= v.bound;
  return v;
}

}  // namespace rac
