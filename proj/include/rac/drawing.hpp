#pragma once

#include "rac/geom.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rac {

struct Vertex {
  std::string id;
  Point pos;
};

struct Edge {
  std::string id;
  std::string source;
  std::string target;
  std::vector<Point> bends;
  bool auxiliary = false;  // augmentation output; exempt from the bend limit
};

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidDrawing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Drawing {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int bend_limit = 1;
  bool allow_self_loops = false;

  const Vertex& vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  int vertex_index(const std::string& id) const;

  // Polyline of an edge: source, bends..., target.
  std::vector<Point> polyline(const Edge& e) const;

  // Throws InvalidDrawing on structural defects (duplicate ids, coincident
  // vertices, bends on vertices, zero-length pieces, disallowed self-loops).
  void check_structure() const;

  bool connected() const;  // on the abstract graph, ignoring isolated vertices? No: all vertices
};

enum class ViolationKind { NonRightAngle, TooManyBends, Overlap, EdgeThroughVertex, TriplePoint };

std::string to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string details;
};

struct CrossingRec {
  std::string edge1, edge2;  // edge1 <= edge2 lexicographically
  Point at;
  double angle;  // radians, acute representative
  // Piece indices within each edge's polyline, for planarization reuse.
  int piece1 = -1, piece2 = -1;
};

struct ValidationReport {
  bool is_rac = false;
  std::vector<CrossingRec> crossings;
  std::vector<Violation> violations;
};

// Enumerates all pairwise piece intersections (brute force with a bounding-box
// prefilter) and classifies every defect per the RAC-1 rules.
ValidationReport validate(const Drawing& d, double eps = 1e-9);

struct EdgePartition {
  std::set<std::string> e0;  // crossing-free
  std::set<std::string> e1;  // crossed
};

EdgePartition partition_edges(const Drawing& d, const ValidationReport& r);

struct BoundVerdict {
  long n = 0;
  long m = 0;          // non-auxiliary edges
  Rational bound;      // 5.5 n - 11
  bool satisfied = false;
};

// Requires: validated RAC-1, connected, n >= 5. Auxiliary edges are excluded
// from m (they are accounted separately by the self-loop argument).
BoundVerdict density_check(const Drawing& d);

}  // namespace rac
