#pragma once

// Configurations of simple closed curves with ribbon data: intersection
// graphs, Dynkin recognition and invariants of the regular neighbourhood.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rspin/common.hpp"

namespace rspin::curveconf {

struct IntersectionPoint {
  std::string id;
  int first = 0;   // curve indices
  int second = 0;
  int sign = 1;    // algebraic sign of the crossing, +1 or -1
};

struct Surface {
  Int genus = 0;
  Int boundary = 0;
  bool operator==(const Surface&) const = default;
};

class CurveSystem {
 public:
  CurveSystem() = default;

  /// `ribbon[c]` lists the point ids met by curve c in cyclic order; curves
  /// without an entry use the order in which their points appear in `points`.
  CurveSystem(std::vector<std::string> curves, std::vector<IntersectionPoint> points,
              std::map<std::string, std::vector<std::string>> ribbon = {},
              std::optional<Surface> ambient = std::nullopt);

  /// Canonical plumbing data for a tree given as edges between named curves.
  static CurveSystem from_tree(std::vector<std::string> curves,
                               const std::vector<std::pair<std::string, std::string>>& edges,
                               std::optional<Surface> ambient = std::nullopt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<IntersectionPoint>& points() const { return points_; }
  const std::vector<std::vector<int>>& ribbon() const { return ribbon_; }  // point indices
  const std::optional<Surface>& ambient() const { return ambient_; }
  void set_ambient(std::optional<Surface> a) { ambient_ = a; }

  int index_of(const std::string& name) const;
  /// Number of intersection points between curves i and j.
  int count_between(int i, int j) const;
  /// Signed intersection number of curves i and j.
  int algebraic_between(int i, int j) const;

  /// Same system with curves renamed and each ribbon rotated; used in tests.
  CurveSystem relabeled(const std::vector<std::string>& new_names, int rotate_by) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<IntersectionPoint> points_;
  std::vector<std::vector<int>> ribbon_;
  std::optional<Surface> ambient_;
};

struct IntersectionGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
  std::vector<std::vector<int>> adjacency() const;
};

struct NeighborhoodInvariants {
  Int euler = 0;
  Int boundary = 0;
  Int genus = 0;
  bool operator==(const NeighborhoodInvariants&) const = default;
};

/// Throws NotSimple if some pair of curves meets more than once.
IntersectionGraph intersection_graph(const CurveSystem& sys);

bool is_tree(const IntersectionGraph& g);
bool is_connected(const IntersectionGraph& g);
/// True when the six listed vertices induce a copy of E6: a tree with one
/// branch vertex whose arms have lengths 1, 2, 2.
bool induces_e6(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& six);
/// Exhaustive search for a six-vertex induced subgraph isomorphic to E6.
std::optional<std::vector<int>> find_induced_e6(const IntersectionGraph& g);

bool is_arboreal(const CurveSystem& sys);
bool is_E_arboreal(const CurveSystem& sys);

/// Boundary cycles of the ribbon graph; each face is a list of half-edge ids.
std::vector<std::vector<int>> trace_faces(const CurveSystem& sys);

/// Invariants of the regular neighbourhood. Disconnected systems raise
/// Disconnected; component_invariants reports each component instead.
NeighborhoodInvariants neighborhood_invariants(const CurveSystem& sys);
std::vector<NeighborhoodInvariants> component_invariants(const CurveSystem& sys);

bool is_spanning(const CurveSystem& sys, Surface ambient);

CurveSystem chain(int n);
/// "A<n>" or "E6".
CurveSystem dynkin(const std::string& type);

/// The thirteen-curve core a1..a7, b1..b6 on the genus-6 surface with two
/// boundary components. Figure-derived data: a1..a7 form a chain,
/// b1..b6 an E6 diagram branching at b3, and b6 meets a4 once.
CurveSystem core13();

/// Parses the configuration format:
///   curves a b c;
///   point p (a, b, +1);
///   order b: p q;
///   edge a b;            # tree-only shorthand, no points allowed
///   ambient 1 2;
CurveSystem parse_config(const std::string& text);

}  // namespace rspin::curveconf
