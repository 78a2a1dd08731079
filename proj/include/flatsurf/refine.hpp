#pragma once

#include "flatsurf/surface.hpp"

#include <map>
#include <vector>

namespace flatsurf {

/// Mutable refinement wrapper around a surface. Edges carry stable ids that
/// survive splitting (a split edge's id is retired in favour of two child
/// ids); tracked corner handles and tracked edge paths are remapped across
/// every mutation.
class Refiner {
 public:
  explicit Refiner(Surface s);

  const Surface& surface() const { return s_; }
  Surface take() { return std::move(s_); }

  long id_of(const EdgeRef& e) const;
  EdgeRef ref_of(long id) const;
  bool id_alive(long id) const;
  /// Children of a retired id, in order along the original edge (recursive).
  std::vector<long> descendants(long id) const;

  int track_corner(const CornerRef& c);
  CornerRef tracked_corner(int handle) const;

  /// Split edge e and its glued partner at fraction t in (0,1) along e's
  /// vector. Returns ids of the two halves of e.
  std::pair<long, long> split_edge(const EdgeRef& e, const Rat& t);

  /// Cut polygon p along the chord from corner ci to corner cj (must be
  /// strictly interior; not checked beyond basic sanity). Returns the ids of
  /// the two new chord edges (A side containing corners ci..cj, then B side).
  std::pair<long, long> cut_polygon(int poly, int ci, int cj);

  /// Ear-clip every polygon into triangles.
  void triangulate_all();

 private:
  void renumber(const std::map<EdgeRef, EdgeRef>& edge_map,
                const std::map<CornerRef, CornerRef>& corner_map,
                const std::vector<std::pair<EdgeRef, long>>& new_edges);
  void remap_marks(const std::map<CornerRef, CornerRef>& corner_map,
                   const std::vector<std::pair<CornerRef, CornerRef>>& duplicated);

  Surface s_;
  std::map<EdgeRef, long> id_of_;
  std::map<long, EdgeRef> ref_of_;
  std::map<long, std::pair<long, long>> children_;  // retired id -> halves
  long next_id_ = 0;
  long cut_counter_ = 0;
  std::vector<CornerRef> corners_;
};

struct TraceOutcome {
  enum class Status { SaddleConnection, ClosedLeaf, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  Vec holonomy{};                // in the chart of the starting corner
  std::vector<long> path;        // ordered edge ids realizing the segment
  CornerRef start_corner{}, end_corner{};  // in the refined surface
  Int crossings{0};
};

/// Default tracing budget: 4 * (lcm of all coordinate denominators) * (total
/// edge count), overridable via FLATDIA_BUDGET.
Int default_budget(const Surface& s);

/// Trace the separatrix leaving `start` in direction `dir` (which must lie in
/// the corner's closed-from-outgoing half-open sector [out, in)), refining the
/// surface so the traced segment becomes a chain of edges. Stops at the first
/// special (singular or marked) vertex class.
TraceOutcome trace_on(Refiner& r, const CornerRef& start, const Vec& dir, const Int& budget);

/// Convenience wrapper: trace on a copy of s. Throws Error("budget-exceeded")
/// when the budget runs out.
struct TraceResult {
  Surface refined;
  TraceOutcome outcome;
};
TraceResult trace_segment(const Surface& s, const CornerRef& start, const Vec& dir);
TraceResult trace_segment(const Surface& s, const CornerRef& start, const Vec& dir,
                          const Int& budget);

/// True if direction d points along corner's outgoing edge or strictly into
/// its interior sector: d in [out, in).
bool corner_sector_contains(const Surface& s, const CornerRef& c, const Vec& d);

}  // namespace flatsurf
