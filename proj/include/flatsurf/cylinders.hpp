#pragma once

#include "flatsurf/refine.hpp"
#include "flatsurf/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace flatsurf {

/// Canonical primitive integer direction: denominators cleared, gcd divided
/// out, sign fixed so x > 0, or x == 0 and y > 0.
Vec primitive_direction(const Vec& d);

/// Strip coordinates for direction d = (p, q) with N = p^2 + q^2:
/// u = <x,d>/N (length along d in units of |d|), w = cross(d,x)/N.
/// The modulus h/c computed in these units equals the Euclidean modulus.
Vec to_uw(const Vec& d, const Vec& x);
Vec from_uw(const Vec& d, const Vec& uw);

struct SpineConnection {
  std::string id;              // "sc:<index>"
  std::vector<long> edge_ids;  // chain of refined-edge ids, in order
  Rat length;                  // in d-units
  bool closed_loop = false;    // both endpoints the same vertex class
};

/// One side of a spine edge, as seen from the cylinder that owns it.
struct CylinderArc {
  long edge_id = -1;
  int cyl = -1;
  int circle = 0;  // 0 bottom (w = 0), 1 top (w = h)
  Rat u0, u1;      // interval in the owning cylinder's circle coordinate
  int sc = -1;
  int orient = 1;  // +1: increasing u follows the edge's CCW direction
};

struct BreakpointInfo {
  Rat u;
  bool special = false;
  bool marked = false;
  bool pole_marked = false;
  int angle_pi = 2;
  int cls = -1;  // vertex class in the refined surface
};

enum class CylinderType { Simple, HalfSimple, Complex, SimpleEnvelope, ComplexEnvelope, Other };

std::string to_string(CylinderType t);

struct Cylinder {
  std::string id;  // "cyl:<dx>,<dy>:<index>"
  Rat circumference;
  Rat height;
  Rat twist;
  std::vector<int> bottom_arcs, top_arcs;  // indices into Decomposition::arcs, u-ordered
  std::vector<int> word_bottom, word_top;  // sc ids with multiplicity, circle order
  std::vector<BreakpointInfo> bp_bottom, bp_top;
};

/// Complete periodic decomposition in a rational direction. `refined` is the
/// input cut along the spine (charts preserved, provenance tracked);
/// `rebuilt` re-presents the surface with one rectangle cell per cylinder.
struct Decomposition {
  Vec dir;
  Surface refined;
  Surface rebuilt;
  std::vector<SpineConnection> scs;
  std::vector<Cylinder> cyls;
  std::vector<CylinderArc> arcs;

  // locate() support: refined piece -> owning cylinder and strip placement
  // strip(x) = sign * to_uw(dir, x) + shift, with u taken mod circumference.
  std::vector<int> piece_cyl;
  std::vector<ChartMap> piece_place;

  int cylinder_index(const std::string& id) const;
};

/// Throws Error("budget-exceeded") if a separatrix fails to close within the
/// given budget (default_budget(s) when omitted).
Decomposition decompose(const Surface& s, const Vec& direction);
Decomposition decompose(const Surface& s, const Vec& direction, const Int& budget);

CylinderType classify_cylinder(const Decomposition& d, int cyl);

Rat modulus(const Cylinder& c);

/// Locate a point of the decomposed surface on the rebuilt presentation.
struct LocatedPoint {
  int cell = -1;
  Vec pos;
};
std::optional<LocatedPoint> locate_in_rebuilt(const Decomposition& d, int input_piece,
                                              const Vec& chart_point);

/// Standard cylinder deformation: shear then dilate the listed cylinders,
/// keeping circumferences; the rest of the surface is untouched. Returns the
/// rebuilt deformed surface.
Surface cylinder_deform(const Decomposition& d, const std::vector<int>& cyls, const Rat& shear,
                        const Rat& dilate);

/// The deformed decomposition itself (for chained operations).
Decomposition deform_decomposition(const Decomposition& d, const std::vector<int>& cyls,
                                   const Rat& shear, const Rat& dilate);

/// Re-present the decomposition as one rectangle cell per cylinder, with the
/// spine arcs glued edge-to-edge and marks propagated to breakpoints.
Surface rebuild_from_normal_form(const Decomposition& d);

}  // namespace flatsurf
