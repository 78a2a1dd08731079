#pragma once

#include "flatsurf/surface.hpp"

#include <vector>

namespace flatsurf::corpus {

/// Unit square torus with one marked corner (H(0)).
Surface torus();
/// Unit square torus, no marks.
Surface torus_unmarked();

/// Unit-square pillowcase: left-right glued by translation, top and bottom
/// folded in half (Q(-1^4)).
Surface pillow();

/// Pillowcase with one marked regular point on the vertical seam (Q(-1^4,0)).
Surface pillow_marked();

/// L of three unit squares, opposite sides glued (H(2)).
Surface lshape();

/// Two-cylinder square-tiled surface in H(1,1): a 1x2 column of unit squares
/// over a 1x1 square, with a shifted identification producing two simple
/// zeros on distinct cylinder boundaries.
Surface h11_two_cylinders();

/// Mirror double of an axis-aligned simple polygon given by its CCW vertex
/// list. Horizontal edges glue by translation, vertical ones by flips.
/// Corners of interior angle pi/2 become poles, pi becomes regular points,
/// 3pi/2 becomes order-1 zeros.
Surface rectilinear_double(const std::string& name, const std::vector<Vec>& vertices);

/// A Lanneau base surface in Q(a, b, -1^{a+b+4}) for a, b in {-1, 0, 1},
/// together with the corner refs of the labelled order-a and order-b points.
struct LadderBase {
  Surface s;
  CornerRef a_corner;
  CornerRef b_corner;
};
LadderBase ladder_base(int a, int b);

/// One rectangle with a folded side glued over a slit of a larger cylinder;
/// its horizontal decomposition contains a simple envelope.
Surface envelope_demo();

}  // namespace flatsurf::corpus
