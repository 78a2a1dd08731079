#pragma once

#include "flatsurf/surface.hpp"

#include <string>
#include <vector>

namespace flatsurf {

/// Stratum signature: kind plus the multiset of singularity orders. Orders are
/// >= 0 for abelian (0 = marked point), >= -1 for quadratic (-1 = pole,
/// 0 = marked point).
struct StratumSignature {
  Kind kind = Kind::Quadratic;
  std::vector<int> orders;  // kept sorted descending

  StratumSignature() = default;
  StratumSignature(Kind k, std::vector<int> o);

  bool operator==(const StratumSignature&) const = default;

  int order_sum() const;
  /// Signature with all order-0 entries dropped.
  StratumSignature unmarked() const;
};

StratumSignature abelian_signature(std::vector<int> orders);
StratumSignature quadratic_signature(std::vector<int> orders);

/// "H(2,0)" or "Q(4,-1^4)"; exponent shorthand accepted on input.
std::string to_string(const StratumSignature& sig);
StratumSignature parse_signature(const std::string& text);

struct GenusDimension {
  int genus = 0;
  int dimension = 0;  // complex dimension of the stratum
};

/// Throws Error("inconsistent-signature") when the order sum fails the
/// Gauss-Bonnet parity/genus constraint.
GenusDimension genus_dimension(const StratumSignature& sig);

struct RankRel {
  int rank = 0;
  int rel = 0;
};

/// Abelian: rank = g, rel = n-1. Quadratic: rank = g + m_odd/2 - 1,
/// rel = m_even (order-0 marked points count as even).
RankRel rank_rel(const StratumSignature& sig);

/// The regular Z/2 x Z/2 cover ladder over Q(a, b, -1^{a+b+4}).
struct HyperellipticLadder {
  int a = 0, b = 0;
  StratumSignature base;     // Q(a, b, -1^{a+b+4})
  StratumSignature top;      // H(a+1, a+1, b+1, b+1)
  StratumSignature side_J;   // Q(a1, b1)
  StratumSignature side_JT;  // Q(2a+2, 2b+2, -1^{2a+2b+8})
  StratumSignature side_T;   // H(a2, b2)
};

/// Preimage orders of a zero of order a in the three quotient directions.
std::vector<int> order_image_1(int a);  ///< {a,a} odd / {2a+2} even
std::vector<int> order_image_2(int a);  ///< {a+1} odd / {a/2,a/2} even
std::vector<int> order_image_3(int a);  ///< {a+1,a+1} odd / {2a+4} even

HyperellipticLadder hyperelliptic_ladder(int a, int b);

/// True iff the stratum (marked points ignored) has a hyperelliptic
/// component: H(2g-2), H(g-1,g-1), or Q(a1, b1) for some a,b >= -1.
bool is_hyperelliptic_component_signature(const StratumSignature& sig);

/// Stratum of a valid connected surface. Erasable (unmarked, unlabeled
/// angle-2pi) vertex classes are excluded; marked points contribute 0.
StratumSignature stratum_of(const Surface& s);

/// Sum of per-component stratum dimensions (surfaces arising from collapses
/// may be disconnected).
int total_stratum_dimension(const Surface& s);

/// All signatures of the given kind with dimension <= max_dim (for exhaustive
/// property checks).
std::vector<StratumSignature> enumerate_signatures(Kind kind, int max_dim);

}  // namespace flatsurf
