#pragma once

#include <vector>

#include "starring/ring.hpp"
#include "starring/star_ring.hpp"

namespace starring {

enum class Side { Left, Right };

enum class SetKind { Idempotents, Projections, Units, CentralIdempotents };

/// Cached, sorted enumeration of one structural subset.
const std::vector<ElementId>& enumerate_set(const StarRing& s, SetKind kind);

/// l(X) = {y : yx = 0 for all x in X} (Side::Left) or
/// r(X) = {y : xy = 0 for all x in X} (Side::Right); sorted.
std::vector<ElementId> annihilator(const FiniteRing& r, const std::vector<ElementId>& xs,
                                   Side side);

/// Ra = {xa : x in R} (Side::Left) or aR = {ax : x in R} (Side::Right); sorted.
std::vector<ElementId> principal_ideal(const FiniteRing& r, ElementId a, Side side);

/// The unique two-sided inverse of u; throws RingError::NotAUnit otherwise.
ElementId inverse(const FiniteRing& r, ElementId u);

}  // namespace starring
