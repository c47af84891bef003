// Independent full-cartesian-product reference searches. Everything here
// recomputes membership from the raw tables on every query: no pruning,
// no caching, no reuse of the production StructureSets.
#pragma once

#include "starring/classify.hpp"
#include "starring/star_ring.hpp"

namespace oracle {

using starring::DecompMode;
using starring::ElementId;
using starring::FactorMode;
using starring::FiniteRing;
using starring::StarRing;
using starring::Witness;

inline bool unit_full(const FiniteRing& r, ElementId x) {
    for (ElementId y = 0; y < r.order(); ++y)
        if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) return true;
    return false;
}

inline bool part_matches(const StarRing& s, ElementId e, bool needs_projection) {
    const FiniteRing& r = s.ring();
    if (r.mul(e, e) != e) return false;
    return !needs_projection || s.star(e) == e;
}

inline Witness decomposition_full(const StarRing& s, ElementId a, DecompMode mode) {
    const FiniteRing& r = s.ring();
    const bool proj = mode == DecompMode::StarClean || mode == DecompMode::StronglyStarClean;
    const bool strong = mode == DecompMode::StronglyClean || mode == DecompMode::StronglyStarClean;
    for (ElementId e = 0; e < r.order(); ++e) {
        if (!part_matches(s, e, proj)) continue;
        for (ElementId u = 0; u < r.order(); ++u) {
            if (r.add(e, u) != a) continue;
            if (!unit_full(r, u)) continue;
            if (strong && r.mul(e, u) != r.mul(u, e)) continue;
            return {false, e, u};
        }
    }
    return {true, -1, -1};
}

inline Witness factorization_full(const StarRing& s, ElementId a, FactorMode mode) {
    const FiniteRing& r = s.ring();
    const bool proj = mode != FactorMode::IdemUnitTwoSided;
    for (ElementId p = 0; p < r.order(); ++p) {
        if (!part_matches(s, p, proj)) continue;
        for (ElementId u = 0; u < r.order(); ++u) {
            if (!unit_full(r, u)) continue;
            bool match = false;
            switch (mode) {
                case FactorMode::ProjUnit: match = r.mul(p, u) == a; break;
                case FactorMode::UnitProj: match = r.mul(u, p) == a; break;
                case FactorMode::ProjUnitTwoSided:
                case FactorMode::IdemUnitTwoSided:
                    match = r.mul(p, u) == a && r.mul(u, p) == a;
                    break;
            }
            if (match) return {false, p, u};
        }
    }
    return {true, -1, -1};
}

}  // namespace oracle
