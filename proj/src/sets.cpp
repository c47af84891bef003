#include "starring/sets.hpp"

namespace starring {

const std::vector<ElementId>& enumerate_set(const StarRing& s, SetKind kind) {
    const StructureSets& sets = s.sets();
    switch (kind) {
        case SetKind::Idempotents: return sets.idempotents;
        case SetKind::Projections: return sets.projections;
        case SetKind::Units: return sets.units;
        case SetKind::CentralIdempotents: return sets.central_idempotents;
    }
    throw RingError(RingError::Code::InvalidParameter, "unknown set kind");
}

std::vector<ElementId> annihilator(const FiniteRing& r, const std::vector<ElementId>& xs,
                                   Side side) {
    std::vector<ElementId> out;
    for (ElementId y = 0; y < r.order(); ++y) {
        bool kills = true;
        for (ElementId x : xs) {
            const ElementId prod = side == Side::Right ? r.mul(x, y) : r.mul(y, x);
            if (prod != r.zero()) {
                kills = false;
                break;
            }
        }
        if (kills) out.push_back(y);
    }
    return out;
}

std::vector<ElementId> principal_ideal(const FiniteRing& r, ElementId a, Side side) {
    std::vector<char> seen(r.order(), 0);
    for (ElementId x = 0; x < r.order(); ++x)
        seen[side == Side::Left ? r.mul(x, a) : r.mul(a, x)] = 1;
    std::vector<ElementId> out;
    for (ElementId x = 0; x < r.order(); ++x)
        if (seen[x]) out.push_back(x);
    return out;
}

ElementId inverse(const FiniteRing& r, ElementId u) {
    for (ElementId v = 0; v < r.order(); ++v)
        if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) return v;
    throw RingError(RingError::Code::NotAUnit,
                    "element " + std::to_string(u) + " is not a unit", {u});
}

}  // namespace starring
