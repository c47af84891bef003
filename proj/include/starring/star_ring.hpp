#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "starring/ring.hpp"

namespace starring {

/// Cached enumerations of the structural subsets of a *-ring.
struct StructureSets {
    std::vector<ElementId> idempotents;          // sorted by id
    std::vector<ElementId> projections;          // sorted by id
    std::vector<ElementId> units;                // sorted by id
    std::vector<ElementId> central_idempotents;  // sorted by id
    std::vector<ElementId> inverse;              // element -> two-sided inverse, -1 if not a unit
};

/// Number of ring-level predicates known to the classifier; sized here so
/// the per-ring memo can live next to the other caches.
inline constexpr int kPredicateCount = 16;

struct PredicateResult {
    bool holds = false;
    ElementId counterwitness = -1;  // smallest failing element when !holds

    bool operator==(const PredicateResult&) const = default;
};

class StarRing;

/// A corner ring pRp with its own contiguous element ids and the
/// embedding back into the parent.
struct Corner {
    std::shared_ptr<const StarRing> ring;
    std::vector<ElementId> embed;  // corner id -> parent id
    ElementId projection = -1;     // p, in parent ids
};

/// A finite ring together with a validated involution. Immutable after
/// construction; the lazy caches follow a single-initialization contract
/// and are safe under concurrent readers.
class StarRing {
public:
    static std::shared_ptr<const StarRing> create(FiniteRing ring, std::vector<ElementId> star,
                                                  std::string star_label);

    const FiniteRing& ring() const { return ring_; }
    ElementId star(ElementId x) const { return star_[x]; }
    const std::vector<ElementId>& star_table() const { return star_; }

    const std::string& star_label() const { return star_label_; }
    std::string label() const { return ring_.label() + "+" + star_label_; }

    /// Exhaustive enumerations, computed on first use.
    const StructureSets& sets() const;

    bool is_unit(ElementId x) const { return sets().inverse[x] >= 0; }
    bool is_idempotent(ElementId x) const { return ring_.mul(x, x) == x; }
    bool is_projection(ElementId x) const { return is_idempotent(x) && star_[x] == x; }

    /// The corner *-ring pRp at projection p; cached per projection.
    /// Throws RingError::InvalidProjection unless p is a projection.
    std::shared_ptr<const Corner> corner(ElementId p) const;

    // Per-ring predicate memo (optimization only; classify owns the semantics).
    std::optional<PredicateResult> memo_get(int predicate) const;
    void memo_put(int predicate, PredicateResult result) const;

    StarRing(const StarRing&) = delete;
    StarRing& operator=(const StarRing&) = delete;

private:
    StarRing(FiniteRing ring, std::vector<ElementId> star, std::string star_label);

    FiniteRing ring_;
    std::vector<ElementId> star_;
    std::string star_label_;

    mutable std::once_flag sets_once_;
    mutable StructureSets sets_;

    mutable std::mutex cache_mu_;
    mutable std::array<std::optional<PredicateResult>, kPredicateCount> memo_;
    mutable std::map<ElementId, std::shared_ptr<const Corner>> corners_;
};

/// Validates star against r and wraps them; propagates involution
/// violations from the validator.
std::shared_ptr<const StarRing> attach_involution(FiniteRing r, std::vector<ElementId> star,
                                                  std::string star_label = "table");

/// Free-function form of StarRing::corner.
std::shared_ptr<const Corner> make_corner_ring(const StarRing& s, ElementId p);

}  // namespace starring
