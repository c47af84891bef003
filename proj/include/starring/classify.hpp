#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starring/sets.hpp"
#include "starring/star_ring.hpp"

namespace starring {

enum class DecompMode { Clean, StronglyClean, StarClean, StronglyStarClean };

enum class FactorMode {
    ProjUnit,          // a = p·u
    UnitProj,          // a = u·p (the v·q form)
    ProjUnitTwoSided,  // a = p·u = u·p, same pair
    IdemUnitTwoSided,  // a = e·u = u·e with e idempotent
};

/// A decomposition/factorization certificate, or an explicit
/// "none, search exhausted". `first` is the idempotent/projection part,
/// `second` the unit, in every mode.
struct Witness {
    bool exhausted = true;
    ElementId first = -1;
    ElementId second = -1;

    bool operator==(const Witness&) const = default;
};

/// Smallest (by (first, second) id pair) witness with a = first + second,
/// first in Id(R) or P(R) per mode, second a unit, commuting in strong
/// modes; exhausted if none exists.
Witness decomposition_witness(const StarRing& s, ElementId a, DecompMode mode);

/// Smallest witness pair for the mode's product equations, or exhausted.
Witness factorization_witness(const StarRing& s, ElementId a, FactorMode mode);

enum class Predicate {
    Clean,
    StronglyClean,
    StarClean,
    StronglyStarClean,
    Regular,
    UnitRegular,
    StronglyRegular,
    ProperInvolution,
    StarRegular,
    StarUnitRegular,
    RightPInjective,
    StableRangeOne,
    Abelian,
    StarAbelian,
    Boolean,
    Local,
};

inline constexpr Predicate kAllPredicates[] = {
    Predicate::Clean,          Predicate::StronglyClean,   Predicate::StarClean,
    Predicate::StronglyStarClean, Predicate::Regular,      Predicate::UnitRegular,
    Predicate::StronglyRegular,   Predicate::ProperInvolution, Predicate::StarRegular,
    Predicate::StarUnitRegular,   Predicate::RightPInjective,  Predicate::StableRangeOne,
    Predicate::Abelian,           Predicate::StarAbelian,      Predicate::Boolean,
    Predicate::Local,
};
static_assert(std::size(kAllPredicates) == kPredicateCount);

const char* predicate_name(Predicate p);
std::optional<Predicate> predicate_from_name(const std::string& name);

/// Ring-level verdict; memoized per (ring, predicate).
PredicateResult is_predicate(const StarRing& s, Predicate p);

struct ClassificationReport {
    std::string label;
    int order = 0;
    int n_idempotents = 0;
    int n_projections = 0;
    int n_units = 0;
    std::vector<std::pair<Predicate, PredicateResult>> verdicts;  // enum order, all predicates

    bool operator==(const ClassificationReport&) const = default;
};

/// All predicates plus set sizes; throws std::logic_error if the results
/// break the clean-family implication diagram.
ClassificationReport classify_ring(const StarRing& s);

}  // namespace starring
