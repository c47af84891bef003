#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starring {

/// Elements of a finite ring are contiguous ids in [0, order).
using ElementId = int;

/// Default upper bound on the order of any constructed ring.
inline constexpr int kDefaultMaxOrder = 4096;

/// Orders up to this bound are validated exhaustively (O(order^3));
/// above it, built-in constructions fall back to random triple sampling.
inline constexpr int kExhaustiveValidationBound = 512;

class RingError : public std::runtime_error {
public:
    enum class Code {
        InvalidParameter,
        SizeCapExceeded,
        AxiomViolation,
        InvolutionViolation,
        InvalidProjection,
        NotAUnit,
        SpecError,
    };

    RingError(Code code, std::string message, std::vector<ElementId> witness = {})
        : std::runtime_error(std::move(message)), code_(code), witness_(std::move(witness)) {}

    Code code() const { return code_; }

    /// Offending element ids (a triple for ring axioms, a pair for
    /// involution axioms), so a failure can be re-verified by hand.
    const std::vector<ElementId>& witness() const { return witness_; }

private:
    Code code_;
    std::vector<ElementId> witness_;
};

/// A finite associative ring with unity, given by complete operation
/// tables over elements 0..order-1. Immutable after construction and
/// safe for concurrent reads.
class FiniteRing {
public:
    /// Builds and eagerly validates a ring from flattened order x order
    /// add/mul tables (row-major). zero, one and neg are discovered from
    /// the tables; any axiom failure throws RingError::AxiomViolation
    /// with a minimal witness.
    FiniteRing(int order, std::vector<ElementId> add, std::vector<ElementId> mul,
               std::string label, std::uint64_t sample_seed = 0x5eedULL);

    int order() const { return order_; }

    ElementId add(ElementId a, ElementId b) const {
        return add_[static_cast<std::size_t>(a) * order_ + b];
    }
    ElementId mul(ElementId a, ElementId b) const {
        return mul_[static_cast<std::size_t>(a) * order_ + b];
    }
    ElementId neg(ElementId a) const { return neg_[a]; }
    ElementId sub(ElementId a, ElementId b) const { return add(a, neg(b)); }

    ElementId zero() const { return zero_; }
    ElementId one() const { return one_; }

    const std::string& label() const { return label_; }

    bool same_tables(const FiniteRing& other) const {
        return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
    }

private:
    int order_;
    std::vector<ElementId> add_;
    std::vector<ElementId> mul_;
    std::vector<ElementId> neg_;
    ElementId zero_ = 0;
    ElementId one_ = 0;
    std::string label_;
};

/// Re-runs the full axiom battery on an already-built ring. Exhaustive
/// up to kExhaustiveValidationBound, sampled (10^6 seeded triples) above.
void validate_ring_tables(const FiniteRing& r, std::uint64_t sample_seed = 0x5eedULL);

/// Checks that star is a permutation satisfying the three involution
/// axioms over r; throws RingError::InvolutionViolation with a witness
/// pair on failure.
void validate_involution(const FiniteRing& r, const std::vector<ElementId>& star);

}  // namespace starring
