#include "starring/ring.hpp"

#include <random>

namespace starring {
namespace {

void fail(RingError::Code code, const std::string& msg, std::vector<ElementId> witness = {}) {
    throw RingError(code, msg, std::move(witness));
}

struct Tables {
    int n;
    const std::vector<ElementId>* add;
    const std::vector<ElementId>* mul;

    ElementId a(ElementId x, ElementId y) const {
        return (*add)[static_cast<std::size_t>(x) * n + y];
    }
    ElementId m(ElementId x, ElementId y) const {
        return (*mul)[static_cast<std::size_t>(x) * n + y];
    }
};

void check_table_range(const Tables& t) {
    const std::size_t expected = static_cast<std::size_t>(t.n) * t.n;
    if (t.add->size() != expected || t.mul->size() != expected)
        fail(RingError::Code::InvalidParameter, "table size does not match order " + std::to_string(t.n));
    for (std::size_t i = 0; i < expected; ++i) {
        ElementId a = (*t.add)[i], m = (*t.mul)[i];
        if (a < 0 || a >= t.n || m < 0 || m >= t.n)
            fail(RingError::Code::InvalidParameter,
                 "table entry out of range at flat index " + std::to_string(i));
    }
}

ElementId find_zero(const Tables& t) {
    for (ElementId z = 0; z < t.n; ++z) {
        bool ok = true;
        for (ElementId x = 0; x < t.n && ok; ++x)
            ok = t.a(z, x) == x && t.a(x, z) == x;
        if (ok) return z;
    }
    fail(RingError::Code::AxiomViolation, "no additive identity in add table");
    return -1;
}

ElementId find_one(const Tables& t) {
    for (ElementId e = 0; e < t.n; ++e) {
        bool ok = true;
        for (ElementId x = 0; x < t.n && ok; ++x)
            ok = t.m(e, x) == x && t.m(x, e) == x;
        if (ok) return e;
    }
    fail(RingError::Code::AxiomViolation, "no two-sided multiplicative identity in mul table");
    return -1;
}

std::vector<ElementId> find_negations(const Tables& t, ElementId zero) {
    std::vector<ElementId> neg(t.n, -1);
    for (ElementId x = 0; x < t.n; ++x) {
        for (ElementId y = 0; y < t.n; ++y) {
            if (t.a(x, y) == zero && t.a(y, x) == zero) {
                neg[x] = y;
                break;
            }
        }
        if (neg[x] < 0)
            fail(RingError::Code::AxiomViolation,
                 "element " + std::to_string(x) + " has no additive inverse", {x});
    }
    return neg;
}

void check_triple(const Tables& t, ElementId x, ElementId y, ElementId z) {
    if (t.a(t.a(x, y), z) != t.a(x, t.a(y, z)))
        fail(RingError::Code::AxiomViolation, "addition not associative at witness triple",
             {x, y, z});
    if (t.m(t.m(x, y), z) != t.m(x, t.m(y, z)))
        fail(RingError::Code::AxiomViolation, "multiplication not associative at witness triple",
             {x, y, z});
    if (t.m(x, t.a(y, z)) != t.a(t.m(x, y), t.m(x, z)))
        fail(RingError::Code::AxiomViolation, "left distributivity fails at witness triple",
             {x, y, z});
    if (t.m(t.a(x, y), z) != t.a(t.m(x, z), t.m(y, z)))
        fail(RingError::Code::AxiomViolation, "right distributivity fails at witness triple",
             {x, y, z});
}

void validate_tables(const Tables& t, std::uint64_t sample_seed) {
    check_table_range(t);
    find_zero(t);

    for (ElementId x = 0; x < t.n; ++x)
        for (ElementId y = 0; y < t.n; ++y)
            if (t.a(x, y) != t.a(y, x))
                fail(RingError::Code::AxiomViolation, "addition not commutative at witness pair",
                     {x, y});

    find_negations(t, find_zero(t));
    find_one(t);

    if (t.n <= kExhaustiveValidationBound) {
        for (ElementId x = 0; x < t.n; ++x)
            for (ElementId y = 0; y < t.n; ++y)
                for (ElementId z = 0; z < t.n; ++z)
                    check_triple(t, x, y, z);
    } else {
        // Spot check: 10^6 seeded random triples.
        std::mt19937_64 rng(sample_seed);
        std::uniform_int_distribution<ElementId> pick(0, t.n - 1);
        for (int i = 0; i < 1'000'000; ++i)
            check_triple(t, pick(rng), pick(rng), pick(rng));
    }
}

}  // namespace

FiniteRing::FiniteRing(int order, std::vector<ElementId> add, std::vector<ElementId> mul,
                       std::string label, std::uint64_t sample_seed)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), label_(std::move(label)) {
    if (order_ <= 0)
        fail(RingError::Code::InvalidParameter, "ring order must be positive");
    Tables t{order_, &add_, &mul_};
    validate_tables(t, sample_seed);
    zero_ = find_zero(t);
    one_ = find_one(t);
    neg_ = find_negations(t, zero_);
}

void validate_ring_tables(const FiniteRing& r, std::uint64_t sample_seed) {
    std::vector<ElementId> add(static_cast<std::size_t>(r.order()) * r.order());
    std::vector<ElementId> mul(add.size());
    for (ElementId x = 0; x < r.order(); ++x)
        for (ElementId y = 0; y < r.order(); ++y) {
            add[static_cast<std::size_t>(x) * r.order() + y] = r.add(x, y);
            mul[static_cast<std::size_t>(x) * r.order() + y] = r.mul(x, y);
        }
    Tables t{r.order(), &add, &mul};
    validate_tables(t, sample_seed);
}

void validate_involution(const FiniteRing& r, const std::vector<ElementId>& star) {
    const int n = r.order();
    if (static_cast<int>(star.size()) != n)
        fail(RingError::Code::InvalidParameter, "involution table size does not match ring order");

    std::vector<char> seen(n, 0);
    for (ElementId x = 0; x < n; ++x) {
        if (star[x] < 0 || star[x] >= n || seen[star[x]])
            fail(RingError::Code::InvolutionViolation, "star table is not a permutation", {x});
        seen[star[x]] = 1;
    }

    for (ElementId x = 0; x < n; ++x)
        if (star[star[x]] != x)
            fail(RingError::Code::InvolutionViolation, "star is not self-inverse at witness", {x});

    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y) {
            if (star[r.add(x, y)] != r.add(star[x], star[y]))
                fail(RingError::Code::InvolutionViolation,
                     "star is not additive at witness pair", {x, y});
            if (star[r.mul(x, y)] != r.mul(star[y], star[x]))
                fail(RingError::Code::InvolutionViolation,
                     "star is not anti-multiplicative at witness pair", {x, y});
        }
}

}  // namespace starring
