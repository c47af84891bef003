#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starring/builders.hpp"
#include "starring/sets.hpp"

using namespace starring;

namespace {

std::shared_ptr<const StarRing> with_identity(FiniteRing r) {
    auto star = identity_star(r);
    return StarRing::create(std::move(r), std::move(star), "identity");
}

std::shared_ptr<const StarRing> m2_conj_transpose(const FiniteRing& base) {
    auto base_star = with_identity(base);
    FiniteRing m = make_matrix_ring(base, 2);
    return StarRing::create(std::move(m), conjugate_transpose_star(*base_star, 2),
                            "conjugate-transpose");
}

}  // namespace

TEST_CASE("zmod construction") {
    CHECK_THROWS_AS(make_zmod(0), RingError);

    FiniteRing trivial = make_zmod(1);
    CHECK(trivial.zero() == trivial.one());

    auto z4 = with_identity(make_zmod(4));
    CHECK(z4->sets().units == std::vector<ElementId>{1, 3});
}

TEST_CASE("gf construction") {
    CHECK(make_gf(2).same_tables(make_zmod(2)));
    CHECK_THROWS_AS(make_gf(6), RingError);
    CHECK_THROWS_AS(make_gf(17 * 17), RingError);

    FiniteRing f4 = make_gf(4);
    int idempotents = 0;
    for (ElementId x = 0; x < 4; ++x)
        if (f4.mul(x, x) == x) ++idempotents;
    CHECK(idempotents == 2);

    // Frobenius is a valid involution on gf(p^2).
    for (int q : {4, 9, 25}) {
        FiniteRing f = make_gf(q);
        CHECK_NOTHROW(StarRing::create(f, frobenius_star(f, gf_characteristic(q)), "frobenius"));
    }
}

TEST_CASE("product construction") {
    FiniteRing z2 = make_zmod(2), z3 = make_zmod(3);
    FiniteRing boolean = make_product(z2, z2);
    CHECK(boolean.order() == 4);
    CHECK(boolean.one() == 3);  // (1,1)

    CHECK(make_product(make_zmod(1), z3).same_tables(z3));

    auto z2xz3 = with_identity(make_product(z2, z3));
    CHECK(z2xz3->sets().units == std::vector<ElementId>{4, 5});  // (1,1), (1,2)

    CHECK_THROWS_AS(make_product(make_zmod(100), make_zmod(100)), RingError);
}

TEST_CASE("matrix ring construction") {
    FiniteRing z2 = make_zmod(2);
    auto m2z2 = m2_conj_transpose(z2);
    CHECK(m2z2->ring().order() == 16);
    CHECK(m2z2->sets().units.size() == 6);  // |GL_2(F_2)|

    FiniteRing z4 = make_zmod(4);
    CHECK(make_matrix_ring(z4, 1).same_tables(z4));

    FiniteRing m2z4 = make_matrix_ring(z4, 2);
    CHECK(m2z4.order() == 256);
    const std::vector<ElementId> identity{1, 0, 0, 1};
    CHECK(m2z4.one() == matrix_encode(4, 2, identity));
    for (ElementId x = 0; x < m2z4.order(); ++x) CHECK(m2z4.mul(m2z4.one(), x) == x);

    CHECK_THROWS_AS(make_matrix_ring(z4, 3), RingError);  // 4^9 over cap
}

TEST_CASE("corner rings") {
    auto m2z2 = m2_conj_transpose(make_zmod(2));
    const ElementId e11 = matrix_encode(2, 2, std::vector<ElementId>{1, 0, 0, 0});

    auto corner = m2z2->corner(e11);
    CHECK(corner->ring->ring().order() == 2);
    CHECK(corner->ring->ring().same_tables(make_zmod(2)));
    CHECK(corner->embed == std::vector<ElementId>{0, e11});

    auto whole = m2z2->corner(m2z2->ring().one());
    CHECK(whole->ring->ring().order() == 16);
    CHECK(whole->ring->ring().same_tables(m2z2->ring()));

    CHECK(m2z2->corner(0)->ring->ring().order() == 1);

    const ElementId e12 = matrix_encode(2, 2, std::vector<ElementId>{0, 1, 0, 0});
    CHECK_THROWS_AS(m2z2->corner(e12), RingError);  // idempotent but not a projection
}

TEST_CASE("table ring validation") {
    const std::vector<ElementId> z2_add{0, 1, 1, 0}, z2_mul{0, 0, 0, 1};
    CHECK_NOTHROW(make_table_ring(2, z2_add, z2_mul));

    // mul(x, y) = x has no two-sided identity
    CHECK_THROWS_WITH_AS(make_table_ring(2, z2_add, {0, 0, 1, 1}),
                         "no two-sided multiplicative identity in mul table", RingError);

    // corrupt one entry of Z4's mul table; the reported witness must re-verify
    FiniteRing z4 = make_zmod(4);
    std::vector<ElementId> add(16), mul(16);
    for (ElementId x = 0; x < 4; ++x)
        for (ElementId y = 0; y < 4; ++y) {
            add[x * 4 + y] = z4.add(x, y);
            mul[x * 4 + y] = z4.mul(x, y);
        }
    mul[2 * 4 + 3] = 1;  // 2*3 = 2, corrupted to 1
    try {
        make_table_ring(4, add, mul);
        FAIL("corrupted table accepted");
    } catch (const RingError& e) {
        CHECK(e.code() == RingError::Code::AxiomViolation);
        CHECK(!e.witness().empty());
    }
}

TEST_CASE("involution validation") {
    FiniteRing z2 = make_zmod(2);
    CHECK_NOTHROW(StarRing::create(make_product(z2, z2), swap_star(z2, z2), "swap"));
    CHECK_NOTHROW(with_identity(make_zmod(4)));

    // identity is not anti-multiplicative on a noncommutative ring
    FiniteRing m2 = make_matrix_ring(z2, 2);
    try {
        StarRing::create(m2, identity_star(m2), "identity");
        FAIL("identity involution accepted on M2");
    } catch (const RingError& e) {
        CHECK(e.code() == RingError::Code::InvolutionViolation);
        REQUIRE(e.witness().size() == 2);
        const ElementId x = e.witness()[0], y = e.witness()[1];
        CHECK(m2.mul(x, y) != m2.mul(y, x));
    }

    // swap needs identical factors
    CHECK_THROWS_AS(swap_star(z2, make_zmod(3)), RingError);
}

TEST_CASE("constructor outputs survive an independent validator re-run") {
    CHECK_NOTHROW(validate_ring_tables(make_zmod(6)));
    CHECK_NOTHROW(validate_ring_tables(make_gf(9)));
    CHECK_NOTHROW(validate_ring_tables(make_product(make_zmod(2), make_zmod(4))));
    CHECK_NOTHROW(validate_ring_tables(make_matrix_ring(make_zmod(3), 2)));
}

TEST_CASE("star is an involution fixing 0 and 1 on every built *-ring") {
    std::vector<std::shared_ptr<const StarRing>> rings;
    for (int n = 1; n <= 6; ++n) rings.push_back(with_identity(make_zmod(n)));
    FiniteRing f9 = make_gf(9);
    rings.push_back(StarRing::create(f9, frobenius_star(f9, 3), "frobenius"));
    FiniteRing z3 = make_zmod(3);
    rings.push_back(StarRing::create(make_product(z3, z3), swap_star(z3, z3), "swap"));
    rings.push_back(m2_conj_transpose(make_zmod(3)));

    for (const auto& s : rings) {
        const FiniteRing& r = s->ring();
        CHECK(s->star(r.zero()) == r.zero());
        CHECK(s->star(r.one()) == r.one());
        for (ElementId x = 0; x < r.order(); ++x) CHECK(s->star(s->star(x)) == x);
    }
}

TEST_CASE("conjugate-transpose star validates at n=2 over every base of order <= 4") {
    std::vector<std::shared_ptr<const StarRing>> bases;
    for (int n = 1; n <= 4; ++n) bases.push_back(with_identity(make_zmod(n)));
    FiniteRing f4 = make_gf(4);
    bases.push_back(with_identity(f4));
    bases.push_back(StarRing::create(f4, frobenius_star(f4, 2), "frobenius"));
    FiniteRing z2 = make_zmod(2);
    bases.push_back(StarRing::create(make_product(z2, z2), swap_star(z2, z2), "swap"));

    for (const auto& base : bases) {
        FiniteRing m = make_matrix_ring(base->ring(), 2);
        // StarRing::create runs the exhaustive involution axiom check.
        CHECK_NOTHROW(StarRing::create(std::move(m), conjugate_transpose_star(*base, 2),
                                       "conjugate-transpose"));
    }
}

TEST_CASE("corner embedding preserves add, mul and star, and maps one to p") {
    auto m2z2 = m2_conj_transpose(make_zmod(2));
    for (ElementId p : m2z2->sets().projections) {
        auto corner = m2z2->corner(p);
        const FiniteRing& c = corner->ring->ring();
        const auto& embed = corner->embed;
        CHECK(embed[c.one()] == p);
        CHECK(embed[c.zero()] == m2z2->ring().zero());
        for (ElementId x = 0; x < c.order(); ++x) {
            CHECK(m2z2->star(embed[x]) == embed[corner->ring->star(x)]);
            for (ElementId y = 0; y < c.order(); ++y) {
                CHECK(m2z2->ring().add(embed[x], embed[y]) == embed[c.add(x, y)]);
                CHECK(m2z2->ring().mul(embed[x], embed[y]) == embed[c.mul(x, y)]);
            }
        }
    }
}
