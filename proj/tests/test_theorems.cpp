#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starring/builders.hpp"
#include "starring/theorems.hpp"

using namespace starring;

namespace {

std::shared_ptr<const StarRing> with_identity(FiniteRing r) {
    auto star = identity_star(r);
    return StarRing::create(std::move(r), std::move(star), "identity");
}

std::shared_ptr<const StarRing> boolean_swap() {
    FiniteRing z2 = make_zmod(2);
    return StarRing::create(make_product(z2, z2), swap_star(z2, z2), "swap");
}

std::shared_ptr<const StarRing> m2_conj_transpose(const FiniteRing& base) {
    auto base_star = with_identity(base);
    FiniteRing m = make_matrix_ring(base, 2);
    return StarRing::create(std::move(m), conjugate_transpose_star(*base_star, 2),
                            "conjugate-transpose");
}

// Small-entry slice of the default corpus; the full run lives in the
// acceptance suite.
std::vector<CorpusEntry> small_corpus() {
    std::vector<CorpusEntry> corpus;
    for (const CorpusEntry& e : default_corpus())
        if (e.ring && e.ring->ring().order() <= 16) corpus.push_back(e);
    return corpus;
}

}  // namespace

TEST_CASE("claim checker examples") {
    CHECK(check_claim(*boolean_swap(), TheoremId::ThmChar).status ==
          ClaimVerdict::Status::Verified);

    const ClaimVerdict pinj = check_claim(*with_identity(make_zmod(4)), TheoremId::PropPinj);
    CHECK(pinj.status == ClaimVerdict::Status::Verified);
    CHECK(pinj.detail == "all conditions false");

    const ClaimVerdict matrix_sur = check_claim(*with_identity(make_zmod(3)),
                                                TheoremId::PropMatrixSur);
    CHECK(matrix_sur.status == ClaimVerdict::Status::Verified);
    CHECK(matrix_sur.detail == "both sides true");
    CHECK(is_predicate(*m2_conj_transpose(make_zmod(3)), Predicate::StarUnitRegular).holds);
}

TEST_CASE("corner transfer of strong *-cleanness") {
    CHECK(check_claim(*m2_conj_transpose(make_zmod(2)), TheoremId::ThmCorner).status ==
          ClaimVerdict::Status::Verified);
    CHECK(check_claim(*boolean_swap(), TheoremId::ThmCorner).status ==
          ClaimVerdict::Status::Verified);
}

TEST_CASE("matrix rings over nontrivial bases are never strongly *-clean") {
    CHECK(check_claim(*with_identity(make_zmod(2)), TheoremId::CorMatrix).status ==
          ClaimVerdict::Status::Verified);
    CHECK(check_claim(*boolean_swap(), TheoremId::CorMatrix).status ==
          ClaimVerdict::Status::Verified);
    // trivial base: vacuous
    CHECK(check_claim(*with_identity(make_zmod(1)), TheoremId::CorMatrix).status ==
          ClaimVerdict::Status::Verified);
    // over-cap construction is skipped with a reason
    ClaimParams tight;
    tight.max_order = 8;
    const ClaimVerdict v = check_claim(*with_identity(make_zmod(4)), TheoremId::CorMatrix, tight);
    CHECK(v.status == ClaimVerdict::Status::Skipped);
    CHECK(!v.detail.empty());
}

TEST_CASE("M2(Z2) is not *-unit regular") {
    CHECK(check_claim(*with_identity(make_zmod(2)), TheoremId::ExM2Z2).status ==
          ClaimVerdict::Status::Verified);
    CHECK(!is_predicate(*m2_conj_transpose(make_zmod(2)), Predicate::StarUnitRegular).holds);
}

TEST_CASE("separation searches over the default corpus") {
    const auto corpus = default_corpus();

    auto not_star_clean = separation_search(corpus, Predicate::StarClean,
                                            Predicate::StronglyClean);
    REQUIRE(not_star_clean.has_value());
    CHECK(*not_star_clean == "product(zmod(2),zmod(2))+swap");

    auto not_strongly_star_clean = separation_search(corpus, Predicate::StronglyStarClean,
                                                     Predicate::StarClean);
    REQUIRE(not_strongly_star_clean.has_value());
    CHECK(*not_strongly_star_clean == "matrix(zmod(2),n=2)+conjugate-transpose");
}

TEST_CASE("suite over the small corpus slice: zero violations") {
    const auto report = run_paper_suite(small_corpus());
    CHECK(report.violations == 0);
    for (const auto& cell : report.cells)
        CHECK(cell.verdict.status != ClaimVerdict::Status::Violated);
}

TEST_CASE("empty corpus gives an empty successful report") {
    const auto report = run_paper_suite({});
    CHECK(report.cells.empty());
    CHECK(report.violations == 0);
}

TEST_CASE("entries that failed to build are skipped with their reason") {
    std::vector<CorpusEntry> corpus{{"broken", nullptr, "test", "star is not additive"}};
    const auto report = run_paper_suite(corpus);
    CHECK(report.violations == 0);
    for (const auto& cell : report.cells) {
        CHECK(cell.verdict.status == ClaimVerdict::Status::Skipped);
        CHECK(cell.verdict.detail == "star is not additive");
    }
}

TEST_CASE("suite report order is deterministic across thread counts") {
    const auto corpus = small_corpus();
    const auto serial = run_paper_suite(corpus, 1);
    const auto parallel = run_paper_suite(corpus, 4);
    CHECK(serial == parallel);
}

TEST_CASE("corners of *-unit regular corpus rings stay *-unit regular") {
    for (const CorpusEntry& e : small_corpus())
        CHECK(check_claim(*e.ring, TheoremId::PropCornerSur).status ==
              ClaimVerdict::Status::Verified);
}
