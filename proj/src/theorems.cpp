#include "starring/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iterator>
#include <thread>
#include <tuple>

#include "starring/builders.hpp"

namespace starring {
namespace {

ClaimVerdict verified(std::string detail = "") {
    return {ClaimVerdict::Status::Verified, std::move(detail), {}};
}
ClaimVerdict violated(std::string detail, std::vector<ElementId> witness) {
    return {ClaimVerdict::Status::Violated, std::move(detail), std::move(witness)};
}
ClaimVerdict skipped(std::string reason) {
    return {ClaimVerdict::Status::Skipped, std::move(reason), {}};
}

bool holds(const StarRing& s, Predicate p) { return is_predicate(s, p).holds; }

bool projections_equal_idempotents(const StarRing& s) {
    return s.sets().projections == s.sets().idempotents;
}

bool is_commutative(const FiniteRing& r) {
    for (ElementId x = 0; x < r.order(); ++x)
        for (ElementId y = x + 1; y < r.order(); ++y)
            if (r.mul(x, y) != r.mul(y, x)) return false;
    return true;
}

/// Builds M_n(s) with the conjugate-transpose star, or nullptr with a
/// reason when the cap forbids it.
std::shared_ptr<const StarRing> try_matrix_star(const StarRing& s, int n, int max_order,
                                                std::string* reason) {
    try {
        FiniteRing m = make_matrix_ring(s.ring(), n, max_order);
        return StarRing::create(std::move(m), conjugate_transpose_star(s, n),
                                "conjugate-transpose");
    } catch (const RingError& e) {
        if (e.code() == RingError::Code::SizeCapExceeded) {
            *reason = e.what();
            return nullptr;
        }
        throw;
    }
}

ClaimVerdict check_thm_corner(const StarRing& s) {
    for (ElementId p : s.sets().projections) {
        const auto corner = s.corner(p);
        const int m = corner->ring->ring().order();
        for (ElementId a = 0; a < m; ++a) {
            const bool in_parent =
                !decomposition_witness(s, corner->embed[a], DecompMode::StronglyStarClean)
                     .exhausted;
            const bool in_corner =
                !decomposition_witness(*corner->ring, a, DecompMode::StronglyStarClean).exhausted;
            if (in_parent != in_corner)
                return violated("strongly *-clean verdicts differ between R and pRp at (p, a)",
                                {p, corner->embed[a]});
        }
    }
    return verified();
}

ClaimVerdict check_cor_corner(const StarRing& s) {
    if (!holds(s, Predicate::StronglyStarClean)) return verified("vacuous: R not strongly *-clean");
    for (ElementId p : s.sets().projections) {
        PredicateResult v = is_predicate(*s.corner(p)->ring, Predicate::StronglyStarClean);
        if (!v.holds)
            return violated("corner not strongly *-clean at (p, corner counterwitness)",
                            {p, v.counterwitness});
    }
    return verified();
}

ClaimVerdict check_thm_char(const StarRing& s) {
    const bool lhs = holds(s, Predicate::StronglyStarClean);
    const bool rhs = holds(s, Predicate::StronglyClean) && projections_equal_idempotents(s);
    if (lhs != rhs)
        return violated(std::string("strongly *-clean is ") + (lhs ? "true" : "false") +
                            " but strongly clean && P=Id is " + (rhs ? "true" : "false"),
                        {});
    return verified(lhs ? "both sides true" : "both sides false");
}

ClaimVerdict check_cor_matrix(const StarRing& s, const ClaimParams& params) {
    if (s.ring().order() == 1) return verified("vacuous: trivial base ring");
    const int n = std::max(2, params.matrix_n);
    std::string reason;
    auto m = try_matrix_star(s, n, params.max_order, &reason);
    if (!m) return skipped(reason);

    // Constructive engine: E11 + E12 is idempotent but not a projection.
    std::vector<ElementId> entries(static_cast<std::size_t>(n) * n, s.ring().zero());
    entries[0] = s.ring().one();
    entries[1] = s.ring().one();
    const ElementId witness = matrix_encode(s.ring().order(), n, entries);
    if (!m->is_idempotent(witness) || m->is_projection(witness))
        return violated("E11+E12 is not an idempotent non-projection", {witness});
    if (holds(*m, Predicate::StronglyStarClean))
        return violated("matrix ring is strongly *-clean", {});
    return verified();
}

ClaimVerdict check_ex_swap(const StarRing& s) {
    const bool hypothesis =
        holds(s, Predicate::Boolean) && !projections_equal_idempotents(s);
    if (!hypothesis) return verified("vacuous: not a boolean ring with P != Id");
    if (!holds(s, Predicate::StronglyClean)) return violated("boolean ring not strongly clean", {});
    if (holds(s, Predicate::StronglyStarClean))
        return violated("strongly *-clean despite P != Id", {});
    if (is_commutative(s.ring()) && holds(s, Predicate::StarClean))
        return violated("commutative ring *-clean but not strongly *-clean", {});
    return verified();
}

ClaimVerdict check_prop_pinj(const StarRing& s) {
    const FiniteRing& r = s.ring();
    const bool proper = holds(s, Predicate::ProperInvolution);
    const bool v1 = holds(s, Predicate::Regular) && proper;
    const bool v2 = holds(s, Predicate::RightPInjective) && proper;

    bool v3 = true;
    ElementId v3_witness = -1;
    for (ElementId a = 0; a < r.order() && v3; ++a) {
        if (principal_ideal(r, a, Side::Left) !=
            principal_ideal(r, r.mul(s.star(a), a), Side::Left)) {
            v3 = false;
            v3_witness = a;
        }
    }

    if (v1 != v2 || v2 != v3)
        return violated("conditions (1),(2),(3) disagree: " + std::to_string(v1) + "," +
                            std::to_string(v2) + "," + std::to_string(v3),
                        v3_witness >= 0 ? std::vector<ElementId>{v3_witness}
                                        : std::vector<ElementId>{});
    return verified(v1 ? "all conditions true" : "all conditions false");
}

ClaimVerdict check_prop_sreg(const StarRing& s) {
    const FiniteRing& r = s.ring();
    const bool sreg = holds(s, Predicate::StronglyRegular);
    const bool v1 = sreg && holds(s, Predicate::ProperInvolution);
    const bool v2 = sreg && projections_equal_idempotents(s);

    bool v3 = holds(s, Predicate::StarAbelian);
    for (ElementId a = 0; a < r.order() && v3; ++a) {
        bool found = false;
        const auto a_ideal = principal_ideal(r, a, Side::Right);
        for (ElementId p : s.sets().projections) {
            if (!s.is_unit(r.sub(a, p))) continue;
            // aR intersect pR = 0
            const auto p_ideal = principal_ideal(r, p, Side::Right);
            std::vector<ElementId> both;
            std::set_intersection(a_ideal.begin(), a_ideal.end(), p_ideal.begin(), p_ideal.end(),
                                  std::back_inserter(both));
            if (both == std::vector<ElementId>{r.zero()}) {
                found = true;
                break;
            }
        }
        v3 = found;
    }

    bool v4 = true;
    for (ElementId a = 0; a < r.order() && v4; ++a)
        v4 = !factorization_witness(s, a, FactorMode::ProjUnitTwoSided).exhausted;

    if (v1 != v2 || v2 != v3 || v3 != v4)
        return violated("conditions (1)..(4) disagree: " + std::to_string(v1) + "," +
                            std::to_string(v2) + "," + std::to_string(v3) + "," +
                            std::to_string(v4),
                        {});
    return verified(v1 ? "all conditions true" : "all conditions false");
}

ClaimVerdict check_thm_sur(const StarRing& s) {
    const FiniteRing& r = s.ring();
    const bool ureg = holds(s, Predicate::UnitRegular);
    const bool v1 = ureg && holds(s, Predicate::ProperInvolution);
    const bool v2 = ureg && holds(s, Predicate::StarRegular);
    bool v3 = true, v4 = true;
    for (ElementId a = 0; a < r.order() && v3; ++a)
        v3 = !factorization_witness(s, a, FactorMode::ProjUnit).exhausted;
    for (ElementId a = 0; a < r.order() && v4; ++a)
        v4 = !factorization_witness(s, a, FactorMode::UnitProj).exhausted;
    if (v1 != v2 || v2 != v3 || v3 != v4)
        return violated("conditions (1)..(4) disagree: " + std::to_string(v1) + "," +
                            std::to_string(v2) + "," + std::to_string(v3) + "," +
                            std::to_string(v4),
                        {});
    return verified(v1 ? "all conditions true" : "all conditions false");
}

/// No nonzero tuple (a_1..a_n) with a_1*a_1 + ... + a_n*a_n = 0.
bool sum_condition(const StarRing& s, int n, std::vector<ElementId>* witness) {
    const FiniteRing& r = s.ring();
    std::vector<ElementId> tuple(n, 0);
    while (true) {
        // advance odometer (skip the all-zero tuple)
        int k = n - 1;
        while (k >= 0 && tuple[k] == r.order() - 1) tuple[k--] = 0;
        if (k < 0) return true;
        ++tuple[k];

        ElementId sum = r.zero();
        for (ElementId a : tuple) sum = r.add(sum, r.mul(s.star(a), a));
        if (sum == r.zero()) {
            *witness = tuple;
            return false;
        }
    }
}

ClaimVerdict check_prop_matrix_sur(const StarRing& s, const ClaimParams& params) {
    const int n = params.matrix_n;
    std::string reason;
    auto m = try_matrix_star(s, n, params.max_order, &reason);
    if (!m) return skipped(reason);

    std::vector<ElementId> tuple;
    const bool rhs = holds(s, Predicate::UnitRegular) && sum_condition(s, n, &tuple);
    const bool lhs = holds(*m, Predicate::StarUnitRegular);
    if (lhs != rhs)
        return violated("matrix *-unit regularity does not match the base criterion", tuple);
    return verified(lhs ? "both sides true" : "both sides false");
}

ClaimVerdict check_ex_m2z2(const StarRing& s, const ClaimParams& params) {
    const FiniteRing& r = s.ring();
    ElementId bad = -1;
    for (ElementId a = 0; a < r.order() && bad < 0; ++a)
        if (a != r.zero() && r.add(r.mul(s.star(a), a), r.mul(s.star(a), a)) == r.zero()) bad = a;
    if (bad < 0) return verified("vacuous: no nonzero a with a*a + a*a = 0");

    std::string reason;
    auto m = try_matrix_star(s, 2, params.max_order, &reason);
    if (!m) return skipped(reason);

    // A = [[a,0],[a,0]] satisfies A*A = 0 with A != 0.
    const std::vector<ElementId> entries{bad, r.zero(), bad, r.zero()};
    const ElementId A = matrix_encode(r.order(), 2, entries);
    const ElementId zero = m->ring().zero();
    if (A == zero || m->ring().mul(m->star(A), A) != zero)
        return violated("constructed matrix is not a properness counterwitness", {A});
    if (is_predicate(*m, Predicate::ProperInvolution).holds)
        return violated("matrix involution proper despite counterwitness", {A});
    if (holds(*m, Predicate::StarUnitRegular))
        return violated("matrix ring *-unit regular despite improper involution", {A});
    return verified();
}

ClaimVerdict check_prop_corner_sur(const StarRing& s) {
    if (!holds(s, Predicate::StarUnitRegular)) return verified("vacuous: R not *-unit regular");
    for (ElementId p : s.sets().projections) {
        PredicateResult v = is_predicate(*s.corner(p)->ring, Predicate::StarUnitRegular);
        if (!v.holds)
            return violated("corner not *-unit regular at (p, corner counterwitness)",
                            {p, v.counterwitness});
    }
    return verified();
}

}  // namespace

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::ThmCorner: return "thm-corner";
        case TheoremId::CorCorner: return "cor-corner";
        case TheoremId::ThmChar: return "thm-char";
        case TheoremId::CorMatrix: return "cor-matrix";
        case TheoremId::ExSwap: return "ex-swap";
        case TheoremId::PropPinj: return "prop-pinj";
        case TheoremId::PropSreg: return "prop-sreg";
        case TheoremId::ThmSur: return "thm-sur";
        case TheoremId::PropMatrixSur: return "prop-matrix-sur";
        case TheoremId::ExM2Z2: return "ex-m2z2";
        case TheoremId::PropCornerSur: return "prop-corner-sur";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : kAllTheorems)
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

ClaimVerdict check_claim(const StarRing& s, TheoremId id, const ClaimParams& params) {
    switch (id) {
        case TheoremId::ThmCorner: return check_thm_corner(s);
        case TheoremId::CorCorner: return check_cor_corner(s);
        case TheoremId::ThmChar: return check_thm_char(s);
        case TheoremId::CorMatrix: return check_cor_matrix(s, params);
        case TheoremId::ExSwap: return check_ex_swap(s);
        case TheoremId::PropPinj: return check_prop_pinj(s);
        case TheoremId::PropSreg: return check_prop_sreg(s);
        case TheoremId::ThmSur: return check_thm_sur(s);
        case TheoremId::PropMatrixSur: return check_prop_matrix_sur(s, params);
        case TheoremId::ExM2Z2: return check_ex_m2z2(s, params);
        case TheoremId::PropCornerSur: return check_prop_corner_sur(s);
    }
    throw RingError(RingError::Code::InvalidParameter, "unknown theorem id");
}

std::vector<CorpusEntry> default_corpus(int max_order) {
    std::vector<CorpusEntry> corpus;
    auto push = [&](std::shared_ptr<const StarRing> ring, std::string provenance) {
        corpus.push_back({ring->label(), std::move(ring), std::move(provenance), ""});
    };

    for (int n = 1; n <= 8; ++n)
        push(StarRing::create(make_zmod(n), identity_star(make_zmod(n)), "identity"),
             "modular ring");

    for (int q : {2, 3, 4, 5, 7, 9}) {
        FiniteRing field = make_gf(q);
        push(StarRing::create(field, identity_star(field), "identity"), "finite field");
    }
    for (int q : {4, 9}) {
        FiniteRing field = make_gf(q);
        auto star = frobenius_star(field, gf_characteristic(q));
        push(StarRing::create(std::move(field), std::move(star), "frobenius"),
             "finite field, conjugation analogue");
    }

    for (int n : {2, 3}) {
        const FiniteRing factor = make_zmod(n);
        FiniteRing prod = make_product(factor, factor, max_order);
        push(StarRing::create(prod, identity_star(prod), "identity"), "square product");
        push(StarRing::create(prod, swap_star(factor, factor), "swap"), "square product");
        push(StarRing::create(prod,
                              componentwise_star(factor, identity_star(factor), factor,
                                                 identity_star(factor)),
                              "componentwise"),
             "square product");
    }

    // M_2 over the distinct star-ring bases of order <= 4 collected so far.
    std::vector<const CorpusEntry*> bases;
    for (const CorpusEntry& e : corpus) {
        if (e.ring->ring().order() > 4) continue;
        bool dup = false;
        for (const CorpusEntry* b : bases)
            dup = dup || (b->ring->ring().same_tables(e.ring->ring()) &&
                          b->ring->star_table() == e.ring->star_table());
        if (!dup) bases.push_back(&e);
    }
    for (const CorpusEntry* b : bases) {
        FiniteRing m = make_matrix_ring(b->ring->ring(), 2, max_order);
        push(StarRing::create(std::move(m), conjugate_transpose_star(*b->ring, 2),
                              "conjugate-transpose"),
             "matrix ring over " + b->label);
    }

    // Corners of everything above at every projection.
    const std::size_t fixed = corpus.size();
    for (std::size_t i = 0; i < fixed; ++i)
        for (ElementId p : corpus[i].ring->sets().projections)
            push(corpus[i].ring->corner(p)->ring, "corner of " + corpus[i].label);

    return corpus;
}

SuiteReport run_paper_suite(const std::vector<CorpusEntry>& corpus, int threads,
                            const ClaimParams& params) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n_theorems = std::size(kAllTheorems);
    const std::size_t n_cells = n_theorems * corpus.size();
    std::vector<SuiteReport::Cell> cells(n_cells);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n_cells; i = next.fetch_add(1)) {
            const TheoremId id = kAllTheorems[i / corpus.size()];
            const CorpusEntry& entry = corpus[i % corpus.size()];
            SuiteReport::Cell& cell = cells[i];
            cell.theorem = theorem_name(id);
            cell.ring = entry.label;
            cell.verdict = entry.ring ? check_claim(*entry.ring, id, params)
                                      : skipped(entry.build_error);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return std::tie(a.theorem, a.ring) < std::tie(b.theorem, b.ring);
    });

    SuiteReport report;
    report.cells = std::move(cells);
    for (const auto& cell : report.cells)
        if (cell.verdict.status == ClaimVerdict::Status::Violated) ++report.violations;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::optional<std::string> separation_search(const std::vector<CorpusEntry>& corpus,
                                             Predicate stronger, Predicate weaker) {
    for (const CorpusEntry& entry : corpus) {
        if (!entry.ring) continue;
        if (is_predicate(*entry.ring, weaker).holds &&
            !is_predicate(*entry.ring, stronger).holds)
            return entry.label;
    }
    return std::nullopt;
}

}  // namespace starring
