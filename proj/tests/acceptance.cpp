// Acceptance suite: one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "starring/builders.hpp"
#include "starring/theorems.hpp"

using namespace starring;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::shared_ptr<const StarRing> with_identity(FiniteRing r) {
    auto star = identity_star(r);
    return StarRing::create(std::move(r), std::move(star), "identity");
}

std::shared_ptr<const StarRing> m2_conj_transpose(std::shared_ptr<const StarRing> base) {
    FiniteRing m = make_matrix_ring(base->ring(), 2);
    return StarRing::create(std::move(m), conjugate_transpose_star(*base, 2),
                            "conjugate-transpose");
}

bool holds(const StarRing& s, Predicate p) { return is_predicate(s, p).holds; }

bool claim_ok_everywhere(const std::vector<CorpusEntry>& corpus, TheoremId id, int* checked) {
    *checked = 0;
    for (const CorpusEntry& e : corpus) {
        if (!e.ring) continue;
        const ClaimVerdict v = check_claim(*e.ring, id);
        if (v.status == ClaimVerdict::Status::Violated) {
            std::cerr << "  violated: " << theorem_name(id) << " on " << e.label << " ("
                      << v.detail << ")\n";
            return false;
        }
        if (v.status == ClaimVerdict::Status::Verified) ++*checked;
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
    const std::string cmd = std::string(STARRING_CLI_PATH) + " " + args + " > " + out_path +
                            " 2> /dev/null";
    return std::system(cmd.c_str());
}

}  // namespace

int main() {
    const auto corpus = default_corpus();

    {  // 1. Z2 x Z2 with swap
        const auto start = std::chrono::steady_clock::now();
        FiniteRing z2 = make_zmod(2);
        auto swap = StarRing::create(make_product(z2, z2), swap_star(z2, z2), "swap");
        const bool pass = holds(*swap, Predicate::Clean) && holds(*swap, Predicate::StronglyClean) &&
                          holds(*swap, Predicate::Boolean) &&
                          swap->sets().projections == std::vector<ElementId>{0, 3} &&
                          !holds(*swap, Predicate::StarClean) &&
                          !holds(*swap, Predicate::StronglyStarClean);
        const double t = seconds_since(start);
        report(1, "boolean product with swap star classifies as strongly clean, not *-clean",
               pass && t < 1.0, "in " + std::to_string(t) + " s");
    }

    {  // 2. M2 is never strongly *-clean; M2(Z2) is *-clean
        const auto start = std::chrono::steady_clock::now();
        FiniteRing z2 = make_zmod(2);
        std::vector<std::shared_ptr<const StarRing>> bases{
            with_identity(z2), with_identity(make_zmod(3)), with_identity(make_zmod(4)),
            StarRing::create(make_product(z2, z2), swap_star(z2, z2), "swap")};
        bool pass = true;
        for (const auto& base : bases)
            pass = pass && !holds(*m2_conj_transpose(base), Predicate::StronglyStarClean);
        pass = pass && holds(*m2_conj_transpose(bases[0]), Predicate::StarClean);
        const double t = seconds_since(start);
        report(2, "M2 over four bases not strongly *-clean; M2(Z2) *-clean",
               pass && t < 10.0, "in " + std::to_string(t) + " s");
    }

    {  // 3. strongly *-clean <=> strongly clean and P = Id, corpus-wide
        const auto start = std::chrono::steady_clock::now();
        int checked = 0;
        const bool pass = claim_ok_everywhere(corpus, TheoremId::ThmChar, &checked) && checked > 0;
        const double t = seconds_since(start);
        report(3, "strong *-cleanness criterion agrees on every corpus entry",
               pass && t < 120.0,
               std::to_string(checked) + " entries in " + std::to_string(t) + " s");
    }

    {  // 4. the three equivalence batteries, corpus-wide
        const auto start = std::chrono::steady_clock::now();
        int a = 0, b = 0, c = 0;
        bool pass = claim_ok_everywhere(corpus, TheoremId::PropPinj, &a) &&
                    claim_ok_everywhere(corpus, TheoremId::PropSreg, &b) &&
                    claim_ok_everywhere(corpus, TheoremId::ThmSur, &c);
        // spot-check the all-false and all-true corners of the battery
        auto z4 = with_identity(make_zmod(4));
        FiniteRing f4 = make_gf(4);
        auto frob = StarRing::create(f4, frobenius_star(f4, 2), "frobenius");
        pass = pass && check_claim(*z4, TheoremId::PropPinj).detail == "all conditions false" &&
               check_claim(*frob, TheoremId::PropPinj).detail == "all conditions true" &&
               check_claim(*frob, TheoremId::ThmSur).detail == "all conditions true";
        const double t = seconds_since(start);
        report(4, "regularity equivalence batteries report zero violations",
               pass && t < 120.0, "in " + std::to_string(t) + " s");
    }

    {  // 5. corner transfer, elementwise
        int checked = 0;
        const bool pass = claim_ok_everywhere(corpus, TheoremId::ThmCorner, &checked);
        report(5, "strong *-cleanness transfers between R and pRp elementwise", pass,
               std::to_string(checked) + " entries");
    }

    {  // 6. M2(Z2): improper involution, not *-unit regular
        auto m2z2 = m2_conj_transpose(with_identity(make_zmod(2)));
        const PredicateResult proper = is_predicate(*m2z2, Predicate::ProperInvolution);
        const bool cw_ok = !proper.holds && proper.counterwitness != m2z2->ring().zero() &&
                           m2z2->ring().mul(m2z2->star(proper.counterwitness),
                                            proper.counterwitness) == m2z2->ring().zero();
        const bool pass = cw_ok && !holds(*m2z2, Predicate::StarUnitRegular);
        report(6, "M2(Z2) has an improper involution and is not *-unit regular", pass);
    }

    {  // 7. matrix *-unit regularity criterion, both sides computed independently
        FiniteRing f4 = make_gf(4);
        std::vector<std::pair<std::shared_ptr<const StarRing>, bool>> cases{
            {with_identity(make_zmod(2)), false},
            {with_identity(make_zmod(3)), true},
            {StarRing::create(f4, frobenius_star(f4, 2), "frobenius"), false}};
        bool pass = true;
        for (const auto& [base, expected] : cases) {
            const FiniteRing& r = base->ring();
            bool sum_ok = true;
            for (ElementId a = 0; a < r.order() && sum_ok; ++a)
                for (ElementId b = 0; b < r.order() && sum_ok; ++b) {
                    if (a == r.zero() && b == r.zero()) continue;
                    sum_ok = r.add(r.mul(base->star(a), a), r.mul(base->star(b), b)) != r.zero();
                }
            const bool criterion = holds(*base, Predicate::UnitRegular) && sum_ok;
            const bool direct = holds(*m2_conj_transpose(base), Predicate::StarUnitRegular);
            pass = pass && criterion == direct && direct == expected;
        }
        report(7, "M2 *-unit regularity matches the sum condition (Z3 yes, Z2 no, gf(4) no)",
               pass);
    }

    {  // 8. pruned searches vs the unpruned oracle on small corpus rings
        bool pass = true;
        int rings = 0;
        for (const CorpusEntry& e : corpus) {
            if (!e.ring || e.ring->ring().order() > 16) continue;
            ++rings;
            const StarRing& s = *e.ring;
            for (ElementId a = 0; a < s.ring().order() && pass; ++a) {
                for (DecompMode mode : {DecompMode::Clean, DecompMode::StronglyClean,
                                        DecompMode::StarClean, DecompMode::StronglyStarClean})
                    pass = pass &&
                           decomposition_witness(s, a, mode) == oracle::decomposition_full(s, a, mode);
                for (FactorMode mode : {FactorMode::ProjUnit, FactorMode::UnitProj,
                                        FactorMode::ProjUnitTwoSided, FactorMode::IdemUnitTwoSided})
                    pass = pass &&
                           factorization_witness(s, a, mode) == oracle::factorization_full(s, a, mode);
            }
        }
        report(8, "pruned witness search agrees with the full-product oracle", pass && rings > 0,
               std::to_string(rings) + " rings of order <= 16");
    }

    {  // 9. finite-ring sanity battery
        bool pass = true;
        for (const CorpusEntry& e : corpus) {
            if (!e.ring) continue;
            pass = pass && holds(*e.ring, Predicate::StableRangeOne);
            if (holds(*e.ring, Predicate::UnitRegular)) pass = pass && holds(*e.ring, Predicate::Clean);
        }
        report(9, "stable range 1 and (unit regular => clean) hold corpus-wide", pass);
    }

    {  // 10. byte determinism of the machine suite output
        const std::string dir = "/tmp/starring_acceptance";
        bool pass = std::system(("mkdir -p " + dir).c_str()) == 0;
        pass = pass && run_cli("suite --json", dir + "/run1.json") == 0;
        pass = pass && run_cli("suite --json", dir + "/run2.json") == 0;
        pass = pass && run_cli("suite --json --threads 4", dir + "/run4t.json") == 0;
        const std::string run1 = read_file(dir + "/run1.json");
        pass = pass && !run1.empty() && run1 == read_file(dir + "/run2.json") &&
               run1 == read_file(dir + "/run4t.json");
        report(10, "suite --json output is byte-identical across runs and thread counts", pass);
    }

    if (failures == 0) std::cout << "all criteria passed\n";
    return failures == 0 ? 0 : 1;
}
