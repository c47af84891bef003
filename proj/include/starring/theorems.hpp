#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starring/classify.hpp"
#include "starring/star_ring.hpp"

namespace starring {

enum class TheoremId {
    ThmCorner,      // elementwise corner transfer of strong *-cleanness
    CorCorner,      // corners of a strongly *-clean ring are strongly *-clean
    ThmChar,        // strongly *-clean <=> strongly clean and P(R) = Id(R)
    CorMatrix,      // M_n (n >= 2) over a nontrivial *-ring is not strongly *-clean
    ExSwap,         // boolean with P != Id: strongly clean but not (*-)clean-compatible
    PropPinj,       // regular+proper <=> right P-injective+proper <=> Ra = Ra*a
    PropSreg,       // four equivalents of strongly regular + proper
    ThmSur,         // four equivalents of *-unit regularity
    PropMatrixSur,  // M_n *-unit regular <=> base unit regular + sum condition
    ExM2Z2,         // a*a + a*a = 0 with a != 0 kills *-unit regularity of M_2
    PropCornerSur,  // corners of a *-unit regular ring are *-unit regular
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::ThmCorner, TheoremId::CorCorner,     TheoremId::ThmChar,
    TheoremId::CorMatrix, TheoremId::ExSwap,        TheoremId::PropPinj,
    TheoremId::PropSreg,  TheoremId::ThmSur,        TheoremId::PropMatrixSur,
    TheoremId::ExM2Z2,    TheoremId::PropCornerSur,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct ClaimVerdict {
    enum class Status { Verified, Violated, Skipped };
    Status status = Status::Verified;
    std::string detail;                // human-readable; skip reason or witness description
    std::vector<ElementId> witness;    // offending ids when violated

    bool operator==(const ClaimVerdict&) const = default;
};

struct ClaimParams {
    int matrix_n = 2;                  // n for matrix claims
    int max_order = kDefaultMaxOrder;  // cap for rings the checker must build
};

/// Evaluates one numbered claim on one *-ring. Equivalences evaluate all
/// sides independently; implications check hypothesis => conclusion and
/// report Verified when the hypothesis fails. Over-cap constructions are
/// Skipped with a reason.
ClaimVerdict check_claim(const StarRing& s, TheoremId id, const ClaimParams& params = {});

struct CorpusEntry {
    std::string label;
    std::shared_ptr<const StarRing> ring;  // null when the build failed
    std::string provenance;
    std::string build_error;               // skip reason when ring is null
};

/// The fixed default corpus: Z_1..Z_8, small Galois fields with identity
/// and Frobenius stars, Z_2 x Z_2 and Z_3 x Z_3 with identity/swap/
/// componentwise stars, M_2 over the bases of order <= 4 with the
/// conjugate-transpose star, and every corner of all of these.
std::vector<CorpusEntry> default_corpus(int max_order = kDefaultMaxOrder);

struct SuiteReport {
    struct Cell {
        std::string theorem;
        std::string ring;
        ClaimVerdict verdict;

        bool operator==(const Cell&) const = default;
    };
    std::vector<Cell> cells;  // sorted by (theorem, ring label)
    int violations = 0;
    double seconds = 0.0;     // wall clock; excluded from machine renderings

    bool operator==(const SuiteReport& o) const {
        return cells == o.cells && violations == o.violations;
    }
};

/// Every theorem over every corpus entry; cells fan out over `threads`
/// workers and assemble in deterministic order regardless of scheduling.
SuiteReport run_paper_suite(const std::vector<CorpusEntry>& corpus, int threads = 1,
                            const ClaimParams& params = {});

/// First corpus ring with weaker = true and stronger = false, or nullopt.
std::optional<std::string> separation_search(const std::vector<CorpusEntry>& corpus,
                                             Predicate stronger, Predicate weaker);

}  // namespace starring
