#include "starring/star_ring.hpp"

#include <algorithm>

namespace starring {

StarRing::StarRing(FiniteRing ring, std::vector<ElementId> star, std::string star_label)
    : ring_(std::move(ring)), star_(std::move(star)), star_label_(std::move(star_label)) {}

std::shared_ptr<const StarRing> StarRing::create(FiniteRing ring, std::vector<ElementId> star,
                                                 std::string star_label) {
    validate_involution(ring, star);
    return std::shared_ptr<const StarRing>(
        new StarRing(std::move(ring), std::move(star), std::move(star_label)));
}

const StructureSets& StarRing::sets() const {
    std::call_once(sets_once_, [this] {
        const FiniteRing& r = ring_;
        const int n = r.order();
        StructureSets out;
        out.inverse.assign(n, -1);
        for (ElementId x = 0; x < n; ++x) {
            if (r.mul(x, x) == x) {
                out.idempotents.push_back(x);
                if (star_[x] == x) out.projections.push_back(x);
                bool central = true;
                for (ElementId y = 0; y < n && central; ++y)
                    central = r.mul(x, y) == r.mul(y, x);
                if (central) out.central_idempotents.push_back(x);
            }
            for (ElementId y = 0; y < n; ++y) {
                if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
                    out.inverse[x] = y;
                    out.units.push_back(x);
                    break;
                }
            }
        }
        sets_ = std::move(out);
    });
    return sets_;
}

std::shared_ptr<const Corner> StarRing::corner(ElementId p) const {
    if (p < 0 || p >= ring_.order() || !is_projection(p))
        throw RingError(RingError::Code::InvalidProjection,
                        "element " + std::to_string(p) + " is not a projection", {p});

    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = corners_.find(p);
        if (it != corners_.end()) return it->second;
    }

    const FiniteRing& r = ring_;
    const int n = r.order();

    // Carrier {pxp : x in R}, sorted by parent id.
    std::vector<char> member(n, 0);
    for (ElementId x = 0; x < n; ++x) member[r.mul(r.mul(p, x), p)] = 1;
    std::vector<ElementId> embed;
    std::vector<ElementId> local(n, -1);
    for (ElementId x = 0; x < n; ++x)
        if (member[x]) {
            local[x] = static_cast<ElementId>(embed.size());
            embed.push_back(x);
        }

    const int m = static_cast<int>(embed.size());
    std::vector<ElementId> add(static_cast<std::size_t>(m) * m);
    std::vector<ElementId> mul(add.size());
    std::vector<ElementId> star(m);
    for (int i = 0; i < m; ++i) {
        star[i] = local[star_[embed[i]]];
        for (int j = 0; j < m; ++j) {
            add[static_cast<std::size_t>(i) * m + j] = local[r.add(embed[i], embed[j])];
            mul[static_cast<std::size_t>(i) * m + j] = local[r.mul(embed[i], embed[j])];
        }
    }

    std::string label = "corner(" + this->label() + ",p=" + std::to_string(p) + ")";
    auto ring = StarRing::create(FiniteRing(m, std::move(add), std::move(mul), std::move(label)),
                                 std::move(star), "inherited");

    auto result = std::make_shared<const Corner>(Corner{std::move(ring), std::move(embed), p});
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto [it, inserted] = corners_.emplace(p, result);
    return it->second;  // first builder wins on a race
}

std::optional<PredicateResult> StarRing::memo_get(int predicate) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    return memo_[predicate];
}

void StarRing::memo_put(int predicate, PredicateResult result) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    memo_[predicate] = result;
}

std::shared_ptr<const StarRing> attach_involution(FiniteRing r, std::vector<ElementId> star,
                                                  std::string star_label) {
    return StarRing::create(std::move(r), std::move(star), std::move(star_label));
}

std::shared_ptr<const Corner> make_corner_ring(const StarRing& s, ElementId p) {
    return s.corner(p);
}

}  // namespace starring
