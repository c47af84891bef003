#include "starring/io.hpp"

#include <sstream>

#include "starring/builders.hpp"

namespace starring {

using nlohmann::json;

namespace {

void spec_fail(const std::string& msg) {
    throw RingError(RingError::Code::SpecError, msg);
}

const json& require(const json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) spec_fail("missing field '" + std::string(key) + "' in " + context);
    return *it;
}

struct Built {
    FiniteRing ring;
    std::vector<ElementId> star;
    std::string star_label;
};

Built build_spec(const json& doc, int max_order, std::uint64_t seed);

std::vector<ElementId> flatten_table(const json& rows, int order, const char* name) {
    if (!rows.is_array() || static_cast<int>(rows.size()) != order)
        spec_fail(std::string(name) + " table must be an array of " + std::to_string(order) +
                  " rows");
    std::vector<ElementId> flat;
    flat.reserve(static_cast<std::size_t>(order) * order);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != order)
            spec_fail(std::string(name) + " table rows must have length " + std::to_string(order));
        for (const json& v : row) flat.push_back(v.get<ElementId>());
    }
    return flat;
}

Built build_spec(const json& doc, int max_order, std::uint64_t seed) {
    if (!doc.is_object()) spec_fail("spec node must be an object");
    if (doc.contains("version") && doc["version"].get<int>() != 1)
        spec_fail("unsupported schema version");
    const json& ring_node = require(doc, "ring", "spec node");
    const std::string kind = require(ring_node, "kind", "ring node").get<std::string>();
    const json inv = doc.value("involution", json{{"kind", "identity"}});
    const std::string inv_kind = require(inv, "kind", "involution node").get<std::string>();

    auto reject = [&](const std::string& why) {
        spec_fail("involution-inadmissible: '" + inv_kind + "' on " + kind + " (" + why + ")");
    };
    auto resolve_common = [&](const FiniteRing& r) -> std::vector<ElementId> {
        if (inv_kind == "identity") return identity_star(r);
        if (inv_kind == "table") {
            const json& map = require(inv, "map", "involution node");
            return std::vector<ElementId>(map.begin(), map.end());
        }
        reject("only admissible on its matching ring kind");
        return {};
    };

    if (kind == "zmod" || kind == "gf" || kind == "table") {
        FiniteRing r = [&] {
            if (kind == "zmod") return make_zmod(require(ring_node, "n", "zmod").get<int>());
            if (kind == "gf") return make_gf(require(ring_node, "q", "gf").get<int>());
            const int order = require(ring_node, "order", "table ring").get<int>();
            return make_table_ring(order,
                                   flatten_table(require(ring_node, "add", "table ring"), order, "add"),
                                   flatten_table(require(ring_node, "mul", "table ring"), order, "mul"),
                                   "table", seed);
        }();
        if (kind == "gf" && inv_kind == "frobenius") {
            const int q = ring_node["q"].get<int>();
            const int p = gf_characteristic(q);
            if (q == p) reject("frobenius requires q = p^2");
            auto star = frobenius_star(r, p);
            return {std::move(r), std::move(star), "frobenius"};
        }
        auto star = resolve_common(r);
        return {std::move(r), std::move(star), inv_kind};
    }

    if (kind == "product") {
        Built left = build_spec(require(ring_node, "left", "product"), max_order, seed);
        Built right = build_spec(require(ring_node, "right", "product"), max_order, seed);
        FiniteRing prod = make_product(left.ring, right.ring, max_order);
        if (inv_kind == "swap") {
            if (!left.ring.same_tables(right.ring)) reject("factors differ");
            return {std::move(prod), swap_star(left.ring, right.ring), "swap"};
        }
        if (inv_kind == "componentwise")
            return {std::move(prod),
                    componentwise_star(left.ring, left.star, right.ring, right.star),
                    "componentwise"};
        auto star = resolve_common(prod);
        return {std::move(prod), std::move(star), inv_kind};
    }

    if (kind == "matrix") {
        Built base = build_spec(require(ring_node, "base", "matrix"), max_order, seed);
        const int n = require(ring_node, "n", "matrix").get<int>();
        FiniteRing m = make_matrix_ring(base.ring, n, max_order);
        if (inv_kind == "conjugate-transpose") {
            auto base_star =
                StarRing::create(std::move(base.ring), std::move(base.star), base.star_label);
            return {std::move(m), conjugate_transpose_star(*base_star, n), "conjugate-transpose"};
        }
        auto star = resolve_common(m);
        return {std::move(m), std::move(star), inv_kind};
    }

    if (kind == "corner") {
        if (inv_kind != "inherited" && inv_kind != "identity")
            reject("corners inherit the base involution");
        Built base = build_spec(require(ring_node, "base", "corner"), max_order, seed);
        auto parent = StarRing::create(std::move(base.ring), std::move(base.star), base.star_label);
        const ElementId p = require(ring_node, "p", "corner").get<ElementId>();
        auto corner = parent->corner(p);
        std::vector<ElementId> star(corner->ring->ring().order());
        for (ElementId x = 0; x < corner->ring->ring().order(); ++x) star[x] = corner->ring->star(x);
        FiniteRing carrier = corner->ring->ring();
        return {std::move(carrier), std::move(star), "inherited"};
    }

    spec_fail("unknown-kind: '" + kind + "'");
    return {make_zmod(1), {0}, ""};  // unreachable
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string status_name(ClaimVerdict::Status s) {
    switch (s) {
        case ClaimVerdict::Status::Verified: return "verified";
        case ClaimVerdict::Status::Violated: return "violated";
        case ClaimVerdict::Status::Skipped: return "skipped";
    }
    return "?";
}

ClaimVerdict::Status status_from_name(const std::string& s) {
    if (s == "verified") return ClaimVerdict::Status::Verified;
    if (s == "violated") return ClaimVerdict::Status::Violated;
    if (s == "skipped") return ClaimVerdict::Status::Skipped;
    spec_fail("unknown claim status '" + s + "'");
    return ClaimVerdict::Status::Skipped;
}

}  // namespace

std::shared_ptr<const StarRing> parse_ring_spec(const std::string& text, int max_order,
                                                std::uint64_t sample_seed) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        spec_fail("syntax error at line " + std::to_string(line) + ", column " +
                  std::to_string(col) + ": " + e.what());
    }
    Built built = build_spec(doc, max_order, sample_seed);
    return StarRing::create(std::move(built.ring), std::move(built.star), built.star_label);
}

json to_json(const Witness& w) {
    json j;
    j["exhausted"] = w.exhausted;
    if (!w.exhausted) {
        j["first"] = w.first;
        j["second"] = w.second;
    }
    return j;
}

Witness witness_from_json(const json& j) {
    Witness w;
    w.exhausted = j.at("exhausted").get<bool>();
    if (!w.exhausted) {
        w.first = j.at("first").get<ElementId>();
        w.second = j.at("second").get<ElementId>();
    }
    return w;
}

json to_json(const PredicateResult& v) {
    json j;
    j["holds"] = v.holds;
    if (!v.holds) j["counterwitness"] = v.counterwitness;
    return j;
}

json to_json(const ClassificationReport& r) {
    json predicates;
    for (const auto& [p, v] : r.verdicts) predicates[predicate_name(p)] = to_json(v);
    return json{{"type", "classification"},
                {"label", r.label},
                {"order", r.order},
                {"sizes",
                 {{"idempotents", r.n_idempotents},
                  {"projections", r.n_projections},
                  {"units", r.n_units}}},
                {"predicates", predicates}};
}

ClassificationReport classification_from_json(const json& j) {
    ClassificationReport r;
    r.label = j.at("label").get<std::string>();
    r.order = j.at("order").get<int>();
    r.n_idempotents = j.at("sizes").at("idempotents").get<int>();
    r.n_projections = j.at("sizes").at("projections").get<int>();
    r.n_units = j.at("sizes").at("units").get<int>();
    for (Predicate p : kAllPredicates) {
        const json& v = j.at("predicates").at(predicate_name(p));
        PredicateResult result{v.at("holds").get<bool>(),
                               v.value("counterwitness", ElementId{-1})};
        r.verdicts.emplace_back(p, result);
    }
    return r;
}

json to_json(const ClaimVerdict& v) {
    json j;
    j["status"] = status_name(v.status);
    j["detail"] = v.detail;
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

json to_json(const SuiteReport& r) {
    json cells = json::array();
    for (const auto& cell : r.cells)
        cells.push_back(json{{"theorem", cell.theorem},
                             {"ring", cell.ring},
                             {"verdict", to_json(cell.verdict)}});
    return json{{"type", "suite"}, {"violations", r.violations}, {"cells", cells}};
}

SuiteReport suite_from_json(const json& j) {
    SuiteReport r;
    r.violations = j.at("violations").get<int>();
    for (const json& c : j.at("cells")) {
        ClaimVerdict v;
        v.status = status_from_name(c.at("verdict").at("status").get<std::string>());
        v.detail = c.at("verdict").at("detail").get<std::string>();
        if (c.at("verdict").contains("witness"))
            v.witness = c.at("verdict").at("witness").get<std::vector<ElementId>>();
        r.cells.push_back({c.at("theorem").get<std::string>(), c.at("ring").get<std::string>(), v});
    }
    return r;
}

namespace {

std::string render_human(const json& j) {
    std::ostringstream out;
    const std::string type = j.value("type", "");
    if (type == "classification") {
        out << "ring: " << j["label"].get<std::string>() << "  order: " << j["order"] << "\n";
        out << "|Id| = " << j["sizes"]["idempotents"] << "  |P| = " << j["sizes"]["projections"]
            << "  |U| = " << j["sizes"]["units"] << "\n";
        for (Predicate p : kAllPredicates) {
            const json& v = j["predicates"][predicate_name(p)];
            out << "  " << predicate_name(p);
            for (std::size_t k = std::string(predicate_name(p)).size(); k < 22; ++k) out << ' ';
            out << (v["holds"].get<bool>() ? "true" : "false");
            if (v.contains("counterwitness")) out << "   counterwitness: " << v["counterwitness"];
            out << "\n";
        }
    } else if (type == "suite") {
        for (const json& cell : j["cells"]) {
            out << status_name(status_from_name(cell["verdict"]["status"].get<std::string>()))
                << "  " << cell["theorem"].get<std::string>() << "  "
                << cell["ring"].get<std::string>();
            const std::string detail = cell["verdict"]["detail"].get<std::string>();
            if (!detail.empty()) out << "  (" << detail << ")";
            out << "\n";
        }
        out << "violations: " << j["violations"] << "\n";
    } else if (type == "witness") {
        out << "ring: " << j["ring"].get<std::string>() << "  element: " << j["element"]
            << "  mode: " << j["mode"].get<std::string>() << "\n";
        const json& w = j["witness"];
        if (w["exhausted"].get<bool>())
            out << "  none, search exhausted\n";
        else
            out << "  first = " << w["first"] << ", second = " << w["second"] << "\n";
    } else if (type == "sets") {
        out << "ring: " << j["ring"].get<std::string>() << "  " << j["kind"].get<std::string>()
            << ":";
        for (const json& e : j["elements"]) out << " " << e;
        out << "\n";
    } else if (type == "claim") {
        out << "ring: " << j["ring"].get<std::string>() << "  claim: "
            << j["claim"].get<std::string>() << "\n  "
            << j["verdict"]["status"].get<std::string>();
        const std::string detail = j["verdict"]["detail"].get<std::string>();
        if (!detail.empty()) out << ": " << detail;
        if (j["verdict"].contains("witness")) {
            out << "  witness:";
            for (const json& e : j["verdict"]["witness"]) out << " " << e;
        }
        out << "\n";
    } else if (type == "separation") {
        out << "weaker: " << j["weaker"].get<std::string>()
            << "  stronger: " << j["stronger"].get<std::string>() << "\n";
        if (j["found"].get<bool>())
            out << "  separation witness: " << j["ring"].get<std::string>() << "\n";
        else
            out << "  none-found over the corpus\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_report(const json& machine, RenderMode mode) {
    if (mode == RenderMode::Machine) return machine.dump() + "\n";
    return render_human(machine);
}

}  // namespace starring
