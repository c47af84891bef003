#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "starring/builders.hpp"
#include "starring/io.hpp"

namespace {

using namespace starring;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw RingError(RingError::Code::SpecError, "cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const json& report, bool machine) {
    std::cout << render_report(report, machine ? RenderMode::Machine : RenderMode::Human);
}

DecompMode decomp_mode_from_name(const std::string& name) {
    if (name == "clean") return DecompMode::Clean;
    if (name == "strongly-clean") return DecompMode::StronglyClean;
    if (name == "star-clean") return DecompMode::StarClean;
    if (name == "strongly-star-clean") return DecompMode::StronglyStarClean;
    throw RingError(RingError::Code::SpecError, "unknown decomposition mode '" + name + "'");
}

FactorMode factor_mode_from_name(const std::string& name) {
    if (name == "pu") return FactorMode::ProjUnit;
    if (name == "up") return FactorMode::UnitProj;
    if (name == "pu-two-sided") return FactorMode::ProjUnitTwoSided;
    if (name == "eu-two-sided") return FactorMode::IdemUnitTwoSided;
    throw RingError(RingError::Code::SpecError, "unknown factorization mode '" + name + "'");
}

SetKind set_kind_from_name(const std::string& name) {
    if (name == "idempotents") return SetKind::Idempotents;
    if (name == "projections") return SetKind::Projections;
    if (name == "units") return SetKind::Units;
    if (name == "central-idempotents") return SetKind::CentralIdempotents;
    throw RingError(RingError::Code::SpecError, "unknown set kind '" + name + "'");
}

void check_element(const StarRing& s, ElementId a) {
    if (a < 0 || a >= s.ring().order())
        throw RingError(RingError::Code::SpecError,
                        "element " + std::to_string(a) + " out of range for order " +
                            std::to_string(s.ring().order()));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite *-ring workbench: construction, witness search, claim verification"};
    app.require_subcommand(1);

    bool machine = false;
    int max_order = kDefaultMaxOrder;
    std::uint64_t seed = 0x5eed;
    app.fallthrough();
    app.add_flag("--json", machine, "machine-readable canonical JSON output");
    app.add_option("--max-order", max_order, "size cap for constructed rings");
    app.add_option("--seed", seed, "seed for sampled validation above the exhaustive bound");

    std::string spec_path, kind = "projections", decomp = "clean", factor = "pu", claim;
    std::string corpus_name = "default", stronger, weaker;
    int element = 0, matrix_n = 2, threads = 1;

    auto* cmd_classify = app.add_subcommand("classify", "full predicate report for one *-ring");
    cmd_classify->add_option("spec", spec_path, "ring-spec file ('-' for stdin)")->required();

    auto* cmd_sets = app.add_subcommand("sets", "enumerate a structural subset");
    cmd_sets->add_option("spec", spec_path)->required();
    cmd_sets->add_option("--kind", kind,
                         "idempotents|projections|units|central-idempotents");

    auto* cmd_decomp = app.add_subcommand("decompose", "sum-of-unit-and-(idempotent|projection) witness");
    cmd_decomp->add_option("spec", spec_path)->required();
    cmd_decomp->add_option("--element", element)->required();
    cmd_decomp->add_option("--mode", decomp, "clean|strongly-clean|star-clean|strongly-star-clean");

    auto* cmd_factor = app.add_subcommand("factor", "product factorization witness");
    cmd_factor->add_option("spec", spec_path)->required();
    cmd_factor->add_option("--element", element)->required();
    cmd_factor->add_option("--mode", factor, "pu|up|pu-two-sided|eu-two-sided");

    auto* cmd_verify = app.add_subcommand("verify", "check one numbered claim on one *-ring");
    cmd_verify->add_option("spec", spec_path)->required();
    cmd_verify->add_option("--claim", claim, "theorem id, e.g. thm-char")->required();
    cmd_verify->add_option("--n", matrix_n, "matrix size for matrix claims");

    auto* cmd_suite = app.add_subcommand("suite", "every claim over the corpus");
    cmd_suite->add_option("--corpus", corpus_name, "corpus name (only 'default')");
    cmd_suite->add_option("--threads", threads, "worker threads");

    auto* cmd_search = app.add_subcommand("search", "hunt for a separation between two predicates");
    cmd_search->add_option("--stronger", stronger)->required();
    cmd_search->add_option("--weaker", weaker)->required();
    cmd_search->add_option("--corpus", corpus_name, "corpus name (only 'default')");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_classify->parsed()) {
            auto s = parse_ring_spec(read_file(spec_path), max_order, seed);
            emit(to_json(classify_ring(*s)), machine);
            return kExitOk;
        }
        if (cmd_sets->parsed()) {
            auto s = parse_ring_spec(read_file(spec_path), max_order, seed);
            emit(json{{"type", "sets"},
                      {"ring", s->label()},
                      {"kind", kind},
                      {"elements", enumerate_set(*s, set_kind_from_name(kind))}},
                 machine);
            return kExitOk;
        }
        if (cmd_decomp->parsed() || cmd_factor->parsed()) {
            auto s = parse_ring_spec(read_file(spec_path), max_order, seed);
            check_element(*s, element);
            const bool is_decomp = cmd_decomp->parsed();
            const Witness w = is_decomp
                                  ? decomposition_witness(*s, element, decomp_mode_from_name(decomp))
                                  : factorization_witness(*s, element, factor_mode_from_name(factor));
            emit(json{{"type", "witness"},
                      {"ring", s->label()},
                      {"element", element},
                      {"mode", is_decomp ? decomp : factor},
                      {"witness", to_json(w)}},
                 machine);
            return kExitOk;
        }
        if (cmd_verify->parsed()) {
            auto s = parse_ring_spec(read_file(spec_path), max_order, seed);
            auto id = theorem_from_name(claim);
            if (!id) throw RingError(RingError::Code::SpecError, "unknown claim '" + claim + "'");
            ClaimParams params;
            params.matrix_n = matrix_n;
            params.max_order = max_order;
            const ClaimVerdict v = check_claim(*s, *id, params);
            emit(json{{"type", "claim"}, {"ring", s->label()}, {"claim", claim},
                      {"verdict", to_json(v)}},
                 machine);
            return v.status == ClaimVerdict::Status::Violated ? kExitViolation : kExitOk;
        }
        if (cmd_suite->parsed()) {
            if (corpus_name != "default")
                throw RingError(RingError::Code::SpecError, "unknown corpus '" + corpus_name + "'");
            ClaimParams params;
            params.max_order = max_order;
            const SuiteReport report = run_paper_suite(default_corpus(max_order), threads, params);
            emit(to_json(report), machine);
            if (!machine)
                std::cout << "elapsed: " << report.seconds << " s\n";
            return report.violations > 0 ? kExitViolation : kExitOk;
        }
        if (cmd_search->parsed()) {
            if (corpus_name != "default")
                throw RingError(RingError::Code::SpecError, "unknown corpus '" + corpus_name + "'");
            auto sp = predicate_from_name(stronger);
            auto wp = predicate_from_name(weaker);
            if (!sp || !wp)
                throw RingError(RingError::Code::SpecError, "unknown predicate name");
            auto found = separation_search(default_corpus(max_order), *sp, *wp);
            json j{{"type", "separation"}, {"stronger", stronger}, {"weaker", weaker},
                   {"found", found.has_value()}};
            if (found) j["ring"] = *found;
            emit(j, machine);
            return kExitOk;
        }
    } catch (const RingError& e) {
        std::cerr << "error: " << e.what();
        if (!e.witness().empty()) {
            std::cerr << "  witness ids:";
            for (ElementId x : e.witness()) std::cerr << " " << x;
        }
        std::cerr << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
