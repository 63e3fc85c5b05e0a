#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "digon/generate.hpp"
#include "digon/io.hpp"
#include "digon/report.hpp"
#include "digon/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

digon::CircleFamily load_family(const std::string& path) {
    const auto doc = digon::parse_family_document(digon::read_file(path));
    auto result = digon::CircleFamily::validate(doc.circles, doc.tol);
    if (auto* err = std::get_if<digon::FamilyError>(&result))
        throw digon::ParseError(std::string(digon::to_string(err->kind)) + ": " + err->message);
    return std::get<digon::CircleFamily>(std::move(result));
}

digon::FamilyDocument document_of(const digon::CircleFamily& fam) {
    return {fam.circles(), fam.tol()};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_digons(const std::string& path) {
    const auto fam = load_family(path);
    const auto report = digon::census_report_json(fam);
    std::cout << dump(report);
    return report["ok"].get<bool>() ? kExitOk : kExitViolation;
}

int cmd_verify(const std::string& path) {
    const auto fam = load_family(path);
    const auto report = digon::run_verify_pipeline(fam);
    std::cout << dump(digon::to_json(report));
    return report.ok ? kExitOk : kExitViolation;
}

int cmd_fuzz(int nmin, int nmax, int trials, uint64_t seed, bool unit) {
    using Clock = std::chrono::steady_clock;
    const auto t0 = Clock::now();

    std::map<int, int> max_digons;
    int violations = 0;
    std::string counterexample_path;

    for (int trial = 0; trial < trials; ++trial) {
        const uint64_t trial_seed = digon::derive_seed(seed, static_cast<uint64_t>(trial));
        const int n = nmin + static_cast<int>(trial_seed % static_cast<uint64_t>(nmax - nmin + 1));
        const auto fam = unit ? digon::unit_family(n, digon::derive_seed(trial_seed, 1))
                              : digon::random_family({n, digon::derive_seed(trial_seed, 1)});

        const auto report = digon::run_verify_pipeline(fam);
        auto& slot = max_digons[n];
        slot = std::max(slot, report.census.digons);

        bool bad = !report.ok;
        if (unit) {
            // Unit-circle families obey the stronger bounds.
            bad = bad || report.census.lenses > n || report.census.lunes > 3 ||
                  report.census.digons > n + 3;
        }
        if (bad) {
            ++violations;
            const auto doc_json = digon::family_document_to_json(document_of(fam));
            const std::string content = dump(doc_json);
            counterexample_path = "counterexample-" + digon::content_hash_hex(content) + ".json";
            digon::write_file(counterexample_path, content);
            break;
        }
    }

    const double elapsed =
        std::chrono::duration<double>(Clock::now() - t0).count();
    std::fprintf(stderr, "fuzz: %d trials in %.2fs\n", trials, elapsed);

    nlohmann::json summary;
    summary["trials"] = trials;
    summary["nmin"] = nmin;
    summary["nmax"] = nmax;
    summary["seed"] = seed;
    summary["unit"] = unit;
    summary["violations"] = violations;
    nlohmann::json per_n = nlohmann::json::object();
    for (const auto& [n, digons] : max_digons) per_n[std::to_string(n)] = digons;
    summary["max_digons_per_n"] = per_n;
    if (!counterexample_path.empty()) summary["counterexample"] = counterexample_path;
    std::cout << dump(summary);
    return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_construct(const std::string& kind, int n, const std::string& out) {
    if (kind != "tight") throw digon::ParseError("unknown construction kind: " + kind);
    const auto fam = digon::tight_family(n);
    const auto doc_json = digon::family_document_to_json(document_of(fam));
    digon::write_file(out, dump(doc_json));
    std::cout << dump(digon::census_report_json(fam));
    return kExitOk;
}

int cmd_invert(const std::string& path, double cx, double cy, double k, const std::string& out) {
    const auto fam = load_family(path);
    const digon::Point center{cx, cy};
    const auto before = digon::detect_digons_pairwise(fam);

    std::vector<digon::Circle> inverted;
    inverted.reserve(fam.circles().size());
    for (const auto& c : fam.circles())
        inverted.push_back(digon::invert_circle(c, center, k, fam.tol()));

    auto result = digon::CircleFamily::validate(std::move(inverted), fam.tol());
    if (auto* err = std::get_if<digon::FamilyError>(&result))
        throw digon::ParseError("inverted family is not a valid simple family: " + err->message);
    const auto& inv_fam = std::get<digon::CircleFamily>(result);
    const auto after = digon::detect_digons_pairwise(inv_fam);

    digon::write_file(out, dump(digon::family_document_to_json(document_of(inv_fam))));

    nlohmann::json j;
    j["before"] = digon::census_to_json(digon::census_from_records(fam.size(), before));
    j["after"] = digon::census_to_json(digon::census_from_records(inv_fam.size(), after));
    const bool match = before == after;
    j["census_match"] = match;
    std::cout << dump(j);
    return match ? kExitOk : kExitViolation;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& layer_list) {
    const auto fam = load_family(path);
    digon::RenderLayers layers{false, false, false};
    std::string item;
    std::stringstream ss(layer_list);
    while (std::getline(ss, item, ',')) {
        if (item == "circles")
            layers.circles = true;
        else if (item == "digons")
            layers.digons = true;
        else if (item == "graph")
            layers.graph = true;
        else
            throw digon::ParseError("unknown layer: " + item);
    }
    digon::write_file(out, digon::render_svg(fam, layers));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digon census and verification for arrangements of pairwise intersecting circles"};
    app.require_subcommand(1);

    std::string file, out, kind = "tight", layers = "circles,digons,graph";
    int nmin = 3, nmax = 12, trials = 1000, n = 5;
    uint64_t seed = 0;
    bool unit = false;
    double cx = 0.0, cy = 0.0, k = 1.0;

    auto* digons_cmd = app.add_subcommand("digons", "digon census of a family file");
    digons_cmd->add_option("file", file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "full census, lemma and doubled-graph checks");
    verify_cmd->add_option("file", file)->required();

    auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized bound and lemma enforcement");
    fuzz_cmd->add_option("--nmin", nmin);
    fuzz_cmd->add_option("--nmax", nmax);
    fuzz_cmd->add_option("--trials", trials);
    fuzz_cmd->add_option("--seed", seed);
    fuzz_cmd->add_flag("--unit", unit, "fuzz unit-circle families and their bounds");

    auto* construct_cmd = app.add_subcommand("construct", "emit a stored extremal family");
    construct_cmd->add_option("kind", kind)->required();
    construct_cmd->add_option("--n", n)->required();
    construct_cmd->add_option("-o,--out", out)->required();

    auto* invert_cmd = app.add_subcommand("invert", "apply an inversion and compare censuses");
    invert_cmd->add_option("file", file)->required();
    invert_cmd->add_option("--cx", cx)->required();
    invert_cmd->add_option("--cy", cy)->required();
    invert_cmd->add_option("--k", k)->required();
    invert_cmd->add_option("-o,--out", out)->required();

    auto* render_cmd = app.add_subcommand("render", "render a family to SVG");
    render_cmd->add_option("file", file)->required();
    render_cmd->add_option("-o,--out", out)->required();
    render_cmd->add_option("--layers", layers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (digons_cmd->parsed()) return cmd_digons(file);
        if (verify_cmd->parsed()) return cmd_verify(file);
        if (fuzz_cmd->parsed()) return cmd_fuzz(nmin, nmax, trials, seed, unit);
        if (construct_cmd->parsed()) return cmd_construct(kind, n, out);
        if (invert_cmd->parsed()) return cmd_invert(file, cx, cy, k, out);
        if (render_cmd->parsed()) return cmd_render(file, out, layers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
