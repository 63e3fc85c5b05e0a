#include "digon/report.hpp"

namespace digon {

VerifyReport run_verify_pipeline(const CircleFamily& fam) {
    VerifyReport report;
    report.n = fam.size();
    report.records = detect_digons_pairwise(fam);
    report.census = census_from_records(report.n, report.records);

    ColoredGraph graph = build_colored_graph(fam, report.records);
    report.labels = graph.labels;
    report.label_conflicts = graph.label_conflicts;
    report.dual_color_pairs = graph.dual_color_pairs;
    report.pair_degenerate = graph.pair_family;

    bool ok = report.census.within_bounds;
    // A lone pair creates a lens and both lunes at once, which makes the
    // label and lemma machinery vacuous; it is flagged and skipped.
    if (!report.pair_degenerate) {
        report.lemmas.push_back(verify_lemma_lunes(graph));
        report.lemmas.push_back(verify_lemma_lenses(graph));
        report.lemmas.push_back(verify_lemma_mixed(graph));
        report.lemmas.push_back(verify_bipartite_structure(graph));

        ok = ok && report.label_conflicts.empty() && report.dual_color_pairs.empty();
        for (const auto& lemma : report.lemmas) ok = ok && lemma.pass();
        if (report.label_conflicts.empty()) {
            SphereGraph doubled = build_doubled_graph(graph);
            report.gprime = verify_gprime(doubled);
            ok = ok && report.gprime->all_ok();
        } else {
            ok = false;
        }
    }
    report.ok = ok;
    return report;
}

nlohmann::json census_to_json(const Census& census) {
    return {{"lenses", census.lenses},
            {"lunes", census.lunes},
            {"digons", census.digons},
            {"digon_bound", census.digon_bound},
            {"lens_bound", census.lens_bound},
            {"lune_bound", census.lune_bound},
            {"lune_bound_prior", census.lune_bound_prior},
            {"bounds_applicable", census.bounds_applicable},
            {"ok", census.within_bounds}};
}

namespace {

nlohmann::json records_to_json(const std::vector<DigonRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
        arr.push_back({{"i", r.i}, {"j", r.j}, {"kind", to_string(r.kind)}});
    return arr;
}

nlohmann::json lemma_to_json(const LemmaReport& lemma) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& violation : lemma.violations)
        v.push_back({{"edge1", violation.e1},
                     {"edge2", violation.e2},
                     {"segment1", {{"ax", violation.s1.a.x},
                                   {"ay", violation.s1.a.y},
                                   {"bx", violation.s1.b.x},
                                   {"by", violation.s1.b.y}}},
                     {"segment2", {{"ax", violation.s2.a.x},
                                   {"ay", violation.s2.a.y},
                                   {"bx", violation.s2.b.x},
                                   {"by", violation.s2.b.y}}},
                     {"detail", violation.detail}});
    return {{"pass", lemma.pass()}, {"violations", v}};
}

}  // namespace

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["census"] = census_to_json(report.census);
    j["digons"] = records_to_json(report.records);

    nlohmann::json labels = nlohmann::json::array();
    for (CircleLabel l : report.labels) labels.push_back(to_string(l));
    j["labels"] = labels;
    j["label_conflicts"] = report.label_conflicts;

    nlohmann::json duals = nlohmann::json::array();
    for (const auto& [a, b] : report.dual_color_pairs) duals.push_back({a, b});
    j["dual_color_pairs"] = duals;
    j["pair_degenerate"] = report.pair_degenerate;

    nlohmann::json lemmas = nlohmann::json::object();
    for (const auto& lemma : report.lemmas) lemmas[lemma.id] = lemma_to_json(lemma);
    j["lemmas"] = lemmas;

    if (report.gprime.has_value()) {
        const auto& gp = *report.gprime;
        nlohmann::json crossings = nlohmann::json::array();
        for (const auto& c : gp.crossings)
            crossings.push_back({{"edge1", c.e1}, {"edge2", c.e2}, {"degenerate", c.degenerate}});
        j["gprime"] = {{"noncrossing", gp.noncrossing()},
                       {"crossings", crossings},
                       {"bipartite", gp.bipartite()},
                       {"part_violations", gp.part_violations},
                       {"coloring_consistent", gp.coloring_consistent},
                       {"edges", gp.edge_count},
                       {"edge_bound", gp.edge_bound},
                       {"edge_bound_ok", gp.edge_bound_ok()}};
    } else {
        j["gprime"] = nullptr;
    }
    j["ok"] = report.ok;
    return j;
}

nlohmann::json census_report_json(const CircleFamily& fam) {
    const Census census = digon_census(fam);
    nlohmann::json j;
    j["n"] = census.n;
    j["census"] = census_to_json(census);
    j["ok"] = census.within_bounds;
    return j;
}

}  // namespace digon
