#pragma once

#include <optional>

#include <json.hpp>

#include "digon/family.hpp"
#include "digon/graph.hpp"
#include "digon/sphere.hpp"

namespace digon {

// Everything cmd_verify checks on one family: census and bounds, labels,
// the three lemma verifiers plus the structural one, and the doubled-graph
// report. For n == 2 the lemma machinery is degenerate and gprime is skipped.
struct VerifyReport {
    int n = 0;
    Census census;
    std::vector<DigonRecord> records;
    std::vector<CircleLabel> labels;
    std::vector<int> label_conflicts;
    std::vector<std::pair<int, int>> dual_color_pairs;
    bool pair_degenerate = false;
    std::vector<LemmaReport> lemmas;
    std::optional<GPrimeReport> gprime;
    bool ok = false;
};

VerifyReport run_verify_pipeline(const CircleFamily& fam);

nlohmann::json census_to_json(const Census& census);
nlohmann::json to_json(const VerifyReport& report);

// Census-only report used by cmd_digons.
nlohmann::json census_report_json(const CircleFamily& fam);

}  // namespace digon
