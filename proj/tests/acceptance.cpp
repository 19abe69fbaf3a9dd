// Acceptance runner: one PASS/FAIL line per criterion.
// Exit status is 0 when the set of failing criteria equals --expect-fail.

#include <fstream>
#include <functional>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "skq/sweeps.hpp"

using namespace skq;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<SweepResult>()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    std::vector<int> expect_fail, only;
    std::string json_out;
    std::uint64_t seed = 1;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail");
    app.add_option("--only", only, "run a subset");
    app.add_option("--json", json_out, "write the full report here");
    app.add_option("--seed", seed, "seed for sampled criteria");
    CLI11_PARSE(app, argc, argv);

    SweepBounds b;
    b.seed = seed;
    auto one = [](SweepResult r) { return std::vector<SweepResult>{std::move(r)}; };
    std::vector<Criterion> cs{
        {1, "triangle anchor", [&] { return one(sweep_anchor()); }},
        {2, "matrix mutation and identities, D4-D6", [&] { return one(sweep_matrices(4, 6)); }},
        {3, "tropical coordinates, D5 and A11", [&] { return one(sweep_tropical(b)); }},
        {4, "trace flip compatibility", [&] { return one(sweep_flip_transport()); }},
        {5, "lowest term of duality_A", [&] { return one(sweep_lowest_term(b)); }},
        {6, "pointedness of duality_X", [&] { return one(sweep_pointed_x(b)); }},
        {7, "ensemble square", [&] { return one(sweep_square(b)); }},
        {8, "trace-cut square", [&] { return one(sweep_trace_cut(b)); }},
        {9, "annulus closed forms", [&] { return sweep_annulus_formulas(6); }},
        {10, "positivity, D3-D6 and A11", [&] { return one(sweep_positivity(b)); }},
        {11, "quantum Ptolemy, D4-D5", [&] { return one(sweep_ptolemy(4, 5)); }},
        {12, "monomial image in a containing triangulation", [&] { return one(sweep_containing_monomial(b)); }},
        {13, "spanning on D4, |a| <= 2", [&] { return one(sweep_spanning(2)); }},
    };

    std::set<int> failed;
    nlohmann::json report = nlohmann::json::array();
    for (auto& c : cs) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        std::vector<SweepResult> parts;
        std::string error;
        try {
            parts = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool pass = error.empty() && suite_passes(parts);
        double secs = 0;
        std::string summary;
        for (size_t i = 0; i < parts.size(); ++i) {
            const auto& p = parts[i];
            secs += p.seconds;
            if (!summary.empty()) summary += "; ";
            summary += p.suite + " " + std::to_string(p.cases - p.failures) + "/" + std::to_string(p.cases) +
                       (p.informational ? " (informational)" : "");
        }
        if (!error.empty()) summary = "error: " + error;
        if (!pass) failed.insert(c.id);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << summary
                  << "] " << buf << std::endl;
        nlohmann::json j{{"criterion", c.id}, {"title", c.title}, {"pass", pass}, {"parts", nlohmann::json::array()}};
        for (auto& p : parts) j["parts"].push_back(p.to_json());
        if (!error.empty()) j["error"] = error;
        report.push_back(j);
    }
    if (!json_out.empty()) std::ofstream(json_out) << report.dump(2) << "\n";

    std::set<int> expected(expect_fail.begin(), expect_fail.end());
    if (!only.empty()) {
        std::set<int> keep;
        for (int e : expected)
            if (std::find(only.begin(), only.end(), e) != only.end()) keep.insert(e);
        expected = keep;
    }
    std::cout << (failed == expected ? "failures match the expected set" : "unexpected result") << ":";
    for (int f : failed) std::cout << " " << f;
    std::cout << (failed.empty() ? " none" : "") << std::endl;
    return failed == expected ? 0 : 1;
}
