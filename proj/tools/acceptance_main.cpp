#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "rht/acceptance.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Runs the acceptance criteria and prints one line per criterion"};
    rht::AcceptanceOptions opt;
    bool ci = false, json = false;
    std::vector<int> only;
    app.add_option("--seed", opt.seed, "seed for the randomized criteria");
    app.add_flag("--ci", ci, "small truncations");
    app.add_flag("--json", json, "JSON report instead of text");
    app.add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, rht::kCriteria));
    CLI11_PARSE(app, argc, argv);
    if (ci) opt.level = rht::Level::Ci;
    if (only.empty())
        for (int id = 1; id <= rht::kCriteria; ++id) only.push_back(id);
    int failed = 0;
    rht::Json report = rht::Json::array();
    for (int id : only) {
        auto r = rht::run_criterion(id, opt);
        failed += !r.pass;
        if (json) report.push_back(r.to_json());
        else std::cout << r.line() << std::endl;
    }
    if (json) std::cout << rht::canonical_dump(rht::document("acceptance", report));
    else std::cout << (only.size() - failed) << "/" << only.size() << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
