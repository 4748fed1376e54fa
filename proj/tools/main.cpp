// ywcheck: command-line driver for the verification suites.
//
//   ywcheck check <suite> [flags]
//
// Exit codes: 0 = all instances pass, 1 = at least one verification failure,
// 2 = usage / parameter error.  A JSON report is printed to stdout (or to
// --out) with deterministic field order:
//   {suite, params, instances: [{id, status, witness?}], wall_time}
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "yw/suites.hpp"

namespace {

nlohmann::ordered_json report_json(const yw::SuiteReport& rep) {
    nlohmann::ordered_json doc;
    doc["suite"] = rep.suite;
    doc["params"] = rep.params;
    doc["instances"] = nlohmann::ordered_json::array();
    for (const auto& r : rep.instances) {
        nlohmann::ordered_json inst;
        inst["id"] = r.id;
        inst["status"] = r.ok ? "pass" : "fail";
        if (!r.ok) inst["witness"] = r.witness;
        doc["instances"].push_back(std::move(inst));
    }
    doc["wall_time"] = rep.wall_time;
    return doc;
}

std::vector<int> parse_q(const std::string& s) {
    std::vector<int> q;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int val = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("--q: bad entry '" + tok + "'");
        q.push_back(val);
    }
    if (q.empty()) throw std::invalid_argument("--q: empty list");
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic verification of the truncated-current checks"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run one verification suite");

    std::string suite;
    std::string names;
    for (const auto& n : yw::suite_names()) names += (names.empty() ? "" : "|") + n;
    check->add_option("suite", suite, "one of: " + names)->required();

    std::string q_str;
    std::string out_path;
    std::string side = "R";
    yw::SuiteOptions opt;
    check->add_option("--q", q_str, "pyramid column sizes, comma-separated (e.g. 4,3)");
    check->add_option("--v", opt.v, "pyramid pivot column (1-based)");
    check->add_option("--w", opt.w, "split position for the parabolic suites");
    check->add_option("--n", opt.n, "rank for the evaluation/coproduct suites");
    check->add_option("--m", opt.m, "embedded rank for psi/extended suites");
    check->add_option("--add", opt.add, "rank extension for psi/extended suites");
    check->add_option("--depth", opt.depth, "truncation depth of the checked states");
    check->add_option("--side", side, "extended-relation side, R or L");
    check->add_option("--mutation", opt.mutation,
                      "nonzero flips one coefficient (sensitivity runs)");
    check->add_flag("--diagnose", opt.diagnose, "also balance per-group identities");
    check->add_option("--out", out_path, "write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!q_str.empty()) opt.q = parse_q(q_str);
        if (side.size() != 1) throw std::invalid_argument("--side: expected R or L");
        opt.side = side[0];
        if (opt.depth < 0) throw std::invalid_argument("--depth: must be >= 0");

        yw::SuiteReport rep = yw::run_suite(suite, opt);
        std::string text = report_json(rep).dump(2);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            f << text << "\n";
        } else {
            std::cout << text << "\n";
        }
        return rep.all_ok() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
