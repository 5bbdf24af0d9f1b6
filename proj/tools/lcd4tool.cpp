#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcd4/bounds.hpp"
#include "lcd4/catalog.hpp"
#include "lcd4/code_io.hpp"
#include "lcd4/linear_code.hpp"
#include "lcd4/search.hpp"

namespace {

using nlohmann::json;

json report_to_json(const lcd4::catalog::VerificationReport& r) {
    json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["lcd"] = r.lcd;
    if (r.enumerator_ok.has_value()) {
        j["enumerator_ok"] = *r.enumerator_ok;
    } else {
        j["enumerator_ok"] = nullptr;
    }
    j["pass"] = r.pass;
    return j;
}

void print_report(const lcd4::catalog::VerificationReport& r) {
    std::string enum_part = "n/a";
    if (r.enumerator_ok.has_value()) {
        enum_part = *r.enumerator_ok ? "ok" : "MISMATCH";
    }
    std::cout << r.name << ": [" << r.n << "," << r.k << "," << r.d << "]_4 lcd="
              << (r.lcd ? "yes" : "NO") << " enumerator=" << enum_part
              << (r.pass ? " PASS" : " FAIL") << "\n";
}

int run_verify(const std::string& name, bool all, bool as_json) {
    std::vector<lcd4::catalog::VerificationReport> reports;
    if (all) {
        reports = lcd4::catalog::verify_all();
    } else {
        reports.push_back(lcd4::catalog::verify(name));
    }

    std::size_t passed = 0;
    for (const auto& r : reports) {
        if (r.pass) {
            ++passed;
        }
    }

    if (as_json) {
        json j = json::array();
        for (const auto& r : reports) {
            j.push_back(report_to_json(r));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            print_report(r);
        }
        if (all) {
            std::cout << passed << "/" << reports.size() << " pass\n";
        }
    }
    return passed == reports.size() ? 0 : 1;
}

int run_search_cmd(int n, int k, int d, const std::string& mode, int jobs,
                   const std::string& checkpoint_path, std::uint64_t max_nodes,
                   std::uint64_t max_found) {
    lcd4::SearchConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.d = d;
    cfg.mode = (mode == "first") ? lcd4::SearchMode::first_hit : lcd4::SearchMode::exhaustive;
    cfg.parallel_width = jobs;
    cfg.max_nodes = max_nodes;
    cfg.max_found = max_found;

    lcd4::SearchOutcome outcome;
    if (!checkpoint_path.empty() && std::filesystem::exists(checkpoint_path)) {
        lcd4::Checkpoint ckpt = lcd4::read_checkpoint(checkpoint_path);
        if (ckpt.n != n || ckpt.k != k || ckpt.d != d) {
            throw lcd4::CheckpointError("checkpoint parameters do not match the requested search");
        }
        if (ckpt.frontier.empty()) {
            std::cout << "checkpoint already complete; nothing to do\n";
            return 0;
        }
        outcome = lcd4::run_search(cfg, ckpt.frontier);
    } else {
        outcome = lcd4::run_search(cfg);
    }

    constexpr std::size_t kPrintCap = 20;
    std::size_t shown = std::min(outcome.found.size(), kPrintCap);
    for (std::size_t i = 0; i < shown; ++i) {
        lcd4::write_code(std::cout, outcome.found[i]);
    }
    if (outcome.found.size() > shown) {
        std::cout << "(printed " << shown << " of " << outcome.found.size()
                  << " codes found)\n";
    }
    if (outcome.found.empty() && outcome.complete) {
        std::cout << "no code exists; complete=true\n";
    }
    std::cout << "nodes=" << outcome.nodes_visited << " found=" << outcome.found.size()
              << " complete=" << (outcome.complete ? "true" : "false") << "\n";

    if (!checkpoint_path.empty()) {
        lcd4::write_checkpoint(checkpoint_path, cfg, outcome.frontier);
        if (!outcome.complete) {
            std::cout << "resume point saved to " << checkpoint_path << "\n";
        }
    }
    return 0;
}

json record_to_json(const lcd4::BoundRecord& rec) {
    json j;
    j["kind"] = rec.kind;
    j["n"] = rec.n;
    j["k"] = rec.k;
    if (rec.lower.has_value()) {
        j["lower"] = *rec.lower;
    } else {
        j["lower"] = nullptr;
    }
    j["witness"] = rec.witness;
    if (rec.upper.has_value()) {
        j["upper"] = *rec.upper;
    } else {
        j["upper"] = nullptr;
    }
    j["source"] = rec.source;
    return j;
}

int run_bounds(int n, int k, bool as_json) {
    std::vector<lcd4::BoundRecord> records = lcd4::bounds_for(n, k);

    std::optional<std::pair<std::string, int>> closed;
    if (k == n - 1 && n >= 2) {
        closed = {std::string("k=n-1"), lcd4::d4_dimension_n_minus_1(n)};
    } else if (k == n - 2 && n >= 3) {
        closed = {std::string("k=n-2"), lcd4::d4_dimension_n_minus_2(n)};
    } else if (k == n - 3 && n >= 4) {
        closed = {std::string("k=n-3"), lcd4::d4_dimension_n_minus_3(n)};
    }

    if (as_json) {
        json j;
        j["n"] = n;
        j["k"] = k;
        if (closed.has_value()) {
            j["closed_form"] = {{"case", closed->first}, {"d4", closed->second}};
        } else {
            j["closed_form"] = nullptr;
        }
        j["records"] = json::array();
        for (const auto& rec : records) {
            j["records"].push_back(record_to_json(rec));
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (closed.has_value()) {
        std::cout << "closed form (" << closed->first << "): d4(" << n << "," << k
                  << ") = " << closed->second << "\n";
    }
    for (const auto& rec : records) {
        std::cout << rec.kind << "(" << rec.n << "," << rec.k << "):";
        if (rec.lower.has_value()) {
            std::cout << " lower=" << *rec.lower;
            if (!rec.witness.empty()) {
                std::cout << " witness=" << rec.witness;
            }
        }
        if (rec.upper.has_value()) {
            std::cout << " upper=" << *rec.upper;
        }
        std::cout << " source=" << rec.source << "\n";
    }
    if (!closed.has_value() && records.empty()) {
        std::cout << "no recorded bounds for (" << n << "," << k << ")\n";
    }
    return 0;
}

int run_dump(const std::string& name) {
    lcd4::write_code(std::cout, lcd4::catalog::build(name));
    return 0;
}

int run_transform(int shorten_i, int puncture_i, const std::string& path) {
    lcd4::LinearCode code =
        (path == "-") ? lcd4::read_code(std::cin) : lcd4::read_code_file(path);
    lcd4::LinearCode result =
        (shorten_i > 0) ? lcd4::shorten(code, shorten_i) : lcd4::puncture(code, puncture_i);
    lcd4::write_code(std::cout, result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quaternary Hermitian LCD code toolkit"};
    app.require_subcommand(1);

    std::string verify_name;
    bool verify_all_flag = false;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "Check named codes against their certificates");
    CLI::Option* verify_name_opt = verify->add_option("name", verify_name, "Code name, e.g. C15");
    CLI::Option* verify_all_opt =
        verify->add_flag("--all", verify_all_flag, "Verify the whole catalog");
    verify->add_flag("--json", verify_json, "Emit reports as JSON");
    verify_name_opt->excludes(verify_all_opt);

    int s_n = 0;
    int s_k = 0;
    int s_d = 0;
    std::string s_mode = "exhaustive";
    int s_jobs = 1;
    std::string s_checkpoint;
    std::uint64_t s_max_nodes = 0;
    std::uint64_t s_max_found = 0;
    CLI::App* search = app.add_subcommand("search", "Search for Hermitian LCD codes in standard form");
    search->add_option("--n", s_n, "Code length")->required();
    search->add_option("--k", s_k, "Dimension")->required();
    search->add_option("--d", s_d, "Target minimum weight")->required();
    search->add_option("--mode", s_mode, "exhaustive or first")
        ->check(CLI::IsMember({"exhaustive", "first"}));
    search->add_option("--jobs", s_jobs, "Parallel branch workers");
    search->add_option("--checkpoint", s_checkpoint, "Resume file (read if present, written on stop)");
    search->add_option("--max-nodes", s_max_nodes, "Node budget before stopping (0 = unbounded)");
    search->add_option("--max-found", s_max_found, "Stop after collecting this many codes (0 = unlimited)");

    int b_n = 0;
    int b_k = 0;
    bool bounds_json = false;
    CLI::App* bounds = app.add_subcommand("bounds", "Show recorded bounds and closed forms");
    bounds->add_option("--n", b_n, "Code length")->required();
    bounds->add_option("--k", b_k, "Dimension")->required();
    bounds->add_flag("--json", bounds_json, "Emit as JSON");

    std::string dump_name;
    CLI::App* dump = app.add_subcommand("dump", "Print a named code in the file format");
    dump->add_option("name", dump_name, "Code name, e.g. C15")->required();

    int t_shorten = 0;
    int t_puncture = 0;
    std::string t_file;
    CLI::App* transform = app.add_subcommand("transform", "Shorten or puncture a code file");
    CLI::Option* shorten_opt =
        transform->add_option("--shorten", t_shorten, "1-based coordinate to shorten at");
    CLI::Option* puncture_opt =
        transform->add_option("--puncture", t_puncture, "1-based coordinate to puncture at");
    transform->add_option("file", t_file, "Code file, or - for stdin")->required();
    shorten_opt->excludes(puncture_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!verify_all_flag && verify_name.empty()) {
                std::cerr << "error: verify needs a code name or --all\n";
                return 2;
            }
            return run_verify(verify_name, verify_all_flag, verify_json);
        }
        if (search->parsed()) {
            return run_search_cmd(s_n, s_k, s_d, s_mode, s_jobs, s_checkpoint, s_max_nodes,
                                  s_max_found);
        }
        if (bounds->parsed()) {
            return run_bounds(b_n, b_k, bounds_json);
        }
        if (dump->parsed()) {
            return run_dump(dump_name);
        }
        if (transform->parsed()) {
            if ((t_shorten > 0) == (t_puncture > 0)) {
                std::cerr << "error: transform needs exactly one of --shorten or --puncture\n";
                return 2;
            }
            return run_transform(t_shorten, t_puncture, t_file);
        }
    } catch (const lcd4::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const lcd4::CheckpointError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
