#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matchcore/axioms.hpp"
#include "matchcore/fixtures.hpp"
#include "matchcore/gen.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

matchcore::ConceptSelection selection_from(const std::vector<std::string>& names) {
    if (names.empty()) return {};
    matchcore::ConceptSelection sel = matchcore::ConceptSelection::none();
    for (const std::string& name : names) {
        if (name == "weak") sel.weak = true;
        else if (name == "strong") sel.strong = true;
        else if (name == "compromise") sel.compromise = true;
        else if (name == "top-cycle") sel.top_cycle = true;
        else if (name == "fisher") sel.fisher = true;
        else if (name == "vnm") sel.vnm = true;
        else if (name == "men-opt") sel.men_opt = true;
        else if (name == "women-opt") sel.women_opt = true;
        else throw std::runtime_error("unknown concept: " + name);
    }
    return sel;
}

int cmd_solve(const std::string& path, const std::vector<std::string>& concepts,
              const std::string& json_path, const std::string& dot_path, bool debug_oracle) {
    const matchcore::ParsedMarket parsed = matchcore::parse_market(read_file(path));
    const std::string name = std::filesystem::path(path).stem().string();
    const matchcore::SolveReport report =
        matchcore::solve(parsed.market, name, selection_from(concepts));
    std::cout << matchcore::render_report(report);
    if (!json_path.empty()) write_file(json_path, matchcore::export_json(report));
    if (!dot_path.empty()) write_file(dot_path, matchcore::export_dot(report));
    if (debug_oracle) {
        const std::vector<std::string> failures = matchcore::run_debug_oracles(parsed.market);
        for (const std::string& f : failures) std::cerr << "oracle mismatch: " << f << "\n";
        if (!failures.empty()) return kExitMismatch;
        std::cout << "debug oracles: all agree\n";
    }
    return kExitOk;
}

int cmd_gen(int men, int women, double density, std::uint32_t seed) {
    const matchcore::Market m =
        matchcore::generate_market({men, women, density, seed});
    std::cout << matchcore::serialize_market(m);
    return kExitOk;
}

int cmd_examples(const std::string& only) {
    if (!only.empty()) matchcore::fixture_by_name(only);  // reject unknown names
    int mismatched = 0;
    for (const matchcore::Fixture& f : matchcore::all_fixtures()) {
        if (!only.empty() && f.name != only) continue;
        const matchcore::FixtureResult result = matchcore::run_fixture(f);
        if (result.ok) {
            std::cout << f.name << ": ok — " << f.title << "\n";
        } else {
            ++mismatched;
            std::cout << f.name << ": MISMATCH — " << f.title << "\n";
            for (const std::string& line : result.failures) std::cout << "  " << line << "\n";
        }
    }
    if (mismatched) {
        std::cout << mismatched << " fixture(s) mismatched\n";
        return kExitMismatch;
    }
    std::cout << "all fixtures match\n";
    return kExitOk;
}

std::string label_list(const std::vector<std::string>& labels, const std::vector<int>& t) {
    std::string out = "{";
    for (size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + labels[t[i]];
    return out + "}";
}

int cmd_axioms(const std::string& path) {
    const matchcore::ParsedMarket parsed = matchcore::parse_market(read_file(path));
    const std::string name = std::filesystem::path(path).stem().string();
    const matchcore::CharacterizationReport report =
        matchcore::verify_characterization(parsed.market);

    std::vector<std::string> labels;
    for (int i = 0; i < report.domain_size; ++i) labels.push_back("mu" + std::to_string(i + 1));

    std::cout << "market: " << name << "\n";
    std::cout << "weak core size: " << report.domain_size << "; nonempty subsets checked: "
              << report.subsets_checked << "\n";
    for (const matchcore::MapSurvey& survey : report.maps) {
        std::cout << "map " << survey.map_name << ":";
        for (const matchcore::AxiomReport* axiom : {&survey.im, &survey.eb, &survey.et}) {
            std::cout << " " << axiom->axiom << "=" << (axiom->passed ? "pass" : "FAIL");
        }
        std::cout << (survey.containment_holds ? "  within-compromise=yes" : "  within-compromise=no")
                  << "\n";
        for (const matchcore::AxiomReport* axiom : {&survey.im, &survey.eb, &survey.et}) {
            if (axiom->passed || !axiom->counterexample) continue;
            const matchcore::AxiomCounterexample& ce = *axiom->counterexample;
            std::cout << "  " << axiom->axiom << " counterexample: T="
                      << label_list(labels, ce.t) << ", mu="
                      << (ce.mu >= 0 ? labels[ce.mu] : std::string("-")) << ": " << ce.detail
                      << "\n";
        }
    }
    std::cout << "canonical map passes all axioms: " << (report.canonical_passes ? "yes" : "NO")
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solution concepts for two-sided markets with incomplete preferences"};
    app.require_subcommand(1);

    std::string solve_path, solve_json, solve_dot, examples_only, axioms_path;
    std::vector<std::string> solve_concepts;
    bool debug_oracle = false;
    int gen_men = 0, gen_women = 0;
    double gen_density = 1.0;
    std::uint32_t gen_seed = 0;

    CLI::App* solve = app.add_subcommand("solve", "solve a .mkt market file");
    solve->add_option("file", solve_path, "market description file")->required();
    solve->add_option("--concepts", solve_concepts,
                      "subset of: weak strong compromise top-cycle fisher vnm men-opt women-opt");
    solve->add_option("--json", solve_json, "write a JSON report to this path");
    solve->add_option("--dot", solve_dot, "write a Graphviz dominance graph to this path");
    solve->add_flag("--debug-oracle", debug_oracle,
                    "re-verify the results with the slow exhaustive oracles");

    CLI::App* gen = app.add_subcommand("gen", "generate a random market");
    gen->add_option("--men", gen_men, "number of men")->required();
    gen->add_option("--women", gen_women, "number of women")->required();
    gen->add_option("--density", gen_density, "probability of keeping each sampled strict pair");
    gen->add_option("--seed", gen_seed, "RNG seed");

    CLI::App* examples = app.add_subcommand("examples", "replay the bundled fixtures");
    examples->add_option("--fixture", examples_only, "run a single fixture by name");

    CLI::App* axioms = app.add_subcommand("axioms", "run the refinement-axiom sweep on a market");
    axioms->add_option("file", axioms_path, "market description file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitOther;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_path, solve_concepts, solve_json, solve_dot, debug_oracle);
        if (gen->parsed()) return cmd_gen(gen_men, gen_women, gen_density, gen_seed);
        if (examples->parsed()) return cmd_examples(examples_only);
        if (axioms->parsed()) return cmd_axioms(axioms_path);
    } catch (const matchcore::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matchcore::CycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matchcore::DuplicateAgent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matchcore::MissingPrefBlock& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matchcore::UnknownAlternative& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const matchcore::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOther;
    }
    return kExitOther;
}
