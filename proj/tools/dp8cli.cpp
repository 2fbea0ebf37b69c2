#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dp8/commands.hpp"

namespace {

dp8::Json read_input(const std::string& command, const std::string& inline_arg, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw dp8::InputError("cannot open " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        return dp8::Json::parse(ss.str());
    }
    if (inline_arg.empty()) throw dp8::InputError("no input: pass inline JSON or --input FILE");
    auto j = dp8::Json::parse(inline_arg, nullptr, false);
    if (j.is_discarded()) {
        if (command == "lattice-demo") return inline_arg;
        throw dp8::InputError("input is not valid JSON");
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of quadric surfaces and degree 8 del Pezzo surfaces over Q"};
    app.require_subcommand(1);
    dp8::CommandOptions opt;
    std::string file, inline_arg;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "Classification report of a surface descriptor"},
        {"compare", "Decide isomorphism or birational equivalence of {\"a\": ..., \"b\": ...}"},
        {"product", "Brauer product of {\"c1\": [a,b,c], \"c2\": [a,b,c]}"},
        {"minimal-models", "Minimal surfaces birational to a pointless surface"},
        {"splitting-field", "Splitting field of a surface descriptor"},
        {"lattice-demo", "Run a Picard lattice scenario: cblink, f2k, dplink4, dplink2"},
        {"oracle", "Brute-force rational point search"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("json", inline_arg, "Inline JSON input (or a scenario name for lattice-demo)");
        sub->add_option("--input", file, "Read the JSON input from FILE");
        sub->add_option("--k-max", opt.k_max, "Largest Hirzebruch index listed")->capture_default_str();
        sub->add_option("--height", opt.height, "Search height for oracle")->capture_default_str();
        sub->add_option("--parity", opt.parity, "dplink2 parity: odd or even")->capture_default_str();
        sub->add_option("--mode", opt.mode, "compare mode: isomorphic or birational")->capture_default_str();
        sub->add_option("--k", opt.k, "f2k index")->capture_default_str();
        sub->add_option("--orbits", opt.orbits, "dplink4 orbit pattern: 1 or 2")->capture_default_str();
        sub->add_option("--jobs", opt.jobs, "Threads for batch inputs")->capture_default_str();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dp8::kExitInput;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    dp8::CommandResult result;
    try {
        result = dp8::run_command(command, read_input(command, inline_arg, file), opt);
    } catch (const std::exception& e) {
        result = {{{"error", e.what()}, {"kind", "input"}}, dp8::kExitInput};
    }
    std::cout << result.output.dump(2) << "\n";
    if (result.output.is_object() && result.output.contains("warnings"))
        for (const auto& w : result.output.at("warnings")) std::cerr << "warning: " << w.get<std::string>() << "\n";
    if (result.exit_code != 0) std::cerr << "exit " << result.exit_code << "\n";
    return result.exit_code;
}
