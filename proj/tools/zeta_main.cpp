// Batch front end: reads one problem description (JSON), runs every
// computation and verification applicable to it, writes the report.
//
// Exit status: 0 all verifications pass, 2 verification failure (the full
// report is still written), 1 input or domain error.

#include "zeta/problem.hpp"
#include "zeta/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::trunc);
    if (!file)
        throw std::invalid_argument("cannot open output file: " + path);
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zeta functions and fixed point invariants of surface maps"};
    std::string input_path;
    std::string output_path;
    int order = 0;
    int horizon = 0;
    app.add_option("--input", input_path, "problem JSON path (default: standard input)");
    app.add_option("--output", output_path, "report path (default: standard output)");
    app.add_option("--order", order, "series truncation order (overrides the input file)")
        ->check(CLI::Range(1, zeta::ProblemInput::kMaxOrder));
    app.add_option("--horizon", horizon, "growth horizon (overrides the input file)")
        ->check(CLI::Range(zeta::ProblemInput::kMinHorizon, zeta::ProblemInput::kMaxHorizon));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        auto input = zeta::ProblemInput::parse(read_input(input_path));
        if (order > 0)
            input.order = order;
        if (horizon > 0)
            input.horizon = horizon;
        input.validate();
        const zeta::Report report = zeta::run(input);
        write_output(output_path, report.json_text);
        return report.all_passed ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
