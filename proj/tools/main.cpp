#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chow/pipeline.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw chow::InputError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "chow-obstruct: exact obstructions to asymptotic Chow semistability of "
        "polarized toric Fano manifolds"};

    std::string command;
    std::string input_path;
    std::string format_name = "json";
    std::int64_t seed = -1;
    std::int64_t samples = -1;
    bool flip_sign = false;

    app.add_option("command", command, "fan | weights | invariants | verify | all")
        ->required();
    app.add_option("--input", input_path, "job document path")->required();
    app.add_option("--seed", seed, "override the document's sample seed");
    app.add_option("--samples", samples, "override the document's sample count");
    app.add_flag("--flip-sign", flip_sign, "replace the subgroup by its inverse");
    app.add_option("--format", format_name, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    const chow::OutputFormat format =
        format_name == "text" ? chow::OutputFormat::text : chow::OutputFormat::json;

    try {
        chow::JobSpec job = chow::parse_job(read_file(input_path));
        if (seed >= 0) job.options.seed = static_cast<std::uint64_t>(seed);
        if (samples >= 0) job.options.samples = static_cast<std::size_t>(samples);
        if (flip_sign) job.options.flip_sign = true;

        const chow::RunResult result = chow::run(job, command, format);
        std::cout << result.output;
        return result.exit_code;
    } catch (const chow::ConsistencyError& e) {
        std::cerr << chow::error_document("consistency", e.what(), format);
        return 3;
    } catch (const chow::InputError& e) {
        std::cerr << chow::error_document("input", e.what(), format);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << chow::error_document("internal", e.what(), format);
        return 3;
    }
}
