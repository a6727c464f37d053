#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apseq/cli.hpp"

namespace {

std::vector<apseq::Rational> parse_candidates(const std::string& text) {
    std::vector<apseq::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(apseq::Rational::parse(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace apseq::cli;

    CLI::App app{"Arithmetic progression analysis and theorem verification"};
    app.require_subcommand(1);
    app.fallthrough();

    JobSpec job;
    std::size_t horizon = 0, max_order = 0, pairs = 0, expect_order = 0;
    double tolerance = 0.0;
    std::string candidates, format = "json";
    auto* o_horizon = app.add_option("--horizon", horizon, "Number of leading terms (or trace length) to use");
    auto* o_max_order = app.add_option("--max-order", max_order, "Largest order tried");
    auto* o_tolerance = app.add_option("--tolerance", tolerance, "Relative tolerance for floating-point data (0 means exact)");
    app.add_flag("--exact", job.exact, "Read every literal exactly; forces tolerance 0");
    app.add_option("--min-windows", job.min_windows, "Vanishing windows required to certify an order")->default_val(1);
    auto* o_candidates = app.add_option("--candidates", candidates, "Comma-separated exponents, e.g. 1/2,1,2");
    auto* o_pairs = app.add_option("--pairs", pairs, "Random pairs sampled in normed spaces");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
    auto* o_expect = app.add_option("--expect-order", expect_order, "Exit 1 unless this order is certified");

    std::string seq_file, theorem, instance_file;
    auto* analyze = app.add_subcommand("analyze", "Certify the order of a sequence");
    analyze->add_option("file", seq_file, "Sequence file (JSON or CSV)")->required();
    auto* classify = app.add_subcommand("classify", "Classify the progression powers of a positive sequence");
    classify->add_option("file", seq_file, "Sequence file (JSON or CSV)")->required();
    auto* verify = app.add_subcommand("verify", "Verify a theorem on an instance");
    verify->add_option("theorem", theorem, "Theorem name")->required();
    verify->add_option("instance", instance_file, "Instance file (JSON)");
    for (auto* sub : {analyze, classify, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    if (*o_horizon) job.horizon = horizon;
    if (*o_max_order) job.max_order = max_order;
    if (*o_tolerance) job.tolerance = tolerance;
    if (*o_pairs) job.pairs = pairs;
    if (*o_expect) job.expect_order = expect_order;
    job.format = format == "text" ? OutputFormat::text : OutputFormat::json;

    CommandResult result;
    try {
        if (*o_candidates) job.candidates = parse_candidates(candidates);
        if (analyze->parsed()) {
            job.command = "analyze";
            job.inputs = {seq_file};
        } else if (classify->parsed()) {
            job.command = "classify";
            job.inputs = {seq_file};
        } else {
            job.command = "verify";
            job.theorem = theorem;
            if (!instance_file.empty()) job.inputs = {instance_file};
        }
        result = run(job);
    } catch (const apseq::error& e) {
        std::cerr << "apseq: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cout << render(result, job.format);
    if (result.exit_code == kExitInputError) std::cerr << "apseq: " << result.document.value("message", std::string()) << "\n";
    return result.exit_code;
}
