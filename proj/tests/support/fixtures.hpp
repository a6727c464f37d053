#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "apseq/cli/commands.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq::fixtures {

inline std::string samples(const std::string& rel) { return std::string(APSEQ_SAMPLES_DIR) + "/" + rel; }

/// One CLI invocation over the sample files with its contracted exit code.
struct Fixture {
    std::string name;
    cli::JobSpec job;
    int expected_exit;
};

inline cli::JobSpec analyze_job(const std::string& file) {
    cli::JobSpec j;
    j.command = "analyze";
    j.inputs = {samples("sequences/" + file)};
    return j;
}

inline cli::JobSpec classify_job(const std::string& file) {
    cli::JobSpec j;
    j.command = "classify";
    j.inputs = {samples("sequences/" + file)};
    return j;
}

inline cli::JobSpec verify_job(const std::string& theorem, const std::string& file) {
    cli::JobSpec j;
    j.command = "verify";
    j.theorem = theorem;
    if (!file.empty()) j.inputs = {samples("instances/" + file)};
    return j;
}

/// Pass / violate / inconclusive / malformed cases across all three commands.
inline std::vector<Fixture> fixture_matrix() {
    std::vector<Fixture> f;
    auto add = [&](std::string name, cli::JobSpec job, int code) { f.push_back({std::move(name), std::move(job), code}); };

    add("analyze quadratic", analyze_job("quadratic.csv"), 0);
    add("analyze cubic", analyze_job("cubic.json"), 0);
    add("analyze matrices", analyze_job("matrices.json"), 0);
    auto pow2 = analyze_job("powers_of_two.csv");
    pow2.max_order = 4;
    add("analyze 2^n", pow2, 0);
    pow2.expect_order = 2;
    add("analyze 2^n expecting order 2", pow2, 1);
    add("analyze two terms", analyze_job("two_terms.csv"), 2);
    add("analyze malformed csv", analyze_job("malformed.csv"), 3);
    add("analyze malformed json", analyze_job("malformed.json"), 3);
    add("analyze missing file", analyze_job("does_not_exist.csv"), 3);
    auto bad_h = analyze_job("quadratic.csv");
    bad_h.horizon = 1;
    add("analyze horizon 1", bad_h, 3);

    add("classify proper", classify_job("squares_shifted.json"), 0);
    add("classify constant", classify_job("constant.csv"), 0);
    add("classify never", classify_job("powers_of_two_long.csv"), 0);
    add("classify nonpositive", classify_job("nonpositive.csv"), 3);

    const std::vector<std::pair<std::string, std::string>> passing{
        {"diagonal", "diagonal.json"},         {"steps", "steps.json"},
        {"decimate", "decimate.json"},         {"gcd-refine", "gcd_refine.json"},
        {"gcd-refine", "gcd_refine_sequence.json"}, {"ring-perturbation", "ring_perturbation.json"},
        {"mq-isometry", "mq_isometry.json"},   {"mq-isometry", "mq_isometry_cycle.json"},
        {"rho", "rho.json"},                   {"power", "power.json"},
        {"product", "product.json"},           {"power-gcd", "power_gcd.json"},
        {"m-isometry", "m_isometry.json"},     {"hs-perturbation", "hs_perturbation.json"},
        {"n-inverse", "n_inverse.json"},       {"inverse-perturbation", "inverse_perturbation.json"},
        {"identities", "identities.json"},     {"identities", ""},
    };
    for (const auto& [t, file] : passing) add("verify " + t + " " + file, verify_job(t, file), 0);

    add("verify m-isometry 2I", verify_job("m-isometry", "m_isometry_scaling.json"), 1);
    add("verify mq-isometry 2I", verify_job("mq-isometry", "mq_isometry_scaling.json"), 1);
    add("verify product non-commuting", verify_job("product", "product_noncommuting.json"), 1);
    add("verify ring non-commuting", verify_job("ring-perturbation", "ring_perturbation_noncommuting.json"), 1);
    auto diag = verify_job("diagonal", "diagonal_undecided.json");
    diag.max_order = 3;
    add("verify diagonal broken column", diag, 1);

    add("verify ring short horizon", verify_job("ring-perturbation", "ring_perturbation_short.json"), 2);
    add("verify mq-isometry short horizon", verify_job("mq-isometry", "mq_isometry_short.json"), 2);
    add("verify diagonal undecided", verify_job("diagonal", "diagonal_undecided.json"), 2);

    add("verify unknown theorem", verify_job("no-such-theorem", "rho.json"), 3);
    add("verify non-square matrix", verify_job("m-isometry", "bad_matrix.json"), 3);
    add("verify asymmetric metric", verify_job("mq-isometry", "metric_asymmetric.json"), 3);
    add("verify missing instance", verify_job("rho", ""), 3);
    return f;
}

/// Command-line arguments equivalent to the job, for spawning the tool.
inline std::vector<std::string> argv_of(const cli::JobSpec& job) {
    std::vector<std::string> a{job.command};
    if (job.command == "verify") a.push_back(job.theorem);
    a.insert(a.end(), job.inputs.begin(), job.inputs.end());
    auto opt = [&](const char* flag, const auto& v) {
        if (v) {
            a.push_back(flag);
            a.push_back(std::to_string(*v));
        }
    };
    opt("--horizon", job.horizon);
    opt("--max-order", job.max_order);
    opt("--pairs", job.pairs);
    opt("--expect-order", job.expect_order);
    if (job.tolerance) {
        std::ostringstream t;
        t.precision(17);
        t << *job.tolerance;
        a.insert(a.end(), {"--tolerance", t.str()});
    }
    if (job.exact) a.push_back("--exact");
    if (job.min_windows != 1) a.insert(a.end(), {"--min-windows", std::to_string(job.min_windows)});
    if (!job.candidates.empty()) {
        std::string c;
        for (const auto& q : job.candidates) c += (c.empty() ? "" : ",") + q.str();
        a.insert(a.end(), {"--candidates", c});
    }
    if (job.format == cli::OutputFormat::text) a.insert(a.end(), {"--format", "text"});
    return a;
}

}  // namespace apseq::fixtures
