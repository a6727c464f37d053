#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apseq/cli/codec.hpp"
#include "apseq/cli/inputs.hpp"

namespace apseq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitInputError = 3;

enum class OutputFormat { json, text };

/// One invocation: command, inputs and analysis flags.
struct JobSpec {
    std::string command;
    std::string theorem;
    std::vector<std::string> inputs;
    std::optional<std::size_t> horizon;
    std::optional<std::size_t> max_order;
    std::optional<double> tolerance;
    bool exact = false;
    std::size_t min_windows = 1;
    std::vector<Rational> candidates;
    std::optional<std::size_t> pairs;
    OutputFormat format = OutputFormat::json;
    std::optional<std::size_t> expect_order;

    /// horizon >= 2, tolerance >= 0, exact mode only with tolerance 0, min_windows >= 1.
    void validate() const {
        if (horizon && *horizon < 2) throw input_error("--horizon must be at least 2");
        if (tolerance && !(*tolerance >= 0.0)) throw input_error("--tolerance must be non-negative");
        if (exact && tolerance && *tolerance != 0.0) throw input_error("--exact forces tolerance 0");
        if (min_windows < 1) throw input_error("--min-windows must be at least 1");
        for (const auto& q : candidates)
            if (q.sign() <= 0) throw input_error("candidate exponents must be positive, got " + q.str());
    }

    bool exact_mode() const { return exact || (tolerance && *tolerance == 0.0); }
    double float_tolerance() const { return (tolerance && *tolerance > 0.0) ? *tolerance : kDefaultTolerance; }
    InputOptions input_options() const { return {exact_mode(), float_tolerance()}; }

    json to_json() const {
        json o;
        o["horizon"] = horizon ? json(*horizon) : json(nullptr);
        o["max_order"] = max_order ? json(*max_order) : json(nullptr);
        o["tolerance"] = exact_mode() ? 0.0 : float_tolerance();
        o["exact"] = exact_mode();
        o["min_windows"] = min_windows;
        o["candidates"] = encode_all(candidates);
        o["pairs"] = pairs ? json(*pairs) : json(nullptr);
        o["expect_order"] = expect_order ? json(*expect_order) : json(nullptr);
        return o;
    }
};

/// Exit code plus the canonical JSON document.
struct CommandResult {
    int exit_code = kExitPass;
    json document;
};

inline const std::vector<std::string>& theorem_names() {
    static const std::vector<std::string> names{"diagonal", "steps",      "decimate",      "gcd-refine",     "ring-perturbation",
                                                "mq-isometry", "rho",     "power",         "product",        "power-gcd",
                                                "m-isometry", "hs-perturbation", "n-inverse", "inverse-perturbation", "identities"};
    return names;
}

namespace detail {

inline std::int64_t get_int(const json& inst, const char* key) {
    if (!inst.contains(key)) throw input_error(std::string("instance needs \"") + key + "\"");
    const json& v = inst.at(key);
    if (!v.is_number_integer()) throw input_error(std::string("\"") + key + "\" must be an integer, got " + v.dump());
    return v.get<std::int64_t>();
}

inline std::int64_t get_positive(const json& inst, const char* key) {
    const auto v = get_int(inst, key);
    if (v < 1) throw input_error(std::string("\"") + key + "\" must be at least 1");
    return v;
}

inline Rational get_rational(const json& inst, const char* key) {
    if (!inst.contains(key)) throw input_error(std::string("instance needs \"") + key + "\"");
    return rational_from_json(inst.at(key));
}

inline ExactMatrix get_matrix(const json& inst, const char* key) {
    if (!inst.contains(key)) throw input_error(std::string("instance needs matrix \"") + key + "\"");
    return matrix_from_json(inst.at(key));
}

inline std::optional<std::int64_t> opt_int(const json& inst, const char* key) {
    if (!inst.contains(key)) return std::nullopt;
    return get_int(inst, key);
}

inline OrderOptions order_options(const JobSpec& job) {
    return {job.max_order.value_or(std::numeric_limits<std::size_t>::max()), job.min_windows};
}

/// Order report of a hypothesis sequence that must have a strict order.
template <class G>
OrderReport<G> strict_hypothesis(const Sequence<G>& seq, const std::string& label, const OrderOptions& opts) {
    auto r = analyze_order(seq, opts);
    if (r.verdict == OrderVerdict::not_an_ap)
        throw hypothesis_violation(label + " is not an arithmetic progression of order <= " + std::to_string(r.max_order));
    if (!r.certified()) throw inconclusive(label + ": horizon of " + std::to_string(seq.size()) + " terms cannot decide the order");
    if (!r.strict) throw hypothesis_violation(label + " has no strict order");
    return r;
}

/// The conclusion: seq certifies strict order `expected`.
template <class G>
OrderReport<G> strict_conclusion(const Sequence<G>& seq, const std::string& label, std::size_t expected, std::size_t min_windows) {
    auto r = analyze_order(seq, OrderOptions{expected, min_windows});
    if (r.verdict == OrderVerdict::inconclusive)
        throw inconclusive(label + ": horizon of " + std::to_string(seq.size()) + " terms cannot certify order " + std::to_string(expected));
    if (!r.certified() || r.order() != expected || !r.strict)
        throw counterexample(label, label + " does not have strict order " + std::to_string(expected));
    return r;
}

inline IsometryOptions isometry_options(const JobSpec& job) {
    IsometryOptions o;
    o.min_windows = job.min_windows;
    o.tolerance = job.float_tolerance();
    if (!job.candidates.empty()) o.proper_candidates = job.candidates;
    return o;
}

inline PairSampling sampling(const JobSpec& job) { return {job.pairs.value_or(PairSampling{}.random_pairs), PairSampling{}.seed}; }

/// --horizon, else the instance's "horizon", else the fallback.
inline std::size_t horizon_of(const JobSpec& job, const json& inst, std::size_t fallback) {
    if (job.horizon) return *job.horizon;
    if (inst.contains("horizon")) {
        const auto h = get_int(inst, "horizon");
        if (h < 2) throw input_error("horizon must be at least 2");
        return static_cast<std::size_t>(h);
    }
    return fallback;
}

inline std::size_t isometry_horizon(const JobSpec& job, const json& inst, std::int64_t m) {
    return horizon_of(job, inst, std::max<std::size_t>(2 * static_cast<std::size_t>(m) + 4, 10));
}

/// Calls f with the system described by j, as a FiniteSystem or a NormedSystem.
template <class F>
json with_system(const json& j, const JobSpec& job, F&& f) {
    if (is_finite_system(j)) return f(finite_system_from_json(j));
    return f(normed_system_from_json(j, sampling(job)));
}

template <class S>
auto pairs_for(const S& sys, const json& inst) {
    return inst.contains("pairs") ? pairs_from_json<S>(inst.at("pairs")) : sys.sample_pairs();
}

inline DoubleSequence<Rational> exact_grid(const json& rows) {
    std::vector<std::vector<Rational>> g;
    for (const auto& r : rows) g.push_back(decode_all<Rational>(r));
    return DoubleSequence<Rational>(std::move(g));
}

inline DoubleSequence<double> float_grid(const json& rows, double tolerance) {
    std::vector<std::vector<double>> g;
    for (const auto& r : rows) g.push_back(decode_all<double>(r));
    return DoubleSequence<double>(std::move(g), tolerance);
}

// Theorem handlers. Each returns the result object or throws the verdict.

inline json verify_diagonal(const json& inst, const JobSpec& job) {
    const json& rows = inst.at("grid");
    if (!rows.is_array() || rows.empty()) throw input_error("grid must be a non-empty array of rows");
    auto run = [&](const auto& grid) {
        auto r = diagonal(grid, order_options(job));
        if (r.analysis.verdict == OrderVerdict::inconclusive) throw inconclusive("diagonal cannot be decided on the horizon");
        if (!r.within_bound())
            throw counterexample("diagonal", "diagonal is not of order <= row order + column order = " + std::to_string(r.bound()));
        return to_json(r);
    };
    const bool floating = inst.value("kind", std::string("rational")) == "float" && !job.exact_mode();
    return floating ? run(float_grid(rows, job.float_tolerance())) : run(exact_grid(rows));
}

inline json verify_steps(const json& inst, const JobSpec& job) {
    const auto seq = sequence_from_json(inst.at("sequence"), job.input_options());
    std::vector<std::int64_t> steps = inst.at("steps").get<std::vector<std::int64_t>>();
    if (steps.empty()) throw insufficient_data("step sequence is empty");
    std::vector<Rational> sv;
    for (auto s : steps) sv.emplace_back(s);
    const auto sr = strict_hypothesis(Sequence<Rational>(sv), "steps", order_options(job));
    return std::visit(
        [&](const auto& a) {
            const auto ar = strict_hypothesis(a, "sequence", order_options(job));
            const std::size_t expected = ar.order() * (sr.order() + 1);
            const auto b = subsequence_by_steps(a, steps);
            const auto br = strict_conclusion(b, "subsequence", expected, job.min_windows);
            return json{{"h", ar.order()}, {"k", sr.order()}, {"expected_order", expected}, {"subsequence", encode_all(b.elements())},
                        {"analysis", to_json(br)}};
        },
        seq);
}

inline json verify_decimate(const json& inst, const JobSpec& job) {
    const auto seq = sequence_from_json(inst.at("sequence"), job.input_options());
    const auto d = static_cast<std::size_t>(get_positive(inst, "d"));
    return std::visit(
        [&](const auto& a) {
            const auto ar = strict_hypothesis(a, "sequence", order_options(job));
            const auto b = decimate(a, d);
            const auto br = strict_conclusion(b, "decimated sequence", ar.order(), job.min_windows);
            return json{{"h", ar.order()}, {"d", d}, {"decimated", encode_all(b.elements())}, {"analysis", to_json(br)}};
        },
        seq);
}

inline json verify_gcd_refine(const json& inst, const JobSpec& job) {
    const auto c = get_positive(inst, "c");
    const auto d = get_positive(inst, "d");
    if (!inst.contains("sequence")) {
        const auto h = get_int(inst, "h");
        const auto k = get_int(inst, "k");
        return to_json(gcd_refine(c, h, d, k));
    }
    const auto seq = sequence_from_json(inst.at("sequence"), job.input_options());
    return std::visit(
        [&](const auto& a) {
            const auto hr = strict_hypothesis(decimate(a, static_cast<std::size_t>(c)), "(a_{cn})", order_options(job));
            const auto kr = strict_hypothesis(decimate(a, static_cast<std::size_t>(d)), "(a_{dn})", order_options(job));
            const auto g = gcd_refine(c, static_cast<std::int64_t>(hr.order()), d, static_cast<std::int64_t>(kr.order()));
            const auto er = strict_conclusion(decimate(a, static_cast<std::size_t>(g.e)), "(a_{en})", static_cast<std::size_t>(g.ell),
                                              job.min_windows);
            json out = to_json(g);
            out["h"] = hr.order();
            out["k"] = kr.order();
            out["analysis"] = to_json(er);
            return out;
        },
        seq);
}

inline json verify_ring(const json& inst, const JobSpec& job) {
    const auto y = get_matrix(inst, "y"), x = get_matrix(inst, "x"), a = get_matrix(inst, "a"), b = get_matrix(inst, "b");
    const std::size_t horizon = horizon_of(job, inst, 4 * x.dim() + 2 + job.min_windows);
    RingPerturbationOptions opts;
    opts.base_max_order = job.max_order.value_or(std::numeric_limits<std::size_t>::max());
    opts.min_windows = job.min_windows;
    return to_json(verify_ring_perturbation(y, x, a, b, horizon, opts));
}

inline json verify_mq(const json& inst, const JobSpec& job) {
    const auto m = get_positive(inst, "m");
    const auto q = get_rational(inst, "q");
    return with_system(inst.at("system"), job, [&](const auto& sys) {
        return to_json(check_mq_isometry(sys, m, q, isometry_horizon(job, inst, m), pairs_for(sys, inst), isometry_options(job)));
    });
}

inline json verify_rho(const json& inst, const JobSpec& job) {
    const auto m = get_positive(inst, "m");
    const auto q = get_rational(inst, "q");
    return with_system(inst.at("system"), job, [&](const auto& sys) {
        using S = std::decay_t<decltype(sys)>;
        const auto x = point_from_json<S>(inst.at("x"));
        const auto y = point_from_json<S>(inst.at("y"));
        return to_json(rho(sys, m, q, x, y, horizon_of(job, inst, 0), isometry_options(job)));
    });
}

inline json verify_power(const json& inst, const JobSpec& job) {
    const auto k = get_positive(inst, "k");
    const auto m = get_positive(inst, "m");
    const auto q = get_rational(inst, "q");
    return with_system(inst.at("system"), job, [&](const auto& sys) {
        return to_json(verify_power_theorem(sys, k, m, q, isometry_horizon(job, inst, m), pairs_for(sys, inst), isometry_options(job)));
    });
}

inline json verify_power_gcd_theorem(const json& inst, const JobSpec& job) {
    const auto c = get_positive(inst, "c"), m = get_positive(inst, "m"), d = get_positive(inst, "d"), ell = get_positive(inst, "ell");
    const auto q = get_rational(inst, "q");
    return with_system(inst.at("system"), job, [&](const auto& sys) {
        return to_json(verify_power_gcd(sys, c, m, d, ell, q, isometry_horizon(job, inst, std::max(m, ell)), pairs_for(sys, inst),
                                        isometry_options(job)));
    });
}

inline json verify_product(const json& inst, const JobSpec& job) {
    const auto n = get_positive(inst, "n");
    const auto m = get_positive(inst, "m");
    const auto q = get_rational(inst, "q");
    const json& sj = inst.at("S");
    const json& tj = inst.at("T");
    if (is_finite_system(sj) != is_finite_system(tj)) throw input_error("S and T must act on the same kind of space");
    return with_system(sj, job, [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        S t = [&] {
            if constexpr (std::is_same_v<S, FiniteSystem>) {
                return finite_system_from_json(tj);
            } else {
                return normed_system_from_json(tj, sampling(job));
            }
        }();
        return to_json(verify_product_theorem(s, t, n, m, q, isometry_horizon(job, inst, m + n - 1), pairs_for(s, inst), isometry_options(job)));
    });
}

inline std::int64_t search_bound(const json& inst, const char* key, const ExactMatrix& t) {
    return opt_int(inst, key).value_or(2 * static_cast<std::int64_t>(t.dim()) + 1);
}

inline json verify_m_isometry(const json& inst, const JobSpec&) {
    const auto t = get_matrix(inst, "T");
    const auto m = get_positive(inst, "m");
    const auto status = is_m_isometry(t, m);
    const auto order = isometry_order(t, std::max(m, search_bound(inst, "max_m", t)));
    json out{{"m", m},
             {"strictness", to_string(status)},
             {"defect", encode(defect(t, m))},
             {"beta", encode(beta(t, m - 1))},
             {"isometry_order", order ? json(*order) : json(nullptr)}};
    if (status == StrictStatus::no) throw counterexample("defect(T, " + std::to_string(m) + ")", "T fails the m-isometry identity for m = " + std::to_string(m));
    return out;
}

inline json verify_n_inverse(const json& inst, const JobSpec&) {
    const auto s = get_matrix(inst, "S");
    const auto t = get_matrix(inst, "T");
    const auto n = get_positive(inst, "n");
    const auto status = left_n_inverse_check(s, t, n);
    const auto order = inverse_order(s, t, std::max(n, search_bound(inst, "max_n", t)));
    json out{{"n", n},
             {"strictness", to_string(status)},
             {"defect", encode(beta_pair(s, t, n))},
             {"beta", encode(beta_pair(s, t, n - 1))},
             {"inverse_order", order ? json(*order) : json(nullptr)}};
    if (status == StrictStatus::no)
        throw counterexample("beta_pair(S, T, " + std::to_string(n) + ")", "S fails the left n-inverse identity for n = " + std::to_string(n));
    return out;
}

inline json verify_hs(const json& inst, const JobSpec&) {
    return to_json(verify_hs_perturbation(get_matrix(inst, "T"), get_matrix(inst, "Q"), opt_int(inst, "max_m").value_or(-1)));
}

inline json verify_inverse(const json& inst, const JobSpec&) {
    return to_json(verify_inverse_perturbation(get_matrix(inst, "S"), get_matrix(inst, "T"), get_matrix(inst, "P"), get_matrix(inst, "Q"),
                                               opt_int(inst, "max_n").value_or(-1)));
}

/// Every identity case with i <= max_i (alternating partial sums) and n <= max_n.
inline json verify_identities(const json& inst, const JobSpec&) {
    const auto max_n = opt_int(inst, "max_n").value_or(30);
    const auto max_i = opt_int(inst, "max_i").value_or(40);
    if (max_n < 0 || max_i < 0) throw input_error("identity ranges must be non-negative");
    std::map<std::string, std::size_t> counts;
    auto check = [&](const IdentityCase& c, const std::string& where) {
        ++counts[identity_name(c)];
        if (!verify_identity(c)) throw counterexample(identity_name(c) + " " + where, identity_name(c) + " fails at " + where);
    };
    for (std::int64_t i = 1; i <= max_i; ++i)
        for (std::int64_t j = 0; j < i; ++j) check(AlternatingPartialSum{i, j}, "i=" + std::to_string(i) + " j=" + std::to_string(j));
    for (std::int64_t n = 1; n <= max_n; ++n)
        for (std::int64_t h = 0; h < n; ++h)
            for (std::int64_t k = 0; k <= h; ++k)
                check(SkippedSum{n, h, k}, "n=" + std::to_string(n) + " h=" + std::to_string(h) + " k=" + std::to_string(k));
    for (std::int64_t n = 0; n <= max_n; ++n)
        for (std::int64_t h = 0; h <= max_n; ++h) check(UnitySum{n, h}, "n=" + std::to_string(n) + " h=" + std::to_string(h));
    json c = json::object();
    for (const auto& [name, count] : counts) c[name] = count;
    return json{{"max_n", max_n}, {"max_i", max_i}, {"cases", c}};
}

using Handler = std::function<json(const json&, const JobSpec&)>;

inline const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"diagonal", verify_diagonal},
        {"steps", verify_steps},
        {"decimate", verify_decimate},
        {"gcd-refine", verify_gcd_refine},
        {"ring-perturbation", verify_ring},
        {"mq-isometry", verify_mq},
        {"rho", verify_rho},
        {"power", verify_power},
        {"product", verify_product},
        {"power-gcd", verify_power_gcd_theorem},
        {"m-isometry", verify_m_isometry},
        {"hs-perturbation", verify_hs},
        {"n-inverse", verify_n_inverse},
        {"inverse-perturbation", verify_inverse},
        {"identities", verify_identities},
    };
    return table;
}

template <class G>
json monotonicity_of(const OrderReport<G>& r) {
    if constexpr (std::is_same_v<G, Rational> || std::is_same_v<G, double>) {
        if (!r.certified()) return nullptr;
        if (r.order() == 0) return to_json(Monotonicity{true, 0});
        if (!(apseq::detail::to_real(r.monomial->coefficients[r.order()]) > 0)) return nullptr;
        return to_json(eventual_monotonicity(r));
    } else {
        return nullptr;
    }
}

inline void analyze_into(const JobSpec& job, CommandResult& out) {
    if (job.inputs.size() != 1) throw input_error("analyze takes exactly one sequence file");
    auto seq = load_sequence(job.inputs.front(), job.input_options());
    if (job.horizon) seq = truncate(seq, *job.horizon);
    json& doc = out.document;
    doc["kind"] = kind_of(seq);
    std::visit(
        [&](const auto& s) {
            const auto r = analyze_order(s, order_options(job));
            doc["result"] = json{{"report", to_json(r)}, {"monotonicity", monotonicity_of(r)}};
            if (r.verdict == OrderVerdict::inconclusive) {
                out.exit_code = kExitInconclusive;
                doc["status"] = "inconclusive";
                doc["message"] = "the horizon cannot decide the order; no certification found";
            } else if (job.expect_order && !(r.certified() && r.order() == *job.expect_order)) {
                out.exit_code = kExitViolated;
                doc["status"] = "violated";
                doc["message"] = r.certified() ? "certified order " + std::to_string(r.order()) + " differs from the expected " +
                                                     std::to_string(*job.expect_order)
                                               : "no order <= " + std::to_string(r.max_order) + " fits the prefix";
            } else {
                doc["status"] = to_string(r.verdict);
            }
        },
        seq);
}

inline void classify_into(const JobSpec& job, CommandResult& out) {
    if (job.inputs.size() != 1) throw input_error("classify takes exactly one sequence file");
    auto seq = load_sequence(job.inputs.front(), job.input_options());
    if (job.horizon) seq = truncate(seq, *job.horizon);
    const auto a = positive_from(seq);
    if (a.size() < 2) throw insufficient_data("classification needs at least two terms");
    const std::size_t max_order = std::min(job.max_order.value_or(a.size() - 2), a.size() - 2);
    auto candidates = job.candidates.empty() ? std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)} : job.candidates;
    const auto cls = classify(a, candidates, max_order, job.min_windows);
    json& doc = out.document;
    doc["kind"] = kind_of(seq);
    doc["result"] = json{{"classification", to_json(cls)}, {"pi", to_json(pi_sets(cls, static_cast<std::int64_t>(max_order), 3))}};
    doc["status"] = to_string(cls.variant);
    if (cls.variant == PowerClass::never_ap)
        doc["message"] = "no certification found for the candidate exponents within order " + std::to_string(max_order) + " on " +
                         std::to_string(a.size()) + " terms";
}

inline void verify_into(const JobSpec& job, CommandResult& out) {
    const auto& table = handlers();
    const auto it = table.find(job.theorem);
    if (it == table.end()) throw input_error("unknown theorem '" + job.theorem + "'");
    if (job.inputs.size() > 1) throw input_error("verify takes at most one instance file");
    json inst = json::object();
    if (!job.inputs.empty()) {
        inst = parse_json(read_text(job.inputs.front()), job.inputs.front());
    } else if (job.theorem != "identities") {
        throw input_error("theorem '" + job.theorem + "' needs an instance file");
    }
    if (!inst.is_object()) throw input_error("instance must be a JSON object");
    out.document["result"] = it->second(inst, job);
    out.document["status"] = "pass";
}

inline void fail(CommandResult& out, int code, const std::string& status, const std::string& message) {
    out.exit_code = code;
    out.document["status"] = status;
    out.document["message"] = message;
    if (!out.document.contains("result")) out.document["result"] = nullptr;
}

}  // namespace detail

/// Runs one job. Never throws for library or input errors; the exit code and
/// document carry the outcome.
inline CommandResult run(const JobSpec& job) {
    CommandResult out;
    json& doc = out.document;
    doc["command"] = job.command;
    if (job.command == "verify") doc["theorem"] = job.theorem;
    doc["inputs"] = job.inputs;
    doc["options"] = job.to_json();
    try {
        job.validate();
        if (job.command == "analyze") {
            detail::analyze_into(job, out);
        } else if (job.command == "classify") {
            detail::classify_into(job, out);
        } else if (job.command == "verify") {
            detail::verify_into(job, out);
        } else {
            throw input_error("unknown command '" + job.command + "'");
        }
    } catch (const counterexample& e) {
        detail::fail(out, kExitViolated, "violated", e.what());
        doc["witness"] = e.witness();
    } catch (const hypothesis_violation& e) {
        detail::fail(out, kExitViolated, "hypothesis_violation", e.what());
        doc["failed"] = e.failed();
    } catch (const precondition_failure& e) {
        detail::fail(out, kExitViolated, "hypothesis_violation", e.what());
        doc["failed"] = std::vector<std::string>{e.what()};
    } catch (const not_an_ap& e) {
        detail::fail(out, kExitViolated, "violated", e.what());
    } catch (const internal_consistency& e) {
        detail::fail(out, kExitViolated, "violated", e.what());
    } catch (const inconclusive& e) {
        detail::fail(out, kExitInconclusive, "inconclusive", e.what());
    } catch (const insufficient_data& e) {
        detail::fail(out, kExitInconclusive, "inconclusive", e.what());
    } catch (const error& e) {
        detail::fail(out, kExitInputError, "input_error", e.what());
    } catch (const json::exception& e) {
        detail::fail(out, kExitInputError, "input_error", e.what());
    }
    doc["exit_code"] = out.exit_code;
    return out;
}

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
inline std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline void render_text_into(const json& j, const std::string& path, std::string& out) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) render_text_into(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text_into(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

}  // namespace detail

/// One "path: value" line per leaf of the JSON document.
inline std::string render_text(const json& doc) {
    std::string out;
    detail::render_text_into(doc, "", out);
    return out;
}

inline std::string render(const CommandResult& r, OutputFormat f) {
    return f == OutputFormat::json ? render_json(r.document) : render_text(r.document);
}

}  // namespace apseq::cli
