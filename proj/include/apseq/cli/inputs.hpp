#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apseq/cli/codec.hpp"

namespace apseq::cli {

/// How scalar data is interpreted: exact forces rationals, tolerance applies to floats.
struct InputOptions {
    bool exact = false;
    double tolerance = kDefaultTolerance;
};

using LoadedSequence = std::variant<Sequence<Rational>, Sequence<double>, Sequence<ComplexVector>, Sequence<ExactMatrix>>;

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(origin + ": " + e.what());
    }
}

inline bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

/// Floats keep the caller's tolerance; exact mode reads each literal as an exact decimal.
inline LoadedSequence scalar_sequence(const std::vector<std::string>& literals, bool floating, const InputOptions& opts) {
    if (literals.empty()) throw insufficient_data("sequence has no terms");
    if (floating && !opts.exact) {
        std::vector<double> v;
        for (const auto& s : literals) {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(s, &used);
            } catch (const std::exception&) {
                throw input_error("invalid float literal '" + s + "'");
            }
            if (used != s.size() || !std::isfinite(x)) throw input_error("invalid float literal '" + s + "'");
            v.push_back(x);
        }
        return Sequence<double>(std::move(v), opts.tolerance);
    }
    std::vector<Rational> v;
    for (const auto& s : literals) v.push_back(Rational::parse(s));
    return Sequence<Rational>(std::move(v));
}

/// Comma, whitespace or newline separated scalars. Decimal points or exponents make
/// the data float unless exact mode is on; integers and p/q are exact.
inline LoadedSequence parse_csv_sequence(const std::string& text, const InputOptions& opts) {
    std::vector<std::string> literals;
    std::string cur;
    bool floating = false;
    auto flush = [&] {
        if (!cur.empty()) literals.push_back(std::move(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            if (c == '.' || c == 'e' || c == 'E') floating = true;
            cur.push_back(c);
        }
    }
    flush();
    if (floating && opts.exact)
        for (const auto& s : literals)
            if (s.find_first_of("eE") != std::string::npos) throw input_error("exponent notation '" + s + "' has no exact reading");
    return scalar_sequence(literals, floating, opts);
}

/// {"kind": "rational|float|vector|matrix", "elements": [...], "tolerance"?: x}
inline LoadedSequence sequence_from_json(const json& j, const InputOptions& opts) {
    if (!j.is_object()) throw input_error("sequence must be a JSON object");
    const std::string kind = j.value("kind", std::string("rational"));
    const json& el = j.at("elements");
    if (!el.is_array() || el.empty()) throw insufficient_data("sequence has no terms");
    if (kind == "rational" || kind == "float") {
        InputOptions o = opts;
        if (j.contains("tolerance") && !opts.exact) o.tolerance = j.at("tolerance").get<double>();
        std::vector<std::string> literals;
        for (const auto& x : el) literals.push_back(scalar_text(x, "sequence term"));
        return scalar_sequence(literals, kind == "float", o);
    }
    if (kind == "vector") return Sequence<ComplexVector>(decode_all<ComplexVector>(el));
    if (kind == "matrix") return Sequence<ExactMatrix>(decode_all<ExactMatrix>(el));
    throw input_error("unknown sequence kind '" + kind + "'");
}

inline LoadedSequence load_sequence(const std::string& path, const InputOptions& opts) {
    const std::string text = read_text(path);
    if (looks_like_json(text)) return sequence_from_json(parse_json(text, path), opts);
    return parse_csv_sequence(text, opts);
}

inline std::string kind_of(const LoadedSequence& s) {
    return std::visit([](const auto& x) { return std::string(element_traits<typename std::decay_t<decltype(x)>::element_type>::kind); }, s);
}

inline LoadedSequence truncate(const LoadedSequence& s, std::size_t horizon) {
    return std::visit(
        [&](const auto& x) -> LoadedSequence {
            if (horizon > x.size())
                throw input_error("horizon " + std::to_string(horizon) + " exceeds the " + std::to_string(x.size()) + " terms supplied");
            return x.prefix(horizon);
        },
        s);
}

/// Strictly positive scalar data for classification.
inline PositiveSequence positive_from(const LoadedSequence& s) {
    if (const auto* r = std::get_if<Sequence<Rational>>(&s)) return PositiveSequence(*r);
    if (const auto* d = std::get_if<Sequence<double>>(&s)) return PositiveSequence(*d);
    throw input_error("classification needs scalar data");
}

// Metric systems.

/// {"points": P, "dist": [[...]], "map": [...]}
inline FiniteSystem finite_system_from_json(const json& j, const char* map_key = "map") {
    FiniteMetricSpace space;
    const json& d = j.at("dist");
    if (!d.is_array()) throw input_error("dist must be a table");
    for (const auto& row : d) {
        if (!row.is_array()) throw input_error("dist must be a table");
        space.dist.push_back(decode_all<Rational>(row));
    }
    if (j.contains("points") && j.at("points").get<std::size_t>() != space.dist.size())
        throw input_error("points = " + j.at("points").dump() + " but dist has " + std::to_string(space.dist.size()) + " rows");
    const json& m = j.at(map_key);
    if (!m.is_array()) throw input_error("map must be an array of point indices");
    std::vector<std::size_t> map;
    for (const auto& v : m) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw input_error("map values must be point indices, got " + v.dump());
        map.push_back(v.get<std::size_t>());
    }
    return FiniteSystem(std::move(space), std::move(map));
}

/// {"matrix": {...}, "norm": "2" | "1" | "inf" | "p"}
inline NormedSystem normed_system_from_json(const json& j, const PairSampling& sampling) {
    const NormSpec norm = j.contains("norm") ? NormSpec::parse(scalar_text(j.at("norm"), "norm")) : NormSpec::l2();
    return NormedSystem{matrix_from_json(j.at("matrix")), norm, sampling};
}

inline bool is_finite_system(const json& j) {
    if (!j.is_object()) throw input_error("system must be a JSON object");
    if (j.contains("dist")) return true;
    if (j.contains("matrix")) return false;
    throw input_error("system needs either \"dist\" and \"map\" or \"matrix\"");
}

template <class S>
typename S::point_type point_from_json(const json& j) {
    if constexpr (std::is_same_v<S, FiniteSystem>) {
        if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw input_error("point must be an index, got " + j.dump());
        return j.get<std::size_t>();
    } else {
        return vector_from_json(j);
    }
}

template <class S>
std::vector<std::pair<typename S::point_type, typename S::point_type>> pairs_from_json(const json& j) {
    std::vector<std::pair<typename S::point_type, typename S::point_type>> out;
    if (!j.is_array() || j.empty()) throw input_error("pairs must be a non-empty array of [x, y]");
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw input_error("each pair must be [x, y]");
        out.emplace_back(point_from_json<S>(p[0]), point_from_json<S>(p[1]));
    }
    return out;
}

}  // namespace apseq::cli
