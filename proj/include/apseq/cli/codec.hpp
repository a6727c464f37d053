#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apseq/diffcalc.hpp"
#include "apseq/isometry.hpp"
#include "apseq/operator.hpp"
#include "apseq/powerclass.hpp"
#include "apseq/ringpert.hpp"
#include "apseq/seqalg.hpp"

namespace apseq::cli {

using json = nlohmann::json;

// Scalars and exact objects. Rationals and Gaussian rationals are canonical strings.

inline json encode(const Rational& x) { return x.str(); }
inline json encode(double x) { return x; }
inline json encode(const GaussianRational& x) { return x.str(); }
inline json encode(const ComplexVector& v) {
    json out = json::array();
    for (const auto& x : v.data()) out.push_back(x.str());
    return out;
}
inline json encode(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

template <class G>
json encode_all(const std::vector<G>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

/// Text of a JSON scalar: strings as-is, numbers in their literal form.
inline std::string scalar_text(const json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer() || j.is_number_unsigned() || j.is_number_float()) return j.dump();
    throw input_error(std::string(what) + " must be a string or a number, got " + j.dump());
}

inline Rational rational_from_json(const json& j) { return Rational::parse(scalar_text(j, "rational")); }
inline GaussianRational gaussian_from_json(const json& j) { return GaussianRational::parse(scalar_text(j, "complex entry")); }
inline double float_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return rational_from_json(j).to_double();
    throw input_error("float value must be a number, got " + j.dump());
}

inline ComplexVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("vector must be a non-empty array");
    std::vector<GaussianRational> v;
    for (const auto& x : j) v.push_back(gaussian_from_json(x));
    return ComplexVector(std::move(v));
}

/// {"dim": n, "entries": [[...]]} or a bare array of rows.
inline ExactMatrix matrix_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("entries") : j;
    if (!rows.is_array() || rows.empty()) throw input_error("matrix entries must be a non-empty array of rows");
    std::vector<std::vector<GaussianRational>> data;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) throw input_error("matrix must be square");
        std::vector<GaussianRational> r;
        for (const auto& x : row) r.push_back(gaussian_from_json(x));
        data.push_back(std::move(r));
    }
    if (j.is_object() && j.contains("dim") && j.at("dim").get<std::size_t>() != data.size())
        throw input_error("matrix dim " + j.at("dim").dump() + " does not match " + std::to_string(data.size()) + " rows");
    return ExactMatrix::from_rows(data);
}

template <class G>
struct decoder;
template <>
struct decoder<Rational> {
    static Rational get(const json& j) { return rational_from_json(j); }
};
template <>
struct decoder<double> {
    static double get(const json& j) { return float_from_json(j); }
};
template <>
struct decoder<ComplexVector> {
    static ComplexVector get(const json& j) { return vector_from_json(j); }
};
template <>
struct decoder<ExactMatrix> {
    static ExactMatrix get(const json& j) { return matrix_from_json(j); }
};

template <class G>
std::vector<G> decode_all(const json& j) {
    std::vector<G> out;
    for (const auto& x : j) out.push_back(decoder<G>::get(x));
    return out;
}

inline json encode_count(std::size_t n) {
    if (n == std::numeric_limits<std::size_t>::max()) return nullptr;
    return n;
}
inline std::size_t decode_count(const json& j) {
    return j.is_null() ? std::numeric_limits<std::size_t>::max() : j.get<std::size_t>();
}

inline Mode mode_from_string(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "approximate") return Mode::approximate;
    throw input_error("unknown mode '" + s + "'");
}

inline OrderVerdict verdict_from_string(const std::string& s) {
    for (auto v : {OrderVerdict::certified, OrderVerdict::not_an_ap, OrderVerdict::inconclusive})
        if (s == to_string(v)) return v;
    throw input_error("unknown verdict '" + s + "'");
}

inline PowerClass power_class_from_string(const std::string& s) {
    for (auto v : {PowerClass::never_ap, PowerClass::constant, PowerClass::proper})
        if (s == to_string(v)) return v;
    throw input_error("unknown classification '" + s + "'");
}

template <class T>
json encode_optional(const std::optional<T>& x) {
    if (!x) return nullptr;
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::string>) {
        return *x;
    } else {
        return encode(*x);
    }
}

// Order reports.

template <class G>
json to_json(const OrderReport<G>& r) {
    json out;
    out["horizon"] = r.horizon;
    out["mode"] = to_string(r.mode);
    out["tolerance"] = r.tolerance;
    out["max_order"] = r.max_order;
    out["min_windows"] = r.min_windows;
    out["verdict"] = to_string(r.verdict);
    out["orders_excluded"] = r.orders_excluded;
    out["certified_order"] = encode_optional(r.certified_order);
    out["windows_checked"] = r.windows_checked;
    out["strict"] = r.strict;
    out["newton_coeffs"] = encode_all(r.newton_coeffs);
    out["nodes"] = encode_all(r.nodes);
    out["monomial"] = r.monomial ? encode_all(r.monomial->coefficients) : json(nullptr);
    return out;
}

template <class G>
OrderReport<G> order_report_from_json(const json& j) {
    OrderReport<G> r;
    r.horizon = j.at("horizon").get<std::size_t>();
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    r.tolerance = j.at("tolerance").get<double>();
    r.max_order = j.at("max_order").get<std::size_t>();
    r.min_windows = j.at("min_windows").get<std::size_t>();
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.orders_excluded = j.at("orders_excluded").get<std::size_t>();
    if (!j.at("certified_order").is_null()) r.certified_order = j.at("certified_order").get<std::size_t>();
    r.windows_checked = j.at("windows_checked").get<std::size_t>();
    r.strict = j.at("strict").get<bool>();
    r.newton_coeffs = decode_all<G>(j.at("newton_coeffs"));
    r.nodes = decode_all<G>(j.at("nodes"));
    if (!j.at("monomial").is_null()) r.monomial = PolynomialForm<G>{decode_all<G>(j.at("monomial"))};
    return r;
}

inline json to_json(const Monotonicity& m) { return json{{"constant", m.constant}, {"increasing_from", m.increasing_from}}; }

// Power classification.

inline json to_json(const PowerClassification& c) {
    json out;
    out["variant"] = to_string(c.variant);
    out["proper"] = c.proper ? json{{"s", c.proper->s.str()}, {"ell", c.proper->ell}} : json(nullptr);
    json ev = json::array();
    for (const auto& e : c.evidence) ev.push_back({{"q", e.q.str()}, {"h", e.h}, {"mode", to_string(e.mode)}});
    out["evidence"] = std::move(ev);
    json rej = json::array();
    for (const auto& r : c.rejected)
        rej.push_back({{"q", r.q.str()}, {"verdict", to_string(r.verdict)}, {"orders_excluded", r.orders_excluded}, {"mode", to_string(r.mode)}});
    out["rejected"] = std::move(rej);
    out["candidates"] = encode_all(c.candidates);
    out["horizon"] = c.horizon;
    out["max_order"] = c.max_order;
    out["min_windows"] = c.min_windows;
    out["tolerance"] = c.tolerance;
    return out;
}

inline PowerClassification classification_from_json(const json& j) {
    PowerClassification c;
    c.variant = power_class_from_string(j.at("variant").get<std::string>());
    if (!j.at("proper").is_null()) c.proper = ProperOrder{rational_from_json(j.at("proper").at("s")), j.at("proper").at("ell").get<std::int64_t>()};
    for (const auto& e : j.at("evidence"))
        c.evidence.push_back({rational_from_json(e.at("q")), e.at("h").get<std::int64_t>(), mode_from_string(e.at("mode").get<std::string>())});
    for (const auto& r : j.at("rejected"))
        c.rejected.push_back({rational_from_json(r.at("q")), verdict_from_string(r.at("verdict").get<std::string>()),
                              r.at("orders_excluded").get<std::size_t>(), mode_from_string(r.at("mode").get<std::string>())});
    c.candidates = decode_all<Rational>(j.at("candidates"));
    c.horizon = j.at("horizon").get<std::size_t>();
    c.max_order = j.at("max_order").get<std::size_t>();
    c.min_windows = j.at("min_windows").get<std::size_t>();
    c.tolerance = j.at("tolerance").get<double>();
    return c;
}

inline json to_json(const PiSets& p) {
    auto list = [](const std::vector<PiEntry>& xs) {
        json out = json::array();
        for (const auto& e : xs) out.push_back({{"order", e.order}, {"exponent", e.exponent ? json(e.exponent->str()) : json("any")}});
        return out;
    };
    return json{{"strict", list(p.strict)}, {"all", list(p.all)}};
}

// Isometry reports.

inline json to_json(const IsometryReport& r) {
    json out;
    out["m"] = r.m;
    out["q"] = r.q.str();
    out["horizon"] = r.horizon;
    out["min_windows"] = r.min_windows;
    out["pairs_checked"] = r.pairs_checked;
    json pairs = json::array();
    for (const auto& p : r.pair_orders)
        pairs.push_back({{"pair", p.pair}, {"order", p.order}, {"strict", p.strict}, {"mode", to_string(p.mode)}});
    out["pair_orders"] = std::move(pairs);
    out["aggregate_m"] = r.aggregate_m;
    out["strict_witness"] = encode_optional(r.strict_witness);
    out["strict"] = r.strict;
    out["proper"] = r.proper ? json{{"m", r.proper->m},
                                    {"q", r.proper->q ? json(r.proper->q->str()) : json("any")},
                                    {"consistent_on_sample", r.proper->consistent_on_sample}}
                             : json(nullptr);
    out["finiteness_conflict"] = r.finiteness_conflict;
    return out;
}

inline IsometryReport isometry_report_from_json(const json& j) {
    IsometryReport r;
    r.m = j.at("m").get<std::int64_t>();
    r.q = rational_from_json(j.at("q"));
    r.horizon = j.at("horizon").get<std::size_t>();
    r.min_windows = j.at("min_windows").get<std::size_t>();
    r.pairs_checked = j.at("pairs_checked").get<std::size_t>();
    for (const auto& p : j.at("pair_orders"))
        r.pair_orders.push_back({p.at("pair").get<std::string>(), p.at("order").get<std::size_t>(), p.at("strict").get<bool>(),
                                 mode_from_string(p.at("mode").get<std::string>())});
    r.aggregate_m = j.at("aggregate_m").get<std::int64_t>();
    if (!j.at("strict_witness").is_null()) r.strict_witness = j.at("strict_witness").get<std::string>();
    r.strict = j.at("strict").get<bool>();
    if (!j.at("proper").is_null()) {
        const auto& p = j.at("proper");
        ProperIsometry pi;
        pi.m = p.at("m").get<std::int64_t>();
        if (p.at("q") != "any") pi.q = rational_from_json(p.at("q"));
        pi.consistent_on_sample = p.at("consistent_on_sample").get<bool>();
        r.proper = pi;
    }
    r.finiteness_conflict = j.at("finiteness_conflict").get<bool>();
    return r;
}

inline json to_json(const RhoReport& r) {
    return json{{"mode", to_string(r.mode)},
                {"rho_q_exact", encode_optional(r.rho_q_exact)},
                {"rho_q", r.rho_q},
                {"rho", r.rho},
                {"fitted_rho_q", r.fitted_rho_q}};
}

inline RhoReport rho_report_from_json(const json& j) {
    RhoReport r;
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    if (!j.at("rho_q_exact").is_null()) r.rho_q_exact = rational_from_json(j.at("rho_q_exact"));
    r.rho_q = j.at("rho_q").get<double>();
    r.rho = j.at("rho").get<double>();
    r.fitted_rho_q = j.at("fitted_rho_q").get<double>();
    return r;
}

inline json to_json(const PowerTheoremReport& r) { return json{{"k", r.k}, {"base", to_json(r.base)}, {"power", to_json(r.power)}}; }

inline json to_json(const PowerGcdReport& r) {
    return json{{"e", r.e}, {"h", r.h}, {"power_c", to_json(r.power_c)}, {"power_d", to_json(r.power_d)}, {"power_e", to_json(r.power_e)}};
}

inline json to_json(const ProductTheoremReport& r) {
    return json{{"n", r.n}, {"m", r.m}, {"row_order", r.row_order}, {"col_order", r.col_order}, {"product", to_json(r.product)}};
}

// Structural and ring/operator reports (emitted only).

template <class G>
json to_json(const DiagonalReport<G>& r) {
    return json{{"diagonal", encode_all(r.diagonal.elements())},
                {"row_orders", r.row_orders},
                {"col_orders", r.col_orders},
                {"row_order", r.row_order},
                {"col_order", r.col_order},
                {"bound", r.bound()},
                {"within_bound", r.within_bound()},
                {"strict_at_bound", r.strict_at_bound()},
                {"analysis", to_json(r.analysis)}};
}

inline json to_json(const Polynomial& p) { return encode_all(p.coefficients()); }

inline json to_json(const GcdRefinement& r) {
    return json{{"e", r.e}, {"ell", r.ell}, {"certificate", to_json(r.certificate.poly)}, {"certificate_text", r.certificate.poly.str()}};
}

template <class R>
json to_json(const RingPerturbationReport<R>& r) {
    return json{{"n", r.n},
                {"m", r.m},
                {"h", r.h},
                {"order_bound", r.order_bound},
                {"c_h", encode(r.c_h)},
                {"certificate", encode(r.certificate)},
                {"certificate_form", r.certificate_form},
                {"certificate_nonzero", r.certificate_nonzero},
                {"corollary_certificate", encode(r.corollary_certificate)},
                {"corollary_nonzero", r.corollary_nonzero},
                {"corollary_setting", r.corollary_setting},
                {"base", to_json(r.base)},
                {"perturbed", to_json(r.perturbed)},
                {"strict_attained", r.strict_attained}};
}

inline json to_json(const HsPerturbationReport& r) {
    return json{{"m", r.m},
                {"n", r.n},
                {"isometry_order", r.isometry_order},
                {"certificate", encode(r.certificate)},
                {"certificate_nonzero", r.certificate_nonzero},
                {"strict", r.strict},
                {"ring", to_json(r.ring)}};
}

inline json to_json(const InversePerturbationReport& r) {
    return json{{"n", r.n},
                {"h", r.h},
                {"k", r.k},
                {"inverse_order", r.inverse_order},
                {"stated_certificate", encode(r.stated_certificate)},
                {"stated_nonzero", r.stated_nonzero},
                {"ring_certificate", encode(r.ring_certificate)},
                {"ring_nonzero", r.ring_nonzero},
                {"strict", r.strict}};
}

}  // namespace apseq::cli
