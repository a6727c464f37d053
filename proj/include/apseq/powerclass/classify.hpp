#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apseq/powerclass/laws.hpp"
#include "apseq/powerclass/positive.hpp"

namespace apseq {

enum class PowerClass { never_ap, constant, proper };

inline const char* to_string(PowerClass c) {
    switch (c) {
        case PowerClass::never_ap: return "never_ap";
        case PowerClass::constant: return "constant";
        default: return "proper";
    }
}

/// a^s has strict order ell, and every other progression power is (k s, k ell).
struct ProperOrder {
    Rational s;
    std::int64_t ell = 1;
    friend bool operator==(const ProperOrder&, const ProperOrder&) = default;
};

/// One exponent q whose power a^q certified a strict order.
struct PowerEvidence {
    Rational q;
    std::int64_t h = 0;
    Mode mode = Mode::exact;
    friend bool operator==(const PowerEvidence&, const PowerEvidence&) = default;
};

/// One exponent q whose power a^q did not certify any order.
struct PowerRejection {
    Rational q;
    OrderVerdict verdict = OrderVerdict::not_an_ap;
    std::size_t orders_excluded = 0;
    Mode mode = Mode::exact;
    friend bool operator==(const PowerRejection&, const PowerRejection&) = default;
};

/// Trichotomy of a positive sequence, relative to the tried exponents and horizon.
///
/// never_ap only says that no candidate certified within max_order on the horizon.
struct PowerClassification {
    PowerClass variant = PowerClass::never_ap;
    std::optional<ProperOrder> proper;
    std::vector<PowerEvidence> evidence;
    std::vector<PowerRejection> rejected;
    std::vector<Rational> candidates;
    std::size_t horizon = 0;
    std::size_t max_order = 0;
    std::size_t min_windows = 1;
    double tolerance = 0.0;
    friend bool operator==(const PowerClassification&, const PowerClassification&) = default;
};

/// Constant, never an AP for the candidate exponents, or proper order (s, ell).
///
/// Candidates are analyzed in increasing order. Certified pairs are folded with
/// reduce_gcd, and the reduced exponent is re-analyzed when it is not a candidate.
inline PowerClassification classify(const PositiveSequence& a, std::vector<Rational> candidates, std::size_t max_order,
                                    std::size_t min_windows = 1) {
    if (candidates.empty()) throw input_error("classify needs at least one candidate exponent");
    for (const auto& q : candidates)
        if (q.sign() <= 0) throw input_error("candidate exponents must be positive, got " + q.str());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    PowerClassification out;
    out.candidates = candidates;
    out.horizon = a.size();
    out.max_order = max_order;
    out.min_windows = min_windows;
    out.tolerance = a.exact() ? 0.0 : a.tolerance();
    if (a.is_constant()) {
        out.variant = PowerClass::constant;
        return out;
    }

    const OrderOptions opts{max_order, min_windows};
    for (const auto& q : candidates) {
        auto r = analyze_positive(power_seq(a, q), opts);
        if (r.verdict == OrderVerdict::certified) {
            out.evidence.push_back({q, static_cast<std::int64_t>(*r.order), r.mode});
        } else {
            out.rejected.push_back({q, r.verdict, r.orders_excluded, r.mode});
        }
    }
    if (out.evidence.empty()) return out;

    for (const auto& e : out.evidence)
        if (e.h < 1) throw internal_consistency("a power of a non-constant sequence certified order 0 at q = " + e.q.str());
    PowerOrder acc{out.evidence.front().q, out.evidence.front().h};
    for (const auto& e : out.evidence) {
        if (!consistency_rk_hq(acc.q, acc.h, e.q, e.h))
            throw internal_consistency("evidence (" + e.q.str() + ", " + std::to_string(e.h) + ") violates r k = h q against (" +
                                       acc.q.str() + ", " + std::to_string(acc.h) + ")");
        acc = reduce_gcd(acc.q, acc.h, e.q, e.h);
    }

    if (!std::binary_search(candidates.begin(), candidates.end(), acc.q)) {
        auto r = analyze_positive(power_seq(a, acc.q), opts);
        if (r.verdict != OrderVerdict::certified || static_cast<std::int64_t>(*r.order) != acc.h)
            throw internal_consistency("reduced exponent " + acc.q.str() + " does not certify strict order " + std::to_string(acc.h));
        out.evidence.push_back({acc.q, acc.h, r.mode});
        std::sort(out.evidence.begin(), out.evidence.end(), [](const auto& x, const auto& y) { return x.q < y.q; });
    }
    for (const auto& e : out.evidence) {
        Rational k = e.q / acc.q;
        if (!k.is_integer() || Rational(e.h) != k * Rational(acc.h))
            throw internal_consistency("evidence (" + e.q.str() + ", " + std::to_string(e.h) + ") is not a multiple of the proper order");
    }
    out.variant = PowerClass::proper;
    out.proper = ProperOrder{acc.q, acc.h};
    return out;
}

/// (order, exponent) pair of pi(a) or pi-hat(a); no exponent means every q > 0.
struct PiEntry {
    std::int64_t order = 0;
    std::optional<Rational> exponent;
    friend bool operator==(const PiEntry&, const PiEntry&) = default;
};

/// Truncated listings of the strict-order set pi-hat(a) and the order set pi(a).
struct PiSets {
    std::vector<PiEntry> strict;
    std::vector<PiEntry> all;
    friend bool operator==(const PiSets&, const PiSets&) = default;
};

inline PiSets pi_sets(const PowerClassification& cls, std::int64_t max_order, std::int64_t max_multiple) {
    PiSets out;
    if (cls.variant == PowerClass::never_ap) return out;
    if (cls.variant == PowerClass::constant) {
        out.strict.push_back({0, std::nullopt});
        for (std::int64_t h = 0; h <= max_order; ++h) out.all.push_back({h, std::nullopt});
        return out;
    }
    const auto& p = *cls.proper;
    for (std::int64_t k = 1; k <= max_multiple; ++k) {
        Rational q = Rational(k) * p.s;
        out.strict.push_back({k * p.ell, q});
        for (std::int64_t h = k * p.ell; h <= max_order; ++h) out.all.push_back({h, q});
    }
    return out;
}

}  // namespace apseq
