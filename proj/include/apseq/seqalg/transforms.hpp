#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "apseq/diffcalc/sequence.hpp"
#include "apseq/exactnum/combinatorics.hpp"

namespace apseq {

/// (a_k, a_{k+1}, ..., a_{N-1}); preserves strict order.
template <GroupElement G>
Sequence<G> shift(const Sequence<G>& seq, std::size_t k) {
    if (k == 0) throw input_error("shift amount must be at least 1");
    if (k >= seq.size()) throw insufficient_data("shift amount must be smaller than the horizon");
    return seq.with_elements(std::vector<G>(seq.elements().begin() + static_cast<std::ptrdiff_t>(k), seq.elements().end()));
}

/// A_n = a_0 + ... + a_n; raises strict order by one.
template <GroupElement G>
Sequence<G> prefix_sums(const Sequence<G>& seq) {
    std::vector<G> out;
    out.reserve(seq.size());
    G acc = element_traits<G>::zero_like(seq[0]);
    for (const auto& x : seq) {
        acc = acc + x;
        out.push_back(acc);
    }
    return seq.with_elements(std::move(out));
}

/// b_n = a_{g_n} with g_n = s_0 + ... + s_n.
///
/// steps[0] >= 0 and steps[n] >= 1 for n >= 1, so g is strictly increasing.
template <GroupElement G>
Sequence<G> subsequence_by_steps(const Sequence<G>& seq, const std::vector<std::int64_t>& steps) {
    if (steps.empty()) throw insufficient_data("step sequence is empty");
    std::vector<G> out;
    out.reserve(steps.size());
    std::int64_t g = 0;
    for (std::size_t n = 0; n < steps.size(); ++n) {
        if (steps[n] < (n == 0 ? 0 : 1)) throw input_error("steps must be non-negative and positive after the first");
        g += steps[n];
        if (g >= static_cast<std::int64_t>(seq.size()))
            throw insufficient_data("subsequence index " + std::to_string(g) + " exceeds the horizon");
        out.push_back(seq[static_cast<std::size_t>(g)]);
    }
    return seq.with_elements(std::move(out));
}

/// (a_0, a_d, a_{2d}, ...) over every index below the horizon; preserves strict order.
template <GroupElement G>
Sequence<G> decimate(const Sequence<G>& seq, std::size_t d) {
    if (d == 0) throw input_error("decimation step must be at least 1");
    if (seq.size() <= d) throw insufficient_data("decimation step must be smaller than the horizon");
    std::vector<G> out;
    for (std::size_t i = 0; i < seq.size(); i += d) out.push_back(seq[i]);
    return seq.with_elements(std::move(out));
}

/// sum_{i=0}^{h+n} C(h+n, i) (-1)^(h+n+1-i) i(i-1)...(i-ell) a_i
///
/// Vanishes whenever a has order h, n >= 2 and ell <= n-2.
template <GroupElement G>
G factorial_weighted_sum(const Sequence<G>& seq, std::int64_t h, std::int64_t n, std::int64_t ell) {
    if (h < 0 || n < 0 || ell < 0) throw input_error("factorial_weighted_sum parameters must be non-negative");
    const std::int64_t top = h + n;
    if (static_cast<std::int64_t>(seq.size()) <= top) throw insufficient_data("factorial_weighted_sum needs h+n+1 terms");
    G acc = element_traits<G>::zero_like(seq[0]);
    for (std::int64_t i = 0; i <= top; ++i) {
        BigInteger falling = 1;
        for (std::int64_t j = 0; j <= ell; ++j) falling *= i - j;
        if (falling.is_zero()) continue;
        BigInteger w = alternating_sign(top + 1 - i) * binomial(top, i) * falling;
        acc = acc + element_traits<G>::scale(seq[static_cast<std::size_t>(i)], w);
    }
    return acc;
}

}  // namespace apseq
