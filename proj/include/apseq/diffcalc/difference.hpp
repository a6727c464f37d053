#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "apseq/diffcalc/sequence.hpp"
#include "apseq/exactnum/combinatorics.hpp"

namespace apseq {

/// (a_1 - a_0, ..., a_{N-1} - a_{N-2})
template <GroupElement G>
Sequence<G> difference(const Sequence<G>& seq) {
    if (seq.size() < 2) throw insufficient_data("difference needs at least two terms");
    std::vector<G> out;
    out.reserve(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(seq[i + 1] - seq[i]);
    return seq.with_elements(std::move(out));
}

enum class DifferenceMode { iterative, direct };

/// D^h a_n for n = 0 .. N-h-1.
///
/// The iterative route applies difference() h times; the direct route sums
/// (-1)^(h-k) C(h, k) a_{n+k}. Both give identical results.
template <GroupElement G>
Sequence<G> iterated_difference(const Sequence<G>& seq, std::size_t h, DifferenceMode mode = DifferenceMode::iterative) {
    if (seq.size() <= h) throw insufficient_data("iterated difference of order h needs more than h terms");
    if (mode == DifferenceMode::iterative) {
        Sequence<G> cur = seq;
        for (std::size_t i = 0; i < h; ++i) cur = difference(cur);
        return cur;
    }
    const auto hh = static_cast<std::int64_t>(h);
    std::vector<G> out;
    out.reserve(seq.size() - h);
    for (std::size_t n = 0; n + h < seq.size(); ++n) {
        G acc = element_traits<G>::zero_like(seq[n]);
        for (std::int64_t k = 0; k <= hh; ++k) {
            BigInteger c = alternating_sign(hh - k) * binomial(hh, k);
            acc = acc + element_traits<G>::scale(seq[n + static_cast<std::size_t>(k)], c);
        }
        out.push_back(std::move(acc));
    }
    return seq.with_elements(std::move(out));
}

/// (D^0 a_0, D^1 a_0, ..., D^{N-1} a_0)
template <GroupElement G>
std::vector<G> newton_tableau(const Sequence<G>& seq) {
    std::vector<G> row = seq.elements();
    std::vector<G> out;
    out.reserve(row.size());
    while (!row.empty()) {
        out.push_back(row.front());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return out;
}

/// sum_k C(n, k) coeffs[k]; reproduces a_n from a Newton tableau whenever n < coeffs.size().
template <GroupElement G>
G newton_value(const std::vector<G>& coeffs, std::int64_t n) {
    if (coeffs.empty()) throw insufficient_data("empty Newton coefficient list");
    if (n < 0) throw input_error("term index must be non-negative");
    G acc = element_traits<G>::zero_like(coeffs.front());
    const auto top = std::min<std::int64_t>(n, static_cast<std::int64_t>(coeffs.size()) - 1);
    for (std::int64_t k = 0; k <= top; ++k) {
        acc = acc + element_traits<G>::scale(coeffs[static_cast<std::size_t>(k)], binomial(n, k));
    }
    return acc;
}

}  // namespace apseq
