#pragma once

#include <cstddef>
#include <optional>

#include "apseq/ringpert/ring.hpp"

namespace apseq {

/// a^index = 0 and a^(index-1) != 0.
struct NilpotencyCert {
    std::size_t index = 1;
    friend bool operator==(const NilpotencyCert&, const NilpotencyCert&) = default;
};

/// Smallest n <= nilpotency_bound(a) with a^n = 0; nullopt when a is not nilpotent.
template <RingElement R>
std::optional<NilpotencyCert> nilpotency_index(const R& a) {
    const std::size_t bound = ring_traits<R>::nilpotency_bound(a);
    R p = a;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (element_traits<R>::is_zero(p)) return NilpotencyCert{n};
        p = p * a;
    }
    return std::nullopt;
}

}  // namespace apseq
