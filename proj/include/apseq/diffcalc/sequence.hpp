#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apseq/diffcalc/element.hpp"
#include "apseq/error.hpp"

namespace apseq {

enum class Mode { exact, approximate };

inline const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "approximate"; }

/// Default relative tolerance for approximate-mode sequences.
inline constexpr double kDefaultTolerance = 1e-9;

/// Finite prefix a_0, ..., a_{N-1} of a group-valued sequence.
///
/// Exact element kinds always carry tolerance 0; floating-point sequences carry a
/// strictly positive relative tolerance. All elements share one shape.
template <GroupElement G>
class Sequence {
public:
    using element_type = G;

    explicit Sequence(std::vector<G> elements)
        : Sequence(std::move(elements), element_traits<G>::exact ? 0.0 : kDefaultTolerance) {}

    Sequence(std::vector<G> elements, double tolerance) : elements_(std::move(elements)), tolerance_(tolerance) {
        if (elements_.empty()) throw insufficient_data("a sequence needs at least one term");
        if constexpr (element_traits<G>::exact) {
            if (tolerance_ != 0.0) throw input_error("exact sequences must have zero tolerance");
        } else {
            if (!(tolerance_ > 0.0)) throw input_error("approximate sequences need a positive tolerance");
        }
        for (const auto& e : elements_) {
            if (!element_traits<G>::same_shape(e, elements_.front()))
                throw input_error("sequence elements must share one shape");
        }
    }

    std::size_t size() const noexcept { return elements_.size(); }
    const G& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<G>& elements() const noexcept { return elements_; }
    Mode mode() const noexcept { return element_traits<G>::exact ? Mode::exact : Mode::approximate; }
    double tolerance() const noexcept { return tolerance_; }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// Same mode and tolerance, new elements.
    Sequence with_elements(std::vector<G> elements) const { return Sequence(std::move(elements), tolerance_); }

    /// First n terms.
    Sequence prefix(std::size_t n) const {
        if (n == 0 || n > size()) throw insufficient_data("prefix length out of range");
        return with_elements(std::vector<G>(elements_.begin(), elements_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<G> elements_;
    double tolerance_;
};

}  // namespace apseq
