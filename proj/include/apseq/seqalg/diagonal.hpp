#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "apseq/diffcalc/order.hpp"

namespace apseq {

/// Finite rectangular block (a_{i,j}) of a double sequence.
///
/// Row i is (a_{i,j})_j and column j is (a_{i,j})_i.
template <GroupElement G>
class DoubleSequence {
public:
    explicit DoubleSequence(std::vector<std::vector<G>> grid)
        : DoubleSequence(std::move(grid), element_traits<G>::exact ? 0.0 : kDefaultTolerance) {}

    DoubleSequence(std::vector<std::vector<G>> grid, double tolerance) : grid_(std::move(grid)), tolerance_(tolerance) {
        if (grid_.empty() || grid_.front().empty()) throw insufficient_data("double sequence needs at least one entry");
        for (const auto& row : grid_) {
            if (row.size() != grid_.front().size()) throw input_error("double sequence must be rectangular");
            for (const auto& x : row)
                if (!element_traits<G>::same_shape(x, grid_[0][0])) throw input_error("double sequence elements must share one shape");
        }
        // Delegate the mode and tolerance checks.
        (void)Sequence<G>(std::vector<G>{grid_[0][0]}, tolerance_);
    }

    /// a_{i,j} = f(i, j) for i < rows, j < cols.
    template <class F>
    static DoubleSequence generate(std::size_t rows, std::size_t cols, F&& f) {
        std::vector<std::vector<G>> grid(rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) grid[i].push_back(f(i, j));
        return DoubleSequence(std::move(grid));
    }

    std::size_t rows() const noexcept { return grid_.size(); }
    std::size_t cols() const noexcept { return grid_.front().size(); }
    const G& operator()(std::size_t i, std::size_t j) const { return grid_[i][j]; }
    double tolerance() const noexcept { return tolerance_; }

    Sequence<G> row(std::size_t i) const { return Sequence<G>(grid_.at(i), tolerance_); }
    Sequence<G> col(std::size_t j) const {
        std::vector<G> v;
        v.reserve(rows());
        for (const auto& r : grid_) v.push_back(r.at(j));
        return Sequence<G>(std::move(v), tolerance_);
    }

private:
    std::vector<std::vector<G>> grid_;
    double tolerance_;
};

/// Outcome of the diagonal theorem on a finite grid.
///
/// row_order is the largest certified order over the rows, col_order the
/// largest over the columns; the diagonal must have order <= row_order + col_order.
template <GroupElement G>
struct DiagonalReport {
    Sequence<G> diagonal;
    std::vector<std::size_t> row_orders;
    std::vector<std::size_t> col_orders;
    std::size_t row_order = 0;
    std::size_t col_order = 0;
    OrderReport<G> analysis;

    std::size_t bound() const noexcept { return row_order + col_order; }
    bool within_bound() const { return analysis.certified() && analysis.order() <= bound(); }
    bool strict_at_bound() const { return within_bound() && analysis.order() == bound() && analysis.strict; }
};

/// (a_{0,0}, a_{1,1}, ...) together with the row/column hypothesis checks.
///
/// Every row and column must certify an order <= line_opts.max_order on the grid.
/// Lines refuting every such order are listed in a hypothesis_violation; lines the
/// horizon cannot decide raise inconclusive.
template <GroupElement G>
DiagonalReport<G> diagonal(const DoubleSequence<G>& dseq, OrderOptions line_opts = {}) {
    const std::size_t min_windows = line_opts.min_windows;
    std::vector<std::string> failed;
    std::vector<std::string> undecided;
    auto check = [&](const Sequence<G>& line, const std::string& label, std::vector<std::size_t>& orders) {
        auto r = analyze_order(line, line_opts);
        if (r.certified()) {
            orders.push_back(r.order());
        } else if (r.verdict == OrderVerdict::not_an_ap) {
            failed.push_back(label + " is not an arithmetic progression on the grid");
        } else {
            undecided.push_back(label);
        }
    };

    std::vector<std::size_t> row_orders, col_orders;
    for (std::size_t i = 0; i < dseq.rows(); ++i) check(dseq.row(i), "row " + std::to_string(i), row_orders);
    for (std::size_t j = 0; j < dseq.cols(); ++j) check(dseq.col(j), "column " + std::to_string(j), col_orders);
    if (!failed.empty()) throw hypothesis_violation(failed, failed.front());
    if (!undecided.empty()) throw inconclusive(undecided.front() + ": horizon too short to certify an order");

    const std::size_t n = std::min(dseq.rows(), dseq.cols());
    std::vector<G> diag;
    diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) diag.push_back(dseq(i, i));

    DiagonalReport<G> report{Sequence<G>(std::move(diag), dseq.tolerance()), std::move(row_orders), std::move(col_orders), 0, 0, {}};
    report.row_order = *std::max_element(report.row_orders.begin(), report.row_orders.end());
    report.col_order = *std::max_element(report.col_orders.begin(), report.col_orders.end());
    if (report.diagonal.size() < 2) throw insufficient_data("diagonal needs at least two terms");
    report.analysis = analyze_order(report.diagonal, OrderOptions{report.bound(), min_windows});
    return report;
}

}  // namespace apseq
