#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apseq/operator/isometry.hpp"
#include "apseq/ringpert/perturbation.hpp"

namespace apseq {

namespace detail {

[[noreturn]] inline void throw_hypotheses(const std::string& theorem, std::vector<std::string> failed) {
    std::string what = theorem + " hypotheses fail:";
    for (const auto& f : failed) what += " " + f + ";";
    throw hypothesis_violation(std::move(failed), what);
}

inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace detail

/// T + Q against the (2n + m - 2)-isometry bound.
struct HsPerturbationReport {
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::int64_t isometry_order = 1;
    /// Q*^{n-1} beta_{m-1}(T) Q^{n-1}
    ExactMatrix certificate;
    bool certificate_nonzero = false;
    /// beta_{2n+m-3}(T + Q) != 0
    bool strict = false;
    /// The same instance through the ring theorem with y = T*, x = T, b = Q*, a = Q.
    RingPerturbationReport<ExactMatrix> ring;
};

/// Checks that T is a strict m-isometry (m <= max_m), Q is nilpotent and TQ = QT,
/// then certifies defect(T + Q, 2n + m - 2) = 0 and the strictness certificate.
inline HsPerturbationReport verify_hs_perturbation(const ExactMatrix& t, const ExactMatrix& q, std::int64_t max_m = -1) {
    if (t.dim() != q.dim()) throw input_error("T and Q must have the same dimension");
    if (max_m < 0) max_m = 2 * detail::as_int(t.dim()) + 1;
    std::vector<std::string> failed;
    const auto m = isometry_order(t, max_m);
    if (!m) failed.push_back("T is not an m-isometry for m <= " + std::to_string(max_m));
    const auto idx = nilpotency_index(q);
    if (!idx) failed.push_back("Q is not nilpotent");
    if (!commute(t, q)) failed.push_back("T does not commute with Q");
    if (!failed.empty()) detail::throw_hypotheses("hs perturbation", std::move(failed));

    HsPerturbationReport out;
    out.m = *m;
    out.n = detail::as_int(idx->index);
    out.isometry_order = 2 * out.n + out.m - 2;
    const ExactMatrix sum = t + q;
    if (!defect(sum, out.isometry_order).is_zero())
        throw internal_consistency("T + Q is not a " + std::to_string(out.isometry_order) + "-isometry");
    const ExactMatrix q_top = pow(q, out.n - 1);
    out.certificate = q_top.adjoint() * beta(t, out.m - 1) * q_top;
    out.certificate_nonzero = !out.certificate.is_zero();
    out.strict = !beta(sum, out.isometry_order - 1).is_zero();
    if (out.strict != out.certificate_nonzero)
        throw internal_consistency("strictness of T + Q disagrees with its certificate");

    const auto horizon = static_cast<std::size_t>(out.isometry_order + 2);
    out.ring = verify_ring_perturbation(ExactMatrix(t.adjoint()), t, q, ExactMatrix(q.adjoint()), horizon);
    if (detail::as_int(out.ring.order_bound) != out.isometry_order - 1 || out.ring.strict_attained != out.strict)
        throw internal_consistency("ring perturbation disagrees with the isometry perturbation");
    return out;
}

/// S + P as a left (n + h + k - 2)-inverse of T + Q.
struct InversePerturbationReport {
    std::int64_t n = 1;
    std::int64_t h = 1;
    std::int64_t k = 1;
    std::int64_t inverse_order = 1;
    /// P^{h-1} S^{h-k} beta_{n-1}(S,T) Q^{k-1} when k <= h, P^{h-1} beta_{n-1}(S,T) T^{k-h} Q^{k-1} when h <= k.
    ExactMatrix stated_certificate;
    bool stated_nonzero = false;
    /// P^{h-1} S^{k-h} beta_{n-1}(S,T) Q^{k-1} when h <= k, P^{h-1} beta_{n-1}(S,T) T^{h-k} Q^{k-1} when h > k.
    ExactMatrix ring_certificate;
    bool ring_nonzero = false;
    /// beta_{n+h+k-3}(S + P, T + Q) != 0
    bool strict = false;
};

/// Checks that S is a strict left n-inverse of T (n <= max_n), P and Q are
/// nilpotent with SP = PS and TQ = QT, then certifies the inverse order bound and
/// evaluates both certificate conventions.
inline InversePerturbationReport verify_inverse_perturbation(const ExactMatrix& s, const ExactMatrix& t, const ExactMatrix& p,
                                                             const ExactMatrix& q, std::int64_t max_n = -1) {
    if (s.dim() != t.dim() || t.dim() != p.dim() || p.dim() != q.dim())
        throw input_error("S, T, P, Q must have the same dimension");
    if (max_n < 0) max_n = 2 * detail::as_int(t.dim()) + 1;
    std::vector<std::string> failed;
    const auto n = inverse_order(s, t, max_n);
    if (!n) failed.push_back("S is not a left n-inverse of T for n <= " + std::to_string(max_n));
    const auto ph = nilpotency_index(p);
    const auto qk = nilpotency_index(q);
    if (!ph) failed.push_back("P is not nilpotent");
    if (!qk) failed.push_back("Q is not nilpotent");
    if (!commute(s, p)) failed.push_back("S does not commute with P");
    if (!commute(t, q)) failed.push_back("T does not commute with Q");
    if (!failed.empty()) detail::throw_hypotheses("inverse perturbation", std::move(failed));

    InversePerturbationReport out;
    out.n = *n;
    out.h = detail::as_int(ph->index);
    out.k = detail::as_int(qk->index);
    out.inverse_order = out.n + out.h + out.k - 2;
    const ExactMatrix s_sum = s + p;
    const ExactMatrix t_sum = t + q;
    if (!beta_pair(s_sum, t_sum, out.inverse_order).is_zero())
        throw internal_consistency("S + P is not a left " + std::to_string(out.inverse_order) + "-inverse of T + Q");

    const ExactMatrix b = beta_pair(s, t, out.n - 1);
    const ExactMatrix p_top = pow(p, out.h - 1);
    const ExactMatrix q_top = pow(q, out.k - 1);
    out.stated_certificate = out.k <= out.h ? p_top * pow(s, out.h - out.k) * b * q_top : p_top * b * pow(t, out.k - out.h) * q_top;
    out.ring_certificate = out.h <= out.k ? p_top * pow(s, out.k - out.h) * b * q_top : p_top * b * pow(t, out.h - out.k) * q_top;
    out.stated_nonzero = !out.stated_certificate.is_zero();
    out.ring_nonzero = !out.ring_certificate.is_zero();
    out.strict = !beta_pair(s_sum, t_sum, out.inverse_order - 1).is_zero();
    if (out.strict != out.ring_nonzero)
        throw internal_consistency("strictness of S + P disagrees with the ring certificate");
    return out;
}

}  // namespace apseq
