#pragma once

#include <optional>

#include "approxlab/element_set.hpp"

namespace approxlab {

enum class CoverKind {
    RuzsaCover,  // A^3 ⊆ X A^2, translates xA pairwise disjoint
    ApproxGroup, // A^2 ⊆ X A
    PowerCover   // A^m ⊆ X^{m-1} A
};

/// Witness set X plus the containment it certifies.
struct CoverCertificate {
    ElementSet X;
    CoverKind kind;
    Rational bound_K; // |A^4|/|A| for RuzsaCover, |X| for the others
};

/// Greedy maximal disjoint-translate scan of A^3 in canonical order.
/// Guarantees |X| <= |A^4|/|A| and A^3 ⊆ X A^2.
CoverCertificate ruzsa_cover(const ElementSet& A, std::size_t budget = kDefaultBudget);

/// Greedy first-fit cover of A^2 by translates xA, x scanned over A^2 in
/// canonical order. The certified K is |X| (an upper bound on the optimal K).
CoverCertificate certify_approx_group(const ElementSet& A, std::size_t budget = kDefaultBudget);

struct VerifyResult {
    bool ok = false;
    std::optional<GroupElement> witness; // first violating element in canonical order
};

/// Exact re-check of the claimed containment. For PowerCover the requested
/// power m is checked; other kinds ignore it.
VerifyResult verify_certificate(const ElementSet& A, const CoverCertificate& cert, int power_m = 3,
                                std::size_t budget = kDefaultBudget);

} // namespace approxlab
