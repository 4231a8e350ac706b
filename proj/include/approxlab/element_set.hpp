#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "approxlab/group.hpp"
#include "approxlab/rational.hpp"

namespace approxlab {

/// Default element cap for any enumerated set (desk-scale guarantee).
inline constexpr std::size_t kDefaultBudget = 10'000'000;

/// Immutable finite set of group elements. Members are kept sorted in
/// canonical order and deduplicated, so iteration is deterministic and set
/// equality is memberwise comparison.
class ElementSet {
public:
    ElementSet(Group g, std::vector<GroupElement> elems);

    static ElementSet empty_set(Group g);
    static ElementSet single(Group g, GroupElement e);

    /// Members must already be sorted, unique, and canonical.
    static ElementSet from_sorted_unique(Group g, std::vector<GroupElement> elems);

    const Group& group() const { return ctx_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(const GroupElement& e) const;
    const std::vector<GroupElement>& members() const { return members_; }

    bool is_symmetric() const;
    bool contains_identity() const;

    bool operator==(const ElementSet& o) const {
        return ctx_ == o.ctx_ && members_ == o.members_;
    }

private:
    Group ctx_;
    std::vector<GroupElement> members_;
};

struct DoublingStats {
    std::uint64_t size = 0;
    Rational doubling;
    std::optional<Rational> tripling;
    bool symmetric = false;
    bool contains_identity = false;
};

/// Exact product set {ab : a in A, b in B}.
ElementSet product(const ElementSet& A, const ElementSet& B, std::size_t budget = kDefaultBudget);

ElementSet inverse_set(const ElementSet& A);

/// A ∪ A^{-1} ∪ {identity}.
ElementSet symmetrize(const ElementSet& A);

/// A^m by iterated multiplication (all intermediate powers exist along the way).
ElementSet power(const ElementSet& A, int m, std::size_t budget = kDefaultBudget);

/// mA - nA in an abelian context (m, n >= 0, m + n >= 1).
ElementSet combination(const ElementSet& A, int m, int n, std::size_t budget = kDefaultBudget);

DoublingStats doubling_stats(const ElementSet& A, bool with_tripling,
                             std::size_t budget = kDefaultBudget);

/// |S^1|, ..., |S^n| by frontier expansion. S must be symmetric and contain
/// the identity so the balls are nested.
std::vector<std::uint64_t> growth_ball(const ElementSet& S, int n,
                                       std::size_t budget = kDefaultBudget);

/// Set intersection (same context required).
ElementSet intersect(const ElementSet& A, const ElementSet& B);

/// Subgroup generated by A inside a finite-closure context: closure of
/// A ∪ A^{-1} ∪ {identity} under products.
ElementSet subgroup_closure(const ElementSet& A, std::size_t budget = kDefaultBudget);

} // namespace approxlab
