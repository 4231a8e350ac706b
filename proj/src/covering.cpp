#include "approxlab/covering.hpp"

#include <algorithm>
#include <unordered_set>

namespace approxlab {

namespace {

void require_symmetric_with_identity(const ElementSet& A) {
    if (!A.is_symmetric()) throw NotSymmetric("covering algorithms need a symmetric set");
    if (!A.contains_identity()) throw MissingIdentity("covering algorithms need the identity in A");
}

} // namespace

CoverCertificate ruzsa_cover(const ElementSet& A, std::size_t budget) {
    require_symmetric_with_identity(A);
    const Group& g = A.group();
    ElementSet A2 = product(A, A, budget);
    ElementSet A3 = product(A2, A, budget);
    ElementSet A4 = product(A3, A, budget);

    // Occupancy index over ∪ xA for admitted x; a candidate is admitted iff
    // its translate misses the whole index.
    std::vector<GroupElement> occupied_sorted;
    auto occupied = [&](const GroupElement& e) {
        return std::binary_search(occupied_sorted.begin(), occupied_sorted.end(), e);
    };

    std::vector<GroupElement> X;
    GroupElement scratch;
    for (const auto& x : A3.members()) {
        bool disjoint = true;
        for (const auto& a : A.members()) {
            g.multiply_into(x, a, scratch);
            if (occupied(scratch)) {
                disjoint = false;
                break;
            }
        }
        if (!disjoint) continue;
        X.push_back(x);
        for (const auto& a : A.members()) {
            g.multiply_into(x, a, scratch);
            occupied_sorted.push_back(scratch);
        }
        std::sort(occupied_sorted.begin(), occupied_sorted.end());
    }
    return {ElementSet(g, std::move(X)), CoverKind::RuzsaCover, make_ratio(A4.size(), A.size())};
}

CoverCertificate certify_approx_group(const ElementSet& A, std::size_t budget) {
    require_symmetric_with_identity(A);
    const Group& g = A.group();
    ElementSet A2 = product(A, A, budget);

    std::vector<bool> covered(A2.size(), false);
    std::size_t n_covered = 0;
    auto index_of = [&](const GroupElement& e) -> std::ptrdiff_t {
        auto it = std::lower_bound(A2.members().begin(), A2.members().end(), e);
        if (it == A2.members().end() || !(*it == e)) return -1;
        return it - A2.members().begin();
    };

    // Standard greedy set cover: each round admits the translate covering the
    // most uncovered elements, ties broken by canonical order.
    std::vector<GroupElement> X;
    GroupElement scratch;
    while (n_covered < A2.size()) {
        std::size_t best_gain = 0;
        const GroupElement* best_x = nullptr;
        for (const auto& x : A2.members()) {
            std::size_t gain = 0;
            for (const auto& a : A.members()) {
                g.multiply_into(x, a, scratch);
                std::ptrdiff_t i = index_of(scratch);
                if (i >= 0 && !covered[static_cast<std::size_t>(i)]) ++gain;
            }
            if (gain > best_gain) {
                best_gain = gain;
                best_x = &x;
            }
        }
        if (!best_x) throw Error("greedy cover stalled"); // unreachable: id in A
        X.push_back(*best_x);
        for (const auto& a : A.members()) {
            g.multiply_into(*best_x, a, scratch);
            std::ptrdiff_t i = index_of(scratch);
            if (i >= 0 && !covered[static_cast<std::size_t>(i)]) {
                covered[static_cast<std::size_t>(i)] = true;
                ++n_covered;
            }
        }
    }
    Rational k(static_cast<unsigned long>(X.size()));
    return {ElementSet(g, std::move(X)), CoverKind::ApproxGroup, k};
}

VerifyResult verify_certificate(const ElementSet& A, const CoverCertificate& cert, int power_m,
                                std::size_t budget) {
    ElementSet lhs = ElementSet::empty_set(A.group());
    ElementSet rhs = ElementSet::empty_set(A.group());
    switch (cert.kind) {
    case CoverKind::RuzsaCover:
        lhs = power(A, 3, budget);
        rhs = product(cert.X, power(A, 2, budget), budget);
        break;
    case CoverKind::ApproxGroup:
        lhs = product(A, A, budget);
        rhs = product(cert.X, A, budget);
        break;
    case CoverKind::PowerCover: {
        if (power_m < 1) throw Error("PowerCover verification needs m >= 1");
        lhs = power(A, power_m, budget);
        rhs = power_m == 1 ? A : product(power(cert.X, power_m - 1, budget), A, budget);
        break;
    }
    }
    for (const auto& e : lhs.members())
        if (!rhs.contains(e)) return {false, e};
    return {true, std::nullopt};
}

} // namespace approxlab
