#include "approxlab/element_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace approxlab {

namespace {

struct SpanHash {
    using is_transparent = void;
    std::size_t operator()(std::span<const std::int64_t> s) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t v : s) {
            std::uint64_t x = static_cast<std::uint64_t>(v);
            x *= 0xff51afd7ed558ccdULL;
            x ^= x >> 33;
            h = (h ^ x) * 0xc4ceb9fe1a85ec53ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
    std::size_t operator()(const GroupElement& e) const {
        return (*this)(std::span<const std::int64_t>(e.data));
    }
};

struct SpanEq {
    using is_transparent = void;
    static std::span<const std::int64_t> view(const GroupElement& e) {
        return std::span<const std::int64_t>(e.data);
    }
    static std::span<const std::int64_t> view(std::span<const std::int64_t> s) { return s; }
    template <class A, class B>
    bool operator()(const A& a, const B& b) const {
        auto x = view(a), y = view(b);
        return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin());
    }
};

using ElementHashSet = std::unordered_set<GroupElement, SpanHash, SpanEq>;

void check_same_context(const ElementSet& A, const ElementSet& B) {
    if (!(A.group() == B.group()))
        throw ContextMismatch("operands belong to different groups (" + A.group().desc().name() +
                              " vs " + B.group().desc().name() + ")");
}

bool arity_one_modular(const Group& g) {
    return g.family() == Family::Cyclic ||
           (g.family() == Family::IntLattice && g.arity() == 1);
}

// Dense fast path for Z and Z/n: pairwise sums into a flat occupancy array.
ElementSet product_arity1(const ElementSet& A, const ElementSet& B, std::size_t budget) {
    const Group& g = A.group();
    std::vector<std::int64_t> as, bs;
    as.reserve(A.size());
    bs.reserve(B.size());
    for (const auto& e : A.members()) as.push_back(e.data[0]);
    for (const auto& e : B.members()) bs.push_back(e.data[0]);

    std::int64_t lo, span;
    const bool cyclic = g.family() == Family::Cyclic;
    if (cyclic) {
        lo = 0;
        span = g.desc().p0;
    } else {
        // members are sorted, so range ends are the vector ends
        lo = checked_add(as.front(), bs.front());
        std::int64_t hi = checked_add(as.back(), bs.back());
        span = hi - lo + 1;
    }
    constexpr std::int64_t kDenseCap = 1LL << 26;
    if (span > kDenseCap) {
        // fall back to sort/unique on raw values
        std::vector<std::int64_t> vals;
        vals.reserve(as.size() * bs.size());
        for (std::int64_t a : as)
            for (std::int64_t b : bs)
                vals.push_back(checked_add(a, b));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.size() > budget) throw BudgetExceeded("product set exceeds element budget");
        std::vector<GroupElement> out;
        out.reserve(vals.size());
        for (std::int64_t v : vals) out.push_back(GroupElement{{v}});
        return ElementSet::from_sorted_unique(g, std::move(out));
    }

    std::vector<std::uint8_t> mark(static_cast<std::size_t>(span), 0);
    if (cyclic) {
        const std::int64_t n = g.desc().p0;
        for (std::int64_t a : as)
            for (std::int64_t b : bs) {
                std::int64_t s = a + b;
                mark[static_cast<std::size_t>(s >= n ? s - n : s)] = 1;
            }
    } else {
        for (std::int64_t a : as)
            for (std::int64_t b : bs)
                mark[static_cast<std::size_t>(a + b - lo)] = 1;
    }
    std::vector<GroupElement> out;
    for (std::int64_t i = 0; i < span; ++i)
        if (mark[static_cast<std::size_t>(i)]) out.push_back(GroupElement{{lo + i}});
    if (out.size() > budget) throw BudgetExceeded("product set exceeds element budget");
    return ElementSet::from_sorted_unique(g, std::move(out));
}

} // namespace

ElementSet::ElementSet(Group g, std::vector<GroupElement> elems) : ctx_(std::move(g)) {
    members_.reserve(elems.size());
    for (auto& e : elems)
        members_.push_back(ctx_.canonicalize(std::move(e)));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ElementSet ElementSet::empty_set(Group g) {
    return from_sorted_unique(std::move(g), {});
}

ElementSet ElementSet::single(Group g, GroupElement e) {
    ElementSet s = empty_set(std::move(g));
    s.members_.push_back(s.ctx_.canonicalize(std::move(e)));
    return s;
}

ElementSet ElementSet::from_sorted_unique(Group g, std::vector<GroupElement> elems) {
    ElementSet s = ElementSet(std::move(g), {});
    s.members_ = std::move(elems);
    return s;
}

bool ElementSet::contains(const GroupElement& e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
}

bool ElementSet::is_symmetric() const {
    for (const auto& e : members_)
        if (!contains(ctx_.invert(e))) return false;
    return true;
}

bool ElementSet::contains_identity() const {
    return contains(ctx_.identity());
}

ElementSet product(const ElementSet& A, const ElementSet& B, std::size_t budget) {
    check_same_context(A, B);
    const Group& g = A.group();
    if (A.empty() || B.empty()) return ElementSet::empty_set(g);

    constexpr std::size_t kPairWorkCap = 400'000'000;
    if (A.size() > kPairWorkCap / B.size())
        throw BudgetExceeded("product pair count exceeds work cap");

    if (arity_one_modular(g)) return product_arity1(A, B, budget);

    ElementHashSet seen;
    seen.reserve(std::min(budget, A.size() * B.size()));
    GroupElement scratch;
    for (const auto& a : A.members()) {
        for (const auto& b : B.members()) {
            g.multiply_into(a, b, scratch);
            if (seen.find(std::span<const std::int64_t>(scratch.data)) == seen.end()) {
                seen.insert(scratch);
                if (seen.size() > budget)
                    throw BudgetExceeded("product set exceeds element budget");
            }
        }
    }
    std::vector<GroupElement> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return ElementSet::from_sorted_unique(g, std::move(out));
}

ElementSet inverse_set(const ElementSet& A) {
    std::vector<GroupElement> out;
    out.reserve(A.size());
    for (const auto& e : A.members()) out.push_back(A.group().invert(e));
    std::sort(out.begin(), out.end());
    return ElementSet::from_sorted_unique(A.group(), std::move(out));
}

ElementSet symmetrize(const ElementSet& A) {
    std::vector<GroupElement> out = A.members();
    for (const auto& e : A.members()) out.push_back(A.group().invert(e));
    out.push_back(A.group().identity());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return ElementSet::from_sorted_unique(A.group(), std::move(out));
}

ElementSet power(const ElementSet& A, int m, std::size_t budget) {
    if (m < 1) throw Error("power exponent must be >= 1");
    ElementSet r = A;
    for (int i = 1; i < m; ++i) r = product(r, A, budget);
    return r;
}

ElementSet combination(const ElementSet& A, int m, int n, std::size_t budget) {
    if (!A.group().is_abelian())
        throw Error("combination mA - nA requires an abelian context");
    if (m < 0 || n < 0 || m + n < 1)
        throw Error("combination needs m, n >= 0 with m + n >= 1");
    std::optional<ElementSet> r;
    if (m > 0) r = power(A, m, budget);
    if (n > 0) {
        ElementSet neg = power(inverse_set(A), n, budget);
        r = r ? product(*r, neg, budget) : neg;
    }
    return *r;
}

DoublingStats doubling_stats(const ElementSet& A, bool with_tripling, std::size_t budget) {
    if (A.empty()) throw Error("doubling_stats on empty set");
    DoublingStats st;
    st.size = A.size();
    st.symmetric = A.is_symmetric();
    st.contains_identity = A.contains_identity();
    ElementSet A2 = product(A, A, budget);
    st.doubling = make_ratio(A2.size(), A.size());
    if (with_tripling) {
        ElementSet A3 = product(A2, A, budget);
        st.tripling = make_ratio(A3.size(), A.size());
    }
    return st;
}

std::vector<std::uint64_t> growth_ball(const ElementSet& S, int n, std::size_t budget) {
    if (n < 1) throw Error("growth_ball needs n >= 1");
    if (!S.is_symmetric()) throw NotSymmetric("growth balls need a symmetric generating set");
    if (!S.contains_identity()) throw MissingIdentity("growth balls need the identity in S");
    const Group& g = S.group();

    ElementHashSet ball(S.members().begin(), S.members().end());
    std::vector<GroupElement> frontier = S.members();
    std::vector<std::uint64_t> sizes{ball.size()};
    GroupElement scratch;
    for (int k = 2; k <= n; ++k) {
        std::vector<GroupElement> next;
        for (const auto& f : frontier) {
            for (const auto& s : S.members()) {
                g.multiply_into(f, s, scratch);
                if (ball.find(std::span<const std::int64_t>(scratch.data)) == ball.end()) {
                    ball.insert(scratch);
                    next.push_back(scratch);
                    if (ball.size() > budget)
                        throw BudgetExceeded("growth ball exceeds element budget");
                }
            }
        }
        sizes.push_back(ball.size());
        frontier = std::move(next);
    }
    return sizes;
}

ElementSet intersect(const ElementSet& A, const ElementSet& B) {
    check_same_context(A, B);
    std::vector<GroupElement> out;
    std::set_intersection(A.members().begin(), A.members().end(), B.members().begin(),
                          B.members().end(), std::back_inserter(out));
    return ElementSet::from_sorted_unique(A.group(), std::move(out));
}

ElementSet subgroup_closure(const ElementSet& A, std::size_t budget) {
    const Group& g = A.group();
    ElementSet gens = symmetrize(A);
    ElementHashSet closure(gens.members().begin(), gens.members().end());
    std::vector<GroupElement> frontier = gens.members();
    GroupElement scratch;
    while (!frontier.empty()) {
        std::vector<GroupElement> next;
        for (const auto& f : frontier) {
            for (const auto& s : gens.members()) {
                g.multiply_into(f, s, scratch);
                if (closure.find(std::span<const std::int64_t>(scratch.data)) == closure.end()) {
                    closure.insert(scratch);
                    next.push_back(scratch);
                    if (closure.size() > budget)
                        throw BudgetExceeded("subgroup closure exceeds element budget");
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<GroupElement> out(closure.begin(), closure.end());
    std::sort(out.begin(), out.end());
    return ElementSet::from_sorted_unique(g, std::move(out));
}

} // namespace approxlab
