#include "approxlab/structures.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace approxlab {

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t x : v) {
            std::uint64_t u = static_cast<std::uint64_t>(x);
            u *= 0xff51afd7ed558ccdULL;
            u ^= u >> 33;
            h = (h ^ u) * 0xc4ceb9fe1a85ec53ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

std::uint64_t grid_size(const std::vector<std::int64_t>& L, std::size_t budget) {
    std::uint64_t total = 1;
    for (std::int64_t b : L) {
        if (b < 0) throw Error("structured-set bounds must be >= 0");
        total *= static_cast<std::uint64_t>(2 * b + 1);
        if (total > budget) throw BudgetExceeded("expansion grid exceeds element budget");
    }
    return total;
}

ElementSet expand_box(const StructuredSpec& spec, std::size_t budget) {
    const auto& L = spec.bounds;
    grid_size(L, budget);
    std::vector<GroupElement> out;
    std::vector<std::int64_t> coords;
    for (auto b : L) coords.push_back(-b);
    while (true) {
        out.push_back(GroupElement{coords});
        int i = static_cast<int>(coords.size()) - 1;
        while (i >= 0 && coords[static_cast<std::size_t>(i)] == L[static_cast<std::size_t>(i)]) {
            coords[static_cast<std::size_t>(i)] = -L[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) break;
        ++coords[static_cast<std::size_t>(i)];
    }
    return ElementSet::from_sorted_unique(spec.ctx, std::move(out));
}

ElementSet expand_progression(const StructuredSpec& spec, std::size_t budget) {
    const Group& g = spec.ctx;
    const auto& L = spec.bounds;
    grid_size(L, budget);

    // powers x_i^l for l in [-L_i, L_i]
    std::vector<std::vector<GroupElement>> pows(spec.generators.size());
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const auto& x = spec.generators[i];
        const GroupElement xinv = g.invert(x);
        std::int64_t b = L[i];
        std::vector<GroupElement> row(static_cast<std::size_t>(2 * b + 1));
        row[static_cast<std::size_t>(b)] = g.identity();
        for (std::int64_t l = 1; l <= b; ++l) {
            row[static_cast<std::size_t>(b + l)] = g.multiply(row[static_cast<std::size_t>(b + l - 1)], x);
            row[static_cast<std::size_t>(b - l)] = g.multiply(row[static_cast<std::size_t>(b - l + 1)], xinv);
        }
        pows[i] = std::move(row);
    }

    std::vector<GroupElement> out;
    std::vector<std::int64_t> exps;
    for (auto b : L) exps.push_back(-b);
    while (true) {
        GroupElement e = g.identity();
        for (std::size_t i = 0; i < exps.size(); ++i)
            e = g.multiply(e, pows[i][static_cast<std::size_t>(exps[i] + L[i])]);
        out.push_back(std::move(e));
        int i = static_cast<int>(exps.size()) - 1;
        while (i >= 0 && exps[static_cast<std::size_t>(i)] == L[static_cast<std::size_t>(i)]) {
            exps[static_cast<std::size_t>(i)] = -L[static_cast<std::size_t>(i)];
            --i;
        }
        if (i < 0) break;
        ++exps[static_cast<std::size_t>(i)];
    }
    return ElementSet(g, std::move(out));
}

ElementSet expand_nilprogression(const StructuredSpec& spec, std::size_t budget) {
    const Group& g = spec.ctx;
    const auto& L = spec.bounds;
    const auto& gens = spec.generators;

    // State = (element, per-generator usage counts). Two paths to the same
    // element merge only when the usage vectors agree: the budget is a
    // property of the word, not of the element.
    std::unordered_set<std::vector<std::int64_t>, KeyHash> seen_states;
    std::unordered_set<std::vector<std::int64_t>, KeyHash> elems;
    std::deque<std::pair<GroupElement, std::vector<std::int64_t>>> queue;

    std::vector<std::pair<GroupElement, GroupElement>> steps; // (x_i, x_i^-1)
    for (const auto& x : gens) steps.emplace_back(x, g.invert(x));

    auto state_key = [](const GroupElement& e, const std::vector<std::int64_t>& usage) {
        std::vector<std::int64_t> key;
        key.reserve(1 + e.data.size() + usage.size());
        key.push_back(static_cast<std::int64_t>(e.data.size()));
        key.insert(key.end(), e.data.begin(), e.data.end());
        key.insert(key.end(), usage.begin(), usage.end());
        return key;
    };

    GroupElement id = g.identity();
    std::vector<std::int64_t> zero(gens.size(), 0);
    seen_states.insert(state_key(id, zero));
    elems.insert(id.data);
    queue.emplace_back(id, zero);

    GroupElement scratch;
    while (!queue.empty()) {
        auto [e, usage] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (usage[i] >= L[i]) continue;
            for (int sgn = 0; sgn < 2; ++sgn) {
                g.multiply_into(e, sgn == 0 ? steps[i].first : steps[i].second, scratch);
                auto usage2 = usage;
                ++usage2[i];
                auto key = state_key(scratch, usage2);
                if (seen_states.insert(std::move(key)).second) {
                    if (seen_states.size() > budget)
                        throw BudgetExceeded("nilprogression state space exceeds budget");
                    elems.insert(scratch.data);
                    queue.emplace_back(scratch, std::move(usage2));
                }
            }
        }
    }

    std::vector<GroupElement> out;
    out.reserve(elems.size());
    for (auto& d : elems) out.push_back(GroupElement{d});
    std::sort(out.begin(), out.end());
    return ElementSet::from_sorted_unique(g, std::move(out));
}

ElementSet expand_heisenberg_q(const StructuredSpec& spec, std::size_t budget) {
    const std::int64_t l1 = spec.q_l1;
    const std::int64_t l2 = spec.q_l2;
    const std::int64_t b12 = l1;
    const std::int64_t b23 = spec.q_l2_mode == QL2Mode::AsPrinted ? l1 : l2;
    const std::int64_t b13 = checked_mul(l1, l2);
    grid_size({b12, b23, b13}, budget);
    std::vector<GroupElement> out;
    for (std::int64_t x = -b12; x <= b12; ++x)
        for (std::int64_t y = -b23; y <= b23; ++y)
            for (std::int64_t z = -b13; z <= b13; ++z)
                out.push_back(GroupElement{{x, y, z}});
    return ElementSet(spec.ctx, std::move(out));
}

} // namespace

StructuredSpec StructuredSpec::box(std::vector<std::int64_t> L) {
    if (L.empty()) throw Error("box needs at least one side bound");
    StructuredSpec s{Kind::Box, Group(GroupDescriptor::int_lattice(static_cast<int>(L.size()))),
                     std::move(L), {}, {}};
    return s;
}

StructuredSpec StructuredSpec::progression(Group ctx, std::vector<GroupElement> x,
                                           std::vector<std::int64_t> L) {
    if (!ctx.is_abelian()) throw Error("progressions live in abelian groups");
    if (x.size() != L.size()) throw Error("generator count must equal bound count");
    return {Kind::Progression, std::move(ctx), std::move(L), std::move(x), {}};
}

StructuredSpec StructuredSpec::coset_progression(Group ctx, std::vector<GroupElement> subgroup_gens,
                                                 std::vector<GroupElement> x,
                                                 std::vector<std::int64_t> L) {
    if (!ctx.is_abelian()) throw Error("coset progressions live in abelian groups");
    if (x.size() != L.size()) throw Error("generator count must equal bound count");
    return {Kind::CosetProgression, std::move(ctx), std::move(L), std::move(x),
            std::move(subgroup_gens)};
}

StructuredSpec StructuredSpec::nilprogression(Group ctx, std::vector<GroupElement> x,
                                              std::vector<std::int64_t> L) {
    if (x.size() != L.size()) throw Error("generator count must equal bound count");
    return {Kind::Nilprogression, std::move(ctx), std::move(L), std::move(x), {}};
}

StructuredSpec StructuredSpec::heisenberg_q(Group ctx, std::int64_t l1, std::int64_t l2,
                                            QL2Mode mode) {
    if (ctx.family() != Family::HeisenbergZ && ctx.family() != Family::HeisenbergMod)
        throw Error("Q-sets live in Heisenberg groups");
    if (l1 < 0 || l2 < 0) throw Error("Q bounds must be >= 0");
    StructuredSpec s{Kind::HeisenbergQ, std::move(ctx), {}, {}, {}};
    s.q_l1 = l1;
    s.q_l2 = l2;
    s.q_l2_mode = mode;
    return s;
}

ElementSet expand(const StructuredSpec& spec, std::size_t budget) {
    switch (spec.kind) {
    case StructuredSpec::Kind::Box:
        return expand_box(spec, budget);
    case StructuredSpec::Kind::Progression:
        return expand_progression(spec, budget);
    case StructuredSpec::Kind::CosetProgression: {
        ElementSet H = subgroup_closure(ElementSet(spec.ctx, spec.subgroup_gens), budget);
        StructuredSpec p = StructuredSpec::progression(spec.ctx, spec.generators, spec.bounds);
        return product(H, expand(p, budget), budget);
    }
    case StructuredSpec::Kind::Nilprogression:
        return expand_nilprogression(spec, budget);
    case StructuredSpec::Kind::HeisenbergQ:
        return expand_heisenberg_q(spec, budget);
    }
    throw Error("unknown structured spec kind");
}

ElementSet box_corner_cover(const std::vector<std::int64_t>& L) {
    Group g(GroupDescriptor::int_lattice(static_cast<int>(L.size())));
    std::vector<GroupElement> corners;
    const std::size_t d = L.size();
    for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
        std::vector<std::int64_t> c(d);
        for (std::size_t i = 0; i < d; ++i)
            c[i] = (mask >> i & 1) ? L[i] : -L[i];
        corners.push_back(GroupElement{std::move(c)});
    }
    return ElementSet(g, std::move(corners));
}

CosetCheckResult freiman_coset_check(const ElementSet& A, std::size_t budget) {
    if (A.empty()) throw Error("freiman_coset_check on empty set");
    const Group& g = A.group();
    ElementSet A2 = product(A, A, budget);
    GroupElement a0 = A2.members().front();
    ElementSet H = product(ElementSet::single(g, g.invert(a0)), A2, budget);

    // A^2 = a0 H holds by construction; a coset iff H is a subgroup.
    for (const auto& h : H.members())
        if (!H.contains(g.invert(h))) return {false, std::nullopt, std::nullopt};
    GroupElement scratch;
    for (const auto& h1 : H.members())
        for (const auto& h2 : H.members()) {
            g.multiply_into(h1, h2, scratch);
            if (!H.contains(scratch)) return {false, std::nullopt, std::nullopt};
        }
    return {true, H, a0};
}

SandwichResult nilprog_sandwich_check(std::int64_t l1, std::int64_t l2, std::size_t budget) {
    Group g(GroupDescriptor::heisenberg_z());
    GroupElement gen12{{1, 0, 0}};
    GroupElement gen23{{0, 1, 0}};
    std::vector<GroupElement> gens{gen12, gen23};

    ElementSet P = expand(StructuredSpec::nilprogression(g, gens, {l1, l2}), budget);
    ElementSet Q = expand(StructuredSpec::heisenberg_q(g, l1, l2, QL2Mode::Symmetric), budget);
    ElementSet P5 = expand(StructuredSpec::nilprogression(g, gens, {5 * l1, 5 * l2}), budget);

    SandwichResult r;
    r.p_size = P.size();
    r.q_size = Q.size();
    r.p5_size = P5.size();
    for (const auto& e : P.members())
        if (!Q.contains(e)) {
            r.witness = e;
            return r;
        }
    for (const auto& e : Q.members())
        if (!P5.contains(e)) {
            r.witness = e;
            return r;
        }
    r.ok = true;
    return r;
}

std::vector<ElementSet> lower_central_series(const Group& ctx, const ElementSet& S, int depth,
                                             std::size_t budget) {
    if (!ctx.is_finite())
        throw Error("lower_central_series needs a finite context (use H(p) for H(Z))");
    if (depth < 1) throw Error("lower_central_series needs depth >= 1");

    ElementSet g1 = subgroup_closure(S, budget);
    std::vector<ElementSet> series{g1};
    ElementSet cur = g1;
    GroupElement scratch;
    ElementSet trivial = ElementSet::single(ctx, ctx.identity());

    for (int n = 1; n < depth; ++n) {
        // commutators [g, h], g in G1, h in G_n; their set is closed under
        // inversion ([g,h]^-1 = [h,g] is picked up by the double loop)
        std::vector<GroupElement> comms;
        for (const auto& g : g1.members())
            for (const auto& h : cur.members()) {
                GroupElement c = ctx.multiply(ctx.multiply(ctx.invert(g), ctx.invert(h)),
                                              ctx.multiply(g, h));
                comms.push_back(std::move(c));
            }
        ElementSet comm_set(ctx, std::move(comms));

        // conjugation-invariant generating set, so the closure is normal
        std::vector<GroupElement> conj;
        for (const auto& k : g1.members()) {
            GroupElement kinv = ctx.invert(k);
            for (const auto& c : comm_set.members())
                conj.push_back(ctx.multiply(ctx.multiply(k, c), kinv));
        }
        ElementSet next = subgroup_closure(ElementSet(ctx, std::move(conj)), budget);
        if (next == cur) break; // stabilized above {1}
        series.push_back(next);
        if (next == trivial) break;
        cur = next;
    }
    return series;
}

} // namespace approxlab
