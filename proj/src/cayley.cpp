#include "approxlab/cayley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "approxlab/laws.hpp"

namespace approxlab {

std::uint32_t CayleyGraph::index_of(const GroupElement& e) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
    if (it == vertices.end() || !(*it == e)) throw InvalidElement("element is not a vertex");
    return static_cast<std::uint32_t>(it - vertices.begin());
}

CayleyGraph build_cayley(const Group& ctx, const ElementSet& S) {
    if (!ctx.is_finite()) throw TooLargeForExact("Cayley graphs need a finite context");
    if (S.group().desc() != ctx.desc()) throw ContextMismatch("generating set context mismatch");
    if (!S.is_symmetric()) throw NotSymmetric("Cayley graphs need a symmetric generating set");

    CayleyGraph g{ctx, ctx.elements(), {}, S};
    std::vector<GroupElement> edge_gens;
    const GroupElement id = ctx.identity();
    for (const auto& s : S.members())
        if (!(s == id)) edge_gens.push_back(s);

    g.adjacency.resize(g.vertices.size());
    GroupElement scratch;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        auto& nbrs = g.adjacency[i];
        nbrs.reserve(edge_gens.size());
        for (const auto& s : edge_gens) {
            ctx.multiply_into(g.vertices[i], s, scratch);
            nbrs.push_back(g.index_of(scratch));
        }
        std::sort(nbrs.begin(), nbrs.end());
    }

    // connectivity = S generates
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<std::uint32_t> stack{g.index_of(id)};
    seen[stack.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : g.adjacency[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != g.vertices.size())
        throw NotGenerating("generating set reaches " + std::to_string(reached) + " of " +
                            std::to_string(g.vertices.size()) + " vertices");
    return g;
}

std::vector<std::uint32_t> vertex_boundary(const CayleyGraph& g,
                                           const std::vector<std::uint32_t>& A) {
    std::vector<char> in(g.size(), 0), out(g.size(), 0);
    for (std::uint32_t v : A) {
        if (v >= g.size()) throw InvalidElement("vertex index out of range");
        in[v] = 1;
    }
    for (std::uint32_t v : A)
        for (std::uint32_t w : g.adjacency[v])
            if (!in[w]) out[w] = 1;
    std::vector<std::uint32_t> b;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (out[v]) b.push_back(v);
    return b;
}

namespace {

struct MaskBest {
    bool set = false;
    Rational value;
    std::uint32_t mask = 0;

    void offer(const Rational& v, std::uint32_t m) {
        if (!set || v < value || (v == value && m < mask)) {
            set = true;
            value = v;
            mask = m;
        }
    }
};

CheegerResult cheeger_exact(const CayleyGraph& g, int jobs) {
    const std::size_t n = g.size();
    if (n > 24) throw TooLargeForExact("exact Cheeger scan is limited to 24 vertices");
    if (n < 2) throw Error("Cheeger constant needs at least two vertices");

    std::vector<std::uint32_t> nbr(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::uint32_t w : g.adjacency[i]) nbr[i] |= (1u << w);

    const std::uint32_t end = 1u << n;
    auto scan = [&](std::uint32_t lo, std::uint32_t hi) {
        MaskBest best;
        for (std::uint32_t mask = lo; mask < hi; ++mask) {
            unsigned sz = static_cast<unsigned>(std::popcount(mask));
            if (sz == 0 || 2 * sz > n) continue;
            std::uint32_t reach = 0;
            for (std::uint32_t m = mask; m;) {
                unsigned i = static_cast<unsigned>(std::countr_zero(m));
                m &= m - 1;
                reach |= nbr[i];
            }
            unsigned bd = static_cast<unsigned>(std::popcount(reach & ~mask));
            best.offer(make_ratio(bd, sz), mask);
        }
        return best;
    };

    MaskBest best;
    if (jobs <= 1) {
        best = scan(1, end);
    } else {
        std::vector<MaskBest> parts(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        std::uint32_t chunk = (end + static_cast<std::uint32_t>(jobs) - 1) /
                              static_cast<std::uint32_t>(jobs);
        for (int j = 0; j < jobs; ++j) {
            std::uint32_t lo = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(j) * chunk);
            std::uint32_t hi = std::min<std::uint64_t>(end, static_cast<std::uint64_t>(j + 1) * chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, j, lo, hi] { parts[static_cast<std::size_t>(j)] = scan(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : parts)
            if (p.set) best.offer(p.value, p.mask);
    }

    CheegerResult r{best.value, {}, CheegerMode::Exact};
    for (std::uint32_t v = 0; v < n; ++v)
        if (best.mask & (1u << v)) r.witness.push_back(v);
    return r;
}

Rational subset_ratio(const CayleyGraph& g, const std::vector<char>& in, std::size_t sz) {
    std::vector<char> out(g.size(), 0);
    std::size_t bd = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (!in[v]) continue;
        for (std::uint32_t w : g.adjacency[v])
            if (!in[w] && !out[w]) {
                out[w] = 1;
                ++bd;
            }
    }
    return make_ratio(bd, sz);
}

CheegerResult cheeger_heuristic(const CayleyGraph& g, std::uint64_t seed, int iters) {
    const std::size_t n = g.size();
    if (n < 2) throw Error("Cheeger constant needs at least two vertices");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> vd(0, static_cast<std::uint32_t>(n - 1));

    bool have = false;
    Rational best;
    std::vector<char> best_in;
    auto offer = [&](const std::vector<char>& in, std::size_t sz) {
        if (sz == 0 || 2 * sz > n) return;
        Rational v = subset_ratio(g, in, sz);
        if (!have || v < best) {
            have = true;
            best = v;
            best_in = in;
        }
    };

    // greedy ball growth from random starts, plus random perturbations
    int restarts = std::max(1, iters / 50);
    for (int r = 0; r < restarts; ++r) {
        std::vector<char> in(n, 0);
        std::size_t sz = 1;
        in[vd(rng)] = 1;
        offer(in, sz);
        while (2 * (sz + 1) <= n) {
            bool picked = false;
            std::uint32_t pick = 0;
            Rational pick_ratio;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (in[v]) continue;
                in[v] = 1;
                Rational ratio = subset_ratio(g, in, sz + 1);
                in[v] = 0;
                if (!picked || ratio < pick_ratio) {
                    picked = true;
                    pick = v;
                    pick_ratio = ratio;
                }
            }
            in[pick] = 1;
            ++sz;
            offer(in, sz);
        }
        for (int it = 0; it < 50; ++it) {
            std::uint32_t v = vd(rng);
            std::vector<char> trial = best_in;
            std::size_t tsz = static_cast<std::size_t>(
                std::count(trial.begin(), trial.end(), static_cast<char>(1)));
            if (trial[v] && tsz > 1) {
                trial[v] = 0;
                offer(trial, tsz - 1);
            } else if (!trial[v] && 2 * (tsz + 1) <= n) {
                trial[v] = 1;
                offer(trial, tsz + 1);
            }
        }
    }

    CheegerResult res{best, {}, CheegerMode::Heuristic};
    for (std::uint32_t v = 0; v < n; ++v)
        if (best_in[v]) res.witness.push_back(v);
    return res;
}

} // namespace

CheegerResult cheeger(const CayleyGraph& g, CheegerMode mode, int jobs, std::uint64_t seed,
                      int iters) {
    if (mode == CheegerMode::Exact) return cheeger_exact(g, std::max(1, jobs));
    return cheeger_heuristic(g, seed, iters);
}

std::vector<Sl2ProbeRow> sl2_growth_probe(std::int64_t p, int trials, std::uint64_t seed,
                                          double epsilon) {
    if (p != 3 && p != 5 && p != 7)
        throw InvalidDescriptor("growth probe supports p in {3, 5, 7}");
    if (epsilon <= 0) throw Error("epsilon must be positive");
    Group g(GroupDescriptor::sl2(p));
    const std::uint64_t order = g.order();

    std::vector<Sl2ProbeRow> rows;
    rows.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        std::uint64_t ts = seed ^ static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(ts);
        std::uniform_int_distribution<int> kd(1, 4);
        ElementSet A = ElementSet::empty_set(g);
        for (std::uint64_t attempt = 0;; ++attempt) {
            A = random_symmetric_set(ts + attempt * 0x9e3779b97f4a7c15ULL, g, kd(rng), 0);
            if (subgroup_closure(A).size() == order) break;
        }
        ElementSet A3 = power(A, 3);
        Sl2ProbeRow row;
        row.trial = static_cast<std::uint64_t>(t);
        row.seed = ts;
        row.p = p;
        row.set_size = A.size();
        row.cube_size = A3.size();
        row.exponent = std::log(static_cast<double>(A3.size())) /
                       std::log(static_cast<double>(A.size()));
        row.density = make_ratio(A.size(), order);
        row.branch = row.exponent >= 1.0 + epsilon ? "growth" : "large";
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string probe_csv_header() {
    return "trial,seed,p,set_size,cube_size,exponent,density,branch";
}

std::string probe_csv_row(const Sl2ProbeRow& r) {
    std::ostringstream os;
    os << r.trial << ',' << r.seed << ',' << r.p << ',' << r.set_size << ',' << r.cube_size << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.exponent);
    os << buf << ',' << to_frac_string(r.density) << ',' << r.branch;
    return os.str();
}

} // namespace approxlab
