#include "approxlab/laws.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

namespace approxlab {

std::string to_string(LawStatus s) {
    switch (s) {
    case LawStatus::Satisfied: return "satisfied";
    case LawStatus::Violated: return "violated";
    case LawStatus::HypothesisFailed: return "hypothesis_failed";
    case LawStatus::BudgetExceededStatus: return "budget_exceeded";
    }
    return "?";
}

namespace {

LawStatus verdict(bool ok) { return ok ? LawStatus::Satisfied : LawStatus::Violated; }

std::string describe(const ElementSet& A) {
    return A.group().desc().name() + " |A|=" + std::to_string(A.size());
}

int ceil_sqrt(int n) {
    int m = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (m * m < n) ++m;
    while (m > 1 && (m - 1) * (m - 1) >= n) --m;
    return m;
}

} // namespace

LawReport law_pluennecke(const ElementSet& A, int m, int n, std::size_t budget) {
    if (!A.group().is_abelian()) throw Error("Pluennecke's inequality is stated for abelian groups");
    if (A.empty()) throw Error("empty set");
    LawReport r;
    r.law_id = "pluennecke";
    r.instance = describe(A) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
    ElementSet A2 = product(A, A, budget);
    Rational k = make_ratio(A2.size(), A.size());
    ElementSet comb = combination(A, m, n, budget);
    r.constants = {{"K", k}, {"m", Rational(m)}, {"n", Rational(n)}};
    r.measured = {{"|mA-nA|", Rational(static_cast<unsigned long>(comb.size()))}};
    r.bound = rational_pow(k, static_cast<unsigned long>(m + n)) * Rational(static_cast<unsigned long>(A.size()));
    r.status = verdict(Rational(static_cast<unsigned long>(comb.size())) <= r.bound);
    return r;
}

LawReport law_tripling_powers(const ElementSet& A, int m, std::size_t budget) {
    if (!A.is_symmetric()) throw NotSymmetric("small tripling control needs a symmetric set");
    if (m < 3) throw Error("tripling-power law needs m >= 3");
    LawReport r;
    r.law_id = "tripling";
    r.instance = describe(A) + " m=" + std::to_string(m);
    ElementSet A3 = power(A, 3, budget);
    Rational k = make_ratio(A3.size(), A.size());
    ElementSet Am = power(A, m, budget);
    r.constants = {{"K", k}, {"m", Rational(m)}};
    r.measured = {{"|A^m|", Rational(static_cast<unsigned long>(Am.size()))}};
    r.bound = rational_pow(k, static_cast<unsigned long>(m - 2)) * Rational(static_cast<unsigned long>(A.size()));
    r.status = verdict(Rational(static_cast<unsigned long>(Am.size())) <= r.bound);
    return r;
}

LawReport law_helfgott_projection(const ElementSet& A, const Homomorphism& h, int m,
                                  std::size_t budget) {
    if (!A.is_symmetric()) throw NotSymmetric("projection law needs a symmetric set");
    if (m < 1) throw Error("projection law needs m >= 1");
    LawReport r;
    r.law_id = "helfgott";
    r.instance = describe(A) + " -> " + h.target().desc().name() + " m=" + std::to_string(m);
    std::vector<GroupElement> imgs;
    imgs.reserve(A.size());
    for (const auto& a : A.members()) imgs.push_back(h.apply(a));
    ElementSet piA(h.target(), std::move(imgs));
    ElementSet piAm = power(piA, m, budget);
    ElementSet Am2 = power(A, m + 2, budget);
    Rational lhs = make_ratio(piAm.size(), piA.size());
    Rational rhs = make_ratio(Am2.size(), A.size());
    r.constants = {{"m", Rational(m)}};
    r.measured = {{"|pi(A)^m|/|pi(A)|", lhs}};
    r.bound = rhs;
    r.status = verdict(lhs <= rhs);
    return r;
}

LawReport law_intersection(const ElementSet& A, const ElementSet& B, int m, int n,
                           std::size_t budget) {
    if (m < 2 || n < 2) throw Error("intersection law needs m, n >= 2");
    if (!A.is_symmetric() || !B.is_symmetric())
        throw NotSymmetric("intersection law needs symmetric sets");
    LawReport r;
    r.law_id = "intersection";
    r.instance = describe(A) + " |B|=" + std::to_string(B.size()) + " m=" + std::to_string(m) +
                 " n=" + std::to_string(n);

    ElementSet A2 = power(A, 2, budget), B2 = power(B, 2, budget);
    ElementSet I2 = intersect(A2, B2);
    if (I2.empty()) throw EmptyIntersection("A^2 and B^2 do not meet");
    ElementSet Im = intersect(power(A, m, budget), power(B, n, budget));
    Rational lhs = make_ratio(Im.size(), I2.size());
    Rational bound = make_ratio(power(A, m + 1, budget).size(), A.size()) *
                     make_ratio(power(B, n + 1, budget).size(), B.size());

    Rational k = make_ratio(power(A, 3, budget).size(), A.size());
    Rational l = make_ratio(power(B, 3, budget).size(), B.size());
    Rational kl5 = rational_pow(k * l, 5);
    ElementSet I23 = power(I2, 3, budget);
    Rational trip = make_ratio(I23.size(), I2.size());

    r.constants = {{"K", k}, {"L", l}, {"m", Rational(m)}, {"n", Rational(n)}, {"(KL)^5", kl5}};
    r.measured = {{"ratio", lhs}, {"intersection_tripling", trip}};
    r.bound = bound;
    r.status = verdict(lhs <= bound && trip <= kl5);
    return r;
}

LawReport law_bounded_torsion(const ElementSet& A, std::size_t budget) {
    Family f = A.group().family();
    if (f != Family::ModLattice && f != Family::Cyclic)
        throw Error("bounded-torsion law needs a (Z/m)^d or Z/n context");
    if (!A.is_symmetric()) throw NotSymmetric("bounded-torsion law is stated for symmetric sets");
    const std::int64_t mod = A.group().desc().p0;
    LawReport r;
    r.law_id = "torsion";
    r.instance = describe(A);
    ElementSet A2 = product(A, A, budget);
    Rational k = make_ratio(A2.size(), A.size());
    ElementSet gen = subgroup_closure(A, budget);
    mpz_class exp = rational_ceil(rational_pow(k, 4));
    mpz_class powz;
    mpz_pow_ui(powz.get_mpz_t(), mpz_class(mod).get_mpz_t(), exp.get_ui());
    Rational bound = Rational(powz) * k * Rational(static_cast<unsigned long>(A.size()));
    r.constants = {{"K", k}, {"m", Rational(static_cast<long>(mod))}};
    r.measured = {{"|<A>|", Rational(static_cast<unsigned long>(gen.size()))}};
    r.bound = bound;
    r.status = verdict(Rational(static_cast<unsigned long>(gen.size())) <= bound);
    return r;
}

LawReport law_random_doubling(int k, std::int64_t n, int trials, std::uint64_t seed) {
    if (k < 1 || trials < 1) throw Error("random-doubling law needs k, trials >= 1");
    if (n < 100LL * k * k) throw Error("random-doubling law needs n >= 100 k^2");
    LawReport r;
    r.law_id = "random_doubling";
    r.seed = seed;
    r.instance = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                 " trials=" + std::to_string(trials);
    std::uint64_t total = 0;
    for (int t = 0; t < trials; ++t) {
        ElementSet A = random_subset_of_interval(seed ^ static_cast<std::uint64_t>(t), k, n);
        total += product(A, A).size();
    }
    Rational mean = make_ratio(total, static_cast<std::uint64_t>(trials) *
                                          static_cast<std::uint64_t>(k) *
                                          static_cast<std::uint64_t>(k));
    r.constants = {{"k", Rational(k)}, {"trials", Rational(trials)}};
    r.measured = {{"mean|A+A|/k^2", mean}};
    r.bound = make_ratio(2, 5); // direction: mean must be at least this
    r.status = verdict(mean >= r.bound);
    return r;
}

LawReport law_growth_scale(const ElementSet& S, int n, int d, std::size_t budget) {
    if (n < 1 || d < 0) throw Error("growth-scale law needs n >= 1, d >= 0");
    LawReport r;
    r.law_id = "growth";
    r.instance = describe(S) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
    auto balls = growth_ball(S, 2 * n, budget);
    mpz_class ndz;
    mpz_pow_ui(ndz.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(d));
    Rational hyp_bound = Rational(ndz) * Rational(static_cast<unsigned long>(S.size()));
    r.constants = {{"n", Rational(n)}, {"d", Rational(d)}, {"n^d|S|", hyp_bound}};
    Rational sn(static_cast<unsigned long>(balls[static_cast<std::size_t>(n - 1)]));
    if (sn > hyp_bound) {
        r.measured = {{"|S^n|", sn}};
        r.bound = hyp_bound;
        r.status = LawStatus::HypothesisFailed;
        return r;
    }
    int best_m = 0;
    Rational best;
    for (int m = ceil_sqrt(n); m <= n; ++m) {
        Rational ratio = make_ratio(balls[static_cast<std::size_t>(2 * m - 1)],
                                    balls[static_cast<std::size_t>(m - 1)]);
        if (best_m == 0 || ratio < best) {
            best = ratio;
            best_m = m;
        }
    }
    r.measured = {{"min|S^2m|/|S^m|", best}, {"m", Rational(best_m)}, {"|S^n|", sn}};
    r.bound = best; // no explicit K(d) to assert; we record the measurement
    r.status = LawStatus::Satisfied;
    return r;
}

LawReport law_q3_bound(std::int64_t l1, std::int64_t l2, std::size_t budget) {
    LawReport r;
    r.law_id = "q3";
    r.instance = "L1=" + std::to_string(l1) + " L2=" + std::to_string(l2);
    Group g(GroupDescriptor::heisenberg_z());
    ElementSet Q = expand(StructuredSpec::heisenberg_q(g, l1, l2, QL2Mode::Symmetric), budget);
    ElementSet Q3 = power(Q, 3, budget);
    bool contained = true;
    for (const auto& e : Q3.members()) {
        if (std::llabs(e.data[0]) > 3 * l1 || std::llabs(e.data[1]) > 3 * l2 ||
            std::llabs(e.data[2]) > 8 * l1 * l2) {
            contained = false;
            break;
        }
    }
    Rational ratio = make_ratio(Q3.size(), Q.size());
    r.constants = {{"L1", Rational(static_cast<long>(l1))}, {"L2", Rational(static_cast<long>(l2))}};
    r.measured = {{"|Q^3|/|Q|", ratio}, {"container_ok", Rational(contained ? 1 : 0)}};
    r.bound = Rational(72);
    r.status = verdict(contained && ratio <= r.bound);
    return r;
}

LawReport law_ruzsa_cover(const ElementSet& A, std::size_t budget) {
    LawReport r;
    r.law_id = "cover";
    r.instance = describe(A);
    CoverCertificate cert = ruzsa_cover(A, budget);
    VerifyResult v = verify_certificate(A, cert, 3, budget);
    Rational xs(static_cast<unsigned long>(cert.X.size()));
    r.constants = {{"|A^4|/|A|", cert.bound_K}};
    r.measured = {{"|X|", xs}, {"containment_ok", Rational(v.ok ? 1 : 0)}};
    r.bound = cert.bound_K;
    r.status = verdict(v.ok && xs <= cert.bound_K);
    return r;
}

LawReport law_power_chain(const ElementSet& A, int m, std::size_t budget) {
    if (m < 1) throw Error("power-chain law needs m >= 1");
    LawReport r;
    r.law_id = "chain";
    r.instance = describe(A) + " m=" + std::to_string(m);
    CoverCertificate cert = certify_approx_group(A, budget);
    CoverCertificate pc{cert.X, CoverKind::PowerCover, cert.bound_K};
    VerifyResult v = verify_certificate(A, pc, m, budget);
    Rational k(static_cast<unsigned long>(cert.X.size()));
    ElementSet Am = power(A, m, budget);
    r.bound = rational_pow(k, static_cast<unsigned long>(m - 1)) *
              Rational(static_cast<unsigned long>(A.size()));
    r.constants = {{"K", k}, {"m", Rational(m)}};
    r.measured = {{"|A^m|", Rational(static_cast<unsigned long>(Am.size()))},
                  {"containment_ok", Rational(v.ok ? 1 : 0)}};
    r.status = verdict(v.ok && Rational(static_cast<unsigned long>(Am.size())) <= r.bound);
    return r;
}

// --- instance generators ----------------------------------------------------

ElementSet random_subset_of_interval(std::uint64_t seed, int k, std::int64_t n) {
    if (n < k) throw Error("interval too small for requested subset size");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, n);
    std::set<std::int64_t> vals;
    while (static_cast<int>(vals.size()) < k) vals.insert(dist(rng));
    std::vector<GroupElement> elems;
    for (auto v : vals) elems.push_back(GroupElement{{v}});
    return ElementSet(Group(GroupDescriptor::int_lattice(1)), std::move(elems));
}

namespace {

GroupElement random_element(std::mt19937_64& rng, const Group& g, std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> signedc(-range, range);
    switch (g.family()) {
    case Family::IntLattice:
    case Family::HeisenbergZ: {
        std::vector<std::int64_t> c(static_cast<std::size_t>(g.arity()));
        for (auto& v : c) v = signedc(rng);
        return GroupElement{std::move(c)};
    }
    case Family::ModLattice:
    case Family::Cyclic:
    case Family::HeisenbergMod: {
        std::uniform_int_distribution<std::int64_t> res(0, g.desc().p0 - 1);
        std::vector<std::int64_t> c(static_cast<std::size_t>(g.arity()));
        for (auto& v : c) v = res(rng);
        return GroupElement{std::move(c)};
    }
    case Family::SL2: {
        std::uniform_int_distribution<std::int64_t> res(0, g.desc().p0 - 1);
        while (true) {
            GroupElement e{{res(rng), res(rng), res(rng), res(rng)}};
            std::int64_t p = g.desc().p0;
            if (((e.data[0] * e.data[3] - e.data[1] * e.data[2]) % p + p) % p == 1) return e;
        }
    }
    case Family::FreeProduct: {
        std::uniform_int_distribution<std::int64_t> hexp(1, g.desc().p0 - 1);
        std::uniform_int_distribution<std::int64_t> texp(-range, range);
        std::uniform_int_distribution<int> shape(0, 2);
        GroupElement raw;
        switch (shape(rng)) {
        case 0: raw.data = {0, hexp(rng)}; break;
        case 1: raw.data = {1, std::max<std::int64_t>(1, std::llabs(texp(rng)))}; break;
        default: raw.data = {0, hexp(rng), 1, std::max<std::int64_t>(1, std::llabs(texp(rng)))}; break;
        }
        return g.canonicalize(std::move(raw));
    }
    }
    return g.identity();
}

} // namespace

ElementSet random_symmetric_set(std::uint64_t seed, const Group& g, int generators,
                                std::int64_t coordinate_range) {
    std::mt19937_64 rng(seed);
    std::vector<GroupElement> elems;
    for (int i = 0; i < generators; ++i) elems.push_back(random_element(rng, g, coordinate_range));
    return symmetrize(ElementSet(g, std::move(elems)));
}

// --- sweeps -----------------------------------------------------------------

namespace {

std::int64_t param_int(const LawSweepConfig& cfg, const std::string& key, std::int64_t fallback) {
    auto it = cfg.params.find(key);
    if (it == cfg.params.end()) return fallback;
    return std::stoll(it->second);
}

LawReport run_one_trial(const LawSweepConfig& cfg, std::uint64_t trial) {
    const std::uint64_t seed = cfg.seed ^ trial;
    std::mt19937_64 rng(seed);

    LawReport r;
    if (cfg.law == "pluennecke") {
        ElementSet A = random_subset_of_interval(
            seed, static_cast<int>(param_int(cfg, "size", 30)), param_int(cfg, "range", 10000));
        std::uniform_int_distribution<int> mn(1, 3);
        int m = static_cast<int>(param_int(cfg, "m", mn(rng)));
        int n = static_cast<int>(param_int(cfg, "n", mn(rng)));
        r = law_pluennecke(A, m, n, cfg.budget);
    } else if (cfg.law == "tripling") {
        std::uniform_int_distribution<int> md(3, static_cast<int>(param_int(cfg, "max_m", 6)));
        Group g = [&]() -> Group {
            switch (trial % 3) {
            case 0: return Group(GroupDescriptor::int_lattice(1));
            case 1: return Group(GroupDescriptor::cyclic(101));
            default: return Group(GroupDescriptor::mod_lattice(5, 2));
            }
        }();
        ElementSet A = random_symmetric_set(seed, g, 4, 40);
        r = law_tripling_powers(A, md(rng), cfg.budget);
    } else if (cfg.law == "helfgott") {
        std::uniform_int_distribution<int> md(2, static_cast<int>(param_int(cfg, "max_m", 4)));
        int m = md(rng);
        switch (trial % 3) {
        case 0: {
            Group g(GroupDescriptor::int_lattice(2));
            ElementSet A = random_symmetric_set(seed, g, 4, 8);
            r = law_helfgott_projection(A, Homomorphism::coordinate_projection(g, {0}), m, cfg.budget);
            break;
        }
        case 1: {
            Group g(GroupDescriptor::int_lattice(1));
            ElementSet A = random_symmetric_set(seed, g, 5, 30);
            std::uniform_int_distribution<std::int64_t> modd(2, 30);
            r = law_helfgott_projection(A, Homomorphism::mod_reduction(g, modd(rng)), m, cfg.budget);
            break;
        }
        default: {
            Group g(GroupDescriptor::heisenberg_z());
            ElementSet A = random_symmetric_set(seed, g, 2, 2);
            r = law_helfgott_projection(A, Homomorphism::heisenberg_abelianization(g), m, cfg.budget);
            break;
        }
        }
    } else if (cfg.law == "intersection") {
        Group g(GroupDescriptor::cyclic(101));
        ElementSet A = random_symmetric_set(seed, g, 3, 0);
        ElementSet B = random_symmetric_set(seed + 0x517cc1b727220a95ULL, g, 3, 0);
        std::uniform_int_distribution<int> mn(2, 3);
        r = law_intersection(A, B, mn(rng), mn(rng), cfg.budget);
    } else if (cfg.law == "torsion") {
        int d = 1 + static_cast<int>(trial % 4);
        std::int64_t mod = (trial % 2 == 0) ? 2 : 3;
        Group g(GroupDescriptor::mod_lattice(mod, d));
        ElementSet A = random_symmetric_set(seed, g, 3, 0);
        r = law_bounded_torsion(A, cfg.budget);
    } else if (cfg.law == "cover" || cfg.law == "chain") {
        Group g = [&]() -> Group {
            switch (trial % 5) {
            case 0: return Group(GroupDescriptor::int_lattice(1));
            case 1: return Group(GroupDescriptor::cyclic(60));
            case 2: return Group(GroupDescriptor::mod_lattice(4, 2));
            case 3: return Group(GroupDescriptor::heisenberg_z());
            default: return Group(GroupDescriptor::sl2(5));
            }
        }();
        std::int64_t range = g.family() == Family::HeisenbergZ ? 1 : 10;
        int gens = g.family() == Family::SL2 ? 1 : (g.family() == Family::HeisenbergZ ? 2 : 3);
        ElementSet A = random_symmetric_set(seed, g, gens, range);
        if (cfg.law == "cover") {
            r = law_ruzsa_cover(A, cfg.budget);
        } else {
            std::uniform_int_distribution<int> md(3, static_cast<int>(param_int(cfg, "max_m", 6)));
            r = law_power_chain(A, md(rng), cfg.budget);
        }
    } else if (cfg.law == "q3") {
        // trial indexes the (L1, L2) grid
        std::int64_t lmax = param_int(cfg, "Lmax", 4);
        std::int64_t l1 = param_int(cfg, "L1", static_cast<std::int64_t>(trial) / (lmax + 1));
        std::int64_t l2 = param_int(cfg, "L2", static_cast<std::int64_t>(trial) % (lmax + 1));
        r = law_q3_bound(l1, l2, cfg.budget);
    } else if (cfg.law == "growth") {
        std::string grp = cfg.params.count("group") ? cfg.params.at("group") : "Z^2";
        int n = static_cast<int>(param_int(cfg, "n", 16));
        int d = static_cast<int>(param_int(cfg, "d", 2));
        if (grp == "H(Z)") {
            Group g(GroupDescriptor::heisenberg_z());
            ElementSet S = symmetrize(
                ElementSet(g, {GroupElement{{0, 1, 0}}, GroupElement{{1, 0, 0}}}));
            r = law_growth_scale(S, n, d, cfg.budget);
        } else {
            Group g(GroupDescriptor::int_lattice(2));
            ElementSet S = symmetrize(ElementSet(g, {GroupElement{{1, 0}}, GroupElement{{0, 1}}}));
            r = law_growth_scale(S, n, d, cfg.budget);
        }
    } else if (cfg.law == "random_doubling") {
        r = law_random_doubling(static_cast<int>(param_int(cfg, "k", 20)),
                                param_int(cfg, "n", 1000000),
                                static_cast<int>(param_int(cfg, "mc_trials", 200)), cfg.seed);
    } else {
        throw ParseError("unknown law '" + cfg.law + "'");
    }
    r.trial = trial;
    r.seed = seed;
    return r;
}

} // namespace

std::vector<LawReport> run_law_sweep(const LawSweepConfig& cfg) {
    std::uint64_t trials = cfg.trials;
    if (cfg.law == "q3" && !cfg.params.count("L1")) {
        std::uint64_t lmax = static_cast<std::uint64_t>(param_int(cfg, "Lmax", 4));
        trials = (lmax + 1) * (lmax + 1);
    }
    if (cfg.law == "growth" || cfg.law == "random_doubling") trials = 1;

    std::vector<LawReport> reports(trials);
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            try {
                reports[t] = run_one_trial(cfg, t);
            } catch (const BudgetExceeded& e) {
                reports[t].law_id = cfg.law;
                reports[t].trial = t;
                reports[t].seed = cfg.seed ^ t;
                reports[t].instance = e.what();
                reports[t].status = LawStatus::BudgetExceededStatus;
            }
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || trials <= 1) {
        work(0, trials);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (trials + static_cast<std::uint64_t>(jobs) - 1) / static_cast<std::uint64_t>(jobs);
        for (int j = 0; j < jobs; ++j) {
            std::uint64_t b = static_cast<std::uint64_t>(j) * chunk;
            std::uint64_t e = std::min(trials, b + chunk);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return reports;
}

std::string report_csv_header() {
    return "law_id,trial,seed,instance,constants,measured,bound,status";
}

std::string report_csv_row(const LawReport& r) {
    auto join = [](const std::vector<std::pair<std::string, Rational>>& kv) {
        std::string s;
        for (const auto& [k, v] : kv) {
            if (!s.empty()) s += ';';
            s += k + "=" + to_frac_string(v);
        }
        return s;
    };
    return r.law_id + "," + std::to_string(r.trial) + "," + std::to_string(r.seed) + "," +
           r.instance + "," + join(r.constants) + "," + join(r.measured) + "," +
           to_frac_string(r.bound) + "," + to_string(r.status);
}

} // namespace approxlab
