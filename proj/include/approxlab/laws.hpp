#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "approxlab/covering.hpp"
#include "approxlab/element_set.hpp"
#include "approxlab/structures.hpp"

namespace approxlab {

enum class LawStatus { Satisfied, Violated, HypothesisFailed, BudgetExceededStatus };

std::string to_string(LawStatus s);

/// One verified-inequality trial: hypothesis constants, measured quantities,
/// the bound, and the outcome. All numeric fields are exact rationals.
struct LawReport {
    std::string law_id;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::string instance;
    std::vector<std::pair<std::string, Rational>> constants;
    std::vector<std::pair<std::string, Rational>> measured;
    Rational bound;
    LawStatus status = LawStatus::Satisfied;
};

// --- single-instance checks -------------------------------------------------

/// |mA - nA| <= K^{m+n} |A| with K = |A+A|/|A| (abelian).
LawReport law_pluennecke(const ElementSet& A, int m, int n, std::size_t budget = kDefaultBudget);

/// |A^m| <= K^{m-2} |A| with K = |A^3|/|A| (symmetric A, m >= 3).
LawReport law_tripling_powers(const ElementSet& A, int m, std::size_t budget = kDefaultBudget);

/// |pi(A)^m|/|pi(A)| <= |A^{m+2}|/|A|.
LawReport law_helfgott_projection(const ElementSet& A, const Homomorphism& h, int m,
                                  std::size_t budget = kDefaultBudget);

/// |A^m ∩ B^n| / |A^2 ∩ B^2| <= (|A^{m+1}|/|A|)(|B^{n+1}|/|B|), plus the
/// companion tripling bound |(A^2 ∩ B^2)^3| <= (KL)^5 |A^2 ∩ B^2|.
LawReport law_intersection(const ElementSet& A, const ElementSet& B, int m, int n,
                           std::size_t budget = kDefaultBudget);

/// |<A>| <= m^ceil(K^4) * K * |A| in a bounded-torsion abelian group.
LawReport law_bounded_torsion(const ElementSet& A, std::size_t budget = kDefaultBudget);

/// Mean |A+A|/k^2 over random k-subsets of {1..n}; satisfied iff >= 2/5.
LawReport law_random_doubling(int k, std::int64_t n, int trials, std::uint64_t seed);

/// Growth-scale claim: under |S^n| <= n^d |S|, report the minimum of
/// |S^{2m}|/|S^m| over m in [ceil(sqrt(n)), n] and the m attaining it.
LawReport law_growth_scale(const ElementSet& S, int n, int d, std::size_t budget = kDefaultBudget);

/// |Q^3| <= 72 |Q| plus the container check (bounds per matrix direction).
LawReport law_q3_bound(std::int64_t l1, std::int64_t l2, std::size_t budget = kDefaultBudget);

/// Ruzsa covering certificate: |X| <= |A^4|/|A| and A^3 ⊆ X A^2.
LawReport law_ruzsa_cover(const ElementSet& A, std::size_t budget = kDefaultBudget);

/// Approximate-group power chain: with K = |X| from certify_approx_group,
/// |A^m| <= K^{m-1} |A| for the given m.
LawReport law_power_chain(const ElementSet& A, int m, std::size_t budget = kDefaultBudget);

// --- seeded sweeps ----------------------------------------------------------

struct LawSweepConfig {
    std::string law;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::map<std::string, std::string> params;
    std::size_t budget = kDefaultBudget;
    int jobs = 1;
};

/// Known sweep names: pluennecke, tripling, helfgott, intersection, torsion,
/// cover, chain, random_doubling, growth, q3. Reports come back sorted by
/// trial index regardless of job count.
std::vector<LawReport> run_law_sweep(const LawSweepConfig& cfg);

/// Seeded instance generators (shared between sweeps and tests).
ElementSet random_subset_of_interval(std::uint64_t seed, int k, std::int64_t n);
ElementSet random_symmetric_set(std::uint64_t seed, const Group& g, int generators,
                                std::int64_t coordinate_range);

std::string report_csv_header();
std::string report_csv_row(const LawReport& r);

} // namespace approxlab
