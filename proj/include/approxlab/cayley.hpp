#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "approxlab/element_set.hpp"

namespace approxlab {

/// Undirected Cayley graph of a finite context with respect to a symmetric
/// generating set. Vertices are the group elements in canonical order.
struct CayleyGraph {
    Group ctx;
    std::vector<GroupElement> vertices;
    std::vector<std::vector<std::uint32_t>> adjacency;
    ElementSet gens;

    std::size_t size() const { return vertices.size(); }
    std::size_t degree() const { return adjacency.empty() ? 0 : adjacency.front().size(); }
    std::uint32_t index_of(const GroupElement& e) const;
};

/// Builds the graph and verifies connectivity by traversal.
/// Throws NotSymmetric, NotGenerating, TooLargeForExact (infinite context).
CayleyGraph build_cayley(const Group& ctx, const ElementSet& S);

/// ∂A: vertices outside A adjacent to A. Returned sorted.
std::vector<std::uint32_t> vertex_boundary(const CayleyGraph& g,
                                           const std::vector<std::uint32_t>& A);

enum class CheegerMode { Exact, Heuristic };

struct CheegerResult {
    Rational value;                      // exact h (Exact) or an upper bound (Heuristic)
    std::vector<std::uint32_t> witness;  // attains the reported value
    CheegerMode mode = CheegerMode::Exact;
};

/// Exact mode scans every nonempty subset with |A| <= |Γ|/2; limited to
/// |Γ| <= 24 (throws TooLargeForExact beyond). Heuristic mode runs a seeded
/// local search and reports an upper bound only. Results are independent of
/// the job count.
CheegerResult cheeger(const CayleyGraph& g, CheegerMode mode, int jobs = 1,
                      std::uint64_t seed = 1, int iters = 2000);

struct Sl2ProbeRow {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t p = 0;
    std::uint64_t set_size = 0;
    std::uint64_t cube_size = 0;
    double exponent = 0.0;    // log|A^3| / log|A|
    Rational density;         // |A| / |G|
    std::string branch;       // "growth" or "large" for the supplied epsilon
};

/// Samples random symmetric generating sets in SL2(p), p in {3,5,7}, and
/// records growth data. Exploratory only: rows carry no pass/fail meaning.
std::vector<Sl2ProbeRow> sl2_growth_probe(std::int64_t p, int trials, std::uint64_t seed,
                                          double epsilon);

std::string probe_csv_header();
std::string probe_csv_row(const Sl2ProbeRow& r);

} // namespace approxlab
