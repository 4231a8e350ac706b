#pragma once

#include <optional>

#include "approxlab/element_set.hpp"

namespace approxlab {

/// How to read the bound on the (2,3) entry of the Q-set.
/// AsPrinted keeps |l2| <= L1; Symmetric uses |l2| <= L2.
enum class QL2Mode { AsPrinted, Symmetric };

/// Declarative description of a structured set; expand() turns it into an
/// ElementSet.
struct StructuredSpec {
    enum class Kind { Box, Progression, CosetProgression, Nilprogression, HeisenbergQ };

    Kind kind;
    Group ctx;
    std::vector<std::int64_t> bounds;         // L_i, one per generator / axis
    std::vector<GroupElement> generators;     // progression / nilprogression
    std::vector<GroupElement> subgroup_gens;  // coset progression H part
    std::int64_t q_l1 = 0, q_l2 = 0;
    QL2Mode q_l2_mode = QL2Mode::AsPrinted;

    static StructuredSpec box(std::vector<std::int64_t> L);
    static StructuredSpec progression(Group ctx, std::vector<GroupElement> x,
                                      std::vector<std::int64_t> L);
    static StructuredSpec coset_progression(Group ctx, std::vector<GroupElement> subgroup_gens,
                                            std::vector<GroupElement> x,
                                            std::vector<std::int64_t> L);
    static StructuredSpec nilprogression(Group ctx, std::vector<GroupElement> x,
                                         std::vector<std::int64_t> L);
    static StructuredSpec heisenberg_q(Group ctx, std::int64_t l1, std::int64_t l2,
                                       QL2Mode mode = QL2Mode::AsPrinted);
};

ElementSet expand(const StructuredSpec& spec, std::size_t budget = kDefaultBudget);

/// The 2^d corner points (±L_1, ..., ±L_d); satisfies B + B ⊆ B + X.
ElementSet box_corner_cover(const std::vector<std::int64_t>& L);

struct CosetCheckResult {
    bool is_coset = false;
    std::optional<ElementSet> subgroup;       // H, verified closed
    std::optional<GroupElement> representative; // g with A^2 = gH
};

/// Tests whether A^2 is a coset of a finite subgroup (the conclusion of
/// Freiman's 3/2 theorem). A positive result is self-verified.
CosetCheckResult freiman_coset_check(const ElementSet& A, std::size_t budget = kDefaultBudget);

struct SandwichResult {
    bool ok = false;
    std::optional<GroupElement> witness;
    std::uint64_t p_size = 0, q_size = 0, p5_size = 0;
};

/// Verifies P(x;L) ⊆ Q ⊆ P(x;5L) in H(Z) with the one-parameter generators
/// on the (1,2) and (2,3) entries. The Q bounds are read per matrix
/// direction ((1,2) <= L1, (2,3) <= L2, (1,3) <= L1*L2), the convention
/// under which the containments hold for every L.
SandwichResult nilprog_sandwich_check(std::int64_t l1, std::int64_t l2,
                                      std::size_t budget = kDefaultBudget);

/// Lower central series of the subgroup generated by S inside a finite
/// context: G_1 = <S>, G_{n+1} = normal closure of [G_1, G_n]. Stops at
/// depth, at {1}, or at stabilization.
std::vector<ElementSet> lower_central_series(const Group& ctx, const ElementSet& S, int depth,
                                             std::size_t budget = kDefaultBudget);

} // namespace approxlab
