#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "approxlab/errors.hpp"

namespace approxlab {

enum class Family {
    IntLattice,   // Z^d, d in [1,4]
    ModLattice,   // (Z/m)^d
    Cyclic,       // Z/n
    HeisenbergZ,  // integer upper unitriangular 3x3
    HeisenbergMod,// same mod p, p prime
    SL2,          // SL_2(F_p), p prime
    FreeProduct   // C_k * Z, reduced alternating words
};

struct GroupDescriptor {
    Family family = Family::IntLattice;
    std::int64_t p0 = 1; // d | m | n | p | k (family-dependent)
    std::int64_t p1 = 0; // d, ModLattice only

    static GroupDescriptor int_lattice(int d);
    static GroupDescriptor mod_lattice(std::int64_t m, int d);
    static GroupDescriptor cyclic(std::int64_t n);
    static GroupDescriptor heisenberg_z();
    static GroupDescriptor heisenberg_mod(std::int64_t p);
    static GroupDescriptor sl2(std::int64_t p);
    static GroupDescriptor free_product(std::int64_t k);

    bool operator==(const GroupDescriptor&) const = default;

    /// Mini-language spelling: "Z^2", "Z/10", "(Z/5)^3", "H(Z)", "H(7)", "SL2(7)", "C4*Z".
    std::string name() const;
};

/// Canonical element payload. Layout by family:
///   IntLattice/ModLattice: d coordinates; Cyclic: 1 residue;
///   Heisenberg*: (x, y, z) = matrix entries (1,2), (2,3), (1,3);
///   SL2: (a, b, c, d) row-major with ad - bc = 1 mod p;
///   FreeProduct: flattened reduced word [tag, exp, tag, exp, ...],
///     tag 0 = torsion letter h (exp in 1..k-1), tag 1 = infinite letter t (exp != 0).
/// Equal elements have identical payloads; the lexicographic order below is the
/// canonical scan order used by every greedy algorithm.
struct GroupElement {
    std::vector<std::int64_t> data;

    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> d) : data(std::move(d)) {}

    auto operator<=>(const GroupElement&) const = default;
};

/// Concrete group family instance. Immutable, cheap to copy, shareable.
class Group {
public:
    explicit Group(GroupDescriptor desc);

    const GroupDescriptor& desc() const { return desc_; }
    Family family() const { return desc_.family; }

    bool is_abelian() const;
    bool is_finite() const;
    std::uint64_t order() const;                 // finite families only
    std::vector<GroupElement> elements() const;  // finite families, canonical order

    /// Coordinates per element, 0 for FreeProduct (variable-length words).
    int arity() const;

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& a) const;

    /// In-place variant for hot loops; out may alias neither argument.
    void multiply_into(const GroupElement& a, const GroupElement& b, GroupElement& out) const;

    /// Reduce coordinates into canonical range; throws InvalidElement if the
    /// payload cannot represent an element of this family.
    GroupElement canonicalize(GroupElement e) const;
    void validate(const GroupElement& e) const;

    GroupElement parse_element(std::string_view text) const;
    std::string format_element(const GroupElement& e) const;

    bool operator==(const Group& o) const { return desc_ == o.desc_; }

private:
    GroupDescriptor desc_;
};

/// Structure-preserving map between two supported families.
class Homomorphism {
public:
    enum class Kind { CoordinateProjection, ModReduction, HeisenbergAbelianization };

    /// Pick coordinates `indices` of a lattice family. When `weights` is
    /// nonempty it must match the source arity and the map becomes the linear
    /// functional x -> sum_i weights[i] * x[i] into rank 1 (e.g. the
    /// pi(1,0)=9, pi(0,1)=2 example is weights {9,2}).
    static Homomorphism coordinate_projection(const Group& source,
                                              std::vector<int> indices,
                                              std::vector<std::int64_t> weights = {});
    static Homomorphism mod_reduction(const Group& source, std::int64_t m);
    static Homomorphism heisenberg_abelianization(const Group& source);

    Kind kind() const { return kind_; }
    const Group& source() const { return source_; }
    const Group& target() const { return target_; }

    GroupElement apply(const GroupElement& a) const;

private:
    Homomorphism(Kind k, Group src, Group tgt) : kind_(k), source_(std::move(src)), target_(std::move(tgt)) {}

    Kind kind_;
    Group source_;
    Group target_;
    std::vector<int> indices_;
    std::vector<std::int64_t> weights_;
    std::int64_t modulus_ = 0;
};

bool is_prime(std::int64_t n);

/// Checked arithmetic; throws OverflowError.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace approxlab
