#include "approxlab/group.hpp"

#include <charconv>
#include <sstream>

namespace approxlab {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in multiplication");
    return r;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// Append one syllable to a reduced free-product word, merging at the junction.
void fp_push(std::vector<std::int64_t>& w, std::int64_t tag, std::int64_t exp, std::int64_t k) {
    if (tag == 0) exp = mod_reduce(exp, k);
    if (exp == 0) return;
    if (!w.empty() && w[w.size() - 2] == tag) {
        std::int64_t e = (tag == 0) ? mod_reduce(w.back() + exp, k) : checked_add(w.back(), exp);
        if (e == 0) {
            w.resize(w.size() - 2);
        } else {
            w.back() = e;
        }
        return;
    }
    w.push_back(tag);
    w.push_back(exp);
}

} // namespace

GroupDescriptor GroupDescriptor::int_lattice(int d) {
    if (d < 1 || d > 4)
        throw InvalidDescriptor("IntLattice dimension must be in [1,4]");
    return {Family::IntLattice, d, 0};
}

GroupDescriptor GroupDescriptor::mod_lattice(std::int64_t m, int d) {
    if (m < 2) throw InvalidDescriptor("ModLattice modulus must be >= 2");
    if (d < 1 || d > 4) throw InvalidDescriptor("ModLattice dimension must be in [1,4]");
    return {Family::ModLattice, m, d};
}

GroupDescriptor GroupDescriptor::cyclic(std::int64_t n) {
    if (n < 2) throw InvalidDescriptor("Cyclic order must be >= 2");
    return {Family::Cyclic, n, 0};
}

GroupDescriptor GroupDescriptor::heisenberg_z() {
    return {Family::HeisenbergZ, 0, 0};
}

GroupDescriptor GroupDescriptor::heisenberg_mod(std::int64_t p) {
    if (!is_prime(p))
        throw InvalidDescriptor("HeisenbergMod requires a prime modulus");
    return {Family::HeisenbergMod, p, 0};
}

GroupDescriptor GroupDescriptor::sl2(std::int64_t p) {
    if (!is_prime(p))
        throw InvalidDescriptor("SL2 requires a prime field order");
    return {Family::SL2, p, 0};
}

GroupDescriptor GroupDescriptor::free_product(std::int64_t k) {
    if (k < 2) throw InvalidDescriptor("FreeProduct torsion order must be >= 2");
    return {Family::FreeProduct, k, 0};
}

std::string GroupDescriptor::name() const {
    switch (family) {
    case Family::IntLattice:
        return p0 == 1 ? "Z" : "Z^" + std::to_string(p0);
    case Family::ModLattice:
        return "(Z/" + std::to_string(p0) + ")^" + std::to_string(p1);
    case Family::Cyclic:
        return "Z/" + std::to_string(p0);
    case Family::HeisenbergZ:
        return "H(Z)";
    case Family::HeisenbergMod:
        return "H(" + std::to_string(p0) + ")";
    case Family::SL2:
        return "SL2(" + std::to_string(p0) + ")";
    case Family::FreeProduct:
        return "C" + std::to_string(p0) + "*Z";
    }
    return "?";
}

Group::Group(GroupDescriptor desc) : desc_(desc) {
    // Re-run the family checks so descriptors built by aggregate init are vetted too.
    switch (desc_.family) {
    case Family::IntLattice: GroupDescriptor::int_lattice(static_cast<int>(desc_.p0)); break;
    case Family::ModLattice: GroupDescriptor::mod_lattice(desc_.p0, static_cast<int>(desc_.p1)); break;
    case Family::Cyclic: GroupDescriptor::cyclic(desc_.p0); break;
    case Family::HeisenbergZ: break;
    case Family::HeisenbergMod: GroupDescriptor::heisenberg_mod(desc_.p0); break;
    case Family::SL2: GroupDescriptor::sl2(desc_.p0); break;
    case Family::FreeProduct: GroupDescriptor::free_product(desc_.p0); break;
    }
}

bool Group::is_abelian() const {
    switch (desc_.family) {
    case Family::IntLattice:
    case Family::ModLattice:
    case Family::Cyclic:
        return true;
    default:
        return false;
    }
}

bool Group::is_finite() const {
    switch (desc_.family) {
    case Family::ModLattice:
    case Family::Cyclic:
    case Family::HeisenbergMod:
    case Family::SL2:
        return true;
    default:
        return false;
    }
}

std::uint64_t Group::order() const {
    switch (desc_.family) {
    case Family::ModLattice: {
        std::uint64_t o = 1;
        for (int i = 0; i < desc_.p1; ++i) o *= static_cast<std::uint64_t>(desc_.p0);
        return o;
    }
    case Family::Cyclic:
        return static_cast<std::uint64_t>(desc_.p0);
    case Family::HeisenbergMod: {
        std::uint64_t p = static_cast<std::uint64_t>(desc_.p0);
        return p * p * p;
    }
    case Family::SL2: {
        std::uint64_t p = static_cast<std::uint64_t>(desc_.p0);
        return p * (p * p - 1);
    }
    default:
        throw Error("order() on infinite family " + desc_.name());
    }
}

int Group::arity() const {
    switch (desc_.family) {
    case Family::IntLattice: return static_cast<int>(desc_.p0);
    case Family::ModLattice: return static_cast<int>(desc_.p1);
    case Family::Cyclic: return 1;
    case Family::HeisenbergZ:
    case Family::HeisenbergMod: return 3;
    case Family::SL2: return 4;
    case Family::FreeProduct: return 0;
    }
    return 0;
}

std::vector<GroupElement> Group::elements() const {
    std::vector<GroupElement> out;
    switch (desc_.family) {
    case Family::Cyclic:
        for (std::int64_t v = 0; v < desc_.p0; ++v)
            out.push_back(GroupElement{{v}});
        break;
    case Family::ModLattice: {
        std::vector<std::int64_t> coords(static_cast<std::size_t>(desc_.p1), 0);
        while (true) {
            out.push_back(GroupElement{coords});
            int i = static_cast<int>(coords.size()) - 1;
            while (i >= 0 && ++coords[static_cast<std::size_t>(i)] == desc_.p0)
                coords[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
        break;
    }
    case Family::HeisenbergMod:
        for (std::int64_t x = 0; x < desc_.p0; ++x)
            for (std::int64_t y = 0; y < desc_.p0; ++y)
                for (std::int64_t z = 0; z < desc_.p0; ++z)
                    out.push_back(GroupElement{{x, y, z}});
        break;
    case Family::SL2: {
        const std::int64_t p = desc_.p0;
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c)
                    for (std::int64_t d = 0; d < p; ++d)
                        if (mod_reduce(a * d - b * c, p) == 1)
                            out.push_back(GroupElement{{a, b, c, d}});
        break;
    }
    default:
        throw Error("elements() on infinite family " + desc_.name());
    }
    return out; // generation loops are already in canonical ascending order
}

GroupElement Group::identity() const {
    if (desc_.family == Family::FreeProduct) return GroupElement{};
    if (desc_.family == Family::SL2) return GroupElement{{1, 0, 0, 1}};
    return GroupElement{std::vector<std::int64_t>(static_cast<std::size_t>(arity()), 0)};
}

void Group::multiply_into(const GroupElement& a, const GroupElement& b, GroupElement& out) const {
    switch (desc_.family) {
    case Family::IntLattice: {
        out.data.resize(a.data.size());
        for (std::size_t i = 0; i < a.data.size(); ++i)
            out.data[i] = checked_add(a.data[i], b.data[i]);
        return;
    }
    case Family::ModLattice:
    case Family::Cyclic: {
        out.data.resize(a.data.size());
        for (std::size_t i = 0; i < a.data.size(); ++i)
            out.data[i] = mod_reduce(a.data[i] + b.data[i], desc_.p0);
        return;
    }
    case Family::HeisenbergZ: {
        out.data.resize(3);
        std::int64_t x = checked_add(a.data[0], b.data[0]);
        std::int64_t y = checked_add(a.data[1], b.data[1]);
        std::int64_t z = checked_add(checked_add(a.data[2], b.data[2]), checked_mul(a.data[0], b.data[1]));
        out.data[0] = x; out.data[1] = y; out.data[2] = z;
        return;
    }
    case Family::HeisenbergMod: {
        const std::int64_t p = desc_.p0;
        out.data.resize(3);
        out.data[0] = mod_reduce(a.data[0] + b.data[0], p);
        out.data[1] = mod_reduce(a.data[1] + b.data[1], p);
        out.data[2] = mod_reduce(a.data[2] + b.data[2] + a.data[0] * b.data[1], p);
        return;
    }
    case Family::SL2: {
        const std::int64_t p = desc_.p0;
        out.data.resize(4);
        std::int64_t r0 = mod_reduce(a.data[0] * b.data[0] + a.data[1] * b.data[2], p);
        std::int64_t r1 = mod_reduce(a.data[0] * b.data[1] + a.data[1] * b.data[3], p);
        std::int64_t r2 = mod_reduce(a.data[2] * b.data[0] + a.data[3] * b.data[2], p);
        std::int64_t r3 = mod_reduce(a.data[2] * b.data[1] + a.data[3] * b.data[3], p);
        out.data[0] = r0; out.data[1] = r1; out.data[2] = r2; out.data[3] = r3;
        return;
    }
    case Family::FreeProduct: {
        out.data = a.data;
        for (std::size_t i = 0; i + 1 < b.data.size(); i += 2)
            fp_push(out.data, b.data[i], b.data[i + 1], desc_.p0);
        return;
    }
    }
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
    GroupElement out;
    multiply_into(a, b, out);
    return out;
}

GroupElement Group::invert(const GroupElement& a) const {
    switch (desc_.family) {
    case Family::IntLattice: {
        GroupElement r = a;
        for (auto& v : r.data) v = checked_mul(v, -1);
        return r;
    }
    case Family::ModLattice:
    case Family::Cyclic: {
        GroupElement r = a;
        for (auto& v : r.data) v = mod_reduce(-v, desc_.p0);
        return r;
    }
    case Family::HeisenbergZ:
        return GroupElement{{checked_mul(a.data[0], -1), checked_mul(a.data[1], -1),
                             checked_add(checked_mul(a.data[0], a.data[1]), checked_mul(a.data[2], -1))}};
    case Family::HeisenbergMod: {
        const std::int64_t p = desc_.p0;
        return GroupElement{{mod_reduce(-a.data[0], p), mod_reduce(-a.data[1], p),
                             mod_reduce(a.data[0] * a.data[1] - a.data[2], p)}};
    }
    case Family::SL2: {
        const std::int64_t p = desc_.p0;
        // det = 1, so the adjugate is the inverse.
        return GroupElement{{a.data[3], mod_reduce(-a.data[1], p), mod_reduce(-a.data[2], p), a.data[0]}};
    }
    case Family::FreeProduct: {
        GroupElement r;
        for (std::size_t i = a.data.size(); i >= 2; i -= 2)
            fp_push(r.data, a.data[i - 2], -a.data[i - 1], desc_.p0);
        return r;
    }
    }
    return {};
}

GroupElement Group::canonicalize(GroupElement e) const {
    switch (desc_.family) {
    case Family::ModLattice:
    case Family::Cyclic:
        if (static_cast<int>(e.data.size()) != arity())
            throw InvalidElement("wrong coordinate count for " + desc_.name());
        for (auto& v : e.data) v = mod_reduce(v, desc_.p0);
        return e;
    case Family::HeisenbergMod:
        if (e.data.size() != 3) throw InvalidElement("Heisenberg element needs 3 coordinates");
        for (auto& v : e.data) v = mod_reduce(v, desc_.p0);
        return e;
    case Family::SL2:
        if (e.data.size() != 4) throw InvalidElement("SL2 element needs 4 coordinates");
        for (auto& v : e.data) v = mod_reduce(v, desc_.p0);
        validate(e);
        return e;
    case Family::FreeProduct: {
        if (e.data.size() % 2 != 0)
            throw InvalidElement("free product word needs (tag, exponent) pairs");
        GroupElement r;
        for (std::size_t i = 0; i + 1 < e.data.size(); i += 2) {
            if (e.data[i] != 0 && e.data[i] != 1)
                throw InvalidElement("free product syllable tag must be 0 (h) or 1 (t)");
            fp_push(r.data, e.data[i], e.data[i + 1], desc_.p0);
        }
        return r;
    }
    default:
        validate(e);
        return e;
    }
}

void Group::validate(const GroupElement& e) const {
    switch (desc_.family) {
    case Family::IntLattice:
    case Family::HeisenbergZ:
        if (static_cast<int>(e.data.size()) != arity())
            throw InvalidElement("wrong coordinate count for " + desc_.name());
        return;
    case Family::ModLattice:
    case Family::Cyclic:
    case Family::HeisenbergMod:
        if (static_cast<int>(e.data.size()) != arity())
            throw InvalidElement("wrong coordinate count for " + desc_.name());
        for (auto v : e.data)
            if (v < 0 || v >= desc_.p0)
                throw InvalidElement("coordinate not reduced mod " + std::to_string(desc_.p0));
        return;
    case Family::SL2: {
        if (e.data.size() != 4) throw InvalidElement("SL2 element needs 4 coordinates");
        const std::int64_t p = desc_.p0;
        for (auto v : e.data)
            if (v < 0 || v >= p) throw InvalidElement("SL2 entry not reduced mod p");
        if (mod_reduce(e.data[0] * e.data[3] - e.data[1] * e.data[2], p) != 1)
            throw InvalidElement("SL2 element must have determinant 1");
        return;
    }
    case Family::FreeProduct: {
        if (e.data.size() % 2 != 0)
            throw InvalidElement("free product word needs (tag, exponent) pairs");
        std::int64_t prev_tag = -1;
        for (std::size_t i = 0; i + 1 < e.data.size(); i += 2) {
            std::int64_t tag = e.data[i], exp = e.data[i + 1];
            if (tag != 0 && tag != 1) throw InvalidElement("bad syllable tag");
            if (tag == prev_tag) throw InvalidElement("word not reduced: adjacent syllables share a factor");
            if (tag == 0 && (exp < 1 || exp >= desc_.p0))
                throw InvalidElement("torsion exponent out of range 1..k-1");
            if (tag == 1 && exp == 0) throw InvalidElement("zero exponent syllable");
            prev_tag = tag;
        }
        return;
    }
    }
}

GroupElement Group::parse_element(std::string_view text) const {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (desc_.family == Family::FreeProduct) {
        if (text == "e") return GroupElement{};
        GroupElement raw;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view syl = trim(text.substr(pos, dot == std::string_view::npos ? dot : dot - pos));
            if (syl.size() < 3 || (syl[0] != 'h' && syl[0] != 't') || syl[1] != '^')
                throw ParseError("bad syllable '" + std::string(syl) + "' (expect h^E or t^E)");
            std::int64_t exp = 0;
            auto [ptr, ec] = std::from_chars(syl.data() + 2, syl.data() + syl.size(), exp);
            if (ec != std::errc{} || ptr != syl.data() + syl.size())
                throw ParseError("bad exponent in syllable '" + std::string(syl) + "'");
            raw.data.push_back(syl[0] == 'h' ? 0 : 1);
            raw.data.push_back(exp);
            pos = dot == std::string_view::npos ? text.size() : dot + 1;
        }
        return canonicalize(std::move(raw));
    }
    GroupElement e;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad integer '" + std::string(tok) + "' in element");
        e.data.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return canonicalize(std::move(e));
}

std::string Group::format_element(const GroupElement& e) const {
    if (desc_.family == Family::FreeProduct) {
        if (e.data.empty()) return "e";
        std::string s;
        for (std::size_t i = 0; i + 1 < e.data.size(); i += 2) {
            if (!s.empty()) s += '.';
            s += (e.data[i] == 0 ? 'h' : 't');
            s += '^';
            s += std::to_string(e.data[i + 1]);
        }
        return s;
    }
    std::string s;
    for (std::size_t i = 0; i < e.data.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.data[i]);
    }
    return s;
}

Homomorphism Homomorphism::coordinate_projection(const Group& source, std::vector<int> indices,
                                                 std::vector<std::int64_t> weights) {
    Family f = source.family();
    if (f != Family::IntLattice && f != Family::ModLattice)
        throw IncompatibleFamilies("coordinate projection needs a lattice source");
    if (!weights.empty() && static_cast<int>(weights.size()) != source.arity())
        throw IncompatibleFamilies("weight count must match source arity");
    for (int i : indices)
        if (i < 0 || i >= source.arity())
            throw IncompatibleFamilies("projection index out of range");
    int out_arity = weights.empty() ? static_cast<int>(indices.size()) : 1;
    if (out_arity < 1) throw IncompatibleFamilies("projection needs at least one coordinate");
    GroupDescriptor tgt = (f == Family::IntLattice)
                              ? GroupDescriptor::int_lattice(out_arity)
                              : (out_arity == 1 ? GroupDescriptor::cyclic(source.desc().p0)
                                                : GroupDescriptor::mod_lattice(source.desc().p0, out_arity));
    Homomorphism h(Kind::CoordinateProjection, source, Group(tgt));
    h.indices_ = std::move(indices);
    h.weights_ = std::move(weights);
    return h;
}

Homomorphism Homomorphism::mod_reduction(const Group& source, std::int64_t m) {
    switch (source.family()) {
    case Family::IntLattice: {
        GroupDescriptor tgt = source.arity() == 1 ? GroupDescriptor::cyclic(m)
                                                  : GroupDescriptor::mod_lattice(m, source.arity());
        Homomorphism h(Kind::ModReduction, source, Group(tgt));
        h.modulus_ = m;
        return h;
    }
    case Family::HeisenbergZ: {
        Homomorphism h(Kind::ModReduction, source, Group(GroupDescriptor::heisenberg_mod(m)));
        h.modulus_ = m;
        return h;
    }
    default:
        throw IncompatibleFamilies("mod reduction defined on Z^d and H(Z)");
    }
}

Homomorphism Homomorphism::heisenberg_abelianization(const Group& source) {
    switch (source.family()) {
    case Family::HeisenbergZ:
        return {Kind::HeisenbergAbelianization, source, Group(GroupDescriptor::int_lattice(2))};
    case Family::HeisenbergMod:
        return {Kind::HeisenbergAbelianization, source,
                Group(GroupDescriptor::mod_lattice(source.desc().p0, 2))};
    default:
        throw IncompatibleFamilies("abelianization defined on Heisenberg families");
    }
}

GroupElement Homomorphism::apply(const GroupElement& a) const {
    source_.validate(a);
    switch (kind_) {
    case Kind::CoordinateProjection: {
        GroupElement out;
        if (weights_.empty()) {
            for (int i : indices_)
                out.data.push_back(a.data[static_cast<std::size_t>(i)]);
        } else {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < weights_.size(); ++i)
                acc = checked_add(acc, checked_mul(weights_[i], a.data[i]));
            out.data.push_back(acc);
        }
        return target_.canonicalize(std::move(out));
    }
    case Kind::ModReduction:
        return target_.canonicalize(a);
    case Kind::HeisenbergAbelianization:
        return target_.canonicalize(GroupElement{{a.data[0], a.data[1]}});
    }
    return {};
}

} // namespace approxlab
