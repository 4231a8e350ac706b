#include "approxlab/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace approxlab {

namespace {

std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("trailing characters in integer '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

GroupDescriptor parse_group(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty group descriptor");

    if (s == "Z") return GroupDescriptor::int_lattice(1);
    if (s == "H(Z)") return GroupDescriptor::heisenberg_z();
    if (s.rfind("H(", 0) == 0 && s.back() == ')')
        return GroupDescriptor::heisenberg_mod(parse_int(s.substr(2, s.size() - 3)));
    if (s.rfind("SL2(", 0) == 0 && s.back() == ')')
        return GroupDescriptor::sl2(parse_int(s.substr(4, s.size() - 5)));
    if (s.rfind("Z^", 0) == 0)
        return GroupDescriptor::int_lattice(static_cast<int>(parse_int(s.substr(2))));
    if (s.rfind("Z/", 0) == 0) return GroupDescriptor::cyclic(parse_int(s.substr(2)));
    if (s.rfind("(Z/", 0) == 0) {
        auto close = s.find(')');
        if (close == std::string::npos) throw ParseError("unterminated '(' in '" + raw + "'");
        std::int64_t m = parse_int(s.substr(3, close - 3));
        std::string rest = s.substr(close + 1);
        int d = 1;
        if (!rest.empty()) {
            if (rest[0] != '^') throw ParseError("expected '^' in '" + raw + "'");
            d = static_cast<int>(parse_int(rest.substr(1)));
        }
        return GroupDescriptor::mod_lattice(m, d);
    }
    if (s[0] == 'C') {
        auto star = s.find('*');
        if (star != std::string::npos && s.substr(star) == "*Z")
            return GroupDescriptor::free_product(parse_int(s.substr(1, star - 1)));
    }
    throw ParseError("unrecognized group descriptor '" + raw + "'");
}

ElementSet read_set_file(const std::string& path, const Group& ctx) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open set file '" + path + "'");
    std::vector<GroupElement> elems;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        elems.push_back(ctx.parse_element(line.substr(b, e - b + 1)));
    }
    return ElementSet(ctx, std::move(elems));
}

void write_set_file(const std::string& path, const ElementSet& s) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << "# group: " << s.group().desc().name() << "\n";
    for (const auto& e : s.members()) out << s.group().format_element(e) << "\n";
    if (!out) throw Error("write to '" + path + "' failed");
}

StructuredSpec parse_structured_spec(const std::string& text, const Group& ctx, QL2Mode q_mode) {
    std::istringstream is(text);
    std::string kind;
    is >> kind;
    std::map<std::string, std::string> kv;
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }

    auto need = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end()) throw ParseError("spec '" + kind + "' needs " + k + "=...");
        return it->second;
    };
    auto int_list = [&](const std::string& v) {
        std::vector<std::int64_t> out;
        for (const auto& piece : split(v, v.find(';') != std::string::npos ? ';' : ','))
            out.push_back(parse_int(piece));
        return out;
    };
    auto elem_list = [&](const std::string& v) {
        std::vector<GroupElement> out;
        char sep = ';';
        if (ctx.arity() == 1 && v.find(';') == std::string::npos) sep = ',';
        for (const auto& piece : split(v, sep)) out.push_back(ctx.parse_element(piece));
        return out;
    };

    if (kind == "box") return StructuredSpec::box(int_list(need("L")));
    if (kind == "prog")
        return StructuredSpec::progression(ctx, elem_list(need("x")), int_list(need("L")));
    if (kind == "coset")
        return StructuredSpec::coset_progression(ctx, elem_list(need("H")), elem_list(need("x")),
                                                 int_list(need("L")));
    if (kind == "nilprog")
        return StructuredSpec::nilprogression(ctx, elem_list(need("x")), int_list(need("L")));
    if (kind == "Q")
        return StructuredSpec::heisenberg_q(ctx, parse_int(need("L1")), parse_int(need("L2")),
                                            q_mode);
    throw ParseError("unknown spec kind '" + kind + "'");
}

} // namespace approxlab
