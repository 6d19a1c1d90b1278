#include "crideal_cli/syntax.hpp"

#include <cctype>

namespace crideal::cli {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::size_t find_top_level(const std::string& s, char sep) {
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        char c = s[k];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == sep && depth == 0) return k;
        if (depth < 0) throw std::invalid_argument("unbalanced bracket at position " + std::to_string(k) + " in '" + s + "'");
    }
    if (depth != 0) throw std::invalid_argument("unbalanced brackets in '" + s + "'");
    return std::string::npos;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string rest = s;
    while (true) {
        auto k = find_top_level(rest, sep);
        if (k == std::string::npos) {
            out.push_back(trim(rest));
            return out;
        }
        out.push_back(trim(rest.substr(0, k)));
        rest = rest.substr(k + 1);
    }
}

Rat parse_rational(const std::string& text) {
    const std::string s = trim(text);
    auto valid = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t k = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid(num, true) || !valid(den, false)) throw std::invalid_argument("invalid rational '" + s + "'");
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

namespace {

std::string strip(const std::string& s, char open, char close) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != open || t.back() != close)
        throw std::invalid_argument("expected '" + std::string(1, open) + "...'" + std::string(1, close) + " in '" + t + "'");
    return t.substr(1, t.size() - 2);
}

RatVec parse_vector(const std::string& s, std::size_t dim) {
    RatVec v;
    for (const auto& part : split_top_level(strip(s, '[', ']'), ',')) v.push_back(parse_rational(part));
    if (v.size() != dim)
        throw std::invalid_argument("vector '" + s + "' has " + std::to_string(v.size()) + " entries, expected " +
                                    std::to_string(dim));
    return v;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

FieldElement parse_field(const NumberRing& ring, const std::string& text) {
    const std::string s = trim(text);
    if (!s.empty() && s.front() == '[') return ring.from_coordinates(parse_vector(s, ring.degree()));
    return ring.scale(ring.one(), parse_rational(s));
}

Lattice parse_lattice(const NumberRing& ring, const std::string& text) {
    const std::string s = trim(text);
    auto star = find_top_level(s, '*');
    if (star != std::string::npos) {
        FieldElement x = parse_field(ring, s.substr(0, star));
        if (ring.is_zero(x)) throw std::invalid_argument("zero multiplier in '" + s + "'");
        return ring.element_times_lattice(x, parse_lattice(ring, s.substr(star + 1)));
    }
    if (s == "O") return ring.order();
    if (s == "OK") return ring.maximal();
    if (s.rfind("lattice", 0) == 0) {
        std::vector<RatVec> cols;
        for (const auto& c : split_top_level(strip(s.substr(7), '(', ')'), ','))
            cols.push_back(parse_vector(c, ring.degree()));
        Lattice l = Lattice::from_generators(cols, ring.degree());
        if (l.covolume() == 0) throw std::invalid_argument("lattice '" + s + "' is not of full rank");
        return l;
    }
    throw std::invalid_argument("cannot parse lattice '" + s + "'");
}

std::int64_t parse_element(const NumericalSemigroup&, const std::string& s) {
    Rat q = parse_rational(s);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::invalid_argument("invalid integer '" + s + "'");
    return q.get_num().get_si();
}

GridVector parse_element(const GridMonoid& b, const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(') s = strip(s, '(', ')');
    GridVector v;
    for (const auto& part : split_top_level(s, ',')) {
        Rat q = parse_rational(part);
        if (q.get_den() != 1) throw std::invalid_argument("grid coordinates must be integers: '" + text + "'");
        v.push_back(q.get_num().get_si());
    }
    if (v.size() != b.rank())
        throw std::invalid_argument("grid element '" + text + "' needs " + std::to_string(b.rank()) + " coordinates");
    return v;
}

FreeWord parse_element(const FreeMonoid& b, const std::string& s) { return b.parse(trim(s)); }

FieldElement parse_element(const OrderMultMonoid& b, const std::string& s) { return parse_field(b.ring(), s); }

AxbElement parse_element(const AxbMonoid& b, const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(') s = strip(s, '(', ')');
    auto parts = split_top_level(s, ',');
    if (parts.size() != 2) throw std::invalid_argument("ax+b element '" + text + "' must be (b,a)");
    return AxbElement{parse_field(b.ring(), parts[0]), parse_field(b.ring(), parts[1])};
}

TailSet parse_ideal_atom(const NumericalSemigroup& b, const std::string& s) {
    if (s == "empty") return TailSet::empty_set();
    if (s == b.label()) return b.whole();
    if (s.front() == '{') {
        auto items = split_top_level(strip(s, '{', '}'), ',');
        if (items.empty() || !ends_with(items.back(), ".."))
            throw std::invalid_argument("set ideal '" + s + "' must end with 'T..'");
        std::int64_t thr = parse_element(b, items.back().substr(0, items.back().size() - 2));
        std::vector<std::int64_t> members;
        for (std::size_t k = 0; k + 1 < items.size(); ++k) members.push_back(parse_element(b, items[k]));
        std::int64_t lo = members.empty() ? thr : std::min(thr, *std::min_element(members.begin(), members.end()));
        auto t = TailSet::build(lo, thr, [&](std::int64_t x) {
            return std::find(members.begin(), members.end(), x) != members.end();
        });
        for (std::int64_t x = t.min(); x < t.threshold() + b.generators().back(); ++x) {
            if (!t.contains(x)) continue;
            if (!b.in_P(x)) throw std::invalid_argument(std::to_string(x) + " is not in P");
            for (auto g : b.generators())
                if (!t.contains(x + g)) throw std::invalid_argument("'" + s + "' is not an ideal");
        }
        return t;
    }
    auto plus = find_top_level(s, '+');
    if (plus == std::string::npos) throw std::invalid_argument("cannot parse ideal '" + s + "'");
    std::int64_t p = parse_element(b, s.substr(0, plus));
    std::string rest = trim(s.substr(plus + 1));
    if (rest == b.label() || rest == "P") {
        if (!b.in_P(p)) throw std::invalid_argument(std::to_string(p) + " is not in P");
        return b.principal(p);
    }
    if (rest == "N") {
        if (p <= b.frobenius()) throw std::invalid_argument(s + " is not contained in P");
        return TailSet::tail(p);
    }
    throw std::invalid_argument("cannot parse ideal '" + s + "'");
}

GridIdeal parse_ideal_atom(const GridMonoid& b, const std::string& s) {
    if (s == "empty") return GridIdeal{};
    if (!ends_with(s, "+P")) throw std::invalid_argument("grid ideals are written (v)+P, got '" + s + "'");
    auto v = parse_element(b, s.substr(0, s.size() - 2));
    if (!b.in_P(v)) throw std::invalid_argument("corner " + b.format(v) + " is not in P");
    return GridIdeal{false, v};
}

PrefixIdeal parse_ideal_atom(const FreeMonoid& b, const std::string& s) {
    if (s == "empty") return PrefixIdeal{};
    if (s.size() < 2 || s.back() != 'P') throw std::invalid_argument("free ideals are written wP, got '" + s + "'");
    auto w = b.parse(s.substr(0, s.size() - 1));
    if (!b.in_P(w)) throw std::invalid_argument("generator " + b.format(w) + " is not a positive word");
    return b.principal(w);
}

Lattice parse_ideal_atom(const OrderMultMonoid& b, const std::string& s) { return parse_lattice(b.ring(), s); }

CosetIdeal parse_ideal_atom(const AxbMonoid& b, const std::string& s) {
    if (s == "empty") return CosetIdeal{};
    if (s.front() == '(' && ends_with(s, "P")) {
        auto g = parse_element(b, s.substr(0, s.size() - 1));
        if (!b.in_P(g)) throw std::invalid_argument("generator " + b.format(g) + " is not in P");
        return b.principal(g);
    }
    auto plus = find_top_level(s, '+');
    if (plus == std::string::npos) throw std::invalid_argument("ax+b ideals are written r+L or (b,a)P, got '" + s + "'");
    FieldElement r = parse_field(b.ring(), s.substr(0, plus));
    Lattice l = parse_lattice(b.ring(), s.substr(plus + 1));
    if (!b.ring().in_order(r)) throw std::invalid_argument("offset " + format_field(b.ring(), r) + " is not in O");
    return b.make_ideal(r, l);
}

}  // namespace crideal::cli
