#include "sheafbetti/surface.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sheafbetti/errors.hpp"

namespace sheafbetti {

namespace {

void check_rank(const Surface& s, const DivisorClass& l) {
    if (l.rank() != s.picard_rank()) {
        std::ostringstream msg;
        msg << "divisor class (" << l.to_string() << ") has " << l.rank() << " coordinates but "
            << s.display_name() << " has Picard rank " << s.picard_rank();
        throw DomainError(msg.str());
    }
}

void require_effective_nonzero(const Surface& s, const DivisorClass& l, const char* op) {
    if (!is_effective(s, l) || l.is_zero()) {
        throw DomainError(std::string(op) + ": class (" + l.to_string() + ") is not effective and nonzero on " +
                          s.display_name());
    }
}

}  // namespace

bool DivisorClass::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](std::int64_t c) { return c == 0; });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    if (other.rank() != rank()) throw DomainError("adding divisor classes of different rank");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
    if (other.rank() != rank()) throw DomainError("subtracting divisor classes of different rank");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
    return *this;
}

DivisorClass operator*(std::int64_t n, DivisorClass c) {
    for (auto& x : c.coords) x *= n;
    return c;
}

std::string DivisorClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords[i]);
    }
    return out;
}

DivisorClass DivisorClass::parse(std::string_view text) {
    DivisorClass out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (!token.empty() && token.front() == '+') token.remove_prefix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw DomainError("cannot parse divisor class '" + std::string(text) + "'");
        }
        out.coords.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

Surface::Surface(SurfaceKind kind, int e) : kind_(kind), e_(e) {
    if (kind == SurfaceKind::ProjectivePlane) {
        canonical_ = DivisorClass{-3};
    } else {
        canonical_ = DivisorClass{-2, -(e + 2)};
    }
}

Surface Surface::projective_plane() { return Surface(SurfaceKind::ProjectivePlane, 0); }

Surface Surface::hirzebruch(int e) {
    if (e != 0 && e != 1) {
        throw DomainError("unsupported surface F_" + std::to_string(e) + ": only F_0 and F_1 are modelled");
    }
    return Surface(SurfaceKind::Hirzebruch, e);
}

Surface Surface::parse(std::string_view id) {
    std::string lower(id);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "p2") return projective_plane();
    if (lower.size() >= 2 && lower[0] == 'f') {
        int e = 0;
        const auto [ptr, ec] = std::from_chars(lower.data() + 1, lower.data() + lower.size(), e);
        if (ec == std::errc{} && ptr == lower.data() + lower.size()) return hirzebruch(e);
    }
    throw DomainError("unknown surface '" + std::string(id) + "' (expected p2, f0 or f1)");
}

std::string Surface::id() const {
    return kind_ == SurfaceKind::ProjectivePlane ? "p2" : "f" + std::to_string(e_);
}

std::string Surface::display_name() const {
    return kind_ == SurfaceKind::ProjectivePlane ? "P^2" : "F_" + std::to_string(e_);
}

std::vector<DivisorClass> Surface::basis() const {
    if (kind_ == SurfaceKind::ProjectivePlane) return {DivisorClass{1}};
    return {DivisorClass{1, 0}, DivisorClass{0, 1}};
}

std::int64_t intersect(const Surface& s, const DivisorClass& l1, const DivisorClass& l2) {
    check_rank(s, l1);
    check_rank(s, l2);
    if (s.kind() == SurfaceKind::ProjectivePlane) return l1.coords[0] * l2.coords[0];
    const auto a1 = l1.coords[0], b1 = l1.coords[1];
    const auto a2 = l2.coords[0], b2 = l2.coords[1];
    return -static_cast<std::int64_t>(s.e()) * a1 * a2 + a1 * b2 + a2 * b1;
}

DivisorClass canonical_class(const Surface& s) { return s.canonical(); }

std::int64_t euler_characteristic(const Surface& s, const DivisorClass& l) {
    const auto twice = self_intersection(s, l) - intersect(s, s.canonical(), l);
    return 1 + twice / 2;
}

std::int64_t arithmetic_genus(const Surface& s, const DivisorClass& l) {
    const auto twice = self_intersection(s, l) + intersect(s, s.canonical(), l);
    return 1 + twice / 2;
}

bool is_effective(const Surface& s, const DivisorClass& l) {
    check_rank(s, l);
    return std::all_of(l.coords.begin(), l.coords.end(), [](std::int64_t c) { return c >= 0; });
}

bool precedes_or_equal(const Surface& s, const DivisorClass& l1, const DivisorClass& l2) {
    return is_effective(s, l2 - l1);
}

PrimitivePart primitive_part(const Surface& s, const DivisorClass& l) {
    check_rank(s, l);
    if (l.is_zero()) throw DomainError("primitive part of the trivial class is undefined");
    std::int64_t n = 0;
    for (auto c : l.coords) n = std::gcd(n, c);
    DivisorClass prim = l;
    for (auto& c : prim.coords) c /= n;
    return {n, std::move(prim)};
}

bool is_primitive(const Surface& s, const DivisorClass& l) { return primitive_part(s, l).multiplicity == 1; }

bool has_integral_member(const Surface& s, const DivisorClass& l) {
    require_effective_nonzero(s, l, "has_integral_member");
    if (s.kind() == SurfaceKind::ProjectivePlane) return l.coords[0] >= 1;
    const auto a = l.coords[0], b = l.coords[1];
    if (a == 0) return b == 1;
    if (a == 1) return true;
    if (s.e() == 0) return b >= 1;
    return b >= a * s.e();
}

std::vector<DivisorClass> sub_effective_classes(const Surface& s, const DivisorClass& l) {
    if (!is_effective(s, l)) {
        throw DomainError("sub_effective_classes: class (" + l.to_string() + ") is not effective");
    }
    std::vector<DivisorClass> out;
    if (s.kind() == SurfaceKind::ProjectivePlane) {
        for (std::int64_t d = 1; d <= l.coords[0]; ++d) out.push_back(DivisorClass{d});
        return out;
    }
    for (std::int64_t a = 0; a <= l.coords[0]; ++a) {
        for (std::int64_t b = 0; b <= l.coords[1]; ++b) {
            if (a == 0 && b == 0) continue;
            out.push_back(DivisorClass{a, b});
        }
    }
    return out;
}

bool is_kx_negative(const Surface& s, const DivisorClass& l) {
    require_effective_nonzero(s, l, "is_kx_negative");
    const auto subs = sub_effective_classes(s, l);
    return std::all_of(subs.begin(), subs.end(),
                       [&](const DivisorClass& sub) { return intersect(s, s.canonical(), sub) < 0; });
}

}  // namespace sheafbetti
