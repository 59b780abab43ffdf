#ifndef SHEAFBETTI_SURFACE_HPP
#define SHEAFBETTI_SURFACE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sheafbetti {

/// A line bundle class written in the Picard basis of its surface.
///
/// On the projective plane the basis is {H}, so a class is (d). On a
/// Hirzebruch surface the basis is {sigma, f} with sigma the negative
/// section and f the fiber, so a class is (a, b) meaning a*sigma + b*f.
struct DivisorClass {
    std::vector<std::int64_t> coords;

    DivisorClass() = default;
    DivisorClass(std::initializer_list<std::int64_t> c) : coords(c) {}
    explicit DivisorClass(std::vector<std::int64_t> c) : coords(std::move(c)) {}

    std::size_t rank() const noexcept { return coords.size(); }
    bool is_zero() const noexcept;

    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
    friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }
    friend DivisorClass operator*(std::int64_t n, DivisorClass c);

    // Lexicographic on coordinates.
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    // "d" or "a,b"
    std::string to_string() const;
    static DivisorClass parse(std::string_view text);
};

enum class SurfaceKind { ProjectivePlane, Hirzebruch };

/// P^2 or a Hirzebruch surface F_e with e in {0, 1}.
class Surface {
public:
    static Surface projective_plane();
    // Throws DomainError for e outside {0, 1}.
    static Surface hirzebruch(int e);
    // Accepts "p2", "f0", "f1".
    static Surface parse(std::string_view id);

    SurfaceKind kind() const noexcept { return kind_; }
    int e() const noexcept { return e_; }
    std::size_t picard_rank() const noexcept { return kind_ == SurfaceKind::ProjectivePlane ? 1 : 2; }
    std::string id() const;
    std::string display_name() const;

    const DivisorClass& canonical() const noexcept { return canonical_; }
    // (b0, b2, b4) of the surface itself.
    std::array<int, 3> betti() const noexcept { return {1, static_cast<int>(picard_rank()), 1}; }
    // Basis classes: {H} or {sigma, f}.
    std::vector<DivisorClass> basis() const;

    friend bool operator==(const Surface& a, const Surface& b) { return a.kind_ == b.kind_ && a.e_ == b.e_; }

private:
    Surface(SurfaceKind kind, int e);

    SurfaceKind kind_;
    int e_;
    DivisorClass canonical_;
};

// Intersection pairing. Throws DomainError on a coordinate/basis mismatch.
std::int64_t intersect(const Surface& s, const DivisorClass& l1, const DivisorClass& l2);
inline std::int64_t self_intersection(const Surface& s, const DivisorClass& l) { return intersect(s, l, l); }

DivisorClass canonical_class(const Surface& s);

// Riemann-Roch: 1 + (L^2 - K.L)/2.
std::int64_t euler_characteristic(const Surface& s, const DivisorClass& l);

// 1 + (L^2 + K.L)/2.
std::int64_t arithmetic_genus(const Surface& s, const DivisorClass& l);

// Effective cone: d >= 0 on P^2, a >= 0 and b >= 0 on F_e.
bool is_effective(const Surface& s, const DivisorClass& l);

struct PrimitivePart {
    std::int64_t multiplicity;  // n, the gcd of the coordinates
    DivisorClass primitive;     // L' with L = n L'
};

// Throws DomainError on the zero class.
PrimitivePart primitive_part(const Surface& s, const DivisorClass& l);
bool is_primitive(const Surface& s, const DivisorClass& l);

/// Whether |L| contains an integral (reduced, irreducible) curve.
///
/// P^2: d >= 1. F_e: f itself, any sigma + b f with b >= 0, and for
/// a >= 2 the classes with b >= a e (and b >= 1 when e = 0). Classes b f
/// with b >= 2 and a sigma with a >= 2 are always unions of curves.
/// Throws DomainError when L is not effective and nonzero.
bool has_integral_member(const Surface& s, const DivisorClass& l);

// All L' with 0 < L' <= L, lexicographically ascending. Includes L itself.
std::vector<DivisorClass> sub_effective_classes(const Surface& s, const DivisorClass& l);

// K.L' < 0 for every 0 < L' <= L. Throws DomainError for non-effective L.
bool is_kx_negative(const Surface& s, const DivisorClass& l);

// L1 <= L2, i.e. L2 - L1 effective.
bool precedes_or_equal(const Surface& s, const DivisorClass& l1, const DivisorClass& l2);

}  // namespace sheafbetti

#endif  // SHEAFBETTI_SURFACE_HPP
