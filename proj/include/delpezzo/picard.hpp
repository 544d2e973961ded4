#pragma once

// Picard lattices of strong del Pezzo surfaces: the blow-up of P^2 in r <= 6
// general points (basis l, e_1..e_r) and the quadric P^1 x P^1 (basis h, m).
// Everything here is exact integer arithmetic on coefficient vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "delpezzo/error.hpp"

namespace delpezzo {

using Coeff = std::int64_t;
// Compare against Rational(k), not int literals: the mixed-type comparison
// templates of boost 1.74 recurse under C++20 rewritten operators.
using Rational = boost::rational<Coeff>;

enum class SurfaceKind { BlowUp, Quadric };

class SurfaceModel {
public:
    static SurfaceModel blow_up(int points);
    static SurfaceModel quadric();

    /// X0..X6 followed by Q.
    static std::vector<SurfaceModel> all();

    SurfaceKind kind() const noexcept { return kind_; }
    bool is_blow_up() const noexcept { return kind_ == SurfaceKind::BlowUp; }
    bool is_quadric() const noexcept { return kind_ == SurfaceKind::Quadric; }

    /// Number of blown-up points; 0 for the quadric.
    int points() const noexcept { return points_; }

    /// H^2 = K^2.
    int degree() const noexcept { return is_quadric() ? 8 : 9 - points_; }

    int rank() const noexcept { return is_quadric() ? 2 : points_ + 1; }

    /// "X0".."X6" or "Q".
    std::string name() const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;

private:
    SurfaceModel(SurfaceKind kind, int points) : kind_(kind), points_(points) {}

    SurfaceKind kind_;
    int points_;
};

// A linear-equivalence class, stored as coefficients in the surface's basis:
// BlowUp: (a, c_1, ..., c_r) for a*l + sum c_i*e_i. The classical writing
// a*l - sum b_i*e_i has b_i = -c_i; see multiplicities().
// Quadric: (alpha, beta) for alpha*h + beta*m.
class DivisorClass {
public:
    DivisorClass(SurfaceModel surface, std::vector<Coeff> coeffs);

    static DivisorClass zero(const SurfaceModel& surface);
    static DivisorClass basis(const SurfaceModel& surface, std::size_t index);

    // Named generators.
    static DivisorClass l(const SurfaceModel& surface);
    static DivisorClass e(const SurfaceModel& surface, int i);
    static DivisorClass h(const SurfaceModel& surface);
    static DivisorClass m(const SurfaceModel& surface);

    const SurfaceModel& surface() const noexcept { return surface_; }
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    Coeff operator[](std::size_t i) const { return coeffs_.at(i); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    bool is_zero() const noexcept;

    DivisorClass operator-() const;
    DivisorClass& operator+=(const DivisorClass& other);
    DivisorClass& operator-=(const DivisorClass& other);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(Coeff k, const DivisorClass& d);

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.surface_ == b.surface_ && a.coeffs_ == b.coeffs_;
    }
    // Lexicographic on coefficients; only meaningful on one surface.
    friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
        return a.coeffs_ <=> b.coeffs_;
    }

private:
    SurfaceModel surface_;
    std::vector<Coeff> coeffs_;
};

struct DivisorHash {
    std::size_t operator()(const DivisorClass& d) const noexcept;
};

/// Intersection pairing. BlowUp: l^2 = 1, e_i^2 = -1, all mixed products 0.
/// Quadric: h^2 = m^2 = 0, h.m = 1.
Coeff intersect(const DivisorClass& d, const DivisorClass& e);

Coeff self_intersection(const DivisorClass& d);

DivisorClass canonical_class(const SurfaceModel& surface);

/// The very ample anticanonical class H = -K.
DivisorClass hyperplane(const SurfaceModel& surface);

/// D.H, the degree of D in the anticanonical embedding.
Coeff degree(const DivisorClass& d);

/// p_a(D) = (D^2 - D.H)/2 + 1.
Rational arithmetic_genus(const DivisorClass& d);

/// Riemann-Roch: chi(D) = D.(D+H)/2 + 1.
Coeff euler_characteristic(const DivisorClass& d);

/// Coefficient of l (BlowUp only).
Coeff line_coefficient(const DivisorClass& d);

/// The multiplicities b_i of D = a*l - sum b_i*e_i (BlowUp only).
std::vector<Coeff> multiplicities(const DivisorClass& d);

/// Builds a*l - sum b_i*e_i on a blow-up.
DivisorClass from_multiplicities(const SurfaceModel& surface, Coeff a, std::span<const Coeff> b);

/// Gram matrix of the pairing in the surface's basis.
std::vector<std::vector<Coeff>> gram_matrix(const SurfaceModel& surface);

// Ruled-surface coordinates on X1: D = section*C0 + fibre*f with C0 = e1,
// f = l - e1.
struct RuledCoords {
    Coeff section = 0;
    Coeff fibre = 0;

    friend bool operator==(const RuledCoords&, const RuledCoords&) = default;
};

RuledCoords to_ruled(const DivisorClass& d);
DivisorClass from_ruled(const RuledCoords& c);

namespace detail {

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

}  // namespace detail

}  // namespace delpezzo
