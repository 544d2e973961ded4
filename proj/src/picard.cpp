#include "delpezzo/picard.hpp"

#include <algorithm>

namespace delpezzo {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
        case ErrorKind::UnsupportedSurface: return "UnsupportedSurface";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::NotFound: return "NotFound";
        case ErrorKind::InternalError: return "InternalError";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

namespace detail {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in addition");
    return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
    return out;
}

}  // namespace detail

using detail::checked_add;
using detail::checked_mul;

SurfaceModel SurfaceModel::blow_up(int points) {
    require(points >= 0 && points <= 6, ErrorKind::UnsupportedSurface,
            "blow-ups of P2 are strong del Pezzo only for 0 <= r <= 6, got r = " + std::to_string(points));
    return SurfaceModel(SurfaceKind::BlowUp, points);
}

SurfaceModel SurfaceModel::quadric() { return SurfaceModel(SurfaceKind::Quadric, 0); }

std::vector<SurfaceModel> SurfaceModel::all() {
    std::vector<SurfaceModel> out;
    for (int r = 0; r <= 6; ++r) out.push_back(blow_up(r));
    out.push_back(quadric());
    return out;
}

std::string SurfaceModel::name() const {
    return is_quadric() ? std::string("Q") : "X" + std::to_string(points_);
}

DivisorClass::DivisorClass(SurfaceModel surface, std::vector<Coeff> coeffs)
    : surface_(surface), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == static_cast<std::size_t>(surface_.rank()), ErrorKind::PreconditionViolated,
            "coefficient vector of length " + std::to_string(coeffs_.size()) + " does not match Picard rank " +
                std::to_string(surface_.rank()) + " of " + surface_.name());
}

DivisorClass DivisorClass::zero(const SurfaceModel& surface) {
    return DivisorClass(surface, std::vector<Coeff>(surface.rank(), 0));
}

DivisorClass DivisorClass::basis(const SurfaceModel& surface, std::size_t index) {
    require(index < static_cast<std::size_t>(surface.rank()), ErrorKind::PreconditionViolated,
            "basis index out of range");
    std::vector<Coeff> c(surface.rank(), 0);
    c[index] = 1;
    return DivisorClass(surface, std::move(c));
}

DivisorClass DivisorClass::l(const SurfaceModel& surface) {
    require(surface.is_blow_up(), ErrorKind::SurfaceMismatch, "l is only defined on blow-ups");
    return basis(surface, 0);
}

DivisorClass DivisorClass::e(const SurfaceModel& surface, int i) {
    require(surface.is_blow_up() && i >= 1 && i <= surface.points(), ErrorKind::SurfaceMismatch,
            "e" + std::to_string(i) + " is not defined on " + surface.name());
    return basis(surface, static_cast<std::size_t>(i));
}

DivisorClass DivisorClass::h(const SurfaceModel& surface) {
    require(surface.is_quadric(), ErrorKind::SurfaceMismatch, "h is only defined on the quadric");
    return basis(surface, 0);
}

DivisorClass DivisorClass::m(const SurfaceModel& surface) {
    require(surface.is_quadric(), ErrorKind::SurfaceMismatch, "m is only defined on the quadric");
    return basis(surface, 1);
}

bool DivisorClass::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c == 0; });
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass out = *this;
    for (auto& c : out.coeffs_) c = checked_mul(c, -1);
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
    require(surface_ == other.surface_, ErrorKind::SurfaceMismatch, "adding classes on different surfaces");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) { return *this += -other; }

DivisorClass operator*(Coeff k, const DivisorClass& d) {
    DivisorClass out = d;
    for (auto& c : out.coeffs_) c = checked_mul(k, c);
    return out;
}

std::size_t DivisorHash::operator()(const DivisorClass& d) const noexcept {
    std::size_t seed = static_cast<std::size_t>(d.surface().rank()) * 31u + (d.surface().is_quadric() ? 7u : 0u);
    for (Coeff c : d.coeffs()) {
        seed ^= std::hash<Coeff>{}(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
}

Coeff intersect(const DivisorClass& d, const DivisorClass& e) {
    require(d.surface() == e.surface(), ErrorKind::SurfaceMismatch,
            "intersecting classes on " + d.surface().name() + " and " + e.surface().name());
    if (d.surface().is_quadric()) {
        return checked_add(checked_mul(d[0], e[1]), checked_mul(d[1], e[0]));
    }
    Coeff out = checked_mul(d[0], e[0]);
    for (std::size_t i = 1; i < d.size(); ++i) out = checked_add(out, -checked_mul(d[i], e[i]));
    return out;
}

Coeff self_intersection(const DivisorClass& d) { return intersect(d, d); }

DivisorClass canonical_class(const SurfaceModel& surface) {
    if (surface.is_quadric()) return DivisorClass(surface, {-2, -2});
    std::vector<Coeff> c(surface.rank(), 1);
    c[0] = -3;
    return DivisorClass(surface, std::move(c));
}

DivisorClass hyperplane(const SurfaceModel& surface) { return -canonical_class(surface); }

Coeff degree(const DivisorClass& d) { return intersect(d, hyperplane(d.surface())); }

Rational arithmetic_genus(const DivisorClass& d) {
    return Rational(checked_add(self_intersection(d), -degree(d)), 2) + 1;
}

Coeff euler_characteristic(const DivisorClass& d) {
    const Coeff twice = intersect(d, d + hyperplane(d.surface()));
    require(twice % 2 == 0, ErrorKind::InternalError, "D.(D+H) is odd; the pairing is not even on K");
    return twice / 2 + 1;
}

Coeff line_coefficient(const DivisorClass& d) {
    require(d.surface().is_blow_up(), ErrorKind::SurfaceMismatch, "line coefficient needs a blow-up");
    return d[0];
}

std::vector<Coeff> multiplicities(const DivisorClass& d) {
    require(d.surface().is_blow_up(), ErrorKind::SurfaceMismatch, "multiplicities need a blow-up");
    std::vector<Coeff> b;
    b.reserve(d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i) b.push_back(-d[i]);
    return b;
}

DivisorClass from_multiplicities(const SurfaceModel& surface, Coeff a, std::span<const Coeff> b) {
    require(surface.is_blow_up() && b.size() == static_cast<std::size_t>(surface.points()),
            ErrorKind::PreconditionViolated, "multiplicity vector does not match " + surface.name());
    std::vector<Coeff> c{a};
    for (Coeff bi : b) c.push_back(-bi);
    return DivisorClass(surface, std::move(c));
}

std::vector<std::vector<Coeff>> gram_matrix(const SurfaceModel& surface) {
    const int n = surface.rank();
    std::vector<std::vector<Coeff>> g(n, std::vector<Coeff>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g[i][j] = intersect(DivisorClass::basis(surface, i), DivisorClass::basis(surface, j));
        }
    }
    return g;
}

RuledCoords to_ruled(const DivisorClass& d) {
    require(d.surface() == SurfaceModel::blow_up(1), ErrorKind::SurfaceMismatch,
            "ruled coordinates exist only on X1, got " + d.surface().name());
    // a*l + c*e1 = beta*l - (beta - alpha)*e1  =>  beta = a, alpha = a + c
    return RuledCoords{checked_add(d[0], d[1]), d[0]};
}

DivisorClass from_ruled(const RuledCoords& c) {
    return DivisorClass(SurfaceModel::blow_up(1), {c.fibre, checked_add(c.section, -c.fibre)});
}

}  // namespace delpezzo
