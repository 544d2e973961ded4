#include "delpezzo/geometry.hpp"

#include <algorithm>
#include <array>

namespace delpezzo {

std::string LineLabel::to_string() const {
    switch (kind) {
        case Kind::E: return "E(" + std::to_string(i) + ")";
        case Kind::F: return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::G: return j == 0 ? std::string("G") : "G(" + std::to_string(j) + ")";
    }
    return "?";
}

std::vector<LineClass> enumerate_lines(const SurfaceModel& surface) {
    std::vector<LineClass> out;
    if (surface.is_quadric()) return out;
    const int r = surface.points();
    const DivisorClass l = DivisorClass::l(surface);

    for (int i = 1; i <= r; ++i) out.push_back({DivisorClass::e(surface, i), {LineLabel::Kind::E, i, 0}});
    for (int i = 1; i <= r; ++i) {
        for (int j = i + 1; j <= r; ++j) {
            out.push_back({l - DivisorClass::e(surface, i) - DivisorClass::e(surface, j), {LineLabel::Kind::F, i, j}});
        }
    }
    if (r == 5) {
        DivisorClass g = 2 * l;
        for (int i = 1; i <= 5; ++i) g -= DivisorClass::e(surface, i);
        out.push_back({g, {LineLabel::Kind::G, 0, 0}});
    }
    if (r == 6) {
        for (int j = 1; j <= 6; ++j) {
            DivisorClass g = 2 * l;
            for (int i = 1; i <= 6; ++i) {
                if (i != j) g -= DivisorClass::e(surface, i);
            }
            out.push_back({g, {LineLabel::Kind::G, 0, j}});
        }
    }
    return out;
}

int expected_line_count(const SurfaceModel& surface) {
    if (surface.is_quadric()) return 0;
    const int r = surface.points();
    const int c2 = r * (r - 1) / 2;
    const int c5 = r == 5 ? 1 : (r == 6 ? 6 : 0);
    return r + c2 + c5;
}

namespace {

// For r >= 2 the effective cone is spanned by the (-1)-lines. If D.L < 0 then L
// is a fixed component, so it is split off. Once D.L >= 0 for every line D is
// nef, hence D^2 >= 0 and D.H >= 0; Riemann-Roch gives h^0(D) >= chi(D) >= 1
// since h^2(D) = h^0(K - D) = 0 as (K - D).H < 0.
bool line_cone_contains(DivisorClass d, const std::vector<LineClass>& lines) {
    while (true) {
        if (d.is_zero()) return true;
        if (degree(d) <= 0) return false;
        auto negative = std::find_if(lines.begin(), lines.end(),
                                     [&](const LineClass& line) { return intersect(d, line.divisor) < 0; });
        if (negative == lines.end()) return true;
        d -= negative->divisor;
    }
}

bool positive_against_lines(const DivisorClass& d, bool strict) {
    for (const auto& line : enumerate_lines(d.surface())) {
        const Coeff v = intersect(d, line.divisor);
        if (strict ? v <= 0 : v < 0) return false;
    }
    return true;
}

}  // namespace

bool is_effective(const DivisorClass& d) {
    const SurfaceModel& s = d.surface();
    if (s.is_quadric()) return d[0] >= 0 && d[1] >= 0;
    if (s.points() == 0) return d[0] >= 0;
    if (s.points() == 1) {
        const DivisorClass l = DivisorClass::l(s);
        const DivisorClass f = l - DivisorClass::e(s, 1);
        return intersect(d, f) >= 0 && intersect(d, l) >= 0;
    }
    return line_cone_contains(d, enumerate_lines(s));
}

bool is_very_ample(const DivisorClass& d) {
    const SurfaceModel& s = d.surface();
    require(s.is_blow_up() && s.points() >= 1, ErrorKind::UnsupportedSurface,
            "the very-ampleness criterion covers blow-ups with 1 <= r <= 6, not " + s.name());
    if (s.points() == 1) {
        const DivisorClass e1 = DivisorClass::e(s, 1);
        return intersect(d, e1) > 0 && intersect(d, DivisorClass::l(s) - e1) > 0;
    }
    return positive_against_lines(d, true);
}

bool has_smooth_nonline_member(const DivisorClass& d) {
    require(!d.is_zero(), ErrorKind::PreconditionViolated, "the smoothness criterion needs a nonzero class");
    require(is_effective(d), ErrorKind::PreconditionViolated, "the smoothness criterion needs an effective class");
    return positive_against_lines(d, false);
}

namespace {

std::vector<DivisorClass> base_from(const DivisorClass& line, const std::vector<DivisorClass>& e) {
    static constexpr std::array<Coeff, 7> kLineCoeff{1, 1, 2, 2, 2, 3, 3};
    std::vector<DivisorClass> out;
    out.push_back(line);
    DivisorClass tail = DivisorClass::zero(line.surface());
    for (std::size_t i = 1; i <= e.size(); ++i) {
        tail -= e[i - 1];
        out.push_back(kLineCoeff[i] * line + tail);
    }
    return out;
}

void require_base_range(const SurfaceModel& surface) {
    require(surface.is_blow_up() && surface.points() >= 2, ErrorKind::UnsupportedSurface,
            "the alternative base is defined for blow-ups with 2 <= r <= 6, not " + surface.name());
}

}  // namespace

std::vector<DivisorClass> alternative_base(const SurfaceModel& surface) {
    require_base_range(surface);
    return ExceptionalFrame::standard(surface).alternative_base();
}

ExceptionalFrame ExceptionalFrame::standard(const SurfaceModel& surface) {
    require(surface.is_blow_up(), ErrorKind::SurfaceMismatch, "frames exist only on blow-ups");
    ExceptionalFrame frame{DivisorClass::l(surface), {}};
    for (int i = 1; i <= surface.points(); ++i) frame.exceptional.push_back(DivisorClass::e(surface, i));
    return frame;
}

std::vector<DivisorClass> ExceptionalFrame::alternative_base() const { return base_from(line, exceptional); }

std::optional<std::vector<int>> ExceptionalFrame::as_permutation() const {
    const SurfaceModel& s = line.surface();
    if (line != DivisorClass::l(s)) return std::nullopt;
    std::vector<int> perm;
    for (const auto& e : exceptional) {
        int found = 0;
        for (int j = 1; j <= s.points(); ++j) {
            if (e == DivisorClass::e(s, j)) found = j;
        }
        if (found == 0) return std::nullopt;
        perm.push_back(found);
    }
    return perm;
}

DivisorClass BaseDecomposition::reconstruct() const {
    const auto base = frame.alternative_base();
    DivisorClass out = DivisorClass::zero(frame.line.surface());
    for (std::size_t i = 0; i < base.size(); ++i) out += alphas.at(i) * base[i];
    return out;
}

namespace {

// Extends `chosen` to `target` mutually skew lines, trying lines in label order.
bool extend_skew(const std::vector<LineClass>& lines, std::vector<DivisorClass>& chosen, std::size_t target,
                 std::size_t start) {
    if (chosen.size() == target) return true;
    for (std::size_t k = start; k < lines.size(); ++k) {
        const auto& cand = lines[k].divisor;
        const bool skew = std::all_of(chosen.begin(), chosen.end(),
                                      [&](const DivisorClass& c) { return intersect(c, cand) == 0; });
        if (!skew) continue;
        chosen.push_back(cand);
        if (extend_skew(lines, chosen, target, k + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

ExceptionalFrame min_line_frame(const DivisorClass& d) {
    const SurfaceModel& s = d.surface();
    const int r = s.points();
    const auto lines = enumerate_lines(s);

    auto argmin = [&](auto&& admissible) {
        std::optional<std::size_t> best;
        for (std::size_t k = 0; k < lines.size(); ++k) {
            if (!admissible(lines[k].divisor)) continue;
            if (!best || intersect(d, lines[k].divisor) < intersect(d, lines[*best].divisor)) best = k;
        }
        require(best.has_value(), ErrorKind::InternalError, "no admissible line for the min-line frame");
        return *best;
    };
    const DivisorClass last = lines[argmin([](const DivisorClass&) { return true; })].divisor;
    const DivisorClass second = lines[argmin([&](const DivisorClass& c) { return intersect(c, last) == 0; })].divisor;

    std::vector<DivisorClass> chosen{last, second};
    require(extend_skew(lines, chosen, static_cast<std::size_t>(r), 0), ErrorKind::InternalError,
            "could not complete two skew lines to an exceptional configuration");

    std::vector<DivisorClass> rest(chosen.begin() + 2, chosen.end());
    std::stable_sort(rest.begin(), rest.end(), [&](const DivisorClass& x, const DivisorClass& y) {
        return intersect(d, x) > intersect(d, y);
    });

    ExceptionalFrame frame{DivisorClass::zero(s), rest};
    frame.exceptional.push_back(second);
    frame.exceptional.push_back(last);

    // K = -3l' + sum e'_i, so 3l' = H + sum e'_i.
    DivisorClass three_l = hyperplane(s);
    for (const auto& e : frame.exceptional) three_l += e;
    std::vector<Coeff> c(three_l.coeffs().begin(), three_l.coeffs().end());
    for (auto& v : c) {
        require(v % 3 == 0, ErrorKind::InternalError, "skew lines do not form an exceptional configuration");
        v /= 3;
    }
    frame.line = DivisorClass(s, std::move(c));
    return frame;
}

}  // namespace

BaseDecomposition decompose(const DivisorClass& d) {
    const SurfaceModel& s = d.surface();
    require_base_range(s);
    const int r = s.points();

    ExceptionalFrame frame = ExceptionalFrame::standard(s);
    if (r <= 4) {
        std::stable_sort(frame.exceptional.begin(), frame.exceptional.end(),
                         [&](const DivisorClass& x, const DivisorClass& y) { return intersect(d, x) > intersect(d, y); });
    } else {
        frame = min_line_frame(d);
    }

    const Coeff a = intersect(d, frame.line);
    std::vector<Coeff> b;
    for (const auto& e : frame.exceptional) b.push_back(intersect(d, e));

    std::vector<Coeff> alphas(r + 1, 0);
    alphas[0] = a - b[0] - b[1] - (r >= 5 ? b[4] : 0);
    for (int i = 1; i < r; ++i) alphas[i] = b[i - 1] - b[i];
    alphas[r] = b[r - 1];

    BaseDecomposition out{std::move(frame), std::move(alphas)};
    require(out.reconstruct() == d, ErrorKind::InternalError, "base decomposition does not reconstruct its input");
    return out;
}

}  // namespace delpezzo
