#include "delpezzo/wild.hpp"

#include "delpezzo/acm.hpp"
#include "delpezzo/divisor_text.hpp"

namespace delpezzo {

Coeff intersection_upper_bound(Coeff c, Coeff d, Coeff m, Coeff n) {
    require(m >= 1 && c >= 1 && d >= 1 && n >= 1, ErrorKind::PreconditionViolated,
            "upper bound needs m, c, d, n >= 1");
    require((m - 1) * n < c + d && c + d <= m * n, ErrorKind::PreconditionViolated,
            "c + d = " + std::to_string(c + d) + " outside the window ((m-1)n, mn] for m = " + std::to_string(m));
    return 2 + (m - 1) * (c + d) - m * (m - 1) * n / 2;
}

Coeff intersection_lower_bound(Coeff c, Coeff d) {
    require(c >= 1 && d >= 1, ErrorKind::PreconditionViolated, "lower bound needs c, d >= 1");
    return std::min(c, d) - 2;
}

namespace {

void require_maximal_acm(const DivisorClass& x) {
    require(is_acm_initialized(x) && degree(x) == x.surface().degree(), ErrorKind::PreconditionViolated,
            format_divisor(x) + " is not an initialized ACM class of maximal degree " +
                std::to_string(x.surface().degree()));
}

}  // namespace

ExtDimensions ext1_dimension(const DivisorClass& c, const DivisorClass& d) {
    require(c.surface() == d.surface(), ErrorKind::SurfaceMismatch, "Ext between different surfaces");
    require(c != d, ErrorKind::NotApplicable, "Ext dimension formula needs distinct classes");
    require_maximal_acm(c);
    require_maximal_acm(d);
    const Coeff ext1 = 1 + intersect(c, d) - c.surface().degree();
    require(ext1 >= 0, ErrorKind::InternalError, "negative Ext^1 dimension");
    return ExtDimensions{0, ext1, 0};
}

Coeff ext1_dimension_vs_rank2(const DivisorClass& r, const DivisorClass& c, const DivisorClass& d) {
    require(r != c && r != d && c != d, ErrorKind::NotApplicable, "R, C, D must be pairwise distinct");
    for (const auto* x : {&r, &c, &d}) {
        require(x->surface() == r.surface(), ErrorKind::SurfaceMismatch, "classes on different surfaces");
        require_maximal_acm(*x);
    }
    return 2 - 2 * Coeff{r.surface().degree()} + intersect(c, r) + intersect(d, r);
}

std::array<Coeff, 6> WildPair::relation_block() const {
    const Coeff n = c.surface().degree();
    return {1 + intersect(c, e) - n, 1 + intersect(d, f) - n, 1 + intersect(c, d) - n,
            1 + intersect(e, f) - n, 1 + intersect(d, e) - n, 1 + intersect(c, f) - n};
}

WildPair make_wild_pair(const DivisorClass& c, const DivisorClass& d) {
    const DivisorClass two_h = 2 * hyperplane(c.surface());
    return WildPair{c, d, two_h - c, two_h - d};
}

std::vector<WildPair> wild_pair_hits(const SurfaceModel& surface) {
    std::vector<DivisorClass> maximal;
    for (auto& x : enumerate_acm(surface)) {
        if (degree(x) == surface.degree()) maximal.push_back(std::move(x));
    }
    std::vector<WildPair> hits;
    const Coeff target = 1 + surface.degree();
    for (const auto& c : maximal) {
        for (const auto& d : maximal) {
            if (c != d && intersect(c, d) == target) hits.push_back(make_wild_pair(c, d));
        }
    }
    return hits;
}

WildPair find_wild_pair(const SurfaceModel& surface) {
    auto hits = wild_pair_hits(surface);
    require(!hits.empty(), ErrorKind::NotFound,
            "no pair of maximal-degree ACM classes with C.D = 1 + d on " + surface.name());
    return hits.front();
}

std::string to_string(PlanShape shape) {
    switch (shape) {
        case PlanShape::Rank2: return "Rank2";
        case PlanShape::Odd: return "Odd";
        case PlanShape::Even: return "Even";
    }
    return "?";
}

FamilyPlan family_plan(const SurfaceModel& surface, int rank) {
    require(surface.degree() <= 6, ErrorKind::UnsupportedSurface,
            "higher-rank families are constructed on surfaces of degree <= 6, " + surface.name() + " has degree " +
                std::to_string(surface.degree()));
    require(rank >= 2, ErrorKind::PreconditionViolated, "rank must be at least 2");

    FamilyPlan plan{.rank = rank, .schedule = {}, .constituents = {}, .pair = find_wild_pair(surface)};
    const WildPair& p = plan.pair;

    if (rank == 2) {
        plan.shape = PlanShape::Rank2;
        const Coeff ext = ext1_dimension(p.c, p.e).ext1;
        plan.schedule.push_back({"O(E)", "C", p.c, ext, 1, ext - 1});
        plan.constituents = {p.e, p.c};
    } else {
        const int m = (rank - 1) / 2;
        plan.m = m;
        plan.shape = rank % 2 == 1 ? PlanShape::Odd : PlanShape::Even;

        // m distinct points of P(Ext^1(O(D),O(C))); only their distinctness matters.
        const Coeff ext_dc = ext1_dimension(p.d, p.c).ext1;
        plan.schedule.push_back({"O(C)", "D", p.d, ext_dc, m, 0});

        const Coeff ext_e = ext1_dimension_vs_rank2(p.e, p.c, p.d);
        const Coeff odd_dim = plan.shape == PlanShape::Odd ? m * (ext_e - 1) : 0;
        plan.schedule.push_back({"E_1+...+E_m", "E", p.e, ext_e, m, odd_dim});
        for (int i = 0; i < m; ++i) {
            plan.constituents.push_back(p.c);
            plan.constituents.push_back(p.d);
        }
        plan.constituents.push_back(p.e);

        if (plan.shape == PlanShape::Even) {
            // 0 -> Ext^1(F, E_1+...+E_m) -> Ext^1(F, H) -> Ext^1(F, E) -> 0
            const Coeff ext_f = m * ext1_dimension_vs_rank2(p.f, p.c, p.d) + ext1_dimension(p.f, p.e).ext1;
            plan.schedule.push_back({"H", "F", p.f, ext_f, 1, ext_f - 1});
            plan.constituents.push_back(p.f);
        }
    }

    for (const auto& step : plan.schedule) plan.param_dim += step.parameter_dimension;
    require(static_cast<int>(plan.constituents.size()) == rank, ErrorKind::InternalError,
            "family plan constituents do not add up to the rank");
    return plan;
}

ZeroRegularity is_zero_regular_acm(const DivisorClass& d) {
    require(is_acm_initialized(d), ErrorKind::PreconditionViolated,
            format_divisor(d) + " is not an initialized ACM class");
    const Coeff n = d.surface().degree();
    if (d.is_zero()) {
        // h^2(O(-2)) = chi(-2H)
        return ZeroRegularity{false, euler_characteristic(-2 * hyperplane(d.surface()))};
    }
    const Coeff h2 = n - degree(d);
    return ZeroRegularity{h2 == 0, h2};
}

Rational family_slope(const SurfaceModel& surface, const FamilyPlan& plan) {
    Coeff total = 0;
    for (const auto& x : plan.constituents) {
        require(x.surface() == surface, ErrorKind::SurfaceMismatch, "plan belongs to another surface");
        total += degree(x);
    }
    return Rational(total, plan.rank);
}

}  // namespace delpezzo
