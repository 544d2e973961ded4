#include "doctest.h"

#include <algorithm>

#include "delpezzo/acm.hpp"
#include "delpezzo/divisor_text.hpp"
#include "delpezzo/wild.hpp"

using namespace delpezzo;

namespace {

DivisorClass D(const SurfaceModel& s, const char* text) { return parse_divisor(s, text); }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InternalError;
}

std::vector<DivisorClass> maximal_classes(const SurfaceModel& s) {
    std::vector<DivisorClass> out;
    for (const auto& d : enumerate_acm(s))
        if (degree(d) == s.degree()) out.push_back(d);
    return out;
}

bool contains_pair(const std::vector<WildPair>& hits, const DivisorClass& c, const DivisorClass& d) {
    return std::any_of(hits.begin(), hits.end(), [&](const WildPair& p) { return p.c == c && p.d == d; });
}

}  // namespace

TEST_SUITE("wild") {

TEST_CASE("intersection bounds") {
    for (Coeff n = 3; n <= 9; ++n) CHECK(intersection_upper_bound(n, n, 2, n) == n + 2);
    CHECK(intersection_upper_bound(1, 2, 1, 5) == 2);
    CHECK(intersection_upper_bound(3, 3, 2, 3) == 5);
    CHECK(intersection_lower_bound(6, 6) == 4);
    CHECK(intersection_lower_bound(1, 6) == -1);
    CHECK(kind_of([] { intersection_upper_bound(3, 3, 1, 3); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([] { intersection_upper_bound(0, 3, 1, 3); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([] { intersection_lower_bound(0, 3); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("all ACM pairs respect both bounds") {
    for (const auto& s : SurfaceModel::all()) {
        const Coeff n = s.degree();
        std::vector<DivisorClass> nonzero;
        for (const auto& d : enumerate_acm(s))
            if (!d.is_zero()) nonzero.push_back(d);
        for (const auto& c : nonzero) {
            for (const auto& d : nonzero) {
                const Coeff cd = intersect(c, d);
                const Coeff dc = degree(c);
                const Coeff dd = degree(d);
                CHECK(cd >= intersection_lower_bound(dc, dd));
                if (cd == intersection_lower_bound(dc, dd)) CHECK(c == d);
                const Coeff m = (dc + dd + n - 1) / n;
                CHECK(cd <= intersection_upper_bound(dc, dd, m, n));
            }
        }
    }
}

TEST_CASE("Ext dimensions") {
    const auto x3 = SurfaceModel::blow_up(3);
    const auto c = D(x3, "3l-2e1-e2");
    const auto d = D(x3, "3l-2e2-e3");
    const auto ext = ext1_dimension(c, d);
    CHECK(ext.ext1 == 2);
    CHECK(ext.hom == 0);
    CHECK(ext.ext2 == 0);
    const auto p = make_wild_pair(c, d);
    CHECK(ext1_dimension(p.d, p.e).ext1 == 0);
    CHECK(ext1_dimension(p.c, p.e).ext1 == 3);
    CHECK(ext1_dimension_vs_rank2(p.e, p.c, p.d) == 3);
    CHECK(ext1_dimension_vs_rank2(p.f, p.c, p.d) == 3);
    CHECK(kind_of([&] { ext1_dimension(c, c); }) == ErrorKind::NotApplicable);
    CHECK(kind_of([&] { ext1_dimension_vs_rank2(c, c, d); }) == ErrorKind::NotApplicable);
    CHECK(kind_of([&] { ext1_dimension(c, D(x3, "2l-e1")); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("tabulated pairs are among the hits") {
    struct Row {
        int r;
        const char* c;
        const char* d;
        Coeff cd;
    };
    const Row rows[] = {
        {3, "3l-2e1-e2", "3l-2e2-e3", 7},
        {4, "3l-2e1-e2-e3", "3l-2e2-e3-e4", 6},
        {5, "3l-2e1-e2-e3-e4", "3l-2e2-e3-e4-e5", 5},
        {6, "3l-2e1-e2-e3-e4-e5", "3l-2e2-e3-e4-e5-e6", 4},
    };
    for (const auto& row : rows) {
        const auto s = SurfaceModel::blow_up(row.r);
        const auto c = D(s, row.c);
        const auto d = D(s, row.d);
        CHECK(intersect(c, d) == row.cd);
        CHECK(intersect(c, d) == 1 + s.degree());
        CHECK(contains_pair(wild_pair_hits(s), c, d));
        const auto first = find_wild_pair(s);
        CHECK(first.c == wild_pair_hits(s).front().c);
        CHECK(first.d == wild_pair_hits(s).front().d);
    }
}

TEST_CASE("every hit has the relation block and distinct members") {
    const std::array<Coeff, 6> block{3, 3, 2, 2, 0, 0};
    for (int r = 3; r <= 6; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        const auto hits = wild_pair_hits(s);
        CHECK_FALSE(hits.empty());
        for (const auto& p : hits) {
            CHECK(p.relation_block() == block);
            for (const auto* x : {&p.e, &p.f}) {
                CHECK(is_acm_initialized(*x));
                CHECK(degree(*x) == s.degree());
            }
            const std::vector<DivisorClass> four{p.c, p.d, p.e, p.f};
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) CHECK(four[i] != four[j]);
        }
    }
}

TEST_CASE("surfaces without pairs") {
    for (int r = 0; r <= 2; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        CHECK(wild_pair_hits(s).empty());
        CHECK(kind_of([&] { find_wild_pair(s); }) == ErrorKind::NotFound);
    }
    CHECK(kind_of([] { find_wild_pair(SurfaceModel::quadric()); }) == ErrorKind::NotFound);
}

TEST_CASE("family plans") {
    const auto x3 = SurfaceModel::blow_up(3);
    CHECK(family_plan(x3, 2).param_dim == 2);
    CHECK(family_plan(x3, 2).shape == PlanShape::Rank2);
    const auto odd = family_plan(x3, 5);
    CHECK(odd.shape == PlanShape::Odd);
    CHECK(odd.m == 2);
    CHECK(odd.param_dim == 4);
    const auto even = family_plan(SurfaceModel::blow_up(6), 6);
    CHECK(even.shape == PlanShape::Even);
    CHECK(even.param_dim == 7);
    CHECK(even.schedule.back().ext1_dimension == 8);

    CHECK(kind_of([] { family_plan(SurfaceModel::blow_up(2), 2); }) == ErrorKind::UnsupportedSurface);
    CHECK(kind_of([] { family_plan(SurfaceModel::quadric(), 2); }) == ErrorKind::UnsupportedSurface);
    CHECK(kind_of([&] { family_plan(x3, 1); }) == ErrorKind::PreconditionViolated);

    for (int r = 3; r <= 6; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        for (int n = 2; n <= 50; ++n) {
            const auto plan = family_plan(s, n);
            CHECK(plan.rank == n);
            CHECK(static_cast<int>(plan.constituents.size()) == n);
            CHECK(plan.param_dim >= n - 1);
            Coeff sum = 0;
            for (const auto& step : plan.schedule) sum += step.parameter_dimension;
            CHECK(sum == plan.param_dim);
            CHECK(family_slope(s, plan) == Rational(s.degree()));
        }
    }
    CHECK(family_slope(x3, family_plan(x3, 2)) == Rational(6));
    const auto x6 = SurfaceModel::blow_up(6);
    CHECK(family_slope(x6, family_plan(x6, 7)) == Rational(3));
}

TEST_CASE("zero regularity") {
    const auto x3 = SurfaceModel::blow_up(3);
    const auto top = is_zero_regular_acm(D(x3, "3l-2e1-e2"));
    CHECK(top.zero_regular);
    CHECK(top.h2_twist == 0);
    const auto zero = is_zero_regular_acm(DivisorClass::zero(x3));
    CHECK_FALSE(zero.zero_regular);
    CHECK(zero.h2_twist == 7);
    const auto e1 = is_zero_regular_acm(DivisorClass::e(SurfaceModel::blow_up(1), 1));
    CHECK_FALSE(e1.zero_regular);
    CHECK(e1.h2_twist == 7);
    CHECK(kind_of([&] { is_zero_regular_acm(hyperplane(x3)); }) == ErrorKind::PreconditionViolated);

    for (const auto& s : SurfaceModel::all())
        for (const auto& d : enumerate_acm(s))
            CHECK(is_zero_regular_acm(d).zero_regular == (!d.is_zero() && degree(d) == s.degree()));
}

TEST_CASE("maximal pairs saturate the upper bound only when C + D = 2H") {
    for (const auto& s : SurfaceModel::all()) {
        const auto top = maximal_classes(s);
        const Coeff n = s.degree();
        for (const auto& c : top) {
            for (const auto& d : top) {
                const Coeff cd = intersect(c, d);
                CHECK(cd >= n - 2);
                CHECK(cd <= n + 2);
                CHECK((cd == n + 2) == (c + d == 2 * hyperplane(s)));
            }
        }
    }
}

}  // TEST_SUITE
