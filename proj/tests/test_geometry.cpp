#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "delpezzo/acm.hpp"
#include "delpezzo/divisor_text.hpp"
#include "delpezzo/geometry.hpp"
#include "oracles.hpp"

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

// Brute force: classes in a box with D^2 = -1 and D.H = 1.
std::set<std::vector<Coeff>> brute_lines(const SurfaceModel& s) {
    std::set<std::vector<Coeff>> out;
    const int n = s.rank();
    std::vector<Coeff> c(n, -3);
    c[0] = 0;
    while (true) {
        const DivisorClass d(s, c);
        if (self_intersection(d) == -1 && degree(d) == 1) out.insert(c);
        int k = n - 1;
        while (k >= 0 && c[k] == 3) {
            c[k] = k == 0 ? 0 : -3;
            --k;
        }
        if (k < 0) break;
        ++c[k];
    }
    return out;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("line enumeration") {
    const std::vector<int> expected{0, 1, 3, 6, 10, 16, 27};
    for (int r = 0; r <= 6; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        const auto lines = enumerate_lines(s);
        CHECK(static_cast<int>(lines.size()) == expected[r]);
        CHECK(expected_line_count(s) == expected[r]);
        CHECK(static_cast<std::int64_t>(lines.size()) ==
              r + oracle::binomial(r, 2) + oracle::binomial(r, 5));

        std::set<std::vector<Coeff>> listed;
        for (const auto& line : lines) {
            CHECK(self_intersection(line.divisor) == -1);
            CHECK(degree(line.divisor) == 1);
            CHECK(arithmetic_genus(line.divisor) == Rational(0));
            listed.emplace(line.divisor.coeffs().begin(), line.divisor.coeffs().end());
        }
        CHECK(listed.size() == lines.size());
        CHECK(listed == brute_lines(s));
        for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].label < lines[i].label);
    }
    CHECK(enumerate_lines(SurfaceModel::quadric()).empty());

    const auto x2 = SurfaceModel::blow_up(2);
    const auto lines = enumerate_lines(x2);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].divisor == D(x2, "e1"));
    CHECK(lines[1].divisor == D(x2, "e2"));
    CHECK(lines[2].divisor == D(x2, "l-e1-e2"));
    CHECK(lines[2].label.to_string() == "F(1,2)");

    const auto x6 = enumerate_lines(SurfaceModel::blow_up(6));
    CHECK(x6.back().label.to_string() == "G(6)");
    CHECK(x6.back().divisor == D(SurfaceModel::blow_up(6), "2l-e1-e2-e3-e4-e5"));
    CHECK(enumerate_lines(SurfaceModel::blow_up(5)).back().label.to_string() == "G");
}

TEST_CASE("effectivity examples") {
    const auto x1 = SurfaceModel::blow_up(1);
    CHECK(is_effective(D(x1, "f")));
    CHECK_FALSE(is_effective(D(x1, "-C0+f")));
    CHECK(is_effective(DivisorClass::zero(x1)));
    CHECK(is_effective(D(SurfaceModel::quadric(), "h+3m")));
    CHECK_FALSE(is_effective(D(SurfaceModel::quadric(), "-h+3m")));
    CHECK(is_effective(D(SurfaceModel::blow_up(0), "2l")));
    CHECK_FALSE(is_effective(D(SurfaceModel::blow_up(0), "-l")));
    CHECK_FALSE(is_effective(D(SurfaceModel::blow_up(3), "l-e1-e2-e3")));
    CHECK(is_effective(D(SurfaceModel::blow_up(3), "l-e1-e2")));
    CHECK(is_effective(D(SurfaceModel::blow_up(6), "2l-e1-e2-e3-e4-e5")));
    CHECK_FALSE(is_effective(D(SurfaceModel::blow_up(6), "2l-e1-e2-e3-e4-e5-e6")));
}

TEST_CASE("effectivity agrees with the monoid oracle on X1 and Q") {
    // Generators: C0 = e1 and f = l - e1 on X1; h and m on Q.
    const auto x1 = SurfaceModel::blow_up(1);
    const auto q = SurfaceModel::quadric();
    const std::vector<std::vector<Coeff>> x1_gens{{0, 1}, {1, -1}};
    const std::vector<std::vector<Coeff>> q_gens{{1, 0}, {0, 1}};
    for (Coeff a = -10; a <= 10; ++a) {
        for (Coeff b = -10; b <= 10; ++b) {
            const std::vector<Coeff> v{a, b};
            CHECK(is_effective(DivisorClass(x1, v)) == oracle::in_monoid(x1_gens, v, 30));
            CHECK(is_effective(DivisorClass(q, v)) == oracle::in_monoid(q_gens, v, 30));
        }
    }
}

TEST_CASE("effectivity agrees with the line monoid oracle on X2 and X3") {
    for (int r : {2, 3}) {
        const auto s = SurfaceModel::blow_up(r);
        std::vector<std::vector<Coeff>> gens;
        for (const auto& line : enumerate_lines(s))
            gens.emplace_back(line.divisor.coeffs().begin(), line.divisor.coeffs().end());
        std::mt19937_64 rng(r);
        for (int trial = 0; trial < 150; ++trial) {
            const auto d = oracle::random_class(s, rng, 3);
            const std::vector<Coeff> v(d.coeffs().begin(), d.coeffs().end());
            CHECK(is_effective(d) == oracle::in_monoid(gens, v, 6));
        }
    }
}

TEST_CASE("every class with D^2 = D.H - 2 and D.H > 0 in the box is effective") {
    for (const auto& s : SurfaceModel::all()) {
        for (const auto& box : {primary_box(s), guard_box(s)}) {
            const int n = s.rank();
            std::vector<Coeff> c(n);
            for (int k = 0; k < n; ++k) c[k] = box.ranges[k].first;
            while (true) {
                const DivisorClass d(s, c);
                const Coeff dh = degree(d);
                if (dh > 0 && self_intersection(d) == dh - 2) CHECK(is_effective(d));
                int k = n - 1;
                while (k >= 0 && c[k] == box.ranges[k].second) {
                    c[k] = box.ranges[k].first;
                    --k;
                }
                if (k < 0) break;
                ++c[k];
            }
        }
    }
}

TEST_CASE("very ampleness") {
    CHECK(is_very_ample(hyperplane(SurfaceModel::blow_up(6))));
    for (int r = 1; r <= 6; ++r) CHECK(is_very_ample(hyperplane(SurfaceModel::blow_up(r))));
    const auto x1 = SurfaceModel::blow_up(1);
    CHECK_FALSE(is_very_ample(D(x1, "f")));
    CHECK_FALSE(is_very_ample(D(SurfaceModel::blow_up(2), "l-e1-e2")));
    CHECK(kind_of([] { is_very_ample(DivisorClass::l(SurfaceModel::blow_up(0))); }) ==
          ErrorKind::UnsupportedSurface);
    CHECK(kind_of([] { is_very_ample(DivisorClass::h(SurfaceModel::quadric())); }) ==
          ErrorKind::UnsupportedSurface);
}

TEST_CASE("smooth non-line member") {
    const auto x1 = SurfaceModel::blow_up(1);
    CHECK(has_smooth_nonline_member(D(x1, "f")));
    CHECK_FALSE(has_smooth_nonline_member(D(x1, "e1")));
    for (int r = 1; r <= 6; ++r) CHECK(has_smooth_nonline_member(hyperplane(SurfaceModel::blow_up(r))));
    CHECK(has_smooth_nonline_member(D(SurfaceModel::quadric(), "h")));
    CHECK(has_smooth_nonline_member(D(SurfaceModel::blow_up(0), "l")));
    CHECK(kind_of([&] { has_smooth_nonline_member(DivisorClass::zero(x1)); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([&] { has_smooth_nonline_member(D(x1, "-C0+f")); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("very ample implies smooth member") {
    std::mt19937_64 rng(11);
    for (int r = 2; r <= 6; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        int seen = 0;
        for (int trial = 0; trial < 400; ++trial) {
            auto d = oracle::random_class(s, rng, 4);
            d += 3 * hyperplane(s);
            if (d.is_zero() || !is_effective(d)) continue;
            if (is_very_ample(d)) {
                ++seen;
                CHECK(has_smooth_nonline_member(d));
            }
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("alternative base") {
    const auto x2 = SurfaceModel::blow_up(2);
    const auto b2 = alternative_base(x2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == D(x2, "l"));
    CHECK(b2[1] == D(x2, "l-e1"));
    CHECK(b2[2] == D(x2, "2l-e1-e2"));

    const auto x6 = SurfaceModel::blow_up(6);
    CHECK(alternative_base(x6).back() == hyperplane(x6));

    for (int r = 2; r <= 6; ++r) {
        const auto s = SurfaceModel::blow_up(r);
        oracle::Matrix m;
        for (const auto& d : alternative_base(s)) m.emplace_back(d.coeffs().begin(), d.coeffs().end());
        const Coeff det = oracle::determinant(m);
        CHECK((det == 1 || det == -1));
        for (const auto& d : alternative_base(s)) CHECK(is_effective(d));
        if (r <= 4) CHECK(alternative_base(s).front() + alternative_base(s).back() == hyperplane(s));
    }
    CHECK(kind_of([] { alternative_base(SurfaceModel::blow_up(1)); }) == ErrorKind::UnsupportedSurface);
    CHECK(kind_of([] { alternative_base(SurfaceModel::quadric()); }) == ErrorKind::UnsupportedSurface);
}

TEST_CASE("decomposition examples") {
    const auto x3 = SurfaceModel::blow_up(3);
    const auto h = decompose(hyperplane(x3));
    // H = D_0 + D_3 for r <= 4.
    CHECK(h.alphas == std::vector<Coeff>{1, 0, 0, 1});
    CHECK(h.reconstruct() == hyperplane(x3));

    const auto x2 = SurfaceModel::blow_up(2);
    const auto l = decompose(DivisorClass::l(x2));
    CHECK(l.alphas == std::vector<Coeff>{1, 0, 0});

    const auto p = decompose(D(x3, "4l-e1-3e2-2e3"));
    REQUIRE(p.frame.as_permutation().has_value());
    CHECK(*p.frame.as_permutation() == std::vector<int>{2, 3, 1});
    CHECK(p.alphas == std::vector<Coeff>{-1, 1, 1, 1});

    // H = D_6 on X6.
    const auto x6 = SurfaceModel::blow_up(6);
    const auto h6 = decompose(hyperplane(x6));
    CHECK(h6.reconstruct() == hyperplane(x6));
    CHECK(h6.alphas.front() >= 0);

    CHECK(kind_of([] { decompose(DivisorClass::l(SurfaceModel::blow_up(1))); }) ==
          ErrorKind::UnsupportedSurface);
}

TEST_CASE("decomposition reconstructs random divisors") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 5);
        const auto s = SurfaceModel::blow_up(r);
        const auto d = oracle::random_class(s, rng, 10);
        const auto dec = decompose(d);
        REQUIRE(dec.alphas.size() == static_cast<std::size_t>(r + 1));
        CHECK(dec.reconstruct() == d);

        const auto& frame = dec.frame;
        CHECK(self_intersection(frame.line) == 1);
        for (std::size_t i = 0; i < frame.exceptional.size(); ++i) {
            CHECK(self_intersection(frame.exceptional[i]) == -1);
            CHECK(intersect(frame.line, frame.exceptional[i]) == 0);
            for (std::size_t j = i + 1; j < frame.exceptional.size(); ++j)
                CHECK(intersect(frame.exceptional[i], frame.exceptional[j]) == 0);
        }
        for (int i = 1; i < r; ++i) CHECK(dec.alphas[i] >= 0);
        CHECK(dec.alphas[r] == intersect(d, frame.exceptional.back()));
        if (r <= 4) CHECK(frame.as_permutation().has_value());
    }
}

TEST_CASE("alpha_0 is nonnegative on X5 and X6 when D meets every line nonnegatively") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const int r = 5 + static_cast<int>(rng() % 2);
        const auto s = SurfaceModel::blow_up(r);
        const auto d = oracle::random_class(s, rng, 6);
        if (d.is_zero() || !is_effective(d)) continue;
        const auto lines = enumerate_lines(s);
        if (!std::all_of(lines.begin(), lines.end(),
                         [&](const LineClass& line) { return intersect(d, line.divisor) >= 0; }))
            continue;
        ++checked;
        const auto dec = decompose(d);
        CHECK(dec.alphas[0] >= 0);
        CHECK(dec.reconstruct() == d);
    }
    // Also every ACM class meeting each line nonnegatively.
    for (int r : {5, 6}) {
        const auto s = SurfaceModel::blow_up(r);
        const auto lines = enumerate_lines(s);
        for (const auto& d : enumerate_acm(s)) {
            if (d.is_zero()) continue;
            if (!std::all_of(lines.begin(), lines.end(),
                             [&](const LineClass& line) { return intersect(d, line.divisor) >= 0; }))
                continue;
            ++checked;
            CHECK(decompose(d).alphas[0] >= 0);
        }
    }
    CHECK(checked > 50);
}

}  // TEST_SUITE
