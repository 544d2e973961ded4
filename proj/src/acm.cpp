#include "delpezzo/acm.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

#include "delpezzo/divisor_text.hpp"
#include "delpezzo/geometry.hpp"

namespace delpezzo {

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Zero: return "zero";
        case FamilyTag::Exceptional: return "exceptional";
        case FamilyTag::LChain: return "l-chain";
        case FamilyTag::TwoLChain: return "2l-chain";
        case FamilyTag::ThreeL2E: return "3l-2e";
        case FamilyTag::FourL222: return "4l-222";
        case FamilyTag::FiveL26: return "5l-2^6";
    }
    return "?";
}

namespace {

bool criterion(Coeff sq, Coeff deg, Coeff surface_degree, bool zero) {
    return zero || (sq == deg - 2 && deg > 0 && deg <= surface_degree);
}

// Same test as is_acm_initialized on a raw coefficient vector; the scan loop
// only materializes DivisorClass values for hits.
bool criterion_raw(const SurfaceModel& s, const std::vector<Coeff>& c) {
    Coeff sq;
    Coeff deg;
    bool zero;
    if (s.is_quadric()) {
        sq = 2 * c[0] * c[1];
        deg = 2 * c[0] + 2 * c[1];
        zero = c[0] == 0 && c[1] == 0;
    } else {
        sq = c[0] * c[0];
        deg = 3 * c[0];
        zero = c[0] == 0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            sq -= c[i] * c[i];
            deg += c[i];
            zero = zero && c[i] == 0;
        }
    }
    return criterion(sq, deg, s.degree(), zero);
}

void sort_acm(std::vector<DivisorClass>& v) {
    struct Keyed {
        Coeff degree;
        DivisorClass canonical;
        DivisorClass d;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(v.size());
    for (auto& d : v) keyed.push_back({degree(d), canonical_form(d), d});
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        if (x.canonical != y.canonical) return x.canonical < y.canonical;
        return x.d < y.d;
    });
    v.clear();
    for (auto& k : keyed) v.push_back(std::move(k.d));
}

std::vector<DivisorClass> scan_slice(const SurfaceModel& s, const ScanBox& box, Coeff first) {
    std::vector<DivisorClass> hits;
    const std::size_t n = box.ranges.size();
    std::vector<Coeff> c(n);
    c[0] = first;
    for (std::size_t k = 1; k < n; ++k) c[k] = box.ranges[k].first;
    while (true) {
        if (criterion_raw(s, c)) hits.emplace_back(s, c);
        std::size_t k = n - 1;
        while (true) {
            if (k == 0) return hits;
            if (c[k] < box.ranges[k].second) {
                ++c[k];
                break;
            }
            c[k] = box.ranges[k].first;
            --k;
        }
    }
}

std::int64_t factorial(int n) {
    std::int64_t out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

}  // namespace

bool is_acm_initialized(const DivisorClass& d) {
    return criterion(self_intersection(d), degree(d), d.surface().degree(), d.is_zero());
}

bool is_acm_initialized_quadric(const DivisorClass& d) {
    require(d.surface().is_quadric(), ErrorKind::SurfaceMismatch,
            "quadric ACM criterion applied on " + d.surface().name());
    if (d.is_zero()) return true;
    const Coeff alpha = d[0];
    const Coeff beta = d[1];
    const Coeff deg = 2 * alpha + 2 * beta;
    return (alpha - 1) * (beta - 1) == 0 && deg > 0 && deg <= 8;
}

ScanBox primary_box(const SurfaceModel& surface) {
    if (surface.is_quadric()) return ScanBox{{{0, 4}, {0, 4}}};
    ScanBox box{{{0, 5}}};
    for (int i = 0; i < surface.points(); ++i) box.ranges.push_back({-3, 1});  // b_i in [-1, 3]
    return box;
}

ScanBox guard_box(const SurfaceModel& surface) {
    if (surface.is_quadric()) return ScanBox{{{-2, 6}, {-2, 6}}};
    ScanBox box{{{-1, 6}}};
    for (int i = 0; i < surface.points(); ++i) box.ranges.push_back({-4, 2});  // b_i in [-2, 4]
    return box;
}

unsigned enumeration_threads() {
    if (const char* env = std::getenv("ACM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<DivisorClass> scan_box(const SurfaceModel& surface, const ScanBox& box, unsigned threads) {
    require(box.ranges.size() == static_cast<std::size_t>(surface.rank()), ErrorKind::PreconditionViolated,
            "scan box dimension does not match the Picard rank");
    const auto [lo, hi] = box.ranges[0];
    std::vector<Coeff> firsts;
    for (Coeff a = lo; a <= hi; ++a) firsts.push_back(a);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size())));

    std::vector<std::future<std::vector<DivisorClass>>> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.push_back(std::async(std::launch::async, [&, t] {
            std::vector<DivisorClass> out;
            for (std::size_t k = t; k < firsts.size(); k += threads) {
                auto part = scan_slice(surface, box, firsts[k]);
                out.insert(out.end(), part.begin(), part.end());
            }
            return out;
        }));
    }
    std::vector<DivisorClass> hits;
    for (auto& w : workers) {
        auto part = w.get();
        hits.insert(hits.end(), part.begin(), part.end());
    }
    sort_acm(hits);
    return hits;
}

std::vector<DivisorClass> enumerate_acm(const SurfaceModel& surface) {
    const unsigned threads = enumeration_threads();
    auto hits = scan_box(surface, primary_box(surface), threads);
    const auto wide = scan_box(surface, guard_box(surface), threads);
    require(wide == hits, ErrorKind::InternalError,
            "guard box found initialized ACM classes outside the primary box on " + surface.name());
    return hits;
}

DivisorClass canonical_form(const DivisorClass& d) {
    if (d.surface().is_quadric()) return d;
    std::vector<Coeff> b = multiplicities(d);
    std::sort(b.begin(), b.end(), [](Coeff x, Coeff y) {
        const Coeff ax = x < 0 ? -x : x;
        const Coeff ay = y < 0 ? -y : y;
        if (ax != ay) return ax > ay;
        return x > y;
    });
    return from_multiplicities(d.surface(), line_coefficient(d), b);
}

bool acm_order_less(const DivisorClass& a, const DivisorClass& b) {
    const Coeff da = degree(a);
    const Coeff db = degree(b);
    if (da != db) return da < db;
    const DivisorClass ca = canonical_form(a);
    const DivisorClass cb = canonical_form(b);
    if (ca != cb) return ca < cb;
    return a < b;
}

std::int64_t orbit_size(const DivisorClass& d) {
    if (d.surface().is_quadric()) return 1;
    std::vector<Coeff> b = multiplicities(d);
    std::sort(b.begin(), b.end());
    std::int64_t out = factorial(static_cast<int>(b.size()));
    for (std::size_t i = 0; i < b.size();) {
        std::size_t j = i;
        while (j < b.size() && b[j] == b[i]) ++j;
        out /= factorial(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::vector<DivisorClass> orbit(const DivisorClass& d) {
    if (d.surface().is_quadric()) return {d};
    std::vector<Coeff> c(d.coeffs().begin() + 1, d.coeffs().end());
    std::sort(c.begin(), c.end());
    std::vector<DivisorClass> out;
    do {
        std::vector<Coeff> full{d[0]};
        full.insert(full.end(), c.begin(), c.end());
        out.emplace_back(d.surface(), std::move(full));
    } while (std::next_permutation(c.begin(), c.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// a*l - 2(e_1..e_twos) - (e_{twos+1}..e_{twos+ones})
DivisorClass chain(const SurfaceModel& s, Coeff a, int twos, int ones) {
    std::vector<Coeff> b(s.points(), 0);
    for (int i = 0; i < twos; ++i) b[i] = 2;
    for (int i = twos; i < twos + ones; ++i) b[i] = 1;
    return from_multiplicities(s, a, b);
}

}  // namespace

std::vector<AcmRecord> closed_form_catalog(const SurfaceModel& surface) {
    require(surface.is_blow_up(), ErrorKind::SurfaceMismatch, "the closed-form catalog covers blow-ups only");
    const int r = surface.points();
    std::vector<std::pair<DivisorClass, FamilyTag>> rows;

    rows.push_back({DivisorClass::zero(surface), FamilyTag::Zero});
    if (r >= 1) rows.push_back({DivisorClass::e(surface, 1), FamilyTag::Exceptional});
    for (int m = 0; m <= std::min(2, r); ++m) rows.push_back({chain(surface, 1, 0, m), FamilyTag::LChain});
    for (int m = std::max(r - 3, 0); m <= std::min(5, r); ++m) rows.push_back({chain(surface, 2, 0, m), FamilyTag::TwoLChain});
    for (int m = std::max(1, r - 1); m <= r; ++m) rows.push_back({chain(surface, 3, 1, m - 1), FamilyTag::ThreeL2E});
    if (r >= 3) rows.push_back({chain(surface, 4, 3, r - 3), FamilyTag::FourL222});
    if (r == 6) rows.push_back({chain(surface, 5, 6, 0), FamilyTag::FiveL26});

    std::vector<AcmRecord> out;
    for (auto& [d, tag] : rows) out.push_back({d, degree(d), orbit_size(d), tag});
    std::sort(out.begin(), out.end(),
              [](const AcmRecord& x, const AcmRecord& y) { return acm_order_less(x.canonical, y.canonical); });
    return out;
}

AcmRecord canonicalize(const DivisorClass& d) {
    require(d.surface().is_blow_up(), ErrorKind::SurfaceMismatch, "canonicalize covers blow-ups only");
    require(is_acm_initialized(d), ErrorKind::PreconditionViolated,
            format_divisor(d) + " is not an initialized ACM class");
    const DivisorClass canonical = canonical_form(d);
    for (const auto& row : closed_form_catalog(d.surface())) {
        if (row.canonical == canonical) return row;
    }
    fail(ErrorKind::InternalError,
         "ACM class " + format_divisor(d) + " matches no closed-form family on " + d.surface().name());
}

std::map<int, std::int64_t> degree_count_table(const SurfaceModel& surface) {
    std::map<int, std::int64_t> table;
    for (int k = 0; k <= surface.degree(); ++k) table[k] = 0;
    for (const auto& d : enumerate_acm(surface)) ++table[static_cast<int>(degree(d))];
    return table;
}

Coeff h1_initialized_twist(const DivisorClass& d) {
    require(!d.is_zero(), ErrorKind::PreconditionViolated, "h1_initialized_twist needs a nonzero class");
    require(is_effective(d), ErrorKind::PreconditionViolated, format_divisor(d) + " is not effective");
    require(!is_effective(d - hyperplane(d.surface())), ErrorKind::PreconditionViolated,
            format_divisor(d) + " is not initialized: D - H is effective");
    const Coeff twice = degree(d) - self_intersection(d);
    require(twice % 2 == 0, ErrorKind::InternalError, "D.H - D^2 is odd");
    return twice / 2 - 1;
}

AmbientSpan ambient_dimension(const DivisorClass& d) {
    require(!d.is_zero() && is_acm_initialized(d), ErrorKind::PreconditionViolated,
            format_divisor(d) + " is not a nonzero initialized ACM class");
    const Coeff c = degree(d);
    return AmbientSpan{c, d.surface().degree() - c};
}

}  // namespace delpezzo
