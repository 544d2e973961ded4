#pragma once

// Initialized ACM line bundles O(D) with respect to H = -K. A class qualifies
// iff D = 0 or D^2 = D.H - 2 with 0 < D.H <= H^2. The module enumerates them
// by brute force over a box, independently generates them from the closed-form
// catalog, and canonicalizes classes up to permutation of e_1..e_r.

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "delpezzo/picard.hpp"

namespace delpezzo {

enum class FamilyTag { Zero, Exceptional, LChain, TwoLChain, ThreeL2E, FourL222, FiveL26 };

/// "zero", "exceptional", "l-chain", "2l-chain", "3l-2e", "4l-222", "5l-2^6".
std::string_view to_string(FamilyTag tag);

struct AcmRecord {
    DivisorClass canonical;
    Coeff degree = 0;
    std::int64_t orbit_count = 1;  // u(D, r)
    FamilyTag family = FamilyTag::Zero;
};

bool is_acm_initialized(const DivisorClass& d);

/// (alpha-1)(beta-1) = 0 and 0 < 2 alpha + 2 beta <= 8, or D = 0.
bool is_acm_initialized_quadric(const DivisorClass& d);

// Inclusive per-coordinate ranges, in the surface's own coefficients.
struct ScanBox {
    std::vector<std::pair<Coeff, Coeff>> ranges;
};

/// a in [0,5], b_i in [-1,3] (blow-ups); alpha, beta in [0,4] (quadric).
ScanBox primary_box(const SurfaceModel& surface);

/// a in [-1,6], b_i in [-2,4] (blow-ups); alpha, beta in [-2,6] (quadric).
ScanBox guard_box(const SurfaceModel& surface);

/// All classes in the box passing is_acm_initialized, in acm order. The box is
/// partitioned over its first coordinate across `threads` workers.
std::vector<DivisorClass> scan_box(const SurfaceModel& surface, const ScanBox& box, unsigned threads);

/// ACM_THREADS if set and positive, otherwise the hardware concurrency.
unsigned enumeration_threads();

/// Every initialized ACM class of the surface. Throws InternalError if the
/// guard box finds a class outside the primary box.
std::vector<DivisorClass> enumerate_acm(const SurfaceModel& surface);

/// b-vector reordered by decreasing |b_i| (ties: larger b_i first), so
/// exceptional classes land on e_1 and all others have b sorted descending.
/// The quadric has no exceptional divisors; classes there are returned as is.
DivisorClass canonical_form(const DivisorClass& d);

/// Order used for every listing: degree, then canonical form, then the class.
bool acm_order_less(const DivisorClass& a, const DivisorClass& b);

/// Number of distinct classes obtained by permuting e_1..e_r:
/// r! / prod (multiplicity of each b value)!.
std::int64_t orbit_size(const DivisorClass& d);

/// Distinct permutations of the exceptional coefficients, sorted.
std::vector<DivisorClass> orbit(const DivisorClass& d);

AcmRecord canonicalize(const DivisorClass& d);

/// Degree -> number of classes, for every degree 0..H^2 (zeros included).
std::map<int, std::int64_t> degree_count_table(const SurfaceModel& surface);

/// Canonical representatives generated from the closed-form list (0, e_1 and
/// the five families with their m-ranges), in acm order.
std::vector<AcmRecord> closed_form_catalog(const SurfaceModel& surface);

/// h^1(O(D)(-1)) = (D.H - D^2)/2 - 1 for a nonzero effective initialized D.
Coeff h1_initialized_twist(const DivisorClass& d);

struct AmbientSpan {
    Coeff dimension = 0;             // c = D.H; D spans P^c
    Coeff complement_sections = 0;   // h^0(H - D) = H^2 - c
};

AmbientSpan ambient_dimension(const DivisorClass& d);

}  // namespace delpezzo
