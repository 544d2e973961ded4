#pragma once

// Numeric side of the higher-rank construction: intersection bounds between
// ACM classes, Ext dimensions between maximal-degree ACM line bundles, the
// pairs (C, D) with C.D = 1 + d, and the rank-n extension schedules together
// with the dimension of the families they produce.

#include <array>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"

namespace delpezzo {

/// 2 + (m-1)(c+d) - m(m-1)n/2, valid when (m-1)n < c+d <= mn.
Coeff intersection_upper_bound(Coeff c, Coeff d, Coeff m, Coeff n);

/// min(c, d) - 2.
Coeff intersection_lower_bound(Coeff c, Coeff d);

struct ExtDimensions {
    Coeff hom = 0;
    Coeff ext1 = 0;
    Coeff ext2 = 0;
};

/// Ext^i(O(C), O(D)) for distinct initialized ACM classes of degree H^2 = d:
/// Hom = Ext^2 = 0 and dim Ext^1 = 1 + C.D - d.
ExtDimensions ext1_dimension(const DivisorClass& c, const DivisorClass& d);

/// dim Ext^1(O(R), E) for E an extension of O(D) by O(C):
/// 2 - 2d + C.R + D.R.
Coeff ext1_dimension_vs_rank2(const DivisorClass& r, const DivisorClass& c, const DivisorClass& d);

struct WildPair {
    DivisorClass c;
    DivisorClass d;
    DivisorClass e;  // 2H - C
    DivisorClass f;  // 2H - D

    /// (1+C.E-d, 1+D.F-d, 1+C.D-d, 1+E.F-d, 1+D.E-d, 1+C.F-d)
    std::array<Coeff, 6> relation_block() const;
};

WildPair make_wild_pair(const DivisorClass& c, const DivisorClass& d);

/// Every ordered pair of maximal-degree ACM classes with C.D = 1 + d, in
/// enumeration order.
std::vector<WildPair> wild_pair_hits(const SurfaceModel& surface);

/// First element of wild_pair_hits; NotFound when there is none.
WildPair find_wild_pair(const SurfaceModel& surface);

enum class PlanShape { Rank2, Odd, Even };

std::string to_string(PlanShape shape);

// One extension 0 -> sub -> * -> O(quotient) -> 0, taken `copies` times.
struct ExtensionStep {
    std::string sub;
    std::string quotient_name;
    DivisorClass quotient;
    Coeff ext1_dimension = 0;     // of Ext^1(O(quotient), sub)
    int copies = 1;
    Coeff parameter_dimension = 0;  // contribution to the family dimension
};

struct FamilyPlan {
    int rank = 0;
    PlanShape shape = PlanShape::Rank2;
    int m = 0;  // n = 2m+1 (Odd) or n = 2m+2 (Even)
    Coeff param_dim = 0;
    std::vector<ExtensionStep> schedule;
    std::vector<DivisorClass> constituents;  // line bundles of the filtration, with repetition
    WildPair pair;
};

/// Rank 2: P(Ext^1(O(C),O(E))). Rank 2m+1: m distinct extensions of O(D) by
/// O(C), then extended by O(E). Rank 2m+2: the rank 2m+1 bundle extended by O(F).
FamilyPlan family_plan(const SurfaceModel& surface, int rank);

struct ZeroRegularity {
    bool zero_regular = false;
    Coeff h2_twist = 0;  // h^2(L(-2))
};

ZeroRegularity is_zero_regular_acm(const DivisorClass& d);

/// Total degree over rank of the constituents.
Rational family_slope(const SurfaceModel& surface, const FamilyPlan& plan);

}  // namespace delpezzo
