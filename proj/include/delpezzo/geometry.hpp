#pragma once

// (-1)-lines, effectivity, very ampleness and the smooth-member criterion,
// plus the base D_0..D_r of Pic X adapted to a choice of exceptional divisors.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"

namespace delpezzo {

// E(i) = e_i, F(i,j) = l - e_i - e_j, G = 2l - e_1 - ... - e_5 (r = 5),
// G(j) = 2l - sum_{i != j} e_i (r = 6). Ordering is E < F < G, then indices.
struct LineLabel {
    enum class Kind { E, F, G };

    Kind kind = Kind::E;
    int i = 0;
    int j = 0;

    std::string to_string() const;

    friend auto operator<=>(const LineLabel&, const LineLabel&) = default;
};

struct LineClass {
    DivisorClass divisor;
    LineLabel label;
};

/// All (-1)-lines of the surface in label order; empty for X0 and Q.
std::vector<LineClass> enumerate_lines(const SurfaceModel& surface);

/// r + C(r,2) + C(r,5) for blow-ups, 0 for the quadric.
int expected_line_count(const SurfaceModel& surface);

bool is_effective(const DivisorClass& d);

/// Positivity against all (-1)-lines (r >= 2), or against e1 and l - e1 on X1.
/// Throws UnsupportedSurface on X0 and Q.
bool is_very_ample(const DivisorClass& d);

/// D.L >= 0 for every (-1)-line L. Requires D nonzero and effective.
bool has_smooth_nonline_member(const DivisorClass& d);

/// D_0 = l, D_1 = l - e_1, D_2 = 2l - e_1 - e_2, ..., D_6 = 3l - e_1 - ... - e_6,
/// truncated at D_r. Defined for 2 <= r <= 6.
std::vector<DivisorClass> alternative_base(const SurfaceModel& surface);

// A blow-down structure: the pullback of a line and r mutually skew (-1)-lines
// serving as exceptional divisors, all written in the surface's own basis.
struct ExceptionalFrame {
    DivisorClass line;
    std::vector<DivisorClass> exceptional;

    static ExceptionalFrame standard(const SurfaceModel& surface);

    /// The frame's version of alternative_base.
    std::vector<DivisorClass> alternative_base() const;

    /// Set when every exceptional divisor is one of the standard e_j; entry
    /// i-1 holds the j used as the frame's i-th exceptional divisor.
    std::optional<std::vector<int>> as_permutation() const;
};

struct BaseDecomposition {
    ExceptionalFrame frame;
    std::vector<Coeff> alphas;  // alpha_0 .. alpha_r

    DivisorClass reconstruct() const;
};

/// Writes D = sum alpha_i D_i in a frame where D.e_1 >= ... >= D.e_r and
/// alpha_1..alpha_{r-1} >= 0, alpha_r = D.e_r. For 2 <= r <= 4 the frame
/// is a relabeling of e_1..e_r; for r = 5, 6 the last two exceptional
/// divisors are the line minimizing D.L and the line skew to it minimizing D.L',
/// which makes alpha_0 >= 0.
BaseDecomposition decompose(const DivisorClass& d);

}  // namespace delpezzo
