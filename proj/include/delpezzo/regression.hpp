#pragma once

// Golden files and the invariant sweep behind `acm verify`.
//
// One golden file per surface, named <surface>.tsv (X0.tsv .. X6.tsv, Q.tsv),
// one line per initialized ACM class in acm order:
//
//   degree<TAB>divisor-text<TAB>orbit_count

#include <filesystem>
#include <string>
#include <vector>

#include "delpezzo/picard.hpp"

namespace delpezzo {

std::string golden_file_name(const SurfaceModel& surface);

std::string golden_text(const SurfaceModel& surface);

void write_goldens(const std::filesystem::path& dir);

struct VerifyReport {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Diffs every golden file against a fresh enumeration. Throws Error(Io) if
/// the directory or any golden file is missing.
VerifyReport verify_goldens(const std::filesystem::path& dir);

/// Catalog equivalence, line and class invariants, bound checks and family
/// plans over every surface. Returns one message per violated invariant.
std::vector<std::string> check_invariants();

}  // namespace delpezzo
