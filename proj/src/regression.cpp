#include "delpezzo/regression.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "delpezzo/acm.hpp"
#include "delpezzo/divisor_text.hpp"
#include "delpezzo/geometry.hpp"
#include "delpezzo/wild.hpp"

namespace delpezzo {

namespace fs = std::filesystem;

std::string golden_file_name(const SurfaceModel& surface) { return surface.name() + ".tsv"; }

std::string golden_text(const SurfaceModel& surface) {
    std::ostringstream out;
    for (const auto& d : enumerate_acm(surface)) {
        out << degree(d) << '\t' << format_divisor(d) << '\t' << orbit_size(canonical_form(d)) << '\n';
    }
    return out.str();
}

void write_goldens(const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& s : SurfaceModel::all()) {
        std::ofstream out(dir / golden_file_name(s), std::ios::binary);
        require(static_cast<bool>(out), ErrorKind::Io, "cannot write " + (dir / golden_file_name(s)).string());
        out << golden_text(s);
    }
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::string degree_field(const std::string& line) { return line.substr(0, line.find('\t')); }

std::map<std::string, int> count_by_degree(const std::vector<std::string>& lines) {
    std::map<std::string, int> out;
    for (const auto& l : lines) ++out[degree_field(l)];
    return out;
}

}  // namespace

VerifyReport verify_goldens(const fs::path& dir) {
    require(fs::is_directory(dir), ErrorKind::Io, "golden directory " + dir.string() + " does not exist");
    for (const auto& s : SurfaceModel::all()) {
        require(fs::is_regular_file(dir / golden_file_name(s)), ErrorKind::Io,
                "missing golden file " + (dir / golden_file_name(s)).string());
    }

    VerifyReport report;
    for (const auto& s : SurfaceModel::all()) {
        std::ifstream in(dir / golden_file_name(s), std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto golden = split_lines(buf.str());
        const auto fresh = split_lines(golden_text(s));

        const auto golden_counts = count_by_degree(golden);
        const auto fresh_counts = count_by_degree(fresh);
        std::set<std::string> degrees;
        for (const auto& [k, v] : golden_counts) degrees.insert(k);
        for (const auto& [k, v] : fresh_counts) degrees.insert(k);
        for (const auto& k : degrees) {
            const int g = golden_counts.contains(k) ? golden_counts.at(k) : 0;
            const int f = fresh_counts.contains(k) ? fresh_counts.at(k) : 0;
            if (g != f) {
                report.failures.push_back(s.name() + " degree " + k + ": golden has " + std::to_string(g) +
                                          " classes, enumeration has " + std::to_string(f));
            }
        }
        const std::size_t n = std::max(golden.size(), fresh.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::string g = i < golden.size() ? golden[i] : "<missing>";
            const std::string f = i < fresh.size() ? fresh[i] : "<missing>";
            if (g == f) continue;
            const std::string deg = i < fresh.size() ? degree_field(f) : degree_field(g);
            report.failures.push_back(s.name() + " degree " + deg + " line " + std::to_string(i + 1) +
                                      ": golden '" + g + "' vs enumeration '" + f + "'");
        }
    }
    for (auto& msg : check_invariants()) report.failures.push_back(std::move(msg));
    return report;
}

std::vector<std::string> check_invariants() {
    std::vector<std::string> failures;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };

    for (const auto& s : SurfaceModel::all()) {
        const std::string name = s.name();
        const DivisorClass h = hyperplane(s);
        check(self_intersection(h) == s.degree(), name + ": H^2 != degree");

        const auto lines = enumerate_lines(s);
        check(static_cast<int>(lines.size()) == expected_line_count(s), name + ": wrong number of lines");
        for (const auto& line : lines) {
            check(self_intersection(line.divisor) == -1 && degree(line.divisor) == 1,
                  name + ": " + line.label.to_string() + " is not a (-1)-line");
        }

        const auto acm = enumerate_acm(s);
        for (const auto& d : acm) {
            const std::string t = name + " " + format_divisor(d);
            if (!d.is_zero()) check(arithmetic_genus(d) == Rational(0), t + ": arithmetic genus is not 0");
            check(degree(d) >= 0 && degree(d) <= s.degree(), t + ": degree out of range");
            if (!d.is_zero()) check(is_effective(d), t + ": not effective");
            for (const auto& line : lines) {
                const Coeff v = intersect(d, line.divisor);
                check(v >= -1 && (v != -1 || d == line.divisor), t + ": meets " + line.label.to_string() + " negatively");
            }
        }

        if (s.is_blow_up()) {
            std::vector<DivisorClass> expanded;
            for (const auto& row : closed_form_catalog(s)) {
                for (auto& d : orbit(row.canonical)) expanded.push_back(std::move(d));
            }
            std::set<DivisorClass> a(acm.begin(), acm.end());
            std::set<DivisorClass> b(expanded.begin(), expanded.end());
            check(a == b && expanded.size() == b.size(), name + ": closed-form catalog differs from enumeration");
        } else {
            for (const auto& d : acm) check(is_acm_initialized_quadric(d), name + ": quadric criterion disagrees");
        }

        const Coeff n = s.degree();
        std::vector<DivisorClass> maximal;
        for (const auto& d : acm) {
            if (degree(d) == n) maximal.push_back(d);
        }
        for (const auto& c : maximal) {
            for (const auto& d : maximal) {
                const Coeff cd = intersect(c, d);
                check(cd >= intersection_lower_bound(n, n) && cd <= intersection_upper_bound(n, n, 2, n),
                      name + ": maximal pair violates the intersection bounds");
                check((cd == n + 2) == (c + d == 2 * h), name + ": upper-bound equality case mismatch");
            }
        }

        if (s.degree() <= 6) {
            for (const auto& pair : wild_pair_hits(s)) {
                check(pair.relation_block() == std::array<Coeff, 6>{3, 3, 2, 2, 0, 0},
                      name + ": relation block differs for " + format_divisor(pair.c) + ", " + format_divisor(pair.d));
            }
            for (int rank = 2; rank <= 20; ++rank) {
                const auto plan = family_plan(s, rank);
                check(plan.param_dim >= rank - 1, name + ": family dimension below rank - 1");
                check(family_slope(s, plan) == Rational(n), name + ": slope differs from the surface degree");
            }
        }
    }
    return failures;
}

}  // namespace delpezzo
