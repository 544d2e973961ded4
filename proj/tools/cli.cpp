#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "delpezzo/acm.hpp"
#include "delpezzo/divisor_text.hpp"
#include "delpezzo/geometry.hpp"
#include "delpezzo/regression.hpp"
#include "delpezzo/wild.hpp"

namespace delpezzo::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string rational_text(const Rational& q) {
    std::ostringstream out;
    out << q.numerator();
    if (q.denominator() != 1) out << '/' << q.denominator();
    return out.str();
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// A predicate result, or "n/a" when its precondition does not hold.
template <typename F>
Json guarded(F&& f) {
    try {
        return Json(f());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PreconditionViolated || e.kind() == ErrorKind::UnsupportedSurface) return "n/a";
        throw;
    }
}

std::string json_scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

Json lines_doc(const SurfaceModel& s) {
    Json rows = Json::array();
    for (const auto& line : enumerate_lines(s)) {
        rows.push_back({{"label", line.label.to_string()}, {"class", format_divisor(line.divisor)}});
    }
    return Json{{"command", "lines"}, {"surface", s.name()}, {"count", rows.size()}, {"lines", rows}};
}

void print_lines(const Json& doc, std::ostream& out) {
    out << "surface " << doc["surface"].get<std::string>() << "  lines " << doc["count"].get<int>() << '\n';
    for (const auto& row : doc["lines"]) {
        out << pad(row["label"].get<std::string>(), 8) << row["class"].get<std::string>() << '\n';
    }
}

Json classify_doc(const SurfaceModel& s, const DivisorClass& d) {
    Json doc{{"command", "classify"}, {"surface", s.name()}, {"divisor", format_divisor(d)}};
    doc["degree"] = degree(d);
    doc["self_intersection"] = self_intersection(d);
    doc["arithmetic_genus"] = rational_text(arithmetic_genus(d));
    doc["euler_characteristic"] = euler_characteristic(d);
    doc["effective"] = is_effective(d);
    doc["very_ample"] = guarded([&] { return is_very_ample(d); });
    doc["smooth_member"] = guarded([&] { return has_smooth_nonline_member(d); });
    doc["acm"] = is_acm_initialized(d);
    doc["zero_regular"] = guarded([&] { return is_zero_regular_acm(d).zero_regular; });
    doc["ambient_dimension"] = guarded([&] { return ambient_dimension(d).dimension; });
    return doc;
}

void print_classify(const Json& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") continue;
        out << pad(key + ":", 22) << json_scalar_text(value) << '\n';
    }
}

Json table_entry(const SurfaceModel& s) {
    Json counts = Json::object();
    std::int64_t total = 0;
    for (const auto& [deg, n] : degree_count_table(s)) {
        counts[std::to_string(deg)] = n;
        total += n;
    }
    return Json{{"surface", s.name()}, {"surface_degree", s.degree()}, {"counts", counts}, {"total", total}};
}

Json table_doc(const std::vector<SurfaceModel>& surfaces) {
    Json entries = Json::array();
    for (const auto& s : surfaces) entries.push_back(table_entry(s));
    return Json{{"command", "table"}, {"surfaces", entries}};
}

void print_table(const Json& doc, std::ostream& out) {
    const auto& entries = doc["surfaces"];
    constexpr std::size_t kWidth = 6;
    out << pad("d", kWidth);
    for (const auto& e : entries) out << std::setw(kWidth) << e["surface"].get<std::string>();
    out << '\n';
    for (int deg = 0; deg <= 9; ++deg) {
        bool any = false;
        for (const auto& e : entries) any = any || deg <= e["surface_degree"].get<int>();
        if (!any) continue;
        out << pad(std::to_string(deg), kWidth);
        for (const auto& e : entries) {
            const auto key = std::to_string(deg);
            // Blank where the degree exceeds H^2.
            out << std::setw(kWidth) << (e["counts"].contains(key) ? std::to_string(e["counts"][key].get<int>()) : "");
        }
        out << '\n';
    }
    out << pad("Tot", kWidth);
    for (const auto& e : entries) out << std::setw(kWidth) << e["total"].get<int>();
    out << '\n';
}

Json wild_doc(const SurfaceModel& s, int rank) {
    const FamilyPlan plan = family_plan(s, rank);
    const WildPair& p = plan.pair;
    const auto rel = p.relation_block();
    Json schedule = Json::array();
    for (const auto& step : plan.schedule) {
        schedule.push_back({{"sub", step.sub},
                            {"quotient", step.quotient_name},
                            {"quotient_class", format_divisor(step.quotient)},
                            {"ext1_dimension", step.ext1_dimension},
                            {"copies", step.copies},
                            {"parameter_dimension", step.parameter_dimension}});
    }
    return Json{{"command", "wild"},
                {"surface", s.name()},
                {"rank", rank},
                {"pair",
                 {{"C", format_divisor(p.c)}, {"D", format_divisor(p.d)}, {"E", format_divisor(p.e)},
                  {"F", format_divisor(p.f)}}},
                {"C.D", intersect(p.c, p.d)},
                {"relations",
                 {{"1+C.E-d", rel[0]}, {"1+D.F-d", rel[1]}, {"1+C.D-d", rel[2]},
                  {"1+E.F-d", rel[3]}, {"1+D.E-d", rel[4]}, {"1+C.F-d", rel[5]}}},
                {"plan",
                 {{"shape", to_string(plan.shape)}, {"m", plan.m}, {"param_dim", plan.param_dim},
                  {"schedule", schedule}}},
                {"slope", rational_text(family_slope(s, plan))}};
}

void print_wild(const Json& doc, std::ostream& out) {
    out << "surface " << doc["surface"].get<std::string>() << "  rank " << doc["rank"].get<int>() << '\n';
    for (const auto& [k, v] : doc["pair"].items()) out << "  " << k << " = " << v.get<std::string>() << '\n';
    out << "  C.D = " << doc["C.D"].get<int>() << '\n';
    out << "relations\n";
    for (const auto& [k, v] : doc["relations"].items()) out << "  " << pad(k, 10) << v.get<int>() << '\n';
    const auto& plan = doc["plan"];
    out << "plan " << plan["shape"].get<std::string>();
    if (plan["m"].get<int>() > 0) out << " m=" << plan["m"].get<int>();
    out << '\n';
    for (const auto& step : plan["schedule"]) {
        out << "  " << step["copies"].get<int>() << " x  0 -> " << step["sub"].get<std::string>() << " -> * -> O("
            << step["quotient"].get<std::string>() << ") -> 0   ext1 " << step["ext1_dimension"].get<int>()
            << "   params " << step["parameter_dimension"].get<int>() << '\n';
    }
    out << "param_dim " << plan["param_dim"].get<int>() << '\n';
    out << "slope " << doc["slope"].get<std::string>() << '\n';
}

void emit(const Json& doc, const std::string& format, std::ostream& out, void (*print)(const Json&, std::ostream&)) {
    if (format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        print(doc, out);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Initialized ACM line bundles on strong del Pezzo surfaces", "acm"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    std::string surface_text;
    std::string divisor_text;
    int rank = 2;
    std::string golden_dir;

    auto* lines = app.add_subcommand("lines", "List the (-1)-lines of a surface");
    lines->add_option("surface", surface_text, "P2, X0..X6 or Q")->required();
    add_format(lines);

    auto* classify = app.add_subcommand("classify", "Invariants and criteria for one divisor class");
    classify->add_option("surface", surface_text, "P2, X0..X6 or Q")->required();
    classify->add_option("divisor", divisor_text, "e.g. 3l-2e1-e2, h+3m, 2C0+3f")->required();
    add_format(classify);

    auto* table = app.add_subcommand("table", "Initialized ACM classes per degree");
    table->add_option("surface", surface_text, "P2, X0..X6, Q or all")->required();
    add_format(table);

    auto* wild = app.add_subcommand("wild", "Wild pair and rank-n family plan");
    wild->add_option("surface", surface_text, "X3..X6")->required();
    wild->add_option("--rank", rank, "Bundle rank (>= 2)")->default_val(2);
    add_format(wild);

    auto* verify = app.add_subcommand("verify", "Diff golden files and run the invariant sweep");
    verify->add_option("dir", golden_dir, "Golden directory");
    verify->add_option("--golden", golden_dir, "Golden directory");
    add_format(verify);

    auto* golden = app.add_subcommand("golden", "Write golden files");
    golden->add_option("dir", golden_dir, "Output directory")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "acm: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (lines->parsed()) {
            emit(lines_doc(parse_surface(surface_text)), format, out, print_lines);
        } else if (classify->parsed()) {
            const SurfaceModel s = parse_surface(surface_text);
            emit(classify_doc(s, parse_divisor(s, divisor_text)), format, out, print_classify);
        } else if (table->parsed()) {
            const auto surfaces =
                surface_text == "all" ? SurfaceModel::all() : std::vector<SurfaceModel>{parse_surface(surface_text)};
            emit(table_doc(surfaces), format, out, print_table);
        } else if (wild->parsed()) {
            if (rank < 2) {
                err << "acm: --rank must be at least 2\n";
                return kUsage;
            }
            const SurfaceModel s = parse_surface(surface_text);
            try {
                emit(wild_doc(s, rank), format, out, print_wild);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::UnsupportedSurface && e.kind() != ErrorKind::NotFound) throw;
                err << "acm: " << e.what() << "\n"
                    << "acm: wild families are constructed only on X3..X6 (degree <= 6)\n";
                return kOutOfScope;
            }
        } else if (verify->parsed()) {
            if (golden_dir.empty()) {
                err << "acm: verify needs a golden directory\n";
                return kUsage;
            }
            const VerifyReport report = verify_goldens(golden_dir);
            if (format == "json") {
                out << Json{{"command", "verify"}, {"ok", report.ok()}, {"failures", report.failures}}.dump(2) << '\n';
            } else {
                for (const auto& f : report.failures) out << "FAIL " << f << '\n';
                out << (report.ok() ? "verify: ok\n" : "verify: " + std::to_string(report.failures.size()) + " failure(s)\n");
            }
            return report.ok() ? kOk : kVerifyFailed;
        } else if (golden->parsed()) {
            write_goldens(golden_dir);
            out << "wrote golden files to " << golden_dir << '\n';
        }
    } catch (const ParseError& e) {
        err << "acm: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "acm: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kUsage : kVerifyFailed;
    }
    return kOk;
}

}  // namespace delpezzo::cli
