// wormhole-geom: command-line surface over the curvature, geodesic and
// cone-point machinery.  Machine-readable CSV/JSON output; exit 0 on pass,
// 1 on usage error, 2 when an embedded assertion fails.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wormhole/chart.hpp"
#include "wormhole/curvature.hpp"
#include "wormhole/geodesic.hpp"
#include "wormhole/metric.hpp"

using json = nlohmann::json;
using namespace wormhole;

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Range {
    double lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("expected LO:HI range: " + s);
    try {
        return {std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected LO:HI range: " + s);
    }
}

std::array<double, 3> parse_triple(const std::string& s) {
    std::array<double, 3> out{};
    std::stringstream ss(s);
    std::string tok;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, tok, ',')) throw CLI::ValidationError("expected X,Y,Z: " + s);
        try {
            out[i] = std::stod(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("expected X,Y,Z: " + s);
        }
    }
    return out;
}

class Writer {
  public:
    Writer(const std::string& path, const std::string& format, const std::string& schema,
           std::vector<std::string> columns)
        : format_(format), columns_(std::move(columns)) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw CLI::ValidationError("cannot open output file: " + path);
        }
        if (format_ == "csv") {
            std::string head = "# wormhole-geom v1, schema: " + schema + ", columns:";
            for (const auto& c : columns_) head += " " + c;
            line(head);
        }
    }

    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

    void comment(const std::string& text) {
        if (format_ == "csv") line("# " + text);
    }

    void row(const std::vector<std::string>& cells) {
        if (format_ == "csv") {
            std::string s;
            for (size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
            line(s);
        } else {
            json rec;
            for (size_t i = 0; i < cells.size(); ++i) {
                // columns are numeric except the sheet label
                try {
                    size_t used = 0;
                    double v = std::stod(cells[i], &used);
                    if (used == cells[i].size()) {
                        rec[columns_[i]] = v;
                        continue;
                    }
                } catch (const std::exception&) {
                }
                rec[columns_[i]] = cells[i];
            }
            records_.push_back(std::move(rec));
        }
    }

    void finish() {
        if (format_ == "json") out() << records_.dump(2) << "\n";
    }

  private:
    void line(const std::string& s) { out() << s << "\n"; }

    std::string format_;
    std::vector<std::string> columns_;
    std::ofstream file_;
    json records_ = json::array();
};

[[noreturn]] void fail(const std::string& subcommand, const std::string& reason, const json& data) {
    json rec{{"status", "fail"}, {"subcommand", subcommand}, {"reason", reason}, {"data", data}};
    std::cerr << rec.dump() << "\n";
    std::exit(2);
}

int run_flatness(const std::string& urange, const std::string& vrange, int n, double max_riemann,
                 const std::string& format, const std::string& output) {
    const Range ur = parse_range(urange), vr = parse_range(vrange);
    Writer w(output, format, "flatness-scan",
             {"u", "v", "riemann_max_abs", "christoffel_fd_discrepancy"});
    int excluded = 0;
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double u = ur.lo + (ur.hi - ur.lo) * i / std::max(1, n - 1);
            const double v = vr.lo + (vr.hi - vr.lo) * j / std::max(1, n - 1);
            const ChartPoint p(u, v, 0.0);
            // exclusion band: FD curvature is ill-conditioned near the degeneracies
            if (classify(p).tag != RegionTag::Regular || metric::F(u, v) <= 0.1 ||
                std::fabs(std::cos(v)) <= 0.05) {
                ++excluded;
                continue;
            }
            const auto rep = curvature_report(p);
            worst = std::max(worst, rep.riemann_max_abs);
            w.row({fmt(u), fmt(v), fmt(rep.riemann_max_abs), fmt(rep.christoffel_fd_discrepancy)});
        }
    w.comment("excluded " + std::to_string(excluded) + " grid points inside the singular band");
    w.finish();
    if (worst > max_riemann)
        fail("flatness-scan", "max |Riemann| above threshold",
             {{"max_riemann", worst}, {"threshold", max_riemann}});
    return 0;
}

void write_trace(Writer& w, const CurveTrace& t) {
    for (const auto& s : t.samples)
        w.row({fmt(s.arclength), fmt(s.point.u), fmt(s.point.v), fmt(s.point.phi),
               to_string(s.cartesian.sheet), fmt(s.cartesian.x), fmt(s.cartesian.y),
               fmt(s.cartesian.z), fmt(s.speed_error), fmt(s.killing_error)});
}

const std::vector<std::string> kTraceColumns{"arclength", "u",       "v", "phi", "sheet",
                                             "x",         "y",       "z", "speed_error",
                                             "killing_error"};

int run_geodesic(const std::array<double, 3>& start, const std::string& sheet,
                 const std::array<double, 3>& dir, double length, double tol, double max_drift,
                 const std::string& format, const std::string& output) {
    SheetPoint sp;
    sp.sheet = sheet == "B" ? Sheet::B : Sheet::A;
    sp.x = start[0];
    sp.y = start[1];
    sp.z = start[2];
    GeodesicState s;
    s.point = from_cartesian(sp);
    s.velocity = chart_velocity(s.point, dir);
    const auto trace = integrate_geodesic(s, length, tol);

    Writer w(output, format, "geodesic", kTraceColumns);
    write_trace(w, trace);
    for (const auto& sw : trace.sheet_swaps)
        w.comment("sheet swap at arclength " + fmt(sw.arclength) + ", disk radius " +
                  fmt(sw.disk_radius));
    w.finish();

    for (const auto& smp : trace.samples)
        if (smp.speed_error > max_drift || smp.killing_error > max_drift)
            fail("geodesic", "conserved-quantity drift above threshold",
                 {{"arclength", smp.arclength},
                  {"speed_error", smp.speed_error},
                  {"killing_error", smp.killing_error},
                  {"threshold", max_drift}});
    return 0;
}

int run_oracle_compare(int launches, unsigned long seed, double max_dev, const std::string& format,
                       const std::string& output) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1, 1);

    Writer w(output, format, "oracle-compare", kTraceColumns);
    int done = 0, crossing = 0;
    while (done < launches) {
        SheetPoint start{d(rng) < 0 ? Sheet::B : Sheet::A, 2.5 * d(rng), 2.5 * d(rng),
                         -1.5 + 0.5 * d(rng)};
        if (start.sheet == Sheet::B) start.z = -start.z;
        std::array<double, 3> dir{0.5 * d(rng), 0.5 * d(rng),
                                  start.sheet == Sheet::A ? 1.0 : -1.0};
        CurveTrace oracle;
        try {
            oracle = straight_line_oracle(start, dir, 4.0);
        } catch (const FocalHit&) {
            continue; // redraw deterministically
        }
        bool near_axis = false;
        for (const auto& smp : oracle.samples)
            if (std::hypot(smp.cartesian.x, smp.cartesian.y) < 0.05) near_axis = true;
        if (near_axis) continue;

        GeodesicState s;
        s.point = from_cartesian(start);
        s.velocity = chart_velocity(s.point, dir);
        const auto trace = integrate_geodesic(s, 4.0, 1e-11);

        double dev = 0;
        for (const auto& smp : trace.samples) {
            const auto q = straight_line_at(start, dir, smp.arclength);
            dev = std::max({dev, std::fabs(q.x - smp.cartesian.x),
                            std::fabs(q.y - smp.cartesian.y), std::fabs(q.z - smp.cartesian.z)});
        }
        write_trace(w, trace);
        w.comment("launch " + std::to_string(done) + ": max_dev " + fmt(dev) + ", swaps " +
                  std::to_string(trace.sheet_swaps.size()) + "/" +
                  std::to_string(oracle.sheet_swaps.size()));
        if (dev > max_dev || trace.sheet_swaps.size() != oracle.sheet_swaps.size()) {
            w.finish();
            fail("oracle-compare", "chart geodesic deviates from the straight-line oracle",
                 {{"launch", done},
                  {"max_dev", dev},
                  {"swaps_chart", trace.sheet_swaps.size()},
                  {"swaps_oracle", oracle.sheet_swaps.size()}});
        }
        if (!oracle.sheet_swaps.empty()) ++crossing;
        ++done;
    }
    w.comment(std::to_string(crossing) + " of " + std::to_string(launches) +
              " launches crossed the disk");
    w.finish();
    return 0;
}

int run_cone_probe(const std::vector<double>& radii, double tol, const std::string& format,
                   const std::string& output) {
    Writer w(output, format, "cone-probe", {"radius", "circumference", "geodesic_radius", "ratio"});
    for (double r : radii) {
        const auto probe = circle_probe(r);
        w.row({fmt(probe.radius), fmt(probe.circumference), fmt(probe.geodesic_radius),
               fmt(probe.ratio())});
        const double rel = std::fabs(probe.ratio() / (4 * kPi) - 1);
        if (rel > tol) {
            w.finish();
            fail("cone-probe", "circumference ratio deviates from 4 pi",
                 {{"radius", r}, {"ratio", probe.ratio()}, {"relative_error", rel}, {"tol", tol}});
        }
    }
    w.finish();
    return 0;
}

int run_gauss_bonnet(const std::vector<double>& radii, double expect, double tol,
                     const std::string& format, const std::string& output) {
    Writer w(output, format, "gauss-bonnet", {"radius", "deficit"});
    for (double r : radii) {
        const double deficit = gauss_bonnet_deficit(r);
        w.row({fmt(r), fmt(deficit)});
        if (std::fabs(deficit - expect) > tol) {
            w.finish();
            fail("gauss-bonnet", "deficit outside tolerance",
                 {{"radius", r}, {"deficit", deficit}, {"expect", expect}, {"tol", tol}});
        }
    }
    w.finish();
    return 0;
}

int run_hyperboloid(double a, int n, double max_residual, const std::string& format,
                    const std::string& output) {
    Writer w(output, format, "hyperboloid-check", {"a", "zeta", "eta", "residual"});
    double worst = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double zeta = 0.02 + 1.8 * i / std::max(1, n - 1);
            const double eta = 0.02 + (kPi / 2 - 0.04) * j / std::max(1, n - 1);
            const double res = hyperboloid_limit_residual(a, zeta, eta);
            worst = std::max(worst, res);
            w.row({fmt(a), fmt(zeta), fmt(eta), fmt(res)});
        }
    w.finish();
    if (worst > max_residual * a * a)
        fail("hyperboloid-check", "substitution residual above threshold",
             {{"a", a}, {"max_residual", worst}, {"threshold", max_residual * a * a}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical probes of the two-sheet wormhole geometry"};
    app.require_subcommand(1);

    std::string format = "csv", output;
    unsigned long seed = 20260823;
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output, "output path (default: stdout)");
    app.add_option("--seed", seed, "seed for all pseudo-randomness");

    auto* flat = app.add_subcommand("flatness-scan", "Riemann scan over a Regular grid");
    std::string urange = "-3:3", vrange = "-1.4:1.4";
    int n = 20;
    double max_riemann = 1e-6;
    flat->add_option("--u-range", urange);
    flat->add_option("--v-range", vrange);
    flat->add_option("--n", n)->check(CLI::PositiveNumber);
    flat->add_option("--max-riemann", max_riemann);

    auto* geo = app.add_subcommand("geodesic", "integrate one chart geodesic");
    std::string start_s = "0.5,0,-1", dir_s = "0,0,1", sheet = "A";
    double length = 2.0, tol = 1e-10, max_drift = 1e-8;
    geo->add_option("--start", start_s, "Cartesian start X,Y,Z");
    geo->add_option("--sheet", sheet)->check(CLI::IsMember({"A", "B"}));
    geo->add_option("--dir", dir_s, "Cartesian direction X,Y,Z");
    geo->add_option("--length", length)->check(CLI::PositiveNumber);
    geo->add_option("--tol", tol);
    geo->add_option("--max-drift", max_drift);

    auto* cmp = app.add_subcommand("oracle-compare", "chart geodesics vs straight-line oracle");
    int launches = 100;
    double max_dev = 1e-6;
    cmp->add_option("--launches", launches)->check(CLI::PositiveNumber);
    cmp->add_option("--max-dev", max_dev);

    auto* cone = app.add_subcommand("cone-probe", "circumference ratio at the focal circle");
    std::vector<double> cone_radii;
    double cone_tol = 0.01;
    cone->add_option("--radius", cone_radii, "probe radius (repeatable)");
    cone->add_option("--tol", cone_tol, "allowed relative deviation from 4 pi");

    auto* gb = app.add_subcommand("gauss-bonnet", "loop deficit around the focal circle");
    std::vector<double> gb_radii;
    double expect = -2 * kPi, gb_tol = 1e-2;
    gb->add_option("--radius", gb_radii, "loop radius (repeatable)");
    gb->add_option("--expect", expect);
    gb->add_option("--tol", gb_tol);

    auto* hyp = app.add_subcommand("hyperboloid-check", "meridian-vs-hyperboloid limit identity");
    double a = 1.0, max_residual = 1e-9;
    int hn = 50;
    hyp->add_option("--a", a)->check(CLI::PositiveNumber);
    hyp->add_option("--n", hn)->check(CLI::PositiveNumber);
    hyp->add_option("--max-residual", max_residual);

    // --format/--output/--seed may appear after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*flat) return run_flatness(urange, vrange, n, max_riemann, format, output);
        if (*geo)
            return run_geodesic(parse_triple(start_s), sheet, parse_triple(dir_s), length, tol,
                                max_drift, format, output);
        if (*cmp) return run_oracle_compare(launches, seed, max_dev, format, output);
        if (*cone) {
            if (cone_radii.empty()) cone_radii = {0.1};
            return run_cone_probe(cone_radii, cone_tol, format, output);
        }
        if (*gb) {
            if (gb_radii.empty()) gb_radii = {0.1};
            return run_gauss_bonnet(gb_radii, expect, gb_tol, format, output);
        }
        if (*hyp) return run_hyperboloid(a, hn, max_residual, format, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json rec{{"status", "fail"}, {"reason", e.what()}};
        std::cerr << rec.dump() << "\n";
        return 2;
    }
    return 1;
}
