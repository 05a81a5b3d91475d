#include "cli.hpp"

#include "gmono/errors.hpp"
#include "gmono/json_io.hpp"
#include "gmono/monogenic.hpp"
#include "gmono/pde.hpp"
#include "gmono/polyroots.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gmono::cli {

using json_io::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && *first == ' ')
        ++first;
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

} // namespace

std::vector<Point3> GridSpec::points() const
{
    auto coord = [&](int axis, int k) {
        return lo[axis] + (hi[axis] - lo[axis]) * static_cast<double>(k) / static_cast<double>(count[axis] - 1);
    };
    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(count[0]) * count[1] * count[2]);
    for (int i = 0; i < count[0]; ++i)
        for (int j = 0; j < count[1]; ++j)
            for (int k = 0; k < count[2]; ++k)
                pts.push_back({coord(0, i), coord(1, j), coord(2, k)});
    return pts;
}

GridSpec parse_grid(const std::string& text)
{
    const auto axes = split(text, ',');
    if (axes.size() != 1 && axes.size() != 3)
        throw std::invalid_argument("grid must be lo:hi:n or lo:hi:n,lo:hi:n,lo:hi:n");
    GridSpec g;
    for (int a = 0; a < 3; ++a) {
        const auto parts = split(axes[axes.size() == 1 ? 0 : static_cast<std::size_t>(a)], ':');
        if (parts.size() != 3)
            throw std::invalid_argument("grid axis must be lo:hi:n, got '" + text + "'");
        g.lo[a] = parse_double(parts[0]);
        g.hi[a] = parse_double(parts[1]);
        const double n = parse_double(parts[2]);
        if (n != std::floor(n) || n < 2 || n > 1e6)
            throw std::invalid_argument("grid point count must be an integer >= 2");
        g.count[a] = static_cast<int>(n);
        if (!(g.lo[a] < g.hi[a]))
            throw std::invalid_argument("grid needs lo < hi on every axis");
    }
    return g;
}

Complex parse_complex(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() == 1)
        return {parse_double(parts[0]), 0.0};
    if (parts.size() == 2)
        return {parse_double(parts[0]), parse_double(parts[1])};
    throw std::invalid_argument("complex number must be re,im: '" + text + "'");
}

Point3 parse_point(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw std::invalid_argument("point must be x,y,z: '" + text + "'");
    return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{})
        throw std::runtime_error("to_chars failed");
    return {buf, ptr};
}

namespace {

/// A path to a JSON file, or the JSON text itself when it starts with '{',
/// '[' or '"'.
json load(const std::string& arg)
{
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '"' || arg.front() == '[')) {
        try {
            return json::parse(arg);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("inline JSON does not parse: ") + e.what());
        }
    }
    return json_io::read_file(arg);
}

/// A preset name, or otherwise a file / inline JSON.
json load_or_preset(const std::string& arg, std::initializer_list<const char*> presets)
{
    for (const char* p : presets)
        if (arg == p)
            return json(arg);
    return load(arg);
}

std::string format_complex(Complex c)
{
    std::string s = format_double(c.real());
    if (c.imag() >= 0.0)
        s += "+";
    return s + format_double(c.imag()) + "i";
}

std::string format_quaternion(const Quaternion& q)
{
    std::string s;
    for (int k = 1; k <= 4; ++k)
        s += (k > 1 ? "  " : "") + std::string("e") + std::to_string(k) + ": " + format_complex(q[k]);
    return s;
}

struct Globals {
    std::string format;
    double tol = std::numeric_limits<double>::quiet_NaN();
    double step = std::numeric_limits<double>::quiet_NaN();

    bool json_out(bool default_json) const { return format.empty() ? default_json : format == "json"; }
    double tol_or(double d) const { return std::isnan(tol) ? d : tol; }
    double step_or(double d) const { return std::isnan(step) ? d : step; }
};

// -- table --------------------------------------------------------------

int cmd_table(const Globals& g, const Hooks& hooks, std::ostream& out)
{
    const auto mul = hooks.mul ? hooks.mul : [](const Quaternion& a, const Quaternion& b) { return gmono::mul(a, b); };
    // Row a, column b: index of the product (0 for zero).
    static constexpr int kTable[4][4] = {{1, 0, 3, 0}, {0, 2, 0, 4}, {0, 3, 0, 1}, {4, 0, 2, 0}};

    bool all_ok = true;
    json entries = json::array();
    std::ostringstream text;
    text << "e-basis multiplication table (row * column)\n";
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            const int k = kTable[a - 1][b - 1];
            const Quaternion expected = k == 0 ? Quaternion::zero() : Quaternion::e(k);
            const Quaternion got = mul(Quaternion::e(a), Quaternion::e(b));
            const bool ok = got == expected;
            all_ok = all_ok && ok;
            const std::string want = k == 0 ? "0" : "e" + std::to_string(k);
            entries.push_back({{"a", "e" + std::to_string(a)},
                               {"b", "e" + std::to_string(b)},
                               {"expected", want},
                               {"got", json_io::encode(got)},
                               {"ok", ok}});
            text << "  e" << a << " * e" << b << " = " << want << (ok ? "  OK" : "  FAIL") << "\n";
        }
    }

    const Quaternion one = from_ijk({{1.0, 0.0, 0.0, 0.0}});
    const Quaternion qi = from_ijk({{0.0, 1.0, 0.0, 0.0}});
    const Quaternion qj = from_ijk({{0.0, 0.0, 1.0, 0.0}});
    const Quaternion qk = from_ijk({{0.0, 0.0, 0.0, 1.0}});
    const struct {
        const char* name;
        Quaternion lhs;
        Quaternion rhs;
    } axioms[] = {
        {"I*I = -1", mul(qi, qi), -one}, {"J*J = -1", mul(qj, qj), -one}, {"K*K = -1", mul(qk, qk), -one},
        {"I*J = K", mul(qi, qj), qk},    {"J*K = I", mul(qj, qk), qi},    {"K*I = J", mul(qk, qi), qj},
        {"J*I = -K", mul(qj, qi), -qk},  {"K*J = -I", mul(qk, qj), -qi},  {"I*K = -J", mul(qi, qk), -qj},
    };
    json ax = json::array();
    text << "classical basis axioms (tolerance 1e-15)\n";
    for (const auto& x : axioms) {
        const double e = max_abs_diff(x.lhs, x.rhs);
        const bool ok = e <= 1e-15;
        all_ok = all_ok && ok;
        ax.push_back({{"identity", x.name}, {"error", e}, {"ok", ok}});
        text << "  " << x.name << "  error " << format_double(e) << (ok ? "  OK" : "  FAIL") << "\n";
    }
    text << (all_ok ? "all checks passed\n" : "SOME CHECKS FAILED\n");

    if (g.json_out(false))
        out << json{{"table", entries}, {"axioms", ax}, {"ok", all_ok}}.dump(2) << "\n";
    else
        out << text.str();
    return all_ok ? kPass : kVerifyFailed;
}

// -- eval ---------------------------------------------------------------

int cmd_eval(const Globals& g, const std::string& map_arg, const std::string& point_arg, std::ostream& out)
{
    const GMonogenicMap m = json_io::decode_map(load(map_arg));
    const Point3 p = parse_point(point_arg);
    const auto s = xi(m.triple(), p);
    const Quaternion v = m(p);
    if (g.json_out(true)) {
        out << json{{"point", json_io::encode(p)},
                    {"xi1", json_io::encode(s.xi1)},
                    {"xi2", json_io::encode(s.xi2)},
                    {"value", json_io::encode(v)}}
                   .dump(2)
            << "\n";
    } else {
        out << "xi1 = " << format_complex(s.xi1) << "\nxi2 = " << format_complex(s.xi2) << "\nvalue  "
            << format_quaternion(v) << "\n";
    }
    return kPass;
}

// -- check-cr -----------------------------------------------------------

int cmd_check_cr(const Globals& g, const std::string& map_arg, const std::string& demo, const std::string& grid_arg,
                 std::ostream& out)
{
    const double step = g.step_or(1e-5);
    const double tol = g.tol_or(1e-7);
    if (!(step > 0.0))
        throw std::invalid_argument("--step must be positive");

    QuaternionField field;
    Side side = Side::Right;
    Triple triple = kTripleT0;
    std::string source;
    if (!demo.empty()) {
        if (demo != "xi2e1")
            throw std::invalid_argument("unknown demo '" + demo + "' (available: xi2e1)");
        field = [](const Point3& p) { return Quaternion{xi(kTripleT0, p).xi2, 0.0, 0.0, 0.0}; };
        source = "demo xi2e1 over laplace-t0 (not monogenic)";
    } else {
        if (map_arg.empty())
            throw std::invalid_argument("check-cr needs --map or --demo");
        const GMonogenicMap m = json_io::decode_map(load(map_arg));
        field = m.field();
        side = m.side();
        triple = m.triple();
        source = map_arg;
    }
    const GridSpec grid = parse_grid(grid_arg);

    json records = json::array();
    double max_r = 0.0, sum_r = 0.0;
    Point3 argmax{};
    const auto pts = grid.points();
    for (const auto& p : pts) {
        const auto r = cr_residual(field, side, triple, p, step);
        const double worst = std::max(r.y, r.z);
        sum_r += worst;
        if (worst > max_r || records.empty()) {
            max_r = std::max(max_r, worst);
            argmax = p;
        }
        records.push_back({{"point", json_io::encode(p)}, {"y", r.y}, {"z", r.z}});
    }
    const double mean = sum_r / static_cast<double>(pts.size());
    const bool pass = max_r <= tol;

    if (g.json_out(false)) {
        out << json{{"config",
                     {{"source", source},
                      {"side", side == Side::Right ? "right" : "left"},
                      {"triple", json_io::encode(triple)},
                      {"grid", grid_arg},
                      {"step", step},
                      {"tol", tol}}},
                    {"records", records},
                    {"summary",
                     {{"points", pts.size()}, {"max", max_r}, {"mean", mean}, {"argmax", json_io::encode(argmax)}}},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "source: " << source << "\npoints: " << pts.size() << "  step: " << format_double(step)
            << "  tol: " << format_double(tol) << "\nmax residual: " << format_double(max_r) << " at ("
            << format_double(argmax.x) << ", " << format_double(argmax.y) << ", " << format_double(argmax.z)
            << ")\nmean residual: " << format_double(mean) << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kPass : kVerifyFailed;
}

// -- solve-char ---------------------------------------------------------

int cmd_solve_char(const Globals& g, const std::string& pde_arg, const std::vector<std::string>& a_args,
                   std::ostream& out)
{
    const PdeOperator op = json_io::decode_operator(load_or_preset(pde_arg, {"laplace3d", "example5"}));
    std::vector<Complex> as;
    for (const auto& a : a_args)
        as.push_back(parse_complex(a));
    if (as.empty())
        throw std::invalid_argument("solve-char needs at least one --a");

    const auto sols = solve_characteristic(op, as);
    const auto cands = assemble_triples(op, sols);
    constexpr double kScanRange = 10.0, kScanStep = 0.1;
    const PScan scan = p_scan(op, kScanRange, kScanStep);
    const char* caveat =
        "grid scan only: a positive minimum suggests, but cannot prove, that P(a, b) has no real zeros";

    bool all_ok = true;
    json jsols = json::array();
    for (const auto& s : sols) {
        const double bound = root_residual_bound(s.poly);
        json roots = json::array(), poly = json::array();
        for (Complex c : s.poly)
            poly.push_back(json_io::encode(c));
        for (std::size_t k = 0; k < s.roots.size(); ++k) {
            all_ok = all_ok && s.residuals[k] <= bound;
            roots.push_back({{"b", json_io::encode(s.roots[k])}, {"residual", s.residuals[k]}});
        }
        jsols.push_back({{"a", json_io::encode(s.a)}, {"poly_in_b", poly}, {"roots", roots}, {"bound", bound}});
    }
    json jtriples = json::array();
    for (const auto& c : cands)
        jtriples.push_back({{"triple", json_io::encode(c.triple)},
                            {"valid", c.report.valid()},
                            {"verdict", c.report.describe()},
                            {"char_norm", c.char_norm}});

    if (g.json_out(true)) {
        out << json{{"operator", json_io::encode(op)},
                    {"solutions", jsols},
                    {"triples", jtriples},
                    {"p_scan",
                     {{"range", kScanRange},
                      {"step", kScanStep},
                      {"min_abs", scan.min_abs},
                      {"at", json::array({scan.a, scan.b})},
                      {"note", caveat}}},
                    {"ok", all_ok}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& s : sols) {
            out << "a = " << format_complex(s.a) << "\n";
            for (std::size_t k = 0; k < s.roots.size(); ++k)
                out << "  b = " << format_complex(s.roots[k]) << "  residual " << format_double(s.residuals[k])
                    << "\n";
        }
        out << "candidate triples:\n";
        for (const auto& c : cands)
            out << "  (a1, b1) = (" << format_complex(c.triple.a1) << ", " << format_complex(c.triple.b1)
                << "), (a2, b2) = (" << format_complex(c.triple.a2) << ", " << format_complex(c.triple.b2) << ")  "
                << (c.report.valid() ? "valid" : "rejected: " + c.report.describe()) << "\n";
        out << "min |P| on [-10, 10]^2: " << format_double(scan.min_abs) << " at (" << format_double(scan.a) << ", "
            << format_double(scan.b) << ")\nnote: " << caveat << "\n";
    }
    return all_ok ? kPass : kVerifyFailed;
}

// -- laplace ------------------------------------------------------------

int cmd_laplace(const Globals& g, const std::string& f_arg, const std::string& t_arg, const std::string& part_arg,
                const std::string& grid_arg, const std::string& out_path, double verify, std::ostream& out,
                std::ostream& err)
{
    const AnalyticFunction f =
        json_io::decode_function(load_or_preset(f_arg, {"zero", "one", "w", "w2", "w3", "exp", "sin", "cos"}));
    const Complex t = parse_complex(t_arg);
    if (part_arg != "re" && part_arg != "im")
        throw std::invalid_argument("--part must be re or im");
    const double step = std::isnan(verify) ? g.step_or(1e-3) : verify;
    if (!(step > 0.0))
        throw std::invalid_argument("finite-difference step must be positive");
    const double tol = g.tol_or(1e-8);
    const GridSpec grid = parse_grid(grid_arg);

    const ScalarField3 u = harmonic_solution(f, t, part_arg == "re" ? Part::Re : Part::Im);
    const ScalarField field = u.field();
    const PdeOperator lap = PdeOperator::laplace3d();

    std::string csv = "x,y,z,u,fd_residual\n";
    double max_r = 0.0, sum_r = 0.0;
    Point3 argmax{};
    const auto pts = grid.points();
    for (const auto& p : pts) {
        const double value = u(p).real();
        const double r = apply_fd(lap, field, p, step).real();
        sum_r += std::abs(r);
        if (std::abs(r) > max_r) {
            max_r = std::abs(r);
            argmax = p;
        }
        csv += format_double(p.x) + "," + format_double(p.y) + "," + format_double(p.z) + "," + format_double(value)
               + "," + format_double(r) + "\n";
    }
    const bool pass = max_r <= tol;

    std::ostream* report = &out;
    if (out_path.empty() || out_path == "-") {
        out << csv;
        report = &err;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot write '" + out_path + "'");
        file << csv;
    }
    const double mean = sum_r / static_cast<double>(pts.size());
    if (g.json_out(false)) {
        *report << json{{"config",
                         {{"f", json_io::encode(f)},
                          {"t", json_io::encode(t)},
                          {"part", part_arg},
                          {"grid", grid_arg},
                          {"step", step},
                          {"tol", tol}}},
                        {"summary",
                         {{"points", pts.size()},
                          {"max", max_r},
                          {"mean", mean},
                          {"argmax", json_io::encode(argmax)}}},
                        {"pass", pass}}
                       .dump(2)
                << "\n";
    } else {
        *report << "points: " << pts.size() << "  step: " << format_double(step) << "  tol: " << format_double(tol)
                << "\nmax |fd_residual|: " << format_double(max_r) << " at (" << format_double(argmax.x) << ", "
                << format_double(argmax.y) << ", " << format_double(argmax.z) << ")\nmean |fd_residual|: "
                << format_double(mean) << "\n"
                << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kPass : kVerifyFailed;
}

// -- cauchy-check -------------------------------------------------------

int cmd_cauchy_check(const Globals& g, const std::string& map_arg, const std::string& point_arg,
                     const std::vector<int>& nodes, std::ostream& out)
{
    const GMonogenicMap m = json_io::decode_map(load(map_arg));
    const Point3 p = parse_point(point_arg);
    const double tol = g.tol_or(1e-10);
    if (nodes.empty())
        throw std::invalid_argument("--nodes needs at least one value");

    const Quaternion direct = m(p);
    // Errors below this floor are rounding, not quadrature.
    const double floor = 1e-13 * (1.0 + norm(direct));
    json rows = json::array();
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double last = 0.0;
    for (int n : nodes) {
        last = norm(cauchy_eval(m, p, n) - direct);
        monotone = monotone && last <= std::max(prev, floor);
        prev = last;
        rows.push_back({{"nodes", n}, {"error", last}});
    }
    const bool pass = monotone && last <= tol;
    if (g.json_out(true)) {
        out << json{{"point", json_io::encode(p)},
                    {"eval", json_io::encode(direct)},
                    {"convergence", rows},
                    {"monotone", monotone},
                    {"tol", tol},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        for (const auto& r : rows)
            out << "nodes " << r["nodes"].get<int>() << "  error " << format_double(r["error"].get<double>()) << "\n";
        out << (monotone ? "monotone" : "NOT monotone") << "\n" << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kPass : kVerifyFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks)
{
    CLI::App app{"G-monogenic mappings over the complexified quaternions", "gmono"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--tol", g.tol, "Verification tolerance (command-specific default)");
    app.add_option("--step", g.step, "Finite-difference step (command-specific default)");

    auto* table = app.add_subcommand("table", "Multiplication table and classical basis axioms");

    std::string map_arg, point_arg, demo, grid_arg = "-1:1:5", pde_arg, f_arg = "w2", t_arg = "0", part = "re",
                                          out_path;
    std::vector<std::string> a_args;
    std::vector<int> nodes{32, 64, 128, 256};
    double verify = std::numeric_limits<double>::quiet_NaN();

    auto* eval = app.add_subcommand("eval", "Evaluate a map at a point");
    eval->add_option("--map", map_arg, "Map JSON file (or inline JSON)")->required();
    eval->add_option("--point", point_arg, "x,y,z")->required();

    auto* cr = app.add_subcommand("check-cr", "Cauchy-Riemann type residuals over a grid");
    cr->add_option("--map", map_arg, "Map JSON file (or inline JSON)");
    cr->add_option("--demo", demo, "Built-in field instead of a map: xi2e1");
    cr->add_option("--grid", grid_arg, "lo:hi:n[,lo:hi:n,lo:hi:n]")->capture_default_str();

    auto* solve = app.add_subcommand("solve-char", "Roots b of the characteristic equation for given a");
    solve->add_option("--pde", pde_arg, "Operator JSON file, or laplace3d / example5")->required();
    solve->add_option("--a", a_args, "re,im (repeatable)")->required()->allow_extra_args(false);

    auto* lap = app.add_subcommand("laplace", "Harmonic field Re/Im F(x + iy sin t + iz cos t) on a grid");
    lap->add_option("--f", f_arg, "Function JSON file or preset")->capture_default_str();
    lap->add_option("--t", t_arg, "re,im")->capture_default_str();
    lap->add_option("--part", part, "re or im")->capture_default_str();
    lap->add_option("--grid", grid_arg, "lo:hi:n[,lo:hi:n,lo:hi:n]")->capture_default_str();
    lap->add_option("--out", out_path, "CSV output path (default stdout)");
    lap->add_option("--verify", verify, "Finite-difference step for the residual column (default 1e-3)");

    auto* cauchy = app.add_subcommand("cauchy-check", "Contour-integral evaluation against direct evaluation");
    cauchy->add_option("--map", map_arg, "Map JSON file (or inline JSON)")->required();
    cauchy->add_option("--point", point_arg, "x,y,z")->required();
    cauchy->add_option("--nodes", nodes, "Node counts")->delimiter(',')->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (*table)
            return cmd_table(g, hooks, out);
        if (*eval)
            return cmd_eval(g, map_arg, point_arg, out);
        if (*cr)
            return cmd_check_cr(g, map_arg, demo, grid_arg, out);
        if (*solve)
            return cmd_solve_char(g, pde_arg, a_args, out);
        if (*lap)
            return cmd_laplace(g, f_arg, t_arg, part, grid_arg, out_path, verify, out, err);
        if (*cauchy)
            return cmd_cauchy_check(g, map_arg, point_arg, nodes, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace gmono::cli
