#include "modfol/cli.hpp"

#include "modfol/checks.hpp"
#include "modfol/config.hpp"
#include "modfol/dmf.hpp"
#include "modfol/eisenstein.hpp"
#include "modfol/error.hpp"
#include "modfol/foliation.hpp"
#include "modfol/gaussmanin.hpp"
#include "modfol/periods.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace modfol {

namespace {

using nlohmann::json;
using cd = std::complex<double>;

// Parses one real starting at s[pos]; returns false when no number is present.
bool read_real(const std::string& s, std::size_t& pos, double& v)
{
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    v = std::strtod(begin, &end);
    if (end == begin) {
        return false;
    }
    pos += static_cast<std::size_t>(end - begin);
    return true;
}

std::string fmt_real(double v, int digits = 17)
{
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

template <class Real>
std::string fmt_complex(const Complex<Real>& z, int digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << z.real();
    const Real im = z.imag();
    os << (im < 0 ? "-" : "+") << std::setprecision(digits) << (im < 0 ? Real(-im) : im) << "i";
    return os.str();
}

json complex_json(cd z)
{
    return json::array({z.real(), z.imag()});
}

template <class Real>
json complex_json_str(const Complex<Real>& z, int digits)
{
    std::ostringstream re, im;
    re << std::setprecision(digits) << z.real();
    im << std::setprecision(digits) << z.imag();
    return json::array({re.str(), im.str()});
}

json series_json(const QSeries& s)
{
    json coeffs = json::array();
    for (int e = s.valuation(); e < s.order(); ++e) {
        coeffs.push_back(to_string(s.coeff(e)));
    }
    return {{"valuation", s.valuation()}, {"coeffs", coeffs}, {"order", s.order()}};
}

json envelope(const std::string& command)
{
    return {{"schema_version", kSchemaVersion}, {"command", command}};
}

QSeries named_series(const std::string& name, int highest)
{
    const int order = highest + 1;
    if (name == "E2") {
        return eisenstein_series(1, order).series;
    }
    if (name == "E4") {
        return eisenstein_series(2, order).series;
    }
    if (name == "E6") {
        return eisenstein_series(3, order).series;
    }
    if (name == "delta") {
        return discriminant_series(std::max(order, 4)).truncated(order);
    }
    if (name == "j") {
        return j_series(std::max(order, 2)).truncated(order);
    }
    throw std::invalid_argument("unknown series '" + name + "' (E2, E4, E6, delta, j, g-frame)");
}

struct Context {
    Config config;
    std::ostream& out;
    std::ostream& err;
};

int cmd_qexp(Context& ctx, const std::string& name, int highest)
{
    if (highest < 0) {
        throw std::invalid_argument("N must be non-negative");
    }
    const bool json_out = ctx.config.format == OutputFormat::Json;
    if (name == "g-frame") {
        // g_k = a_k E_2k with a = (u, 12 u^2, 8 u^3), u = 2 pi i / 12.
        const auto a = g_constants();
        const char* labels[] = {"u", "12 u^2", "8 u^3"};
        json j = envelope("qexp");
        j["series"] = name;
        j["frame_unit"] = complex_json(frame_unit<double>());
        for (int k = 1; k <= 3; ++k) {
            const QSeries s = eisenstein_series(k, highest + 1).series;
            if (json_out) {
                j["g" + std::to_string(k)] = {{"factor", complex_json(a[k - 1])},
                                              {"factor_symbolic", labels[k - 1]},
                                              {"E", series_json(s)}};
            } else {
                ctx.out << "g" << k << " = " << labels[k - 1] << " * (" << s.to_string() << ")\n";
            }
        }
        if (json_out) {
            ctx.out << j.dump(2) << "\n";
        } else {
            ctx.out << "u = 2 pi i / 12 = " << fmt_complex<double>(frame_unit<double>(), 17) << "\n";
        }
        return 0;
    }
    const QSeries s = named_series(name, highest);
    if (json_out) {
        json j = envelope("qexp");
        j["series"] = name;
        j.update(series_json(s));
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << s.to_string() << "\n";
    }
    return 0;
}

void print_dmf(Context& ctx, const std::string& command, const DmfElement& f)
{
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope(command);
        j["result"] = json::parse(f.to_json());
        j["text"] = f.to_string();
        const auto [m, n] = f.grade();
        j["weight"] = m;
        j["n"] = n;
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << f.to_string() << "\n";
    }
}

int cmd_hecke(Context& ctx, const std::string& expr, unsigned p, std::optional<int> order)
{
    const DmfElement f = parse_dmf(expr);
    print_dmf(ctx, "hecke", hecke(f, p, order.value_or(ctx.config.order)));
    return 0;
}

int cmd_diff(Context& ctx, const std::string& expr, unsigned times)
{
    DmfElement f = parse_dmf(expr);
    for (unsigned i = 0; i < times; ++i) {
        f = diff_op(f);
    }
    print_dmf(ctx, "diff", f);
    return 0;
}

BasisTag parse_basis(const std::string& s)
{
    if (s == "canonical") {
        return BasisTag::Canonical;
    }
    if (s == "classical") {
        return BasisTag::Classical;
    }
    throw std::invalid_argument("basis must be canonical or classical");
}

int cmd_gm_print(Context& ctx, const std::string& basis)
{
    const auto cm = matrices(parse_basis(basis));
    const char* vars[] = {"t0", "t1", "t2", "t3"};
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("gm print");
        j["basis"] = std::string(to_string(cm.basis));
        j["discriminant"] = cm.discriminant.to_compact_string();
        json mats = json::array();
        for (const auto& a : cm.a) {
            mats.push_back(json::array({json::array({a.e[0][0].to_compact_string(), a.e[0][1].to_compact_string()}),
                                        json::array({a.e[1][0].to_compact_string(), a.e[1][1].to_compact_string()})}));
        }
        j["A"] = mats;
        ctx.out << j.dump(2) << "\n";
        return 0;
    }
    ctx.out << "basis " << to_string(cm.basis) << "\n";
    ctx.out << "Delta = " << cm.discriminant.to_string() << "\n";
    for (std::size_t i = 0; i < 4; ++i) {
        ctx.out << "A (d" << vars[i] << "):\n";
        for (int r = 0; r < 2; ++r) {
            ctx.out << "  [" << cm.a[i].e[r][0].to_string() << ", " << cm.a[i].e[r][1].to_string() << "]\n";
        }
    }
    return 0;
}

int cmd_gm_verify(Context& ctx)
{
    std::vector<IdentityCheck> all = verify_det_identities();
    for (auto& c : verify_basis_change()) {
        all.push_back(std::move(c));
    }
    all.push_back(verify_discriminant_cocycle());
    bool ok = true;
    json checks = json::array();
    for (const auto& c : all) {
        ok = ok && c.pass;
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (ctx.config.format != OutputFormat::Json) {
            ctx.out << (c.pass ? "pass  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        }
    }
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("gm verify");
        j["checks"] = checks;
        j["pass"] = ok;
        ctx.out << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_gm_transport(Context& ctx, const std::string& path_arg, const std::string& basis)
{
    // The argument is either a JSON document or the name of a file holding one.
    const std::string text = !path_arg.empty() && path_arg.front() == '[' ? path_arg : read_file(path_arg);
    const auto waypoints = parse_waypoints_json(text);
    if (waypoints.size() < 2) {
        throw std::invalid_argument("transport path needs at least two waypoints");
    }
    const BasisTag tag = parse_basis(basis);
    if (tag != BasisTag::Classical) {
        throw std::invalid_argument("transport of period matrices uses the classical basis (dx/y, x dx/y)");
    }
    OdeOptions opt;
    opt.rtol = ctx.config.transport_rtol;
    const PeriodMatrix p0 = period_matrix_general(waypoints.front());
    const auto r = picard_fuchs_transport(p0, waypoints, tag, opt);
    const auto direct = align_left_sl2z(r.end, period_matrix_general(waypoints.back()));
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("gm transport");
        j["start"] = json::array({complex_json(p0.x1), complex_json(p0.x2), complex_json(p0.x3), complex_json(p0.x4)});
        j["end"] = json::array({complex_json(r.end.x1), complex_json(r.end.x2), complex_json(r.end.x3), complex_json(r.end.x4)});
        j["min_abs_delta"] = r.min_abs_delta;
        j["steps_accepted"] = r.stats.accepted;
        j["steps_rejected"] = r.stats.rejected;
        j["agm_agreement"] = (direct.aligned - r.end).max_abs();
        j["agm_transform"] = json::array({direct.transform.a, direct.transform.b, direct.transform.c, direct.transform.d});
        ctx.out << j.dump(2) << "\n";
        return 0;
    }
    auto row = [&](cd a, cd b) { ctx.out << "  " << fmt_complex<double>(a, 15) << "  " << fmt_complex<double>(b, 15) << "\n"; };
    ctx.out << "start:\n";
    row(p0.x1, p0.x2);
    row(p0.x3, p0.x4);
    ctx.out << "end:\n";
    row(r.end.x1, r.end.x2);
    row(r.end.x3, r.end.x4);
    ctx.out << "min |Delta| along path: " << fmt_real(r.min_abs_delta, 6) << "\n";
    ctx.out << "steps: " << r.stats.accepted << " accepted, " << r.stats.rejected << " rejected\n";
    ctx.out << "distance to AGM periods modulo SL(2,Z): " << fmt_real((direct.aligned - r.end).max_abs(), 3)
            << "  [" << direct.transform.a << " " << direct.transform.b << "; " << direct.transform.c << " "
            << direct.transform.d << "]\n";
    return 0;
}

template <class Real>
int print_periods(Context& ctx, const CurvePointT<Real>& t, int digits)
{
    const PeriodMatrixT<Real> pm = period_matrix(t);
    const BValuesT<Real> b = b_values(pm);
    const Complex<Real> ratio = second_kind_ratio(pm);
    const ReducedTau<Real> red = reduce_tau<Real>(pm.x1 / pm.x3);
    const Complex<Real> det = pm.det();
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("periods");
        j["precision"] = to_string(ctx.config.precision);
        j["t"] = json::array({complex_json_str(t.t1, digits), complex_json_str(t.t2, digits), complex_json_str(t.t3, digits)});
        j["x"] = json::array({complex_json_str(pm.x1, digits), complex_json_str(pm.x2, digits), complex_json_str(pm.x3, digits),
                  complex_json_str(pm.x4, digits)});
        j["det"] = complex_json_str(det, digits);
        j["B1"] = complex_json_str(Complex<Real>(b.b1), digits)[0];
        j["B2"] = complex_json_str(Complex<Real>(b.b2), digits)[0];
        j["B3"] = complex_json_str(b.b3, digits);
        j["I"] = complex_json_str(ratio, digits);
        j["tau_reduced"] = complex_json_str(red.tau, digits);
        j["tau_transform"] = json::array({red.transform.a, red.transform.b, red.transform.c, red.transform.d});
        ctx.out << j.dump(2) << "\n";
        return 0;
    }
    auto line = [&](const char* label, const Complex<Real>& v) {
        ctx.out << std::left << std::setw(6) << label << fmt_complex<Real>(v, digits) << "\n";
    };
    line("x1", pm.x1);
    line("x2", pm.x2);
    line("x3", pm.x3);
    line("x4", pm.x4);
    line("det", det);
    line("B1", Complex<Real>(b.b1));
    line("B2", Complex<Real>(b.b2));
    line("B3", b.b3);
    line("I", ratio);
    line("tau", red.tau);
    return 0;
}

int cmd_periods(Context& ctx, const std::string& t1, const std::string& t2, const std::string& t3)
{
    const cd a = parse_complex(t1), b = parse_complex(t2), c = parse_complex(t3);
    if (ctx.config.precision == FloatMode::High) {
        using C = Complex<HighReal>;
        const CurvePointT<HighReal> t{C(HighReal(a.real()), HighReal(a.imag())), C(HighReal(b.real()), HighReal(b.imag())),
                                      C(HighReal(c.real()), HighReal(c.imag()))};
        return print_periods<HighReal>(ctx, t, 30);
    }
    return print_periods<double>(ctx, CurvePoint{a, b, c}, 17);
}

int cmd_flow(Context& ctx, const std::string& start, double length, std::optional<double> tol,
             std::optional<double> floor, const std::string& csv_path)
{
    const auto v = parse_complex_list(start);
    if (v.size() != 3) {
        throw std::invalid_argument("--start expects three comma-separated values t1,t2,t3");
    }
    FlowOptions opt;
    opt.tol = tol.value_or(ctx.config.flow_tol);
    opt.discriminant_floor = floor.value_or(ctx.config.flow_discriminant_floor);
    const auto traj = flow({v[0], v[1], v[2]}, length, opt);

    auto write_csv = [&](std::ostream& os) {
        os << "# s,re_t1,im_t1,re_t2,im_t2,re_t3,im_t3,abs_delta,b2,abs_b3,dist_to_sing\n";
        os << std::setprecision(17);
        for (const auto& fs : traj.samples) {
            os << fs.s;
            for (cd x : fs.t) {
                os << ',' << x.real() << ',' << x.imag();
            }
            os << ',' << std::abs(fs.delta) << ',' << fs.b2 << ',' << fs.b3_abs << ',' << fs.dist_to_sing << '\n';
        }
    };
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) {
            throw std::invalid_argument("cannot write " + csv_path);
        }
        write_csv(f);
    }
    const FlowSample& last = traj.samples.back();
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("flow");
        json samples = json::array();
        for (const auto& fs : traj.samples) {
            samples.push_back({{"s", fs.s},
                               {"t", json::array({complex_json(fs.t[0]), complex_json(fs.t[1]), complex_json(fs.t[2])})},
                               {"abs_delta", std::abs(fs.delta)},
                               {"b2", std::isnan(fs.b2) ? json(nullptr) : json(fs.b2)},
                               {"abs_b3", std::isnan(fs.b3_abs) ? json(nullptr) : json(fs.b3_abs)},
                               {"dist_to_sing", fs.dist_to_sing},
                               {"near_k", fs.near_k}});
        }
        j["samples"] = samples;
        j["steps_accepted"] = traj.stats.accepted;
        j["steps_rejected"] = traj.stats.rejected;
        ctx.out << j.dump(2) << "\n";
    } else if (ctx.config.format == OutputFormat::Csv && csv_path.empty()) {
        write_csv(ctx.out);
    } else {
        ctx.out << "samples: " << traj.samples.size() << " (" << traj.stats.accepted << " accepted, "
                << traj.stats.rejected << " rejected steps)\n";
        ctx.out << "end s = " << fmt_real(last.s) << "\n";
        for (int i = 0; i < 3; ++i) {
            ctx.out << "t" << i + 1 << " = " << fmt_complex<double>(last.t[i], 15) << "\n";
        }
        ctx.out << "|Delta| = " << fmt_real(std::abs(last.delta), 10) << "  B2 = " << fmt_real(last.b2, 10)
                << "  |B3| = " << fmt_real(last.b3_abs, 10) << "  dist_to_sing = " << fmt_real(last.dist_to_sing, 6)
                << "\n";
        if (!csv_path.empty()) {
            ctx.out << "trajectory written to " << csv_path << "\n";
        }
    }
    return 0;
}

int cmd_verify_all(Context& ctx, const std::vector<int>& ids)
{
    SuiteConfig sc;
    sc.seed = ctx.config.seed;
    sc.tol = ctx.config.tolerances;
    const auto results = run_criteria(sc, ids);
    int passed = 0;
    json arr = json::array();
    for (const auto& r : results) {
        passed += r.pass ? 1 : 0;
        json checks = json::array();
        for (const auto& c : r.checks) {
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"informational", c.informational}});
        }
        arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"checks", checks}});
        if (ctx.config.format != OutputFormat::Json) {
            ctx.out << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.id << " " << r.title << "\n";
            for (const auto& c : r.checks) {
                ctx.out << "    " << (c.informational ? "info " : (c.pass ? "ok   " : "FAIL ")) << c.name
                        << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
            }
        }
    }
    const bool ok = passed == static_cast<int>(results.size());
    if (ctx.config.format == OutputFormat::Json) {
        json j = envelope("verify-all");
        j["seed"] = sc.seed;
        j["criteria"] = arr;
        j["passed"] = passed;
        j["total"] = results.size();
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << passed << "/" << results.size() << " criteria passed (seed " << sc.seed << ")\n";
    }
    return ok ? 0 : 1;
}

} // namespace

std::complex<double> parse_complex(const std::string& text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    auto fail = [&] { return std::invalid_argument("cannot parse complex number '" + text + "'"); };
    if (s.empty()) {
        throw fail();
    }
    std::size_t pos = 0;
    double re = 0, im = 0;
    auto read_imag_unit = [&](double coef) {
        if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j')) {
            ++pos;
            im += coef;
            return true;
        }
        return false;
    };
    // First term.
    double v = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        const double sign = s[pos] == '-' ? -1 : 1;
        if (pos + 1 < s.size() && (s[pos + 1] == 'i' || s[pos + 1] == 'j')) {
            pos += 1;
            read_imag_unit(sign);
        } else if (read_real(s, pos, v)) {
            if (!read_imag_unit(v)) {
                re = v;
            }
        } else {
            throw fail();
        }
    } else if (s[pos] == 'i' || s[pos] == 'j') {
        read_imag_unit(1);
    } else if (read_real(s, pos, v)) {
        if (!read_imag_unit(v)) {
            re = v;
        }
    } else {
        throw fail();
    }
    // Optional imaginary term.
    if (pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-') {
            throw fail();
        }
        const double sign = s[pos] == '-' ? -1 : 1;
        if (pos + 1 < s.size() && (s[pos + 1] == 'i' || s[pos + 1] == 'j')) {
            ++pos;
            read_imag_unit(sign);
        } else if (read_real(s, pos, v)) {
            if (!read_imag_unit(v)) {
                throw fail();
            }
        } else {
            throw fail();
        }
    }
    if (pos != s.size()) {
        throw fail();
    }
    return {re, im};
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text)
{
    std::vector<cd> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_complex(item));
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"modfol: modular forms, periods and the Ramanujan foliation"};
    app.require_subcommand(1);
    app.fallthrough();
    std::optional<std::string> config_path;
    std::string format, precision;
    app.add_option("--config", config_path, std::string("JSON config file (default: $") + kConfigEnv + ")");
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--precision", precision, "double or high")->check(CLI::IsMember({"double", "high"}));

    std::string series_name;
    int qexp_n = 0;
    auto* qexp = app.add_subcommand("qexp", "print a q-expansion up to q^N");
    qexp->add_option("series", series_name, "E2, E4, E6, delta, j or g-frame")->required();
    qexp->add_option("N", qexp_n, "highest exponent shown")->required();

    std::string expr;
    unsigned hecke_p = 2;
    std::optional<int> hecke_order;
    auto* hecke_cmd = app.add_subcommand("hecke", "apply T_p to a polynomial in g1, g2, g3");
    hecke_cmd->add_option("expr", expr)->required();
    hecke_cmd->add_option("p", hecke_p, "prime")->required();
    hecke_cmd->add_option("--order", hecke_order, "q-expansion length used for reconstruction");

    unsigned diff_times = 1;
    auto* diff = app.add_subcommand("diff", "apply the Ramanujan derivation D");
    diff->add_option("expr", expr)->required();
    diff->add_option("--times,-k", diff_times, "number of applications");

    auto* gm = app.add_subcommand("gm", "Gauss-Manin connection");
    gm->require_subcommand(1);
    gm->fallthrough();
    std::string basis = "canonical", path_arg, transport_basis = "classical";
    auto* gm_print = gm->add_subcommand("print", "print the connection matrices");
    gm_print->add_option("--basis", basis)->check(CLI::IsMember({"canonical", "classical"}));
    auto* gm_verify = gm->add_subcommand("verify", "check the exact identities");
    auto* gm_transport = gm->add_subcommand("transport", "transport period matrices along a path");
    gm_transport->add_option("path", path_arg, "JSON waypoint list or a file containing it")->required();
    gm_transport->add_option("--basis", transport_basis)->check(CLI::IsMember({"canonical", "classical"}));

    std::string t1 = "0", t2, t3;
    auto* periods = app.add_subcommand("periods", "normalized period matrix, B-values, I(t), reduced tau");
    periods->add_option("--t1", t1);
    periods->add_option("--t2", t2)->required();
    periods->add_option("--t3", t3)->required();
    bool periods_json = false;
    periods->add_flag("--json", periods_json);

    std::string start, csv_path;
    double length = 1;
    std::optional<double> flow_tol, flow_floor;
    auto* flow_cmd = app.add_subcommand("flow", "integrate the Ramanujan vector field");
    flow_cmd->add_option("--start", start, "t1,t2,t3")->required();
    flow_cmd->add_option("--length", length, "flow time S >= 0");
    flow_cmd->add_option("--tol", flow_tol, "relative tolerance");
    flow_cmd->add_option("--discriminant-floor", flow_floor, "halt when |Delta| < floor (1 + |t|^6); 0 disables");
    flow_cmd->add_option("--csv", csv_path, "write the trajectory to this file");

    std::optional<std::uint64_t> seed;
    std::vector<int> criteria;
    auto* verify = app.add_subcommand("verify-all", "run the acceptance suites");
    verify->add_option("--seed", seed, "seed for randomized suites");
    verify->add_option("--criteria", criteria, "subset of criteria 1-8")->delimiter(',')->check(CLI::Range(1, 8));

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        Context ctx{resolve_config(config_path), out, err};
        if (!format.empty()) {
            ctx.config.format = parse_output_format(format);
        }
        if (!precision.empty()) {
            ctx.config.precision = parse_float_mode(precision);
        }
        if (seed) {
            ctx.config.seed = *seed;
        }
        if (*qexp) {
            return cmd_qexp(ctx, series_name, qexp_n);
        }
        if (*hecke_cmd) {
            return cmd_hecke(ctx, expr, hecke_p, hecke_order);
        }
        if (*diff) {
            return cmd_diff(ctx, expr, diff_times);
        }
        if (*gm_print) {
            return cmd_gm_print(ctx, basis);
        }
        if (*gm_verify) {
            return cmd_gm_verify(ctx);
        }
        if (*gm_transport) {
            return cmd_gm_transport(ctx, path_arg, transport_basis);
        }
        if (*periods) {
            if (periods_json) {
                ctx.config.format = OutputFormat::Json;
            }
            return cmd_periods(ctx, t1, t2, t3);
        }
        if (*flow_cmd) {
            return cmd_flow(ctx, start, length, flow_tol, flow_floor, csv_path);
        }
        if (*verify) {
            return cmd_verify_all(ctx, criteria);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (!expr.empty()) {
            err << "  " << expr << "\n  " << std::string(e.position(), ' ') << "^\n";
        }
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace modfol
