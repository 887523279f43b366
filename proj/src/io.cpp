#include "isokit/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "isokit/error.hpp"

namespace isokit::io {

std::string format_real(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_curve_csv(std::ostream& out, const PlaneCurve& curve, double t0, double t1, int n)
{
    if (n < 2) fail(ErrorCode::InvalidInterval, "need at least two samples");
    out << "t,x,z\n";
    for (int i = 0; i < n; ++i) {
        const double t = i == n - 1 ? t1 : t0 + (t1 - t0) * i / (n - 1);
        const CurveJet j = curve(t);
        out << format_real(t) << ',' << format_real(j.x) << ',' << format_real(j.z) << '\n';
    }
}

void write_curve_csv(std::ostream& out, const DiscreteCurve& curve)
{
    out << "t,x,z\n";
    for (std::size_t i = 0; i < curve.t.size(); ++i) {
        out << format_real(curve.t[i]) << ',' << format_real(curve.t[i]) << ',' << format_real(curve.z[i]) << '\n';
    }
}

PlaneCurve read_curve_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,x,z", 0) != 0) {
        fail(ErrorCode::InvalidSpec, "curve CSV must start with the header t,x,z");
    }
    std::vector<double> t, x, z;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a, b, c;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
            fail(ErrorCode::InvalidSpec, "malformed curve CSV row: " + line);
        }
        try {
            t.push_back(std::stod(a));
            x.push_back(std::stod(b));
            z.push_back(std::stod(c));
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidSpec, "non-numeric curve CSV row: " + line);
        }
    }
    return PlaneCurve::from_samples(std::move(t), std::move(x), std::move(z));
}

void write_ivp_csv(std::ostream& out, const IVPResult& result)
{
    out << "t,z,zp\n";
    for (std::size_t i = 0; i < result.t.size(); ++i) {
        out << format_real(result.t[i]) << ',' << format_real(result.z[i]) << ',' << format_real(result.dz[i])
            << '\n';
    }
}

Json ivp_json(const IVPResult& r)
{
    Json j;
    j["a"] = r.a;
    j["R"] = r.radius;
    j["epsilon"] = r.epsilon;
    j["iterations"] = r.iterations;
    j["contraction_ratios"] = r.contraction_ratios;
    j["zpp_origin"] = r.zpp_origin ? Json(*r.zpp_origin) : Json(nullptr);
    return j;
}

Json report_json(const ClassificationReport& report)
{
    Json j;
    j["case"] = to_string(report.kind);
    Json params = Json::object();
    for (const auto& [name, value] : report.parameters) params[name] = value;
    j["parameters"] = params;
    Json constraints = Json::array();
    for (const auto& c : report.constraints) constraints.push_back(Json{{"name", c.name}, {"residual", c.residual}});
    j["constraints"] = constraints;
    if (const auto* closed = std::get_if<ClosedFormProfile>(&report.profile)) {
        j["profile"] = Json{{"kind", closed->kind},
                            {"coefficients",
                             Json{{"t2", closed->quadratic},
                                  {"log_t", closed->log_coeff},
                                  {"inv_t", closed->inverse},
                                  {"const", closed->constant}}}};
    } else if (const auto* ode = std::get_if<OdeProfileHandle>(&report.profile)) {
        Json p = Json::object();
        for (const auto& [name, value] : ode->parameters) p[name] = value;
        j["profile"] = Json{{"kind", "ode"}, {"equation", ode->equation}, {"parameters", p}};
    } else {
        j["profile"] = nullptr;
    }
    if (report.verification_residual) j["verification_residual"] = *report.verification_residual;
    return j;
}

Json minimize_json(const MinimizeResult& r)
{
    Json j;
    j["functional"] = r.functional;
    j["gradient_norm"] = r.gradient_norm;
    j["iterations"] = r.iterations;
    j["descent_fallbacks"] = r.descent_fallbacks;
    j["nodes"] = r.curve.t.size();
    return j;
}

namespace {

struct GridLayout {
    int rows;
    int cols;
    bool wrap;
    double u(int i, const ParamRect& d) const { return d.u_lo + (d.u_hi - d.u_lo) * i / (rows - 1); }
    double v(int j, const ParamRect& d) const
    {
        const int spans = wrap ? cols : cols - 1;
        return d.v_lo + (d.v_hi - d.v_lo) * j / spans;
    }
};

GridLayout layout(const ParamSurface& surface, const MeshGrid& grid)
{
    if (grid.nu < 2 || grid.nv < 2) fail(ErrorCode::InvalidInterval, "mesh grid needs at least 2x2 vertices");
    const ParamRect& d = surface.domain();
    const bool full_turn = std::abs((d.v_hi - d.v_lo) - 2.0 * std::numbers::pi) < 1e-9;
    const bool wrap = grid.wrap_v && full_turn;
    return {grid.nu, grid.nv, wrap};
}

}  // namespace

void write_obj(std::ostream& out, const ParamSurface& surface, const MeshGrid& grid)
{
    const GridLayout g = layout(surface, grid);
    const ParamRect& d = surface.domain();
    for (int i = 0; i < g.rows; ++i) {
        for (int j = 0; j < g.cols; ++j) {
            const IsoVec3 r = surface(g.u(i, d), g.v(j, d)).r;
            out << "v " << format_real(r.x) << ' ' << format_real(r.y) << ' ' << format_real(r.z) << '\n';
        }
    }
    const int face_cols = g.wrap ? g.cols : g.cols - 1;
    for (int i = 0; i + 1 < g.rows; ++i) {
        for (int j = 0; j < face_cols; ++j) {
            const int jn = (j + 1) % g.cols;
            const int a = i * g.cols + j + 1;
            const int b = (i + 1) * g.cols + j + 1;
            const int c = (i + 1) * g.cols + jn + 1;
            const int e = i * g.cols + jn + 1;
            out << "f " << a << ' ' << b << ' ' << c << ' ' << e << '\n';
        }
    }
}

void write_vertex_curvature_csv(std::ostream& out, const ParamSurface& surface, const MeshGrid& grid)
{
    const GridLayout g = layout(surface, grid);
    const ParamRect& d = surface.domain();
    out << "index,u,v,x,y,z,H\n";
    for (int i = 0; i < g.rows; ++i) {
        for (int j = 0; j < g.cols; ++j) {
            const double u = g.u(i, d), v = g.v(j, d);
            const IsoVec3 r = surface(u, v).r;
            out << i * g.cols + j + 1 << ',' << format_real(u) << ',' << format_real(v) << ',' << format_real(r.x)
                << ',' << format_real(r.y) << ',' << format_real(r.z) << ','
                << format_real(mean_curvature(surface, u, v)) << '\n';
        }
    }
}

}  // namespace isokit::io
