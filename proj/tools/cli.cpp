#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "isokit/curves.hpp"
#include "isokit/error.hpp"
#include "isokit/io.hpp"
#include "isokit/odes.hpp"
#include "isokit/singular.hpp"
#include "isokit/surfaces.hpp"
#include "isokit/variational.hpp"

namespace isokit::cli {

namespace {

using io::Json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> split_numbers(const std::string& text, char sep, const std::string& what)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "cannot parse '" + item + "' as a number");
        }
    }
    return out;
}

std::pair<double, double> parse_range(const std::string& text, const std::string& what)
{
    auto v = split_numbers(text, ':', what);
    if (v.size() != 2 || !(v[0] < v[1])) throw CLI::ValidationError(what, "expected LO:HI with LO < HI");
    return {v[0], v[1]};
}

std::pair<int, int> parse_grid(const std::string& text)
{
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        const int n = std::stoi(text.substr(0, x));
        const int m = std::stoi(text.substr(x + 1));
        if (n < 2 || m < 2) throw std::invalid_argument(text);
        return {n, m};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--grid", "expected NxM with N, M >= 2");
    }
}

/// log:c,d | power:c,p,d | poly:z0,z1,z2 | inverse:z2,z1
Profile parse_profile(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--profile", "expected KIND:coefficients");
    const std::string kind = text.substr(0, colon);
    const auto k = split_numbers(text.substr(colon + 1), ',', "--profile");
    auto need = [&](std::size_t n) {
        if (k.size() != n) {
            throw CLI::ValidationError("--profile", kind + " takes " + std::to_string(n) + " coefficients");
        }
    };
    if (kind == "log") {
        need(2);
        return ClosedFormProfile{"log", 0.0, k[0], 0.0, k[1]}.profile();
    }
    if (kind == "inverse") {
        need(2);
        return ClosedFormProfile{"inverse", 0.0, 0.0, k[0], k[1]}.profile();
    }
    if (kind == "poly") {
        need(3);
        const double z0 = k[0], z1 = k[1], z2 = k[2];
        return [=](double t) { return ProfileJet{z0 + z1 * t + z2 * t * t, z1 + 2.0 * z2 * t, 2.0 * z2}; };
    }
    if (kind == "power") {
        need(3);
        const double c = k[0], p = k[1], d = k[2];
        return [=](double t) {
            if (!(t > 0.0)) fail(ErrorCode::DomainError, "power profile requires t > 0");
            return ProfileJet{c * std::pow(t, p) + d, c * p * std::pow(t, p - 1.0),
                              c * p * (p - 1.0) * std::pow(t, p - 2.0)};
        };
    }
    throw CLI::ValidationError("--profile", "unknown profile kind '" + kind + "'");
}

LineReference parse_line_reference(const std::string& s) { return s == "lx" ? LineReference::Lx : LineReference::Lz; }
PlaneReference parse_plane_reference(const std::string& s)
{
    return s == "xy" ? PlaneReference::Pi_xy : PlaneReference::Pi_yz;
}

int panels_from_env(int fallback)
{
    const char* env = std::getenv("ISOKIT_PANELS");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        std::size_t used = 0;
        const int value = std::stoi(env, &used);
        if (used != std::string(env).size() || value < 2) throw std::invalid_argument(env);
        return value;
    } catch (const std::exception&) {
        throw CLI::ValidationError("ISOKIT_PANELS", "must be an integer >= 2");
    }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer)
{
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    writer(file);
    if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void emit_json(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_file(path, [&](std::ostream& f) { f << j.dump(2) << '\n'; });
    }
}

std::string sidecar_path(const std::string& mesh)
{
    const auto dot = mesh.find_last_of('.');
    const auto slash = mesh.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    return (has_ext ? mesh.substr(0, dot) : mesh) + ".H.csv";
}

// Options shared by the surface-building commands.
struct SurfaceOptions {
    std::string kind = "revolution";
    std::string profile;
    std::string t_range = "1:2";
    std::string theta_range;
    double pitch = 0.0;
    double a = 0.0, b = 1.0, c = 0.0, c1 = 0.0, c2 = 0.0;

    void add_params(CLI::App* cmd, bool with_kind_option)
    {
        if (with_kind_option) {
            cmd->add_option("--surface", kind, "revolution | helicoidal | parabolic")
                ->check(CLI::IsMember({"revolution", "helicoidal", "parabolic"}));
        }
        cmd->add_option("--profile", profile, "log:c,d | power:c,p,d | poly:z0,z1,z2 | inverse:z2,z1")->required();
        cmd->add_option("--t-range", t_range, "profile parameter range LO:HI");
        cmd->add_option("--theta-range", theta_range, "orbit parameter range LO:HI");
        cmd->add_option("--pitch", pitch, "helicoidal pitch c");
        cmd->add_option("--a", a);
        cmd->add_option("--b", b);
        cmd->add_option("--c", c);
        cmd->add_option("--c1", c1);
        cmd->add_option("--c2", c2);
    }

    ParamSurface build() const
    {
        const Profile z = parse_profile(profile);
        const auto [t0, t1] = parse_range(t_range, "--t-range");
        std::pair<double, double> th{kind == "parabolic" ? -1.0 : 0.0, kind == "parabolic" ? 1.0 : kTwoPi};
        if (!theta_range.empty()) th = parse_range(theta_range, "--theta-range");
        if (kind == "helicoidal") return make_helicoidal({z, pitch, t0, t1, th.first, th.second});
        if (kind == "parabolic") return make_parabolic_revolution({a, b, c, c1, c2, z, t0, t1, th.first, th.second});
        return make_revolution({z, t0, t1, th.first, th.second});
    }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"isokit: catenaries and singular minimal surfaces in simply isotropic space", "isokit"};
    app.require_subcommand(1);

    // catenary
    auto* catenary = app.add_subcommand("catenary", "sample a closed-form alpha-catenary as CSV");
    CatenaryFamily family;
    std::string cat_range;
    int cat_n = 101;
    std::string cat_out;
    catenary->add_option("--alpha", family.alpha);
    catenary->add_option("--c", family.c);
    catenary->add_option("--d", family.d);
    catenary->add_option("--lambda", family.lambda);
    catenary->add_option("--range", cat_range, "T0:T1")->required();
    catenary->add_option("--n", cat_n, "number of samples")->check(CLI::Range(2, 10'000'000));
    catenary->add_option("--out", cat_out, "CSV path (default: standard output)");

    // minimize
    auto* minimize_cmd = app.add_subcommand("minimize", "critical curve of the discrete weight functional");
    std::string min_ref = "lz";
    WeightFunctionalSpec min_spec;
    std::string min_endpoints;
    int min_n = 200;
    std::string min_out, min_json;
    minimize_cmd->add_option("--ref", min_ref)->check(CLI::IsMember({"lz", "lx"}));
    minimize_cmd->add_option("--alpha", min_spec.alpha);
    minimize_cmd->add_option("--lambda", min_spec.lambda);
    minimize_cmd->add_option("--endpoints", min_endpoints, "ta,za,tb,zb")->required();
    minimize_cmd->add_option("--n", min_n, "number of cells")->check(CLI::Range(2, 10'000'000));
    minimize_cmd->add_option("--out", min_out, "CSV path for the curve");
    minimize_cmd->add_option("--json", min_json, "JSON path (default: standard output)");

    // catenoid
    auto* catenoid = app.add_subcommand("catenoid", "isotropic catenoid through two coaxial circles");
    CatenoidBoundary boundary;
    std::string cat_mesh, cat_grid = "32x64";
    catenoid->add_option("--r1", boundary.r1)->required();
    catenoid->add_option("--z1", boundary.z1)->required();
    catenoid->add_option("--r2", boundary.r2)->required();
    catenoid->add_option("--z2", boundary.z2)->required();
    catenoid->add_option("--mesh", cat_mesh, "optional OBJ output");
    catenoid->add_option("--grid", cat_grid, "NxM mesh vertices");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "generate an invariant surface, report H and relative area");
    SurfaceOptions surf;
    std::string surf_mesh, surf_grid = "32x32", surf_json;
    surface_cmd->add_option("kind", surf.kind, "revolution | helicoidal | parabolic")
        ->required()
        ->check(CLI::IsMember({"revolution", "helicoidal", "parabolic"}));
    surf.add_params(surface_cmd, false);
    surface_cmd->add_option("--mesh", surf_mesh, "OBJ output; per-vertex H goes to <mesh>.H.csv");
    surface_cmd->add_option("--grid", surf_grid, "NxM mesh vertices");
    surface_cmd->add_option("--json", surf_json, "JSON path (default: standard output)");

    // classify
    auto* classify = app.add_subcommand("classify", "singular minimal invariant surfaces");
    std::string cls_kind, cls_ref = "yz";
    ParabolicParameters cls_params;
    double cls_pitch = 0.0;
    FamilyConstants cls_constants;
    classify->add_option("kind", cls_kind, "helicoidal | parabolic")
        ->required()
        ->check(CLI::IsMember({"helicoidal", "parabolic"}));
    classify->add_option("--ref", cls_ref)->check(CLI::IsMember({"yz", "xy"}));
    classify->add_option("--c", cls_pitch, "helicoidal pitch, or parabolic c");
    classify->add_option("--a", cls_params.a);
    classify->add_option("--b", cls_params.b);
    classify->add_option("--c1", cls_params.c1);
    classify->add_option("--c2", cls_params.c2);
    classify->add_option("--z1", cls_constants.z1);
    classify->add_option("--z2", cls_constants.z2);

    // ivp
    auto* ivp = app.add_subcommand("ivp", "axis-crossing profile z(0)=a, z'(0)=0 by Picard iteration");
    double ivp_a = 1.0;
    PicardOptions ivp_options;
    std::string ivp_out, ivp_json;
    ivp->add_option("--a", ivp_a)->required();
    ivp->add_option("--tol", ivp_options.tol);
    ivp->add_option("--nodes", ivp_options.nodes, "odd grid node count");
    ivp->add_option("--out", ivp_out, "CSV path t,z,zp");
    ivp->add_option("--json", ivp_json, "JSON path (default: standard output)");

    // residual
    auto* residual = app.add_subcommand("residual", "max residual of a characterization on a grid");
    std::string res_check;
    std::string res_ref;
    double res_alpha = 1.0, res_lambda = 0.0, res_threshold = 1e-9;
    std::string res_csv, res_range = "1:2", res_grid = "50x16";
    int res_n = 100;
    SurfaceOptions res_surf;
    residual->add_option("--check", res_check, "el | sms")->required()->check(CLI::IsMember({"el", "sms"}));
    residual->add_option("--ref", res_ref, "lz | lx for el, yz | xy for sms")
        ->check(CLI::IsMember({"lz", "lx", "yz", "xy"}));
    residual->add_option("--alpha", res_alpha);
    residual->add_option("--lambda", res_lambda);
    residual->add_option("--threshold", res_threshold);
    residual->add_option("--csv", res_csv, "el: sampled t,x,z curve instead of --profile");
    residual->add_option("--range", res_range, "el: parameter range LO:HI");
    residual->add_option("--n", res_n, "el: grid points")->check(CLI::Range(2, 10'000'000));
    residual->add_option("--grid", res_grid, "sms: NxM grid");
    residual->add_option("--surface", res_surf.kind, "sms: revolution | helicoidal | parabolic")
        ->check(CLI::IsMember({"revolution", "helicoidal", "parabolic"}));
    residual->add_option("--profile", res_surf.profile, "log:c,d | power:c,p,d | poly:z0,z1,z2 | inverse:z2,z1");
    residual->add_option("--t-range", res_surf.t_range);
    residual->add_option("--theta-range", res_surf.theta_range);
    residual->add_option("--pitch", res_surf.pitch);
    residual->add_option("--a", res_surf.a);
    residual->add_option("--b", res_surf.b);
    residual->add_option("--c", res_surf.c);
    residual->add_option("--c1", res_surf.c1);
    residual->add_option("--c2", res_surf.c2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (catenary->parsed()) {
            const auto [t0, t1] = parse_range(cat_range, "--range");
            const PlaneCurve curve = catenary_curve(family, t0, t1);
            if (cat_out.empty()) {
                io::write_curve_csv(out, curve, t0, t1, cat_n);
            } else {
                write_file(cat_out, [&](std::ostream& f) { io::write_curve_csv(f, curve, t0, t1, cat_n); });
            }
            return 0;
        }

        if (minimize_cmd->parsed()) {
            const auto e = split_numbers(min_endpoints, ',', "--endpoints");
            if (e.size() != 4) throw CLI::ValidationError("--endpoints", "expected ta,za,tb,zb");
            min_spec.reference = parse_line_reference(min_ref);
            const MinimizeResult result = minimize(min_spec, {e[0], e[1], e[2], e[3]}, min_n);
            if (!min_out.empty()) {
                write_file(min_out, [&](std::ostream& f) { io::write_curve_csv(f, result.curve); });
            }
            emit_json(io::minimize_json(result), min_json, out);
            return 0;
        }

        if (catenoid->parsed()) {
            const CatenoidSolution s = solve_catenoid_boundary(boundary);
            if (s.status == CatenoidStatus::NoSolution) {
                out << Json{{"status", "NoSolution"}}.dump() << '\n';
                err << "no isotropic catenoid joins circles of equal radius at different heights\n";
                return 1;
            }
            if (s.status == CatenoidStatus::Degenerate) {
                out << Json{{"status", "Degenerate"}, {"d", s.d}}.dump() << '\n';
                return 0;
            }
            out << Json{{"c", s.c}, {"d", s.d}}.dump() << '\n';
            if (!cat_mesh.empty()) {
                const auto [nu, nv] = parse_grid(cat_grid);
                const ParamSurface surface = make_revolution({ClosedFormProfile{"log", 0.0, s.c, 0.0, s.d}.profile(),
                                                              std::min(boundary.r1, boundary.r2),
                                                              std::max(boundary.r1, boundary.r2), 0.0, kTwoPi});
                write_file(cat_mesh, [&](std::ostream& f) { io::write_obj(f, surface, {nu, nv, true}); });
            }
            return 0;
        }

        if (surface_cmd->parsed()) {
            const ParamSurface surface = surf.build();
            const auto [nu, nv] = parse_grid(surf_grid);
            const int panels = panels_from_env(kDefaultSurfacePanels);
            const io::MeshGrid grid{nu, nv, true};
            double max_h = 0.0;
            const ParamRect& d = surface.domain();
            for (int i = 0; i < nu; ++i) {
                for (int j = 0; j < nv; ++j) {
                    const double u = d.u_lo + (d.u_hi - d.u_lo) * i / (nu - 1);
                    const double v = d.v_lo + (d.v_hi - d.v_lo) * j / (nv - 1);
                    max_h = std::max(max_h, std::abs(mean_curvature(surface, u, v)));
                }
            }
            Json j;
            j["surface"] = surf.kind;
            j["vertices"] = nu * nv;
            j["relative_area"] = relative_area(surface, d, panels, panels);
            j["max_abs_H"] = max_h;
            j["panels"] = panels;
            if (!surf_mesh.empty()) {
                write_file(surf_mesh, [&](std::ostream& f) { io::write_obj(f, surface, grid); });
                const std::string sidecar = sidecar_path(surf_mesh);
                write_file(sidecar, [&](std::ostream& f) { io::write_vertex_curvature_csv(f, surface, grid); });
                j["mesh"] = surf_mesh;
                j["curvature_csv"] = sidecar;
            }
            emit_json(j, surf_json, out);
            return 0;
        }

        if (classify->parsed()) {
            const PlaneReference ref = parse_plane_reference(cls_ref);
            ClassificationReport report;
            if (cls_kind == "helicoidal") {
                report = classify_helicoidal(cls_pitch, ref, cls_constants);
            } else {
                cls_params.c = cls_pitch;
                report = classify_parabolic_revolution(cls_params, ref, cls_constants);
            }
            out << io::report_json(report).dump(2) << '\n';
            return 0;
        }

        if (ivp->parsed()) {
            const IVPResult result = picard_solve_degenerate(ivp_a, ivp_options);
            if (!ivp_out.empty()) write_file(ivp_out, [&](std::ostream& f) { io::write_ivp_csv(f, result); });
            emit_json(io::ivp_json(result), ivp_json, out);
            return 0;
        }

        if (residual->parsed()) {
            double worst = 0.0;
            if (res_check == "el") {
                WeightFunctionalSpec spec{res_ref == "lx" ? LineReference::Lx : LineReference::Lz, res_alpha,
                                          res_lambda};
                if (!res_csv.empty()) {
                    std::ifstream file(res_csv);
                    if (!file) throw std::runtime_error("cannot open '" + res_csv + "'");
                    const PlaneCurve curve = io::read_curve_csv(file);
                    const Profile graph = [&curve](double t) {
                        const CurveJet j = curve(t);
                        return ProfileJet{j.z, j.dz / j.dx, curvature(curve, t)};
                    };
                    // Interior points of the sampled grid, away from the one-sided ends.
                    const double h = (curve.t_hi() - curve.t_lo()) / res_n;
                    for (int i = 1; i < res_n; ++i) {
                        worst = std::max(worst, std::abs(el_residual(spec, graph, curve.t_lo() + i * h)));
                    }
                } else {
                    if (res_surf.profile.empty()) throw CLI::ValidationError("--profile", "el needs --profile or --csv");
                    const Profile z = parse_profile(res_surf.profile);
                    const auto [t0, t1] = parse_range(res_range, "--range");
                    for (int i = 0; i < res_n; ++i) {
                        const double t = t0 + (t1 - t0) * i / (res_n - 1);
                        worst = std::max(worst, std::abs(el_residual(spec, z, t)));
                    }
                }
            } else {
                if (res_surf.profile.empty()) throw CLI::ValidationError("--profile", "sms needs --profile");
                if (res_surf.theta_range.empty()) {
                    res_surf.theta_range = res_surf.kind == "parabolic" ? "-0.5:0.5" : "-1.2:1.2";
                }
                const ParamSurface surface = res_surf.build();
                const SingularSpec spec{parse_plane_reference(res_ref), res_alpha, res_lambda};
                const auto [nu, nv] = parse_grid(res_grid);
                const ParamRect& d = surface.domain();
                for (int i = 0; i < nu; ++i) {
                    for (int j = 0; j < nv; ++j) {
                        const double u = d.u_lo + (d.u_hi - d.u_lo) * i / (nu - 1);
                        const double v = d.v_lo + (d.v_hi - d.v_lo) * j / (nv - 1);
                        worst = std::max(worst, std::abs(sms_residual(surface, spec, u, v)));
                    }
                }
            }
            const bool pass = worst < res_threshold;
            out << Json{{"check", res_check}, {"max_residual", worst}, {"threshold", res_threshold}, {"pass", pass}}
                       .dump()
                << '\n';
            return pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace isokit::cli
