#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "isokit/curves.hpp"
#include "isokit/odes.hpp"
#include "isokit/singular.hpp"
#include "isokit/surfaces.hpp"
#include "isokit/variational.hpp"

// Text artifacts: CSV with a header row and 17 significant digits, Wavefront
// style meshes, and JSON documents with insertion-ordered keys.

namespace isokit::io {

using Json = nlohmann::ordered_json;

std::string format_real(double value);

/// `t,x,z` samples of a curve at n uniformly spaced parameters.
void write_curve_csv(std::ostream& out, const PlaneCurve& curve, double t0, double t1, int n);
void write_curve_csv(std::ostream& out, const DiscreteCurve& curve);

/// Reads a `t,x,z` file back as a sampled curve.
PlaneCurve read_curve_csv(std::istream& in);

/// `t,z,zp` samples of an ODE solution.
void write_ivp_csv(std::ostream& out, const IVPResult& result);

Json ivp_json(const IVPResult& result);
Json report_json(const ClassificationReport& report);
Json minimize_json(const MinimizeResult& result);

struct MeshGrid {
    int nu = 32;
    int nv = 32;
    /// Identify the last v column with the first when the v range spans 2 pi.
    bool wrap_v = true;
};

/// Vertex lines `v x y z` in row-major (u outer, v inner) order, then quad
/// faces `f i j k l` with 1-based indices.
void write_obj(std::ostream& out, const ParamSurface& surface, const MeshGrid& grid);

/// `index,u,v,x,y,z,H` for the same vertices as write_obj.
void write_vertex_curvature_csv(std::ostream& out, const ParamSurface& surface, const MeshGrid& grid);

}  // namespace isokit::io
