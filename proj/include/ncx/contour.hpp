#pragma once

// Path integrals of n-complex functions along piecewise-linear loops,
// winding numbers in the projected (xi_k, eta_k) planes, and the residue
// identity: the loop integral of f(u)/(u - u0) equals
// 2*pi*f(u0) * sum_k etilde_k * int(u0_k, Gamma_k), where int(.,.) is 1 for
// an interior projection and 0 for an exterior one.

#include <functional>
#include <vector>

#include "ncx/algebra.hpp"
#include "ncx/series.hpp"

namespace ncx {

struct PiecewisePath {
  Variant variant;
  int n;
  std::vector<NComplex> vertices;
  bool closed = true;
};

// Validates (>= 2 vertices, uniform shape) and fills in variant/n.
PiecewisePath make_path(std::vector<NComplex> vertices, bool closed);

// Circle of the given radius in the xi_k/eta_k plane about `center`,
// discretized into `segments` chords.
PiecewisePath plane_circle(const NComplex& center, int k, double radius,
                           int segments);

struct Pole {
  NComplex center;
  int order = 1;
};

// Integrand with optional singularity metadata; integration refuses sample
// points too close to the singular hypersurfaces of the listed poles.
struct Integrand {
  NFunction eval;
  std::vector<Pole> poles;
};

struct QuadratureSpec {
  double tol = 1e-9;   // stop when successive refinements agree to this
  int max_levels = 14;
};

// Composite midpoint rule over the path's segments, with uniform subdivision
// doubling until two successive estimates differ by less than quad.tol in
// modulus.  Throws SingularPath when a sample point comes within
// node_eps * max(|u - pole|, 1) of a pole's singular hypersurfaces, and
// NotConverged when max_levels is exhausted.
NComplex integrate(const Integrand& f, const PiecewisePath& path,
                   const QuadratureSpec& quad = {}, const Tolerances& tol = {});

// Single quadrature pass at a fixed subdivision.  The parallel and serial
// paths fill the same per-piece table and reduce it in index order, so their
// results are bitwise identical; the serial path is the reference kept for
// testing and benchmarking.
NComplex integrate_fixed(const Integrand& f, const PiecewisePath& path,
                         int pieces_per_segment, bool parallel = true,
                         const Tolerances& tol = {});

// Signed winding number of the closed path's projection in the xi_k/eta_k
// plane about the projection of `center` (1-based pair index k).  Throws
// OnCurve when the projected path passes within the nodal margin of the
// projected center.
int winding_number(const PiecewisePath& path, const NComplex& center, int k,
                   const Tolerances& tol = {});

struct ResidueCertificate {
  NComplex integral;
  NComplex predicted;
  std::vector<int> winding;        // per pair plane, k = 1..K
  double max_abs_error = 0.0;      // max |integral - predicted| component
  bool winding_out_of_domain = false;  // some winding not in {0, 1}
};

// Integrates f(u)/(u - u0) along the path and compares against the residue
// prediction assembled from the per-plane winding numbers.
ResidueCertificate residue_check(const Integrand& f, const NComplex& u0,
                                 const PiecewisePath& path,
                                 const QuadratureSpec& quad = {},
                                 const Tolerances& tol = {});

// Finite-difference split of du/(u - u0) into the single-valued part (the
// log-modulus and log-tangent differentials of the geometric form) and the
// cyclic part sum_k etilde_k dphi_k.  `residual` is the defect of
// single_valued + cyclic against mul(du, inverse(u - u0)); it shrinks as
// O(|du|^2).
struct DlogDecomposition {
  NComplex whole;
  NComplex single_valued;
  NComplex cyclic;
  double residual = 0.0;
};

DlogDecomposition dlog_decomposition(const NComplex& u, const NComplex& u0,
                                     const NComplex& du,
                                     const Tolerances& tol = {});

}  // namespace ncx
