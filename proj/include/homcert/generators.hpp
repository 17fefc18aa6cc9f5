#pragma once

#include <string>
#include <vector>

#include "homcert/complex.hpp"

namespace homcert {

/// Boundary of the (n+1)-simplex: the standard n-sphere triangulation.
SimplicialComplex boundary_sphere(int n);

/// The full (n)-simplex with all of its faces.
SimplicialComplex solid_simplex(int n);

/// The 6-vertex real projective plane (antipodal icosahedron quotient).
SimplicialComplex rp2_six_vertex();

/// The 7-vertex torus.
SimplicialComplex torus_seven_vertex();

/// A 16-vertex triangulation of the Poincare homology 3-sphere
/// (90 facets, f-vector (16, 106, 180, 90)).
SimplicialComplex poincare_sphere();

/// join(S^0 * S^0, P): the double suspension of the Poincare sphere.
SimplicialComplex double_suspension_poincare();

/// Triple suspension of the 6-vertex projective plane.
SimplicialComplex triple_suspension_rp2();

/// Corpus dispatch for the command line: sphere d | simplex d | rp2 | torus
/// | poincare | sigma2p | sigma3rp2. File-based generators (cone, susp,
/// join) are handled by the caller.
SimplicialComplex generate_named(const std::string& name, const std::vector<std::string>& args);

}  // namespace homcert
