#include "contri/complex.hpp"
#include "contri/error.hpp"
#include "contri/homology.hpp"

namespace contri {

BallCertificate certify_ball(const SimplicialComplex& x) {
  const auto cert = certify_manifold(x);
  if (!cert.pure || !cert.pseudomanifold || !cert.links_ok)
    throw Error(ErrorCode::NotManifoldWithBoundary, cert.failure.empty() ? "not a manifold" : cert.failure);
  if (greedy_collapsible(x)) return BallCertificate::Collapsible;
  if (cert.closed || !homology(x).reduced_trivial()) return BallCertificate::Fail;
  const auto boundary = boundary_subcomplex(x);
  return low_dim_type(boundary, x.dimension() - 1) == PlType::Sphere ? BallCertificate::HomologyBall
                                                                       : BallCertificate::Fail;
}

}  // namespace contri
