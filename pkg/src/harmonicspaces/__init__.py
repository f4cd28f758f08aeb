"""Radial harmonic functions on rank-1 symmetric spaces and their quotients.

Submodules:
  numerics   adaptive Gauss-Kronrod quadrature and central differences
  spaces     model catalogue, volume densities, volumes
  harmonic   phi1 = 1/theta, closed-form and numeric phi0, verification
  quotients  deck groups, quotient distances, injectivity radii, cut loci
  topology   Euler/signature catalogue and volume lower bounds
  cli        the harmonic-spaces command-line tool
"""

from .errors import (
    DepthInsufficient,
    DomainViolation,
    HarmonicSpacesError,
    InvalidPoint,
    NonConvergence,
    SelfCheckFailed,
    UnsupportedModel,
)
from .numerics import Interval, QuadratureResult, derivative, integrate
from .spaces import (
    Family,
    SpaceModel,
    complex_hyperbolic,
    complex_projective,
    domain_end,
    euclidean,
    hyperbolic_space,
    model_volume,
    octonion_hyperbolic,
    octonion_plane,
    parse_model_id,
    quaternion_hyperbolic,
    quaternion_projective,
    sphere,
    theta,
    theta_tilde,
    unit_sphere_volume,
)

__all__ = [
    "DepthInsufficient",
    "DomainViolation",
    "HarmonicSpacesError",
    "InvalidPoint",
    "NonConvergence",
    "SelfCheckFailed",
    "UnsupportedModel",
    "Interval",
    "QuadratureResult",
    "derivative",
    "integrate",
    "Family",
    "SpaceModel",
    "complex_hyperbolic",
    "complex_projective",
    "domain_end",
    "euclidean",
    "hyperbolic_space",
    "model_volume",
    "octonion_hyperbolic",
    "octonion_plane",
    "parse_model_id",
    "quaternion_hyperbolic",
    "quaternion_projective",
    "sphere",
    "theta",
    "theta_tilde",
    "unit_sphere_volume",
]

__version__ = "0.1.0"
