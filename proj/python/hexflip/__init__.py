"""Sextuples of half-turns in the hyperbolic plane.

Configurations of six disc points whose half-turns compose to the identity,
the braid/leapfrog action on them, the size-reduction driver with pinched
certificates, and the Euclidean limit model with its quadratic form, the
Lagrangian-Grassmannian correspondence and twist flows.
"""

try:
    from ._hexflip import *  # noqa: F401,F403
    from ._hexflip import __version__  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _hexflip import *  # noqa: F401,F403
    from _hexflip import __version__  # noqa: F401
