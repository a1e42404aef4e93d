"""Electrostatics of polynomial roots.

Critical points of complex polynomials as zeros of the 2-D electric field of
unit charges placed at the roots, with convex-hull containment checks,
separating-direction witnesses, Steiner inellipses for cubics, and potential
field-map rendering.
"""

from ._gll import *  # noqa: F401,F403
from ._gll import __version__  # noqa: F401
