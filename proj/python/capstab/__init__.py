"""Conformal disk metrics: curvature identities, the constant-curvature
comparison solver, geodesic distances, and Gromov-Hausdorff bounds."""

from capstab._core import *  # noqa: F401,F403
from capstab._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
