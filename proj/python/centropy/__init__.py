"""Cumulative information measures of non-negative distributions.

Python surface of the C++ core: distributions, the four measures (CRE, CE,
WCRE, WCE) by quadrature, extreme-moment series with certified brackets,
bound reports, and the Monte Carlo oracle.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
    from . import _core as _impl
except ImportError:  # pragma: no cover - build-tree layout used in CI
    from _core import *  # noqa: F401,F403
    import _core as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "1.0.0"
