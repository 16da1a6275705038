"""Hoffman graphs and integrally representable trees of norm 3."""

try:
    from ._hoffman import *  # noqa: F401,F403
    from ._hoffman import __doc__  # noqa: F401
except ImportError:  # extension built outside the package (plain CMake build)
    from _hoffman import *  # noqa: F401,F403
