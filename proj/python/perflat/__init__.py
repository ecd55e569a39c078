"""Exact-arithmetic toolkit for perfect lattices of minimum 4."""

try:
    from ._perflat import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _perflat import *  # noqa: F401,F403  (in-tree build)
