"""Exact target set selection solvers.

Thin wrapper around the native module; everything public lives there.
"""

try:
    from ._tss import *  # noqa: F401,F403
    from ._tss import __version__  # noqa: F401
except ImportError:  # in-tree builds put the module next to the package
    from _tss import *  # noqa: F401,F403
    from _tss import __version__  # noqa: F401
