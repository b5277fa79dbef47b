"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-Python twin when the
extension is not built.  Set ``REDTYPE_PURE=1`` to force the fallback (used
by the benchmark and the backend-equivalence tests).
"""
import os

if os.environ.get("REDTYPE_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "python"

member_table = _impl.member_table
minimal_generators = _impl.minimal_generators
pseudo_frobenius = _impl.pseudo_frobenius
count_gaps = _impl.count_gaps


def backend_name() -> str:
    """Name of the kernel backend in use ('cython' or 'python')."""
    return BACKEND
