"""Select the compiled kernels when importable, else the pure-Python twins.

Set ``SHAPECONES_PURE=1`` to force the fallback.
"""
import os

if os.environ.get("SHAPECONES_PURE", "") not in ("", "0"):
    from ._purekernels import fraction_free_reduce, int_left_matvec, int_matmul
    BACKEND = "python"
else:
    try:
        from ._speedups import fraction_free_reduce, int_left_matvec, int_matmul
        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._purekernels import fraction_free_reduce, int_left_matvec, int_matmul
        BACKEND = "python"

__all__ = ["BACKEND", "fraction_free_reduce", "int_left_matvec", "int_matmul"]
