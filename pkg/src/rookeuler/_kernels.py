"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``ROOKEULER_PURE_PYTHON=1`` to force the Python kernels.  Inputs beyond the
compiled kernels' fixed-width limits (more than 16 letters for interval
searches, 63 for posets) always go to the Python kernels.
"""

import os

from . import _pykernels

ASC, DES, EXC, PEAK = _pykernels.ASC, _pykernels.DES, _pykernels.EXC, _pykernels.PEAK

_ck = None
if os.environ.get("ROOKEULER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _ck
    except ImportError:  # extension not built
        _ck = None

BACKEND = "cython" if _ck is not None else "python"


def _dispatch(name):
    py = getattr(_pykernels, name)
    if _ck is None:
        return py
    c = getattr(_ck, name)

    def call(*args):
        try:
            return c(*args)
        except ValueError:
            return py(*args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


word_stat = _pykernels.word_stat
rook_ascent_table = _dispatch("rook_ascent_table")
multiset_ascent_table = _dispatch("multiset_ascent_table")
lower_interval_words = _dispatch("lower_interval_words")
lower_interval_stat_counts = _dispatch("lower_interval_stat_counts")
linear_extension_words = _dispatch("linear_extension_words")
linear_extension_stat_counts = _dispatch("linear_extension_stat_counts")
