"""Backend selection for the clique kernels.

The compiled Cython backend is preferred when its extension module built;
otherwise the pure-Python backend is used.  Set CLIQUELAB_BACKEND=python
(or =compiled) before import to force a choice, e.g. for benchmarking.
"""

import os

from . import _pykernels

_forced = os.environ.get("CLIQUELAB_BACKEND", "auto").strip().lower()

if _forced in ("", "auto"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
elif _forced in ("compiled", "c"):
    from . import _ckernels as _impl
elif _forced in ("python", "py", "pure"):
    _impl = _pykernels
else:
    raise RuntimeError(f"unknown CLIQUELAB_BACKEND={_forced!r}; use 'auto', 'compiled' or 'python'")

BACKEND = _impl.BACKEND_NAME

max_clique = _impl.max_clique
has_clique = _impl.has_clique
maximal_cliques = _impl.maximal_cliques
clique_f_vector = _impl.clique_f_vector
