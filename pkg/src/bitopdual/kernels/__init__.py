"""Hot kernels: compiled core when available, pure-Python twin otherwise.

The only genuinely hot loop in the workbench is the exhaustive map filter
used as the independent oracle for homomorphism enumeration (up to |L'|^|A|
candidate maps).  `ACTIVE` names the implementation selected at import;
setting BITOPDUAL_PURE=1 forces the fallback.  Both implementations scan
candidates in identical lexicographic order and return identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

from ..config import default_caps
from ..errors import CapExceeded
from . import pure

if os.environ.get("BITOPDUAL_PURE", "") not in ("", "0"):
    _impl = pure
    ACTIVE = "python"
else:
    try:
        from . import _fastcore as _impl  # type: ignore[no-redef]

        ACTIVE = "compiled"
    except ImportError:
        _impl = pure
        ACTIVE = "python"


def _table(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int16)


def scan_work(carrier_size: int, target_size: int) -> int:
    """Number of candidate maps the exhaustive filter would visit."""
    return target_size**carrier_size


def hom_filter(
    a_meet,
    a_join,
    a_imp,
    a_t,
    a_bot: int,
    a_top: int,
    l_meet,
    l_join,
    l_imp,
    l_t,
    l_bot: int,
    l_top: int,
    targets,
    max_candidates: int | None = None,
    implementation=None,
) -> np.ndarray:
    """Filter ALL maps carrier -> targets down to the operation-preserving ones.

    Plain full scan, deliberately free of the pruning used by the production
    enumerator, so it can serve as its oracle.  Returns a (found, m) int16
    array in lexicographic candidate order.
    """
    targets = _table(targets)
    m = int(np.asarray(a_meet).shape[0])
    if max_candidates is None:
        max_candidates = default_caps().max_candidates
    work = scan_work(m, len(targets))
    if work > max_candidates:
        raise CapExceeded(
            f"{len(targets)}^{m} = {work} candidate maps exceeds cap {max_candidates}"
        )
    impl = _impl if implementation is None else (pure if implementation == "python" else _impl)
    return impl.hom_filter_scan(
        _table(a_meet),
        _table(a_join),
        _table(a_imp),
        _table(a_t),
        int(a_bot),
        int(a_top),
        _table(l_meet),
        _table(l_join),
        _table(l_imp),
        _table(l_t),
        int(l_bot),
        int(l_top),
        targets,
    )
