"""Pure-Python twin of the compiled scan; same semantics, same result order."""

from __future__ import annotations

import itertools

import numpy as np


def hom_filter_scan(
    a_meet,
    a_join,
    a_imp,
    a_t,
    a_bot,
    a_top,
    l_meet,
    l_join,
    l_imp,
    l_t,
    l_bot,
    l_top,
    targets,
):
    m = a_meet.shape[0]
    nl = a_t.shape[0]
    am = [tuple(map(int, row)) for row in a_meet]
    aj = [tuple(map(int, row)) for row in a_join]
    ai = [tuple(map(int, row)) for row in a_imp]
    at = [tuple(map(int, row)) for row in a_t]
    lm = [tuple(map(int, row)) for row in l_meet]
    lj = [tuple(map(int, row)) for row in l_join]
    li = [tuple(map(int, row)) for row in l_imp]
    lt = [tuple(map(int, row)) for row in l_t]
    found = []
    for h in itertools.product([int(t) for t in targets], repeat=m):
        if h[a_bot] != l_bot or h[a_top] != l_top:
            continue
        ok = True
        for lv in range(nl):
            trow, lrow = at[lv], lt[lv]
            for i in range(m):
                if h[trow[i]] != lrow[h[i]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for i in range(m):
                hi = h[i]
                mrow, jrow, irow = am[i], aj[i], ai[i]
                lmr, ljr, lir = lm[hi], lj[hi], li[hi]
                for j in range(m):
                    hj = h[j]
                    if h[mrow[j]] != lmr[hj] or h[jrow[j]] != ljr[hj] or h[irow[j]] != lir[hj]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            found.append(h)
    if not found:
        return np.zeros((0, m), dtype=np.int16)
    return np.array(found, dtype=np.int16)
