# cython: boundscheck=False, wraparound=False, nonecheck=False, initializedcheck=False
"""Compiled exhaustive scan over all maps between finite algebra carriers.

Semantics and result order match `bitopdual.kernels.pure.hom_filter_scan`
exactly; only the speed differs.
"""

import numpy as np


def hom_filter_scan(const short[:, ::1] a_meet, const short[:, ::1] a_join,
                    const short[:, ::1] a_imp, const short[:, ::1] a_t,
                    int a_bot, int a_top,
                    const short[:, ::1] l_meet, const short[:, ::1] l_join,
                    const short[:, ::1] l_imp, const short[:, ::1] l_t,
                    int l_bot, int l_top,
                    const short[::1] targets):
    cdef Py_ssize_t m = a_meet.shape[0]
    cdef Py_ssize_t nl = a_t.shape[0]
    cdef Py_ssize_t k = targets.shape[0]
    cdef short first = targets[0]

    h_arr = np.full(m, first, dtype=np.int16)
    d_arr = np.zeros(m, dtype=np.int16)
    cdef short[::1] h = h_arr
    cdef short[::1] d = d_arr

    found = []
    cdef Py_ssize_t i, j, lv, pos
    cdef short hi
    cdef bint ok

    while True:
        ok = h[a_bot] == l_bot and h[a_top] == l_top
        if ok:
            for lv in range(nl):
                for i in range(m):
                    if h[a_t[lv, i]] != l_t[lv, h[i]]:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            for i in range(m):
                hi = h[i]
                for j in range(m):
                    if (h[a_meet[i, j]] != l_meet[hi, h[j]]
                            or h[a_join[i, j]] != l_join[hi, h[j]]
                            or h[a_imp[i, j]] != l_imp[hi, h[j]]):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            found.append(h_arr.copy())

        pos = m - 1
        while pos >= 0 and d[pos] == k - 1:
            d[pos] = 0
            h[pos] = first
            pos -= 1
        if pos < 0:
            break
        d[pos] += 1
        h[pos] = targets[d[pos]]

    if not found:
        return np.zeros((0, m), dtype=np.int16)
    return np.array(found, dtype=np.int16)
