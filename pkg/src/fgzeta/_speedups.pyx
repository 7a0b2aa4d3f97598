# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled group algebra convolution kernel.

Semantics must match fgzeta._kernel_py exactly; coefficients stay Python
ints because they can exceed machine range.
"""

BACKEND = "cython"


def mul_terms(dict a, dict b, long max_len):
    """Convolve two term maps {reduced word tuple: int coefficient}."""
    cdef dict out = {}
    cdef tuple wa, wb, w
    cdef Py_ssize_t i, j, la, lb
    cdef long xa, xb
    cdef object ca, cb, c
    for wa, ca in a.items():
        la = len(wa)
        for wb, cb in b.items():
            lb = len(wb)
            i = la
            j = 0
            while i > 0 and j < lb:
                xa = wa[i - 1]
                xb = wb[j]
                if xa != -xb:
                    break
                i -= 1
                j += 1
            if max_len >= 0 and i + lb - j > max_len:
                continue
            w = wa[:i] + wb[j:]
            c = out.get(w)
            if c is None:
                out[w] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[w] = c
                else:
                    del out[w]
    return out
