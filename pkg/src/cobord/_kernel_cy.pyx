# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of ``cobord._kernel_py``.

Same API, same results; only the loop machinery (tuple merges, dict
accumulation, weight pruning) runs at C speed.  Coefficients remain
Python ints on purpose: they routinely exceed 64 bits.
"""


def merge_parts(tuple a, tuple b):
    """Multiset union of two non-increasing tuples, again non-increasing."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return b
    if lb == 0:
        return a
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0
    while i < la and j < lb:
        if a[i] >= b[j]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    while i < la:
        out.append(a[i])
        i += 1
    while j < lb:
        out.append(b[j])
        j += 1
    return tuple(out)


def iadd_terms(dict target, dict src, mod):
    """Add ``src`` into ``target`` in place, dropping cancelled keys."""
    for key, val in src.items():
        c = target.get(key, 0) + val
        if mod is not None:
            c = c % mod
        if c:
            target[key] = c
        elif key in target:
            del target[key]
    return target


def mul_into(dict out, dict x, dict y, long trunc, mod):
    """Accumulate the product of term dicts ``x*y`` into ``out``."""
    cdef list xs = sorted([(sum(k), k, v) for k, v in x.items()])
    cdef list ys = sorted([(sum(k), k, v) for k, v in y.items()])
    cdef Py_ssize_t na = len(xs), nb = len(ys)
    cdef Py_ssize_t ia, ib
    cdef long wa, wb, lim
    cdef tuple ta, tb, kk
    cdef bint has_mod = mod is not None
    for ia in range(na):
        ta = <tuple>xs[ia]
        wa = <long>ta[0]
        lim = trunc - wa
        for ib in range(nb):
            tb = <tuple>ys[ib]
            wb = <long>tb[0]
            if wb > lim:
                break
            kk = merge_parts(<tuple>ta[1], <tuple>tb[1])
            c = out.get(kk, 0) + ta[2] * tb[2]
            if has_mod:
                c = c % mod
            if c:
                out[kk] = c
            elif kk in out:
                del out[kk]
    return out


def mul_terms(dict x, dict y, long trunc, mod):
    """Product of two term dicts, truncated at weight ``trunc``."""
    return mul_into({}, x, y, trunc, mod)
