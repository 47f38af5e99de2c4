"""Hot inner loops for the bounded enumeration.

The scans below enumerate ascending weight tuples with a fixed leading part,
apply the interior-movable bound on the top weight (which caps the otherwise
unbounded direction) and the blowup terminality test, and return the
survivors.  They are compiled with numba when available; the pure-Python
bodies are the semantic reference and the fallback.

Survivors are re-run through the full pipeline in :mod:`wblinks.classify`,
so a kernel bug can only lose candidates, never add spurious ones; the
pruned-vs-naive cross-check in the test suite guards the losing direction.
"""

from __future__ import annotations


def _scan_dim3(a: int, bound: int):
    """Ascending (a,b,c), c <= bound, 4b > a+b+c-1, blowup terminal."""
    # sentinel first element keeps the list typed under numba; sliced off below
    out = [(0, 0)]
    for b in range(a, bound + 1):
        cmax = 3 * b - a
        if cmax > bound:
            cmax = bound
        for c in range(b, cmax + 1):
            V = a + b + c - 1
            ok = True
            for k in range(1, V):
                s = (k * a) % V + (k * b) % V + (k * c) % V
                if s <= V:
                    ok = False
                    break
            if ok:
                out.append((b, c))
    return out[1:]


def _scan_dim4(a: int, b: int, bound: int):
    """Ascending (a,b,c,d), d <= bound, 5c > a+b+c+d-1, blowup terminal."""
    out = [(0, 0)]
    for c in range(b, bound + 1):
        dmax = 4 * c - a - b
        if dmax > bound:
            dmax = bound
        for d in range(c, dmax + 1):
            V = a + b + c + d - 1
            ok = True
            for k in range(1, V):
                s = (k * a) % V + (k * b) % V + (k * c) % V + (k * d) % V
                if s <= V:
                    ok = False
                    break
            if ok:
                out.append((c, d))
    return out[1:]


try:
    from numba import njit

    _scan_dim3 = njit(cache=True)(_scan_dim3)
    _scan_dim4 = njit(cache=True)(_scan_dim4)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False
