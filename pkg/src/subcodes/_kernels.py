"""Hot loops with two interchangeable implementations.

Each kernel exists as a numba ``@njit`` function and as a pure-numpy
function with identical results (including tie-breaking).  The environment
variable ``SUBCODES_BACKEND`` picks the default: ``numba`` (used when numba
imports) or ``numpy``.  :func:`set_backend` overrides it at runtime.

Kernels
-------
``min_weight_search``
    Brouwer-Zimmermann style enumeration of pseudo-products looking for the
    lightest operator that anti-commutes with at least one target.
``orbit_rep_mask``
    Flags which labeling ordinals in a range are rotation-orbit minima.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

try:  # pragma: no cover - exercised implicitly by whichever backend is present
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    _HAVE_NUMBA = False

__all__ = [
    "FOUND",
    "CUTOFF",
    "EXHAUSTED",
    "available_backends",
    "get_backend",
    "set_backend",
    "min_weight_search",
    "orbit_rep_mask",
]

FOUND, CUTOFF, EXHAUSTED = 0, 1, 2


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if _HAVE_NUMBA else ("numpy",)


def _initial_backend() -> str:
    want = os.environ.get("SUBCODES_BACKEND", "").strip().lower()
    if want in ("", "auto"):
        return "numba" if _HAVE_NUMBA else "numpy"
    if want not in ("numba", "numpy"):
        raise ValueError(f"SUBCODES_BACKEND must be 'numba' or 'numpy', got {want!r}")
    if want == "numba" and not _HAVE_NUMBA:
        raise ImportError("SUBCODES_BACKEND=numba but numba is not importable")
    return want


_backend = _initial_backend()


def get_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"backend {name!r} unavailable; choose from {available_backends()}")
    _backend = name


# ---------------------------------------------------------------------------
# min-weight search
# ---------------------------------------------------------------------------
#
# elems   uint64 (G, 3, 2, W): element table; generator g has counts[g] valid
#         elements (1 or 3) in enumeration order
# targets uint64 (T, 2, W)
# Returns (status, weight, product (2, W), target index).  On CUTOFF the
# weight slot holds the proven lower bound.


def _search_numpy(elems, counts, targets, max_r):
    G, _, _, W = elems.shape
    T = targets.shape[0]
    big = np.iinfo(np.int64).max
    best_w = big
    best = np.zeros((2, W), dtype=np.uint64)
    best_t = -1
    tx = targets[:, 0, :]
    tz = targets[:, 1, :]
    r = 1
    while True:
        if best_w <= r:
            return FOUND, best_w, best, best_t
        if r > G:
            break
        if r > max_r:
            return CUTOFF, r, best, best_t
        choice = np.array(list(itertools.product(range(3), repeat=r)), dtype=np.int64)
        batch = max(1, 65536 // len(choice))
        combos = itertools.combinations(range(G), r)
        done = False
        while not done:
            chunk = np.array(list(itertools.islice(combos, batch)), dtype=np.int64)
            if len(chunk) == 0:
                break
            # (B, E) validity and products
            valid = np.ones((len(chunk), len(choice)), dtype=bool)
            prod = np.zeros((len(chunk), len(choice), 2, W), dtype=np.uint64)
            for j in range(r):
                g = chunk[:, j][:, None]
                e = choice[:, j][None, :]
                valid &= e < counts[g]
                prod ^= elems[g, np.minimum(e, counts[g] - 1)]
            wt = np.bitwise_count(prod[..., 0, :] | prod[..., 1, :]).sum(-1, dtype=np.int64)
            cand = valid & (wt < best_w)
            if not cand.any():
                continue
            flat = np.flatnonzero(cand)
            p = prod.reshape(-1, 2, W)[flat]
            sym = (p[:, None, 0, :] & tz[None]) ^ (p[:, None, 1, :] & tx[None])
            hit = (np.bitwise_count(sym).sum(-1) & 1).astype(bool)  # (C, T)
            matched = hit.any(1)
            if not matched.any():
                continue
            mflat = flat[matched]
            mw = wt.reshape(-1)[mflat]
            pick = int(np.argmin(mw))  # first occurrence of the minimum
            best_w = int(mw[pick])
            best = p[matched][pick].copy()
            best_t = int(np.argmax(hit[matched][pick]))
            if best_w == r:
                done = True
        r += 1
    if best_t >= 0:
        return FOUND, best_w, best, best_t
    return EXHAUSTED, 0, best, -1


if _HAVE_NUMBA:

    @numba.njit(cache=True, inline="always")
    def _popcount64(v):
        v = v - ((v >> np.uint64(1)) & np.uint64(0x5555555555555555))
        v = (v & np.uint64(0x3333333333333333)) + ((v >> np.uint64(2)) & np.uint64(0x3333333333333333))
        v = (v + (v >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
        return np.int64((v * np.uint64(0x0101010101010101)) >> np.uint64(56))

    @numba.njit(cache=True)
    def _search_numba(elems, counts, targets, max_r):
        G = elems.shape[0]
        W = elems.shape[3]
        T = targets.shape[0]
        big = np.iinfo(np.int64).max
        best_w = big
        best = np.zeros((2, W), dtype=np.uint64)
        best_t = -1
        comb = np.zeros(max(G, 1), dtype=np.int64)
        digit = np.zeros(max(G, 1), dtype=np.int64)
        acc = np.zeros((max(G, 1) + 1, 2, W), dtype=np.uint64)
        r = 1
        while True:
            if best_w <= r:
                return FOUND, best_w, best, best_t
            if r > G:
                break
            if r > max_r:
                return CUTOFF, r, best, best_t
            for j in range(r):
                comb[j] = j
            stop_round = False
            while True:
                # odometer over element choices, first factor most significant;
                # acc[j+1] = acc[j] ^ element(j) keeps updates incremental
                for j in range(r):
                    digit[j] = 0
                    for h in range(2):
                        for w in range(W):
                            acc[j + 1, h, w] = acc[j, h, w] ^ elems[comb[j], 0, h, w]
                while True:
                    wt = 0
                    for w in range(W):
                        wt += _popcount64(acc[r, 0, w] | acc[r, 1, w])
                    if wt < best_w:
                        for t in range(T):
                            par = 0
                            for w in range(W):
                                par += _popcount64(
                                    (acc[r, 0, w] & targets[t, 1, w]) ^ (acc[r, 1, w] & targets[t, 0, w])
                                )
                            if par & 1:
                                best_w = wt
                                best_t = t
                                for h in range(2):
                                    for w in range(W):
                                        best[h, w] = acc[r, h, w]
                                break
                        if best_w == r:
                            stop_round = True
                            break
                    # advance odometer
                    j = r - 1
                    while j >= 0 and digit[j] + 1 >= counts[comb[j]]:
                        j -= 1
                    if j < 0:
                        break
                    digit[j] += 1
                    for h in range(2):
                        for w in range(W):
                            acc[j + 1, h, w] = acc[j, h, w] ^ elems[comb[j], digit[j], h, w]
                    for jj in range(j + 1, r):
                        digit[jj] = 0
                        for h in range(2):
                            for w in range(W):
                                acc[jj + 1, h, w] = acc[jj, h, w] ^ elems[comb[jj], 0, h, w]
                if stop_round:
                    break
                # next combination in lexicographic order
                j = r - 1
                while j >= 0 and comb[j] == G - r + j:
                    j -= 1
                if j < 0:
                    break
                comb[j] += 1
                for jj in range(j + 1, r):
                    comb[jj] = comb[jj - 1] + 1
            r += 1
        if best_t >= 0:
            return FOUND, best_w, best, best_t
        return EXHAUSTED, 0, best, -1


def min_weight_search(elems, counts, targets, max_r=None, backend=None):
    """Lightest pseudo-product anti-commuting with some target.

    Returns ``(status, weight, product_words, target_index)``.  With
    ``status == CUTOFF`` the search stopped before round ``max_r + 1`` and
    ``weight`` is the proven lower bound ``max_r + 1``.
    """
    backend = backend or _backend
    elems = np.ascontiguousarray(elems, dtype=np.uint64)
    counts = np.ascontiguousarray(counts, dtype=np.int64)
    targets = np.ascontiguousarray(targets, dtype=np.uint64)
    limit = elems.shape[0] if max_r is None else int(max_r)
    if backend == "numba":
        status, w, prod, t = _search_numba(elems, counts, targets, limit)
    elif backend == "numpy":
        status, w, prod, t = _search_numpy(elems, counts, targets, limit)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return int(status), int(w), prod, int(t)


# ---------------------------------------------------------------------------
# orbit representatives
# ---------------------------------------------------------------------------
#
# A labeling ordinal is a mixed-radix number with m digits of base k, class 0
# most significant.  For rotation g, the digit of class j after rotating is
# tables[g, j, digit of class src[g, j]].


def _orbit_numpy(start, stop, k, m, tables, src):
    ords = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((m, len(ords)), dtype=np.int64)
    rest = ords.copy()
    for j in range(m - 1, -1, -1):
        digits[j] = rest % k
        rest //= k
    keep = np.ones(len(ords), dtype=bool)
    for g in range(tables.shape[0]):
        image = np.zeros(len(ords), dtype=np.int64)
        for j in range(m):
            image = image * k + tables[g, j][digits[src[g, j]]]
        keep &= image >= ords
    return keep


if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _orbit_numba(start, stop, k, m, tables, src):
        n = stop - start
        keep = np.ones(n, dtype=np.bool_)
        digits = np.empty(m, dtype=np.int64)
        for i in range(n):
            o = start + i
            rest = o
            for j in range(m - 1, -1, -1):
                digits[j] = rest % k
                rest //= k
            for g in range(tables.shape[0]):
                image = 0
                for j in range(m):
                    image = image * k + tables[g, j, digits[src[g, j]]]
                if image < o:
                    keep[i] = False
                    break
        return keep


def orbit_rep_mask(start, stop, k, m, tables, src, backend=None):
    """Boolean mask over ordinals ``start..stop-1``: True for orbit minima."""
    backend = backend or _backend
    tables = np.ascontiguousarray(tables, dtype=np.int64)
    src = np.ascontiguousarray(src, dtype=np.int64)
    if backend == "numba":
        return _orbit_numba(int(start), int(stop), int(k), int(m), tables, src)
    if backend == "numpy":
        return _orbit_numpy(int(start), int(stop), int(k), int(m), tables, src)
    raise ValueError(f"unknown backend {backend!r}")
