"""Hot array kernels over bit-mask encoded subsets of Z_n.

A subset of Z_n is a uint64 whose bit i is set iff residue i is a member.
Every kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
path.  The numba path is used unless numba is missing or the environment
variable ``MODSUM_DISABLE_NUMBA`` is set to a truthy value.  Both paths are
importable directly (``numba_*`` / ``numpy_*``) so tests can compare them.

``MODSUM_THREADS`` caps the numba thread pool.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

MAX_TABLE_MODULUS = 13

_disabled = os.environ.get("MODSUM_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
if HAVE_NUMBA and "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is often too old; avoid the probe and its warning
    numba.config.THREADING_LAYER = "workqueue"
USE_NUMBA = HAVE_NUMBA and not _disabled
BACKEND = "numba" if USE_NUMBA else "numpy"

if HAVE_NUMBA and os.environ.get("MODSUM_THREADS"):
    try:
        numba.set_num_threads(max(1, min(int(os.environ["MODSUM_THREADS"]), numba.config.NUMBA_NUM_THREADS)))
    except ValueError:
        pass


def _check_modulus(n):
    if not 1 <= n <= MAX_TABLE_MODULUS:
        raise ValueError(f"table kernels support 1 <= n <= {MAX_TABLE_MODULUS}, got {n}")


# ---------------------------------------------------------------- numpy path


def numpy_sumset_table(n):
    """All-pairs sumset masks: ``out[a, b]`` is the mask of ``a + b`` in Z_n."""
    _check_modulus(n)
    size = 1 << n
    full = np.uint64(size - 1)
    masks = np.arange(size, dtype=np.uint64)
    out = np.zeros((size, size), dtype=np.uint64)
    for s in range(n):
        if s == 0:
            rot = masks
        else:
            rot = ((masks << np.uint64(s)) | (masks >> np.uint64(n - s))) & full
        has = ((masks >> np.uint64(s)) & np.uint64(1)).astype(bool)
        out[has] |= rot
    return out


def popcounts(n):
    size = 1 << n
    pc = np.zeros(size, dtype=np.uint8)
    for b in range(n):
        pc += ((np.arange(size) >> b) & 1).astype(np.uint8)
    return pc


def numpy_sumset_size_table(n):
    return popcounts(n)[numpy_sumset_table(n)]


def numpy_allowed_edge_masks(ok, m):
    """Enumerate injective labelings of ``m`` vertices by nonempty masks.

    ``ok`` is a boolean pair table indexed by masks.  Returns ``(labels,
    allowed)`` where ``labels[t]`` is the t-th labeling (mask per vertex, in
    ``itertools.permutations`` order over masks ``1..size-1``) and bit ``e``
    of ``allowed[t]`` says whether vertex pair ``e`` (lexicographic order of
    ``u < v``) satisfies ``ok``.
    """
    size = ok.shape[0]
    labels = np.array(list(itertools.permutations(range(1, size), m)), dtype=np.int64)
    labels = labels.reshape(-1, m)
    allowed = np.zeros(labels.shape[0], dtype=np.int64)
    for e, (u, v) in enumerate(itertools.combinations(range(m), 2)):
        allowed |= ok[labels[:, u], labels[:, v]].astype(np.int64) << e
    return labels, allowed


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _rot(x, s, n, full):
        if s == 0:
            return x
        return ((x << np.uint64(s)) | (x >> np.uint64(n - s))) & full

    @numba.njit(cache=True)
    def sumset_mask(a, b, n):
        full = np.uint64((1 << n) - 1)
        out = np.uint64(0)
        for s in range(n):
            if (a >> np.uint64(s)) & np.uint64(1):
                out |= _rot(b, s, n, full)
        return out

    @numba.njit(cache=True, parallel=True)
    def _numba_sumset_table(n):
        size = 1 << n
        out = np.zeros((size, size), dtype=np.uint64)
        for a in numba.prange(size):
            ua = np.uint64(a)
            for b in range(size):
                out[a, b] = sumset_mask(ua, np.uint64(b), n)
        return out

    @numba.njit(cache=True)
    def _popcount(x):
        c = 0
        while x:
            x &= x - np.uint64(1)
            c += 1
        return c

    @numba.njit(cache=True, parallel=True)
    def _numba_sumset_size_table(n):
        size = 1 << n
        out = np.zeros((size, size), dtype=np.uint8)
        for a in numba.prange(size):
            ua = np.uint64(a)
            for b in range(size):
                out[a, b] = _popcount(sumset_mask(ua, np.uint64(b), n))
        return out

    @numba.njit(cache=True)
    def _numba_allowed_edge_masks(ok, m):
        size = ok.shape[0]
        k = size - 1
        # number of m-permutations of k items
        total = 1
        for i in range(m):
            total *= k - i
        labels = np.zeros((max(total, 0), m), dtype=np.int64)
        allowed = np.zeros(max(total, 0), dtype=np.int64)
        if total <= 0:
            return labels, allowed
        # odometer over positions into the pool of unused masks, mirroring
        # itertools.permutations ordering
        cur = np.zeros(m, dtype=np.int64)
        used = np.zeros(size, dtype=np.bool_)
        t = 0
        depth = 0
        cur[0] = 0
        while depth >= 0:
            cur[depth] += 1
            while cur[depth] < size and used[cur[depth]]:
                cur[depth] += 1
            if cur[depth] >= size:
                cur[depth] = 0
                depth -= 1
                if depth >= 0:
                    used[cur[depth]] = False
                continue
            if depth == m - 1:
                bits = 0
                e = 0
                for u in range(m):
                    for v in range(u + 1, m):
                        if ok[cur[u], cur[v]]:
                            bits |= 1 << e
                        e += 1
                for u in range(m):
                    labels[t, u] = cur[u]
                allowed[t] = bits
                t += 1
            else:
                used[cur[depth]] = True
                depth += 1
                cur[depth] = 0
        return labels, allowed

    def numba_sumset_table(n):
        _check_modulus(n)
        return _numba_sumset_table(n)

    def numba_sumset_size_table(n):
        _check_modulus(n)
        return _numba_sumset_size_table(n)

    def numba_allowed_edge_masks(ok, m):
        return _numba_allowed_edge_masks(np.ascontiguousarray(ok, dtype=np.bool_), m)


if USE_NUMBA:
    sumset_table = numba_sumset_table
    sumset_size_table = numba_sumset_size_table
    allowed_edge_masks = numba_allowed_edge_masks
else:
    sumset_table = numpy_sumset_table
    sumset_size_table = numpy_sumset_size_table
    allowed_edge_masks = numpy_allowed_edge_masks
