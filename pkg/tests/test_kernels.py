import os
import subprocess
import sys
from itertools import combinations, permutations

import numpy as np
import pytest

from modsum import _kernels as K
from modsum.zn import ZnSet, sumset

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")


@pytest.mark.parametrize("n", range(1, 8))
def test_numpy_table_matches_sumset(n):
    table = K.numpy_sumset_table(n)
    for a in range(1, 1 << n):
        for b in range(1, 1 << n):
            assert int(table[a, b]) == sumset(ZnSet(n, a), ZnSet(n, b)).bits


@needs_numba
@pytest.mark.parametrize("n", range(1, 10))
def test_backends_agree(n):
    assert np.array_equal(K.numpy_sumset_table(n), K.numba_sumset_table(n))
    assert np.array_equal(K.numpy_sumset_size_table(n), K.numba_sumset_size_table(n))


@needs_numba
@pytest.mark.parametrize("m, n", [(2, 2), (3, 3), (4, 3), (3, 4)])
def test_allowed_edge_masks_agree(m, n):
    ok = (K.numpy_sumset_size_table(n) % 2).astype(bool)
    la, aa = K.numpy_allowed_edge_masks(ok, m)
    lb, ab = K.numba_allowed_edge_masks(ok, m)
    assert np.array_equal(la, lb) and np.array_equal(aa, ab)
    assert [tuple(r) for r in la] == list(permutations(range(1, 1 << n), m))
    pairs = list(combinations(range(m), 2))
    for row, bits in zip(la[:50], aa[:50]):
        assert int(bits) == sum(1 << e for e, (u, v) in enumerate(pairs) if ok[row[u], row[v]])


def test_modulus_limit():
    with pytest.raises(ValueError):
        K.numpy_sumset_table(K.MAX_TABLE_MODULUS + 1)
    with pytest.raises(ValueError):
        K.sumset_table(0)


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, MODSUM_DISABLE_NUMBA="1")
    code = "from modsum import _kernels as K; print(K.BACKEND, K.sumset_table is K.numpy_sumset_table)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]
