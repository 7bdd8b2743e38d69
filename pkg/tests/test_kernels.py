"""The numba kernels, their numpy fallbacks and a plain-Python reference agree."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tlweyl import _kernels
from tlweyl.dense import ReflectionSet, from_partner, to_partner, update
from tlweyl.tl import enumerate_diagrams

IMPLS = sorted(_kernels.IMPLEMENTATIONS)


def all_pairs(n):
    ds = enumerate_diagrams(n)
    tops = np.array([a.partner for a in ds for _ in ds])
    bottoms = np.array([b.partner for _ in ds for b in ds])
    return tops, bottoms


def reference_compose(top, bottom):
    """Strand tracing on one pair of partner arrays."""
    m = len(top) // 2
    out = [-1] * (2 * m)
    seen = [False] * m
    for start in range(2 * m):
        in_top = start < m
        q = top[start] if in_top else bottom[start]
        while True:
            if in_top and q >= m:
                x = q - m
                seen[x] = True
                q, in_top = bottom[x], False
            elif not in_top and q < m:
                x = q
                seen[x] = True
                q, in_top = top[x + m], True
            else:
                out[start] = q
                break
    loops = 0
    for x in range(m):
        if not seen[x]:
            loops += 1
            y = x
            while True:
                seen[y] = True
                seen[bottom[y]] = True
                y = top[bottom[y] + m] - m
                if y == x:
                    break
    return loops, out


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_compose_against_reference(impl, n):
    compose, _ = _kernels.IMPLEMENTATIONS[impl]
    tops, bottoms = all_pairs(n)
    loops, out = compose(tops, bottoms)
    for r in range(len(tops)):
        ref_loops, ref_out = reference_compose(list(tops[r]), list(bottoms[r]))
        assert loops[r] == ref_loops
        assert list(out[r]) == ref_out


@pytest.mark.parametrize("n", [3, 5])
def test_implementations_agree_with_broadcasting(n):
    ds = enumerate_diagrams(n)
    batch = np.array([d.partner for d in ds], dtype=_kernels.INDEX_DTYPE)
    single = batch[len(batch) // 2][None, :]
    results = {impl: _kernels.IMPLEMENTATIONS[impl][0](single, batch) for impl in IMPLS}
    loops0, out0 = results[IMPLS[0]]
    for loops, out in results.values():
        assert np.array_equal(loops, loops0)
        assert np.array_equal(out, out0)
        assert out.dtype == _kernels.INDEX_DTYPE


def commuting_partner_arrays(n):
    from tlweyl.dense import commuting_sets

    return np.array([to_partner(q, n) for q in commuting_sets(n)], dtype=_kernels.INDEX_DTYPE)


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_dense_update_against_set_rule(impl, n):
    _, upd = _kernels.IMPLEMENTATIONS[impl]
    arrs = commuting_partner_arrays(n)
    for i in range(1, n + 1):
        out = upd(arrs, i - 1)
        for row, new in zip(arrs, out):
            assert from_partner(new) == update(from_partner(row), i)


def test_update_does_not_mutate_input():
    arrs = commuting_partner_arrays(3)
    before = arrs.copy()
    for impl in IMPLS:
        _kernels.IMPLEMENTATIONS[impl][1](arrs, 1)
    assert np.array_equal(arrs, before)


@given(st.integers(2, 7), st.data())
def test_update_random_sets(n, data):
    letters = data.draw(st.permutations(range(1, n + 2)))
    k = data.draw(st.integers(0, (n + 1) // 2))
    q = ReflectionSet(tuple(sorted(letters[2 * j: 2 * j + 2])) for j in range(k))
    i = data.draw(st.integers(1, n))
    arr = to_partner(q, n)[None, :]
    expected = update(q, i)
    for impl in IMPLS:
        assert from_partner(_kernels.IMPLEMENTATIONS[impl][1](arr, i - 1)[0]) == expected


def test_environment_flag_selects_numpy():
    code = "from tlweyl import _accel, _kernels; print(_accel.USE_NUMBA, _kernels.compose_batch.__name__)"
    env = dict(os.environ, TLWEYL_NUMBA="0")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "_compose_batch_numpy"]
