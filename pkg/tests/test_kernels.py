from __future__ import annotations

import os
import subprocess
import sys
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BACKENDS
from rcbpoly import kernels
from strategies import raw_polys

raw = raw_polys.map(lambda cs: BACKENDS["python"].trim(cs))
raw_series = st.lists(raw, min_size=1, max_size=6)


def naive_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return BACKENDS["python"].trim(out)


def naive_smul(A, B, n):
    out = []
    for m in range(n):
        acc = ()
        for i in range(m + 1):
            if i < len(A) and m - i < len(B):
                acc = BACKENDS["python"].padd(acc, naive_mul(A[i], B[m - i]))
        out.append(acc)
    return out


def leibniz_det(rows):
    # sum over permutations; fine up to 5x5
    n = len(rows)
    total = ()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (1,)
        for i in range(n):
            term = naive_mul(term, rows[i][perm[i]])
        if inv % 2:
            term = tuple(-c for c in term)
        total = BACKENDS["python"].padd(total, term)
    return total


def test_selected_backend_is_available():
    assert kernels.BACKEND in BACKENDS
    assert "python" in BACKENDS


def test_trim_normalizes(backend):
    assert backend.trim([1, 0, 0]) == (1,)
    assert backend.trim([Fraction(2, 1), Fraction(1, 2)]) == (2, Fraction(1, 2))
    assert type(backend.trim([Fraction(2, 1)])[0]) is int
    assert backend.trim([0, 0]) == ()


def test_basic_ops(backend):
    assert backend.padd((1, 2), (-1, -2)) == ()
    assert backend.psub((1,), (1, 1)) == (0, -1)
    assert backend.pneg((1, -2)) == (-1, 2)
    assert backend.pscale((1, 2), 0) == ()
    assert backend.pmul((1, 1), (-1, 1)) == (-1, 0, 1)
    assert backend.peval((1, 2, 3), Fraction(1, 2)) == Fraction(11, 4)
    with pytest.raises(ZeroDivisionError):
        backend.pdivmod((1,), ())


def test_det_edge_cases(backend):
    assert backend.det_bareiss([]) == (1,)
    assert backend.det_bareiss([[(), (1,)], [(1,), ()]]) == (-1,)
    assert backend.det_bareiss([[(1,), (2,)], [(2,), (4,)]]) == ()
    # needs a pivot swap midway
    rows = [[(1,), (1,), (1,)], [(1,), (1,), (2,)], [(1,), (2,), (3,)]]
    assert backend.det_bareiss(rows) == (-1,)


@given(raw, raw)
def test_pmul_matches_naive(a, b):
    for be in BACKENDS.values():
        assert be.pmul(a, b) == naive_mul(a, b)


@given(raw, raw.filter(bool))
def test_pdivmod_identity(a, b):
    for be in BACKENDS.values():
        q, rem = be.pdivmod(a, b)
        assert be.padd(be.pmul(q, b), rem) == a
        assert len(rem) < len(b)


@given(raw_series, raw_series, st.integers(1, 7))
def test_smul_matches_naive(A, B, n):
    want = naive_smul(A, B, n)
    for be in BACKENDS.values():
        assert be.smul(A, B, n) == want


@given(raw_series, st.lists(raw, min_size=1, max_size=5), st.integers(1, 6))
def test_sdiv_inverts_smul(N, tail, n):
    D = [(2,)] + tail
    for be in BACKENDS.values():
        Q = be.sdiv(N, D, n)
        assert be.smul(Q, D, n) == [N[i] if i < len(N) else () for i in range(n)]


@given(raw_series, st.lists(raw, max_size=5), st.integers(1, 7))
def test_scompose_and_srevert_agree(A, tail, n):
    F = [(), (1,)] + tail
    outs = [(be.scompose(A, F, n), be.srevert(F, n)) for be in BACKENDS.values()]
    assert all(o == outs[0] for o in outs)
    G = outs[0][1]
    assert BACKENDS["python"].scompose(F, G, n) == [(), (1,)][:n] + [()] * max(n - 2, 0)


@given(st.lists(raw, min_size=1, max_size=6), st.integers(1, 7))
def test_ssqrt_squares_back(tail, n):
    A = [(1,)] + tail
    for be in BACKENDS.values():
        S = be.ssqrt(A, n)
        assert be.smul(S, S, n) == [A[i] if i < len(A) else () for i in range(n)]


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(raw, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(rows):
    want = leibniz_det(rows)
    for be in BACKENDS.values():
        assert be.det_bareiss(rows) == want


def test_pure_python_override():
    env = dict(os.environ, RCB_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import rcbpoly; print(rcbpoly.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_benchmark_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    script = os.path.join(root, "benchmarks", "bench_kernels.py")
    if not os.path.exists(script):
        pytest.skip("benchmark script not present")
    out = subprocess.run(
        [sys.executable, script, "--repeat", "1", "--order", "12"], capture_output=True, text=True, timeout=120
    )
    assert out.returncode == 0, out.stderr
    assert "python" in out.stdout
