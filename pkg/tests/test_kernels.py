"""Kernel correctness and pure/compiled backend agreement."""

from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import divpos._kernels as kernels
from divpos._kernels import _pure

try:
    from divpos._kernels import _core
    BACKENDS = [("pure", _pure), ("cython", _core)]
except ImportError:
    _core = None
    BACKENDS = [("pure", _pure)]

SQUAREFREE = [2, 3, 5, 6, 7, 10, 11, 13]


def brute_floor_quad(N, M, d, Q):
    """Floor by outward search from a float hint, confirmed by exact squares."""
    guess = int((N + M * d**0.5) / Q) - 2
    best = None
    for n in range(guess - 2, guess + 8):
        # (N + M*sqrt(d))/Q >= n  <=>  M*sqrt(d) >= n*Q - N
        rhs = n * Q - N
        if M >= 0:
            ok = rhs <= 0 or M * M * d >= rhs * rhs
        else:
            ok = rhs <= 0 and M * M * d <= rhs * rhs
        if ok:
            best = n
    return best


@pytest.mark.parametrize("name, impl", BACKENDS)
class TestBackend:
    def test_floor_rat(self, name, impl):
        assert impl.floor_rat(7, 2) == 3
        assert impl.floor_rat(-7, 2) == -4
        assert impl.floor_rat(0, 5) == 0

    def test_sign_quad(self, name, impl):
        assert impl.sign_quad(7, -5, 2) == -1
        assert impl.sign_quad(-7, 5, 2) == 1
        assert impl.sign_quad(0, 0, 2) == 0
        assert impl.sign_quad(3, 1, 2) == 1
        assert impl.sign_quad(-3, -1, 2) == -1

    def test_floor_quad_examples(self, name, impl):
        assert impl.floor_quad(0, 10, 2, 1) == 14
        assert impl.floor_quad(0, -10, 2, 1) == -15
        assert impl.floor_quad(3, 2, 2, 2) == 2  # (3 + 2*sqrt(2))/2 = 2.91..
        assert impl.floor_quad(5, 0, 2, 2) == 2

    def test_floor_multiples_match_single(self, name, impl):
        out = impl.floor_multiples_quad(1, 3, 5, 4, 60)
        for m in range(61):
            assert out[m] == impl.floor_quad(m, 3 * m, 5, 4)

    def test_weyl_search_basic(self, name, impl):
        assert impl.weyl_search(0, 1, 2, 1, 1, 10, 1, 10**4) == 5
        assert impl.weyl_search(0, 1, 2, 1, 1, 2, 1, 10**4) == 1
        assert impl.weyl_search(0, 1, 2, 1, 1, 100, 1, 3) == -1  # cap too small

    def test_h0_formulas_match_bruteforce(self, name, impl):
        for e in (0, 1, 2, 3):
            for a in range(-3, 9):
                for b in range(-5, 14):
                    brute = 0
                    if a >= 0:
                        brute = sum(max(0, b - j * e + 1) for j in range(a + 1))
                    assert impl.h0_hirzebruch(e, a, b) == brute, (e, a, b)
        for n in range(-4, 12):
            brute = sum(1 for i in range(max(n, 0) + 1)
                        for j in range(max(n, 0) + 1) if i + j <= n)
            assert impl.h0_p2(n) == brute


@given(
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=-10**6, max_value=10**6),
    st.sampled_from(SQUAREFREE),
    st.integers(min_value=1, max_value=10**4),
)
def test_floor_quad_vs_bruteforce(N, M, d, Q):
    got = _pure.floor_quad(N, M, d, Q)
    assert got == brute_floor_quad(N, M, d, Q)
    # definitional check: got <= x < got + 1
    assert _pure.sign_quad(N - got * Q, M, d) >= 0
    assert _pure.sign_quad(N - (got + 1) * Q, M, d) < 0


@pytest.mark.skipif(_core is None, reason="compiled kernels not built")
@given(
    st.integers(min_value=-10**12, max_value=10**12),
    st.integers(min_value=-10**9, max_value=10**9),
    st.sampled_from(SQUAREFREE),
    st.integers(min_value=1, max_value=10**6),
)
@settings(max_examples=150)
def test_backends_agree_floor(N, M, d, Q):
    assert _core.floor_quad(N, M, d, Q) == _pure.floor_quad(N, M, d, Q)
    assert _core.sign_quad(N, M, d) == _pure.sign_quad(N, M, d)


@pytest.mark.skipif(_core is None, reason="compiled kernels not built")
@given(
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=-50, max_value=50),
    st.sampled_from(SQUAREFREE),
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=0, max_value=300),
)
@settings(max_examples=60)
def test_backends_agree_scans(N, M, d, Q, m_max):
    assert (_core.floor_multiples_quad(N, M, d, Q, m_max)
            == _pure.floor_multiples_quad(N, M, d, Q, m_max))
    assert (_core.floor_multiples_rat(N, Q, m_max)
            == _pure.floor_multiples_rat(N, Q, m_max))


@pytest.mark.skipif(_core is None, reason="compiled kernels not built")
def test_backends_agree_weyl_and_h0():
    for (en, ed) in [(1, 10), (1, 100), (1, 7), (2, 9)]:
        for d in (2, 3, 5):
            assert (_core.weyl_search(0, 1, d, 1, en, ed, 1, 10**5)
                    == _pure.weyl_search(0, 1, d, 1, en, ed, 1, 10**5))
    for e in range(4):
        for a in range(-2, 30):
            for b in range(-2, 30):
                assert _core.h0_hirzebruch(e, a, b) == _pure.h0_hirzebruch(e, a, b)


def test_selected_backend_exported():
    assert kernels.BACKEND in ("pure", "cython")
    assert kernels.floor_quad(0, 10, 2, 1) == 14


def test_big_integers_stay_exact():
    # far beyond 64-bit: floor(10^40 * sqrt(2))
    M = 10**40
    got = kernels.floor_quad(0, M, 2, 1)
    assert got == isqrt(M * M * 2)
    assert got * got <= 2 * M * M < (got + 1) * (got + 1)


def test_floor_quad_pell_boundaries():
    """Convergents of sqrt(2) make M*sqrt(2) astronomically close to integers;
    the +-1 correction branch must still be exact."""
    convergents = [(3, 2), (17, 12), (99, 70), (577, 408), (3363, 2378),
                   (114243, 80782), (22619537, 15994428)]
    for p, q in convergents:
        assert abs(p * p - 2 * q * q) == 1
        want = isqrt(q * q * 2)
        for impl in [impl for _, impl in BACKENDS]:
            assert impl.floor_quad(0, q, 2, 1) == want
            # shift so the value sits just above/below an integer
            assert impl.floor_quad(-want, q, 2, 1) == 0
            assert impl.floor_quad(-want - 1, q, 2, 1) == -1


@pytest.mark.parametrize("name, impl", BACKENDS)
def test_floor_multiples_negative_slope(name, impl):
    out = impl.floor_multiples_quad(1, -3, 5, 4, 50)
    for m in range(51):
        assert out[m] == impl.floor_quad(m, -3 * m, 5, 4)


def test_weyl_search_with_late_start():
    from fractions import Fraction

    from divpos.exact_numbers import QuadExt, weyl_find, frac

    # independent brute force straight from the integer-square oracle
    def brute(k_start, eps):
        k = k_start
        while True:
            F = isqrt(k * k * 2)
            if k * k * 2 * eps.denominator**2 < (F * eps.denominator + eps.numerator) ** 2:
                return k
            k += 1

    eps = Fraction(1, 10)
    expected = brute(100, eps)
    got = weyl_find(QuadExt(0, 1, 2), eps, 100)
    assert got == expected
    assert frac(QuadExt(0, 1, 2) * got) < QuadExt(eps)
