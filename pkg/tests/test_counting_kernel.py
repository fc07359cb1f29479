"""Differential tests of the two counting kernels against each other and
against a plain full enumeration."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pottsmotive import _countpure

try:
    from pottsmotive import _countcore
except ImportError:
    _countcore = None

KERNELS = [pytest.param(_countpure, id="pure")]
if _countcore is not None:
    KERNELS.append(pytest.param(_countcore, id="compiled"))


def brute_force(polys, nvars, prime):
    def value(shape, coeffs, point):
        total = 0
        for flat, c in enumerate(coeffs):
            if not c:
                continue
            exps = []
            rest = flat
            for extent in reversed(shape):
                exps.append(rest % extent)
                rest //= extent
            exps.reverse()
            term = c
            for v, e in zip(point, exps):
                term *= v**e
            total += term
        return total % prime

    count = 0
    for point in itertools.product(range(prime), repeat=nvars):
        if all(value(s, c, point) % prime == 0 for s, c in polys):
            count += 1
    return count


CASES = [
    # q*(1+t): the loop partition polynomial; shape (2, 2) over (q, t)
    ([((2, 2), [0, 0, 1, 1])], 2, 2, 1 * 4 - 1),
    ([((2, 2), [0, 0, 1, 1])], 2, 3, 9 - 4),
    # q alone in dimension 2
    ([((2, 1), [0, 1])], 2, 3, 3),
    # {q, t}: one point
    ([((2, 1), [0, 1]), ((1, 2), [0, 1])], 2, 5, 1),
    # empty system
    ([], 3, 5, 125),
    # constant 7 vanishes mod 7
    ([((1,), [7])], 1, 7, 7),
    # constant 3 never vanishes mod 5
    ([((1,), [3])], 1, 5, 0),
]


@pytest.mark.parametrize("kernel", KERNELS)
@pytest.mark.parametrize("polys,nvars,prime,expected", CASES)
def test_fixed_cases(kernel, polys, nvars, prime, expected):
    assert kernel.count_common_zeros(polys, nvars, prime) == expected


@pytest.mark.parametrize("kernel", KERNELS)
def test_mismatched_shape_rejected(kernel):
    with pytest.raises(ValueError):
        kernel.count_common_zeros([((2,), [0, 1])], 2, 3)


@st.composite
def dense_polys(draw, nvars):
    shape = tuple(draw(st.integers(min_value=1, max_value=3)) for _ in range(nvars))
    size = 1
    for extent in shape:
        size *= extent
    coeffs = draw(
        st.lists(
            st.integers(min_value=-6, max_value=6), min_size=size, max_size=size
        )
    )
    return (shape, coeffs)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_kernels_match_brute_force(data):
    nvars = data.draw(st.integers(min_value=0, max_value=3))
    npolys = data.draw(st.integers(min_value=1, max_value=3))
    prime = data.draw(st.sampled_from([2, 3, 5]))
    polys = [data.draw(dense_polys(nvars)) for _ in range(npolys)]
    expected = brute_force(polys, nvars, prime)
    assert _countpure.count_common_zeros(polys, nvars, prime) == expected
    if _countcore is not None:
        assert _countcore.count_common_zeros(polys, nvars, prime) == expected
