"""Finite-field point counting and exact interpolation of Grothendieck
classes.

Counting is brute force over F_p^d (with aggressive specialization, see the
kernel modules) and therefore entirely independent of every class formula in
the package; it is the verification oracle.  For a variety whose class is a
polynomial in the torus class T, the number of F_p points equals that
polynomial at T = p - 1, so exact Lagrange interpolation through counts at
enough primes recovers the class, and a reserved check prime plus an
integrality check guard against non-polynomial counts.

The compiled kernel is used when the extension built; set POTTS_PURE=1 to
force the pure-Python twin.  POTTS_BUDGET caps the nominal enumeration size
p^d per count (default 10^8).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import _countpure
from .classpoly import ClassPoly
from .errors import (
    InvalidArgumentError,
    NotPolynomialCountError,
    ResourceLimitError,
)
from .mpoly import MPoly, var_sort_key

try:  # pragma: no cover - exercised implicitly by backend selection
    from . import _countcore
except ImportError:  # pragma: no cover
    _countcore = None

DEFAULT_BUDGET = 10**8
PRIME_LADDER = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kernel_backend() -> str:
    """Which kernel actually counts: "compiled" or "pure"."""
    if os.environ.get("POTTS_PURE") == "1" or _countcore is None:
        return "pure"
    return "compiled"


def _kernel():
    return _countpure if kernel_backend() == "pure" else _countcore


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get("POTTS_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _check_budget(prime: int, ambient_dim: int, budget: int | None) -> None:
    cap = _budget(budget)
    if prime**ambient_dim > cap:
        raise ResourceLimitError(
            f"{prime}^{ambient_dim} points exceeds the budget of {cap}"
        )


def _dense_system(polys: Sequence[MPoly]):
    """Convert polynomials to the kernel's dense format over the union of
    their variables in canonical order (q outermost)."""
    names = sorted({v for p in polys for v in p.variables}, key=var_sort_key)
    pos = {n: i for i, n in enumerate(names)}
    dense = []
    for p in polys:
        degs = [0] * len(names)
        idx = [pos[n] for n in p.variables]
        for exps in p.terms:
            for i, e in zip(idx, exps):
                if e > degs[i]:
                    degs[i] = e
        shape = tuple(d + 1 for d in degs)
        strides = [0] * len(names)
        acc = 1
        for i in range(len(names) - 1, -1, -1):
            strides[i] = acc
            acc *= shape[i]
        coeffs = [0] * acc
        for exps, c in p.terms.items():
            flat = 0
            for i, e in zip(idx, exps):
                flat += e * strides[i]
            coeffs[flat] = c
        dense.append((shape, coeffs))
    return names, dense


def count_zero_locus(
    polys: Sequence[MPoly],
    ambient_dim: int,
    prime: int,
    budget: int | None = None,
) -> int:
    """Points of F_p^ambient_dim where every polynomial vanishes."""
    _check_budget(prime, ambient_dim, budget)
    constraints = [p for p in polys if not p.is_zero]
    if not constraints:
        return prime**ambient_dim
    names, dense = _dense_system(constraints)
    if len(names) > ambient_dim:
        raise InvalidArgumentError(
            f"{len(names)} variables do not fit in ambient dimension {ambient_dim}"
        )
    zeros = _kernel().count_common_zeros(dense, len(names), prime)
    return zeros * prime ** (ambient_dim - len(names))


def count_complement(
    poly: MPoly, ambient_dim: int, prime: int, budget: int | None = None
) -> int:
    """Points of F_p^ambient_dim where the polynomial is nonzero."""
    if poly.is_zero:
        return 0
    return prime**ambient_dim - count_zero_locus([poly], ambient_dim, prime, budget)


def count_fixed_q(
    poly: MPoly,
    q0: int,
    ambient_dim: int,
    prime: int,
    budget: int | None = None,
) -> int:
    """Points of the fixed-q slice (t-space only) where poly(q0, t) != 0."""
    return count_complement(
        poly.substitute("q", q0 % prime), ambient_dim, prime, budget
    )


# -- interpolation -------------------------------------------------------------


def _lagrange_fit(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (ascending) of the unique degree < len(xs) polynomial
    through the points, over exact rationals."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            shifted = [Fraction(0)] + basis
            for k in range(len(basis)):
                shifted[k] -= xs[j] * basis[k]
            basis = shifted
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k in range(len(basis)):
            coeffs[k] += basis[k] * scale
    return coeffs


def _class_from_samples(samples, ambient_dim: int) -> ClassPoly:
    xs = [p for p, _ in samples]
    ys = [n for _, n in samples]
    fit = _lagrange_fit(xs, ys)
    while fit and fit[-1] == 0:
        fit.pop()
    for c in fit:
        if c.denominator != 1:
            raise NotPolynomialCountError(
                f"interpolation through {samples} has non-integer coefficient {c}"
            )
    if len(fit) - 1 > ambient_dim:
        raise NotPolynomialCountError(
            f"interpolated degree {len(fit) - 1} exceeds ambient dimension {ambient_dim}"
        )
    # rebase from L to T = L - 1
    lef = ClassPoly((1, 1))
    out = ClassPoly.zero()
    for i, c in enumerate(fit):
        out = out + lef**i * int(c)
    return out


def default_primes(ambient_dim: int, *, skip_two: bool = False) -> tuple[int, ...]:
    ladder = [p for p in PRIME_LADDER if not (skip_two and p == 2)]
    if ambient_dim + 1 > len(ladder):
        raise InvalidArgumentError("ambient dimension beyond the prime ladder")
    return tuple(ladder[: ambient_dim + 1])


def default_check_prime(primes: Iterable[int]) -> int:
    top = max(primes)
    for p in PRIME_LADDER:
        if p > top:
            return p
    raise InvalidArgumentError("no check prime left on the ladder")


@dataclass(frozen=True)
class CountReport:
    """Per-prime counts with the interpolated class and its check-prime
    evidence (prime, predicted, observed)."""

    ambient_dim: int
    samples: tuple[tuple[int, int], ...]
    interpolated: ClassPoly
    check: tuple[int, int, int]

    def to_json(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "samples": [[p, n] for p, n in self.samples],
            "class_T": list(self.interpolated.coeffs),
            "check": {
                "prime": self.check[0],
                "predicted": self.check[1],
                "observed": self.check[2],
            },
        }


def count_report(
    counter: Callable[[int], int],
    ambient_dim: int,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
) -> CountReport:
    """Run the counter over the sample primes, interpolate, and verify at the
    check prime; raises NotPolynomialCountError on any inconsistency."""
    if primes is None:
        primes = default_primes(ambient_dim)
    primes = tuple(primes)
    if len(primes) < ambient_dim + 1:
        raise InvalidArgumentError(
            f"need at least {ambient_dim + 1} sample primes, got {len(primes)}"
        )
    if check_prime is None:
        check_prime = default_check_prime(primes)
    nominal = sum(p**ambient_dim for p in primes) + check_prime**ambient_dim
    cap = _budget(None)
    if nominal > cap:
        raise ResourceLimitError(
            f"report would enumerate {nominal} nominal points, over the budget of {cap}"
        )
    samples = tuple((p, counter(p)) for p in primes)
    cls = _class_from_samples(samples, ambient_dim)
    predicted = cls.eval_int(check_prime - 1)
    observed = counter(check_prime)
    if predicted != observed:
        raise NotPolynomialCountError(
            f"check prime {check_prime}: predicted {predicted}, observed {observed}"
        )
    return CountReport(ambient_dim, samples, cls, (check_prime, predicted, observed))


def interpolate_class(
    counter: Callable[[int], int],
    ambient_dim: int,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
) -> ClassPoly:
    """The unique class polynomial through the counts; see count_report."""
    return count_report(counter, ambient_dim, primes, check_prime).interpolated


# -- class-level helpers --------------------------------------------------------


def complement_class(
    poly: MPoly,
    ambient_dim: int,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
    budget: int | None = None,
) -> ClassPoly:
    """{X}: class of the complement of {poly = 0} in affine ambient space."""
    return interpolate_class(
        lambda p: count_complement(poly, ambient_dim, p, budget),
        ambient_dim,
        primes,
        check_prime,
    )


def locus_class(
    polys: Sequence[MPoly],
    ambient_dim: int,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
    budget: int | None = None,
) -> ClassPoly:
    """[X]: class of the common zero locus itself."""
    return interpolate_class(
        lambda p: count_zero_locus(polys, ambient_dim, p, budget),
        ambient_dim,
        primes,
        check_prime,
    )


def locus_complement_class(
    polys: Sequence[MPoly],
    ambient_dim: int,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
    budget: int | None = None,
) -> ClassPoly:
    """{X} for the common zero locus of several polynomials."""
    return interpolate_class(
        lambda p: p**ambient_dim - count_zero_locus(polys, ambient_dim, p, budget),
        ambient_dim,
        primes,
        check_prime,
    )


def fixed_q_class(
    poly: MPoly,
    edge_count: int,
    q0: int = 2,
    primes: Sequence[int] | None = None,
    check_prime: int | None = None,
    budget: int | None = None,
) -> ClassPoly:
    """Class of a fixed-q complement slice, sampled at odd primes (q0 must
    avoid 0 and 1 in each field)."""
    if primes is None:
        primes = default_primes(edge_count, skip_two=True)
    return interpolate_class(
        lambda p: count_fixed_q(poly, q0, edge_count, p, budget),
        edge_count,
        primes,
        check_prime,
    )
