"""Exact sparse multivariate polynomials over arbitrary-precision integers.

A polynomial lives in Z[q, t1, t2, ...]: one distinguished variable "q" plus
one variable per graph edge (named "t" + edge id).  Terms are stored as a
dict mapping exponent tuples to nonzero int coefficients; the variable tuple
is pruned to the variables that actually occur and kept in a canonical order
(q first, then edge variables in numeric-aware name order), so structural
equality is polynomial equality and printing is deterministic.
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping, Union

from .errors import ExactDivisionError, InvalidArgumentError

_NUM_SPLIT = re.compile(r"(\d+)")


def var_sort_key(name: str):
    """Canonical total order on variable names: q first, then natural order."""
    if name == "q":
        return (0,)
    pieces = []
    for piece in _NUM_SPLIT.split(name):
        if not piece:
            continue
        if piece.isdigit():
            pieces.append((1, int(piece), ""))
        else:
            pieces.append((0, 0, piece))
    return (1, tuple(pieces))


class MPoly:
    """Immutable exact polynomial in named commuting variables."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables=(), terms: Mapping[tuple, int] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InvalidArgumentError(f"duplicate variable names in {variables!r}")
        raw = {tuple(e): int(c) for e, c in (terms or {}).items() if c}
        for exps in raw:
            if len(exps) != len(variables):
                raise InvalidArgumentError(
                    f"exponent tuple {exps!r} does not match variables {variables!r}"
                )
        used = [i for i in range(len(variables)) if any(e[i] for e in raw)]
        order = sorted(used, key=lambda i: var_sort_key(variables[i]))
        object.__setattr__(self, "variables", tuple(variables[i] for i in order))
        object.__setattr__(
            self,
            "terms",
            {tuple(e[i] for i in order): c for e, c in raw.items()},
        )
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "MPoly":
        return cls((), {})

    @classmethod
    def const(cls, c: int) -> "MPoly":
        return cls((), {(): int(c)}) if c else cls.zero()

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> "MPoly":
        names = tuple(exponents)
        return cls(names, {tuple(exponents[n] for n in names): coeff})

    # -- ring structure ----------------------------------------------------

    def _aligned(self, other: "MPoly"):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms
        merged = tuple(
            sorted(set(self.variables) | set(other.variables), key=var_sort_key)
        )
        pos = {n: i for i, n in enumerate(merged)}

        def remap(poly):
            out = {}
            idx = [pos[n] for n in poly.variables]
            for exps, c in poly.terms.items():
                e = [0] * len(merged)
                for i, x in zip(idx, exps):
                    e[i] = x
                out[tuple(e)] = c
            return out

        return merged, remap(self), remap(other)

    def __add__(self, other: Union["MPoly", int]) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        names, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MPoly(names, out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["MPoly", int]) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "MPoly":
        return MPoly.const(other) - self

    def __mul__(self, other: Union["MPoly", int]) -> "MPoly":
        if isinstance(other, int):
            if not other:
                return MPoly.zero()
            return MPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        names, a, b = self._aligned(other)
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return MPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise InvalidArgumentError("negative polynomial power")
        result = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    # -- queries -----------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            raise InvalidArgumentError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Largest exponent of `name`; 0 when the variable does not occur."""
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def iter_terms(self) -> Iterator[tuple[tuple, int]]:
        return iter(self.terms.items())

    # -- operations --------------------------------------------------------

    def substitute(self, name: str, value: Union["MPoly", int]) -> "MPoly":
        """Exact substitution of `value` for the variable `name`."""
        if name not in self.variables:
            return self
        if isinstance(value, int):
            value = MPoly.const(value)
        idx = self.variables.index(name)
        powers: dict[int, MPoly] = {0: MPoly.const(1)}
        out = MPoly.zero()
        for exps, c in self.terms.items():
            e = exps[idx]
            if e not in powers:
                powers[e] = value**e
            rest = tuple(x if i != idx else 0 for i, x in enumerate(exps))
            out = out + MPoly(self.variables, {rest: c}) * powers[e]
        return out

    def eval_mod(self, assignment: Mapping[str, int], prime: int) -> int:
        """Value at a point of the field with `prime` elements."""
        for name in self.variables:
            if name not in assignment:
                raise InvalidArgumentError(f"no value assigned to variable {name!r}")
        total = 0
        vals = [assignment[n] % prime for n in self.variables]
        for exps, c in self.terms.items():
            term = c % prime
            for v, e in zip(vals, exps):
                if e:
                    term = term * pow(v, e, prime) % prime
            total = (total + term) % prime
        return total

    def lowest_homogeneous_part(self) -> "MPoly":
        """Sum of the terms of minimal total degree (all variables weight 1)."""
        if not self.terms:
            raise InvalidArgumentError(
                "the zero polynomial has no lowest homogeneous part"
            )
        low = min(sum(e) for e in self.terms)
        return MPoly(
            self.variables, {e: c for e, c in self.terms.items() if sum(e) == low}
        )

    def divide_exact_by_q_power(self, k: int) -> "MPoly":
        """Exact quotient by q^k; every term must be divisible."""
        if k < 0:
            raise InvalidArgumentError("negative power of q")
        if k == 0 or not self.terms:
            return self
        if "q" not in self.variables:
            raise ExactDivisionError(f"q^{k} does not divide {self}")
        idx = self.variables.index("q")
        out = {}
        for exps, c in self.terms.items():
            if exps[idx] < k:
                raise ExactDivisionError(f"q^{k} does not divide the term {exps}")
            e = list(exps)
            e[idx] -= k
            out[tuple(e)] = c
        return MPoly(self.variables, out)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in graded-lex order, highest first (the printing order)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MPoly<{self.render()}>"


Q = MPoly.var("q")


def edge_var(edge_id: str) -> MPoly:
    """The polynomial variable t<edge_id> attached to an edge."""
    return MPoly.var("t" + str(edge_id))
