"""Sparse Laurent polynomials in one variable tau with integer coefficients."""
from __future__ import annotations

from typing import Mapping, Union

from .errors import InputError

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[tau, tau^-1], stored as ``{exponent: coefficient}``.

    >>> delta = LaurentPoly({0: 1, -2: 1})
    >>> delta * delta
    LaurentPoly({-4: 1, -2: 2, 0: 1})
    >>> str(delta)
    '1 + tau^-2'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for exp, coeff in (terms or {}).items():
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise InputError("exponents and coefficients must be integers")
            if coeff:
                clean[exp] = coeff
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x: Scalar) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls.constant(x)
        raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        try:
            return self + (-LaurentPoly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPoly({e * k: c ** (-k)})
            raise InputError("only monomial units have negative powers")
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), key=lambda t: -t[0]):
            mono = "" if e == 0 else ("tau" if e == 1 else f"tau^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})


TAU = LaurentPoly.monomial(1)
DELTA = LaurentPoly({0: 1, -2: 1})
"""The loop value 1 + tau^-2."""
