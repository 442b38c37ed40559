"""Exact univariate polynomials over the rationals.

Coefficients are stored lowest degree first as `fractions.Fraction`, so
structure functions and Casimir values computed from half-integer labels
stay exact until the final float conversion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        # Exact binary expansion; callers wanting a decimal reading should
        # pass a string or Fraction instead.
        return Fraction(x).limit_denominator(10**12)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Polynomial is immutable")

    # -- basic queries ----------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            return Polynomial([c * a for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def shift(self, a) -> "Polynomial":
        """Return p(x + a) exactly."""
        a = _as_fraction(a)
        result = Polynomial()
        xa = Polynomial([a, 1])
        power = Polynomial([1])
        for c in self.coeffs:
            result = result + power * c
            power = power * xa
        return result

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input, float otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
        else:
            acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else float(c))
        return acc

    # -- presentation -------------------------------------------------------

    def float_coeffs(self) -> tuple:
        return tuple(float(c) for c in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return "Polynomial(" + " + ".join(parts) + ")"

    @staticmethod
    def from_roots(roots: Sequence) -> "Polynomial":
        p = Polynomial([1])
        for r in roots:
            p = p * Polynomial([-_as_fraction(r), 1])
        return p


X = Polynomial([0, 1])


def antidifference(f: Polynomial) -> Polynomial:
    """Polynomial g with g(x) - g(x-1) = f(x) and g(0) = 0.

    Equivalently g(x) = sum_{t=1..x} f(t) continued polynomially.  The
    additive constant matters: the Casimir N+N- + g(N0-1) is only
    convention-free once g(0) is pinned.
    """
    if f.is_zero():
        return Polynomial()
    d = f.degree() + 1
    # g = sum_{i=1..d} g_i x^i; match g(x) - g(x-1) = f(x) at x = 1..d.
    rows = []
    rhs = []
    for x in range(1, d + 1):
        rows.append(
            [
                Fraction(x) ** i - Fraction(x - 1) ** i
                for i in range(1, d + 1)
            ]
        )
        rhs.append(f(Fraction(x)))
    sol = _solve_exact(rows, rhs)
    return Polynomial([Fraction(0)] + sol)


def _solve_exact(rows, rhs):
    """Gaussian elimination over Fraction for small dense systems."""
    n = len(rows)
    a = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]
