"""Exact univariate polynomial arithmetic and real-root isolation.

Polynomials live in Z[t] and are stored as dense coefficient tuples,
constant term first.  All root counting goes through Sturm sequences
evaluated in exact rational arithmetic, and brackets are refined by exact
bisection, so there is no floating-point step anywhere in the isolation
pipeline.  The module also builds Salem-Boyd polynomials t^n R(t) +/- R*(t),
whose large roots converge to those of R.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError


@dataclasses.dataclass(frozen=True)
class IntPolynomial:
    """A polynomial over the integers, dense coefficients from the constant term up.

    The zero polynomial is the empty tuple; otherwise the leading
    coefficient is nonzero.

    >>> IntPolynomial.of(1, -4, 1)
    IntPolynomial('t^2 - 4t + 1')
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(*coeffs: int) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(coeffs)

    @staticmethod
    def from_coeffs(coeffs: Iterable[int]) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return IntPolynomial(tuple(int(c) for c in cs))

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial(())

    @staticmethod
    def one() -> "IntPolynomial":
        return IntPolynomial((1,))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "IntPolynomial":
        if coeff == 0:
            return IntPolynomial(())
        return IntPolynomial((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading_coefficient(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_coeffs(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.from_coeffs(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial.from_coeffs(out)

    def scale(self, k: int) -> "IntPolynomial":
        if k == 0:
            return IntPolynomial(())
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def shift_degree(self, n: int) -> "IntPolynomial":
        """Multiply by t^n (n >= 0)."""
        if n < 0:
            raise ValueError("shift_degree wants n >= 0")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * n + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.from_coeffs(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content; sign normalized so the leading coefficient is positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"


@dataclasses.dataclass(frozen=True)
class RootBracket:
    """An open interval (lo, hi) containing exactly one real root of a polynomial."""

    lo: Fraction
    hi: Fraction
    simple: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("bracket needs lo < hi")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def reciprocal(f: IntPolynomial) -> IntPolynomial:
    """The reciprocal t^d f(1/t): coefficients reversed, trailing zeros stripped."""
    if f.is_zero():
        raise DomainError("reciprocal of the zero polynomial is undefined")
    return IntPolynomial.from_coeffs(reversed(f.coeffs))


def salem_boyd(R: IntPolynomial, n: int, sign: int) -> IntPolynomial:
    """The Salem-Boyd polynomial t^n R(t) + sign * R*(t) for monic R."""
    if not R.is_monic():
        raise DomainError("Salem-Boyd construction expects a monic polynomial")
    if n < 0:
        raise DomainError("Salem-Boyd exponent must be nonnegative")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    star = reciprocal(R)
    return R.shift_degree(n) + (star if sign == 1 else -star)


def poly_divmod(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of dense Fraction coefficient lists (low-to-high)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lb
        if c:
            q[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    while a and a[-1] == 0:
        a.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, a


def _to_fractions(f: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in f.coeffs]


def _from_fractions(cs: Sequence[Fraction]) -> IntPolynomial:
    """Clear denominators (positive multiplier) and divide out the content."""
    if not cs:
        return IntPolynomial(())
    lcm = 1
    for c in cs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in cs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return IntPolynomial.from_coeffs(c // g for c in ints)


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Monic-free gcd in Z[t], primitive with positive leading coefficient."""
    a, b = _to_fractions(f), _to_fractions(g)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return _from_fractions(a).primitive_part() if a else IntPolynomial(())


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """f with repeated factors collapsed to multiplicity one."""
    if f.is_zero():
        raise DomainError("square-free part of the zero polynomial is undefined")
    if f.degree == 0:
        return IntPolynomial.one()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f.primitive_part()
    q, r = poly_divmod(_to_fractions(f), _to_fractions(g))
    assert not r
    return _from_fractions(q).primitive_part()


def sturm_chain(f: IntPolynomial) -> list[IntPolynomial]:
    """Sturm sequence of the square-free part of f.

    Each remainder is rescaled by a positive rational, which preserves signs
    and therefore the sign-variation count.
    """
    p0 = squarefree_part(f)
    chain = [p0]
    if p0.degree >= 1:
        chain.append(p0.derivative().primitive_part())
        while chain[-1].degree >= 1:
            _, r = poly_divmod(_to_fractions(chain[-2]), _to_fractions(chain[-1]))
            if not r:
                break
            chain.append(-_from_fractions(r))
    return chain


def _sign_variations(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = p(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_in(f: IntPolynomial, lo: Fraction | int, hi: Fraction | int) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi)."""
    if f.is_zero():
        raise DomainError("root counting needs a nonzero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise DomainError("root counting needs lo < hi")
    if f(lo) == 0 or f(hi) == 0:
        raise DomainError(
            "interval endpoint is a root; perturb the endpoint slightly and retry"
        )
    chain = sturm_chain(f)
    return _sign_variations(chain, lo) - _sign_variations(chain, hi)


def cauchy_root_bound(f: IntPolynomial) -> Fraction:
    """A bound strictly exceeding the absolute value of every root."""
    if f.is_zero() or f.degree < 1:
        raise DomainError("root bound needs degree >= 1")
    lead = abs(f.coeffs[-1])
    biggest = max(abs(c) for c in f.coeffs[:-1])
    return 2 + Fraction(biggest, lead)


def largest_positive_root_bracket(f: IntPolynomial, tol: Fraction | float) -> RootBracket:
    """Isolate and refine the largest real root in (0, oo) to width <= tol.

    Raises ``DomainError`` if f has no positive real root.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if f.is_zero() or f.degree < 1:
        raise DomainError("no positive real root")
    g = squarefree_part(f)
    chain = sturm_chain(g)

    lo = Fraction(0)
    while g(lo) == 0:  # t = 0 may be a root; it is not a positive one
        lo += Fraction(1, 2)
        if lo >= 1:
            raise AssertionError("could not step off a root at the origin")
    hi = cauchy_root_bound(g)
    count = _sign_variations(chain, lo) - _sign_variations(chain, hi)
    if count <= 0:
        raise DomainError("no positive real root")

    # Shrink (lo, hi] until it contains exactly the largest root.
    while count > 1:
        mid = (lo + hi) / 2
        if g(mid) == 0:
            mid = (mid + hi) / 2  # nudge off an exact root hit
            if g(mid) == 0:
                raise AssertionError("two root hits while nudging midpoint")
        upper = _sign_variations(chain, mid) - _sign_variations(chain, hi)
        if upper >= 1:
            lo, count = mid, upper
        else:
            hi = mid
            count = _sign_variations(chain, lo) - _sign_variations(chain, hi)

    # Pure sign bisection on the isolated simple root.
    slo, shi = g(lo) > 0, g(hi) > 0
    assert slo != shi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = g(mid)
        if v == 0:
            eps = (hi - lo) / 4
            lo, hi = mid - eps, mid + eps
            break
        if (v > 0) == slo:
            lo = mid
        else:
            hi = mid
    mult = _root_multiplicity(f, lo, hi)
    return RootBracket(lo, hi, simple=(mult == 1))


def _root_multiplicity(f: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Multiplicity in f of the single root bracketed by (lo, hi)."""
    mult = 0
    g = f
    while not g.is_zero() and g.degree >= 1 and count_real_roots_in(g, lo, hi) == 1:
        mult += 1
        g = poly_gcd(g, g.derivative())
    return mult


def largest_real_root(f: IntPolynomial, tol: Fraction | float = Fraction(1, 10**12)) -> Fraction:
    """The largest real root of f in (0, oo) as a rational within tol."""
    br = largest_positive_root_bracket(f, tol)
    return br.midpoint


def compare_largest_roots(
    f1: IntPolynomial,
    br1: RootBracket,
    f2: IntPolynomial,
    br2: RootBracket,
) -> int:
    """Order the algebraic numbers isolated by (f1, br1) and (f2, br2).

    Returns -1, 0 or +1.  Brackets are refined until they separate; exact
    equality is recognized through a common gcd factor, so overlapping
    floating-point approximations can never produce a false tie.
    """
    g = poly_gcd(squarefree_part(f1), squarefree_part(f2))
    s1, s2 = squarefree_part(f1), squarefree_part(f2)
    lo1, hi1 = br1.lo, br1.hi
    lo2, hi2 = br2.lo, br2.hi

    def refine(p: IntPolynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:  # found the root exactly; collapse to a tight bracket
            eps = (hi - lo) / 8
            return mid - eps, mid + eps
        if (v > 0) == (p(lo) > 0):
            return mid, hi
        return lo, mid

    for _ in range(4000):
        if hi1 <= lo2:
            return -1
        if hi2 <= lo1:
            return 1
        if g.degree >= 1:
            olo, ohi = max(lo1, lo2), min(hi1, hi2)
            if olo < ohi and g(olo) != 0 and g(ohi) != 0:
                if count_real_roots_in(g, olo, ohi) >= 1:
                    return 0
        lo1, hi1 = refine(s1, lo1, hi1)
        lo2, hi2 = refine(s2, lo2, hi2)
    raise AssertionError("root comparison failed to separate after extensive refinement")
