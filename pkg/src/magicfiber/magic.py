"""Fibered cone of the magic manifold: norms, fiber combinatorics, dilatations.

Integral classes live in the rank-3 homology lattice with basis (alpha,
beta, gamma).  Everything here works over the single fibered cone
{x > 0, y > 0, x > z, y > z}; the other cones are carried to it by the
symmetries of the chain link, so nothing is lost.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Iterable, Union

from . import intpoly, laurent
from .errors import DomainError
from .intpoly import IntPolynomial, RootBracket


@dataclasses.dataclass(frozen=True, order=True)
class FiberClass:
    """An integral second-homology class x*alpha + y*beta + z*gamma."""

    x: int
    y: int
    z: int

    @staticmethod
    def parse(text: str) -> "FiberClass":
        parts = [int(p) for p in text.replace(" ", "").split(",")]
        if len(parts) == 2:
            parts.append(0)
        if len(parts) != 3:
            raise DomainError("a class needs two or three comma-separated integers")
        return FiberClass(*parts)

    def __str__(self) -> str:
        return f"{self.x},{self.y},{self.z}"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclasses.dataclass(frozen=True)
class FiberInfo:
    """Topological data of the minimal fiber surface of a primitive class."""

    norm: int
    boundary: tuple[int, int, int]  # component counts along the three cusps
    punctures: int
    genus: int
    prongs: tuple[int, int, int]    # prongs of the stable foliation per component


@dataclasses.dataclass(frozen=True)
class AxisPair:
    """Genus-0 family with z = 0 and coprime (x, y)."""


@dataclasses.dataclass(frozen=True)
class Chain:
    """Genus-0 family (n+1, n, n-1), n >= 2 and n not divisible by 3."""

    n: int


@dataclasses.dataclass(frozen=True)
class Double:
    """Genus-0 family (2n+1, n+1, n), n >= 1."""

    n: int


@dataclasses.dataclass(frozen=True)
class NotGenus0:
    """Positive-genus fiber."""


Genus0Kind = Union[AxisPair, Chain, Double, NotGenus0]


def in_open_cone(c: FiberClass) -> bool:
    """Membership in the open cone over the chosen fibered face."""
    return c.x > 0 and c.y > 0 and c.x > c.z and c.y > c.z


def _require_cone(c: FiberClass) -> None:
    if not in_open_cone(c):
        raise DomainError(f"class {c} is outside the open fibered cone")


def is_primitive(c: FiberClass) -> bool:
    return math.gcd(c.x, c.y, c.z) == 1


def _require_primitive(c: FiberClass) -> None:
    if not is_primitive(c):
        raise DomainError(
            f"class {c} is not primitive; its minimal representative is disconnected"
        )


def thurston_norm(c: FiberClass) -> int:
    """x + y - z on the cone."""
    _require_cone(c)
    return c.x + c.y - c.z


def fiber_info(c: FiberClass) -> FiberInfo:
    """Boundary counts, punctures, genus and prong data of the minimal fiber."""
    _require_cone(c)
    _require_primitive(c)
    x, y, z = c.x, c.y, c.z
    boundary = (math.gcd(x, y + z), math.gcd(y, z + x), math.gcd(z, x + y))
    punctures = sum(boundary)
    norm = x + y - z
    genus2 = norm + 2 - punctures
    assert genus2 % 2 == 0 and genus2 >= 0
    prongs = (
        x // boundary[0],
        y // boundary[1],
        (x + y - 2 * z) // boundary[2],
    )
    return FiberInfo(norm, boundary, punctures, genus2 // 2, prongs)


def genus0_classify(c: FiberClass) -> Genus0Kind:
    """Which of the three genus-0 families the class belongs to, if any.

    The class is canonicalized to x >= y first (the fiber polynomial is
    symmetric in x and y).  The overlap (3,2,1) is reported as Chain(2).
    """
    _require_cone(c)
    _require_primitive(c)
    x, y, z = (c.x, c.y, c.z) if c.x >= c.y else (c.y, c.x, c.z)
    if z == 0 and math.gcd(x, y) == 1:
        return AxisPair()
    n = y
    if (x, y, z) == (n + 1, n, n - 1) and n >= 2 and n % 3 != 0:
        return Chain(n)
    if x == 2 * z + 1 and y == z + 1 and z >= 1:
        return Double(z)
    return NotGenus0()


def enumerate_Hn(n: int) -> list[FiberClass]:
    """All primitive cone classes with x >= y whose fiber is an n-punctured sphere."""
    if n < 4:
        raise DomainError("fibers have at least 4 punctures")
    found: set[FiberClass] = set()

    s = n - 2  # axis classes: punctures = x + y + 2
    for x in range((s + 1) // 2, s):
        y = s - x
        if y >= 1 and math.gcd(x, y) == 1:
            found.add(FiberClass(x, y, 0))

    k = n - 4  # chain classes: punctures = k + 4
    if k >= 2 and k % 3 != 0:
        found.add(FiberClass(k + 1, k, k - 1))

    if n % 2 == 0:  # double classes: punctures = 2k + 4
        k = (n - 4) // 2
        if k >= 1:
            found.add(FiberClass(2 * k + 1, k + 1, k))

    return sorted(found, key=FiberClass.as_tuple)


@functools.lru_cache(maxsize=None)
def fiber_polynomial(c: FiberClass) -> IntPolynomial:
    """The specialization of the Teichmuller polynomial at (t^x, t^y, t^z)."""
    _require_cone(c)
    P = laurent.teichmuller_homology_basis()
    return laurent.specialize(P, c.as_tuple())


DEFAULT_ROOT_TOL = Fraction(1, 10**12)


def _primitive_part(c: FiberClass) -> tuple[FiberClass, int]:
    g = math.gcd(c.x, c.y, c.z)
    if g == 0:
        raise DomainError("the zero class has no fibration")
    return FiberClass(c.x // g, c.y // g, c.z // g), g


@functools.lru_cache(maxsize=None)
def _dilatation_bracket(c: FiberClass, tol: Fraction) -> RootBracket:
    return intpoly.largest_positive_root_bracket(fiber_polynomial(c), tol)


def dilatation(c: FiberClass, tol: Fraction | float = DEFAULT_ROOT_TOL) -> Fraction:
    """The dilatation of a primitive cone class, within tol."""
    _require_cone(c)
    _require_primitive(c)
    return _dilatation_bracket(c, Fraction(tol)).midpoint


def entropy(c: FiberClass, tol: Fraction | float = DEFAULT_ROOT_TOL) -> float:
    """log of the dilatation; extends to non-primitive classes by homogeneity."""
    _require_cone(c)
    c0, g = _primitive_part(c)
    return math.log(dilatation(c0, tol)) / g


def normalized_entropy(c: FiberClass, tol: Fraction | float = DEFAULT_ROOT_TOL) -> float:
    """Thurston norm times entropy; constant on rays through the origin."""
    return thurston_norm(c) * entropy(c, tol)


def _compare_classes(a: FiberClass, b: FiberClass, tol: Fraction) -> int:
    return intpoly.compare_largest_roots(
        fiber_polynomial(a), _dilatation_bracket(a, tol),
        fiber_polynomial(b), _dilatation_bracket(b, tol),
    )


def min_dilatation_class(
    n: int, tol: Fraction | float = DEFAULT_ROOT_TOL
) -> tuple[FiberClass, Fraction]:
    """The unique class of minimal dilatation among n-punctured-sphere fibers.

    Comparisons are exact (interval refinement with a gcd fallback), so a
    tie can only be reported if two distinct classes genuinely share their
    dilatation; that would be a theorem-level surprise and raises.
    """
    tol = Fraction(tol)
    classes = enumerate_Hn(n)
    best = [classes[0]]
    for c in classes[1:]:
        cmp = _compare_classes(c, best[0], tol)
        if cmp < 0:
            best = [c]
        elif cmp == 0:
            best.append(c)
    if len(best) > 1:
        raise DomainError(
            "dilatation tie between distinct classes: "
            + ", ".join(str(c) for c in best)
        )
    return best[0], dilatation(best[0], tol)


def closed_form_fiber_polynomial(c: FiberClass) -> IntPolynomial:
    """Independent closed form t^(x+y-z) - t^x - t^y - t^(x-z) - t^(y-z) + 1.

    Kept separate from the derivation path so the two can be checked
    against each other.
    """
    _require_cone(c)
    x, y, z = c.x, c.y, c.z
    degrees = {}
    for d, coeff in [
        (x + y - z, 1), (x, -1), (y, -1), (x - z, -1), (y - z, -1), (0, 1),
    ]:
        degrees[d] = degrees.get(d, 0) + coeff
    coeffs = [0] * (max(degrees) + 1)
    for d, coeff in degrees.items():
        coeffs[d] = coeff
    return IntPolynomial.from_coeffs(coeffs)


def cone_classes_with_norm_at_most(bound: int) -> Iterable[FiberClass]:
    """All primitive cone classes with Thurston norm <= bound."""
    for norm in range(1, bound + 1):
        for z in range(2 - norm, norm):
            s = norm + z  # x + y
            for x in range(max(1, z + 1), s):
                y = s - x
                if y <= max(0, z):
                    continue
                c = FiberClass(x, y, z)
                if in_open_cone(c) and is_primitive(c):
                    yield c
