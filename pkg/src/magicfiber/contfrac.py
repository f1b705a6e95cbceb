"""Continued fractions linking homology classes (x, y) to braid parameters (m, p).

The Euclidean expansion of max{x,y}/min{x,y} can be written with either
parity of length (split the last quotient as w -> (w-1, 1) or merge a
trailing 1); picking the parity by the sign of x - y makes the bracket
calculus below produce the twist parameter p of the monodromy braid, and
the assignment (x, y) -> p is a bijection modulo m - 1.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Sequence

from .errors import DomainError
from .magic import FiberClass


@dataclasses.dataclass(frozen=True)
class EuclidData:
    """Remainders and quotients of the Euclidean algorithm on a coprime pair."""

    r: tuple[int, ...]  # r0 > r1 > ... > r_j = 1, r_{j+1} = 0
    q: tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class ContFrac:
    """A continued-fraction expansion as its sequence of partial quotients."""

    w: tuple[int, ...]

    def __post_init__(self):
        if not self.w:
            raise DomainError("empty continued fraction")
        if any(e < 1 for e in self.w):
            raise DomainError("partial quotients must be positive")

    @property
    def length(self) -> int:
        return len(self.w)


def euclid(u: int, v: int) -> EuclidData:
    """Remainder/quotient sequences for a coprime pair of positive integers."""
    if u < 1 or v < 1:
        raise DomainError("Euclidean data needs positive integers")
    if math.gcd(u, v) != 1:
        raise DomainError(f"pair ({u}, {v}) is not coprime")
    r = [max(u, v), min(u, v)]
    q = []
    while r[-1] != 0:
        q.append(r[-2] // r[-1])
        r.append(r[-2] % r[-1])
    return EuclidData(tuple(r), tuple(q))


def bracket(w: Sequence[int]) -> int:
    """[w1, ..., wj]: numerator of the continued fraction, via the standard recursion."""
    if not w:
        raise DomainError("bracket of an empty sequence is undefined")
    if any(e < 1 for e in w):
        raise DomainError("bracket entries must be positive")
    prev, cur = 1, w[0]
    for e in w[1:]:
        prev, cur = cur, cur * e + prev
    return cur


def cf_with_parity(x: int, y: int) -> ContFrac:
    """The expansion of max{x,y}/min{x,y} with odd length if x > y, even if x < y.

    The pair (1, 1) takes the odd branch.  Wrong natural parity is repaired
    by splitting the last quotient (w -> (w-1, 1)) or merging a trailing 1.
    """
    if x < 1 or y < 1:
        raise DomainError("both entries must be positive")
    if math.gcd(x, y) != 1:
        raise DomainError(f"pair ({x}, {y}) is not coprime")
    w = list(euclid(x, y).q)
    want_odd = x >= y  # x == y only happens at (1, 1), which sits on the odd branch
    if (len(w) % 2 == 1) != want_odd:
        if w[-1] >= 2:
            w[-1] -= 1
            w.append(1)
        elif len(w) >= 2:
            w[-2] += w.pop()
        else:
            raise DomainError("no expansion of the requested parity exists")
    cf = ContFrac(tuple(w))
    # Value check: the bracket quotient must reproduce max/min.
    num = bracket(cf.w)
    den = bracket(cf.w[1:]) if len(cf.w) > 1 else 1
    assert (num, den) == (max(x, y), min(x, y)), (x, y, cf)
    return cf


def p_of(x: int, y: int) -> int:
    """The braid twist parameter p(x, y) = [w_{j-1}, ..., w_1, 1]."""
    w = cf_with_parity(x, y).w
    return bracket(tuple(reversed(w[:-1])) + (1,))


def monodromy_of(x: int, y: int) -> tuple[int, int]:
    """(m, p) of the disk braid carrying the monodromy of x*alpha + y*beta."""
    return (x + y + 1, p_of(x, y))


def class_of_monodromy(m: int, p: int) -> tuple[int, int]:
    """The unique coprime (x, y) with x + y = m - 1 and p(x, y) = p mod (m - 1)."""
    if m < 3:
        raise DomainError("braid family needs m >= 3")
    p_red = p % (m - 1)
    if p_red == 0:
        p_red = m - 1
    if math.gcd(p_red, m - 1) != 1:
        raise DomainError(
            f"gcd(p, m-1) = gcd({p}, {m - 1}) != 1: reducible family, no fibered class"
        )
    for x in range(1, m - 1):
        y = m - 1 - x
        if math.gcd(x, y) == 1 and p_of(x, y) == p_red:
            return (x, y)
    raise AssertionError(f"no class found for (m, p) = ({m}, {p}); bijection broken")


def fiber_from_sequence(q: Sequence[int]) -> tuple[int, int, FiberClass]:
    """Braid parameters and homology class of the fiber built from a step sequence.

    Odd-length sequences start from the one-parameter base fiber, even
    lengths from the two-parameter one; every following pair (k, l) applies
    the opening/regluing step, which acts on the parameters as
    p' = k(m-1) + p, m' = l p' + m and on the class pair linearly.
    """
    q = list(q)
    if not q:
        raise DomainError("empty step sequence")
    if any(e < 1 for e in q):
        raise DomainError("step entries must be positive")

    if len(q) % 2 == 1:
        l0 = q[0]
        hat = (1, 0)            # class of the auxiliary spanning surface
        cur = (l0, 1)           # class of the fiber itself
        m, p = l0 + 2, 1
        rest = q[1:]
    else:
        k1, l1 = q[0], q[1]
        hat = (1, k1)
        cur = (l1, l1 * k1 + 1)
        m, p = (k1 + 1) * l1 + 2, k1 + 1
        rest = q[2:]

    for idx in range(0, len(rest), 2):
        k, l = rest[idx], rest[idx + 1]
        new_hat = (k * cur[0] + hat[0], k * cur[1] + hat[1])
        cur = (l * new_hat[0] + cur[0], l * new_hat[1] + cur[1])
        hat = new_hat
        p = k * (m - 1) + p
        m = l * p + m

    return m, p, FiberClass(cur[0], cur[1], 0)
