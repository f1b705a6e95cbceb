"""Braid words, Garside normal forms, super summit sets and conjugacy testing.

Words are sequences of signed Artin generators.  Equality of braids is
decided through the classical left-weighted normal form Delta^d f_1 ... f_k
with permutation-braid factors; conjugacy is decided through super summit
sets, computed by cycling/decycling to a summit element and closing up
under conjugation by the n! permutation braids.  Everything is exact and
deterministic; sizes are desk scale (n <= 8).
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import math
import re
from typing import Iterable, Sequence

from .errors import DomainError, LimitExceededError

Perm = tuple[int, ...]  # image table, 0-based positions


# ----------------------------------------------------------------------
# Braid words
# ----------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of the braid group on ``strands`` strands.

    Letters are nonzero integers; letter i (resp. -i) is the positive
    (resp. negative) crossing of strands i, i+1.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise DomainError("a braid group needs at least 2 strands")
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise DomainError(f"letter {letter} out of range for B_{self.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise DomainError("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def __pow__(self, k: int) -> "BraidWord":
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.strands, self.letters * k)

    def free_reduce(self) -> "BraidWord":
        out: list[int] = []
        for letter in self.letters:
            if out and out[-1] == -letter:
                out.pop()
            else:
                out.append(letter)
        return BraidWord(self.strands, tuple(out))

    def exponent_sum(self) -> int:
        return sum(1 if l > 0 else -1 for l in self.letters)

    def format(self) -> str:
        body = " ".join(str(l) for l in self.letters)
        return f"B{self.strands}:" + (" " + body if body else "")

    @staticmethod
    def parse(text: str) -> "BraidWord":
        m = re.fullmatch(r"\s*B(\d+):\s*((?:-?\d+(?:\s+-?\d+)*)?)\s*", text)
        if not m:
            raise DomainError(f"cannot parse braid word {text!r}")
        strands = int(m.group(1))
        body = m.group(2)
        letters = tuple(int(tok) for tok in body.split()) if body else ()
        return BraidWord(strands, letters)

    def __str__(self) -> str:
        return self.format()


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} given by its image table."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise DomainError("image table is not a bijection of {1..n}")

    def cycle_type(self) -> tuple[int, ...]:
        n = len(self.image)
        seen = [False] * n
        lengths = []
        for i in range(n):
            if seen[i]:
                continue
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.image[j] - 1
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))


def permutation(b: BraidWord) -> Permutation:
    """The underlying symmetric-group image (start position -> end position)."""
    perm = _word_perm(b)
    return Permutation(tuple(v + 1 for v in perm))


def _word_perm(b: BraidWord) -> Perm:
    cur = list(range(b.strands))
    for letter in b.letters:
        i = abs(letter) - 1
        for s in range(b.strands):
            if cur[s] == i:
                cur[s] = i + 1
            elif cur[s] == i + 1:
                cur[s] = i
    return tuple(cur)


# ----------------------------------------------------------------------
# Permutation plumbing for the Garside structure (0-based, tuple-valued)
# ----------------------------------------------------------------------

_INV_CACHE: dict[Perm, Perm] = {}
_TAU_CACHE: dict[Perm, Perm] = {}
_START_CACHE: dict[Perm, int] = {}
_FINISH_CACHE: dict[Perm, int] = {}
_FIX_CACHE: dict[tuple[Perm, Perm], tuple[Perm, Perm]] = {}


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _w0(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def _compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[v] for v in p)


def _inverse(p: Perm) -> Perm:
    hit = _INV_CACHE.get(p)
    if hit is None:
        out = [0] * len(p)
        for i, v in enumerate(p):
            out[v] = i
        hit = _INV_CACHE[p] = tuple(out)
    return hit


def _tau(p: Perm) -> Perm:
    """Conjugation by the half twist: tau(p)(i) = n-1 - p(n-1-i)."""
    hit = _TAU_CACHE.get(p)
    if hit is None:
        n = len(p)
        hit = _TAU_CACHE[p] = tuple(n - 1 - p[n - 1 - i] for i in range(n))
    return hit


def _start_mask(p: Perm) -> int:
    """Bitmask of generators dividing the permutation braid on the left."""
    hit = _START_CACHE.get(p)
    if hit is None:
        mask = 0
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                mask |= 1 << i
        hit = _START_CACHE[p] = mask
    return hit


def _finish_mask(p: Perm) -> int:
    hit = _FINISH_CACHE.get(p)
    if hit is None:
        hit = _FINISH_CACHE[p] = _start_mask(_inverse(p))
    return hit


def _mul_gen_right(p: Perm, s: int) -> Perm:
    """p followed by the transposition (s, s+1): swap the values s, s+1."""
    out = list(p)
    for i, v in enumerate(out):
        if v == s:
            out[i] = s + 1
        elif v == s + 1:
            out[i] = s
    return tuple(out)


def _mul_gen_left(p: Perm, s: int) -> Perm:
    """Transposition (s, s+1) followed by p: swap the entries s, s+1."""
    out = list(p)
    out[s], out[s + 1] = out[s + 1], out[s]
    return tuple(out)


def _fix_pair(A: Perm, B: Perm) -> tuple[Perm, Perm]:
    """Left-weight the adjacent factor pair (A, B), preserving the product."""
    key = (A, B)
    hit = _FIX_CACHE.get(key)
    if hit is None:
        while True:
            cand = _start_mask(B) & ~_finish_mask(A)
            if not cand:
                break
            s = (cand & -cand).bit_length() - 1
            A = _mul_gen_right(A, s)
            B = _mul_gen_left(B, s)
        hit = _FIX_CACHE[key] = (A, B)
    return hit


def _perm_word(p: Perm) -> list[int]:
    """A canonical reduced word (0-based generators) for the permutation braid."""
    word: list[int] = []
    q = list(p)
    while True:
        for s in range(len(q) - 1):
            if q[s] > q[s + 1]:
                word.append(s)
                q[s], q[s + 1] = q[s + 1], q[s]
                break
        else:
            return word


@functools.lru_cache(maxsize=8)
def _all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


# ----------------------------------------------------------------------
# Left-weighted canonical forms
# ----------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """Left normal form Delta^infimum f_1 ... f_k with permutation-braid factors."""

    strands: int
    infimum: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def key(self) -> tuple:
        return (self.infimum, len(self.factors), self.factors)

    def to_word(self) -> BraidWord:
        """Any representative word: Delta^infimum followed by the factor words."""
        n = self.strands
        half = [s + 1 for s in _perm_word(_w0(n))]
        letters: list[int] = []
        if self.infimum >= 0:
            letters.extend(half * self.infimum)
        else:
            letters.extend([-l for l in reversed(half)] * (-self.infimum))
        for f in self.factors:
            letters.extend(s + 1 for s in _perm_word(f))
        return BraidWord(n, tuple(letters))

    def describe(self) -> str:
        factor_words = [
            " ".join(str(s + 1) for s in _perm_word(f)) for f in self.factors
        ]
        return f"D^{self.infimum} | " + " . ".join(factor_words)


def _normalize(n: int, d: int, factors: Iterable[Perm]) -> CanonicalForm:
    ident = _identity(n)
    w0 = _w0(n)
    fs = [f for f in factors if f != ident]
    changed = True
    while changed:
        changed = False
        for i in range(len(fs) - 1):
            A, B = _fix_pair(fs[i], fs[i + 1])
            if A != fs[i]:
                fs[i], fs[i + 1] = A, B
                changed = True
        if changed:
            fs = [f for f in fs if f != ident]
    while fs and fs[0] == w0:
        d += 1
        fs.pop(0)
    return CanonicalForm(n, d, tuple(fs))


def normal_form(b: BraidWord) -> CanonicalForm:
    """The unique left-weighted form; two words are equal in B_n iff forms are equal."""
    n = b.strands
    w0 = _w0(n)
    d = 0
    factors: list[Perm] = []
    gens = [_mul_gen_left(_identity(n), s) for s in range(n - 1)]
    for letter in b.letters:
        s = abs(letter) - 1
        if letter > 0:
            factors.append(gens[s])
        else:
            d -= 1
            factors = [_tau(f) for f in factors]
            factors.append(_compose(w0, gens[s]))
    return _normalize(n, d, factors)


def cf_mul(u: CanonicalForm, v: CanonicalForm) -> CanonicalForm:
    if u.strands != v.strands:
        raise DomainError("cannot multiply braids on different strand counts")
    fu = u.factors if v.infimum % 2 == 0 else tuple(_tau(f) for f in u.factors)
    return _normalize(u.strands, u.infimum + v.infimum, fu + v.factors)


def cf_inverse(u: CanonicalForm) -> CanonicalForm:
    n = u.strands
    w0 = _w0(n)
    k = len(u.factors)
    rs = [_compose(w0, _inverse(f)) for f in u.factors]  # r(f) = perm of Delta f^-1
    flipped = []
    for i, r in enumerate(reversed(rs)):
        power = k - 1 - i
        flipped.append(_tau(r) if power % 2 else r)
    if u.infimum % 2:
        flipped = [_tau(f) for f in flipped]
    return _normalize(n, -k - u.infimum, flipped)


def _cf_of_perm(n: int, a: Perm) -> CanonicalForm:
    return _normalize(n, 0, (a,))


def cf_conjugate(u: CanonicalForm, a: Perm) -> CanonicalForm:
    """a^-1 u a for a permutation braid a."""
    n = u.strands
    ident = _identity(n)
    if a == ident:
        return u
    w0 = _w0(n)
    r = _compose(w0, _inverse(a))  # perm of Delta a^-1
    head = _tau(r) if u.infimum % 2 else r
    return _normalize(n, u.infimum - 1, (head,) + u.factors + (a,))


def cf_cycle(u: CanonicalForm) -> CanonicalForm:
    if not u.factors:
        return u
    a = _tau(u.factors[0]) if u.infimum % 2 else u.factors[0]
    return cf_conjugate(u, a)


def cf_decycle(u: CanonicalForm) -> CanonicalForm:
    if not u.factors:
        return u
    last = u.factors[-1]
    # last * u * last^-1
    twisted = _tau(last) if u.infimum % 2 else last
    return _normalize(
        u.strands,
        u.infimum,
        (twisted,) + u.factors[:-1],
    )


def _better(candidate: CanonicalForm, reference: CanonicalForm) -> bool:
    """Strictly closer to the super summit set: higher inf, or shorter at equal inf."""
    if candidate.infimum != reference.infimum:
        return candidate.infimum > reference.infimum
    return candidate.canonical_length < reference.canonical_length


def summit_representative(u: CanonicalForm) -> CanonicalForm:
    """An element of the super summit set, reached by cycling then decycling."""
    improved = True
    while improved:
        improved = False
        seen: set[CanonicalForm] = set()
        cur = u
        while cur not in seen:  # cycling phase: raise the infimum
            seen.add(cur)
            nxt = cf_cycle(cur)
            if _better(nxt, u):
                u = nxt
                improved = True
                break
            cur = nxt
        seen = set()
        cur = u
        while cur not in seen:  # decycling phase: lower the supremum
            seen.add(cur)
            nxt = cf_decycle(cur)
            if _better(nxt, u):
                u = nxt
                improved = True
                break
            cur = nxt
    return u


def super_summit_set(b: BraidWord, limit: int = 10_000) -> list[CanonicalForm]:
    """The full super summit set of b, sorted deterministically.

    Raises ``LimitExceededError`` (with the partial set attached) if the set
    grows beyond ``limit``.
    """
    rep = summit_representative(normal_form(b))
    result = _sss_closure(rep, limit=limit)
    return sorted(result, key=CanonicalForm.key)


def _sss_closure(
    rep: CanonicalForm, limit: int, stop_at: CanonicalForm | None = None
) -> set[CanonicalForm] | bool:
    """BFS closure of the super summit set under permutation-braid conjugation.

    With ``stop_at`` set, returns True/False for early-exit membership
    testing instead of the full set.
    """
    perms = _all_perms(rep.strands)
    while True:
        target_inf, target_len = rep.infimum, rep.canonical_length
        if stop_at is not None and (
            stop_at.infimum != target_inf or stop_at.canonical_length != target_len
        ):
            return False
        if stop_at is not None and rep == stop_at:
            return True
        seen = {rep}
        frontier = [rep]
        restarted = False
        while frontier:
            cur = frontier.pop()
            for a in perms:
                c = cf_conjugate(cur, a)
                if c.infimum > target_inf or (
                    c.infimum == target_inf and c.canonical_length < target_len
                ):
                    # The representative was not summit after all; restart higher.
                    rep = summit_representative(c)
                    restarted = True
                    break
                if (
                    c.infimum == target_inf
                    and c.canonical_length == target_len
                    and c not in seen
                ):
                    if stop_at is not None and c == stop_at:
                        return True
                    seen.add(c)
                    frontier.append(c)
                    if len(seen) > limit:
                        raise LimitExceededError(
                            f"super summit set exceeds limit {limit}", partial=seen
                        )
            if restarted:
                break
        if not restarted:
            return False if stop_at is not None else seen


def are_conjugate(a: BraidWord, b: BraidWord, limit: int = 10_000) -> bool:
    """Conjugacy test via super summit sets, with cheap invariant fast-rejects."""
    if a.strands != b.strands:
        raise DomainError("conjugacy needs equal strand counts")
    if a.exponent_sum() != b.exponent_sum():
        return False
    if permutation(a).cycle_type() != permutation(b).cycle_type():
        return False
    rep_a = summit_representative(normal_form(a))
    rep_b = summit_representative(normal_form(b))
    if rep_a == rep_b:
        return True
    return bool(_sss_closure(rep_a, limit=limit, stop_at=rep_b))


# ----------------------------------------------------------------------
# The braid families under study
# ----------------------------------------------------------------------

def tmp(m: int, p: int) -> BraidWord:
    """The m-braid (s_1^2 s_2 s_3 ... s_{m-1})^p s_{m-1}^-2, freely reduced."""
    if m < 3:
        raise DomainError("the twist family needs m >= 3")
    if p < 1:
        raise DomainError("the twist family needs p >= 1")
    block = [1, 1] + list(range(2, m))
    word = block * p + [-(m - 1), -(m - 1)]
    return BraidWord(m, tuple(word)).free_reduce()


def forget_strand(b: BraidWord, s: int) -> BraidWord:
    """Delete the strand starting at position s and renumber the rest."""
    if not 1 <= s <= b.strands:
        raise DomainError(f"strand {s} out of range for B_{b.strands}")
    pos = s
    letters: list[int] = []
    for letter in b.letters:
        i = abs(letter)
        if pos == i:
            pos = i + 1
        elif pos == i + 1:
            pos = i
        elif i > pos:
            letters.append(letter - 1 if letter > 0 else letter + 1)
        else:
            letters.append(letter)
    return BraidWord(b.strands - 1, tuple(letters))


def full_twist(m: int) -> BraidWord:
    """The generator of the center of B_m, as (s_1 s_2 ... s_{m-1})^m."""
    if m < 2:
        raise DomainError("full twist needs m >= 2")
    return BraidWord(m, tuple(range(1, m)) * m)


def sigma_hk(k: int) -> BraidWord:
    """The odd-strand small-dilatation braid s_1 ... s_{2k-2} s_1 ... s_{2k-4}."""
    if k < 3:
        raise DomainError("this family needs k >= 3")
    letters = list(range(1, 2 * k - 1)) + list(range(1, 2 * k - 3))
    return BraidWord(2 * k - 1, tuple(letters))


def psi(n: int) -> BraidWord:
    """Venzke's small-dilatation n-braid family (n >= 5)."""
    if n == 6:
        return BraidWord(6, (5, 4, 3, 2, 1, 5, 4, 3, 5, 4))
    if n < 5:
        raise DomainError("this family needs n >= 5")
    if n % 2 == 1:
        power = 2
    elif n % 4 == 0:
        power = n // 2 + 1
    elif n % 8 == 2:
        power = (n + 2) // 4
    else:  # n = 6 mod 8
        power = (3 * n + 2) // 4
    descending = tuple(range(n - 1, 0, -1))
    return BraidWord(n, descending * power + (-1, -2))


def thm1_braid_b() -> BraidWord:
    """The exceptional 7-braid whose closure fibers with an 8-punctured fiber."""
    return BraidWord(7, (-1, -2, -3, -4, -5, -6, -1, -2, -3, -4, -1, -2, -3))


def braid_a_prime() -> BraidWord:
    """7-braid presenting the braided link of s_1 s_2^2 s_3 s_4 Theta_5^-1."""
    theta5_inv = [-4, -3, -2, -1] * 5
    letters = (
        [-6, 1, 2, 2, 3, 4]
        + theta5_inv
        + [-5, -4, -3, -2, -1, -1, -2, -3, -4, -5]
    )
    return BraidWord(7, tuple(letters))


def braid_b_prime() -> BraidWord:
    """7-braid obtained from the closure of thm1_braid_b by axis deformation."""
    letters = (
        [-6, -1, -2, -3, -4, -1, -2, -3, -1, -2]
        + [-5] * 4
        + [-4, -3, -5, -4, -3, -2, -1, -1, -2, -3, -4, -5]
    )
    return BraidWord(7, tuple(letters))
