"""Multivariate integer Laurent polynomials and the Teichmuller polynomial.

The Teichmuller polynomial of the fibered face is not hardcoded: it is
derived as det(uI - M) for an explicit product M of three 2x2 Laurent
matrices, then carried to the homology basis by a monomial change of
variables.  Specializing the variables to powers of a single variable t
turns each fibered class into an ordinary integer polynomial whose largest
root is the dilatation of that class.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Mapping

from .errors import DomainError
from .intpoly import IntPolynomial

ExponentVector = tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class MultivarLaurent:
    """Integer Laurent polynomial in an ordered tuple of named variables.

    ``terms`` maps exponent vectors (one integer per variable, negative
    allowed) to nonzero integer coefficients.
    """

    variables: tuple[str, ...]
    terms: Mapping[ExponentVector, int]

    def __post_init__(self):
        object.__setattr__(self, "terms", dict(self.terms))
        for exps, c in self.terms.items():
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length mismatch")
            if c == 0:
                raise ValueError("zero coefficient stored")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(variables: Iterable[str]) -> "MultivarLaurent":
        return MultivarLaurent(tuple(variables), {})

    @staticmethod
    def constant(variables: Iterable[str], c: int) -> "MultivarLaurent":
        variables = tuple(variables)
        if c == 0:
            return MultivarLaurent(variables, {})
        return MultivarLaurent(variables, {(0,) * len(variables): c})

    @staticmethod
    def monomial(
        variables: Iterable[str], exps: Iterable[int], coeff: int = 1
    ) -> "MultivarLaurent":
        variables = tuple(variables)
        if coeff == 0:
            return MultivarLaurent(variables, {})
        return MultivarLaurent(variables, {tuple(exps): coeff})

    @staticmethod
    def variable(variables: Iterable[str], name: str, power: int = 1) -> "MultivarLaurent":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return MultivarLaurent.monomial(variables, exps)

    # -- ring operations ---------------------------------------------------

    def _check_context(self, other: "MultivarLaurent") -> None:
        if self.variables != other.variables:
            raise ValueError("mixed variable contexts")

    def __add__(self, other: "MultivarLaurent") -> "MultivarLaurent":
        self._check_context(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultivarLaurent(self.variables, out)

    def __neg__(self) -> "MultivarLaurent":
        return MultivarLaurent(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultivarLaurent") -> "MultivarLaurent":
        return self + (-other)

    def __mul__(self, other: "MultivarLaurent") -> "MultivarLaurent":
        self._check_context(other)
        out: dict[ExponentVector, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultivarLaurent(self.variables, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultivarLaurent):
            return NotImplemented
        return self.variables == other.variables and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- substitution ------------------------------------------------------

    def substitute_monomials(
        self,
        images: Mapping[str, "MultivarLaurent"],
        target_variables: Iterable[str],
    ) -> "MultivarLaurent":
        """Apply the monomial substitution var -> images[var].

        Every image must be a single monomial with coefficient +1 or -1 in
        the target variable context.
        """
        target_variables = tuple(target_variables)
        decoded: dict[str, tuple[int, ExponentVector]] = {}
        for name in self.variables:
            img = images.get(name)
            if img is None:
                raise DomainError(f"no image provided for variable {name!r}")
            if img.variables != target_variables:
                raise DomainError("image lives in the wrong variable context")
            if len(img.terms) != 1:
                raise DomainError(f"image of {name!r} is not a monomial")
            (exps, coeff), = img.terms.items()
            if coeff not in (1, -1):
                raise DomainError(f"image of {name!r} is not a unit monomial")
            decoded[name] = (coeff, exps)

        out: dict[ExponentVector, int] = {}
        for exps, c in self.terms.items():
            new_exps = [0] * len(target_variables)
            sign = 1
            for name, power in zip(self.variables, exps):
                coeff, img_exps = decoded[name]
                if power % 2 and coeff < 0:
                    sign = -sign
                for k, e in enumerate(img_exps):
                    new_exps[k] += power * e
            key = tuple(new_exps)
            s = out.get(key, 0) + sign * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MultivarLaurent(target_variables, out)

    # -- printing ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors) if factors else str(abs(c))
            if factors and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            parts.append(sign + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultivarLaurent({str(self)!r})"


@dataclasses.dataclass(frozen=True)
class LaurentMatrix2:
    """A 2x2 matrix of Laurent polynomials over one shared variable context."""

    entries: tuple[
        tuple[MultivarLaurent, MultivarLaurent],
        tuple[MultivarLaurent, MultivarLaurent],
    ]

    def __post_init__(self):
        ctx = self.entries[0][0].variables
        for row in self.entries:
            for entry in row:
                if entry.variables != ctx:
                    raise ValueError("matrix entries in mixed variable contexts")

    @property
    def variables(self) -> tuple[str, ...]:
        return self.entries[0][0].variables

    def __matmul__(self, other: "LaurentMatrix2") -> "LaurentMatrix2":
        a, b = self.entries
        c, d = other.entries
        return LaurentMatrix2((
            (a[0] * c[0] + a[1] * d[0], a[0] * c[1] + a[1] * d[1]),
            (b[0] * c[0] + b[1] * d[0], b[0] * c[1] + b[1] * d[1]),
        ))

    def det(self) -> MultivarLaurent:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def char_poly(self, u: MultivarLaurent) -> MultivarLaurent:
        """det(uI - M) for a scalar Laurent polynomial u."""
        (a, b), (c, d) = self.entries
        return (u - a) * (u - d) - b * c


TEICH_VARIABLES = ("t1", "t2", "u")
HOMOLOGY_VARIABLES = ("s1", "s2", "s3")

# Sign convention for canonical representatives: the term that dominates
# after substituting (s1, s2, s3) -> (t^2, t^1, t^0) gets a positive sign.
_SIGN_WEIGHTS = (2, 1, 0)


def _twist_matrices() -> tuple[LaurentMatrix2, LaurentMatrix2, LaurentMatrix2]:
    """The three 2x2 transition matrices whose product drives the derivation."""

    def mono(expvec) -> MultivarLaurent:
        return MultivarLaurent.monomial(TEICH_VARIABLES, expvec)

    one = MultivarLaurent.constant(TEICH_VARIABLES, 1)
    zero = MultivarLaurent.zero(TEICH_VARIABLES)
    t1 = mono((1, 0, 0))
    t1_inv = mono((-1, 0, 0))
    t2_inv = mono((0, -1, 0))

    sigma1_t1 = LaurentMatrix2(((t1, t1), (zero, one)))
    sigma2inv_t2 = LaurentMatrix2(((one, zero), (t2_inv, t2_inv)))
    sigma2inv_t1 = LaurentMatrix2(((one, zero), (t1_inv, t1_inv)))
    return sigma2inv_t2, sigma1_t1, sigma2inv_t1


def derive_teichmuller() -> MultivarLaurent:
    """The Teichmuller polynomial P(t1, t2, u) as det(uI - M).

    M is the product of the three transition matrices of the reference
    fibration, taken in order.
    """
    m_a, m_b, m_c = _twist_matrices()
    M = m_a @ m_b @ m_c
    u = MultivarLaurent.variable(TEICH_VARIABLES, "u")
    return M.char_poly(u)


def _signed_unit_exponents(P: MultivarLaurent) -> tuple[ExponentVector, int]:
    """Exponent shift and sign that normalize P to its canonical representative."""
    shift = tuple(min(e[k] for e in P.terms) for k in range(len(P.variables)))
    weights = (_SIGN_WEIGHTS + (0,) * len(P.variables))[: len(P.variables)]

    def rank(item):
        exps, _ = item
        return (sum(w * e for w, e in zip(weights, exps)), exps)

    _, lead_coeff = max(P.terms.items(), key=rank)
    sign = 1 if lead_coeff > 0 else -1
    return shift, sign


@dataclasses.dataclass(frozen=True)
class ChangeBasisResult:
    """A canonical representative together with the unit that was divided out.

    ``poly`` has no negative exponents and zero minimum exponent in every
    variable; ``unit`` is the signed monomial with substituted == unit * poly.
    """

    poly: MultivarLaurent
    unit: MultivarLaurent


def change_basis(
    P: MultivarLaurent, substitution: Mapping[str, MultivarLaurent]
) -> ChangeBasisResult:
    """Substitute monomials for variables and normalize by a monomial unit."""
    targets = None
    for img in substitution.values():
        targets = img.variables
        break
    if targets is None:
        raise DomainError("empty substitution")
    substituted = P.substitute_monomials(substitution, targets)
    if substituted.is_zero():
        return ChangeBasisResult(substituted, MultivarLaurent.constant(targets, 1))
    shift, sign = _signed_unit_exponents(substituted)
    normalized = MultivarLaurent(
        targets,
        {tuple(a - b for a, b in zip(e, shift)): sign * c for e, c in substituted.terms.items()},
    )
    unit = MultivarLaurent.monomial(targets, shift, sign)
    return ChangeBasisResult(normalized, unit)


@functools.lru_cache(maxsize=1)
def teichmuller_homology_basis() -> MultivarLaurent:
    """P written in the (s1, s2, s3) homology basis, canonically normalized."""
    P = derive_teichmuller()

    def mono(expvec) -> MultivarLaurent:
        return MultivarLaurent.monomial(HOMOLOGY_VARIABLES, expvec)

    substitution = {
        "t1": mono((0, 0, 1)),       # t1 = s3
        "t2": mono((1, -1, -1)),     # t2 = s1 / (s2 s3)
        "u": mono((0, 1, 0)),        # u = s2
    }
    return change_basis(P, substitution).poly


def substitute_powers(P: MultivarLaurent, exponents: tuple[int, ...]) -> dict[int, int]:
    """Raw substitution var_k -> t^(exponents[k]); returns {degree: coefficient}."""
    if len(exponents) != len(P.variables):
        raise DomainError("exponent tuple length mismatch")
    out: dict[int, int] = {}
    for exps, c in P.terms.items():
        d = sum(e * x for e, x in zip(exps, exponents))
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def specialize(P: MultivarLaurent, exponents: tuple[int, ...]) -> IntPolynomial:
    """Substitute var_k -> t^(exponents[k]) and divide by the unit t^(last exponent).

    For classes in the open fibered cone the unit exponent is exactly the
    minimal degree, so the result is an honest integer polynomial; anything
    producing a negative power is rejected.
    """
    degrees = substitute_powers(P, tuple(exponents))
    unit = exponents[-1]
    if degrees and min(degrees) - unit < 0:
        raise DomainError(
            "specialization produces negative powers after unit division; "
            "the exponent vector lies outside the open cone"
        )
    coeffs = [0] * (max(d - unit for d in degrees) + 1 if degrees else 0)
    for d, c in degrees.items():
        coeffs[d - unit] = c
    return IntPolynomial.from_coeffs(coeffs)
