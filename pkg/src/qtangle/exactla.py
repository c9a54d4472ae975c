"""Sparse multivariate polynomials over Q and exact Fraction linear algebra.

Shared plumbing for the commutative-algebra checks: polynomial rings with
rational coefficients, exact long division, and row reduction used to cut
out quotient rings and compute ranks degreewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["Poly", "rref", "rank", "nullspace"]


@dataclass(frozen=True)
class Poly:
    """Polynomial in nvars commuting variables with Fraction coefficients.

    terms maps exponent tuples to nonzero coefficients, stored sorted.
    """

    nvars: int
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @staticmethod
    def make(nvars: int, terms) -> "Poly":
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        clean = []
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps} for nvars={nvars}")
            c = Fraction(c)
            if c:
                clean.append((exps, c))
        clean.sort(key=lambda t: t[0])
        return Poly(nvars, tuple(clean))

    @staticmethod
    def zero(nvars: int) -> "Poly":
        return Poly(nvars, ())

    @staticmethod
    def constant(nvars: int, c) -> "Poly":
        return Poly.make(nvars, {(0,) * nvars: Fraction(c)})

    @staticmethod
    def variable(i: int, nvars: int) -> "Poly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return Poly.make(nvars, {exps: Fraction(1)})

    @staticmethod
    def monomial(nvars: int, exps, c=1) -> "Poly":
        return Poly.make(nvars, {tuple(exps): Fraction(c)})

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        d = self.as_dict()
        for exps, c in other.terms:
            d[exps] = d.get(exps, Fraction(0)) + c
        return Poly.make(self.nvars, d)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts")
        d: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, Fraction(0)) + c1 * c2
        return Poly.make(self.nvars, d)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, tuple((e, s * c) for e, s in self.terms)) if c \
            else Poly.zero(self.nvars)

    def map_exponents(self, fn) -> "Poly":
        """Apply fn(exps) -> new exponent tuple termwise (variable relabelling)."""
        d: dict[tuple[int, ...], Fraction] = {}
        nv = None
        for exps, c in self.terms:
            new = tuple(fn(exps))
            nv = len(new)
            d[new] = d.get(new, Fraction(0)) + c
        if nv is None:
            raise ValueError("cannot infer variable count from the zero polynomial")
        return Poly.make(nv, d)

    def weighted_degree(self, weights: tuple[int, ...]) -> int | None:
        """Common weighted degree of all terms, or raise if inhomogeneous."""
        if not self.terms:
            return None
        degs = {sum(w * e for w, e in zip(weights, exps)) for exps, _ in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous for these weights")
        return degs.pop()

    def homogeneous_part(self, weights: tuple[int, ...], d: int) -> "Poly":
        return Poly(self.nvars, tuple(
            (e, c) for e, c in self.terms
            if sum(w * x for w, x in zip(weights, e)) == d))

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact division; raise ValueError if the remainder is nonzero."""
        if divisor.is_zero():
            raise ValueError("division by zero polynomial")
        lead_e, lead_c = max(divisor.terms, key=lambda t: t[0])
        rem = self
        quot: dict[tuple[int, ...], Fraction] = {}
        while not rem.is_zero():
            re, rc = max(rem.terms, key=lambda t: t[0])
            qe = tuple(a - b for a, b in zip(re, lead_e))
            if any(e < 0 for e in qe):
                raise ValueError("division not exact")
            qc = rc / lead_c
            quot[qe] = quot.get(qe, Fraction(0)) + qc
            rem = rem - divisor * Poly.monomial(self.nvars, qe, qc)
        return Poly.make(self.nvars, quot)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms:
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(exps) if e)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rref rows, pivot column indices)."""
    m = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel of the matrix (rows are matrix rows)."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis
