"""Exact truncated Laurent series over Q, quantum integers, bigraded polynomials.

A LaurentSeries stores exact rational coefficients together with an explicit
validity window: coefficients of q^d are guaranteed correct for all d up to
``valid_to`` (inclusive).  ``valid_to is None`` means the element is an exact
Laurent polynomial, correct in every degree.  Arithmetic never widens a
window, so every reported coefficient is trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "DEFAULT_PRECISION",
    "LaurentSeries",
    "BigradedPolynomial",
    "ls_add",
    "ls_mul",
    "ls_invert",
    "ls_eq_upto",
    "quantum_integer",
    "quantum_factorial",
    "quantum_binomial",
    "bigraded_expand_homofunknot",
]

# Number of coefficients produced by series inversion unless told otherwise.
DEFAULT_PRECISION = 64

_ZERO = Fraction(0)


def _min_valid(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class LaurentSeries:
    """Truncated element of Q((q)).

    ``coeffs[i]`` is the coefficient of ``q**(min_deg + i)``.  The zero series
    is the canonical representative with an empty coefficient tuple.
    """

    min_deg: int
    coeffs: tuple[Fraction, ...]
    valid_to: int | None = None

    @staticmethod
    def make(min_deg: int, coeffs: Iterable, valid_to: int | None = None) -> "LaurentSeries":
        # avoid re-wrapping exact Fractions; this sits on the hottest path
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        # clamp stored data to the validity window
        if valid_to is not None:
            keep = valid_to - min_deg + 1
            cs = cs[:max(keep, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            min_deg += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            min_deg = 0
        return LaurentSeries(min_deg, tuple(cs), valid_to)

    @staticmethod
    def zero(valid_to: int | None = None) -> "LaurentSeries":
        return LaurentSeries(0, (), valid_to)

    @staticmethod
    def one() -> "LaurentSeries":
        return LaurentSeries(0, (Fraction(1),))

    @staticmethod
    def monomial(deg: int, coeff=1) -> "LaurentSeries":
        return LaurentSeries.make(deg, [Fraction(coeff)])

    @staticmethod
    def from_dict(d: Mapping[int, Fraction], valid_to: int | None = None) -> "LaurentSeries":
        if not d:
            return LaurentSeries.zero(valid_to)
        lo = min(d)
        hi = max(d)
        return LaurentSeries.make(lo, [d.get(i, _ZERO) for i in range(lo, hi + 1)], valid_to)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, deg: int) -> Fraction:
        i = deg - self.min_deg
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def top_deg(self) -> int | None:
        """Highest stored nonzero degree, or None for the zero series."""
        if not self.coeffs:
            return None
        return self.min_deg + len(self.coeffs) - 1

    def support(self) -> dict[int, Fraction]:
        return {self.min_deg + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def is_polynomial(self) -> bool:
        return self.valid_to is None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        v = _min_valid(self.valid_to, other.valid_to)
        d = dict(self.support())
        for k, c in other.support().items():
            d[k] = d.get(k, Fraction(0)) + c
        return LaurentSeries.from_dict(d, v)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_deg, tuple(-c for c in self.coeffs), self.valid_to)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        if self.is_zero() or other.is_zero():
            v = None
            if self.valid_to is not None:
                v = _min_valid(v, self.valid_to + (other.min_deg if not other.is_zero() else 0))
            if other.valid_to is not None:
                v = _min_valid(v, other.valid_to + (self.min_deg if not self.is_zero() else 0))
            return LaurentSeries.zero(v)
        v = None
        if self.valid_to is not None:
            v = _min_valid(v, self.valid_to + other.min_deg)
        if other.valid_to is not None:
            v = _min_valid(v, other.valid_to + self.min_deg)
        out: dict[int, Fraction] = {}
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            da = self.min_deg + i
            if v is not None and da + other.min_deg > v:
                break
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                dd = da + other.min_deg + j
                if v is not None and dd > v:
                    break
                out[dd] = out.get(dd, _ZERO) + a * b
        return LaurentSeries.from_dict(out, v)

    def scale(self, c) -> "LaurentSeries":
        c = Fraction(c)
        if c == 0:
            return LaurentSeries.zero(self.valid_to)
        return LaurentSeries(self.min_deg, tuple(c * x for x in self.coeffs), self.valid_to)

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by q**n."""
        if self.is_zero():
            return LaurentSeries.zero(None if self.valid_to is None else self.valid_to + n)
        return LaurentSeries(self.min_deg + n, self.coeffs,
                             None if self.valid_to is None else self.valid_to + n)

    def invert(self, precision: int | None = None) -> "LaurentSeries":
        if self.is_zero():
            raise ZeroDivisionError("division by zero series")
        if precision is None:
            precision = DEFAULT_PRECISION
        m = self.min_deg
        # window of the result
        if self.valid_to is None:
            v = -m + precision - 1
        else:
            v = min(self.valid_to - 2 * m, -m + precision - 1)
        n_terms = v + m + 1  # coefficients of the unit part to produce
        a = list(self.coeffs)
        inv0 = 1 / a[0]
        b = [Fraction(0)] * n_terms
        b[0] = inv0
        for i in range(1, n_terms):
            s = Fraction(0)
            for j in range(1, min(i, len(a) - 1) + 1):
                s += a[j] * b[i - j]
            b[i] = -inv0 * s
        return LaurentSeries.make(-m, b, v)

    def bar(self) -> "LaurentSeries":
        """Apply q -> q^{-1}.  Only meaningful for exact polynomials."""
        if self.valid_to is not None:
            raise ValueError("bar involution needs an exact polynomial")
        d = {-k: c for k, c in self.support().items()}
        return LaurentSeries.from_dict(d, None)

    def truncate(self, valid_to: int) -> "LaurentSeries":
        v = _min_valid(self.valid_to, valid_to)
        return LaurentSeries.make(self.min_deg, self.coeffs, v)

    def eq_upto(self, other: "LaurentSeries") -> bool:
        """Equality on the common validity window."""
        v = _min_valid(self.valid_to, other.valid_to)
        sa, sb = self.support(), other.support()
        for k in set(sa) | set(sb):
            if v is not None and k > v:
                continue
            if sa.get(k, Fraction(0)) != sb.get(k, Fraction(0)):
                return False
        return True

    def eval_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- presentation -----------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            body = "0"
        else:
            parts = []
            for k, c in sorted(self.support().items()):
                if k == 0:
                    term = str(c)
                else:
                    qs = "q" if k == 1 else f"q^{k}"
                    if c == 1:
                        term = qs
                    elif c == -1:
                        term = "-" + qs
                    else:
                        term = f"{c}*{qs}"
                parts.append(term)
            body = " + ".join(parts).replace("+ -", "- ")
        if self.valid_to is not None:
            body += f" + O(q^{self.valid_to + 1})"
        return body

    def to_json(self) -> dict:
        return {
            "min_deg": self.min_deg,
            "valid_to": self.valid_to,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(d: dict) -> "LaurentSeries":
        return LaurentSeries.make(d["min_deg"], [Fraction(c) for c in d["coeffs"]], d["valid_to"])


# -- module-level operation aliases (stable public names) ------------------

def ls_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def ls_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def ls_invert(a: LaurentSeries, precision: int | None = None) -> LaurentSeries:
    return a.invert(precision)


def ls_eq_upto(a: LaurentSeries, b: LaurentSeries) -> bool:
    return a.eq_upto(b)


# -- quantum combinatorics --------------------------------------------------

def quantum_integer(k: int) -> LaurentSeries:
    """[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}."""
    if k < 0:
        raise ValueError("quantum_integer needs k >= 0")
    if k == 0:
        return LaurentSeries.zero()
    return LaurentSeries.make(-(k - 1), [1 if i % 2 == 0 else 0 for i in range(2 * k - 1)])


def quantum_factorial(k: int) -> LaurentSeries:
    out = LaurentSeries.one()
    for i in range(1, k + 1):
        out = out * quantum_integer(i)
    return out


def quantum_binomial(n: int, k: int) -> LaurentSeries:
    """[n choose k] = [n]! / ([k]! [n-k]!), an exact Laurent polynomial."""
    if not 0 <= k <= n:
        raise ValueError("quantum_binomial needs 0 <= k <= n")
    num = quantum_factorial(n)
    den = quantum_factorial(k) * quantum_factorial(n - k)
    # exact division of Laurent polynomials
    q, r = _poly_divmod(num, den)
    if not r.is_zero():
        raise ArithmeticError("quantum binomial division was not exact")
    return q


def _poly_divmod(a: LaurentSeries, b: LaurentSeries) -> tuple[LaurentSeries, LaurentSeries]:
    """Divide exact Laurent polynomials, dividing off the top degree."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    ra = dict(a.support())
    sb = b.support()
    tb = max(sb) if sb else 0
    lead = sb[tb]
    quo: dict[int, Fraction] = {}
    while ra:
        ta = max(ra)
        if not ra[ta]:
            del ra[ta]
            continue
        c = ra[ta] / lead
        d = ta - tb
        quo[d] = quo.get(d, Fraction(0)) + c
        for k, v in sb.items():
            nk = k + d
            ra[nk] = ra.get(nk, Fraction(0)) - c * v
            if ra[nk] == 0:
                del ra[nk]
        if ta in ra and ra[ta] == 0:
            del ra[ta]
    return LaurentSeries.from_dict(quo), LaurentSeries.zero()


# -- bigraded Poincare polynomials ------------------------------------------

@dataclass(frozen=True)
class BigradedPolynomial:
    """Finite Q-linear combination of monomials t^h q^d."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @staticmethod
    def make(d: Mapping[tuple[int, int], Fraction | int]) -> "BigradedPolynomial":
        items = tuple(sorted(((hq, Fraction(c)) for hq, c in d.items() if c != 0)))
        return BigradedPolynomial(items)

    def as_dict(self) -> dict[tuple[int, int], Fraction]:
        return dict(self.terms)

    def __add__(self, other: "BigradedPolynomial") -> "BigradedPolynomial":
        d = self.as_dict()
        for hq, c in other.terms:
            d[hq] = d.get(hq, Fraction(0)) + c
        return BigradedPolynomial.make(d)

    def __mul__(self, other: "BigradedPolynomial") -> "BigradedPolynomial":
        d: dict[tuple[int, int], Fraction] = {}
        for (h1, q1), c1 in self.terms:
            for (h2, q2), c2 in other.terms:
                k = (h1 + h2, q1 + q2)
                d[k] = d.get(k, Fraction(0)) + c1 * c2
        return BigradedPolynomial.make(d)

    def eval_t(self, t: Fraction | int) -> LaurentSeries:
        """Substitute a rational number for t, leaving a polynomial in q."""
        d: dict[int, Fraction] = {}
        for (h, qd), c in self.terms:
            if h < 0 and t == 0:
                raise ZeroDivisionError("t = 0 with negative homological degree")
            d[qd] = d.get(qd, Fraction(0)) + c * Fraction(t) ** h
        return LaurentSeries.from_dict(d)

    def to_json(self) -> list[dict]:
        return [{"h": h, "q": qd, "c": str(c)} for (h, qd), c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (h, qd), c in sorted(self.terms, key=lambda x: (-x[0][0], x[0][1])):
            mono = []
            if qd != 0:
                mono.append("q" if qd == 1 else f"q^{qd}")
            if h != 0:
                mono.append("t" if h == 1 else f"t^{h}")
            ms = "*".join(mono) if mono else "1"
            if c == 1 and mono:
                parts.append(ms)
            elif c == -1 and mono:
                parts.append(f"-{ms}")
            elif mono:
                parts.append(f"{c}*{ms}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


def bigraded_expand_homofunknot(h_min: int) -> BigradedPolynomial:
    """Expansion of q^2 t^2 + (1 + q^-2) + q^-6 t^-2 (1 + t^-1) / (1 - t^-2 q^-4).

    The geometric tail is expanded down to homological degrees >= h_min.
    """
    if h_min > 0:
        raise ValueError("h_min must be <= 0")
    d: dict[tuple[int, int], Fraction] = {
        (2, 2): Fraction(1),
        (0, 0): Fraction(1),
        (0, -2): Fraction(1),
    }
    j = 0
    while True:
        h_even = -2 - 2 * j
        if h_even < h_min and h_even - 1 < h_min:
            break
        qd = -6 - 4 * j
        if h_even >= h_min:
            d[(h_even, qd)] = d.get((h_even, qd), Fraction(0)) + 1
        if h_even - 1 >= h_min:
            d[(h_even - 1, qd)] = d.get((h_even - 1, qd), Fraction(0)) + 1
        j += 1
    return BigradedPolynomial.make(d)
