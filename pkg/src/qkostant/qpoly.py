"""Integer polynomials in q graded by the number of positive roots used.

A graded partition value is stored as its coefficient vector (c_0, c_1, ...):
c_i counts the ways to reach the target weight using exactly i positive
roots.  The same class carries multiplicity polynomials, whose intermediate
signed sums may hold negative coefficients; only the final result is
required to be nonnegative.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

# The partition-counting kernels pack a coefficient vector into a single big
# integer, one coefficient per limb, because bigint shift-and-add is far
# faster in CPython than per-coefficient list arithmetic.  Every count in
# this library stays many orders of magnitude below 2**128, so the packing
# is exact.
LIMB_BITS = 128
LIMB_MASK = (1 << LIMB_BITS) - 1


class QPolynomial:
    """Immutable polynomial in q with integer coefficients.

    Trailing zero coefficients are trimmed on construction; the zero
    polynomial is the empty coefficient vector.

    >>> QPolynomial([0, 0, 2, 1, 1]).text()
    '2q^2 + q^3 + q^4'
    >>> QPolynomial([0, 1, 0, 0, 0, 1]).compact_text()
    'q + q^5'
    >>> QPolynomial([1]).at_one()
    1
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QPolynomial is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "QPolynomial":
        return cls((0,) * power + (coeff,))

    @classmethod
    def from_packed(cls, packed: int) -> "QPolynomial":
        """Decode a limb-packed nonnegative coefficient vector."""
        if packed < 0:
            raise ValueError("packed polynomials are nonnegative")
        cs = []
        while packed:
            cs.append(packed & LIMB_MASK)
            packed >>= LIMB_BITS
        return cls(cs)

    def pack(self) -> int:
        """Inverse of :meth:`from_packed`; requires nonnegative coefficients."""
        n = 0
        for c in reversed(self.coeffs):
            if c < 0:
                raise ValueError("cannot pack negative coefficients")
            n = (n << LIMB_BITS) | c
        return n

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def at_one(self) -> int:
        """Evaluate at q = 1 (for a partition value: the plain count)."""
        return sum(self.coeffs)

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (power, coefficient) for nonzero terms, ascending."""
        for p, c in enumerate(self.coeffs):
            if c:
                yield p, c

    def exponent_multiset(self) -> tuple[int, ...]:
        """Powers repeated with multiplicity, e.g. q + 2q^3 -> (1, 3, 3)."""
        out: list[int] = []
        for p, c in self.terms():
            if c < 0:
                raise ValueError("exponent multiset needs nonnegative coefficients")
            out.extend([p] * c)
        return tuple(out)

    def is_multiplicity_free(self) -> bool:
        return all(c in (0, 1) for c in self.coeffs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return QPolynomial(cs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        cs = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            cs[i] -= c
        return QPolynomial(cs)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self.coeffs)

    def shifted(self, k: int) -> "QPolynomial":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)!r})"

    # -- rendering -----------------------------------------------------------

    def _render(self, term: Callable[[int, int], str]) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, c in self.terms():
            body = term(abs(c), p)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def text(self) -> str:
        """Plain form with explicit first power: "q^1 + 2q^2 + q^3"."""

        def term(c: int, p: int) -> str:
            if p == 0:
                return str(c)
            head = "" if c == 1 else str(c)
            return f"{head}q^{p}"

        return self._render(term)

    def compact_text(self) -> str:
        """Plain form writing q for q^1: "q + q^5 + q^11"."""

        def term(c: int, p: int) -> str:
            if p == 0:
                return str(c)
            head = "" if c == 1 else str(c)
            return f"{head}q" if p == 1 else f"{head}q^{p}"

        return self._render(term)

    def latex(self) -> str:
        """LaTeX cell form with braced exponents: "q^{1} + 2q^{2}"."""

        def term(c: int, p: int) -> str:
            if p == 0:
                return str(c)
            head = "" if c == 1 else str(c)
            return f"{head}q^{{{p}}}"

        return self._render(term)

    def compact_latex(self) -> str:
        """LaTeX summary form: "q + q^5 + q^{11}"."""

        def term(c: int, p: int) -> str:
            if p == 0:
                return str(c)
            head = "" if c == 1 else str(c)
            if p == 1:
                return f"{head}q"
            return f"{head}q^{p}" if p < 10 else f"{head}q^{{{p}}}"

        return self._render(term)

    def __str__(self) -> str:
        return self.text()
