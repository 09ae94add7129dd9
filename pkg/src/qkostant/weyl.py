"""Weyl-group elements acting on simple-root coordinates.

An element is an integer matrix M with (M w)_k = sum_j M[k][j] w_j; its
columns are the images of the simple roots, so every column is the
coefficient vector of a root (all entries of one sign).  Right
multiplication by a simple reflection s_i is a cheap column update, which is
what the breadth-first enumerations below exploit.

Canonical reduced words are recovered from the matrix by repeatedly
stripping the smallest right descent (an i with M alpha_i negative); the
word is read off in reverse order of stripping.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional

from .qpoly import QPolynomial
from .rootsys import IntVec, Matrix, RootSystem, Weight

DEFAULT_MAX_GROUP_ORDER = 1_000_000


class OrderExceededError(RuntimeError):
    """Raised when a full group enumeration would exceed the allowed order."""


@lru_cache(maxsize=None)
def _cartan_nonzeros(cartan: Matrix) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per row i, the pairs (j, a_ij) with a_ij != 0 (diagonal included)."""
    return tuple(
        tuple((j, a) for j, a in enumerate(row) if a) for row in cartan
    )


def _identity(rank: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))


def _rmul_simple(cartan: Matrix, m: Matrix, i: int) -> Matrix:
    """Matrix of m * s_{i+1}: column j becomes col_j - a_ij * col_i."""
    nz = _cartan_nonzeros(cartan)[i]
    rows = [list(row) for row in m]
    for k, row in enumerate(m):
        ci = row[i]
        if ci:
            rk = rows[k]
            for j, a in nz:
                rk[j] -= a * ci
    return tuple(tuple(row) for row in rows)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _column_is_negative(m: Matrix, i: int) -> bool:
    # Columns of a Weyl matrix are roots, hence all of one sign.
    return any(row[i] < 0 for row in m)


def canonical_word(cartan: Matrix, m: Matrix) -> tuple[int, ...]:
    """Reduced word by greedy smallest-right-descent stripping (1-based)."""
    stripped: list[int] = []
    r = len(cartan)
    while True:
        for i in range(r):
            if _column_is_negative(m, i):
                stripped.append(i + 1)
                m = _rmul_simple(cartan, m, i)
                break
        else:
            break
    if m != _identity(r):
        raise ValueError("matrix is not a Weyl-group element for this Cartan matrix")
    return tuple(reversed(stripped))


def word_str(word: tuple[int, ...]) -> str:
    """Render a reduced word as "s_3s_4s_3s_1"; the identity is "1"."""
    return "".join(f"s_{i}" for i in word) if word else "1"


@dataclass(frozen=True)
class WeylElement:
    """A group element: its matrix, a reduced word for it, and the Cartan
    matrix it lives over (needed to compose and to recover words)."""

    cartan: Matrix
    matrix: Matrix
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, w: Weight) -> Weight:
        return apply(self, w)

    def __str__(self) -> str:
        return word_str(self.word)

    def __repr__(self) -> str:
        return f"WeylElement({word_str(self.word)}, length={self.length})"


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs.cartan, _identity(rs.rank), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """The reflection s_i, 1 <= i <= rank."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"reflection index {i} out of range 1..{rs.rank}")
    m = _rmul_simple(rs.cartan, _identity(rs.rank), i - 1)
    return WeylElement(rs.cartan, m, (i,))


def apply(e: WeylElement, w: Weight) -> Weight:
    """Matrix action of ``e`` on a weight, exact over the rationals."""
    if len(w) != e.rank:
        raise ValueError(f"rank mismatch: element {e.rank}, weight {len(w)}")
    return Weight(
        sum((row[j] * w[j] for j in range(e.rank)), Fraction(0)) for row in e.matrix
    )


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """Product a*b with the canonical reduced word recomputed from scratch."""
    if a.cartan != b.cartan:
        raise ValueError("cannot compose elements over different Cartan matrices")
    m = _matmul(a.matrix, b.matrix)
    return WeylElement(a.cartan, m, canonical_word(a.cartan, m))


def length_by_negative_roots(rs: RootSystem, e: WeylElement) -> int:
    """Coxeter length as the number of positive roots sent negative."""
    count = 0
    for v in rs.root_vectors:
        img = [sum(row[j] * v[j] for j in range(rs.rank)) for row in e.matrix]
        if any(x < 0 for x in img):
            count += 1
    return count


def determinant(m: Matrix) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    n = len(m)
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def enumerate_group(
    rs: RootSystem, max_order: int = DEFAULT_MAX_GROUP_ORDER
) -> list[WeylElement]:
    """The full Weyl group by breadth-first search over right multiplication.

    Elements come out in length order (BFS depth equals Coxeter length) and
    carry their discovery word, which is always reduced.  Refuses to start
    when the known group order exceeds ``max_order``.
    """
    order = rs.weyl_order
    if order > max_order:
        raise OrderExceededError(
            f"|W({rs.lie_type})| = {order} exceeds max_order = {max_order}"
        )
    cartan = rs.cartan
    ident = _identity(rs.rank)
    elements = [WeylElement(cartan, ident, ())]
    seen = {ident}
    frontier: list[tuple[Matrix, tuple[int, ...]]] = [(ident, ())]
    while frontier:
        nxt: list[tuple[Matrix, tuple[int, ...]]] = []
        for m, w in frontier:
            for i in range(rs.rank):
                m2 = _rmul_simple(cartan, m, i)
                if m2 not in seen:
                    seen.add(m2)
                    w2 = w + (i + 1,)
                    nxt.append((m2, w2))
                    elements.append(WeylElement(cartan, m2, w2))
        frontier = nxt
    if len(elements) != order:
        raise AssertionError(
            f"BFS found {len(elements)} elements of W({rs.lie_type}), expected {order}"
        )
    return elements


def group_order_bfs(rs: RootSystem, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> int:
    """Count the group by BFS without materializing elements.

    Matrix entries are packed into bytes keys (they are root coefficients,
    so they fit in [-16, 239] with room to spare), which keeps the visited
    set small enough for the larger groups.
    """
    order = rs.weyl_order
    if order > max_order:
        raise OrderExceededError(
            f"|W({rs.lie_type})| = {order} exceeds max_order = {max_order}"
        )
    cartan = rs.cartan
    ident = _identity(rs.rank)

    def key(m: Matrix) -> bytes:
        return bytes(x + 16 for row in m for x in row)

    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(rs.rank):
                m2 = _rmul_simple(cartan, m, i)
                k2 = key(m2)
                if k2 not in seen:
                    seen.add(k2)
                    nxt.append(m2)
        frontier = nxt
    return len(seen)


@dataclass(frozen=True)
class AlternationRecord:
    """One contributing Weyl element: sigma, xi = sigma(lam+rho)-(rho+mu),
    the sign (-1)^length, and (once filled) the graded partition value."""

    element: WeylElement
    xi: Weight
    sign: int
    pq: Optional[QPolynomial] = None

    def with_pq(self, pq: QPolynomial) -> "AlternationRecord":
        return replace(self, pq=pq)


def alternation_set(
    rs: RootSystem,
    lam: Optional[Weight] = None,
    mu: Optional[Weight] = None,
) -> list[AlternationRecord]:
    """All Weyl elements whose term in the multiplicity sum can be nonzero.

    Worklist search: seed with the identity when (lam+rho)-(rho+mu) is a
    nonnegative integral combination of simple roots, then repeatedly extend
    admitted elements on the right by every simple reflection, admitting an
    unseen matrix iff its xi passes the same test.  Records are sorted by
    (length, canonical word); ``pq`` is left unfilled.
    """
    lam = rs.highest_root if lam is None else lam
    mu = rs.zero_weight() if mu is None else mu
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise ValueError("lambda/mu rank mismatch")
    target = lam + rs.rho
    shift = rs.rho + mu

    # Work over scaled integers: exact, and much faster than Fractions.
    den = 1
    for c in (*target.coeffs, *shift.coeffs):
        den = lcm(den, c.denominator)
    tv = tuple(int(c * den) for c in target.coeffs)
    sv = tuple(int(c * den) for c in shift.coeffs)
    r = rs.rank
    cartan = rs.cartan

    def xi_of(m: Matrix) -> IntVec:
        return tuple(
            sum(row[j] * tv[j] for j in range(r)) - sv[k]
            for k, row in enumerate(m)
        )

    def admissible(x: IntVec) -> bool:
        if den == 1:
            return all(v >= 0 for v in x)
        return all(v >= 0 and v % den == 0 for v in x)

    ident = _identity(r)
    x0 = xi_of(ident)
    if not admissible(x0):
        return []
    admitted: list[tuple[Matrix, IntVec]] = [(ident, x0)]
    tested = {ident}
    i = 0
    while i < len(admitted):
        m, _ = admitted[i]
        for k in range(r):
            m2 = _rmul_simple(cartan, m, k)
            if m2 in tested:
                continue
            tested.add(m2)
            x2 = xi_of(m2)
            if admissible(x2):
                admitted.append((m2, x2))
        i += 1

    records = []
    for m, x in admitted:
        word = canonical_word(cartan, m)
        xi = Weight(v // den for v in x)
        sign = -1 if len(word) % 2 else 1
        records.append(AlternationRecord(WeylElement(cartan, m, word), xi, sign))
    records.sort(key=lambda rec: (rec.element.length, rec.element.word))
    return records
