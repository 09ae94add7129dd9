"""Counting partitions of a weight into positive roots, graded by size.

Two independent algorithms produce the same graded count:

* the tree method: depth-first recursion over the positive roots in their
  canonical order, branching on how many copies of the current root to
  subtract while the residual stays nonnegative; a zero residual closes one
  successful branch, and identical (root index, residual) subproblems are
  shared through a per-type memo table;

* the generating-function method: the truncated expansion of the product of
  geometric series 1/(1 - q x_beta) over the positive roots, realised as a
  dynamic program over the exponent box [0, xi_1] x ... x [0, xi_r].

Both kernels store a polynomial as one big integer with a coefficient per
128-bit limb (see qpoly), so the inner loops are single shift-and-adds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .qpoly import LIMB_BITS, QPolynomial
from .rootsys import (
    IntVec,
    LieType,
    RootSystem,
    Weight,
    WeightClass,
    classify_weight,
)

# Shared subtree results for the tree method, keyed by Lie type; a root
# system is canonical for its type, so the cache is safe to reuse across
# calls and grows with the weights actually visited.
_TREE_CACHES: dict[LieType, dict[tuple, int]] = {}
_TREE_CACHE_LIMIT = 4_000_000


@dataclass(frozen=True)
class PartitionMultiset:
    """Multiplicities over ``rs.positive_roots``: mults[k] copies of root k."""

    mults: IntVec

    def roots_used(self) -> int:
        return sum(self.mults)

    def weight(self, rs: RootSystem) -> Weight:
        acc = [0] * rs.rank
        for k, m in enumerate(self.mults):
            if m:
                v = rs.root_vectors[k]
                for j in range(rs.rank):
                    acc[j] += m * v[j]
        return Weight(acc)

    def text(self, rs: RootSystem) -> str:
        parts = [
            f"{m}({rs.positive_roots[k].text()})"
            for k, m in enumerate(self.mults)
            if m
        ]
        return " + ".join(parts) if parts else "0"

    def latex(self, rs: RootSystem) -> str:
        parts = [
            f"{m}({rs.positive_roots[k].latex()})"
            for k, m in enumerate(self.mults)
            if m
        ]
        return " + ".join(parts) if parts else "0"


def _as_int_vec(rs: RootSystem, xi: Weight) -> Optional[IntVec]:
    """Integer coefficients of xi, or None when it cannot be partitioned."""
    if len(xi) != rs.rank:
        raise ValueError(f"expected rank {rs.rank}, got weight of length {len(xi)}")
    if classify_weight(xi) is not WeightClass.NONNEGATIVE_INTEGRAL:
        return None
    return xi.int_coeffs()


def _tree_count_packed(rs: RootSystem, target: IntVec) -> int:
    roots = rs.root_vectors
    n = len(roots)
    r = rs.rank
    cache = _TREE_CACHES.setdefault(rs.lie_type, {})
    if len(cache) > _TREE_CACHE_LIMIT:
        cache.clear()
    zero = (0,) * r

    def rec(k: int, res: IntVec) -> int:
        if res == zero:
            return 1
        if k == n:
            return 0
        key = (k, res)
        hit = cache.get(key)
        if hit is not None:
            return hit
        root = roots[k]
        total = rec(k + 1, res)  # zero copies of this root
        cur = list(res)
        shift = 0
        while True:
            ok = True
            for j in range(r):
                cur[j] -= root[j]
                if cur[j] < 0:
                    ok = False
            if not ok:
                break
            shift += LIMB_BITS
            total += rec(k + 1, tuple(cur)) << shift
        cache[key] = total
        return total

    return rec(0, target)


def partition_tree_count(rs: RootSystem, xi: Weight) -> QPolynomial:
    """Graded partition count of ``xi`` by the tree method.

    >>> from qkostant.rootsys import build_root_system
    >>> rs = build_root_system("G2")
    >>> partition_tree_count(rs, rs.weight([2, 2])).text()
    '2q^2 + q^3 + q^4'
    """
    target = _as_int_vec(rs, xi)
    if target is None:
        return QPolynomial.zero()
    return QPolynomial.from_packed(_tree_count_packed(rs, target))


def partition_tree_list(rs: RootSystem, xi: Weight) -> list[PartitionMultiset]:
    """The explicit partitions behind :func:`partition_tree_count`, in
    depth-first order (copies of each root tried in increasing number)."""
    target = _as_int_vec(rs, xi)
    if target is None:
        return []
    roots = rs.root_vectors
    n = len(roots)
    r = rs.rank
    zero = (0,) * r
    out: list[PartitionMultiset] = []
    mults = [0] * n

    def rec(k: int, res: IntVec) -> None:
        if res == zero:
            out.append(PartitionMultiset(tuple(mults)))
            return
        if k == n:
            return
        rec(k + 1, res)
        root = roots[k]
        cur = list(res)
        m = 0
        while True:
            ok = True
            for j in range(r):
                cur[j] -= root[j]
                if cur[j] < 0:
                    ok = False
            if not ok:
                break
            m += 1
            mults[k] = m
            rec(k + 1, tuple(cur))
        mults[k] = 0

    rec(0, target)
    return out


def _genfunc_table(rs: RootSystem, box: IntVec) -> tuple[list[int], IntVec]:
    """DP table of packed graded counts for every weight in the box.

    Cell v accumulates, root by root, the coefficient of the monomial of v
    in the truncated product of the series 1 + q x + q^2 x^2 + ... for each
    positive root x; truncation at the box loses nothing for any cell read.
    """
    r = rs.rank
    dims = [b + 1 for b in box]
    strides = [0] * r
    acc = 1
    for d in range(r - 1, -1, -1):
        strides[d] = acc
        acc *= dims[d]
    dp = [0] * acc
    dp[0] = 1
    for root in rs.root_vectors:
        if any(root[j] > box[j] for j in range(r)):
            continue
        off = sum(root[j] * strides[j] for j in range(r))
        sub = [box[j] - root[j] for j in range(r)]
        last = r - 1

        def scan(dim: int, base: int) -> None:
            if dim == last:
                for u in range(base, base + sub[last] + 1):
                    b = dp[u]
                    if b:
                        dp[u + off] += b << LIMB_BITS
            else:
                step = strides[dim]
                for _ in range(sub[dim] + 1):
                    scan(dim + 1, base)
                    base += step

        scan(0, 0)
    return dp, tuple(strides)


def partition_genfunc(rs: RootSystem, xi: Weight) -> QPolynomial:
    """Graded partition count of ``xi`` by the generating-function method."""
    target = _as_int_vec(rs, xi)
    if target is None:
        return QPolynomial.zero()
    dp, strides = _genfunc_table(rs, target)
    return QPolynomial.from_packed(dp[-1])


def partition_genfunc_batch(
    rs: RootSystem, xis: Sequence[Weight]
) -> list[QPolynomial]:
    """Graded counts for many weights from one table over their joint box.

    The box is the componentwise maximum of the partitionable inputs; every
    other input short-circuits to zero exactly as in the single-shot call.
    """
    targets = [_as_int_vec(rs, xi) for xi in xis]
    live = [t for t in targets if t is not None]
    if not live:
        return [QPolynomial.zero()] * len(targets)
    box = tuple(max(t[j] for t in live) for j in range(rs.rank))
    dp, strides = _genfunc_table(rs, box)
    out = []
    for t in targets:
        if t is None:
            out.append(QPolynomial.zero())
        else:
            idx = sum(t[j] * strides[j] for j in range(rs.rank))
            out.append(QPolynomial.from_packed(dp[idx]))
    return out


def kostant_partition(rs: RootSystem, xi: Weight, method: str = "genfunc") -> int:
    """Number of ways to write ``xi`` as a nonnegative integral combination
    of positive roots (the graded count evaluated at q = 1)."""
    if method == "tree":
        return partition_tree_count(rs, xi).at_one()
    if method == "genfunc":
        return partition_genfunc(rs, xi).at_one()
    raise ValueError(f"unknown method {method!r}; expected 'tree' or 'genfunc'")
