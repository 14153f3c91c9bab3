"""Row reduction over GF(p) and the pivot-column invariant of subspaces.

Column indices in the public API are 1-based.  For subgroups of a product
``G_1 x ... x G_r`` the column of a basis vector is the index ``i`` of the
factor it was taken from, so pivot sets can be matched against the
distinguished subgroups ``M_{p,i}`` directly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import errors
from .arith import is_prime, square_divisor
from .groups import Group
from .subgroups import sylow_subgroup


@dataclass(frozen=True)
class GFMatrix:
    """Rows of length ``ncols`` with entries in ``[0, p)``."""

    p: int
    rows: tuple
    ncols: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise errors.NonPrimeModulus(f"{self.p} is not prime")
        rows = tuple(tuple(int(v) % self.p for v in r) for r in self.rows)
        for r in rows:
            if len(r) != self.ncols:
                raise errors.InputError(f"row {r} does not have {self.ncols} entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, p, rows, ncols=None):
        rows = [tuple(r) for r in rows]
        if ncols is None:
            if not rows:
                raise errors.InputError("ncols is required for an empty row list")
            ncols = len(rows[0])
        return cls(p, tuple(rows), ncols)

    def stack(self, other: "GFMatrix") -> "GFMatrix":
        return GFMatrix(self.p, self.rows + other.rows, self.ncols)

    @property
    def dim(self) -> int:
        return len(rref(self).rows)


def rref(m: GFMatrix) -> GFMatrix:
    """Reduced row echelon form with zero rows dropped."""
    p, rows = m.p, [list(r) for r in m.rows]
    out = []
    for col in range(m.ncols):
        piv = next((r for r in rows if r[col]), None)
        if piv is None:
            continue
        rows.remove(piv)
        inv = pow(piv[col], -1, p)
        piv = [(v * inv) % p for v in piv]
        for r in rows + out:
            if r[col]:
                f = r[col]
                r[:] = [(a - f * b) % p for a, b in zip(r, piv)]
        out.append(piv)
        rows = [r for r in rows if any(r)]
    return GFMatrix(p, tuple(tuple(r) for r in out), m.ncols)


def leading_column(row) -> int:
    """1-based position of the first nonzero entry (0 for the zero row)."""
    for i, v in enumerate(row):
        if v:
            return i + 1
    return 0


def pivot_set(m: GFMatrix) -> frozenset:
    return frozenset(leading_column(r) for r in rref(m).rows)


def same_space(a: GFMatrix, b: GFMatrix) -> bool:
    return rref(a).rows == rref(b).rows


def contains(big: GFMatrix, small: GFMatrix) -> bool:
    return same_space(big, big.stack(small))


def _check_pair(p, u1, u2):
    if u1.p != p or u2.p != p:
        raise errors.InputError("matrices are over a different field")
    if u1.ncols != u2.ncols:
        raise errors.InputError("column counts differ")
    if not contains(u2, u1):
        raise errors.NotNested("U1 is not contained in U2")
    if same_space(u1, u2):
        raise errors.EqualSpaces("U1 equals U2")


def w_up(p: int, u1: GFMatrix, u2: GFMatrix) -> GFMatrix:
    """The subspace between ``u1`` and ``u2`` whose pivots are ``I(u1)`` plus the
    largest new pivot of ``u2``."""
    _check_pair(p, u1, u2)
    r2 = rref(u2)
    k = max(pivot_set(r2) - pivot_set(u1))
    g = next(r for r in r2.rows if leading_column(r) == k)
    return rref(u1.stack(GFMatrix(p, (g,), u1.ncols)))


def w_down(p: int, u1: GFMatrix, u2: GFMatrix) -> GFMatrix:
    """The subspace between ``u1`` and ``u2`` whose pivots are ``I(u2)`` minus the
    smallest new pivot."""
    _check_pair(p, u1, u2)
    r2 = rref(u2)
    new = pivot_set(r2) - pivot_set(u1)
    j = min(new)
    # rows of the RREF with new pivots vanish on the pivots of u1
    keep = tuple(r for r in r2.rows if leading_column(r) in new and leading_column(r) != j)
    return rref(u1.stack(GFMatrix(p, keep, u1.ncols)))


# subgroups of products of square-free groups ---------------------------------

def check_square_free_factors(g: Group) -> None:
    if not g.factors:
        raise errors.NoFactorStructure(f"{g!r} has no factor structure")
    for i, f in enumerate(g.factors, start=1):
        sq = square_divisor(len(f))
        if sq is not None:
            raise errors.NonSquareFreeFactor(
                f"factor {i} has order {len(f)}, divisible by {sq}")


def pivot_basis(g: Group, g_sylow) -> list[tuple[int, int]]:
    """Default basis of a Sylow subgroup: ``(factor index, generator)`` pairs,
    the generator being the least nontrivial element of ``G* & G_i``."""
    basis = []
    for i, f in enumerate(g.factors, start=1):
        meet = sorted(x for x in g_sylow & f if x != g.identity)
        if meet:
            basis.append((i, meet[0]))
    return basis


def coordinates(g: Group, p: int, basis) -> dict[int, tuple]:
    """Exhaustive coordinatization of the span of ``basis`` (as exponent vectors)."""
    out = {}
    for exps in itertools.product(range(p), repeat=len(basis)):
        x = g.identity
        for (_, e), a in zip(basis, exps):
            x = g.mul(x, g.power(e, a))
        out[x] = exps
    return out


def subgroup_pivots(g: Group, h, p: int, *, h_sylow=None, g_sylow=None, basis=None) -> frozenset:
    """Pivot set of a Sylow ``p``-subgroup of ``h`` inside a coordinatized Sylow
    ``p``-subgroup of ``g``.  Columns are factor indices.

    The three choices (Sylow of ``h``, Sylow of ``g`` containing it, and the
    basis generators) default to canonical picks and may be overridden; the
    result does not depend on them.
    """
    check_square_free_factors(g)
    h = frozenset(h)
    memo = g._memo.setdefault("pivots", {})
    default = h_sylow is None and g_sylow is None and basis is None
    if default and (h, p) in memo:
        return memo[h, p]
    if h_sylow is None:
        h_sylow = sylow_subgroup(g, p, within=h)
    h_sylow = frozenset(h_sylow)
    if g_sylow is None:
        g_sylow = sylow_subgroup(g, p, containing=h_sylow)
    g_sylow = frozenset(g_sylow)
    if not h_sylow <= g_sylow:
        raise errors.ContainmentImpossible("H* is not contained in G*")
    if basis is None:
        basis = pivot_basis(g, g_sylow)
    coords = coordinates(g, p, basis)
    if len(coords) != len(g_sylow) or set(coords) != g_sylow:
        raise errors.InputError("basis does not span the Sylow subgroup")
    rows = [coords[x] for x in sorted(h_sylow)]
    cols = [i for i, _ in basis]
    if not basis:
        out = frozenset()
    else:
        local = pivot_set(GFMatrix(p, tuple(rows), len(basis)))
        out = frozenset(cols[c - 1] for c in local if c)
    if default:
        memo[h, p] = out
    return out
