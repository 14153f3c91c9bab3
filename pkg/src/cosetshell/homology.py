"""Exact reduced homology, predicted sphere counts and Cohen-Macaulay checks."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from . import errors
from .arith import is_prime
from .cosets import SimplicialComplex, pure_skeleton
from .groups import Group
from .subgroups import chief_series

MAX_CM_FACES = 5000


def _field(field) -> int:
    """0 for the rationals, else the prime characteristic."""
    if field in (None, 0, "Q", "q", "QQ", "rationals"):
        return 0
    p = int(field)
    if not is_prime(p):
        raise errors.NonPrimeModulus(f"{p} is not prime")
    return p


@dataclass(frozen=True)
class BettiVector:
    field: str
    ranks: tuple  # reduced Betti numbers in dimensions 0..dim

    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.ranks))

    def trimmed(self) -> tuple:
        r = list(self.ranks)
        while r and r[-1] == 0:
            r.pop()
        return tuple(r)


def rank(rows, p: int = 0) -> int:
    """Rank of a sparse matrix given as ``{column: entry}`` rows.

    ``p == 0`` works over the rationals with integer fraction-free row
    operations (rows are divided by their content to keep entries small);
    otherwise over GF(p).
    """
    pivots: dict = {}
    for row in rows:
        row = {c: v % p if p else v for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                if p:
                    inv = pow(row[c], -1, p)
                    row = {k: (v * inv) % p for k, v in row.items()}
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            if p:
                new = dict(row)
                for k, v in piv.items():
                    new[k] = (new.get(k, 0) - b * v) % p
            else:
                new = {k: a * v for k, v in row.items()}
                for k, v in piv.items():
                    new[k] = new.get(k, 0) - b * v
            row = {k: v for k, v in new.items() if v}
            if not p and row:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {k: v // g for k, v in row.items()}
    return len(pivots)


def boundary_rows(lower: list[tuple], upper: list[tuple]):
    """Rows of the boundary map from ``upper`` faces to ``lower`` faces."""
    idx = {f: i for i, f in enumerate(lower)}
    for f in upper:
        yield {idx[f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))}


def betti(k: SimplicialComplex, field="Q") -> BettiVector:
    """Reduced Betti numbers of ``k``."""
    p = _field(field)
    if not k.vertices:
        raise errors.EmptyComplex("the complex has no vertices")
    faces = k.faces()
    ranks = [1]  # augmentation C_0 -> C_{-1}
    for d in range(1, len(faces)):
        ranks.append(rank(boundary_rows(faces[d - 1], faces[d]), p))
    ranks.append(0)
    out = tuple(len(faces[d]) - ranks[d] - ranks[d + 1] for d in range(len(faces)))
    return BettiVector("Q" if p == 0 else f"GF({p})", out)


def reduced_euler(k: SimplicialComplex) -> int:
    return -1 + sum((-1) ** i * n for i, n in enumerate(k.f_vector()))


def predicted_spheres(g: Group) -> tuple[int, int]:
    """``(dimension, count)`` of the bouquet of spheres predicted from a chief series.

    The dimension is one less than the number of complemented chief factors;
    the count is the absolute value of ``prod(1 - c_i * |N_i/N_{i-1}|)``.
    """
    if g.order == 1:
        raise errors.TrivialGroup("the trivial group has an empty coset poset")
    cs = chief_series(g)
    count = prod(1 - c * n for c, n in zip(cs.complement_counts, cs.factor_orders))
    return cs.complemented_factors - 1, abs(count)


@dataclass
class CMResult:
    ok: bool
    face: frozenset | None = None
    degree: int | None = None
    rank: int | None = None
    skeleton: int | None = None

    def __bool__(self):
        return self.ok


def _check_size(k, max_faces):
    n = k.num_faces()
    if n > max_faces:
        raise errors.ComplexTooLarge(f"{n} faces exceeds the cap of {max_faces}")


def is_cm(k: SimplicialComplex, field="Q", max_faces: int = MAX_CM_FACES) -> CMResult:
    """Cohen-Macaulay test: every link has reduced homology only in its top degree.

    The witness is the first face (in order of size) whose link fails.
    """
    if not k.is_pure():
        raise errors.NotPure("the complex is not pure")
    _check_size(k, max_faces)
    return _cm(k, _field(field))


def _cm(k, p):
    dim = k.dim
    faces = [frozenset()]
    for layer in k.faces():
        faces += [frozenset(k.vertices[i] for i in f) for f in layer]
    for f in faces:
        link_dim = dim - len(f)
        if link_dim <= 0:
            continue
        bv = betti(k.link(f), p)
        for i in range(link_dim):
            if bv.ranks[i]:
                return CMResult(False, f, i, bv.ranks[i])
    return CMResult(True)


def is_seq_cm(k: SimplicialComplex, field="Q", max_faces: int = MAX_CM_FACES) -> CMResult:
    """Sequential Cohen-Macaulay test: every pure skeleton is Cohen-Macaulay."""
    _check_size(k, max_faces)
    p = _field(field)
    for i in range(k.dim + 1):
        res = _cm(pure_skeleton(k, i), p)
        if not res:
            res.skeleton = i
            return res
    return CMResult(True)
