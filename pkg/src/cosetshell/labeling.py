"""Edge labels on the coset lattice of a product of square-free groups.

For ``G = G_1 x ... x G_r`` with every ``|G_i|`` square free, each pair
``(p, i)`` with ``p`` dividing ``|G_i|`` gets a distinguished maximal subgroup
``M_{p,i}``: an index-``p`` subgroup of ``G_i`` times the other factors.  A
cover ``H_1 x < H_0 x`` of index ``p`` changes the pivot set of the Sylow
``p``-part by a single column ``j``; the edge is labelled ``-l(p, j)`` when
``H_1 x`` is the slice ``H_0 x & M_{p,j}`` and ``+l(p, j)`` otherwise.
Edges down to the empty coset are labelled 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import errors
from .arith import is_prime, prime_divisors, square_divisor
from .cosets import EMPTY, Poset, coset_lattice, render
from .gfpivots import check_square_free_factors, subgroup_pivots
from .groups import Group, generated_subgroup, group_from_table
from .subgroups import maximal_subgroups, normal_subgroups, subgroup_key, subgroups_within


@dataclass(eq=False)
class LabelContext:
    group: Group
    distinguished: dict   # (p, i) -> M_{p,i}
    level: dict           # (p, i) -> positive integer

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.level)


@dataclass(eq=False)
class LabeledHasse:
    lattice: Poset
    labels: dict          # (lower, upper) -> int
    context: LabelContext = field(repr=False)

    def label(self, lower, upper) -> int:
        try:
            return self.labels[lower, upper]
        except KeyError:
            raise errors.UnlabeledCover(f"no label on {lower!r} < {upper!r}") from None

    def word(self, chain) -> tuple:
        """Labels along a chain given top-down."""
        return tuple(self.label(lo, hi) for hi, lo in zip(chain, chain[1:]))


def index_p_subgroups(g: Group, factor, p: int) -> list[frozenset]:
    """Subgroups of index ``p`` in ``factor``, in canonical order."""
    return [k for k in subgroups_within(g, factor) if len(k) * p == len(factor)]


def square_free_decomposition(g: Group):
    """Normal subgroups of square-free order whose internal direct product is ``g``.

    Depth-first search over normal subgroups in canonical order, largest
    first; returns ``None`` when no such decomposition exists.
    """
    cands = [n for n in normal_subgroups(g)
             if len(n) > 1 and square_divisor(len(n)) is None]
    cands.sort(key=lambda n: (-len(n), subgroup_key(n)))

    def search(chosen, product, start):
        if len(product) == g.order:
            return chosen
        for k in range(start, len(cands)):
            n = cands[k]
            if len(n & product) != 1 or g.order % (len(product) * len(n)):
                continue
            if any(g.mul(x, y) != g.mul(y, x) for m in chosen for x in m for y in n):
                continue
            found = search(chosen + [n], g.product_set(product, n), k + 1)
            if found is not None:
                return found
        return None

    if g.order == 1:
        return None
    return search([], g.trivial, 0)


def with_square_free_factors(g: Group) -> Group:
    """``g`` itself if its factors are already square free, else a copy carrying a
    decomposition found by :func:`square_free_decomposition`."""
    try:
        check_square_free_factors(g)
        return g
    except errors.PreconditionError:
        pass
    factors = square_free_decomposition(g)
    if factors is None:
        raise errors.NonSquareFreeFactor(
            f"{g!r} is not an internal direct product of square-free groups")
    factors = sorted(factors, key=subgroup_key)
    h = group_from_table(g.order, g.table, g.names, factors, label=g.label)
    h._tuple_names = g._tuple_names
    return h


def build_context(g: Group, levels: str = "lex", m_star=None) -> LabelContext:
    """Choose the distinguished subgroups and the level map.

    ``levels="lex"`` ranks the pairs ``(p, i)`` lexicographically from 1;
    ``levels="prime"`` sets ``l(p, 1) = p`` and needs a single factor.
    ``m_star`` may map ``(p, i)`` to an alternative index-``p`` subgroup of
    ``G_i``; otherwise the lexicographically least one is used.
    """
    check_square_free_factors(g)
    m_star = dict(m_star or {})
    distinguished = {}
    for i, f in enumerate(g.factors, start=1):
        others = set().union(*(h for j, h in enumerate(g.factors, start=1) if j != i))
        for p in prime_divisors(len(f)):
            cands = index_p_subgroups(g, f, p)
            star = frozenset(m_star.pop((p, i), cands[0]))
            if star not in cands:
                raise errors.PreconditionError(f"M*_({p},{i}) is not an index-{p} subgroup of factor {i}")
            distinguished[p, i] = generated_subgroup(g, star | others)
    if m_star:
        raise errors.PreconditionError(f"no such pairs: {sorted(m_star)}")
    pairs = sorted(distinguished)
    if levels == "lex":
        level = {pair: k for k, pair in enumerate(pairs, start=1)}
    elif levels == "prime":
        if len(g.factors) != 1:
            raise errors.PreconditionError("prime levels need a single square-free factor")
        level = {(p, i): p for p, i in pairs}
    else:
        raise errors.InputError(f"unknown level convention {levels!r}")
    return LabelContext(g, distinguished, level)


def _label(ctx: LabelContext, lower, upper) -> int:
    if lower is EMPTY:
        return 0
    g = ctx.group
    h0, h1 = upper.subgroup, lower.subgroup
    p = len(h0) // len(h1)
    if not is_prime(p):
        raise errors.NonPrimeIndex(f"cover of index {p}; the group is not supersolvable")
    step = subgroup_pivots(g, h0, p) - subgroup_pivots(g, h1, p)
    if len(step) != 1:
        raise AssertionError(f"pivot sets differ in {len(step)} columns across a cover")
    (j,) = step
    slice_ = upper.elements & ctx.distinguished[p, j]
    return -ctx.level[p, j] if lower.elements == slice_ else ctx.level[p, j]


def label_cover(ctx: LabelContext, lower, upper) -> int:
    """Label of the cover ``lower < upper`` of the coset lattice."""
    g = ctx.group
    if lower is not EMPTY:
        ok = (lower.elements < upper.elements
              and lower.subgroup in maximal_subgroups(g, upper.subgroup))
    else:
        ok = len(upper.elements) == 1 and g.order > 1
    if not ok:
        raise errors.NotACover(f"{render(g, lower)} < {render(g, upper)} is not a cover")
    return _label(ctx, lower, upper)


def labeled_hasse(ctx: LabelContext) -> LabeledHasse:
    lattice = coset_lattice(ctx.group)
    labels = {(lo, hi): _label(ctx, lo, hi) for lo, hi in lattice.covers}
    return LabeledHasse(lattice, labels, ctx)


def dump_labels(lh: LabeledHasse) -> str:
    """One cover per line: ``lower<TAB>upper<TAB>label``."""
    g = lh.context.group
    lines = [f"{render(g, lo)}\t{render(g, hi)}\t{lh.labels[lo, hi]}"
             for lo, hi in lh.lattice.covers]
    return "\n".join(lines) + "\n"
