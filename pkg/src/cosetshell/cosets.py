"""Coset posets, coset lattices, intervals, chains and order complexes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from . import errors
from .groups import Group
from .subgroups import all_subgroups


@dataclass(frozen=True)
class Coset:
    """The right coset ``subgroup * rep``; ``rep`` is its least element."""

    subgroup: frozenset
    rep: int
    elements: frozenset = field(compare=False, repr=False)

    @property
    def key(self) -> tuple:
        return (len(self.elements), tuple(sorted(self.elements)))

    def __len__(self):
        return len(self.elements)

    def __lt__(self, other):
        return self.key < other.key


class _Empty:
    """Bottom element of a coset lattice."""

    subgroup = None
    elements = frozenset()
    key = (0, ())

    def __repr__(self):
        return "EMPTY"

    def __len__(self):
        return 0

    def __lt__(self, other):
        return self.key < other.key

    def __reduce__(self):
        return "EMPTY"


EMPTY = _Empty()


def make_coset(g: Group, h, x: int) -> Coset:
    h = frozenset(h)
    elems = g.right_coset(h, x)
    return Coset(h, min(elems), elems)


def top_coset(g: Group) -> Coset:
    return Coset(g.whole, 0, g.whole)


def sort_key(x):
    return x.key if hasattr(x, "key") else (x,)


def render(g: Group, x) -> str:
    """Sorted element-name set, e.g. ``{1,4}``; the empty coset is ``{}``."""
    return g.name_set(x.elements)


class Poset:
    """A finite poset held as its cover relation.

    ``elements`` is kept in canonical order (by :func:`sort_key`) and chains
    are compared through element positions in that list.
    """

    def __init__(self, elements, covers, bounded=False):
        self.elements = sorted(elements, key=sort_key)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.covers = sorted(covers, key=lambda c: (self.index[c[0]], self.index[c[1]]))
        self.bounded = bounded
        self.up = {x: [] for x in self.elements}
        self.down = {x: [] for x in self.elements}
        for lo, hi in self.covers:
            self.up[lo].append(hi)
            self.down[hi].append(lo)
        self._upsets = None

    @classmethod
    def from_order(cls, elements, less, bounded=False):
        """Build from a strict order predicate via transitive reduction."""
        elements = list(elements)
        dag = nx.DiGraph()
        dag.add_nodes_from(range(len(elements)))
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                if i != j and less(a, b):
                    dag.add_edge(i, j)
        red = nx.transitive_reduction(dag)
        covers = [(elements[i], elements[j]) for i, j in red.edges]
        return cls(elements, covers, bounded)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def upset(self, x) -> frozenset:
        if self._upsets is None:
            ups = {}
            for y in reversed(self._topological()):
                s = {y}
                for z in self.up[y]:
                    s |= ups[z]
                ups[y] = frozenset(s)
            self._upsets = ups
        return self._upsets[x]

    def _topological(self):
        indeg = {x: len(self.down[x]) for x in self.elements}
        order = [x for x in self.elements if indeg[x] == 0]
        i = 0
        while i < len(order):
            for y in self.up[order[i]]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    order.append(y)
            i += 1
        if len(order) != len(self.elements):
            raise errors.InputError("cover relation has a cycle")
        return order

    def leq(self, a, b) -> bool:
        return b in self.upset(a)

    def minimal(self) -> list:
        return [x for x in self.elements if not self.down[x]]

    def maximal(self) -> list:
        return [x for x in self.elements if not self.up[x]]

    @property
    def bottom(self):
        m = self.minimal()
        return m[0] if self.bounded and len(m) == 1 else None

    @property
    def top(self):
        m = self.maximal()
        return m[0] if self.bounded and len(m) == 1 else None

    def chain_key(self, chain) -> tuple:
        return (len(chain), tuple(self.index[x] for x in chain))

    def without(self, drop) -> "Poset":
        """Induced subposet on everything outside ``drop`` (covers recomputed)."""
        drop = set(drop)
        keep = [x for x in self.elements if x not in drop]
        return Poset.from_order(keep, lambda a, b: a is not b and self.leq(a, b))


def _proper_cosets(g: Group) -> list[Coset]:
    out = []
    for h in all_subgroups(g):
        if len(h) == g.order:
            continue
        seen = set()
        for x in g.elements:
            if x in seen:
                continue
            c = make_coset(g, h, x)
            seen |= c.elements
            out.append(c)
    return out


def _strict_subset(a, b):
    return len(a.elements) < len(b.elements) and a.elements < b.elements


def coset_poset(g: Group) -> Poset:
    """All cosets of proper subgroups, ordered by inclusion."""
    if g.order < 2:
        raise errors.TrivialGroup("the coset poset of the trivial group is empty")
    return Poset.from_order(_proper_cosets(g), _strict_subset)


def coset_lattice(g: Group) -> Poset:
    """The coset poset with bottom ``EMPTY`` and top ``G`` adjoined."""
    if g.order < 2:
        raise errors.TrivialGroup("the coset poset of the trivial group is empty")
    p = coset_poset(g)
    top = top_coset(g)
    covers = list(p.covers)
    covers += [(EMPTY, x) for x in p.minimal()]
    covers += [(x, top) for x in p.maximal()]
    return Poset([EMPTY, *p.elements, top], covers, bounded=True)


def interval(p: Poset, a, b) -> Poset:
    """The closed interval ``[a, b]`` as a bounded poset."""
    if not p.leq(a, b):
        raise errors.NotComparable(f"{a!r} is not below {b!r}")
    inside = {x for x in p.upset(a) if p.leq(x, b)}
    covers = [(x, y) for x, y in p.covers if x in inside and y in inside]
    return Poset(inside, covers, bounded=True)


def maximal_chains(p: Poset) -> list[list]:
    """All maximal chains, ascending, in canonical (length, positions) order."""
    chains = []

    def extend(chain):
        ups = p.up[chain[-1]]
        if not ups:
            chains.append(list(chain))
            return
        for y in ups:
            chain.append(y)
            extend(chain)
            chain.pop()

    for x in p.minimal():
        extend([x])
    chains.sort(key=p.chain_key)
    return chains


def c0_subposet(g: Group, n) -> Poset:
    """The subposet of cosets ``Hx`` with ``HN != G``."""
    n = frozenset(n)
    if not g.is_subgroup(n):
        raise errors.NotSubgroup("N is not a subgroup")
    if not g.is_normal(n):
        raise errors.NotNormal("N is not normal")
    if len(n) == 1:
        raise errors.TrivialN("N is trivial")
    if len(n) == g.order:
        raise errors.NotProper("N is the whole group")
    cp = coset_poset(g)
    drop = [c for c in cp.elements if len(c.subgroup) * len(n) // len(c.subgroup & n) == g.order]
    return cp.without(drop)


# simplicial complexes -------------------------------------------------------

class SimplicialComplex:
    """A simplicial complex given by its facets.

    Vertices may be any hashable objects that :func:`sort_key` can order.
    Non-maximal entries of ``facets`` are discarded.
    """

    def __init__(self, facets, vertices=None):
        fs = {frozenset(f) for f in facets}
        kept = []
        larger = []
        for size in sorted({len(f) for f in fs}, reverse=True):
            layer = [f for f in fs if len(f) == size and not any(f < h for h in larger)]
            kept += layer
            larger += layer
        self.facets = sorted(kept, key=self._face_key)
        vs = set().union(*self.facets) if self.facets else set()
        if vertices is not None:
            vs |= set(vertices)
        self.vertices = sorted(vs, key=sort_key)
        self._vindex = {v: i for i, v in enumerate(self.vertices)}

    def _face_key(self, f):
        return (len(f), sorted(sort_key(v) for v in f))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> list[list[tuple]]:
        """Nonempty faces by dimension, each as a sorted tuple of vertex positions."""
        idx = self._vindex
        out = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            fi = sorted(idx[v] for v in f)
            for k in range(1, len(fi) + 1):
                out[k - 1].update(itertools.combinations(fi, k))
        return [sorted(s) for s in out]

    def f_vector(self) -> list[int]:
        return [len(s) for s in self.faces()]

    def num_faces(self) -> int:
        """Number of faces, counting the empty face."""
        return 1 + sum(self.f_vector())

    def link(self, face) -> "SimplicialComplex":
        face = frozenset(face)
        return SimplicialComplex([f - face for f in self.facets if face <= f])

    def components(self) -> list[set]:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for f in self.facets:
            fl = sorted(f, key=sort_key)
            graph.add_edges_from(zip(fl, fl[1:]))
        return sorted((set(c) for c in nx.connected_components(graph)),
                      key=lambda c: min(self._vindex[v] for v in c))

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and set(self.facets) == set(other.facets)

    def __repr__(self):
        return f"<SimplicialComplex dim={self.dim} facets={len(self.facets)}>"


def order_complex(p: Poset) -> SimplicialComplex:
    """Chains of ``p`` as a simplicial complex; bounds of a bounded poset are removed first."""
    if p.bounded:
        strip = {p.bottom, p.top}
        p = Poset([x for x in p.elements if x not in strip],
                  [(a, b) for a, b in p.covers if a not in strip and b not in strip])
    return SimplicialComplex(maximal_chains(p), p.elements)


def pure_skeleton(k: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by the ``i``-dimensional faces."""
    if i > k.dim:
        raise errors.DimensionTooLarge(f"dimension {i} exceeds dim {k.dim}")
    faces = set()
    for f in k.facets:
        if len(f) > i:
            faces.update(frozenset(c) for c in itertools.combinations(f, i + 1))
    return SimplicialComplex(faces)


def format_facets(k: SimplicialComplex, label=None) -> str:
    """One facet per line, vertex labels comma-separated.

    By default a vertex is labelled by its position in ``k.vertices``;
    custom labels must not contain commas.
    """
    if label is None:
        label = lambda v: str(k._vindex[v])  # noqa: E731
    lines = []
    for f in k.facets:
        lines.append(",".join(label(v) for v in sorted(f, key=sort_key)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_facets(text: str) -> SimplicialComplex:
    facets = [line.split(",") for line in text.splitlines() if line.strip()]
    return SimplicialComplex([[v.strip() for v in f] for f in facets])
