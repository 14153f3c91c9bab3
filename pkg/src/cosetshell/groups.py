"""Finite groups as validated multiplication tables.

Elements are the integers ``0 .. order-1``; ``table[i, j]`` is the index of
the product ``i*j``.  Subgroups are plain ``frozenset`` objects of element
indices.  A group may carry a direct-product decomposition in ``factors``:
an ordered tuple of normal subgroups ``G_1, ..., G_r`` with ``G`` equal to
their internal direct product.  Groups built without one have
``factors == (G,)``.
"""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import numpy as np

from . import errors
from .arith import is_prime

DEFAULT_MAX_ORDER = 10000
EXHAUSTIVE_ASSOC_LIMIT = 64
ASSOC_SAMPLES = 100_000


class Group:
    """A finite group given by its Cayley table.

    Use :func:`group_from_table` or the builders in this module rather than
    calling the constructor directly; the constructor trusts its input.
    """

    def __init__(self, table, identity, inverses, names, factors, label=""):
        self.table = table
        self.table.flags.writeable = False
        self.order = int(table.shape[0])
        self.identity = int(identity)
        self.inverses = inverses
        self.inverses.flags.writeable = False
        self.names = tuple(names)
        self.factors = tuple(frozenset(f) for f in factors)
        self.label = label
        # per-instance memo for derived data (subgroup lists etc.)
        self._memo: dict = {}
        self._tuple_names = False

    def __repr__(self):
        name = self.label or "Group"
        return f"<{name} of order {self.order}>"

    def __len__(self):
        return self.order

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def whole(self) -> frozenset:
        return frozenset(range(self.order))

    @property
    def trivial(self) -> frozenset:
        return frozenset([self.identity])

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def conjugate(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        return self.mul(self.mul(self.inv(g), x), g)

    def commutator(self, x: int, y: int) -> int:
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def is_abelian(self, subset=None) -> bool:
        idx = np.fromiter(sorted(subset if subset is not None else self.elements), dtype=np.int64)
        sub = self.table[np.ix_(idx, idx)]
        return bool((sub == sub.T).all())

    def product_set(self, a, b) -> frozenset:
        ia = np.fromiter(a, dtype=np.int64)
        ib = np.fromiter(b, dtype=np.int64)
        return frozenset(self.table[np.ix_(ia, ib)].ravel().tolist())

    def right_coset(self, h, x: int) -> frozenset:
        """The set ``Hx``."""
        idx = np.fromiter(h, dtype=np.int64)
        return frozenset(self.table[idx, x].tolist())

    def is_subgroup(self, s) -> bool:
        s = frozenset(s)
        if self.identity not in s:
            return False
        return self.product_set(s, s) <= s and all(self.inv(x) in s for x in s)

    def normality_witness(self, h):
        """Return ``(x, g)`` with ``g^-1 x g`` outside ``h``, or None if ``h`` is normal."""
        for g in self.elements:
            for x in h:
                if self.conjugate(x, g) not in h:
                    return x, g
        return None

    def is_normal(self, h) -> bool:
        h = frozenset(h)
        for g in self.elements:
            if self.right_coset(h, g) != frozenset(self.mul(g, x) for x in h):
                return False
        return True

    def name_set(self, s) -> str:
        """Render an element set as ``{a,b,...}`` in index order."""
        return "{" + ",".join(self.names[i] for i in sorted(s)) + "}"

    def to_dict(self) -> dict:
        data = {
            "order": self.order,
            "table": self.table.tolist(),
            "names": list(self.names),
        }
        if len(self.factors) > 1:
            data["factors"] = [sorted(f) for f in self.factors]
        return data


def _validate(table: np.ndarray):
    """Check the group axioms, returning ``(identity, inverses)``."""
    n = table.shape[0]
    ar = np.arange(n)
    idents = [e for e in range(n) if (table[e] == ar).all() and (table[:, e] == ar).all()]
    if not idents:
        raise errors.NoIdentity("no element acts as a two-sided identity")
    e = idents[0]

    inverses = np.empty(n, dtype=np.int64)
    for x in range(n):
        ys = np.flatnonzero((table[x] == e) & (table[:, x] == e))
        if len(ys) == 0:
            raise errors.NoInverse(f"element {x} has no two-sided inverse")
        inverses[x] = ys[0]

    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        left = table[table]  # left[a, b, c] = (ab)c
        right = table[ar[:, None, None], table[None, :, :]]  # a(bc)
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(0)
        a, b, c = rng.integers(0, n, size=(3, ASSOC_SAMPLES))
        mask = table[table[a, b], c] != table[a, table[b, c]]
        bad = np.stack([a[mask], b[mask], c[mask]], axis=1)
    if len(bad):
        a, b, c = (int(v) for v in bad[0])
        raise errors.NotAssociative(f"(x*y)*z != x*(y*z) for x={a}, y={b}, z={c}")
    return e, inverses


def _check_order(n: int, max_order: int):
    if n > max_order:
        raise errors.OrderCapExceeded(f"group order {n} exceeds the cap {max_order}")


def check_factors(g: Group, factors) -> None:
    """Verify that ``factors`` is an internal direct-product decomposition of ``g``."""
    factors = [frozenset(f) for f in factors]
    for i, f in enumerate(factors):
        if not g.is_subgroup(f):
            raise errors.BadFactors(f"factor {i + 1} is not a subgroup")
        if not g.is_normal(f):
            raise errors.BadFactors(f"factor {i + 1} is not normal")
    for i, j in itertools.combinations(range(len(factors)), 2):
        for x in factors[i]:
            for y in factors[j]:
                if g.mul(x, y) != g.mul(y, x):
                    raise errors.BadFactors(f"factors {i + 1} and {j + 1} do not commute")
    size = 1
    for f in factors:
        size *= len(f)
    prod = {g.identity}
    for f in factors:
        prod = g.product_set(prod, f)
    if size != g.order or len(prod) != g.order:
        raise errors.BadFactors("the product map onto the group is not a bijection")


def group_from_table(order, table, names=None, factors=None, *, label="",
                     max_order=DEFAULT_MAX_ORDER) -> Group:
    """Build a group from an explicit Cayley table, rejecting non-groups."""
    _check_order(order, max_order)
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise errors.BadTable(f"table is not an integer array: {exc}") from None
    if order < 1 or arr.shape != (order, order):
        raise errors.BadTable(f"table must be {order}x{order}, got shape {arr.shape}")
    if arr.min() < 0 or arr.max() >= order:
        raise errors.BadTable(f"table entries must lie in [0, {order})")
    if names is None:
        names = [str(i) for i in range(order)]
    names = [str(x) for x in names]
    if len(names) != order:
        raise errors.BadTable(f"expected {order} names, got {len(names)}")
    e, inverses = _validate(arr)
    g = Group(arr.copy(), e, inverses, names, [range(order)], label)
    if factors is not None and len(factors) > 1:
        check_factors(g, factors)
        g.factors = tuple(frozenset(f) for f in factors)
    return g


def _perm_cycles(p) -> str:
    seen, cycles = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "e"


def _perm_group(perms, label, max_order):
    perms = list(perms)
    _check_order(len(perms), max_order)
    index = {p: i for i, p in enumerate(perms)}
    # left-to-right composition: (p*q)(x) = q(p(x))
    table = [[index[tuple(q[p[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return group_from_table(len(perms), table, [_perm_cycles(p) for p in perms],
                            label=label, max_order=max_order)


def _sign(p) -> int:
    s = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            s = -s
    return s


def _factorial_exceeds(n, cap):
    f = 1
    for k in range(2, n + 1):
        f *= k
        if f > cap:
            return True
    return False


def builtin_group(kind: str, n: int, p: int | None = None, *,
                  max_order=DEFAULT_MAX_ORDER) -> Group:
    """One of the standard families.

    ``kind`` is ``cyclic``, ``symmetric``, ``alternating``, ``dihedral`` (the
    symmetries of an ``n``-gon, order ``2n``) or ``elementary`` (``Z_p^n``,
    with its ``n`` cyclic factors recorded).
    """
    if n < 1:
        raise errors.InputError(f"n must be positive, got {n}")
    if kind == "cyclic":
        _check_order(n, max_order)
        ar = np.arange(n)
        names = [str(i) for i in range(n)]
        return group_from_table(n, (ar[:, None] + ar[None, :]) % n, names,
                                label=f"Z{n}", max_order=max_order)
    if kind in ("symmetric", "alternating"):
        if _factorial_exceeds(n, max_order * (2 if kind == "alternating" else 1)):
            raise errors.OrderCapExceeded(f"{kind} group on {n} points exceeds the cap {max_order}")
        perms = itertools.permutations(range(n))
        if kind == "alternating":
            perms = (q for q in perms if _sign(q) == 1)
            return _perm_group(perms, f"A{n}", max_order)
        return _perm_group(perms, f"S{n}", max_order)
    if kind == "dihedral":
        _check_order(2 * n, max_order)
        # index f*n + a stands for r^a s^f
        table = np.empty((2 * n, 2 * n), dtype=np.int64)
        for f, a, g, b in itertools.product(range(2), range(n), range(2), range(n)):
            c = (a + (b if f == 0 else -b)) % n
            table[f * n + a, g * n + b] = ((f + g) % 2) * n + c
        names = [("r%d" % a if a else "e") for a in range(n)]
        names += [("r%ds" % a if a else "s") for a in range(n)]
        return group_from_table(2 * n, table, names, label=f"D{n}", max_order=max_order)
    if kind == "elementary":
        if p is None or not is_prime(p):
            raise errors.InputError(f"elementary groups need a prime p, got {p}")
        g = builtin_group("cyclic", p, max_order=max_order)
        for _ in range(n - 1):
            g = direct_product(g, builtin_group("cyclic", p, max_order=max_order),
                               max_order=max_order)
        g.label = f"E{p}^{n}"
        return g
    raise errors.UnsupportedKind(f"unsupported group kind {kind!r}")


def direct_product(a: Group, b: Group, *, max_order=DEFAULT_MAX_ORDER) -> Group:
    """External direct product; the pair ``(x, y)`` gets index ``x*|b| + y``.

    The factors of the result are those of ``a`` followed by those of ``b``.
    """
    na, nb = a.order, b.order
    _check_order(na * nb, max_order)
    ta, tb = a.table, b.table
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    inverses = (a.inverses[:, None] * nb + b.inverses[None, :]).ravel()
    left = [n[1:-1] if a._tuple_names else n for n in a.names]
    right = [n[1:-1] if b._tuple_names else n for n in b.names]
    names = [f"({x},{y})" for x in left for y in right]
    factors = [[x * nb + b.identity for x in f] for f in a.factors]
    factors += [[a.identity * nb + y for y in f] for f in b.factors]
    label = f"{a.label} x {b.label}" if a.label and b.label else ""
    g = Group(table.copy(), a.identity * nb + b.identity, inverses.copy(), names, factors, label)
    g._tuple_names = True
    return g


def generated_subgroup(g: Group, gens) -> frozenset:
    """Smallest subgroup containing ``gens``."""
    gens = sorted(set(int(x) for x in gens))
    for x in gens:
        if not 0 <= x < g.order:
            raise errors.InputError(f"element index {x} out of range")
    gens = [x for x in gens if x != g.identity]
    found = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(g.table[x, s])
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


def quotient_group(g: Group, n) -> tuple[Group, np.ndarray]:
    """``G/N`` together with the projection as an index array.

    Quotient elements are numbered by the smallest element of each coset.
    """
    n = frozenset(n)
    if not g.is_subgroup(n):
        raise errors.NotSubgroup("not a subgroup")
    witness = g.normality_witness(n)
    if witness is not None:
        x, y = witness
        raise errors.NotNormal(
            f"conjugate of {g.names[x]} by {g.names[y]} is {g.names[g.conjugate(x, y)]}, outside N")
    proj = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in g.elements:
        if proj[x] < 0:
            k = len(reps)
            reps.append(x)
            for y in g.right_coset(n, x):
                proj[y] = k
    m = len(reps)
    table = proj[g.table[np.ix_(reps, reps)]]
    names = [g.name_set(g.right_coset(n, x)) for x in reps]
    label = f"{g.label}/N" if g.label else ""
    q = group_from_table(m, table, names, label=label, max_order=max(m, DEFAULT_MAX_ORDER))
    return q, proj


def subgroup_as_group(g: Group, h) -> tuple[Group, list[int]]:
    """Re-index a subgroup as a group in its own right.

    Returns the group and the embedding (new index -> old index), which is
    increasing.
    """
    emb = sorted(h)
    pos = {x: i for i, x in enumerate(emb)}
    table = [[pos[g.mul(x, y)] for y in emb] for x in emb]
    return group_from_table(len(emb), table, [g.names[x] for x in emb]), emb


# Cayley-table files ---------------------------------------------------------

def dumps_table(g: Group) -> str:
    return json.dumps(g.to_dict(), indent=None)


def loads_table(text: str, *, max_order=DEFAULT_MAX_ORDER) -> Group:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.BadTable(f"not a Cayley-table document: {exc}") from None
    if not isinstance(data, dict) or "order" not in data or "table" not in data:
        raise errors.BadTable("a Cayley-table document needs 'order' and 'table'")
    return group_from_table(int(data["order"]), data["table"], data.get("names"),
                            data.get("factors"), max_order=max_order)


def save_table(g: Group, path) -> None:
    Path(path).write_text(dumps_table(g) + "\n")


def load_table(path, *, max_order=DEFAULT_MAX_ORDER) -> Group:
    return loads_table(Path(path).read_text(), max_order=max_order)
