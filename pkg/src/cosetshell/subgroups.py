"""Subgroup enumeration, Sylow and Hall subgroups, chief series, classification."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import errors
from .arith import factorize, is_prime, is_prime_power, p_part, pi_part, prime_divisors
from .groups import Group, generated_subgroup, quotient_group


def subgroup_key(h) -> tuple:
    """Canonical order on subgroups: by order, then by sorted element tuple."""
    return (len(h), tuple(sorted(h)))


def all_subgroups(g: Group) -> list[frozenset]:
    """Every subgroup of ``g``, sorted by :func:`subgroup_key`.

    Breadth-first closure: start from the cyclic subgroups and keep joining
    each known subgroup with a cyclic subgroup it does not contain.
    """
    memo = g._memo
    if "subgroups" in memo:
        return memo["subgroups"]
    gens: dict[frozenset, list[int]] = {g.trivial: []}
    cyclic: dict[frozenset, int] = {}
    for x in g.elements:
        c = generated_subgroup(g, [x])
        cyclic.setdefault(c, x)
        gens.setdefault(c, [x] if x != g.identity else [])
    frontier = list(gens)
    while frontier:
        new = []
        for h in frontier:
            for c, x in cyclic.items():
                if c <= h:
                    continue
                k = generated_subgroup(g, gens[h] + [x])
                if k not in gens:
                    gens[k] = gens[h] + [x]
                    new.append(k)
        frontier = new
    out = sorted(gens, key=subgroup_key)
    memo["subgroups"] = out
    memo["generators"] = gens
    return out


def subgroups_within(g: Group, h) -> list[frozenset]:
    h = frozenset(h)
    return [k for k in all_subgroups(g) if k <= h]


def normal_subgroups(g: Group) -> list[frozenset]:
    memo = g._memo
    if "normal" not in memo:
        memo["normal"] = [h for h in all_subgroups(g) if g.is_normal(h)]
    return memo["normal"]


def maximal_subgroups(g: Group, h=None) -> list[frozenset]:
    """Maximal subgroups of ``h`` (default: of ``g``)."""
    h = g.whole if h is None else frozenset(h)
    below = [k for k in subgroups_within(g, h) if k != h]
    return [k for k in below if not any(k < m for m in below)]


def is_p_group(h, p) -> bool:
    return len(h) == p_part(len(h), p)


def sylow_subgroups(g: Group, p: int, within=None) -> list[frozenset]:
    """All Sylow ``p``-subgroups of ``within`` (default: ``g``)."""
    h = g.whole if within is None else frozenset(within)
    target = p_part(len(h), p)
    return [k for k in subgroups_within(g, h) if len(k) == target]


def sylow_subgroup(g: Group, p: int, containing=None, within=None) -> frozenset:
    """A Sylow ``p``-subgroup of ``within`` (default ``g``) containing ``containing``.

    Ties go to the lexicographically least element set.
    """
    if not is_prime(p):
        raise errors.InputError(f"{p} is not prime")
    if containing is not None:
        containing = frozenset(containing)
        if not is_p_group(containing, p):
            raise errors.ContainmentImpossible(
                f"the subgroup of order {len(containing)} is not a {p}-group")
    for k in sylow_subgroups(g, p, within):
        if containing is None or containing <= k:
            return k
    raise errors.ContainmentImpossible("the given p-subgroup lies outside the ambient subgroup")


def derived_subgroup(g: Group, h=None) -> frozenset:
    h = g.whole if h is None else frozenset(h)
    comms = {g.commutator(x, y) for x in h for y in h}
    return generated_subgroup(g, comms)


def derived_series(g: Group) -> list[frozenset]:
    series = [g.whole]
    while True:
        nxt = derived_subgroup(g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: Group) -> bool:
    return len(derived_series(g)[-1]) == 1


def hall_subgroup(g: Group, primes, within=None) -> frozenset:
    """A Hall ``primes``-subgroup of ``within`` (default ``g``); lexicographically least."""
    if not is_solvable(g):
        raise errors.NotSolvable(f"{g!r} is not solvable")
    h = g.whole if within is None else frozenset(within)
    target = pi_part(len(h), primes)
    for k in subgroups_within(g, h):
        if len(k) == target:
            return k
    raise AssertionError("solvable group without a Hall subgroup")


@dataclass(frozen=True)
class ChiefSeries:
    terms: list          # 1 = N_0 < N_1 < ... < N_k = G
    factor_orders: list  # [N_i : N_{i-1}]
    complement_counts: list

    @property
    def length(self) -> int:
        return len(self.factor_orders)

    @property
    def complemented_factors(self) -> int:
        return sum(1 for c in self.complement_counts if c > 0)


def _greedy_normal_series(g: Group) -> list[frozenset]:
    # at each step take the largest minimal normal subgroup over the current term;
    # for supersolvable groups this yields weakly decreasing prime factors
    normals = normal_subgroups(g)
    terms = [g.trivial]
    while len(terms[-1]) < g.order:
        cur = terms[-1]
        above = [n for n in normals if cur < n]
        minimal = [n for n in above if not any(m < n for m in above)]
        terms.append(min(minimal, key=lambda n: (-len(n), tuple(sorted(n)))))
    return terms


def count_complements(g: Group, n) -> int:
    """Number of subgroups ``K`` with ``K & N = 1`` and ``|K||N| = |G|``."""
    n = frozenset(n)
    need = g.order // len(n)
    return sum(1 for k in all_subgroups(g) if len(k) == need and len(k & n) == 1)


def chief_series(g: Group) -> ChiefSeries:
    """A chief series of a solvable group with complement counts.

    ``complement_counts[i]`` counts complements of ``N_{i+1}/N_i`` in ``G/N_i``,
    found by brute force in the quotient.
    """
    if not is_solvable(g):
        raise errors.NotSolvable(f"{g!r} is not solvable")
    terms = _greedy_normal_series(g)
    orders, counts = [], []
    for lo, hi in zip(terms, terms[1:]):
        orders.append(len(hi) // len(lo))
        q, proj = quotient_group(g, lo)
        counts.append(count_complements(q, {int(proj[x]) for x in hi}))
    return ChiefSeries(terms, orders, counts)


def is_supersolvable(g: Group) -> bool:
    if not is_solvable(g):
        return False
    return all(is_prime(k) for k in chief_series(g).factor_orders)


def is_elementary_abelian(g: Group, h) -> bool:
    h = frozenset(h)
    if len(h) == 1:
        return True
    if not is_prime_power(len(h)):
        return False
    p = prime_divisors(len(h))[0]
    return g.is_abelian(h) and all(g.power(x, p) == g.identity for x in h)


def complement_of(g: Group, h):
    """Some ``K`` with ``K & H = 1`` and ``HK = G``, or None."""
    h = frozenset(h)
    need = g.order // len(h)
    for k in all_subgroups(g):
        if len(k) == need and len(k & h) == 1:
            return k
    return None


def is_graded_subgroup_lattice(g: Group) -> bool:
    """All maximal chains of the subgroup lattice have equal length."""
    height = {}
    for h in all_subgroups(g):
        below = maximal_subgroups(g, h) if len(h) > 1 else []
        lens = {height[k] + 1 for k in below} or {0}
        if len(lens) > 1:
            return False
        height[h] = lens.pop()
    return True


@dataclass
class ClassificationReport:
    solvable: bool
    supersolvable: bool
    sylows_elementary_abelian: bool
    complemented: bool
    witnesses: dict = field(default_factory=dict)


def classify(g: Group) -> ClassificationReport:
    """Decide solvable / supersolvable / elementary abelian Sylows / complemented."""
    witnesses = {}
    series = derived_series(g)
    solvable = len(series[-1]) == 1
    if not solvable:
        witnesses["solvable"] = {"perfect_subgroup": series[-1]}

    supersolvable = False
    if solvable:
        cs = chief_series(g)
        bad = [i for i, k in enumerate(cs.factor_orders) if not is_prime(k)]
        supersolvable = not bad
        if bad:
            i = bad[0]
            witnesses["supersolvable"] = {"chief_factor": (cs.terms[i], cs.terms[i + 1])}
    else:
        witnesses["supersolvable"] = {"perfect_subgroup": series[-1]}

    sylow_ok = True
    for p in prime_divisors(g.order):
        s = sylow_subgroup(g, p)
        if not is_elementary_abelian(g, s):
            sylow_ok = False
            witnesses["sylows_elementary_abelian"] = {"sylow": s}
            break

    complemented = True
    for h in all_subgroups(g):
        if complement_of(g, h) is None:
            complemented = False
            witnesses["complemented"] = {"uncomplemented": h}
            break

    # P. Hall: complemented iff supersolvable with elementary abelian Sylows
    assert complemented == (supersolvable and sylow_ok), "classification is inconsistent"
    return ClassificationReport(solvable, supersolvable, sylow_ok, complemented, witnesses)


def unique_hall_extension(g: Group, h_n, h_0) -> frozenset:
    """The unique ``H_1`` between ``h_n`` and ``h_0`` with ``[h_0:H_1]`` a power of
    ``p`` and ``p`` not dividing ``[H_1:h_n]``, where ``p`` is the least prime
    dividing ``[h_0:h_n]``.
    """
    h_n, h_0 = frozenset(h_n), frozenset(h_0)
    if h_n == h_0:
        raise errors.EqualSubgroups("h_n and h_0 coincide")
    if not h_n < h_0:
        raise errors.PreconditionError("h_n is not contained in h_0")
    if not is_supersolvable(g):
        raise errors.NotSupersolvable(f"{g!r} is not supersolvable")
    p = min(factorize(len(h_0) // len(h_n)))
    pi = [q for q in prime_divisors(len(h_0)) if q <= p]
    others = [q for q in prime_divisors(len(h_0)) if q not in pi]
    k = hall_subgroup(g, others, within=h_0)
    return g.product_set(k, h_n)
