"""Checking coEL labelings and shellings, and reading off falling chains."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import errors
from .cosets import Poset, SimplicialComplex, interval, sort_key
from .labeling import LabeledHasse

NO_INCREASING = "NoIncreasingChain"
MULTIPLE_INCREASING = "MultipleIncreasingChains"
NOT_LEX_FIRST = "NotLexFirst"


@dataclass
class ELViolation:
    bottom: object
    top: object
    reason: str
    chains: list  # (top-down chain, label word) pairs


@dataclass
class ELReport:
    ok: bool
    violations: list = field(default_factory=list)
    intervals: int = 0


def _increasing(word) -> bool:
    return all(a < b for a, b in zip(word, word[1:]))


def _weakly_decreasing(word) -> bool:
    return all(a >= b for a, b in zip(word, word[1:]))


def _paths_down(lh: LabeledHasse, top):
    """Every downward cover path from ``top``, grouped by its last element."""
    lat = lh.lattice
    found: dict = {}
    stack = [((top,), ())]
    while stack:
        chain, word = stack.pop()
        for lo in lat.down[chain[-1]]:
            c, w = chain + (lo,), word + (lh.label(lo, chain[-1]),)
            found.setdefault(lo, []).append((c, w))
            stack.append((c, w))
    return found


def verify_coel(lh: LabeledHasse, max_violations: int = 50) -> ELReport:
    """Check the EL conditions on every interval of the dual lattice.

    For each ``a < b`` the maximal chains of ``[a, b]`` are read from ``b``
    down to ``a``; exactly one must have strictly increasing labels and its
    word must be lexicographically smaller than every other word.
    """
    lat = lh.lattice
    for lo, hi in lat.covers:
        lh.label(lo, hi)
    violations = []
    count = 0
    for top in lat.elements:
        for bottom, chains in _paths_down(lh, top).items():
            count += 1
            inc = [cw for cw in chains if _increasing(cw[1])]
            reason = None
            if not inc:
                reason = NO_INCREASING
            elif len(inc) > 1:
                reason = MULTIPLE_INCREASING
            elif any(w <= inc[0][1] for c, w in chains if c != inc[0][0]):
                reason = NOT_LEX_FIRST
            if reason and len(violations) < max_violations:
                violations.append(ELViolation(bottom, top, reason, sorted(chains, key=lambda cw: cw[1])))
            elif reason:
                violations.append(ELViolation(bottom, top, reason, []))
    return ELReport(not violations, violations, count)


def restrict(lh: LabeledHasse, a, b) -> LabeledHasse:
    """The labelled interval ``[a, b]``."""
    sub = interval(lh.lattice, a, b)
    labels = {c: lh.labels[c] for c in sub.covers}
    return LabeledHasse(sub, labels, lh.context)


def _top_down_chains(lat: Poset):
    top = lat.top
    chains = []
    stack = [(top,)]
    while stack:
        chain = stack.pop()
        downs = lat.down[chain[-1]]
        if not downs:
            chains.append(chain)
        for lo in downs:
            stack.append(chain + (lo,))
    return chains


def facet_order_from_labels(lh: LabeledHasse, report: ELReport | None = None) -> list[frozenset]:
    """Facets of the proper part in lexicographic order of their label words.

    Ties between equal words fall back to the canonical chain order.
    """
    if report is None:
        report = verify_coel(lh)
    if not report.ok:
        raise errors.ELNotVerified("the labeling failed the EL check")
    lat = lh.lattice
    chains = _top_down_chains(lat)
    chains.sort(key=lambda c: (lh.word(c), lat.chain_key(c[::-1])))
    return [frozenset(c[1:-1]) for c in chains]


def falling_chains(lh: LabeledHasse) -> list[tuple]:
    """Maximal chains (top-down) whose label words weakly decrease."""
    lat = lh.lattice
    chains = [c for c in _top_down_chains(lat) if _weakly_decreasing(lh.word(c))]
    chains.sort(key=lambda c: lat.chain_key(c[::-1]))
    return chains


@dataclass
class ShellingResult:
    ok: bool
    index: int | None = None        # 0-based position of the first bad facet
    intersection: list = field(default_factory=list)  # its maximal faces

    def __bool__(self):
        return self.ok


def verify_shelling(k: SimplicialComplex, order) -> ShellingResult:
    """Check that each facet meets the union of its predecessors in a nonempty
    union of codimension-one faces of itself."""
    order = [frozenset(f) for f in order]
    if len(order) != len(k.facets) or set(order) != set(k.facets):
        raise errors.NotAPermutation("order is not a permutation of the facets")
    seen: set = set()
    for n, f in enumerate(order):
        fl = sorted(f, key=sort_key)
        subfaces = [frozenset(c) for r in range(1, len(fl)) for c in itertools.combinations(fl, r)]
        if n > 0:
            meet = [s for s in subfaces if s in seen]
            maximal = [s for s in meet if not any(s < t for t in meet)]
            bad = not meet or any(len(s) != len(f) - 1 for s in maximal)
            if bad:
                return ShellingResult(False, n, sorted(maximal, key=lambda s: sorted(map(sort_key, s))))
        seen.update(subfaces)
        seen.add(f)
    return ShellingResult(True)
