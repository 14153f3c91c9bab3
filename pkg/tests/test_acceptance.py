"""Acceptance suite: ten end-to-end criteria, each timed against its budget.

Every criterion prints one ``ACCEPTANCE <n> PASS|FAIL`` line.  Under pytest
the lines are also repeated in the terminal summary; run this file directly
(``python3 tests/test_acceptance.py``) to see them without pytest.
"""

import itertools
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from catalog import sweep_catalog  # noqa: E402
from pivot_oracles import (all_subspaces, basis_of, lead_set, pivot_choices,  # noqa: E402
                           span)

from cosetshell.arith import prime_divisors  # noqa: E402
from cosetshell.cosets import (c0_subposet, coset_poset, order_complex,  # noqa: E402
                               pure_skeleton)
from cosetshell.expr import parse_group_expr  # noqa: E402
from cosetshell.gfpivots import GFMatrix, pivot_set, subgroup_pivots, w_down, w_up  # noqa: E402
from cosetshell.groups import quotient_group  # noqa: E402
from cosetshell.homology import MAX_CM_FACES, betti, is_seq_cm, predicted_spheres  # noqa: E402
from cosetshell.labeling import build_context, labeled_hasse, with_square_free_factors  # noqa: E402
from cosetshell.report import labeling_pipeline  # noqa: E402
from cosetshell.shelling import (facet_order_from_labels, falling_chains, verify_coel,  # noqa: E402
                                 verify_shelling)
from cosetshell.subgroups import (all_subgroups, classify, is_graded_subgroup_lattice,  # noqa: E402
                                  normal_subgroups)

RESULTS: list[str] = []


def _record(n, title, limit, start, checks):
    elapsed = time.perf_counter() - start
    failed = [name for name, ok in checks.items() if not ok]
    in_time = elapsed < limit
    ok = not failed and in_time
    detail = f"all {len(checks)} checks hold" if not failed else "failed: " + ", ".join(failed)
    if not in_time:
        detail += f"; over budget ({elapsed:.2f}s > {limit}s)"
    line = f"ACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}  {title}  [{elapsed:.2f}s / {limit}s]  {detail}"
    print(line)
    RESULTS.append(line)
    assert ok, line


def _pipeline(g, levels="lex"):
    lh = labeled_hasse(build_context(g, levels))
    rep = verify_coel(lh)
    k = order_complex(coset_poset(g))
    shell = verify_shelling(k, facet_order_from_labels(lh, rep)) if rep.ok else None
    return lh, rep, k, shell


def test_01_z4_not_shellable():
    start = time.perf_counter()
    g = parse_group_expr("Z4")
    k = order_complex(coset_poset(g))
    orders = list(itertools.permutations(k.facets))
    _record(1, "Z4 is disconnected and never shellable", 1.0, start, {
        "two components": len(k.components()) == 2,
        "betti (1,0)": betti(k).ranks == (1, 0),
        "24 orders tried": len(orders) == 24,
        "every order fails": not any(verify_shelling(k, o).ok for o in orders),
    })


def test_02_cyclic_prime_square_components():
    start = time.perf_counter()
    comps = {p: len(order_complex(coset_poset(parse_group_expr(f"Z{p * p}"))).components())
             for p in (2, 3)}
    _record(2, "C(Z_{p^2}) has p components for p = 2, 3", 1.0, start, {
        "Z4 has 2": comps[2] == 2, "Z9 has 3": comps[3] == 3})


def _full_checks(g, lh, rep, k, shell, want_betti, want_pred, want_falling):
    return {
        "labeling built": lh is not None,
        "EL on all intervals": rep.ok and rep.intervals > 0,
        "label order is a shelling": shell is not None and shell.ok,
        f"betti {want_betti}": betti(k).ranks == want_betti,
        f"predicted {want_pred}": predicted_spheres(g) == want_pred,
        f"{want_falling} falling chains": len(falling_chains(lh)) == want_falling,
    }


def test_03_z6_pipeline():
    start = time.perf_counter()
    g = parse_group_expr("Z6")
    lh, rep, k, shell = _pipeline(g, "prime")
    _record(3, "Z6 full pipeline", 1.0, start,
            _full_checks(g, lh, rep, k, shell, (0, 2), (1, 2), 2))


def test_04_klein_pipeline():
    start = time.perf_counter()
    g = parse_group_expr("Z2 x Z2")
    lh, rep, k, shell = _pipeline(g)
    _record(4, "Z2 x Z2 full pipeline", 1.0, start,
            _full_checks(g, lh, rep, k, shell, (0, 3), (1, 3), 3))


def test_05_s3_homology():
    start = time.perf_counter()
    g = parse_group_expr("S3")
    b = betti(order_complex(coset_poset(g))).ranks
    pred = predicted_spheres(g)
    _record(5, "S3 homology matches the chief-series prediction", 1.0, start, {
        "betti (0,8)": b == (0, 8),
        "predicted (1,8)": pred == (1, 8),
        "(1-3*3)(1-1*2) = 8": (1 - 3 * 3) * (1 - 1 * 2) == pred[1],
    })


def test_06_d6_pipeline():
    start = time.perf_counter()
    d6 = parse_group_expr("D6")
    g = with_square_free_factors(d6)
    checks = {"order 12": g.order == 12,
              "complemented": classify(d6).complemented,
              "decomposes as 2 x 6": sorted(len(f) for f in g.factors) == [2, 6]}
    for name, grp in (("D6", g), ("Z2 x S3", parse_group_expr("Z2 x S3"))):
        lh, rep, k, shell = _pipeline(grp)
        top = betti(k).ranks[-1]
        checks[f"{name}: EL"] = rep.ok
        checks[f"{name}: shelling"] = shell is not None and shell.ok
        checks[f"{name}: falling chains = top betti"] = len(falling_chains(lh)) == top > 0
    _record(6, "D6 = Z2 x S3 labeling, shelling and falling chains", 30.0, start, checks)


def test_07_a4_obstruction():
    start = time.perf_counter()
    g = parse_group_expr("A4")
    v4 = next(n for n in normal_subgroups(g) if len(n) == 4)
    k = order_complex(coset_poset(g))
    c0 = order_complex(c0_subposet(g, v4))
    q, _ = quotient_group(g, v4)
    res = is_seq_cm(k)
    _record(7, "A4: C0 is the pure 2-skeleton, has the homology of C(Z3), not seq-CM",
            60.0, start, {
                "C0 facets = pure 2-skeleton": set(c0.facets) == set(pure_skeleton(k, 2).facets),
                "betti(C0) = (2,0,0)": betti(c0).ranks == (2, 0, 0),
                "matches C(A4/V4)": betti(order_complex(coset_poset(q))).ranks == (2,),
                "quotient has order 3": q.order == 3,
                "not sequentially CM": not res.ok,
                "witness in the 2-skeleton": res.skeleton == 2,
            })


def test_08_pivot_properties():
    start = time.perf_counter()
    checks = {}
    for p, n in ((2, 4), (3, 3)):
        spaces = all_subspaces(p, n)
        mats = {s: GFMatrix.of(p, basis_of(s, p, n), n) for s in spaces}
        piv = {s: pivot_set(m) for s, m in mats.items()}
        size_ok = all(p ** len(piv[s]) == len(s) and piv[s] == lead_set(s) for s in spaces)
        mono_ok = up_ok = down_ok = True
        pairs = 0
        for u1, u2 in itertools.product(spaces, repeat=2):
            if not u1 < u2:
                continue
            pairs += 1
            mono_ok &= piv[u1] <= piv[u2]
            new = piv[u2] - piv[u1]
            mids = [w for w in spaces if u1 <= w <= u2]
            ups = [w for w in mids if lead_set(w) == piv[u1] | {max(new)}]
            downs = [w for w in mids if lead_set(w) == piv[u2] - {min(new)}]
            up_ok &= len(ups) == 1 and span(w_up(p, mats[u1], mats[u2]).rows, p, n) == ups[0]
            down_ok &= len(downs) == 1 and span(w_down(p, mats[u1], mats[u2]).rows, p, n) == downs[0]
        tag = f"GF({p})^{n}"
        checks[f"{tag}: |I(U)| = dim U"] = size_ok
        checks[f"{tag}: I monotone over {pairs} pairs"] = mono_ok
        checks[f"{tag}: w_up unique and matched"] = up_ok
        checks[f"{tag}: w_down unique and matched"] = down_ok
    _record(8, "pivot sets over GF(2)^4 and GF(3)^3, exhaustive", 60.0, start, checks)


def test_09_equivalence_sweep():
    start = time.perf_counter()
    bad_12, bad_24, bad_cm, bad_graded = [], [], [], []
    cm_checked = cm_skipped = 0
    catalog = sweep_catalog()
    for expr, _ in catalog:
        g = parse_group_expr(expr)
        cl = classify(g)
        comp = cl.complemented
        if comp != (cl.supersolvable and cl.sylows_elementary_abelian):
            bad_12.append(expr)
        if cl.supersolvable != is_graded_subgroup_lattice(g):
            bad_graded.append(expr)
        lab = labeling_pipeline(g, decompose=True)
        lab.pop("lh")
        succeeded = bool(lab["built"] and lab["el_ok"] and lab["shelling_ok_by_convention"])
        if succeeded != comp:
            bad_24.append(expr)
        k = order_complex(coset_poset(g))
        if k.num_faces() <= MAX_CM_FACES:
            cm_checked += 1
            if is_seq_cm(k).ok != comp:
                bad_cm.append(expr)
        else:
            cm_skipped += 1
    print(f"  sweep: {len(catalog)} groups, seq-CM checked on {cm_checked}, "
          f"skipped {cm_skipped} above {MAX_CM_FACES} faces")
    _record(9, f"equivalences over {len(catalog)} groups of order <= 16", 600.0, start, {
        f"complemented iff supersolvable with EA Sylows {bad_12}": not bad_12,
        f"supersolvable iff graded subgroup lattice {bad_graded}": not bad_graded,
        f"labeling pipeline succeeds iff complemented {bad_24}": not bad_24,
        f"seq-CM iff complemented ({cm_checked} checked) {bad_cm}": not bad_cm,
    })


def test_10_pivots_well_defined():
    start = time.perf_counter()
    checks = {}
    for expr, cap in (("E2^3", 8), ("Z6 x S3", 12)):
        g = parse_group_expr(expr)
        ok, tried = True, 0
        for h in all_subgroups(g):
            if len(h) > cap:
                continue
            for p in prime_divisors(g.order):
                default = subgroup_pivots(g, h, p)
                for hs, gs, b in pivot_choices(g, h, p):
                    tried += 1
                    ok &= subgroup_pivots(g, h, p, h_sylow=hs, g_sylow=gs, basis=b) == default
        checks[f"{expr}: {tried} choices agree"] = ok and tried > 0
        print(f"  {expr}: {tried} (H*, G*, basis) choices compared")
    _record(10, "pivot invariant independent of Sylow and basis choices", 60.0, start, checks)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
