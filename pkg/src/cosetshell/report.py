"""The full pipeline for one group, collected into a JSON-ready dict."""

from __future__ import annotations

from . import errors
from .cosets import coset_poset, order_complex
from .expr import parse_group_expr
from .groups import DEFAULT_MAX_ORDER, Group
from .homology import MAX_CM_FACES, betti, is_seq_cm, predicted_spheres
from .labeling import build_context, labeled_hasse, with_square_free_factors
from .shelling import facet_order_from_labels, falling_chains, verify_coel, verify_shelling
from .subgroups import classify

SCHEMA = 1


def _set(g: Group, s) -> list[str]:
    return [g.names[x] for x in sorted(s)]


def _witnesses(g: Group, witnesses: dict) -> dict:
    out = {}
    for flag, w in witnesses.items():
        out[flag] = {k: ([_set(g, s) for s in v] if isinstance(v, tuple) else _set(g, v))
                     for k, v in w.items()}
    return out


def _error(exc: errors.CosetShellError) -> dict:
    return {"code": exc.code, "message": str(exc)}


def labeling_pipeline(g: Group, levels: str = "lex", decompose: bool = False) -> dict:
    """Build the labeling and run both certificates; refusals are reported, not raised.

    With ``decompose`` a group whose factors are not square free is first
    searched for an internal direct decomposition into square-free factors.
    """
    out = {"built": False, "refused": None, "presentation": None, "el_ok": None,
           "intervals": None, "violations": [], "shelling_ok": None, "zero_dimensional": False,
           "shelling_ok_by_convention": None, "falling_chains": None, "lh": None}
    try:
        if decompose:
            h = with_square_free_factors(g)
            out["presentation"] = "given" if h is g else "decomposed"
            g = h
        else:
            out["presentation"] = "given"
        ctx = build_context(g, levels)
        lh = labeled_hasse(ctx)
    except errors.PreconditionError as exc:
        out["refused"] = _error(exc)
        out["presentation"] = None
        return out
    out["built"] = True
    out["lh"] = lh
    rep = verify_coel(lh)
    out["el_ok"] = rep.ok
    out["intervals"] = rep.intervals
    out["violations"] = [{"bottom": _set(g, v.bottom.elements), "top": _set(g, v.top.elements),
                          "reason": v.reason} for v in rep.violations[:10]]
    out["falling_chains"] = len(falling_chains(lh))
    if rep.ok:
        complex_ = order_complex(coset_poset(g))
        res = verify_shelling(complex_, facet_order_from_labels(lh, rep))
        out["shelling_ok"] = res.ok
        out["zero_dimensional"] = complex_.dim == 0
        # a set of points counts as a bouquet of 0-spheres by convention
        out["shelling_ok_by_convention"] = res.ok or complex_.dim == 0
        if not res.ok:
            out["shelling_failure"] = {"index": res.index, "intersection": [
                [_set(g, c.elements) for c in face] for face in res.intersection]}
    return out


def run_report(expr, field="Q", levels: str = "lex", max_order: int = DEFAULT_MAX_ORDER,
               max_cm_faces: int = MAX_CM_FACES, decompose: bool = True) -> dict:
    """Classification, coset poset, labeling certificates and homology for one group.

    ``expr`` is a group expression or an already built :class:`Group`.  With
    ``decompose`` (the default) a group not given as a product of square-free
    groups is searched for such a decomposition before labeling.
    """
    g = expr if isinstance(expr, Group) else parse_group_expr(expr, max_order)
    cl = classify(g)
    rep = {
        "schema": SCHEMA,
        "group": {"expr": g.label, "order": g.order, "factor_orders": [len(f) for f in g.factors]},
        "classification": {
            "solvable": cl.solvable,
            "supersolvable": cl.supersolvable,
            "sylows_elementary_abelian": cl.sylows_elementary_abelian,
            "complemented": cl.complemented,
            "witnesses": _witnesses(g, cl.witnesses),
        },
    }
    shellable = None
    seq_cm = None
    if g.order == 1:
        rep["coset_poset"] = None
        rep["labeling"] = {"built": False, "refused": {"code": "TrivialGroup",
                                                        "message": "empty coset poset"}}
    else:
        poset = coset_poset(g)
        complex_ = order_complex(poset)
        rep["coset_poset"] = {
            "elements": len(poset),
            "covers": len(poset.covers),
            "dimension": complex_.dim,
            "facets": len(complex_.facets),
            "faces": complex_.num_faces(),
            "components": len(complex_.components()),
        }
        lab = labeling_pipeline(g, levels, decompose)
        lab.pop("lh")
        rep["labeling"] = lab
        if lab["built"]:
            shellable = bool(lab["el_ok"] and lab["shelling_ok_by_convention"])
        bv = betti(complex_, field)
        rep["betti"] = {"field": bv.field, "ranks": list(bv.ranks)}
        if cl.solvable:
            d, n = predicted_spheres(g)
            rep["predicted_spheres"] = {"dimension": d, "count": n}
        else:
            rep["predicted_spheres"] = None
        if complex_.num_faces() <= max_cm_faces:
            res = is_seq_cm(complex_, field, max_cm_faces)
            seq_cm = res.ok
            rep["seq_cm"] = {"value": res.ok, "witness": None if res.ok else {
                "skeleton": res.skeleton, "face": [_set(g, c.elements) for c in sorted(res.face)],
                "degree": res.degree, "rank": res.rank}}
        else:
            rep["seq_cm"] = {"value": None, "skipped": f"more than {max_cm_faces} faces"}

    comp = cl.complemented
    if shellable is not None:
        shell_agrees = shellable == comp
    elif not comp:
        shell_agrees = True  # no labeling is offered for a non-complemented group
    else:
        shell_agrees = None  # complemented, but not presented as a square-free product
    agreement = {
        "supersolvable_ea_iff_complemented":
            (cl.supersolvable and cl.sylows_elementary_abelian) == comp,
        "shellable_iff_complemented": shell_agrees,
        "seq_cm_iff_complemented": None if seq_cm is None else seq_cm == comp,
    }
    agreement["all"] = all(v for v in agreement.values() if v is not None)
    rep["agreement"] = agreement
    return rep
