import itertools

import numpy as np
import pytest

from cosetshell import errors
from cosetshell.groups import (builtin_group, direct_product, dumps_table, generated_subgroup,
                               group_from_table, loads_table, quotient_group, subgroup_as_group)
from cosetshell.expr import parse_group_expr

KLEIN = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def brute_associative(g):
    n = g.order
    return all(g.table[g.table[a, b], c] == g.table[a, g.table[b, c]]
               for a, b, c in itertools.product(range(n), repeat=3))


def center(g):
    return [z for z in g.elements if all(g.mul(z, x) == g.mul(x, z) for x in g.elements)]


CATALOG = ["Z1", "Z2", "Z6", "S3", "A4", "D4", "D5", "E2^3", "Z2 x Z2", "Z2 x S3", "Z3 x Z3"]


@pytest.mark.parametrize("expr", CATALOG)
def test_catalog_tables_are_groups(expr):
    g = parse_group_expr(expr)
    assert brute_associative(g)
    e = g.identity
    for x in g.elements:
        assert g.mul(e, x) == x == g.mul(x, e)
        assert g.mul(x, g.inv(x)) == e
    # every row is a permutation
    assert all(sorted(row) == list(range(g.order)) for row in g.table.tolist())


def test_builtin_examples():
    assert builtin_group("cyclic", 1).order == 1
    z6 = builtin_group("cyclic", 6)
    ar = np.arange(6)
    assert (z6.table == (ar[:, None] + ar[None, :]) % 6).all()
    assert z6.is_abelian()
    s3 = builtin_group("symmetric", 3)
    assert s3.order == 6 and not s3.is_abelian()
    assert center(s3) == [s3.identity]
    assert builtin_group("alternating", 4).order == 12
    assert builtin_group("dihedral", 5).order == 10
    assert builtin_group("elementary", 3, 2).order == 8


def test_from_table_examples():
    assert group_from_table(1, [[0]]).order == 1
    z2 = group_from_table(2, [[0, 1], [1, 0]])
    assert z2.element_order(1) == 2
    k = group_from_table(4, KLEIN)
    assert all(k.mul(x, x) == k.identity for x in k.elements)
    assert sum(k.element_order(x) == 2 for x in k.elements) == 3


def test_identity_need_not_be_zero():
    # Z_3 with elements permuted so that 2 is the identity
    t = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g = group_from_table(3, t)
    assert g.identity == 2


@pytest.mark.parametrize("table, err", [
    ([[0, 1], [1, 1]], errors.NoInverse),
    ([[0, 1, 2], [1, 0, 2], [2, 2, 0]], errors.NotAssociative),
    ([[0, 1], [1, 2]], errors.BadTable),                      # entry out of range
    ([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
     errors.NotAssociative),                                   # a Latin square, not a group
    ([[1, 0], [0, 1]], None),
])
def test_bad_tables(table, err):
    if err is None:
        assert group_from_table(2, table).identity == 1
        return
    with pytest.raises(err):
        group_from_table(len(table), table)


def test_no_identity():
    # x*y = -x-y mod 3 is a Latin square with no identity element
    with pytest.raises(errors.NoIdentity):
        group_from_table(3, [[0, 2, 1], [2, 1, 0], [1, 0, 2]])


def test_order_cap():
    with pytest.raises(errors.OrderCapExceeded):
        builtin_group("cyclic", 50, max_order=20)
    with pytest.raises(errors.OrderCapExceeded):
        builtin_group("symmetric", 9)
    with pytest.raises(errors.OrderCapExceeded):
        direct_product(builtin_group("cyclic", 5), builtin_group("cyclic", 5), max_order=20)


def test_unsupported_kind():
    with pytest.raises(errors.UnsupportedKind):
        builtin_group("quaternion", 8)
    with pytest.raises(errors.InputError):
        builtin_group("elementary", 2, 4)


def test_direct_product_factors():
    z2 = builtin_group("cyclic", 2)
    k = direct_product(z2, z2)
    assert k.order == 4 and [len(f) for f in k.factors] == [2, 2]
    g = parse_group_expr("Z6 x S3")
    assert g.order == 36 and [len(f) for f in g.factors] == [6, 6]
    g1, g2 = g.factors
    # unique factorization g = g1 * g2
    prods = {}
    for a in g1:
        for b in g2:
            prods.setdefault(g.mul(a, b), []).append((a, b))
    assert sorted(prods) == list(g.elements)
    assert all(len(v) == 1 for v in prods.values())
    assert g.is_normal(g1) and g.is_normal(g2)


def test_product_with_trivial():
    s3 = builtin_group("symmetric", 3)
    g = direct_product(s3, builtin_group("cyclic", 1))
    assert (g.table == s3.table).all()


def test_generated_subgroup_examples():
    z6 = builtin_group("cyclic", 6)
    assert generated_subgroup(z6, []) == {0}
    assert generated_subgroup(z6, [2]) == {0, 2, 4}
    s3 = builtin_group("symmetric", 3)
    t = next(x for x in s3.elements if s3.element_order(x) == 2)
    c = next(x for x in s3.elements if s3.element_order(x) == 3)
    assert generated_subgroup(s3, [t, c]) == s3.whole


@pytest.mark.parametrize("expr, n_gens, order", [
    ("Z6", [0], 6), ("Z6", [0, 2, 4], 2), ("A4", None, 3), ("S3", None, 2)])
def test_quotients(expr, n_gens, order):
    g = parse_group_expr(expr)
    if n_gens is None:
        from cosetshell.subgroups import normal_subgroups
        n = [h for h in normal_subgroups(g) if len(h) == g.order // order][0]
    else:
        n = frozenset(n_gens)
    q, proj = quotient_group(g, n)
    assert q.order == order
    for x, y in itertools.product(g.elements, repeat=2):
        assert proj[g.mul(x, y)] == q.mul(int(proj[x]), int(proj[y]))


def test_quotient_by_trivial_is_isomorphic():
    g = builtin_group("symmetric", 3)
    q, proj = quotient_group(g, g.trivial)
    assert q.order == 6 and sorted(proj.tolist()) == list(range(6))


def test_quotient_not_normal():
    s3 = builtin_group("symmetric", 3)
    t = next(x for x in s3.elements if s3.element_order(x) == 2)
    with pytest.raises(errors.NotNormal):
        quotient_group(s3, {s3.identity, t})
    with pytest.raises(errors.NotSubgroup):
        quotient_group(s3, {s3.identity, t, 5})


def test_subgroup_as_group():
    s3 = builtin_group("symmetric", 3)
    a3 = frozenset(x for x in s3.elements if s3.element_order(x) in (1, 3))
    h, emb = subgroup_as_group(s3, a3)
    assert h.order == 3 and emb == sorted(a3)
    for i, j in itertools.product(range(3), repeat=2):
        assert emb[h.mul(i, j)] == s3.mul(emb[i], emb[j])


def test_table_json_round_trip():
    g = parse_group_expr("Z2 x S3")
    h = loads_table(dumps_table(g))
    assert (h.table == g.table).all()
    assert h.factors == g.factors and h.names == g.names
    with pytest.raises(errors.BadTable):
        loads_table("not json")
    with pytest.raises(errors.BadFactors):
        loads_table('{"order": 4, "table": %s, "factors": [[0, 1], [0, 1]]}' % KLEIN)


def test_sampled_associativity_above_limit():
    # order 72 exceeds the exhaustive limit; the sampled check still accepts a real group
    g = parse_group_expr("S3 x Z12")
    assert g.order == 72
    h = group_from_table(72, g.table.tolist())
    assert h.identity == g.identity
