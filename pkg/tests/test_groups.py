"""Finite groups: table verification against brute-force axiom checks, the
builtin groups against their known structure."""

from __future__ import annotations

import itertools

import pytest

from autcosets.groups import (
    FiniteGroup,
    GroupAxiomError,
    Subgroup,
    TupleIndex,
    builtin_group,
    group_from_dict,
    group_to_dict,
)


def brute_check_axioms(mul, identity):
    n = len(mul)
    for a in range(n):
        if mul[identity][a] != a or mul[a][identity] != a:
            return False
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return False
    for a in range(n):
        if not any(mul[a][b] == identity and mul[b][a] == identity for b in range(n)):
            return False
    return True


def element_orders(k: FiniteGroup):
    orders = []
    for a in range(k.order):
        acc = a
        n = 1
        while acc != k.identity:
            acc = k.mul[acc][a]
            n += 1
        orders.append(n)
    return sorted(orders)


@pytest.mark.parametrize("name", ["c1", "c2", "c3", "c6", "s3", "d8", "q8"])
def test_builtin_tables_satisfy_axioms(name):
    k = builtin_group(name)
    assert brute_check_axioms(k.mul, k.identity)
    for a in range(k.order):
        assert k.mul[a][k.inv[a]] == k.identity


def test_builtin_structure():
    c4 = builtin_group("c4")
    assert c4.order == 4 and element_orders(c4) == [1, 2, 4, 4]

    s3 = builtin_group("s3")
    assert s3.order == 6
    assert element_orders(s3) == [1, 2, 2, 2, 3, 3]
    assert any(s3.mul[a][b] != s3.mul[b][a] for a in range(6) for b in range(6))

    d8 = builtin_group("d8")
    assert d8.order == 8
    assert element_orders(d8) == [1, 2, 2, 2, 2, 2, 4, 4]
    center = [
        a
        for a in range(8)
        if all(d8.mul[a][b] == d8.mul[b][a] for b in range(8))
    ]
    assert len(center) == 2

    q8 = builtin_group("q8")
    assert q8.order == 8
    assert element_orders(q8) == [1, 2, 4, 4, 4, 4, 4, 4]  # unique element of order 2
    # i * j = k, j * i = -k in the documented ordering 1,-1,i,-i,j,-j,k,-k
    assert q8.mul[2][4] == 6
    assert q8.mul[4][2] == 7


def test_builtin_rejects_unknown():
    with pytest.raises(ValueError):
        builtin_group("e7")
    with pytest.raises(ValueError):
        builtin_group("c0")


def test_table_validation_rejects_broken_tables():
    good = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    FiniteGroup(good)
    bad = [row[:] for row in good]
    bad[1][2] = 0  # breaks associativity/cancellation
    with pytest.raises(GroupAxiomError):
        FiniteGroup(bad)
    with pytest.raises(GroupAxiomError):
        FiniteGroup(good, identity=1)
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[0, 1], [1]])
    with pytest.raises(GroupAxiomError):
        FiniteGroup([[0, 5], [1, 0]])
    with pytest.raises(GroupAxiomError):
        FiniteGroup([])


def test_conjugate():
    s3 = builtin_group("s3")
    for u in range(6):
        for a in range(6):
            assert s3.conjugate(u, a) == s3.mul[s3.mul[u][a]][s3.inv[u]]


def test_group_json_roundtrip():
    s3 = builtin_group("s3")
    doc = group_to_dict(s3)
    assert doc["order"] == 6 and doc["unit"] == 0
    again = group_from_dict(doc)
    assert again.mul == s3.mul and again.identity == s3.identity


@pytest.mark.parametrize(
    "doc",
    [
        [],
        {"order": 2},
        {"order": 3, "mul": [[0, 1], [1, 0]], "unit": 0},
        {"mul": [[0, 1], [1, 1]], "unit": 0},
        {"mul": "nope"},
    ],
)
def test_group_json_rejects_malformed(doc):
    with pytest.raises(ValueError):
        group_from_dict(doc)


def test_subgroup_validation():
    s3 = builtin_group("s3")
    Subgroup(s3, [0, 3, 4])  # the 3-cycles with the unit
    assert len(Subgroup.trivial(s3)) == 1
    assert len(Subgroup.whole(s3)) == 6
    with pytest.raises(GroupAxiomError):
        Subgroup(s3, [3, 4])  # no unit
    with pytest.raises(GroupAxiomError):
        Subgroup(s3, [0, 3])  # not closed: 3*3 = 4
    with pytest.raises(GroupAxiomError):
        Subgroup(s3, [0, 9])
    assert 3 in Subgroup(s3, [0, 3, 4])


def test_tuple_index_roundtrip_and_order():
    ti = TupleIndex(3, 4)
    assert ti.n_points == 81
    for idx in range(81):
        point = ti.decode(idx)
        assert ti.encode(point) == idx
    # coordinate 1 is least significant
    assert ti.decode(1) == (1, 0, 0, 0)
    assert ti.decode(3) == (0, 1, 0, 0)
    assert ti.encode((2, 1, 0, 2)) == 2 + 1 * 3 + 2 * 27
    # exhaustive against explicit mixed-radix arithmetic
    for point in itertools.product(range(3), repeat=4):
        expected = sum(point[c] * 3**c for c in range(4))
        assert ti.encode(point) == expected
    assert ti.digit(ti.encode((2, 1, 0, 2)), 2) == 1


def test_tuple_index_validation():
    ti = TupleIndex(2, 3)
    with pytest.raises(ValueError):
        ti.encode((0, 1))
    with pytest.raises(ValueError):
        ti.encode((0, 1, 2))
    with pytest.raises(ValueError):
        ti.decode(8)
    with pytest.raises(ValueError):
        TupleIndex(0, 2)
    assert TupleIndex(5, 0).n_points == 1
    assert TupleIndex(5, 0).decode(0) == ()
