import pytest

from maroni.combinatorics import (
    BoundaryType,
    HurwitzParams,
    Partition,
    enumerate_boundary_types,
    enumerate_partitions,
    gcd_profile,
    make_boundary_type,
    parse_partition,
)
from maroni.errors import DomainError, ParityError


def partitions_oracle(d, cap=None):
    """Independent recursive enumeration (ascending parts, then reversed)."""
    cap = d if cap is None else cap
    if d == 0:
        return [()]
    out = []
    for largest in range(1, min(cap, d) + 1):
        for rest in partitions_oracle(d - largest, largest):
            out.append((largest,) + rest)
    return out


KNOWN_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22, 9: 30,
                10: 42, 11: 56, 12: 77}


def test_partition_enumeration_matches_oracle():
    for d in range(1, 13):
        got = {p.parts for p in enumerate_partitions(d)}
        assert got == set(partitions_oracle(d))
        assert len(enumerate_partitions(d)) == KNOWN_COUNTS[d]


def test_partition_enumeration_examples():
    parts = [p.parts for p in enumerate_partitions(3)]
    assert parts == [(3,), (2, 1), (1, 1, 1)]
    assert [p.m for p in enumerate_partitions(3)] == [3, 2, 1]
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]
    fives = enumerate_partitions(5)
    assert len(fives) == 7
    by_parts = {p.parts: p for p in fives}
    assert by_parts[(4, 1)].m == 4
    assert by_parts[(3, 2)].m == 6


def test_partition_enumeration_rejects_nonpositive():
    with pytest.raises(DomainError):
        enumerate_partitions(0)


def test_partition_validation_and_parse():
    with pytest.raises(DomainError):
        Partition((1, 2))
    with pytest.raises(DomainError):
        Partition((3, 0))
    assert Partition.of(1, 3, 2).parts == (3, 2, 1)
    assert str(Partition((3, 2, 1))) == "(3|2|1)"
    assert parse_partition("(3|2|1)") == Partition((3, 2, 1))


def test_gcd_profile_examples():
    assert gcd_profile(Partition((3,))).delta == (0, 2, 2, 0)
    assert gcd_profile(Partition((1, 1, 1))).delta == (0, 0)
    assert gcd_profile(Partition((4,))).delta == (0, 3, 2, 3, 0)
    # column 0 carries the parts themselves
    prof = gcd_profile(Partition((4, 2)))
    assert [row[0] for row in prof.d_table] == [4, 2]


def test_delta_symmetry_and_nonnegativity():
    for d in range(1, 13):
        for mu in enumerate_partitions(d):
            delta = gcd_profile(mu).delta
            m = mu.m
            assert delta[0] == delta[m] == 0
            assert all(x >= 0 for x in delta)
            assert all(delta[i] == delta[m - i] for i in range(m + 1))


def test_hurwitz_params_validation():
    p = HurwitzParams(4, 3)
    assert p.k == 1 and p.b == 12
    with pytest.raises(DomainError):
        HurwitzParams(2, 1)
    with pytest.raises(DomainError):
        HurwitzParams(3, 3)
    with pytest.raises(DomainError):
        HurwitzParams(4, 0)


def test_make_boundary_type_division_example():
    bt = make_boundary_type(HurwitzParams(4, 3), 5, Partition((4,)))
    assert (bt.q, bt.r, bt.c) == (1, 1, 1)
    assert bt.l == 7


def test_make_boundary_type_parity_rejection():
    with pytest.raises(ParityError):
        make_boundary_type(HurwitzParams(3, 2), 3, Partition((1, 1, 1)))


def test_make_boundary_type_range_check():
    p = HurwitzParams(3, 2)
    with pytest.raises(DomainError):
        make_boundary_type(p, 1, Partition((3,)))
    with pytest.raises(DomainError):
        make_boundary_type(p, p.b - 1, Partition((3,)))
    with pytest.raises(DomainError):
        make_boundary_type(p, 4, Partition((2, 2)))


def test_zero_remainder_example():
    bt = make_boundary_type(HurwitzParams(3, 4), 4, Partition((3,)))
    assert (bt.r, bt.c) == (1, 0)


def test_enumeration_d3_g2():
    types = enumerate_boundary_types(HurwitzParams(3, 2))
    keys = {(bt.j, bt.mu.parts) for bt in types}
    assert keys == {
        (2, (3,)), (4, (3,)), (3, (2, 1)), (2, (1, 1, 1)), (4, (1, 1, 1)),
    }
    assert all(bt.j <= bt.l for bt in types)


def test_enumeration_order_is_j_then_reverse_lex():
    types = enumerate_boundary_types(HurwitzParams(3, 2))
    seen = [(bt.j, bt.mu.parts) for bt in types]
    assert seen == sorted(seen, key=lambda t: (t[0], tuple(-x for x in t[1])))


def test_imbalance_depends_on_residue_only():
    params = HurwitzParams(4, 9)  # b = 30
    period = 2 * 3
    for mu in enumerate_partitions(4):
        for j in range(2, params.b // 2 + 1):
            if (j + 4 - mu.n) % 2 != 0 or j + period > params.b - 2:
                continue
            bt = make_boundary_type(params, j, mu)
            shifted = make_boundary_type(params, j + period, mu)
            assert bt.c == shifted.c and bt.r == shifted.r


def test_c_versus_cprime_invariant():
    for d, g in [(3, 2), (3, 6), (4, 3), (4, 9), (5, 8), (6, 10)]:
        params = HurwitzParams(d, g)
        for bt in enumerate_boundary_types(params):
            lhs = abs(bt.c) * (abs(bt.c) - 2 * (d - 1))
            rhs = abs(bt.cprime) * (abs(bt.cprime) - 2 * (d - 1))
            assert lhs == rhs
            flip = bt.flipped()
            assert (flip.c, flip.cprime) == (bt.cprime, bt.c)


def test_boundary_type_is_hashable_and_frozen():
    bt = make_boundary_type(HurwitzParams(3, 2), 2, Partition((3,)))
    assert isinstance(bt, BoundaryType)
    assert bt.canonical_j == 2 and bt.is_canonical
    with pytest.raises(AttributeError):
        bt.j = 4
