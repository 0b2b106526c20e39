"""Exhaustive search verdicts on small planes.

The found/notfound verdicts below are regression pins: each was confirmed
by an independent brute-force enumeration outside this package before
being frozen here.
"""

import pytest

from planegraphs.graphs import cycle_graph, gear_graph, verify_embedding, wheel_graph
from planegraphs.oracle import exists_embedding, pancyclicity_table
from planegraphs.plane import ag_from_field, pg_from_field


def _pg(q):
    return pg_from_field(q).to_generic().plane


def test_no_gear_in_order_two():
    plane = _pg(2)
    res = exists_embedding(gear_graph(3), plane)
    assert res.status == "notfound"
    assert res.expansions == 0  # 7 vertices need 9 distinct lines; only 7 exist
    for n in (4, 5):
        assert exists_embedding(gear_graph(n), plane).status == "notfound"


def test_small_gears_found():
    assert exists_embedding(gear_graph(3), _pg(3)).status == "found"
    plane4 = _pg(4)
    for n in (3, 4, 5):
        assert exists_embedding(gear_graph(n), plane4).status == "found"


def test_gear_four_in_order_three_exists():
    # an exhaustive check disproves the folklore that G_4 needs order >= 4:
    # nine points and twelve distinct joining lines fit inside PG(2,3)
    plane = _pg(3)
    res = exists_embedding(gear_graph(4), plane)
    assert res.status == "found"
    rep = verify_embedding(gear_graph(4), res.embedding, plane)
    assert rep.ok, rep.violations


def test_wheel_four_in_order_three_impossible():
    # the tight odd case fails at q=3: W_4 has no room in PG(2,3)
    res = exists_embedding(wheel_graph(4), _pg(3))
    assert res.status == "notfound"


def test_found_embeddings_verify():
    plane = _pg(3)
    for graph in (cycle_graph(9), cycle_graph(13), wheel_graph(3), gear_graph(3)):
        res = exists_embedding(graph, plane)
        assert res.status == "found"
        assert verify_embedding(graph, res.embedding, plane).ok


def test_static_prunes_cost_nothing():
    plane = _pg(2)
    # more vertices than points
    res = exists_embedding(cycle_graph(8), plane)
    assert (res.status, res.expansions) == ("notfound", 0)
    # center degree exceeds the pencil
    res = exists_embedding(wheel_graph(4), plane)
    assert (res.status, res.expansions) == ("notfound", 0)


def test_budget_exhaustion():
    res = exists_embedding(cycle_graph(13), _pg(3), budget=5)
    assert res.status == "budget"
    assert res.expansions >= 5
    assert res.embedding is None


def test_pancyclicity_tables():
    table = pancyclicity_table(_pg(2))
    assert sorted(table) == list(range(3, 8))
    assert all(r.status == "found" for r in table.values())

    ag3 = ag_from_field(3).to_generic().plane
    table = pancyclicity_table(ag3)
    assert sorted(table) == list(range(3, 10))
    assert all(r.status == "found" for r in table.values())

    table = pancyclicity_table(_pg(3))
    assert sorted(table) == list(range(3, 14))
    assert all(r.status == "found" for r in table.values())


def test_pancyclicity_guard():
    with pytest.raises(ValueError):
        pancyclicity_table(_pg(5))
