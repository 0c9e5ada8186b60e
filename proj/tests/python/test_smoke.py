import pytest

import convlab


def test_converge_examples():
    c2 = convlab.Carrier(2)
    assert convlab.converge(c2, "[;{0},{1}]", "ls") == [3]
    assert convlab.converge(convlab.Carrier(4), "[;{0}]", "s") == [1]
    assert convlab.converge(c2, "[{0,1};{0}]", "li") == [0, 1]


def test_parse_error_carries_position():
    with pytest.raises(convlab.ParseError, match="position 8"):
        convlab.parse_sequence(convlab.Carrier(2), "[{0};{1}")


def test_scale_limits():
    with pytest.raises(convlab.ScaleError):
        convlab.Carrier(6)
    with pytest.raises(convlab.ScaleError):
        convlab.build_diagram(convlab.Carrier(5))


def test_laws_and_star():
    c = convlab.Carrier(3)
    ls, li, s = (convlab.law(c, k) for k in ("ls", "li", "s"))
    assert convlab.equal_conv(convlab.star(ls), ls)
    assert convlab.equal_conv(convlab.meet_conv(ls, li), s)
    assert convlab.leq_conv(s, ls) and not convlab.leq_conv(ls, s)
    zero = convlab.InfClass.from_masks(c, [0])
    assert ls(zero) == list(range(8))
    assert s(zero) == [0]


def test_topologies():
    counts = [convlab.synthesize(convlab.law(convlab.Carrier(n), "ls")).open_count for n in (1, 2, 3, 4)]
    assert counts == [3, 6, 20, 168]
    c = convlab.Carrier(2)
    o_ls = convlab.synthesize(convlab.law(c, "ls"))
    o_li = convlab.synthesize(convlab.law(c, "li"))
    assert convlab.join_topologies(o_ls, o_li) == convlab.discrete_topology(c)
    assert o_ls.coarser_than(convlab.discrete_topology(c))
    x = convlab.parse_sequence(c, "[;{0},{1}]")
    assert o_ls.limits(x) == [3]


def test_diagram():
    doc = convlab.diagram_json(3)
    assert doc["collapse"] == {"convergences": 3, "topologies": 3}
    report = convlab.build_diagram(convlab.Carrier(2))
    assert report.ok
    assert report.collapse == (3, 3)
    assert report.emit("dot").startswith("digraph")


def test_submeasure_and_verify():
    ax = convlab.submeasure_axioms(convlab.Carrier(3), "counting")
    assert all(ax.values())
    results = convlab.verify(atoms=2, seed=3, samples=50)
    assert [r["index"] for r in results] == list(range(1, 13))
    assert all(r["passed"] for r in results)
