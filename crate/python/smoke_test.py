"""Smoke test for the pysofic extension module."""

import json

import pysofic

E2 = "alphabet: a b\nvertices: p q\nedge: p a q\nedge: q b p\n"
E5 = "alphabet: a b c\nvertices: u v\nedge: u a u\nedge: u c v\nedge: v b v\n"


def main():
    g = pysofic.Graph.parse(E2)
    assert g.vertices == ["p", "q"]
    assert g.period(["p", "q"]) == 2
    a = pysofic.Analysis(g)
    assert a.is_chain_transitive() and not a.is_chain_mixing()
    assert a.quotient_period() == 2
    assert len(a.attractors()) == 1

    g5 = pysofic.Graph.parse(E5)
    a5 = pysofic.Analysis(g5)
    assert a5.attractors() == [(["[v]"], ["v"]), (["[u]", "[v]"], ["u", "v"])]
    x = pysofic.Point(["a"], ["c"], ["b"])
    assert a5.point_ends(x) == (0, 1)
    assert a5.chain_related(x, x.shifted(1))
    assert not a5.chain_related(x, x)
    assert x.shift_to(x.shifted(3)) == 3

    assert pysofic.member(g5, ["a", "c", "b"])
    assert not pysofic.member(g5, ["b", "a"])
    assert pysofic.chain_lengths(g5, ["a"], ["b"], 6) == [2, 3, 4, 5, 6]
    assert pysofic.cofinite_threshold([4, 6, 9]) == 11
    report = json.loads(pysofic.cross_validate(g5))
    assert all(c["violations"] == 0 for c in report["checks"])

    try:
        pysofic.Graph.parse("alphabet: a\nvertices: p\nedge: p z p\n")
    except pysofic.SoficError as e:
        assert "line 3" in str(e)
    else:
        raise AssertionError("bad letter accepted")

    try:
        pysofic.Analysis(pysofic.Graph(["a"], ["p", "q"], [("p", "a", "q")]))
    except ValueError:
        pass
    else:
        raise AssertionError("non-essential graph accepted")

    print("pysofic smoke test passed")


if __name__ == "__main__":
    main()
