import weylgpd
import pytest


def test_builtins_listed():
    names = weylgpd.builtin_names()
    assert "A2-1pt" in names and "row10" in names


def test_graph_round_trip():
    g = weylgpd.builtin("row10")
    assert weylgpd.parse_graph(g.to_json()) == g
    assert g.objects == ["x1", "x2", "x3"]
    assert g.rho(1, "x1") == "x2"
    assert g.cartan("x3") == [[2, -4], [-1, 2]]


def test_groupoid_sizes():
    assert len(weylgpd.WeylGroupoid(weylgpd.builtin("A2-1pt"))) == 6
    assert len(weylgpd.WeylGroupoid(weylgpd.builtin("B2-1pt"))) == 8
    assert len(weylgpd.WeylGroupoid(weylgpd.builtin("G2-1pt"))) == 12
    assert len(weylgpd.WeylGroupoid(weylgpd.builtin("A2-std-3pt"))) == 18


def test_roots_and_reduced_words():
    w = weylgpd.WeylGroupoid(weylgpd.builtin("row10"))
    assert len(w.positive_roots("x1")) == 6
    assert w.m("x1", 1, 2) == 6
    a2 = weylgpd.WeylGroupoid(weylgpd.builtin("A2-1pt"))
    assert a2.reduced_words("x") == [[1, 2, 1], [2, 1, 2]]


def test_psi_two_term_expansion():
    w = weylgpd.WeylGroupoid(weylgpd.builtin("A2-std-3pt"))
    assert w.psi("x1", [1, 2, 1]) == [
        ("1*t1*t2 + 1*t2^2", [2, 1]),
        ("1*t1^2*t2 + 1*t1*t2^2", [1, 2, 1]),
    ]


def test_nilhecke_product_vanishes_on_non_reduced_word():
    w = weylgpd.WeylGroupoid(weylgpd.builtin("A2-1pt"))
    assert w.nilhecke("x", [1, 1]) == []
    [(coeff, element)] = w.nilhecke("x", [1, 2])
    assert coeff == 1 and element["word"] == [1, 2]


def test_not_reduced_raises():
    w = weylgpd.WeylGroupoid(weylgpd.builtin("A2-1pt"))
    with pytest.raises(weylgpd._weylgpd.NotReduced):
        w.psi("x", [1, 1])


def test_bruhat_and_dot():
    w = weylgpd.WeylGroupoid(weylgpd.builtin("A2-1pt"))
    poset = w.bruhat("x", "x")
    assert len(poset["elements"]) == 6
    assert len(poset["covers"]) == 8
    assert poset["certified"]
    assert w.dot("x", "x").startswith("digraph bruhat {\n")


def test_verify_and_cli():
    assert all(passed for _, _, passed, _ in weylgpd.verify(weylgpd.builtin("B2-std-2pt")))
    code, out, err = weylgpd.run_cli(["builtins"])
    assert code == 0 and "row10" in out
    code, out, err = weylgpd.run_cli(["psi", "--graph", "nope", "--start", "x", "--word", "1"])
    assert code == 2 and out == ""
