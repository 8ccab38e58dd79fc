import pytest

import tmcg


def test_v_relators():
    assert tmcg.VElement.parse("b b b").is_identity()
    assert tmcg.VElement.parse("(b a)^5").is_identity()
    assert not tmcg.VElement.parse("(b a)^4").is_identity()
    assert tmcg.VElement.parse("") == tmcg.VElement()


def test_b_generators():
    pi = tmcg.BElement.parse("p")
    assert not (pi * pi).is_identity()
    assert (pi * pi).project_v().is_identity()
    assert tmcg.BElement.parse("p^2") == tmcg.BElement.parse("t t1' t2'")
    assert tmcg.BElement.parse("b = t p^b p").is_identity()
    assert "braid=" in pi.normal_form()


def test_moves_reverse_order():
    assert tmcg.BElement.from_moves("A B") == tmcg.BElement.parse("b a")
    assert tmcg.BElement.from_moves("B B B").is_identity()


def test_section():
    beta = tmcg.VElement.parse("b")
    assert tmcg.t_section(beta) == tmcg.BElement.parse("b")
    with pytest.raises(tmcg.DomainError):
        tmcg.t_section(tmcg.VElement.parse("p"))


def test_braided_pairs():
    pi0 = tmcg.BVElement.parse("P")
    assert not (pi0 * pi0).is_identity()
    assert (pi0 * pi0).project_v().is_identity()
    assert tmcg.BVElement.parse("[A B', A' B A]").is_identity()
    assert pi0.embed() == tmcg.BElement.parse("b' a p a' b")


def test_parse_errors():
    with pytest.raises(tmcg.ParseError):
        tmcg.VElement.parse("b (b")
    with pytest.raises(tmcg.TmcgError):
        tmcg.BElement.parse("q")


def test_suites_and_ball():
    assert "pres0" in tmcg.suite_names()
    cert = tmcg.run_suite("tpres")
    assert cert["pass"] and cert["total"] == 5
    assert {"suite", "relator", "word", "verdict", "digest"} <= set(cert["records"][0])
    assert tmcg.cayley_ball(2)["spheres"] == [1, 4, 9]
    assert tmcg.psl2_probe(6)
