import json

import _parcat as pc


def test_bell():
    assert pc.bell(0) == "1"
    assert pc.bell(4) == "15"
    assert pc.bell(8) == "4140"


def test_compose_closed_loop():
    diagram, loops = pc.compose("0 x 1 : {1}", "1 x 0 : {1'}")
    assert diagram == "0 x 0 : (empty)"
    assert loops == 1


def test_basis_counts():
    assert len(pc.basis(1, 1)) == 2
    assert len(pc.basis(2, 2)) == 15
    assert "2 x 2 : {1,1'}{2,2'}" in pc.basis(2, 2)


def test_jm_left_dot():
    elem = json.loads(pc.jm(1, 1, "left"))
    assert elem == {
        "m": 1,
        "n": 1,
        "terms": [{"coeff": "1", "diagram": "1 x 1 : {1}{1'}"}],
    }


def test_central_low_order_vanishes():
    assert json.loads(pc.central(2, 1, "c"))["terms"] == []
    assert json.loads(pc.central(2, 2, "c"))["terms"] == []


def test_hom_rank_faithful_regime():
    assert pc.hom_rank(2, 2, 4) == 15
    assert pc.hom_rank(2, 2, 1) == 1


def test_kronecker():
    assert pc.kronecker("(1,1)", "(2)", "(1,1)") == 1
    assert pc.kronecker("(1)", "(1)", "(1)", reduced=True) == 1
    assert pc.kronecker("(2,1)", "(1)", "(2,1)", reduced=True) == 2


def test_deformed_schur():
    assert pc.deformed_schur("(1)") == "s(1) - s()"


def test_blocks():
    assert pc.same_block("()", "(3)", "2")
    assert not pc.same_block("(1)", "(2)", "1/2")
    info = pc.block_info("(3)", "2")
    assert info["typical"] is False
    assert info["kappa"] == "(2)"
    assert info["n"] == 1


def test_gram_rank():
    g = pc.gram("()", 1, "0")
    assert g["dim"] == 1
    assert g["rank"] == 0
    g2 = pc.gram("(1)", 2, "1/2")
    assert g2["rank"] == g2["dim"] == pc.delta_dim("(1)", 2)


def test_block_structure():
    assert pc.verify_block_structure("(1)", 3, 2)
