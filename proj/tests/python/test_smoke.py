import pytest

import strlink


def test_builtin_tau_values():
    borromean = strlink.builtin("borromean", 3, [1, 2, 3])
    assert strlink.tau(borromean) == {"mu3": {"1,2,3": 1}, "sl2": {}, "arf": [0, 0, 0], "rochlin": 0}
    assert strlink.tau(strlink.builtin("whitehead", 2, [1, 2]))["sl2"] == {"1,2": 1}
    assert strlink.tau(strlink.builtin("trefoil_insert", 2, [1]))["arf"] == [1, 0]
    poincare = strlink.builtin("poincare")
    assert strlink.tau("strands 2;", ambient=poincare)["rochlin"] == 1


def test_conway_and_mu3():
    assert strlink.conway_coefficients("strands 1; u2 x1+ x1+ x1+ n2", [1]) == [1, 0, 1]
    assert strlink.conway_coefficients("strands 2;", [1, 2]) == []
    assert strlink.mu3(strlink.builtin("borromean", 3, [1, 2, 3]), 2, 1, 3) == -1
    assert strlink.v2(strlink.builtin("whitehead", 2, [1, 2])) % 2 == 1


def test_equivalences():
    tre = strlink.builtin("trefoil_insert", 2, [1])
    assert strlink.y2_equivalent(tre, tre)
    assert not strlink.y2_equivalent(tre, "strands 2;")
    assert not strlink.clasp_pass_equivalent(tre, "strands 2;")
    assert strlink.vassiliev_vector(tre)["phi"] == [1, 0]


def test_algebra():
    assert strlink.normalize("Y[e1;e1;e1]", 2) == {"h2": [1, 0]}
    assert strlink.normalize("2 Y[s;s;s]", 1) == {}
    assert strlink.mj_relabel("Y[a1;b1;s]", 1) == "Y[e1; e2; s]"


def test_errors():
    with pytest.raises(strlink.InputError):
        strlink.normalize("Y[e1;e2]", 2)
    with pytest.raises(strlink.PreconditionError):
        strlink.mu3("strands 3; x1+ x1+", 1, 2, 3)
    with pytest.raises(strlink.ResourceLimitError):
        strlink.conway_coefficients("strands 1; u2 x1+ x1+ x1+ n2", [1], crossing_cap=1)
    with pytest.raises(ValueError):
        strlink.normalize_tangle("strands 2; x9+")
