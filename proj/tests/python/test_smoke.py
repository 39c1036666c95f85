import pytest

import weightgeom as wg


def test_roots_and_orbits():
    assert len(wg.positive_roots("E6")) == 36
    assert max(wg.positive_roots("E6")) == (1, 2, 2, 3, 2, 1)
    assert len(wg.weyl_orbit("E6", (1, 0, 0, 0, 0, 0))) == 27
    assert wg.cartan_matrix("G2") == [[2, -1], [-3, 2]]


def test_characters():
    chi = wg.character("F4", (0, 0, 0, 1))
    assert sum(chi.values()) == 26
    assert chi[(0, 0, 0, 0)] == 2
    assert wg.weyl_dimension("E8", (1, 0, 0, 0, 0, 0, 0, 0)) == 3875
    assert wg.dual("E6", (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    g2 = wg.decompose_tensor("G2", (1, 0), (1, 0))
    assert sorted(wg.weyl_dimension("G2", hw) for hw in g2) == [1, 7, 14, 27]


def test_invariants():
    assert wg.invariant_count("E6", (0, 0, 0, 0, 0, 1), 3) == 1
    assert wg.invariant_count("E6", (0, 0, 0, 0, 0, 1), 2) == 0
    assert wg.invariant_count("E7", (0,) * 6 + (1,), 2, exterior=True) == 1
    assert wg.bilinear_type("E7", (0,) * 6 + (1,)) == "skew"
    with pytest.raises(wg.ComputationRefused):
        wg.invariant_count("E8", (0,) * 7 + (1,), 2)


def test_branching():
    dims = sorted(wg.weyl_dimension("D5", hw) for hw in wg.branch("e6-d5", (1, 0, 0, 0, 0, 0)))
    assert dims == [1, 10, 16]


def test_geometry():
    assert wg.dimension_diagram("E6") == {1: 1, 2: 6, 3: 2, 4: 3, 5: 5, 6: 10}
    assert wg.dimension_diagram("E7", 7)[1] == 12
    v2 = wg.delta_space("E6", 2)
    assert v2["dimension"] == 6
    assert v2["lowest_weight"] == (0, 1, 0, 0, 0, -1)
    assert len(wg.hasse_edges("E6", (1, 0, 0, 0, 0, 0))) == 36


def test_duality():
    assert wg.e6_psi_types() == {1: 6, 2: 2, 3: 5, 4: 4, 5: 3, 6: 1}
    assert wg.e6_brace_dimensions() == {"hyperline": 0, "lambda2": 6, "minus-omega6": 17}
    labels, cells = wg.triality_table()
    assert labels[0] == "e1" and len(cells) == 8
    assert all(sum(c is not None for c in row) == 4 for row in cells)


def test_cli_and_verify():
    code, out, err = wg.run(["dims", "G2", "--format", "json"])
    assert code == 0 and '"2": 2' in out
    code, _, err = wg.run(["dims", "E6", "--bogus"])
    assert code == 2 and err
    assert wg.verify("e6-duality") == [("8", "e6-duality", True)]
    with pytest.raises(ValueError):
        wg.character("A2", (1, -1))
