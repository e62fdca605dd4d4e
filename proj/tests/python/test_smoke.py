"""Smoke tests for the compiled pyjanet module."""

import pyjanet


def test_completion_of_the_worked_example():
    result, steps = pyjanet.complete([[0, 2, 1], [2, 0, 3]])
    assert [tuple(s[0]) for s in steps] == [(0, 2, 2), (0, 2, 3), (2, 1, 3)]
    assert [tuple(m) for m in result] == [
        (0, 2, 1),
        (0, 2, 2),
        (2, 0, 3),
        (0, 2, 3),
        (2, 1, 3),
    ]
    assert pyjanet.is_complete(result)
    assert not pyjanet.is_complete([[0, 2, 1], [2, 0, 3]])


def test_mult_table_rows():
    rows = pyjanet.mult_table([[2, 0, 3], [0, 2, 1]])
    by_monomial = {tuple(r["monomial"]): r for r in rows}
    assert by_monomial[(2, 0, 3)]["mult"] == [1, 2, 3]
    assert by_monomial[(0, 2, 1)]["mult"] == [1, 2]
    assert by_monomial[(0, 2, 1)]["nonmult"] == [3]


def test_divisors_and_cones():
    U = [[2, 0, 3], [0, 2, 1]]
    assert pyjanet.in_cone(U, [0, 2, 2])
    assert not pyjanet.in_involutive_cone(U, [0, 2, 2])
    assert pyjanet.janet_divisor(U, [0, 2, 2]) is None
    cone = pyjanet.cone_inductive([[1, 1]], 3)
    assert [tuple(m) for m in cone] == [(1, 1), (2, 1), (1, 2)]


def test_complement_and_hilbert():
    entries = pyjanet.complementary_set([[2, 0], [1, 1]])
    assert [(tuple(e["monomial"]), e["level"], e["mult"]) for e in entries] == [
        ((0, 0), 1, []),
        ((1, 0), 1, []),
        ((0, 1), 1, [2]),
    ]
    assert pyjanet.hilbert_function([[1, 1]], 0) == 1
    assert pyjanet.hilbert_function([[1, 1]], 5) == 2
    where = pyjanet.locate([[1, 1]], [3, 0])
    assert where["side"] == "complement"
    assert tuple(where["entry"]) == (0, 0)


def test_orders():
    assert pyjanet.cmp_deglex([0, 1], [1, 0]) > 0
    assert pyjanet.cmp_deglex([2, 0], [0, 1]) > 0
    order = pyjanet.WeightOrder(2, 1, [[1, 0]], [[0]])
    assert order.compare((1, [1, 1]), (1, [0, 2])) > 0
    assert pyjanet.is_multiplication_compatible(order, 2)
    deglex = pyjanet.WeightOrder.deglex(3, 2)
    assert deglex.compare((1, [0, 0, 1]), (2, [0, 0, 1])) < 0


WAVE = """
vars x1 x2;
unknowns phi1;
D[2,0] phi1 = 0;
D[1,1] phi1 = 0;
"""

DRIFTED = """
vars x1 x2;
unknowns phi1;
D[2,0] phi1 = phi1;
D[1,1] phi1 = 0;
"""


def test_pde_check():
    report = pyjanet.pde_check(WAVE)
    assert report["complete"]
    assert report["integrable"]
    assert len(report["conditions"]) == 1

    report = pyjanet.pde_check(DRIFTED)
    assert not report["integrable"]
    assert report["conditions"][0]["residual"] == "D[0,1] phi1"


def test_pde_canonicalize():
    report = pyjanet.pde_canonicalize(DRIFTED)
    assert report["status"] == "canonical"
    assert report["equations"] == ["D[2,0] phi1 = phi1;", "D[0,1] phi1 = 0;"]

    bad = "vars x1;\nunknowns phi1;\nphi1 = 1;\nphi1 = 0;\n"
    assert pyjanet.pde_canonicalize(bad)["status"] == "incompatible"


def test_pde_solve_monomial():
    text = WAVE + "initial[0,0] = 1;\ninitial[1,0] = 2;\ninitial[0,1] = x2;\n"
    report = pyjanet.pde_solve_monomial(text, bound=3)
    assert report["status"] == "solved"
    assert report["series"] == "1/2*x2^2 + 2*x1 + 1"

    slots = pyjanet.initial_condition_template(WAVE)
    assert [(tuple(s["beta"]), s["mult"]) for s in slots] == [
        ((0, 0), []),
        ((1, 0), []),
        ((0, 1), [2]),
    ]


def test_run_cli_partition_check():
    code, out, err = pyjanet.run_cli("partition-check", count=20, seed=3)
    assert code == 0
    assert "PASS partition" in out
