import pytest

from rees.field import PrimeField
from rees.ring import bidegree, parse_poly, ring_R
from rees.syzygy import HeightError
from rees.tower import (
    build_level,
    check_truncation_equality,
    evaluation_membership,
    hull_quotient_hilbert,
    load_presentation,
    sym_equations,
)

F = PrimeField(32003)
R = ring_R(F)


def rows(*strs_rows):
    return [[parse_poly(e, R) for e in row] for row in strs_rows]


# -- input validation ---------------------------------------------------------

def test_load_rejects_small_n():
    with pytest.raises(ValueError, match="n >= 3"):
        load_presentation(F, (1,), rows(["x0"], ["x1"]))


def test_load_rejects_degree_count():
    with pytest.raises(ValueError, match="column degrees"):
        load_presentation(F, (1, 1, 1), rows(["x0"], ["x1"], ["0"]))


def test_load_rejects_decreasing_degrees():
    with pytest.raises(ValueError, match="nondecreasing"):
        load_presentation(F, (2, 1), rows(["x0^2", "x1"], ["x1^2", "x0"],
                                          ["0", "0"]))


def test_load_rejects_zero_column():
    with pytest.raises(ValueError, match="zero"):
        load_presentation(F, (1, 1), rows(["x0", "0"], ["x1", "0"],
                                          ["0", "0"]))


def test_load_rejects_height_failure():
    with pytest.raises(HeightError):
        load_presentation(F, (1, 1), rows(["x0", "x0"], ["x1", "x1"],
                                          ["0", "0"]))


def test_load_packages_minors(quadric_cubic):
    assert len(quadric_cubic.minors) == 3
    assert quadric_cubic.n == 3
    assert quadric_cubic.sring.tvar_names == ("T1", "T2", "T3")


# -- symmetric-algebra equations ---------------------------------------------

def test_sym_equations_values(quadric_cubic):
    eqs = sym_equations(quadric_cubic)
    S = quadric_cubic.sring
    assert eqs[0] == parse_poly("x0^2*T1 + x0*x1*T2 + x1^2*T3", S)
    assert eqs[1] == parse_poly("x1^3*T1 + x0^3*T3", S)
    assert [bidegree(g) for g in eqs] == [(2, 1), (3, 1)]


def test_evaluation_membership_basics(quadric_cubic):
    eqs = sym_equations(quadric_cubic)
    for g in eqs:
        assert evaluation_membership(quadric_cubic, g)
    S = quadric_cubic.sring
    assert not evaluation_membership(quadric_cubic, parse_poly("T1", S))
    assert not evaluation_membership(quadric_cubic, parse_poly("x0*T2", S))
    assert evaluation_membership(quadric_cubic, S.zero())


# -- level construction -------------------------------------------------------

def test_build_level_identity_change_when_all_twists_positive(quadric_cubic):
    level = build_level(quadric_cubic, 1)
    assert level.sigma.sigma == (1, 1)
    assert level.embed.rows == level.embed_raw.rows
    n = quadric_cubic.n
    ident = tuple(tuple(F.one if i == j else F.zero for j in range(n))
                  for i in range(n))
    assert level.coord_change == ident


def test_build_level_normalizes_zero_twist_rows(table1):
    level = build_level(table1, 1)
    assert level.sigma.sigma == (3, 0)
    # the zero-twist row becomes a standard coordinate vector ...
    last = level.embed.rows[1]
    assert [str(p) for p in last] == ["0", "0", "1"]
    # ... and the positive row vanishes on that coordinate
    assert level.embed.rows[0][2].is_zero()


def test_level_coordinate_round_trip(table1):
    level = build_level(table1, 1)
    S = table1.sring
    p = parse_poly("x0*T1^2 + 3*x1*T2*T3 - x1*T3^2", S)
    assert level.to_original_coords(level.to_level_coords(p)) == p
    assert level.to_level_coords(level.to_original_coords(p)) == p


def test_subst_agrees_with_raw_when_change_is_identity(quadric_cubic):
    level = build_level(quadric_cubic, 1)
    g2 = sym_equations(quadric_cubic)[1]
    assert level.subst(g2) == level.subst_raw(g2)
    assert bidegree(level.subst(g2)) == (3, 1)


def test_w_monomial(quadric_cubic):
    level = build_level(quadric_cubic, 1)
    w = level.w_monomial((1, 2))
    assert bidegree(w) == (-3, 3)
    assert len(w.terms) == 1


def test_multiplication_tables_satisfy_defining_identity(table2):
    # subst sends each T-linear form q[i][j] to scalar p[i][j] times w_i
    from rees.ring import promote
    level = build_level(table2, 1)
    for i in range(level.sigma.s):
        w_i = level.scroll.monomial(
            tuple(1 if k == 2 + i else 0 for k in range(2 + level.sigma.s)))
        for j, q in enumerate(level.mult_forms[i]):
            p = level.mult_scalars[i][j]
            assert level.subst(q) == promote(p, level.scroll) * w_i


def test_multiplication_table_degrees(final_example):
    level = build_level(final_example, 1)
    for i in range(level.sigma.s):
        rho = level.drop_row_kernels[i]
        for j in range(rho.ncols):
            c = rho.col_degrees[j]
            p = level.mult_scalars[i][j]
            q = level.mult_forms[i][j]
            if not p.is_zero():
                assert p.xdeg() == level.sigma.sigma[i] + c
            assert bidegree(q) == (c, 1)


def test_build_level_rejects_bad_m(quadric_cubic):
    with pytest.raises(ValueError):
        build_level(quadric_cubic, 0)
    with pytest.raises(ValueError):
        build_level(quadric_cubic, 3)


def test_levels_of_four_row_instance(almost_linear):
    lvl1 = build_level(almost_linear, 1)
    lvl2 = build_level(almost_linear, 2)
    assert lvl1.sigma.sigma == (1, 0, 0)
    assert lvl2.sigma.sigma == (1, 1)
    assert lvl2.scroll.tweights == (-1, -1)


# -- truncation equality and Hilbert data -------------------------------------

def test_truncation_equality_window(quadric_cubic):
    level = build_level(quadric_cubic, 1)
    report = check_truncation_equality(level, range(1, 4), 2)
    assert report
    for i, j, got, want in report:
        assert got == want


def test_truncation_equality_rejects_low_window(table3):
    level = build_level(table3, 1)
    with pytest.raises(ValueError, match="x-degree"):
        check_truncation_equality(level, range(0, 2), 1)


@pytest.mark.parametrize("fixture_name,d1", [
    ("quadric_cubic", 2),
    ("table2", 5),
    ("table3", 4),
])
def test_hull_quotient_hilbert_values(request, fixture_name, d1):
    inp = request.getfixturevalue(fixture_name)
    H = hull_quotient_hilbert(build_level(inp, 1))
    for i in range(-1, d1):
        assert H(i) == d1 - i - 1
    assert H(d1) == 0
    assert H(d1 + 3) == 0
