import pytest

from rees.field import PrimeField
from rees.generators import u_span_dim
from rees.gradedlin import piece_basis
from rees.oracle import (
    ORDER_DESCRIPTOR,
    GroebnerBasis,
    bigraded_hilbert,
    buchberger,
    colon_ideal,
    intersect_ideals,
    minimal_generator_bidegrees,
    normal_form,
    saturate_m,
    saturated_ideal,
)
from rees.generators import tower_generators
from rees.ring import parse_poly, ring_R, ring_S
from rees.tower import sym_equations

F = PrimeField(32003)
S3 = ring_S(F, 3)


def p(text, ring=S3):
    return parse_poly(text, ring)


# -- Groebner bases -----------------------------------------------------------

def test_buchberger_monomial_ideal_is_untouched():
    G = buchberger([p("x0*T1"), p("x1*T1")])
    assert {str(g) for g in G.generators} == {"x0*T1", "x1*T1"}
    assert G.order == ORDER_DESCRIPTOR
    assert G.reduced


def test_buchberger_computes_the_missing_s_pair():
    G = buchberger([p("x0*T1 - x1*T2"), p("x1*T1 - x0*T2")])
    # the s-pair contributes (x0^2 - x1^2)*T2, reducible by neither input
    assert len(G.generators) == 3
    assert normal_form(p("x0^2*T2 - x1^2*T2"), G).is_zero()
    assert not normal_form(p("T2"), G).is_zero()


def test_buchberger_idempotent(quadric_cubic):
    gens = list(sym_equations(quadric_cubic))
    G = buchberger(gens)
    again = buchberger(G.generators)
    assert again.generators == G.generators


def test_buchberger_validation():
    assert buchberger([]).generators == ()
    assert buchberger([S3.zero()]).generators == ()
    with pytest.raises(ValueError, match="different rings"):
        buchberger([p("T1"), parse_poly("T1", ring_S(F, 4))])
    from rees.ring import Poly
    mixed = Poly(S3, {(1, 0, 0, 0, 0): F(1), (0, 0, 1, 0, 0): F(1)})
    with pytest.raises(ValueError, match="bihomogeneous"):
        buchberger([mixed])


def test_normal_form_basics():
    G = buchberger([p("T2")])
    assert normal_form(p("T1"), G) == p("T1")
    assert normal_form(p("T2"), G).is_zero()
    assert normal_form(p("x0*T2 + x1*T1"), G) == p("x1*T1")
    assert normal_form(S3.zero(), G).is_zero()


def test_normal_form_detects_membership(quadric_cubic):
    K = saturated_ideal(quadric_cubic)
    for rec in tower_generators(quadric_cubic, 1):
        assert normal_form(rec.poly, K).is_zero()
    assert not normal_form(p("T1", quadric_cubic.sring), K).is_zero()


# -- ideal arithmetic ---------------------------------------------------------

def test_intersect_principal_monomials():
    got = intersect_ideals([p("x0*T1")], [p("x1*T1")], S3)
    G = buchberger(got)
    assert [str(g) for g in G.generators] == ["x0*x1*T1"]


def test_intersect_with_empty_side():
    assert intersect_ideals([], [p("T1")], S3) == []


def test_colon_known():
    got = colon_ideal([p("x0^2*T1"), p("x0*x1*T1")], parse_poly("x0", S3), S3)
    G = buchberger(got)
    assert {str(g) for g in G.generators} == {"x0*T1", "x1*T1"}


def test_colon_by_zero():
    with pytest.raises(ValueError, match="zero"):
        colon_ideal([p("T1")], S3.zero(), S3)


def test_saturate_removes_base_torsion():
    K = saturate_m(buchberger([p("x0*T1"), p("x1*T1")]))
    assert [str(g) for g in K.generators] == ["T1"]


def test_saturation_is_colon_stable(quadric_cubic):
    K = saturated_ideal(quadric_cubic)
    ring = quadric_cubic.sring
    for var in ("x0", "x1"):
        quot = colon_ideal(list(K.generators), parse_poly(var, ring), ring)
        for q in quot:
            assert normal_form(q, K).is_zero()


def test_saturated_ideal_m_range(quadric_cubic):
    with pytest.raises(ValueError):
        saturated_ideal(quadric_cubic, m=0)
    with pytest.raises(ValueError):
        saturated_ideal(quadric_cubic, m=3)


def test_saturated_ideal_rational_cross_check(quadric_cubic):
    K = saturated_ideal(quadric_cubic, rational_check=True)
    assert K.generators  # agreement over the rationals, no unlucky-prime error


# -- bigraded accounting ------------------------------------------------------

def test_bigraded_hilbert_principal():
    G = buchberger([p("T1")])
    dims = bigraded_hilbert(G, ((0, 1), (1, 1)))
    assert dims[(0, 1)] == 1
    assert dims[(1, 1)] == 2


def test_bigraded_hilbert_empty_ideal():
    dims = bigraded_hilbert(GroebnerBasis(generators=()), ((0, 2), (0, 1)))
    assert set(dims.values()) == {0}
    with pytest.raises(ValueError, match="empty"):
        bigraded_hilbert(GroebnerBasis(generators=()), ((2, 0), (0, 1)))


def test_bigraded_hilbert_linear_part_is_the_syzygy_span(table1):
    # in T-degree one the saturation holds exactly the syzygies
    K = saturated_ideal(table1)
    S = table1.sring
    g1, g2 = sym_equations(table1)
    dims = bigraded_hilbert(K, ((3, 17), (1, 1)))
    for i in range(3, 18):
        multiples = [m * g for g in (g1, g2)
                     for m in piece_basis(S, i - g.xdeg(), 0)]
        assert dims[(i, 1)] == u_span_dim(multiples, S, i, 1)


def test_minimal_generators_principal(quadric_cubic):
    g1 = sym_equations(quadric_cubic)[0]
    G = buchberger([g1])
    table = minimal_generator_bidegrees(G, ((0, 5), (1, 3)))
    assert table.marks() == [(2, 1, 1)]


def test_minimal_generators_reproduce_the_first_grid(table1):
    K = saturated_ideal(table1)
    table = minimal_generator_bidegrees(K, ((3, 16), (1, 5)), x_separator=2)
    assert {(x, t): c for x, t, c in table.marks()} == {
        (3, 1): 1, (16, 1): 1, (13, 2): 1, (10, 3): 1, (7, 4): 1, (4, 5): 1}
