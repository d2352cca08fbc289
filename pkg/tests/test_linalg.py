import networkx as nx
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from subjoin.errors import ComplexRootsUnexpected, InexactDivision, NearSingular, NonSymmetric
from subjoin.graph import (
    adjacency,
    as_regular,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    join,
    laplacian,
    signless_laplacian,
    star,
)
from subjoin.linalg import (
    RealPolynomial,
    Spectrum,
    bareiss_det,
    char_poly_exact,
    companion_matrix,
    coronal,
    coronal_eval_by_solve,
    coronal_factor_roots,
    coronal_numerator,
    poly_divide_exact,
    poly_eval,
    poly_mul,
    poly_roots,
    quadratic_roots,
    spectral_norm,
    spectrum_residual,
    sym_eigen,
)
from subjoin.verify import default_corpus

CORPUS = default_corpus(42)
ALL = CORPUS.g1 + CORPUS.g2
S2 = np.sqrt(2.0)


def sym_int(max_n=8, lo=-3, hi=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        M = draw(arrays(np.int64, (n, n), elements=st.integers(lo, hi)))
        return np.triu(M) + np.triu(M, 1).T
    return build()


# -- Spectrum -----------------------------------------------------------------

def test_spectrum_container():
    s = Spectrum([2.0, -1.0, 2.0 + 1e-9, 0.0])
    assert len(s) == 4
    assert list(s) == sorted(s.values)
    assert s.descending[0] == pytest.approx(2.0)
    assert s.multiplicity(2.0) == 2
    assert s.groups()[-1][1] == 2
    with pytest.raises(ValueError):
        s.values[0] = 5.0
    assert s.residual(Spectrum([-1.0, 0.0, 2.0, 2.0])) == pytest.approx(1e-9)
    assert spectrum_residual([1.0], [1.0, 2.0]) == np.inf


@pytest.mark.parametrize("M, want", [
    (adjacency(complete(2)), [-1, 1]),
    (laplacian(complete(2)), [0, 2]),
    (adjacency(cycle(4)), [-2, 0, 0, 2]),
])
def test_sym_eigen_examples(M, want):
    np.testing.assert_allclose(sym_eigen(M).values, want, atol=1e-12)


def test_sym_eigen_rejects_asymmetric():
    with pytest.raises(NonSymmetric):
        sym_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_sym_eigen_vectors():
    M = adjacency(cycle(5)).astype(float)
    s, U = sym_eigen(M, vectors=True)
    np.testing.assert_allclose(M @ U, U * s.values, atol=1e-12)


@pytest.mark.parametrize("name, g", ALL, ids=[n for n, _ in ALL])
def test_spectrum_invariants_on_corpus(name, g):
    for M in (adjacency(g), laplacian(g), signless_laplacian(g)):
        s = sym_eigen(M)
        assert abs(s.values.sum() - np.trace(M)) <= 1e-8 * (1 + spectral_norm(M))
    mu = sym_eigen(laplacian(g))
    assert mu.values.min() >= -1e-9
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert mu.multiplicity(0.0) == nx.number_connected_components(h)


# -- polynomials --------------------------------------------------------------

def test_poly_division_examples():
    x2m1 = RealPolynomial([-1.0, 0.0, 1.0])
    assert poly_divide_exact(x2m1, RealPolynomial([-1.0, 1.0])).allclose(RealPolynomial([1.0, 1.0]))
    x3 = RealPolynomial.x_power(3)
    assert poly_divide_exact(x3, RealPolynomial.x_power(1)).allclose(RealPolynomial.x_power(2))
    with pytest.raises(InexactDivision):
        poly_divide_exact(x2m1, RealPolynomial([-2.0, 1.0]))


def test_poly_arithmetic():
    p = RealPolynomial([1.0, 2.0])
    q = RealPolynomial([-1.0, 0.0, 1.0])
    assert poly_mul(p, q).to_list() == [-1.0, -2.0, 1.0, 2.0]
    assert poly_eval(q, 3.0) == 8.0
    assert q(np.array([0.0, 2.0])).tolist() == [-1.0, 3.0]
    assert (p + q).to_list() == [0.0, 2.0, 1.0]
    assert (p - p).is_zero
    assert (p ** 2).to_list() == [1.0, 4.0, 4.0]
    assert q.shift(1.0)(1.0) == q(0.0)
    assert q.degree == 2
    assert RealPolynomial.from_roots([1.0, 2.0]).to_list() == [2.0, -3.0, 1.0]


def test_poly_roots_examples():
    np.testing.assert_allclose(poly_roots(RealPolynomial([-2.0, 0.0, 1.0])).values, [-S2, S2])
    np.testing.assert_allclose(poly_roots(RealPolynomial([0.0, -8.0, 0.0, 1.0])).values,
                               [-2 * S2, 0.0, 2 * S2], atol=1e-12)


def test_poly_roots_realness():
    with pytest.raises(ComplexRootsUnexpected):
        poly_roots(RealPolynomial([1.0, 0.0, 1.0]))
    z = poly_roots(RealPolynomial([1.0, 0.0, 1.0]), real=False)
    np.testing.assert_allclose(sorted(np.abs(np.imag(z))), [1.0, 1.0])


def test_poly_roots_repeated_root_is_real():
    p = RealPolynomial.from_roots([2.0, 2.0, 2.0, -1.0])
    np.testing.assert_allclose(poly_roots(p).values, [-1, 2, 2, 2], atol=1e-6)


def test_companion_matrix_charpoly():
    p = RealPolynomial.from_roots([1.0, -2.0, 3.0])
    np.testing.assert_allclose(np.sort(np.linalg.eigvals(companion_matrix(p)).real), [-2, 1, 3])


def test_quadratic_roots():
    assert quadratic_roots(-3.0, 2.0) == pytest.approx((1.0, 2.0))
    a, b = quadratic_roots(-4.0, 4.0 + 1e-14)
    assert a == pytest.approx(2.0, abs=1e-12) and b == pytest.approx(2.0, abs=1e-12)
    with pytest.raises(ComplexRootsUnexpected):
        quadratic_roots(0.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(sym_int())
def test_char_poly_exact_agrees_with_sympy_and_eigensolver(M):
    coef = char_poly_exact(M)
    x = sympy.Symbol("x")
    want = sympy.Matrix(M.tolist()).charpoly(x).all_coeffs()[::-1]
    assert coef == [int(c) for c in want]
    roots = poly_roots(RealPolynomial(coef)).values
    assert spectrum_residual(roots, np.linalg.eigvalsh(M.astype(float))) <= 1e-6 * (1 + spectral_norm(M))


@settings(max_examples=60, deadline=None)
@given(sym_int(max_n=10))
def test_bareiss_matches_float_determinant(M):
    assert bareiss_det(M) == round(np.linalg.det(M.astype(float)))


def test_bareiss_examples():
    assert bareiss_det(np.eye(3, dtype=np.int64)) == 1
    assert bareiss_det(laplacian(cycle(3))[1:, 1:]) == 3
    J, _ = join("sv", cycle(3), complete(1))
    assert bareiss_det(laplacian(J)[1:, 1:]) == 50
    assert bareiss_det(np.array([[0, 1], [1, 0]])) == -1
    assert bareiss_det(np.zeros((2, 2), dtype=np.int64)) == 0


def test_bareiss_big_integers():
    M = np.diag([10 ** 10] * 3).astype(object)
    assert bareiss_det(M) == 10 ** 30


# -- coronals -----------------------------------------------------------------

def test_coronal_eval_examples():
    assert coronal_eval_by_solve(adjacency(complete(1)), 2.0) == pytest.approx(0.5)
    assert coronal_eval_by_solve(adjacency(complete(2)), 3.0) == pytest.approx(1.0)
    with pytest.raises(NearSingular):
        coronal_eval_by_solve(adjacency(complete(2)), 1.0)


@pytest.mark.parametrize("name, g", ALL, ids=[n for n, _ in ALL])
def test_coronal_weights_sum_to_n(name, g):
    for M in (adjacency(g), laplacian(g), signless_laplacian(g)):
        assert abs(coronal(M).weights.sum() - g.n) <= 1e-9


@pytest.mark.parametrize("name, g", CORPUS.g1, ids=[n for n, _ in CORPUS.g1])
def test_regular_coronal(name, g):
    r, n = as_regular(g).r, g.n
    rng = np.random.default_rng(1)
    for x in rng.uniform(-10, 10, 10):
        if abs(x - r) < 1e-3 or abs(x) < 1e-3:
            continue
        assert coronal(adjacency(g))(x) == pytest.approx(n / (x - r), rel=1e-9)
        assert coronal(laplacian(g))(x) == pytest.approx(n / x, rel=1e-9)
    assert coronal(adjacency(g)).main_poles() == [(pytest.approx(r), pytest.approx(n))]


def test_coronal_numerator_matches_sympy_adjugate():
    # 1^T adj(xI - A) 1 for the star K_{1,4}
    A = adjacency(star(4))
    x = sympy.Symbol("x")
    adj = (x * sympy.eye(5) - sympy.Matrix(A.tolist())).adjugate()
    want = sympy.Poly(sympy.expand(sum(adj)), x).all_coeffs()[::-1]
    got = coronal_numerator(A)
    np.testing.assert_allclose(got.to_list(), [float(c) for c in want], atol=1e-9)
    # and the closed rational form (5x + 8)/(x^2 - 4)
    gamma = coronal(A)
    for t in (0.5, 3.0, -7.0):
        assert gamma(t) == pytest.approx((5 * t + 8) / (t * t - 4))


def test_coronal_distinguishes_classic_pair():
    g1 = coronal(adjacency(star(4)))
    g2 = coronal(adjacency(disjoint_union(cycle(4), complete(1))))
    assert g1(3.0) != pytest.approx(g2(3.0))


def test_coronal_factor_roots_match_polynomial_route():
    # roots of phi(A2; x) * (x^2 - 2r - a x Gamma(x)) for C4 with K_{1,3}
    A2 = adjacency(star(3))
    gamma = coronal(A2)
    n1, r1 = 4, 2
    got = coronal_factor_roots(gamma, head=0.0, tail=0.0, coupling_sq=2 * r1, alpha=n1)
    phi = RealPolynomial.from_roots(np.linalg.eigvalsh(A2.astype(float)))
    poly = (RealPolynomial([-2.0 * r1, 0.0, 1.0]) * phi
            - RealPolynomial([0.0, float(n1)]) * coronal_numerator(A2))
    np.testing.assert_allclose(np.sort(got), poly_roots(poly).values, atol=1e-8)


def test_complete_bipartite_coronal_formula():
    for p in range(1, 4):
        for q in range(1, 4):
            gamma = coronal(adjacency(complete_bipartite(p, q)))
            for x in (0.3, 2.7, -4.1):
                if abs(x * x - p * q) < 1e-6:
                    continue
                assert gamma(x) == pytest.approx(((p + q) * x + 2 * p * q) / (x * x - p * q), rel=1e-10)
