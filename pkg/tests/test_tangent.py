import pytest
from hypothesis import given, settings, strategies as st

from fanoscheme.errors import DomainError, InvariantError
from fanoscheme.params import FanoParams, compression_component_dim, delta, kappa
from fanoscheme.symalg import DET, PERM, LinForm, LinMatrix, plane_in_scheme, span_dim
from fanoscheme.tangent import (
    CompressedPlane,
    a_dimension,
    detform_example,
    is_smooth_compression_point,
    linear_system,
    shared_point_example,
    tangent_dim,
    witness_det,
    witness_perm,
)


def coeff_grid(P):
    return [[tuple(int(c) for c in e.coeffs) for e in row] for row in P.matrix.entries]


def var(i, nz):
    return tuple(int(j == i) for j in range(nz))


def test_detform_example():
    P = detform_example()
    assert span_dim(P.matrix) == 5
    report = tangent_dim(P, DET)
    assert (report.a_dim, report.tangent_dim) == (14, 79)
    assert report.system_size[1] == 60


def test_witness_det_5_6_5():
    P = witness_det(5, 6, 5, 4, 2)
    assert tangent_dim(P, DET).tangent_dim == 79
    assert is_smooth_compression_point(P)


def test_witness_det_3_3_3_1_1_shape():
    P = witness_det(3, 3, 3, 1, 1)
    g = coeff_grid(P)
    zero, z0, z1 = (0, 0), (1, 0), (0, 1)
    assert g == [[zero, zero, z0], [zero, zero, z1], [z0, z1, zero]]
    report = tangent_dim(P, DET)
    assert (report.a_dim, report.tangent_dim) == (4, 10)


def test_witness_perm_3_3_3_2_0_shape():
    P = witness_perm(3, 3, 3, 2, 0)
    g = coeff_grid(P)
    z0, z1, z2 = (var(i, 3) for i in range(3))
    assert [row[1:] for row in g] == [[z0, z2], [z1, z0], [z2, z1]]
    assert all(row[0] == (0, 0, 0) for row in g)
    report = tangent_dim(P, PERM)
    assert (report.a_dim, report.tangent_dim) == (0, 9)


def test_witness_perm_3_3_3_2_2_shape():
    P = witness_perm(3, 3, 3, 2, 2)
    g = coeff_grid(P)
    assert g[0] == [(0, 0, 0)] * 3
    assert g[1] == [var(0, 3), var(1, 3), var(2, 3)]
    assert a_dimension(P, PERM) == 0


def test_witness_perm_5_5_5_5_2_blocks():
    P = witness_perm(5, 5, 5, 5, 2)
    assert (P.zero_rows, P.t) == (3, 3)
    assert a_dimension(P, PERM) == 0


def test_small_k_witnesses_are_smooth_points():
    assert is_smooth_compression_point(witness_det(3, 3, 3, 1, 0))
    assert tangent_dim(witness_det(3, 3, 3, 1, 0), DET).tangent_dim == 10


def test_point_on_two_components_is_singular():
    P = shared_point_example()
    assert tangent_dim(P, DET).tangent_dim > compression_component_dim(P.params, 2)
    assert not is_smooth_compression_point(P)


def test_witness_domain_errors():
    with pytest.raises(DomainError, match="kappa"):
        witness_det(3, 3, 3, 5, 1)
    with pytest.raises(DomainError, match="k=1 < 2"):
        witness_perm(3, 3, 3, 1, 0)
    with pytest.raises(DomainError, match="k=4 < 5"):
        witness_perm(5, 5, 5, 4, 2)
    with pytest.raises(DomainError, match="m-s"):
        witness_perm(4, 4, 4, 5, 2)
    with pytest.raises(DomainError):
        is_smooth_compression_point(witness_perm(3, 3, 3, 2, 0), PERM)


def test_invariant_violations():
    M = witness_det(3, 3, 3, 1, 1).matrix
    grid = [list(row) for row in M.entries]
    grid[0][0] = LinForm.of([1, 0])
    with pytest.raises(InvariantError, match="zero block"):
        CompressedPlane.of(LinMatrix(grid), 3, 1)
    grid = [list(row) for row in M.entries]
    grid[2][0] = LinForm.of([0, 1])
    with pytest.raises(InvariantError, match="span"):
        CompressedPlane(FanoParams(3, 3, 3, 1), 1, LinMatrix([[LinForm.of([c.coeffs[0], 0]) for c in row] for row in grid]))


def test_witnesses_lie_on_the_locus():
    for args in [(3, 3, 3, 2, 1), (3, 4, 3, 3, 0), (4, 4, 3, 2, 2), (4, 4, 4, 6, 2)]:
        assert plane_in_scheme(witness_det(*args).matrix, args[2], DET)
    assert plane_in_scheme(witness_perm(5, 5, 5, 5, 2).matrix, 5, PERM)


def test_system_unknown_count():
    eqs, unknowns = linear_system(witness_det(4, 5, 3, 2, 1), DET)
    assert unknowns == 3 * 4 * 3
    assert all(eq for eq in eqs)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_witness_spans_full_dimension(data):
    n = data.draw(st.integers(2, 5))
    m = data.draw(st.integers(2, n))
    r = data.draw(st.integers(2, m))
    s = data.draw(st.integers(0, r - 1))
    ks = kappa(FanoParams(m, n, r), s)
    k = data.draw(st.integers(1, ks))
    P = witness_det(m, n, r, k, s)
    assert span_dim(P.matrix) == k + 1
    assert a_dimension(P, DET) == delta(P.params, s)


@st.composite
def compressed_planes(draw):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(2, n))
    r = draw(st.integers(2, m))
    s = draw(st.integers(0, r - 1))
    ks = kappa(FanoParams(m, n, r), s)
    k = draw(st.integers(0, min(ks, 3)))
    nz = k + 1
    h, t = m - s, s + 1 + n - r
    grid = []
    for i in range(m):
        row = []
        for j in range(n):
            if i < h and j < t:
                row.append(LinForm.zero(nz))
            else:
                row.append(LinForm.of(draw(st.lists(st.integers(-2, 2), min_size=nz, max_size=nz))))
        grid.append(row)
    M = LinMatrix(grid)
    if span_dim(M) != nz:
        return None
    return CompressedPlane(FanoParams(m, n, r, k), s, M)


@settings(max_examples=40, deadline=None)
@given(compressed_planes())
def test_tangent_at_least_component_dimension(P):
    if P is None:
        return
    assert tangent_dim(P, DET).tangent_dim >= compression_component_dim(P.params, P.s)


@settings(max_examples=25, deadline=None)
@given(compressed_planes(), st.data())
def test_a_dimension_invariance(P, data):
    if P is None:
        return
    h, t, m, n = P.zero_rows, P.t, P.params.m, P.params.n
    rows = data.draw(st.permutations(range(h))) + data.draw(st.permutations(range(h, m)))
    cols = data.draw(st.permutations(range(t))) + data.draw(st.permutations(range(t, n)))
    nz = P.matrix.nz
    g = [[data.draw(st.integers(-2, 2)) for _ in range(nz)] for _ in range(nz)]
    moved = P.matrix.permuted(rows, cols)
    subst = moved.substituted(g)
    if span_dim(subst) != nz:
        return
    Q = CompressedPlane(P.params, P.s, subst)
    for fam in (DET, PERM):
        assert a_dimension(Q, fam) == a_dimension(P, fam)
