import pytest
from hypothesis import given, strategies as st

from fanoscheme.errors import DomainError
from fanoscheme.params import (
    CompressionIndex,
    FanoParams,
    compression_component_dim,
    delta,
    is_nonempty,
    kappa,
    lines_component_dims,
    square_lines_dim,
)
from fanoscheme.patterns import count_fixed_points


@st.composite
def mnr(draw, n_max=8):
    n = draw(st.integers(2, n_max))
    m = draw(st.integers(2, n))
    r = draw(st.integers(2, m))
    return m, n, r


def test_kappa_delta_examples():
    p = FanoParams(3, 3, 3)
    assert [kappa(p, s) for s in range(3)] == [5, 4, 5]
    assert [delta(p, s) for s in range(3)] == [2, 4, 2]
    q = FanoParams(5, 6, 5)
    assert kappa(q, 2) == 17
    assert delta(q, 2) == 14


def test_component_dims_for_3x3():
    p = FanoParams(3, 3, 3)
    got = {
        k: [compression_component_dim(p.with_k(k), s) for s in range(3) if k <= kappa(p, s)]
        for k in range(1, 6)
    }
    assert got == {1: [10, 10, 10], 2: [11, 10, 11], 3: [10, 8, 10], 4: [7, 4, 7], 5: [2, 2]}


def test_absent_component_raises():
    with pytest.raises(DomainError, match="kappa"):
        compression_component_dim(FanoParams(3, 3, 3, 5), 1)


@pytest.mark.parametrize("bad", [(1, 2, 2), (3, 2, 2), (3, 3, 4), (3, 3, 1)])
def test_invalid_params(bad):
    with pytest.raises(DomainError):
        FanoParams(*bad)


def test_negative_k_and_bad_s():
    with pytest.raises(DomainError):
        FanoParams(3, 3, 3, -1)
    with pytest.raises(DomainError):
        kappa(FanoParams(3, 3, 3), 3)
    with pytest.raises(DomainError):
        FanoParams(3, 3, 3.0)


def test_compression_index():
    c = CompressionIndex(FanoParams(5, 6, 5), 2)
    assert (c.t, c.zero_rows) == (4, 3)
    assert kappa(c.params, c) == 17


def test_lines_dims_square_4():
    assert lines_component_dims(4, 4, 4) == [23, 23, 23, 23]
    assert square_lines_dim(4, 4) == 23


@given(mnr())
def test_kappa_counts_cells_outside_zero_block(t):
    m, n, r = t
    p = FanoParams(m, n, r)
    for s in range(r):
        cells = sum(1 for i in range(m) for j in range(n) if not (i < m - s and j < s + 1 + n - r))
        assert kappa(p, s) == cells - 1


@given(mnr())
def test_delta_is_grassmannian_product_dimension(t):
    m, n, r = t
    p = FanoParams(m, n, r)
    for s in range(r):
        a = s + n - r + 1
        assert delta(p, s) == a * (n - a) + s * (m - s)


@given(mnr(n_max=8))
def test_square_lines_dims_equal(t):
    _, n, r = t
    dims = lines_component_dims(n, n, r)
    assert len(dims) == r
    assert set(dims) == {square_lines_dim(n, r)}


def test_nonempty_matches_fixed_point_existence():
    # a torus-stable projective scheme is nonempty iff it has a torus fixed point
    for n in range(2, 5):
        for m in range(2, n + 1):
            if m * n > 12:
                continue
            for r in range(2, m + 1):
                for k in range(0, m * n):
                    p = FanoParams(m, n, r, k)
                    assert is_nonempty(p) == (count_fixed_points(p) > 0), p
