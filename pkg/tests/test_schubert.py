import pytest

from fanoscheme.errors import DomainError
from fanoscheme.schubert import (
    ChowClass,
    Partition2,
    chern_top_sym,
    compression_degree,
    f1_degree,
    gr_degree,
    integrate,
    mul_sigma11,
    pieri_sigma1,
    sigma1_power,
    symmetric_reduce,
)


def cls(N, *pairs):
    return ChowClass(N, {Partition2(a, b): c for (a, b, c) in pairs})


def basis(N):
    return [Partition2(a, b) for a in range(N - 1) for b in range(a + 1)]


def product(lam: Partition2, mu: Partition2, N: int) -> ChowClass:
    """sigma_lam * sigma_mu, writing sigma_mu as a polynomial in sigma_1 and sigma_{1,1}."""
    # sigma_{a,b} = sigma_{1,1}^b * sigma_{a-b}, and sigma_j = sigma_1 * sigma_{j-1} - sigma_{1,1} * sigma_{j-2}
    def special(j, c):
        if j == 0:
            return c
        if j == 1:
            return pieri_sigma1(c)
        return pieri_sigma1(special(j - 1, c)) + mul_sigma11(special(j - 2, c)).scale(-1)

    c = ChowClass(N, {lam: 1})
    for _ in range(mu.b):
        c = mul_sigma11(c)
    return special(mu.a - mu.b, c)


def test_pieri_examples():
    assert pieri_sigma1(ChowClass.unit(4)) == cls(4, (1, 0, 1))
    assert pieri_sigma1(cls(4, (1, 0, 1))) == cls(4, (2, 0, 1), (1, 1, 1))
    assert pieri_sigma1(cls(4, (2, 1, 1))) == cls(4, (2, 2, 1))


def test_sigma11_examples():
    assert mul_sigma11(ChowClass.unit(4)) == cls(4, (1, 1, 1))
    assert mul_sigma11(cls(4, (1, 1, 1))) == cls(4, (2, 2, 1))
    assert mul_sigma11(cls(4, (2, 2, 1))) == ChowClass(4)


def test_integrate_examples():
    assert integrate(ChowClass.point(7)) == 1
    assert integrate(sigma1_power(ChowClass.unit(4), 4)) == 2
    assert integrate(sigma1_power(mul_sigma11(ChowClass.unit(4)), 2)) == 1


def test_chern_top_sym_small():
    assert chern_top_sym(1).terms == {(0, 1): 1}
    assert chern_top_sym(2).terms == {(1, 1): 4}
    assert chern_top_sym(3).terms == {(2, 1): 18, (0, 2): 9}


def test_symmetric_reduce_rejects_non_symmetric():
    with pytest.raises(DomainError):
        symmetric_reduce({(0, 1): 1})


def test_f1_degrees():
    assert [f1_degree(n) for n in range(2, 7)] == [
        4,
        2754,
        97943936,
        91842552457500,
        1905481100678765027040,
    ]


def test_gr_degree_examples():
    assert [gr_degree(1, n) for n in range(1, 8)] == [1] * 7
    assert gr_degree(2, 5) == 5
    assert gr_degree(3, 6) == 42
    with pytest.raises(DomainError):
        gr_degree(3, 2)


def test_compression_degrees_3x3():
    assert compression_degree(3, 3, 3, 0) == 9
    assert compression_degree(3, 3, 3, 2) == 9
    with pytest.raises(DomainError):
        compression_degree(3, 3, 3, 3)


def test_bad_inputs():
    with pytest.raises(DomainError):
        Partition2(1, 2)
    with pytest.raises(DomainError):
        cls(4, (3, 0, 1))
    with pytest.raises(DomainError):
        f1_degree(1)
    with pytest.raises(DomainError):
        chern_top_sym(0)
    with pytest.raises(DomainError):
        ChowClass.unit(4) + ChowClass.unit(5)


@pytest.mark.parametrize("N", range(2, 13))
def test_poincare_duality(N):
    top = N - 2
    for lam in basis(N):
        for mu in basis(N):
            if lam.codim + mu.codim != 2 * top:
                continue
            expected = 1 if (mu.a, mu.b) == (top - lam.b, top - lam.a) else 0
            assert integrate(product(lam, mu, N)) == expected, (lam, mu)


@pytest.mark.parametrize("N", range(2, 11))
def test_gr_degree_matches_pieri(N):
    assert gr_degree(2, N) == integrate(sigma1_power(ChowClass.unit(N), 2 * (N - 2)))


@pytest.mark.parametrize("N", range(2, 10))
def test_sigma1_and_sigma11_commute(N):
    for lam in basis(N):
        c = ChowClass(N, {lam: 1})
        assert pieri_sigma1(mul_sigma11(c)) == mul_sigma11(pieri_sigma1(c))


@pytest.mark.parametrize("n", range(1, 9))
def test_chern_top_sym_at_equal_roots(n):
    poly = chern_top_sym(n)
    assert poly.evaluate(2, 1) == n ** (n + 1)
    assert poly.weighted_degrees() == {n + 1}


def test_chern_top_sym_matches_root_expansion():
    # evaluate at explicit roots x1, x2 and compare with the product
    for n in range(1, 7):
        for x1, x2 in [(1, 2), (3, -1), (2, 5)]:
            direct = 1
            for i in range(n + 1):
                direct *= i * x1 + (n - i) * x2
            assert chern_top_sym(n).evaluate(x1 + x2, x1 * x2) == direct


def test_compression_degree_duality():
    for m in range(2, 7):
        for r in range(2, m + 1):
            for s in range(r):
                assert compression_degree(m, m, r, s) == compression_degree(m, m, r, r - 1 - s)


def test_gr_degree_duality():
    for b in range(1, 9):
        for a in range(b + 1):
            assert gr_degree(a, b) == gr_degree(b - a, b)
