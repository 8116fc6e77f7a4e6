import pytest
from hypothesis import given, settings, strategies as st

from hgsearch.intlattice import NoSolution, kernel_basis, smith_form, solve_lattice


def _matmul(a, x):
    return [sum(a[i][j] * x[j] for j in range(len(x))) for i in range(len(a))]


def test_solve_known_system():
    a = [[1, 2], [3, 4]]
    sf = smith_form(a)
    x = solve_lattice(sf, [5, 11])
    assert _matmul(a, x) == [5, 11]


def test_no_integer_solution():
    a = [[2, 0], [0, 2]]
    sf = smith_form(a)
    with pytest.raises(NoSolution):
        solve_lattice(sf, [1, 0])


def test_inconsistent_system():
    a = [[1, 1], [2, 2]]
    sf = smith_form(a)
    with pytest.raises(NoSolution):
        solve_lattice(sf, [1, 3])


def test_kernel_basis_annihilates():
    a = [[1, 2, 3], [2, 4, 6]]
    sf = smith_form(a)
    ker = kernel_basis(sf)
    assert len(ker) == 2
    for v in ker:
        assert _matmul(a, v) == [0, 0]


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m,
            max_size=m,
        )
    )
)


@settings(max_examples=300)
@given(matrices, st.data())
def test_solution_of_reachable_rhs(a, data):
    # build b in the image, then the solver must recover a preimage
    n = len(a[0])
    x = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n))
    b = _matmul(a, x)
    sf = smith_form(a)
    y = solve_lattice(sf, b)
    assert _matmul(a, y) == b


@settings(max_examples=200)
@given(matrices)
def test_smith_decomposition_identity(a):
    # U @ A @ V must be diagonal with sf.diag entries followed by zeros
    sf = smith_form(a)
    m, n = len(a), len(a[0])
    ua = [[sum(sf.u[i][k] * a[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
    uav = [[sum(ua[i][k] * sf.v[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
    for i in range(m):
        for j in range(n):
            want = sf.diag[i] if i == j and i < sf.rank else 0
            assert uav[i][j] == want


@settings(max_examples=200)
@given(matrices, st.data())
def test_kernel_plus_particular_is_general(a, data):
    # any kernel combination added to a particular solution stays a solution
    n = len(a[0])
    x = data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
    b = _matmul(a, x)
    sf = smith_form(a)
    y = solve_lattice(sf, b)
    for v in kernel_basis(sf):
        shifted = [y[i] + 2 * v[i] for i in range(n)]
        assert _matmul(a, shifted) == b
