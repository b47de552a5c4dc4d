from fractions import Fraction

from hypothesis import given, settings, strategies as st

from avoidwords.linalg import kernel_basis, solve_linear_system


def test_identity_system():
    res = solve_linear_system([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 0, 0])
    assert res.status == "solution"
    assert res.solution == [1, 0, 0]
    assert res.kernel == []


def test_homogeneous_1x2_kernel():
    res = solve_linear_system([[2, -1]])
    assert res.status == "kernel"
    assert len(res.kernel) == 1
    v = res.kernel[0]
    # any scalar multiple of (1, 2) is acceptable
    assert v[1] == 2 * v[0] and v[0] != 0


def test_vandermonde_interpolation():
    # nodes 0,1,2 and values 1,2,4: solved by hand -> 1 + n/2 + n^2/2
    M = [[1, 0, 0], [1, 1, 1], [1, 2, 4]]
    res = solve_linear_system(M, [1, 2, 4])
    assert res.status == "solution"
    assert res.solution == [1, Fraction(1, 2), Fraction(1, 2)]


def test_inconsistent_differs_from_zero_kernel():
    inconsistent = solve_linear_system([[1, 1], [1, 1]], [1, 2])
    assert inconsistent.status == "inconsistent"
    zero_kernel = solve_linear_system([[1, 0], [0, 1]])
    assert zero_kernel.status == "kernel" and zero_kernel.kernel == []


def test_underdetermined_returns_particular_plus_kernel():
    res = solve_linear_system([[1, 1, 0]], [3])
    assert res.status == "solution"
    assert sum(res.solution[:2]) == 3
    assert len(res.kernel) == 2


matrix_strategy = st.integers(1, 4).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(-9, 9), min_size=ncols, max_size=ncols),
        min_size=1,
        max_size=4,
    )
)


@settings(max_examples=50)
@given(matrix_strategy)
def test_kernel_vectors_annihilate(matrix):
    for v in kernel_basis(matrix):
        for row in matrix:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0


@settings(max_examples=50)
@given(matrix_strategy, st.integers(0, 3))
def test_solution_reproduces_rhs(matrix, seed):
    # build a consistent rhs from a known integer vector
    ncols = len(matrix[0])
    x = [((seed + 1) * (j + 1)) % 5 - 2 for j in range(ncols)]
    rhs = [sum(a * b for a, b in zip(row, x)) for row in matrix]
    res = solve_linear_system(matrix, rhs)
    assert res.status == "solution"
    for row, b in zip(matrix, rhs):
        assert sum(Fraction(a) * v for a, v in zip(row, res.solution)) == b


def test_rank_deficient_consistent():
    res = solve_linear_system([[1, 2], [2, 4]], [3, 6])
    assert res.status == "solution"
    assert len(res.kernel) == 1
