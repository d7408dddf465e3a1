import pytest

from weylord.intlinalg import (
    dot,
    smith_normal_form,
    solve_integer,
    surjective_over_z,
    unit_vector,
)


def mat_mul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


@pytest.mark.parametrize(
    "rows, diag",
    [
        ([[2, -1], [-1, 2]], [1, 3]),
        ([[1, 0], [0, 1]], [1, 1]),
        ([[2, 0], [0, 2]], [2, 2]),
        ([[6, 4], [4, 6]], [2, 10]),
        ([[0, 0], [0, 0]], [0, 0]),
        ([[1, -1, 0], [0, 1, -1]], [1, 1]),
    ],
)
def test_smith_diagonal(rows, diag):
    d, U, V = smith_normal_form(rows)
    assert d == diag
    # transforms actually diagonalise: U * A * V has `diag` on the diagonal
    prod = mat_mul(mat_mul(U, [list(r) for r in rows]), V)
    for i in range(len(prod)):
        for j in range(len(prod[0])):
            expected = diag[i] if i == j and i < len(diag) else 0
            assert prod[i][j] == expected


def test_divisibility_chain():
    d, _, _ = smith_normal_form([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    assert d == [1, 1, 30]


@pytest.mark.parametrize("b, expected", [((1, 0), True), ((0, 1), True), ((2, 3), True)])
def test_solve_gl(b, expected):
    rows = [[1, -1, 0], [0, 1, -1]]
    x = solve_integer(rows, b)
    assert (x is not None) == expected
    if x is not None:
        assert tuple(dot(tuple(r), x) for r in rows) == b


def test_solve_unsolvable():
    # 2a - b = 1, -a + 2b = 0 has no integer solution
    assert solve_integer([[2, -1], [-1, 2]], (1, 0)) is None


def test_surjectivity():
    assert surjective_over_z([[1, -1, 0], [0, 1, -1]])
    assert not surjective_over_z([[2, -1], [-1, 2]])
    assert surjective_over_z([])
    assert not surjective_over_z([[0, 0]])
    assert surjective_over_z([unit_vector(1, 3)])
