import pytest

from dirframelets import DirectionMatrix, build_boxspline_bank, build_haar_bank

# direction matrices of the two worked examples: the three-direction
# interpolating linear box spline and the tensor linear B-spline
EX1_ROWS = [[1, 0, -1], [0, 1, -1]]
EX2_ROWS = [[1, 0, -1, 0], [0, 1, 0, -1]]


@pytest.fixture(scope="session")
def ex1_matrix():
    return DirectionMatrix.from_rows(EX1_ROWS)


@pytest.fixture(scope="session")
def ex2_matrix():
    return DirectionMatrix.from_rows(EX2_ROWS)


@pytest.fixture(scope="session")
def ex1_combined(ex1_matrix):
    return build_boxspline_bank(ex1_matrix, "combined")


@pytest.fixture(scope="session")
def ex2_combined(ex2_matrix):
    return build_boxspline_bank(ex2_matrix, "combined")


@pytest.fixture(scope="session")
def haar_banks():
    return {d: build_haar_bank(d) for d in (1, 2, 3, 4)}
