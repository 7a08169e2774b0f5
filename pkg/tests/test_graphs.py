import numpy as np
import pytest

from qumodelab import (
    adjacency_from_edges,
    hafnian,
    perfect_matching_count,
    read_edge_list,
    substructure_signature,
)


def complete_graph(n):
    A = np.ones((n, n)) - np.eye(n)
    return A


def path_graph(n):
    A = np.zeros((n, n))
    for i in range(n - 1):
        A[i, i + 1] = A[i + 1, i] = 1.0
    return A


def random_binary_graph(n, rng, p=0.5):
    A = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                A[i, j] = A[j, i] = 1.0
    return A


def double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# ---------------------------------------------------------------------------
# hafnian
# ---------------------------------------------------------------------------


def test_single_edge():
    assert hafnian(np.array([[0.0, 1.0], [1.0, 0.0]])) == 1.0


def test_odd_dimension_is_zero():
    assert hafnian(np.zeros((3, 3))) == 0.0
    assert hafnian(complete_graph(5)) == 0.0


def test_k4_has_three_matchings():
    assert hafnian(complete_graph(4)) == 3.0


def test_weighted_hafnian():
    A = np.array(
        [
            [0.0, 2.0, 0.5, 0.0],
            [2.0, 0.0, 0.0, 3.0],
            [0.5, 0.0, 0.0, 1.0],
            [0.0, 3.0, 1.0, 0.0],
        ]
    )
    # pairings: (12)(34), (13)(24), (14)(23)
    expected = 2.0 * 1.0 + 0.5 * 3.0 + 0.0 * 0.0
    assert hafnian(A) == pytest.approx(expected, abs=1e-14)


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        hafnian(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_size_cap():
    with pytest.raises(ValueError):
        hafnian(np.zeros((22, 22)))


def test_empty_matrix():
    assert hafnian(np.zeros((0, 0))) == 1.0


# ---------------------------------------------------------------------------
# perfect matchings
# ---------------------------------------------------------------------------


def test_path_graph_single_matching():
    assert perfect_matching_count(path_graph(4)) == 1


def test_complete_graph_double_factorial():
    assert perfect_matching_count(complete_graph(6)) == double_factorial(5)


def test_empty_graph_no_matching():
    assert perfect_matching_count(np.zeros((4, 4))) == 0


def test_non_binary_rejected():
    A = np.array([[0.0, 0.5], [0.5, 0.0]])
    with pytest.raises(ValueError):
        perfect_matching_count(A)


# ---------------------------------------------------------------------------
# signatures
# ---------------------------------------------------------------------------


def test_signature_deterministic():
    A = random_binary_graph(6, np.random.default_rng(0))
    assert np.array_equal(substructure_signature(A), substructure_signature(A))


def test_signature_invariant_under_relabelling():
    rng = np.random.default_rng(9)
    for _ in range(5):
        n = int(rng.integers(3, 7))
        A = random_binary_graph(n, rng)
        perm = rng.permutation(n)
        B = A[np.ix_(perm, perm)]
        assert np.allclose(substructure_signature(A), substructure_signature(B))


def test_signature_separates_path_from_clique():
    assert not np.array_equal(
        substructure_signature(path_graph(4)), substructure_signature(complete_graph(4))
    )


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_hafnian_counts_matchings_on_random_graphs():
    rng = np.random.default_rng(31)
    for _ in range(100):
        n = int(rng.integers(2, 11))
        A = random_binary_graph(n, rng)
        assert hafnian(A) == float(perfect_matching_count(A) if n <= 16 else 0)


def test_hafnian_permutation_invariance():
    rng = np.random.default_rng(37)
    X = rng.normal(size=(8, 8))
    A = X + X.T
    np.fill_diagonal(A, 0.0)
    base = hafnian(A)
    for _ in range(20):
        perm = rng.permutation(8)
        assert hafnian(A[np.ix_(perm, perm)]) == pytest.approx(base, rel=1e-12)


def test_block_diagonal_multiplicativity():
    rng = np.random.default_rng(41)
    X = rng.normal(size=(4, 4))
    A = X + X.T
    np.fill_diagonal(A, 0.0)
    Y = rng.normal(size=(6, 6))
    B = Y + Y.T
    np.fill_diagonal(B, 0.0)
    M = np.zeros((10, 10))
    M[:4, :4] = A
    M[4:, 4:] = B
    assert hafnian(M) == pytest.approx(hafnian(A) * hafnian(B), rel=1e-12)


# ---------------------------------------------------------------------------
# edge-list parsing
# ---------------------------------------------------------------------------


def test_adjacency_from_edges():
    A = adjacency_from_edges([[1, 2], [2, 3, 0.5]])
    assert A.shape == (3, 3)
    assert A[0, 1] == A[1, 0] == 1.0
    assert A[1, 2] == A[2, 1] == 0.5


def test_adjacency_validation():
    with pytest.raises(ValueError):
        adjacency_from_edges([[1, 1]])
    with pytest.raises(ValueError):
        adjacency_from_edges([[1, 5]], n=3)
    with pytest.raises(ValueError):
        adjacency_from_edges([], n=None)


def test_read_edge_list(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text("# complete graph on 4 vertices\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    A = read_edge_list(path)
    assert np.array_equal(A, complete_graph(4))
    weighted = tmp_path / "w.edges"
    weighted.write_text("1 2 2.5\n")
    B = read_edge_list(weighted, n=3)
    assert B.shape == (3, 3) and B[0, 1] == 2.5
    bad = tmp_path / "bad.edges"
    bad.write_text("1 2 3 4\n")
    with pytest.raises(ValueError):
        read_edge_list(bad)
