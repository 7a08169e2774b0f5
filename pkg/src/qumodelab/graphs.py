"""Hafnians and perfect matchings of molecular graphs.

The hafnian of a symmetric matrix sums, over all ways of partitioning the
index set into pairs, the product of the paired entries. On a 0/1 adjacency
matrix it counts the perfect matchings of the graph, which is what a Gaussian
boson sampler estimates photonically. Here it is computed exactly: the
hafnian by a memoized pair-off-the-lowest-vertex recursion over index
subsets (bitmasks), and the matching count independently by exhaustive
enumeration of pairings, so the two routes cross-check each other.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

__all__ = [
    "hafnian",
    "perfect_matching_count",
    "substructure_signature",
    "adjacency_from_edges",
    "read_edge_list",
]

MAX_HAFNIAN_SIZE = 20
MAX_MATCHING_SIZE = 16
SIGNATURE_MAX_BLOCK = 8


def _as_symmetric(A) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    if A.size and np.abs(A - A.T).max() != 0.0:
        raise ValueError("matrix must be exactly symmetric")
    return A


def hafnian(A) -> float:
    """Sum over perfect matchings of the product of matched entries.

    Odd dimensions have no perfect matching and return 0. Even dimensions are
    capped at 20, the budget of the exact subset recursion.
    """
    A = _as_symmetric(A)
    n = A.shape[0]
    if n % 2 == 1:
        return 0.0
    if n > MAX_HAFNIAN_SIZE:
        raise ValueError(f"hafnian limited to dimension {MAX_HAFNIAN_SIZE}, got {n}")
    if n == 0:
        return 1.0

    cache: dict[int, float] = {}

    def haf(mask: int) -> float:
        if mask == 0:
            return 1.0
        hit = cache.get(mask)
        if hit is not None:
            return hit
        i = (mask & -mask).bit_length() - 1  # lowest remaining vertex
        rest = mask & ~(1 << i)
        total = 0.0
        js = rest
        while js:
            j = (js & -js).bit_length() - 1
            js &= js - 1
            w = A[i, j]
            if w != 0.0:
                total += w * haf(rest & ~(1 << j))
        cache[mask] = total
        return total

    return haf((1 << n) - 1)


def _pairings(items: tuple[int, ...]):
    """All partitions of ``items`` into unordered pairs."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for idx, partner in enumerate(rest):
        remaining = rest[:idx] + rest[idx + 1 :]
        for tail in _pairings(remaining):
            yield ((first, partner),) + tail


def perfect_matching_count(A) -> int:
    """Number of perfect matchings of a 0/1 graph, by brute enumeration."""
    A = _as_symmetric(A)
    n = A.shape[0]
    if not np.isin(A, (0.0, 1.0)).all():
        raise ValueError("perfect matching count needs 0/1 entries")
    if n > MAX_MATCHING_SIZE:
        raise ValueError(
            f"matching enumeration limited to {MAX_MATCHING_SIZE} vertices, got {n}"
        )
    if n % 2 == 1:
        return 0
    count = 0
    for pairing in _pairings(tuple(range(n))):
        if all(A[i, j] == 1.0 for i, j in pairing):
            count += 1
    return count


def substructure_signature(A) -> np.ndarray:
    """Sorted hafnians of every principal submatrix of even size up to 8.

    The multiset is invariant under vertex relabelling, so it fingerprints
    the graph up to isomorphism (not injectively, but cheaply).
    """
    A = _as_symmetric(A)
    n = A.shape[0]
    if n > MAX_MATCHING_SIZE:
        raise ValueError(f"signature limited to {MAX_MATCHING_SIZE} vertices, got {n}")
    values = []
    for size in range(2, min(n, SIGNATURE_MAX_BLOCK) + 1, 2):
        for subset in combinations(range(n), size):
            sub = A[np.ix_(subset, subset)]
            values.append(hafnian(sub))
    return np.sort(np.asarray(values))


def adjacency_from_edges(edges, n: int | None = None) -> np.ndarray:
    """Symmetric adjacency matrix from ``(i, j)`` or ``(i, j, weight)`` tuples
    with 1-based vertex labels."""
    edges = [tuple(e) for e in edges]
    if n is None:
        if not edges:
            raise ValueError("cannot infer the vertex count from an empty edge list")
        n = max(max(e[0], e[1]) for e in edges)
    A = np.zeros((int(n), int(n)))
    for e in edges:
        if len(e) == 2:
            i, j = e
            w = 1.0
        elif len(e) == 3:
            i, j, w = e
        else:
            raise ValueError(f"edge {e!r} must be (i, j) or (i, j, weight)")
        i, j = int(i), int(j)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"edge ({i}, {j}) outside 1..{n}")
        if i == j:
            raise ValueError(f"self-loop on vertex {i} is not allowed")
        A[i - 1, j - 1] = A[j - 1, i - 1] = float(w)
    return A


def read_edge_list(path, n: int | None = None) -> np.ndarray:
    """Parse an edge-list file: one ``i j [weight]`` per line, 1-indexed.

    Blank lines and lines starting with ``#`` are skipped.
    """
    edges = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ValueError(f"{path}:{lineno}: expected 'i j [weight]', got {raw!r}")
            i, j = int(parts[0]), int(parts[1])
            if len(parts) == 3:
                edges.append((i, j, float(parts[2])))
            else:
                edges.append((i, j))
    return adjacency_from_edges(edges, n=n)
