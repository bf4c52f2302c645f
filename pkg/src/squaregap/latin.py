"""Mutually orthogonal Latin squares of prime order.

The whole family is generated by one affine rule: the entry in row j,
column k of the i-th square is j + i*(k-1) modulo n, shifted into the
1-based range {1, ..., n}.  For prime n the squares with i = 1, ..., n-1
are pairwise orthogonal.
"""

from dataclasses import dataclass

import numpy as np


def smallest_divisor(n: int) -> int:
    """Smallest divisor > 1 of n (n itself when n is prime). Requires n >= 2."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_divisor(n) == n


def require_prime(n: int) -> None:
    """Raise ValueError unless n is prime; the message names a witness divisor."""
    if n < 2:
        raise ValueError(f"n must be a prime >= 2, got {n}")
    d = smallest_divisor(n)
    if d != n:
        raise ValueError(f"n must be prime, but {n} = {d} * {n // d}")


@dataclass(frozen=True)
class LatinSquare:
    """An n x n array over {1, ..., n} with no repeat in any row or column."""

    order: int
    entries: np.ndarray  # shape (n, n), values 1..n

    def __post_init__(self):
        e = self.entries
        if e.shape != (self.order, self.order):
            raise ValueError(f"entries shape {e.shape} does not match order {self.order}")
        e.flags.writeable = False

    def __call__(self, j: int, k: int) -> int:
        """Entry at 1-based row j, column k."""
        return int(self.entries[j - 1, k - 1])

    def __eq__(self, other) -> bool:
        return (isinstance(other, LatinSquare)
                and self.order == other.order
                and bool(np.array_equal(self.entries, other.entries)))

    def __hash__(self):
        return hash((self.order, self.entries.tobytes()))


@dataclass(frozen=True)
class MolsFamily:
    """The n-1 pairwise orthogonal Latin squares of prime order n."""

    order: int
    squares: tuple[LatinSquare, ...]  # squares[i-1] has slope i


def build_latin(n: int, i: int) -> LatinSquare:
    """Latin square of prime order n with entry (j,k) = j + i*(k-1) mod n.

    Arithmetic runs over residues 0..n-1; stored values are the 1-based
    representatives, so the first column is always 1, 2, ..., n.
    """
    require_prime(n)
    if not 1 <= i <= n - 1:
        raise ValueError(f"slope i must be in 1..{n - 1}, got {i}")
    j = np.arange(n).reshape(n, 1)  # 0-based row residues
    k = np.arange(n).reshape(1, n)
    entries = (j + i * k) % n + 1
    return LatinSquare(order=n, entries=entries)


def is_latin(entries: np.ndarray) -> bool:
    """True iff every row and every column is a permutation of {1, ..., n}."""
    a = np.asarray(entries)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square array, got shape {a.shape}")
    n = a.shape[0]
    if n == 0 or a.min() < 1 or a.max() > n:
        raise ValueError(f"entries must lie in 1..{n}")
    full = np.arange(1, n + 1)
    rows_ok = all(np.array_equal(np.sort(a[r, :]), full) for r in range(n))
    cols_ok = all(np.array_equal(np.sort(a[:, c]), full) for c in range(n))
    return rows_ok and cols_ok


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff the n^2 ordered entry pairs (a(j,k), b(j,k)) are all distinct."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    pairs = set(zip(a.entries.ravel().tolist(), b.entries.ravel().tolist()))
    return len(pairs) == a.order * a.order


def build_mols_family(n: int) -> MolsFamily:
    """The full family {L_1, ..., L_{n-1}} for prime n >= 3, validated."""
    require_prime(n)
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    squares = tuple(build_latin(n, i) for i in range(1, n))
    for s in squares:
        if not is_latin(s.entries):
            raise AssertionError(f"generated square of order {n} is not Latin")
    for x in range(len(squares)):
        for y in range(x + 1, len(squares)):
            if not are_orthogonal(squares[x], squares[y]):
                raise AssertionError(f"squares {x + 1} and {y + 1} of order {n} not orthogonal")
    return MolsFamily(order=n, squares=squares)
