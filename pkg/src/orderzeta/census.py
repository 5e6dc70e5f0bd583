"""Brute-force census of finite-index sublattices and left ideals.

Sublattices of Z^r of index n are enumerated bijectively through their
Hermite normal form bases: upper-triangular rows with positive diagonal
d_1 ... d_r multiplying to n and the entries above each pivot reduced
mod that pivot.  Ideals are the enumerated lattices closed under left
multiplication by every basis element, tested by exact back substitution.
This is the ground truth every closed-form factor is compared against;
no floating point appears anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, primes_upto, smallest_prime_factors
from .orders import IntegralOrder
from .series import DirichletCoefficients


@dataclass(frozen=True, slots=True)
class HnfBasis:
    """Canonical upper-triangular basis of a finite-index sublattice.

    Rows are the basis vectors; two sublattices are equal exactly when
    their HnfBasis values are equal.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != r:
                raise ValueError("basis matrix must be square")
            if any(row[j] for j in range(i)):
                raise ValueError("basis matrix must be upper triangular")
            if row[i] <= 0:
                raise ValueError("diagonal entries must be positive")
        for j in range(r):
            d = self.rows[j][j]
            if any(not 0 <= self.rows[i][j] < d for i in range(j)):
                raise ValueError(f"entries above pivot {j} must be reduced mod {d}")

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(len(self.rows)))

    @property
    def index(self) -> int:
        out = 1
        for d in self.diagonal:
            out *= d
        return out

    def contains(self, vector) -> bool:
        """Exact membership by back substitution against the triangular rows."""
        r = self.dimension
        if len(vector) != r:
            raise ValueError("vector has the wrong length")
        w = list(vector)
        for j in range(r):
            t = w[j]
            if t:
                q, rem = divmod(t, self.rows[j][j])
                if rem:
                    return False
                row = self.rows[j]
                for k in range(j + 1, r):
                    w[k] -= q * row[k]
        return True


def _diagonals(r: int, n: int):
    # all (d_1, ..., d_r) with product n, in lexicographic order
    if r == 1:
        yield (n,)
        return
    for d in divisors(n):
        for rest in _diagonals(r - 1, n // d):
            yield (d,) + rest


def _raw_sublattices(r: int, n: int):
    """Yield (diagonal, rows) pairs; rows are fresh lists the consumer may keep."""
    for diag in _diagonals(r, n):
        free = [(i, j) for j in range(r) if diag[j] > 1 for i in range(j)]
        base = [[0] * r for _ in range(r)]
        for i in range(r):
            base[i][i] = diag[i]
        if not free:
            yield diag, base
            continue
        ranges = [range(diag[j]) for (_i, j) in free]
        for fill in itertools.product(*ranges):
            rows = [row[:] for row in base]
            for (i, j), v in zip(free, fill):
                rows[i][j] = v
            yield diag, rows


def enumerate_sublattices(rank: int, index: int):
    """Every index-`index` sublattice of Z^rank exactly once, as HnfBasis values.

    Deterministic order: diagonals lexicographically, then the off-diagonal
    entries in mixed-radix order column by column.
    """
    if rank < 1 or index < 1:
        raise ValueError("rank and index must be positive")
    for _diag, rows in _raw_sublattices(rank, index):
        yield HnfBasis(tuple(tuple(row) for row in rows))


def _mult_matrices(order: IntegralOrder):
    # left-multiplication matrix of each basis element, identity rows dropped
    r = order.rank
    ident = tuple(tuple(1 if k == j else 0 for j in range(r)) for k in range(r))
    mats = []
    for i in range(r):
        m = tuple(tuple(order.table[i][j][k] for j in range(r)) for k in range(r))
        if m != ident and m not in mats:
            mats.append(m)
    return tuple(mats)


def _closed_under(mats, diag, rows, r) -> bool:
    # is the lattice spanned by `rows` closed under every matrix in mats?
    for mat in mats:
        for i_h in range(r):
            h = rows[i_h]
            cols = range(i_h, r)  # h starts with i_h zeros
            w = [sum(mk[j] * h[j] for j in cols) for mk in mat]
            for j in range(r):
                t = w[j]
                if t:
                    q, rem = divmod(t, diag[j])
                    if rem:
                        return False
                    row = rows[j]
                    for k in range(j + 1, r):
                        w[k] -= q * row[k]
    return True


@lru_cache(maxsize=None)
def count_left_ideals(order: IntegralOrder, index: int) -> int:
    """Number of index-`index` sublattices of the order closed under left
    multiplication by every basis element."""
    if index < 1:
        raise ValueError("index must be positive")
    if index == 1:
        return 1
    mats = _mult_matrices(order)
    r = order.rank
    count = 0
    for diag, rows in _raw_sublattices(r, index):
        if _closed_under(mats, diag, rows, r):
            count += 1
    return count


def ideal_series(
    order: IntegralOrder, bound: int, prime_powers_only: bool = False
) -> DirichletCoefficients:
    """Ideal counts a_1..a_bound of the order.

    With `prime_powers_only` the census runs only at prime-power indices
    and composite entries are filled in multiplicatively, which is valid
    because an ideal of finite index splits into its localizations; the
    direct mode counts every index and doubles as a test of that
    decomposition.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    values = [0] * (bound + 1)
    values[1] = 1
    if prime_powers_only:
        prime_power: dict[int, list[int]] = {}
        for p in primes_upto(bound):
            counts = [1]
            q = p
            while q <= bound:
                counts.append(count_left_ideals(order, q))
                q *= p
            prime_power[p] = counts
        spf = smallest_prime_factors(bound)
        for n in range(2, bound + 1):
            p = spf[n]
            m, k = n, 0
            while m % p == 0:
                m //= p
                k += 1
            values[n] = values[m] * prime_power[p][k]
    else:
        for n in range(2, bound + 1):
            values[n] = count_left_ideals(order, n)
    return DirichletCoefficients(bound, values[1:])
