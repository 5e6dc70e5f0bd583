"""Association schemes in adjacency-matrix form.

A scheme is a partition of X x X into 0/1 relation matrices containing
the identity, closed under transpose, whose pairwise products are
constant on every relation.  Matrices are stored dense as tuples of
tuples; the sizes in scope stay small.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

Matrix = tuple[tuple[int, ...], ...]


class SchemeError(ValueError):
    """A matrix family that fails one of the four scheme conditions.

    `condition` is the number of the violated condition: 1 identity
    present, 2 partition of X x X, 3 transpose closure, 4 products are
    nonnegative-integer combinations.
    """

    def __init__(self, condition: int, message: str):
        super().__init__(f"condition {condition}: {message}")
        self.condition = condition


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = _transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb) for ra in a for rb in b
    )


@dataclass(frozen=True, slots=True)
class AssociationScheme:
    """A validated scheme: relations (identity first), the transpose map
    s -> s*, and the structure constants c[s][t][u] of sigma_s sigma_t."""

    size: int
    relations: tuple[Matrix, ...]
    involution: tuple[int, ...]
    structure_constants: tuple[tuple[tuple[int, ...], ...], ...]
    identity_index: int = 0

    @property
    def rank(self) -> int:
        return len(self.relations)

    @property
    def valencies(self) -> tuple[int, ...]:
        """Row sum of each relation (constant across rows for a valid scheme)."""
        return tuple(sum(m[0]) for m in self.relations)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "relations": [[list(row) for row in m] for m in self.relations],
        }


def validate(matrices) -> AssociationScheme:
    """Check the four scheme conditions and assemble the derived structure.

    Relations are reordered so the identity comes first; everything else
    keeps its input order.  Raises SchemeError with the number of the
    first violated condition, or ValueError for malformed input.
    """
    mats = [tuple(tuple(int(x) for x in row) for row in m) for m in matrices]
    if not mats:
        raise ValueError("no relation matrices given")
    n = len(mats[0])
    for s, m in enumerate(mats):
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError(f"relation {s} is not a {n}x{n} matrix")
        if any(x not in (0, 1) for row in m for x in row):
            raise ValueError(f"relation {s} has entries outside {{0, 1}}")

    ident = _identity(n)
    try:
        id_idx = mats.index(ident)
    except ValueError:
        raise SchemeError(1, "no relation is the identity matrix") from None

    # condition 2: the supports partition X x X
    owner = [[-1] * n for _ in range(n)]
    for s, m in enumerate(mats):
        if not any(x for row in m for x in row):
            raise SchemeError(2, f"relation {s} is empty")
        for x in range(n):
            for y in range(n):
                if m[x][y]:
                    if owner[x][y] >= 0:
                        raise SchemeError(
                            2, f"relations {owner[x][y]} and {s} overlap at {(x, y)}"
                        )
                    owner[x][y] = s
    for x in range(n):
        for y in range(n):
            if owner[x][y] < 0:
                raise SchemeError(2, f"no relation covers the pair {(x, y)}")

    # condition 3: closed under transpose
    index_of = {m: s for s, m in enumerate(mats)}
    raw_involution = []
    for s, m in enumerate(mats):
        t = index_of.get(_transpose(m))
        if t is None:
            raise SchemeError(3, f"transpose of relation {s} is not a relation")
        raw_involution.append(t)

    # canonical order: identity first, then input order
    perm = [id_idx] + [s for s in range(len(mats)) if s != id_idx]
    new_index = {old: new for new, old in enumerate(perm)}
    relations = tuple(mats[old] for old in perm)
    involution = tuple(new_index[raw_involution[old]] for old in perm)
    for x in range(n):
        for y in range(n):
            owner[x][y] = new_index[owner[x][y]]

    # condition 4: products constant on every relation's support
    support = []
    for m in relations:
        for x in range(n):
            found = False
            for y in range(n):
                if m[x][y]:
                    support.append((x, y))
                    found = True
                    break
            if found:
                break
    r = len(relations)
    constants = []
    for s in range(r):
        row_s = []
        for t in range(r):
            prod = _mat_mul(relations[s], relations[t])
            coeffs = tuple(prod[x][y] for x, y in support)
            for x in range(n):
                for y in range(n):
                    if prod[x][y] != coeffs[owner[x][y]]:
                        raise SchemeError(
                            4,
                            f"sigma_{s} * sigma_{t} is not constant on relation "
                            f"{owner[x][y]} (seen {prod[x][y]} and {coeffs[owner[x][y]]})",
                        )
            row_s.append(coeffs)
        constants.append(tuple(row_s))

    return AssociationScheme(
        size=n,
        relations=relations,
        involution=involution,
        structure_constants=tuple(constants),
    )


def complete_graph_scheme(n: int) -> AssociationScheme:
    """Rank-2 scheme of the complete graph on n >= 2 points: {I, J - I}.

    The nonidentity relation satisfies sigma_1^2 = (n-1) sigma_0 + (n-2) sigma_1.
    """
    if n < 2:
        raise ValueError("complete graph scheme needs n >= 2")
    ident = _identity(n)
    other = tuple(tuple(1 - x for x in row) for row in ident)
    constants = (
        (((1, 0), (0, 1))),
        (((0, 1), (n - 1, n - 2))),
    )
    return AssociationScheme(
        size=n,
        relations=(ident, other),
        involution=(0, 1),
        structure_constants=constants,
    )


def cyclic_group_scheme(n: int) -> AssociationScheme:
    """Thin scheme of the cyclic group of order n: the powers of the n-cycle.

    Relation s pairs x with x + s mod n; the adjacency algebra is the
    group ring of C_n.  n = 1 gives the trivial rank-1 scheme.
    """
    if n < 1:
        raise ValueError("group order must be positive")
    relations = tuple(
        tuple(tuple(1 if (x + s) % n == y else 0 for y in range(n)) for x in range(n))
        for s in range(n)
    )
    constants = tuple(
        tuple(
            tuple(1 if (s + t) % n == u else 0 for u in range(n))
            for t in range(n)
        )
        for s in range(n)
    )
    return AssociationScheme(
        size=n,
        relations=relations,
        involution=tuple((n - s) % n for s in range(n)),
        structure_constants=constants,
    )


def direct_product(a: AssociationScheme, b: AssociationScheme) -> AssociationScheme:
    """Scheme on |X| * |Y| points whose relations are the pairwise tensor
    products; structure constants multiply componentwise."""
    rb = b.rank
    relations = tuple(
        _kron(ma, mb) for ma in a.relations for mb in b.relations
    )
    involution = tuple(
        a.involution[s] * rb + b.involution[t]
        for s in range(a.rank)
        for t in range(b.rank)
    )
    constants = tuple(
        tuple(
            tuple(
                a.structure_constants[s1][s2][u1] * b.structure_constants[t1][t2][u2]
                for u1 in range(a.rank)
                for u2 in range(b.rank)
            )
            for s2 in range(a.rank)
            for t2 in range(b.rank)
        )
        for s1 in range(a.rank)
        for t1 in range(b.rank)
    )
    return AssociationScheme(
        size=a.size * b.size,
        relations=relations,
        involution=involution,
        structure_constants=constants,
    )


def scheme_from_dict(data: dict) -> AssociationScheme:
    """Build and validate a scheme from {"size": n, "relations": [...]}."""
    if "size" not in data or "relations" not in data:
        raise ValueError("scheme document needs 'size' and 'relations' fields")
    scheme = validate(data["relations"])
    if scheme.size != data["size"]:
        raise ValueError(
            f"declared size {data['size']} but matrices are {scheme.size}x{scheme.size}"
        )
    return scheme


def load_scheme(path) -> AssociationScheme:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return scheme_from_dict(data)


def save_scheme(scheme: AssociationScheme, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scheme.to_dict(), fh, indent=1)
        fh.write("\n")
