"""Dynkin diagram combinatorics and exact rational subspace arithmetic.

Nodes are numbered 1..rank following Bourbaki everywhere.  All arithmetic
is done with ``fractions.Fraction``; no floating point is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

SERIES = "ABCDEFG"


class RootDataError(ValueError):
    """Raised for invalid Dynkin types, weights or subspace operations."""


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simple Dynkin type such as A5 or E6.

    D3 is accepted and stored as A3, the standard low-rank identification.
    """

    series: str
    rank: int

    def __post_init__(self):
        series = str(self.series).upper()
        rank = self.rank
        if series not in SERIES or not isinstance(rank, int) or isinstance(rank, bool):
            raise RootDataError(f"invalid Dynkin type {self.series!r}{self.rank!r}")
        if series == "D" and rank == 3:
            series = "A"
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": rank in (6, 7, 8),
            "F": rank == 4,
            "G": rank == 2,
        }[series]
        if not ok:
            raise RootDataError(f"rank {rank} is out of range for series {series}")
        object.__setattr__(self, "series", series)

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise RootDataError(f"cannot parse Dynkin type {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self):
        return f"{self.series}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)


def all_types(max_rank: int) -> list[DynkinType]:
    """Every simple Dynkin type of rank at most ``max_rank``, without repeats."""
    out = []
    for series in SERIES:
        for rank in range(1, max_rank + 1):
            if series == "D" and rank == 3:
                continue
            try:
                out.append(DynkinType(series, rank))
            except RootDataError:
                pass
    return out


def _edges(dtype: DynkinType) -> list[tuple[int, int]]:
    n = dtype.rank
    s = dtype.series
    if s in "ABC":
        return [(i, i + 1) for i in range(1, n)]
    if s == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if s == "E":
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]
    if s == "F":
        return [(1, 2), (2, 3), (3, 4)]
    return [(1, 2)]


def cartan_matrix(dtype: DynkinType) -> list[list[int]]:
    """Cartan matrix with entry [i][j] = <alpha_i^vee, alpha_j> (0-based rows)."""
    n = dtype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(dtype):
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    s = dtype.series
    # the short root's coroot row carries the multiple bond
    if s == "B":
        a[n - 1][n - 2] = -2
    elif s == "C":
        a[n - 2][n - 1] = -2
    elif s == "F":
        a[2][1] = -2
    elif s == "G":
        a[0][1] = -3
    return a


def adjacency(dtype: DynkinType) -> dict[int, set[int]]:
    adj = {i: set() for i in dtype.nodes}
    for i, j in _edges(dtype):
        adj[i].add(j)
        adj[j].add(i)
    return adj


@dataclass(frozen=True)
class NodePermutation:
    """Permutation of the nodes; ``image[i-1]`` is the image of node i."""

    dtype: DynkinType
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(self.dtype.nodes):
            raise RootDataError(f"{image} is not a permutation of the nodes of {self.dtype}")
        a = cartan_matrix(self.dtype)
        for i in range(self.dtype.rank):
            for j in range(self.dtype.rank):
                if a[image[i] - 1][image[j] - 1] != a[i][j]:
                    raise RootDataError(f"{image} is not a diagram automorphism of {self.dtype}")
        object.__setattr__(self, "image", image)

    def __call__(self, node: int) -> int:
        return self.image[node - 1]

    def is_identity(self) -> bool:
        return all(self.image[i - 1] == i for i in self.dtype.nodes)

    def compose(self, other: "NodePermutation") -> "NodePermutation":
        """``self`` after ``other``."""
        return NodePermutation(self.dtype, tuple(self(other(i)) for i in self.dtype.nodes))

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for i in self.dtype.nodes:
            if i in seen:
                continue
            orb = [i]
            j = self(i)
            while j != i:
                orb.append(j)
                j = self(j)
            seen.update(orb)
            out.append(tuple(sorted(orb)))
        return out


def identity_permutation(dtype: DynkinType) -> NodePermutation:
    return NodePermutation(dtype, tuple(dtype.nodes))


def fork_swap(dtype: DynkinType) -> NodePermutation:
    """Swap of the two end nodes of the fork of a D_n diagram."""
    if dtype.series != "D":
        raise RootDataError(f"{dtype} has no fork")
    n = dtype.rank
    return NodePermutation(dtype, tuple(range(1, n - 1)) + (n, n - 1))


def opposition_involution(dtype: DynkinType) -> NodePermutation:
    """The diagram involution induced by minus the longest Weyl element."""
    n = dtype.rank
    if dtype.series == "A":
        return NodePermutation(dtype, tuple(n + 1 - i for i in range(1, n + 1)))
    if dtype.series == "D" and n % 2 == 1:
        return fork_swap(dtype)
    if dtype.series == "E" and n == 6:
        return NodePermutation(dtype, (6, 2, 5, 4, 3, 1))
    return identity_permutation(dtype)


def diagram_automorphisms(dtype: DynkinType) -> list[NodePermutation]:
    """All automorphisms of the Dynkin diagram (brute force over symmetries)."""
    from itertools import permutations

    n = dtype.rank
    if dtype.series == "D" and n == 4:
        return [NodePermutation(dtype, (p[0], 2, p[1], p[2])) for p in permutations((1, 3, 4))]
    if dtype.series == "D":
        return [identity_permutation(dtype), fork_swap(dtype)]
    iota = opposition_involution(dtype)
    if iota.is_identity():
        return [iota]
    return [identity_permutation(dtype), iota]


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise RootDataError("floating point weights are not accepted; use Fraction or int")
    return Fraction(x)


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """A rational weight on every node of a Dynkin diagram."""

    dtype: DynkinType
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        weights = tuple(_as_fraction(w) for w in self.weights)
        if len(weights) != self.dtype.rank:
            raise RootDataError(
                f"{self.dtype} needs {self.dtype.rank} weights, got {len(weights)}"
            )
        object.__setattr__(self, "weights", weights)

    def is_dominant(self) -> bool:
        return all(w >= 0 for w in self.weights)

    def __getitem__(self, node: int) -> Fraction:
        return self.weights[node - 1]

    def __str__(self):
        return " ".join(str(w) for w in self.weights)


def apply_involution(w: WeightedDynkinDiagram) -> WeightedDynkinDiagram:
    """Move the weight of node i to node iota(i)."""
    iota = opposition_involution(w.dtype)
    new = [Fraction(0)] * w.dtype.rank
    for i in w.dtype.nodes:
        new[iota(i) - 1] = w[i]
    return WeightedDynkinDiagram(w.dtype, tuple(new))


def is_antipodal(w: WeightedDynkinDiagram) -> bool:
    """True iff the hyperbolic orbit with dominant diagram ``w`` contains -X with X."""
    if not w.is_dominant():
        raise RootDataError("antipodality is decided on the dominant representative only")
    return apply_involution(w) == w


# exact linear algebra


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; zero rows are dropped.  Returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise RootDataError(f"row of length {len(r)} in a {ncols}-column system")
    pivots = []
    piv_r = 0
    for c in range(ncols):
        sel = next((r for r in range(piv_r, len(m)) if m[r][c] != 0), None)
        if sel is None:
            continue
        m[piv_r], m[sel] = m[sel], m[piv_r]
        p = m[piv_r][c]
        m[piv_r] = [x / p for x in m[piv_r]]
        for r in range(len(m)):
            if r != piv_r and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv_r])]
        pivots.append(c)
        piv_r += 1
        if piv_r == len(m):
            break
    return m[:piv_r], pivots


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : r.x = 0 for every row r}."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in zip(red, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class RationalSubspace:
    """Linear subspace of Q^n, stored by its reduced row-echelon basis."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        red, _ = rref(self.basis, self.ambient_dim)
        if len(red) != len(self.basis):
            raise RootDataError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "RationalSubspace":
        red, _ = rref(vectors, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def full(cls, ambient_dim: int) -> "RationalSubspace":
        return cls.span(ambient_dim, _unit_rows(ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "RationalSubspace":
        return cls(ambient_dim, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def _check(self, other: "RationalSubspace"):
        if other.ambient_dim != self.ambient_dim:
            raise RootDataError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains_vector(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise RootDataError("vector length does not match the ambient dimension")
        red, _ = rref(list(self.basis) + [list(v)], self.ambient_dim)
        return len(red) == self.dimension

    def annihilator(self) -> list[list[Fraction]]:
        """Rows whose common kernel is this subspace."""
        return nullspace(self.basis, self.ambient_dim)

    def intersection(self, other: "RationalSubspace") -> "RationalSubspace":
        self._check(other)
        rows = self.annihilator() + other.annihilator()
        return RationalSubspace.span(self.ambient_dim, nullspace(rows, self.ambient_dim))

    def sum(self, other: "RationalSubspace") -> "RationalSubspace":
        self._check(other)
        return RationalSubspace.span(self.ambient_dim, list(self.basis) + list(other.basis))

    def complement_vector(self, inner: "RationalSubspace") -> Optional[tuple[Fraction, ...]]:
        """A basis vector of ``inner`` outside this subspace, if there is one."""
        self._check(inner)
        for v in inner.basis:
            if not self.contains_vector(v):
                return v
        return None


def _unit_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def subspace_from_constraints(
    ambient_dim: int,
    zero_coords: Iterable[int] = (),
    equal_pairs: Iterable[tuple[int, int]] = (),
    extra_involution: Optional[NodePermutation] = None,
) -> RationalSubspace:
    """Vectors vanishing on ``zero_coords`` and equal across each pair (1-based)."""
    rows = []

    def unit(i):
        if not 1 <= i <= ambient_dim:
            raise RootDataError(f"coordinate {i} out of range 1..{ambient_dim}")
        r = [0] * ambient_dim
        r[i - 1] = 1
        return r

    for i in zero_coords:
        rows.append(unit(i))
    pairs = list(equal_pairs)
    if extra_involution is not None:
        if extra_involution.dtype.rank != ambient_dim:
            raise RootDataError("involution acts on a different number of nodes")
        pairs += [(i, extra_involution(i)) for i in extra_involution.dtype.nodes]
    for i, j in pairs:
        r = unit(i)
        r[j - 1] -= 1
        rows.append(r)
    return RationalSubspace.span(ambient_dim, nullspace(rows, ambient_dim))


def subspace_contains(outer: RationalSubspace, inner: RationalSubspace) -> bool:
    """True iff ``inner`` is a subspace of ``outer``."""
    outer._check(inner)
    red, _ = rref(list(outer.basis) + list(inner.basis), outer.ambient_dim)
    return len(red) == outer.dimension


def involution_fixed_space(dtype: DynkinType) -> RationalSubspace:
    return subspace_from_constraints(
        dtype.rank, extra_involution=opposition_involution(dtype)
    )
