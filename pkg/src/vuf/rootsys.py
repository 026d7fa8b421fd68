"""Split semisimple root systems of classical type, with exact integer tables.

Roots are stored as integer coefficient vectors over the simple basis, so a
single representation covers every family.  The generation walks the orbit of
the simple roots under the simple reflections, carrying root and coroot
coordinates side by side; from those two coordinate systems every pairing
``<theta_coroot, simple>`` is an exact integer lookup, precomputed once.

Only the table layer lives here.  Group elements, orders and coset
combinatorics are in :mod:`vuf.weyl`.

>>> rs = build_root_system("A", 2)
>>> [r.coeffs for r in rs.positive_roots]
[(1, 0), (0, 1), (1, 1)]
>>> pairing(rs.simple(0) + rs.simple(1), 1)
1
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidInputError

__all__ = [
    "Root",
    "RootSystem",
    "build_root_system",
    "reflect",
    "pairing",
]

SUPPORTED_FAMILIES = ("A", "B", "C", "D")

# Simple roots answer to short names in CLI flags and config files: the
# first four are the transliterated alpha, beta, gamma, delta of rank <= 4
# systems; numeric names ("s1", "s2", ...) work at any rank.
SIMPLE_LETTERS = "abgdezhq"


@dataclass(frozen=True)
class Root:
    """A root, as its integer coordinates over the simple basis."""

    system: "RootSystem"
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs not in self.system._pairing_table:
            raise InvalidInputError(f"{self.coeffs} is not a root of {self.system}")

    def __neg__(self) -> "Root":
        return Root(self.system, tuple(-c for c in self.coeffs))

    def __add__(self, other: "Root") -> "Root":
        # Only defined when the sum is again a root.
        return Root(self.system, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c != 0)

    def __str__(self) -> str:
        names = self.system.simple_names
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            parts.append(f"{sign}{'' if mag == 1 else mag}{names[i]}")
        return "".join(parts) or "0"

    def __repr__(self) -> str:
        return f"Root({self.system.name}, {self})"


class RootSystem:
    """Immutable table of roots, pairings and simple reflections.

    Instances are interned by :func:`build_root_system`; all tables are
    computed in ``__init__`` and never mutated, so sharing across threads is
    safe.
    """

    def __init__(self, family: str, rank: int):
        if family not in SUPPORTED_FAMILIES:
            raise InvalidInputError(f"unsupported family {family!r}")
        if rank < 1 or (family == "D" and rank < 2):
            raise InvalidInputError(f"unsupported rank {rank} for family {family}")
        self.family = family
        self.rank = rank
        self.cartan = _cartan_matrix(family, rank)
        self._check_cartan()

        pos = _generate_positive_roots(self.cartan)
        # Deterministic ordering: graded by height, then lexicographic.
        pos.sort(key=lambda rc: (sum(rc[0]), rc[0]))
        self._positive_coeffs = tuple(coeffs for coeffs, _ in pos)
        self._index = {coeffs: i for i, (coeffs, _) in enumerate(pos)}

        # pairing_table[theta.coeffs][j] = <theta_coroot, alpha_j>, for every
        # root theta (both signs) and simple root alpha_j.
        table: dict[tuple[int, ...], tuple[int, ...]] = {}
        for coeffs, cocoeffs in pos:
            row = tuple(
                sum(cc * self.cartan[i][j] for i, cc in enumerate(cocoeffs))
                for j in range(rank)
            )
            table[coeffs] = row
            table[tuple(-c for c in coeffs)] = tuple(-v for v in row)
        self._pairing_table = table

        self.positive_roots = tuple(Root(self, c) for c in self._positive_coeffs)

        # reflection_table[i][j] = signed index of s_i(positive_roots[j]),
        # encoding +-(k+1) for +-positive_roots[k].
        self._reflection_table = tuple(
            tuple(self._signed_index(self._reflect_coeffs(r, i)) for r in self._positive_coeffs)
            for i in range(rank)
        )
        self._check_closure()

    # -- basic queries ---------------------------------------------------

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive(self) -> int:
        return len(self._positive_coeffs)

    @property
    def simple_names(self) -> tuple[str, ...]:
        if self.rank <= len(SIMPLE_LETTERS):
            return tuple(SIMPLE_LETTERS[: self.rank])
        return tuple(f"s{i + 1}" for i in range(self.rank))

    def simple(self, i: int) -> Root:
        self._check_simple_index(i)
        return self.positive_roots[self._index[tuple(1 if j == i else 0 for j in range(self.rank))]]

    def root(self, coeffs: tuple[int, ...] | list[int]) -> Root:
        return Root(self, tuple(coeffs))

    def all_roots(self) -> Iterator[Root]:
        yield from self.positive_roots
        for r in self.positive_roots:
            yield -r

    def index(self, coeffs: tuple[int, ...]) -> int:
        """Index of a positive root in the graded ordering."""
        return self._index[coeffs]

    def signed_index(self, root: Root) -> int:
        """``+(k+1)`` for ``positive_roots[k]``, negated for its opposite."""
        return self._signed_index(root.coeffs)

    def root_at(self, signed: int) -> Root:
        r = self.positive_roots[abs(signed) - 1]
        return r if signed > 0 else -r

    # -- reflections and pairings ----------------------------------------

    def reflect(self, theta: Root, i: int) -> Root:
        self._check_simple_index(i)
        k = self._signed_index(theta.coeffs)
        image = self._reflection_table[i][abs(k) - 1]
        return self.root_at(image if k > 0 else -image)

    def pairing(self, theta: Root, i: int) -> int:
        self._check_simple_index(i)
        return self._pairing_table[theta.coeffs][i]

    def coroot_pairing_with(self, theta: Root, other: Root) -> int:
        """``<other, theta_coroot>`` for arbitrary roots, via the simple table."""
        row = self._pairing_table[theta.coeffs]
        return sum(c * row[j] for j, c in enumerate(other.coeffs))

    # -- internals --------------------------------------------------------

    def _signed_index(self, coeffs: tuple[int, ...]) -> int:
        if coeffs in self._index:
            return self._index[coeffs] + 1
        return -(self._index[tuple(-c for c in coeffs)] + 1)

    def _reflect_coeffs(self, coeffs: tuple[int, ...], i: int) -> tuple[int, ...]:
        # s_i(theta) = theta - <theta, alpha_i_coroot> alpha_i, where the
        # coefficient reads off row i of the Cartan matrix.
        c = sum(coeffs[j] * self.cartan[i][j] for j in range(self.rank))
        return tuple(v - c if j == i else v for j, v in enumerate(coeffs))

    def _check_simple_index(self, i: int) -> None:
        if not 0 <= i < self.rank:
            raise InvalidInputError(f"simple index {i} out of range for {self.name}")

    def _check_cartan(self) -> None:
        C = self.cartan
        n = self.rank
        ok = all(C[i][i] == 2 for i in range(n)) and all(
            C[i][j] <= 0 and (C[i][j] == 0) == (C[j][i] == 0)
            for i in range(n)
            for j in range(n)
            if i != j
        )
        if not ok:
            raise InvalidInputError(f"invalid Cartan matrix for {self.name}")

    def _check_closure(self) -> None:
        # The positive roots must be stable under every reflection that does
        # not change sign, and each reflection must be an involution.
        for i in range(self.rank):
            for j in range(self.num_positive):
                image = self._reflection_table[i][j]
                back = self._reflection_table[i][abs(image) - 1]
                if back * (1 if image > 0 else -1) != j + 1:
                    raise InvalidInputError(f"reflection s_{i} is not an involution")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and (self.family, self.rank) == (
            other.family,
            other.rank,
        )

    def __hash__(self) -> int:
        return hash((self.family, self.rank))

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries ``C[i][j] = <alpha_i_coroot, alpha_j>``."""
    n = rank
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        C[i][i + 1] = C[i + 1][i] = -1
    if family == "B" and n >= 2:
        # alpha_{n-1} short: the long neighbour pairs to -1, the short coroot
        # sees the long neighbour with multiplicity 2.
        C[n - 2][n - 1] = -1
        C[n - 1][n - 2] = -2
    elif family == "C" and n >= 2:
        C[n - 2][n - 1] = -2
        C[n - 1][n - 2] = -1
    elif family == "D":
        if n == 2:
            C[0][1] = C[1][0] = 0
        else:
            C[n - 1][n - 2] = C[n - 2][n - 1] = 0
            C[n - 1][n - 3] = C[n - 3][n - 1] = -1
    return tuple(tuple(row) for row in C)


def _generate_positive_roots(
    cartan: tuple[tuple[int, ...], ...],
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Orbit closure of the simple roots, as (root, coroot) coordinate pairs."""
    n = len(cartan)

    def reflect_pair(pair, i):
        coeffs, cocoeffs = pair
        c = sum(coeffs[j] * cartan[i][j] for j in range(n))
        cc = sum(cocoeffs[j] * cartan[j][i] for j in range(n))
        return (
            tuple(v - c if j == i else v for j, v in enumerate(coeffs)),
            tuple(v - cc if j == i else v for j, v in enumerate(cocoeffs)),
        )

    unit = lambda i: tuple(1 if j == i else 0 for j in range(n))
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    frontier = [(unit(i), unit(i)) for i in range(n)]
    while frontier:
        nxt = []
        for pair in frontier:
            coeffs, cocoeffs = pair
            if coeffs in seen:
                continue
            seen[coeffs] = cocoeffs
            for i in range(n):
                image = reflect_pair(pair, i)
                if any(c > 0 for c in image[0]) and image[0] not in seen:
                    nxt.append(image)
        frontier = nxt
    return [(c, cc) for c, cc in seen.items()]


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Interned constructor; ``build_root_system("A", 2)`` etc."""
    return RootSystem(family, rank)


def reflect(theta: Root, i: int) -> Root:
    """Image of ``theta`` under the i-th simple reflection."""
    return theta.system.reflect(theta, i)


def pairing(theta: Root, i: int) -> int:
    """``<theta_coroot, alpha_i>``; equals 2 iff ``theta`` is the i-th simple root."""
    return theta.system.pairing(theta, i)
