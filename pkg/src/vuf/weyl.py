"""Weyl group elements in table form: normal words, Bruhat order, cosets,
and the Demazure monoid product.

An element is canonically the permutation it induces on the roots (stored as
the signed images of the positive roots), so equality, action and length are
table lookups.  Words are derived data: ``normal_word`` is the
lexicographically least reduced word, recovered greedily from left descents.

>>> W = weyl_group(build_root_system("A", 2))
>>> w0 = longest_element(W)
>>> w0.length, w0.normal_word
(3, (0, 1, 0))
>>> demazure_product(W.simple(0), W.simple(0)) == W.simple(0)
True
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .errors import InvalidInputError
from .rootsys import Root, RootSystem, build_root_system

__all__ = [
    "WeylElement",
    "WeylGroup",
    "LeviSubset",
    "weyl_group",
    "compose",
    "invert",
    "act_on_root",
    "longest_element",
    "bruhat_leq",
    "demazure_product",
    "minimal_coset_reps",
    "max_double_coset_rep",
    "to_W_I",
    "support",
    "reduced_words",
    "reflection",
]


@dataclass(frozen=True)
class WeylElement:
    """Group element, canonically the signed permutation of positive roots.

    ``perm[k]`` is the signed index (as in :meth:`RootSystem.signed_index`)
    of the image of the k-th positive root.
    """

    group: "WeylGroup" = field(repr=False)
    perm: tuple[int, ...]

    @cached_property
    def length(self) -> int:
        return sum(1 for v in self.perm if v < 0)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def act(self, theta: Root) -> Root:
        k = self.group.system.signed_index(theta)
        image = self.perm[abs(k) - 1]
        return self.group.system.root_at(image if k > 0 else -image)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if self.group is not other.group:
            raise InvalidInputError("elements live in different Weyl groups")
        u, v = self.perm, other.perm
        return WeylElement(
            self.group,
            tuple(u[k - 1] if k > 0 else -u[-k - 1] for k in v),
        )

    @cached_property
    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for j, k in enumerate(self.perm):
            if k > 0:
                inv[k - 1] = j + 1
            else:
                inv[-k - 1] = -(j + 1)
        return WeylElement(self.group, tuple(inv))

    def right_descents(self) -> list[int]:
        simples = self.group._simple_positions
        return [i for i, pos in enumerate(simples) if self.perm[pos] < 0]

    def left_descents(self) -> list[int]:
        return self.inverse.right_descents()

    @cached_property
    def normal_word(self) -> tuple[int, ...]:
        """Lexicographically least reduced word, greedy on left descents."""
        w = self
        word: list[int] = []
        while not w.is_identity:
            i = min(w.left_descents())
            word.append(i)
            w = w.group.simple(i) * w
        return tuple(word)

    @cached_property
    def support(self) -> frozenset[int]:
        return frozenset(self.normal_word)

    def __str__(self) -> str:
        if self.is_identity:
            return "e"
        names = self.group.system.simple_names
        return "*".join(names[i] for i in self.normal_word)

    def __repr__(self) -> str:
        return f"<{self}>"


class WeylGroup:
    """Per-system element factory; interned by :func:`weyl_group`."""

    def __init__(self, system: RootSystem):
        self.system = system
        n = system.num_positive
        self._simple_positions = tuple(
            system.index(system.simple(i).coeffs) for i in range(system.rank)
        )
        self.identity = WeylElement(self, tuple(range(1, n + 1)))
        self._simples = tuple(
            WeylElement(self, system._reflection_table[i]) for i in range(system.rank)
        )

    def simple(self, i: int) -> WeylElement:
        if not 0 <= i < self.system.rank:
            raise InvalidInputError(f"simple index {i} out of range for {self.system.name}")
        return self._simples[i]

    def from_word(self, word: tuple[int, ...] | list[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = w * self.simple(i)
        return w

    @cached_property
    def elements(self) -> tuple[WeylElement, ...]:
        """All elements, by breadth-first closure, sorted by (length, word)."""
        seen = {self.identity.perm: self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self._simples:
                    ws = w * s
                    if ws.perm not in seen:
                        seen[ws.perm] = ws
                        nxt.append(ws)
            frontier = nxt
        return tuple(sorted(seen.values(), key=lambda w: (w.length, w.normal_word)))

    def __repr__(self) -> str:
        return f"WeylGroup({self.system.name})"


@lru_cache(maxsize=None)
def _weyl_group_cached(family: str, rank: int) -> WeylGroup:
    return WeylGroup(build_root_system(family, rank))


def weyl_group(system: RootSystem) -> WeylGroup:
    return _weyl_group_cached(system.family, system.rank)


@dataclass(frozen=True)
class LeviSubset:
    """A set of simple indices, viewed as the generators of a Levi factor.

    ``radical_roots`` is the root set of the unipotent radical of the
    corresponding standard parabolic: the positive roots not supported on
    the subset.
    """

    system: RootSystem
    indices: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.indices if not 0 <= i < self.system.rank]
        if bad:
            raise InvalidInputError(f"invalid Levi indices {bad} for {self.system.name}")

    @classmethod
    def of(cls, system: RootSystem, indices=()) -> "LeviSubset":
        return cls(system, frozenset(indices))

    @property
    def is_borel(self) -> bool:
        """True when the parabolic with this Levi is the Borel itself."""
        return not self.indices

    @property
    def is_full(self) -> bool:
        return self.indices == frozenset(range(self.system.rank))

    @cached_property
    def radical_roots(self) -> frozenset[Root]:
        return frozenset(
            r for r in self.system.positive_roots if not r.support <= self.indices
        )

    @cached_property
    def levi_positive_roots(self) -> frozenset[Root]:
        return frozenset(
            r for r in self.system.positive_roots if r.support <= self.indices
        )

    def contains_root(self, theta: Root) -> bool:
        """Whether ``theta`` is a root of the standard parabolic P = L.U(I)."""
        return theta.is_positive or -theta in self.levi_positive_roots

    def group(self) -> WeylGroup:
        return weyl_group(self.system)


# -- elementwise operations (spec surface) --------------------------------


def compose(u: WeylElement, v: WeylElement) -> WeylElement:
    return u * v


def invert(u: WeylElement) -> WeylElement:
    return u.inverse


def act_on_root(u: WeylElement, theta: Root) -> Root:
    return u.act(theta)


def reflection(theta: Root) -> WeylElement:
    """The reflection in an arbitrary root, as a group element."""
    system = theta.system
    W = weyl_group(system)
    images = []
    for r in system.positive_roots:
        c = system.coroot_pairing_with(theta, r)
        image = tuple(rv - c * tv for rv, tv in zip(r.coeffs, theta.coeffs))
        images.append(system._signed_index(image))
    return WeylElement(W, tuple(images))


def longest_element(group_or_levi: WeylGroup | LeviSubset) -> WeylElement:
    """Longest element of the full group, or of the Levi subgroup."""
    if isinstance(group_or_levi, WeylGroup):
        W = group_or_levi
        gens = range(W.system.rank)
    else:
        W = group_or_levi.group()
        gens = sorted(group_or_levi.indices)
    w = W.identity
    while True:
        ascent = next((i for i in gens if w.act(W.system.simple(i)).is_positive), None)
        if ascent is None:
            return w
        w = w * W.simple(ascent)


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the subword property against ``v.normal_word``."""
    if u.group is not v.group:
        raise InvalidInputError("elements live in different Weyl groups")
    x = u
    for i in v.normal_word:
        if x.is_identity:
            return True
        s = u.group.simple(i)
        sx = s * x
        if sx.length < x.length:
            x = sx
    return x.is_identity


def demazure_product(u: WeylElement, v: WeylElement) -> WeylElement:
    """Monoid product: fold ``u * s`` over ``v``, keeping length increases."""
    if u.group is not v.group:
        raise InvalidInputError("elements live in different Weyl groups")
    w = u
    for i in v.normal_word:
        ws = w * u.group.simple(i)
        if ws.length > w.length:
            w = ws
    return w


def minimal_coset_reps(levi: LeviSubset) -> tuple[WeylElement, ...]:
    """Minimal-length representatives of W / W_levi, graded by length."""
    W = levi.group()
    idx = sorted(levi.indices)
    return tuple(
        w
        for w in W.elements
        if all(w.act(W.system.simple(i)).is_positive for i in idx)
    )


def max_double_coset_rep(
    levi_left: LeviSubset, levi_right: LeviSubset, w: WeylElement
) -> WeylElement:
    """Longest element of the double coset ``W_left . w . W_right``."""
    w0l = longest_element(levi_left)
    w0r = longest_element(levi_right)
    return demazure_product(w0l, demazure_product(w, w0r))


def to_W_I(levi: LeviSubset, w: WeylElement) -> WeylElement:
    """Normalize to the longest representative of the two-sided Levi coset."""
    return max_double_coset_rep(levi, levi, w)


def support(w: WeylElement) -> frozenset[int]:
    return w.support


def reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    """All reduced words of ``w``, by recursion over left descents."""
    memo: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}

    def go(x: WeylElement) -> tuple[tuple[int, ...], ...]:
        if x.is_identity:
            return ((),)
        cached = memo.get(x.perm)
        if cached is not None:
            return cached
        words = tuple(
            (i,) + rest
            for i in x.left_descents()
            for rest in go(x.group.simple(i) * x)
        )
        memo[x.perm] = words
        return words

    return go(w)
