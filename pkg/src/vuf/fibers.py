"""Fiber analyzers for the projections of relative-position (BSDH) words.

A word is a tuple of Weyl elements over a thickened parabolic datum.  The
first projection sends the word variety to the variety of its first entry;
its fiber over a point is a product of infinitesimal root-direction factors
times the variety of the remaining entries, and the analyzers here report
exactly that direction data.

Direction rules, all in translated coordinates at the base point:

* over a point of the open cell of w1, a direction survives iff w1 carries
  it into the root set of the reduced parabolic;
* over the torus-fixed point v <= w1, a direction beta survives iff the
  torus-stable curve through v in direction beta stays inside the Schubert
  variety of w1, i.e. iff v * s_beta <= w1 in Bruhat order.  At v = w1 this
  recovers the open-cell rule; at v = id it recovers the support rule for
  simple directions.  (In family A the span of surviving curve directions
  is the whole Zariski tangent space of the Schubert variety at v, so a
  direction killed by this rule cannot survive even to first order.)
* the last projection pins the final flag; each earlier coordinate of the
  fiber picks up the direction obtained by translating the pinned
  thickening back through the prefix product.  Directions landing in the
  positive roots are absorbed by the Borel; directions landing back in the
  thickening itself are absorbed when the order comparison allows, and
  flagged (not resolved) when it does not.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Literal, Optional

from .errors import InvalidInputError
from .parabolic import ParabolicDatum
from .rootsys import Root
from .weyl import (
    LeviSubset,
    WeylElement,
    bruhat_leq,
    demazure_product,
    longest_element,
    reflection,
    to_W_I,
)

__all__ = [
    "BsdhWord",
    "ThickeningReport",
    "EXACT",
    "TANGENT_HEURISTIC",
    "dimension",
    "geometric_star",
    "first_projection_generic_fiber",
    "first_projection_fixed_point_fiber",
    "last_projection_generic_fiber",
    "is_last_projection_birational",
    "schubert_cell_thickening",
    "is_Q_type",
    "convolution_targets",
    "distinguished_subexpressions",
]

EXACT = "exact"
TANGENT_HEURISTIC = "tangent-heuristic"
Exactness = Literal["exact", "tangent-heuristic"]


@dataclass(frozen=True)
class BsdhWord:
    """A relative-position word: entries normalized to longest coset reps."""

    datum: ParabolicDatum
    entries: tuple[WeylElement, ...]

    def __post_init__(self) -> None:
        if len(self.entries) < 1:
            raise InvalidInputError("a word needs at least one entry")
        levi = self.datum.levi
        for w in self.entries:
            if w.group.system != self.datum.system:
                raise InvalidInputError("word entry from a different root system")
            if to_W_I(levi, w) != w:
                raise InvalidInputError(
                    f"entry {w} is not the longest representative of its double coset"
                )

    @property
    def r(self) -> int:
        return len(self.entries)

    def tail(self) -> Optional["BsdhWord"]:
        if self.r == 1:
            return None
        return BsdhWord(self.datum, self.entries[1:])

    def __str__(self) -> str:
        return ", ".join(str(w) for w in self.entries)


@dataclass(frozen=True)
class ThickeningReport:
    """Infinitesimal structure of one fiber (or one fiber coordinate).

    ``directions`` lists (root, exponent) pairs in translated coordinates at
    the base point; the fattening in each direction has order p**exponent.
    ``flagged`` carries unresolved order comparisons as
    (root, incoming exponent, already-present exponent) triples.
    """

    directions: tuple[tuple[Root, int], ...]
    exactness: Exactness
    residual_word: Optional[BsdhWord] = None
    flagged: tuple[tuple[Root, int, int], ...] = ()

    @property
    def reduced(self) -> bool:
        return not self.directions

    def __str__(self) -> str:
        if self.reduced and not self.flagged:
            return "reduced"
        inner = ", ".join(f"({r}, {n})" for r, n in self.directions)
        extra = (
            " flagged[" + ", ".join(f"({r}, {a}>{b})" for r, a, b in self.flagged) + "]"
            if self.flagged
            else ""
        )
        return f"thickened[{inner}]{extra} ({self.exactness})"


def _sorted_directions(datum: ParabolicDatum, pairs) -> tuple[tuple[Root, int], ...]:
    return tuple(sorted(pairs, key=lambda rn: datum.system.index((-rn[0]).coeffs)))


def _require_borel(datum: ParabolicDatum, what: str) -> None:
    if not datum.levi.is_borel:
        raise InvalidInputError(f"{what} is only implemented over the Borel case")


def dimension(word: BsdhWord) -> int:
    return sum(w.length for w in word.entries)


def geometric_star(word: BsdhWord) -> WeylElement:
    """Demazure product of the entries, normalized back into the coset poset."""
    product = reduce(demazure_product, word.entries)
    return to_W_I(word.datum.levi, product)


def first_projection_generic_fiber(word: BsdhWord) -> ThickeningReport:
    """Fiber over a point of the open cell of the first entry."""
    datum = word.datum
    w1 = word.entries[0]
    directions = [
        (beta, n)
        for beta, n in datum.orders
        if datum.levi.contains_root(w1.act(beta))
    ]
    return ThickeningReport(
        directions=_sorted_directions(datum, directions),
        exactness=EXACT,
        residual_word=word.tail(),
    )


def first_projection_fixed_point_fiber(
    word: BsdhWord, v: WeylElement
) -> ThickeningReport:
    """Fiber over the torus-fixed point of v inside the variety of w1."""
    datum = word.datum
    _require_borel(datum, "the fixed-point fiber rule")
    w1 = word.entries[0]
    if not bruhat_leq(v, w1):
        raise InvalidInputError(f"{v} is not below {w1} in Bruhat order")
    directions = [
        (beta, n)
        for beta, n in datum.orders
        if bruhat_leq(v * reflection(beta), w1)
    ]
    return ThickeningReport(
        directions=_sorted_directions(datum, directions),
        exactness=_fixed_point_exactness(w1, v),
        residual_word=word.tail(),
    )


def _fixed_point_exactness(w1: WeylElement, v: WeylElement) -> Exactness:
    """Exact in the proven regimes; a tangent-level answer elsewhere.

    Away from the open cell and the base point, the fiber is exact when the
    local slice has a single Deodhar piece whose parameter directions are
    unambiguous: a unique distinguished subexpression of v in the normal
    word of w1, with pairwise distinct slice directions that avoid the cell
    directions of v.
    """
    if v == w1 or v.is_identity:
        return EXACT
    masks = distinguished_subexpressions(v, w1.normal_word)
    if len(masks) != 1:
        return TANGENT_HEURISTIC
    system = w1.group.system
    slice_dirs = _subexpression_slice_directions(w1.normal_word, masks[0], w1.group)
    cell_dirs = {-r for r in system.positive_roots if v.act(-r).is_positive}
    distinct = len(set(slice_dirs)) == len(slice_dirs)
    return EXACT if distinct and not set(slice_dirs) & cell_dirs else TANGENT_HEURISTIC


def distinguished_subexpressions(
    v: WeylElement, word: tuple[int, ...]
) -> list[tuple[bool, ...]]:
    """Masks of positions used by distinguished subexpressions for v in word.

    Scanning left to right, a prefix may only stay put when multiplying by
    the next letter would go up; whenever it could go down it must.
    """
    group = v.group
    results: list[tuple[bool, ...]] = []

    def go(pos: int, current: WeylElement, mask: tuple[bool, ...]) -> None:
        remaining = len(word) - pos
        if abs(v.length - current.length) > remaining:
            return
        if pos == len(word):
            if current == v:
                results.append(mask)
            return
        s = group.simple(word[pos])
        cs = current * s
        go(pos + 1, cs, mask + (True,))
        if cs.length > current.length:
            go(pos + 1, current, mask + (False,))

    go(0, group.identity, ())
    return results


def _subexpression_slice_directions(word, mask, group) -> list[Root]:
    """Parameter direction of each skipped position, pushed past the used
    letters to its right (nearest first)."""
    system = group.system
    out = []
    for j, used in enumerate(mask):
        if used:
            continue
        x = -system.simple(word[j])
        for k in range(j + 1, len(word)):
            if mask[k]:
                x = system.reflect(x, word[k])
        out.append(x)
    return out


def last_projection_generic_fiber(word: BsdhWord) -> list[ThickeningReport]:
    """Per-coordinate fiber structure of the last projection over the big cell.

    Requires the concatenation of the entries to be reduced (the open
    stratum the product decomposition is anchored to); each coordinate
    i = 1..r-1 reports the directions pulled back through the prefix.
    """
    datum = word.datum
    _require_borel(datum, "the last-projection rule")
    total = reduce(lambda a, b: a * b, word.entries)
    if total.length != dimension(word):
        raise InvalidInputError(
            "the concatenated word is not reduced; the big-cell product "
            "decomposition does not apply"
        )
    reports = []
    exponents = datum.exponents
    prefix = word.entries[0]
    for i in range(word.r - 1):
        if i > 0:
            prefix = prefix * word.entries[i]
        directions = []
        flagged = []
        for beta, n in datum.orders:
            delta = prefix.inverse.act(total.act(beta))
            if delta.is_positive:
                continue
            present = exponents.get(delta)
            if present is None:
                directions.append((delta, n))
            elif n > present:
                flagged.append((delta, n, present))
        reports.append(
            ThickeningReport(
                directions=_sorted_directions(datum, directions),
                exactness=EXACT if not flagged else TANGENT_HEURISTIC,
                flagged=tuple(flagged),
            )
        )
    return reports


def is_last_projection_birational(word: BsdhWord) -> bool:
    return all(report.reduced for report in last_projection_generic_fiber(word))


def schubert_cell_thickening(datum: ParabolicDatum, w: WeylElement) -> ThickeningReport:
    """Infinitesimal structure of the two-sided orbit of w, seen at its
    fixed point in translated coordinates."""
    _require_borel(datum, "the cell-thickening rule")
    exponents = datum.exponents
    directions = []
    flagged = []
    for beta, n in datum.orders:
        delta = w.inverse.act(beta)
        if delta.is_positive:
            continue
        present = exponents.get(delta)
        if present is None:
            directions.append((delta, n))
        elif n > present:
            flagged.append((delta, n, present))
    return ThickeningReport(
        directions=_sorted_directions(datum, directions),
        exactness=EXACT if not flagged else TANGENT_HEURISTIC,
        flagged=tuple(flagged),
    )


def is_Q_type(datum_P: ParabolicDatum, levi_Q: LeviSubset, w: WeylElement) -> bool:
    """Whether the coarser parabolic's cell closure of w is no bigger than w's."""
    if not datum_P.levi.indices <= levi_Q.indices:
        raise InvalidInputError("the second Levi must contain the first")
    return demazure_product(longest_element(levi_Q), w) == w


def convolution_targets(
    datum_P: ParabolicDatum,
    levi_Q: LeviSubset,
    theta: tuple[int, ...],
    word: BsdhWord,
) -> tuple[WeylElement, ...]:
    """Grouped Demazure products of the entries pushed to the coarser poset.

    ``theta`` lists 1-based cut points i_1 < ... < i_m <= r; group k is the
    entries in positions (i_{k-1}, i_k].
    """
    if not datum_P.levi.indices <= levi_Q.indices:
        raise InvalidInputError("the second Levi must contain the first")
    if (
        not theta
        or any(a >= b for a, b in zip(theta, theta[1:]))
        or theta[0] < 1
        or theta[-1] > word.r
    ):
        raise InvalidInputError(f"malformed grouping {theta} for a word of length {word.r}")
    pushed = [to_W_I(levi_Q, w) for w in word.entries]
    targets = []
    lo = 0
    for hi in theta:
        targets.append(reduce(demazure_product, pushed[lo:hi]))
        lo = hi
    return tuple(to_W_I(levi_Q, t) for t in targets)
