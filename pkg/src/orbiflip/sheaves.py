"""Twist classes, divisor dictionary, pushforward rules, and the Cech oracle.

The two quotients and their fiber product carry invertible orbifold sheaves
O(k) (an integer twist on either side, a pair on Y) pinned down by the
divisor table

    on X-:  A_i -> a_i,   B_j -> -b_j
    on X+:  A_i -> -a_i,  B_j -> b_j
    on Y:   A_i -> (a_i, 0), B_j -> (0, b_j), Ebar -> (-1, -1)

which is the unique assignment consistent with the pullback identities
mu-*A_i = A_i and mu+*A_i = A_i + a_i*Ebar.

The Cech oracle is the package's independent ground truth: per character it
computes the cohomology of the covering by the coordinate charts, with the
orbifold divisibility filter built in by working with downstairs exponents.
Membership of a character on a chart intersection is a sign pattern plus, on
Y and for threshold ideal sheaves, one threshold flag, so homology dimensions
are memoized per pattern.  Hypercohomology of complexes of twists runs the
full Cech double complex per strand through exact chain reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    IndexOutOfRange,
    InconsistentDegrees,
    Unsupported,
    WrongSide,
)
from .exact import chain_reduce_homology
from .linalg import (
    SPACE_MINUS,
    SPACE_PLUS,
    SPACE_Y,
    Character,
    Monomial,
    MonomialComplex,
    Term,
    characters_of_degree,
    degree,
    x_character,
    y_character,
)
from .resolution import monomials_of_weighted_degree
from .weights import WeightSequence


@dataclass(frozen=True)
class TwistClass:
    """An orbifold line-bundle class: one integer on X-, X+; a pair on Y."""

    space: str
    k: object

    def __post_init__(self):
        if self.space == SPACE_Y:
            if not (isinstance(self.k, tuple) and len(self.k) == 2):
                raise InconsistentDegrees("Y twists are (k1, k2) pairs")
        elif not isinstance(self.k, int):
            raise InconsistentDegrees(f"{self.space} twists are integers")

    def render(self) -> str:
        if self.space == SPACE_Y:
            return f"O_Y({self.k[0]},{self.k[1]})"
        tag = {"minus": "X-", "plus": "X+"}.get(self.space, self.space)
        return f"O_{tag}({self.k})"


@dataclass(frozen=True)
class ShiftedTwist:
    """A twist class with a homological shift, e.g. the Serre functor image."""

    twist: TwistClass
    shift: int

    def render(self) -> str:
        return f"{self.twist.render()}[{self.shift}]"


@dataclass(frozen=True)
class SkyscraperPattern:
    """A point sheaf on one chart with an isotropy character, placed in a
    cohomological degree: the expected shape of certain transform images."""

    chart_space: str
    chart_index: tuple[int, ...]
    character: tuple[int, ...]
    degree: int

    def render(self) -> str:
        idx = ",".join(map(str, self.chart_index))
        chi = ",".join(map(str, self.character))
        return (
            f"skyscraper on {self.chart_space}[{idx}] with character ({chi}) "
            f"in degree {self.degree}"
        )


@dataclass(frozen=True)
class DivisorId:
    """A prime divisor name: A(i), B(j), Ebar, or the exceptional locus E."""

    kind: str  # "A" | "B" | "Ebar" | "Eminus" | "Eplus"
    index: int | None = None


def A(i: int) -> DivisorId:
    return DivisorId("A", i)


def B(j: int) -> DivisorId:
    return DivisorId("B", j)


EBAR = DivisorId("Ebar")
EMINUS = DivisorId("Eminus")
EPLUS = DivisorId("Eplus")


def class_of_divisor(seq: WeightSequence, space: str, divisor: DivisorId) -> TwistClass:
    """Twist class of a prime divisor, per the convention table above.

    Ebar lives on Y only.  Eminus/Eplus denote the exceptional locus E: on Y
    (where E = gcd(a)*gcd(b)*Ebar) either name resolves to E's class; on X-
    it is a divisor only in the divisorial case n = 1 (equal to B(1)), and
    symmetrically on X+.
    """
    from math import gcd

    if divisor.kind == "A":
        i = divisor.index
        if not (i and 1 <= i <= seq.m):
            raise IndexOutOfRange(f"A({i}) with m = {seq.m}")
        w = seq.a[i - 1]
        if space == SPACE_MINUS:
            return TwistClass(space, w)
        if space == SPACE_PLUS:
            return TwistClass(space, -w)
        if space == SPACE_Y:
            return TwistClass(space, (w, 0))
        raise WrongSide(f"A(i) undefined on {space!r}")
    if divisor.kind == "B":
        j = divisor.index
        if not (j and 1 <= j <= seq.n):
            raise IndexOutOfRange(f"B({j}) with n = {seq.n}")
        w = seq.b[j - 1]
        if space == SPACE_MINUS:
            return TwistClass(space, -w)
        if space == SPACE_PLUS:
            return TwistClass(space, w)
        if space == SPACE_Y:
            return TwistClass(space, (0, w))
        raise WrongSide(f"B(j) undefined on {space!r}")
    if divisor.kind == "Ebar":
        if space != SPACE_Y:
            raise WrongSide("Ebar lives on Y only")
        return TwistClass(space, (-1, -1))
    if divisor.kind in ("Eminus", "Eplus"):
        if space == SPACE_Y:
            if seq.m == 0 or seq.n == 0:
                raise WrongSide("exceptional locus needs both sides nonempty")
            ga = 0
            for v in seq.a:
                ga = gcd(ga, v)
            gb = 0
            for v in seq.b:
                gb = gcd(gb, v)
            c = ga * gb
            return TwistClass(space, (-c, -c))
        if divisor.kind == "Eminus" and space == SPACE_MINUS and seq.n == 1:
            return TwistClass(space, -seq.b[0])
        if divisor.kind == "Eplus" and space == SPACE_PLUS and seq.m == 1:
            return TwistClass(space, -seq.a[0])
        raise WrongSide(
            f"{divisor.kind} is not a divisor on {space!r} for this sequence"
        )
    raise WrongSide(f"unknown divisor kind {divisor.kind!r}")


def dualizing_class(seq: WeightSequence, space: str, relative: str | None = None) -> TwistClass:
    """Dualizing twist of a space, or the relative one of Y over a side.

    omega_{X-} = O(sum b - sum a), omega_{X+} = O(sum a - sum b),
    omega_Y = O(1 - sum a, 1 - sum b) (extra ramification along E);
    relative "plus"/"minus" give omega_{Y/X+} = O((sum a - 1) Ebar) and
    omega_{Y/X-} = O((sum b - 1) Ebar).
    """
    sa, sb = seq.sum_a, seq.sum_b
    if relative is not None:
        if space != SPACE_Y:
            raise WrongSide("relative dualizing classes live on Y")
        if relative == SPACE_PLUS:
            return TwistClass(SPACE_Y, (1 - sa, 1 - sa))
        if relative == SPACE_MINUS:
            return TwistClass(SPACE_Y, (1 - sb, 1 - sb))
        raise WrongSide(f"unknown relative side {relative!r}")
    if space == SPACE_MINUS:
        return TwistClass(space, sb - sa)
    if space == SPACE_PLUS:
        return TwistClass(space, sa - sb)
    if space == SPACE_Y:
        return TwistClass(space, (1 - sa, 1 - sb))
    raise WrongSide(f"no dualizing class on {space!r}")


def pullback(seq: WeightSequence, side: str, k: int) -> TwistClass:
    """Pullback of O(k) along the contraction from Y to the given side."""
    if side == SPACE_MINUS:
        return TwistClass(SPACE_Y, (k, 0))
    if side == SPACE_PLUS:
        return TwistClass(SPACE_Y, (0, k))
    raise WrongSide(f"pullback is from a side, not {side!r}")


@dataclass(frozen=True)
class PushforwardResult:
    """Total direct image of O_Y(p, q) along a side contraction.

    kind "line": O(twist).  kind "ideal": the threshold ideal sheaf
    I_{ideal_index}(twist).  kind "not_closed_form": the higher direct images
    do not vanish and no closed form is asserted; a value, not an error.
    """

    kind: str
    twist: int | None = None
    ideal_index: int | None = None

    def render(self) -> str:
        if self.kind == "line":
            return f"O({self.twist})"
        if self.kind == "ideal":
            return f"I_{self.ideal_index}({self.twist})"
        return "NotClosedForm"


def line_twist(k: int) -> PushforwardResult:
    return PushforwardResult("line", twist=k)


def ideal_twist(q: int, s: int) -> PushforwardResult:
    if q < 1:
        raise InconsistentDegrees("ideal twists need index >= 1")
    return PushforwardResult("ideal", twist=s, ideal_index=q)


NOT_CLOSED_FORM = PushforwardResult("not_closed_form")


def pushforward_rule(seq: WeightSequence, side: str, pq: tuple[int, int]) -> PushforwardResult:
    """Closed-form total direct image of O_Y(p, q) along mu to the given side.

    Pushing to X- decomposes O(p, q) as pull(p - q) tensor O(-q Ebar): powers
    O(c Ebar) with 0 <= c <= sum(b) - 1 push to the structure sheaf, powers
    O(-q Ebar) with q >= 1 to the threshold ideal I_q, and at c = sum(b) the
    top fiber cohomology switches on and no closed form is returned.  The
    plus side is the mirror image.
    """
    if seq.m < 2 or seq.n < 2:
        raise Unsupported("pushforward rules assume m, n >= 2")
    p, q = pq
    if side == SPACE_MINUS:
        if 1 - seq.sum_b <= q <= 0:
            return line_twist(p - q)
        if q >= 1:
            return ideal_twist(q, p - q)
        return NOT_CLOSED_FORM
    if side == SPACE_PLUS:
        if 1 - seq.sum_a <= p <= 0:
            return line_twist(q - p)
        if p >= 1:
            return ideal_twist(p, q - p)
        return NOT_CLOSED_FORM
    raise WrongSide(f"pushforward lands on a side, not {side!r}")


def space_dimension(seq: WeightSequence, space: str) -> int:
    if space in (SPACE_MINUS, SPACE_PLUS, SPACE_Y):
        return seq.m + seq.n - 1
    raise WrongSide(f"no dimension for {space!r}")


def serre_twist(seq: WeightSequence, space: str, obj):
    """Serre functor: tensor with the dualizing class, shift by the dimension.

    TwistClass (or bare twist) input gives a ShiftedTwist; a MonomialComplex
    comes back twisted with all cohomological degrees lowered by dim.
    """
    omega = dualizing_class(seq, space).k
    dim = space_dimension(seq, space)
    if isinstance(obj, MonomialComplex):
        return obj.tensor(omega).shift(dim)
    if isinstance(obj, TwistClass):
        k = obj.k
    else:
        k = obj
    if space == SPACE_Y:
        new = (k[0] + omega[0], k[1] + omega[1])
    else:
        new = k + omega
    return ShiftedTwist(TwistClass(space, new), dim)


# ---------------------------------------------------------------------------
# The Cech oracle.


def _charts(seq: WeightSequence, space: str):
    if space == SPACE_MINUS:
        return list(range(seq.m))
    if space == SPACE_PLUS:
        return list(range(seq.n))
    if space == SPACE_Y:
        return [(i, j) for i in range(seq.m) for j in range(seq.n)]
    raise WrongSide(f"no chart cover on {space!r}")


@lru_cache(maxsize=None)
def _side_pattern_dims(m: int, neg: frozenset) -> dict[int, int]:
    """Cohomology dims of the m-chart cover for the sign pattern neg.

    The character is allowed on a chart intersection iff the inverted charts
    cover its negative coordinates; dims are computed honestly from the
    alternating Cech complex by exact reduction and memoized per pattern.
    """
    cells = {}
    for size in range(1, m + 1):
        for sub in itertools.combinations(range(m), size):
            if neg <= set(sub):
                cells[sub] = size - 1
    if not cells:
        return {}
    entries = {}
    for sub in cells:
        if len(sub) == 1:
            continue
        for pos, c in enumerate(sub):
            smaller = sub[:pos] + sub[pos + 1 :]
            if smaller in cells:
                entries[(smaller, sub)] = (-1) ** pos
    return {d: h for d, h in chain_reduce_homology(cells, entries).items() if h}


@lru_cache(maxsize=None)
def _y_pattern_dims(m: int, n: int, neg_x: frozenset, neg_y: frozenset) -> dict[int, int]:
    """Cohomology dims of the m*n-chart cover of Y for a sign pattern.

    A chart (i, j) inverts x_i and y_j; an intersection is allowed iff its
    first projections cover neg_x and second projections cover neg_y.
    """
    charts = [(i, j) for i in range(m) for j in range(n)]
    cells = {}
    for size in range(1, len(charts) + 1):
        for sub in itertools.combinations(charts, size):
            if neg_x <= {i for i, _ in sub} and neg_y <= {j for _, j in sub}:
                cells[sub] = size - 1
    if not cells:
        return {}
    entries = {}
    for sub in cells:
        if len(sub) == 1:
            continue
        for pos, c in enumerate(sub):
            smaller = sub[:pos] + sub[pos + 1 :]
            if smaller in cells:
                entries[(smaller, sub)] = (-1) ** pos
    return {d: h for d, h in chain_reduce_homology(cells, entries).items() if h}


def _char_weighted(seq: WeightSequence, char: Character) -> tuple[int, int]:
    da = sum(w * e for w, e in zip(seq.a, char.alpha))
    db = sum(w * e for w, e in zip(seq.b, char.beta))
    return da, db


def character_cohomology(
    seq: WeightSequence, space: str, twist, char: Character, threshold: int | None = None
) -> dict[int, int]:
    """Cech cohomology dims of O(twist) (or I_threshold(twist)) at one character.

    The character must satisfy the degree equation of the twist; otherwise
    the answer is empty.  threshold adds the ideal-sheaf condition: weighted
    y-degree >= threshold on X-, weighted x-degree >= threshold on X+.
    """
    da, db = _char_weighted(seq, char)
    if space == SPACE_MINUS:
        if da - db != twist:
            return {}
        if any(e < 0 for e in char.beta):
            return {}
        if threshold is not None and db < threshold:
            return {}
        neg = frozenset(i for i, e in enumerate(char.alpha) if e < 0)
        return _side_pattern_dims(seq.m, neg)
    if space == SPACE_PLUS:
        if db - da != twist:
            return {}
        if any(e < 0 for e in char.alpha):
            return {}
        if threshold is not None and da < threshold:
            return {}
        neg = frozenset(j for j, e in enumerate(char.beta) if e < 0)
        return _side_pattern_dims(seq.n, neg)
    if space == SPACE_Y:
        k1, k2 = twist
        if da - db != k1 - k2:
            return {}
        if da < k1:
            return {}
        neg_x = frozenset(i for i, e in enumerate(char.alpha) if e < 0)
        neg_y = frozenset(j for j, e in enumerate(char.beta) if e < 0)
        return _y_pattern_dims(seq.m, seq.n, neg_x, neg_y)
    raise WrongSide(f"no Cech cover on {space!r}")


def _box_bounds(seq: WeightSequence, space: str, box: int):
    """Character bounds for a sweep: coordinates that must be nonnegative for
    any chart to see the character are clamped at zero."""
    if space == SPACE_MINUS:
        return ((-box,) * seq.m, (0,) * seq.n), ((box,) * seq.m, (box,) * seq.n)
    if space == SPACE_PLUS:
        return ((0,) * seq.m, (-box,) * seq.n), ((box,) * seq.m, (box,) * seq.n)
    return ((-box,) * seq.m, (-box,) * seq.n), ((box,) * seq.m, (box,) * seq.n)


def cohomology_table(
    seq: WeightSequence,
    space: str,
    twist,
    box: int,
    threshold: int | None = None,
    limit: int | None = None,
) -> dict[Character, dict[int, int]]:
    """Per-character cohomology of a twist over the exponent box; zero rows
    are omitted, so tables compare as sparse dictionaries."""
    value = twist[0] - twist[1] if space == SPACE_Y else twist
    lows, highs = _box_bounds(seq, space, box)
    out: dict[Character, dict[int, int]] = {}
    kwargs = {} if limit is None else {"limit": limit}
    for ch in characters_of_degree(seq, space, value, low=lows, high=highs, **kwargs):
        dims = character_cohomology(seq, space, twist, ch, threshold)
        if dims:
            out[ch] = dims
    return out


def cech_cohomology(
    seq: WeightSequence,
    space: str,
    twist,
    character_box: int,
    threshold: int | None = None,
) -> dict[Character, dict[int, int]]:
    """Spec-facing alias of cohomology_table (raises BoxTooLarge past limits)."""
    return cohomology_table(seq, space, twist, character_box, threshold)


def total_cohomology(table: dict[Character, dict[int, int]]) -> dict[int, int]:
    totals: dict[int, int] = {}
    for dims in table.values():
        for d, h in dims.items():
            totals[d] = totals.get(d, 0) + h
    return totals


def wps_cohomology_totals(weights, k: int) -> list[int]:
    """Exact cohomology dimensions of O(k) on the weighted projective space
    P(weights), degree by degree.

    The per-character oracle vanishes off the two finite regions alpha >= 0
    and alpha <= -1, so the totals need no box: both regions are enumerated
    completely and each character is fed through the honest pattern complex.
    """
    weights = tuple(weights)
    m = len(weights)
    seq = WeightSequence(weights, ())
    dims = [0] * m
    for mu in monomials_of_weighted_degree(weights, k):
        for d, h in character_cohomology(seq, SPACE_MINUS, k, Character(mu, ())).items():
            dims[d] += h
    for mu in monomials_of_weighted_degree(weights, -k - sum(weights)):
        ch = Character(tuple(-1 - e for e in mu), ())
        for d, h in character_cohomology(seq, SPACE_MINUS, k, ch).items():
            dims[d] += h
    return dims


# ---------------------------------------------------------------------------
# Hypercohomology of complexes of twists.


def _term_pattern(seq, space, twist, char, threshold=None):
    """Sign pattern of a character for one term: which chart inversions it
    needs.  None when no chart allows it at all (failed flag or forbidden
    negative exponents)."""
    if space == SPACE_MINUS:
        if any(e < 0 for e in char.beta):
            return None
        if threshold is not None:
            if sum(w * e for w, e in zip(seq.b, char.beta)) < threshold:
                return None
        return frozenset(i for i, e in enumerate(char.alpha) if e < 0)
    if space == SPACE_PLUS:
        if any(e < 0 for e in char.alpha):
            return None
        if threshold is not None:
            if sum(w * e for w, e in zip(seq.a, char.alpha)) < threshold:
                return None
        return frozenset(j for j, e in enumerate(char.beta) if e < 0)
    if space == SPACE_Y:
        k1, _ = twist
        da = sum(w * e for w, e in zip(seq.a, char.alpha))
        if da < k1:
            return None
        return (
            frozenset(i for i, e in enumerate(char.alpha) if e < 0),
            frozenset(j for j, e in enumerate(char.beta) if e < 0),
        )
    raise WrongSide(f"no charts on {space!r}")


@lru_cache(maxsize=None)
def _pattern_subsets(space: str, m: int, n: int, pattern) -> tuple:
    """All chart subsets allowed for a sign pattern (upward-closed family)."""
    if pattern is None:
        return ()
    if space == SPACE_Y:
        neg_x, neg_y = pattern
        charts = [(i, j) for i in range(m) for j in range(n)]
        out = []
        for size in range(1, len(charts) + 1):
            for sub in itertools.combinations(charts, size):
                if neg_x <= {i for i, _ in sub} and neg_y <= {j for _, j in sub}:
                    out.append(sub)
        return tuple(out)
    count = m if space == SPACE_MINUS else n
    out = []
    for size in range(1, count + 1):
        for sub in itertools.combinations(range(count), size):
            if pattern <= set(sub):
                out.append(sub)
    return tuple(out)


@lru_cache(maxsize=None)
def _pattern_homology(space: str, m: int, n: int, pattern) -> dict:
    if pattern is None:
        return {}
    if space == SPACE_Y:
        return _y_pattern_dims(m, n, pattern[0], pattern[1])
    count = m if space == SPACE_MINUS else n
    return _side_pattern_dims(count, pattern)


_HYPER_MEMO: dict = {}


def _structure_signature(cx: MonomialComplex):
    """Twist-independent shape of a complex: the Cech double complex at a
    strand depends only on this and on the per-term sign patterns."""
    sig = getattr(cx, "_signature", None)
    if sig is None:
        sig = (
            cx.space,
            cx.seq.a,
            cx.seq.b,
            tuple((d, len(ts)) for d, ts in sorted(cx.terms.items())),
            tuple(
                (d, i, j, mono.coeff)
                for d, tab in sorted(cx.diffs.items())
                for (i, j), mono in sorted(tab.items())
            ),
        )
        cx._signature = sig
    return sig


def hypercohomology_strand(cx: MonomialComplex, char: Character) -> dict[int, int]:
    """Hypercohomology dims of the Cech double complex of cx at one character.

    Columns with no per-term cohomology are dropped early (a bounded double
    complex with exact columns is exact).  The double complex is a function
    of the per-term sign patterns alone, so reductions are memoized by
    (complex shape, pattern tuple).  Total degree = term degree + Cech degree.
    """
    seq, space = cx.seq, cx.space
    m, n = seq.m, seq.n
    patterns = []
    any_alive = False
    for d in sorted(cx.terms):
        for i, t in enumerate(cx.terms[d]):
            p = _term_pattern(seq, space, t.twist, char - t.offset)
            patterns.append(((d, i), p))
            if not any_alive and _pattern_homology(space, m, n, p):
                any_alive = True
    if not any_alive:
        return {}
    key = (_structure_signature(cx), tuple(patterns))
    cached = _HYPER_MEMO.get(key)
    if cached is not None:
        return cached

    subsets = {
        (d, i): _pattern_subsets(space, m, n, p) for (d, i), p in patterns
    }
    cells: dict[tuple, int] = {}
    for (d, i), subs in subsets.items():
        for sub in subs:
            cells[(d, i, sub)] = d + len(sub) - 1

    entries: dict[tuple, Fraction] = {}
    # Cech coboundaries within each term.
    for (d, i), subs in subsets.items():
        present = set(subs)
        for sub in subs:
            if len(sub) == 1:
                continue
            for pos, c in enumerate(sub):
                smaller = sub[:pos] + sub[pos + 1 :]
                if smaller in present:
                    entries[((d, i, smaller), (d, i, sub))] = Fraction((-1) ** pos)
    # Term differentials, sign-twisted by the Cech degree.
    for d, tab in cx.diffs.items():
        for (i, j), mono in tab.items():
            for sub in subsets.get((d, i), ()):
                if (d + 1, j, sub) not in cells:
                    raise InconsistentDegrees(
                        "chart membership not monotone along a differential"
                    )
                sign = -1 if (len(sub) - 1) % 2 else 1
                entries[((d, i, sub), (d + 1, j, sub))] = mono.coeff * sign
    result = {d: h for d, h in chain_reduce_homology(cells, entries).items() if h}
    _HYPER_MEMO[key] = result
    return result


def hypercohomology_table(
    cx: MonomialComplex, box: int, limit: int | None = None
) -> dict[Character, dict[int, int]]:
    """Per-character hypercohomology of a complex of twists over a box.

    The live region of a strand sits inside the envelope of the term offsets:
    coordinates forced nonnegative on every chart are clamped at the envelope
    minimum, all others padded by the box on both sides.
    """
    if cx.reference_degree is None or not cx.terms:
        return {}
    lows, highs = hypercohomology_bounds(cx, box)
    return hypercohomology_table_bounded(cx, lows, highs, limit=limit)


def hypercohomology_bounds(cx: MonomialComplex, box: int):
    """Character bounds covering every strand the box-padded envelope can see."""
    seq, space = cx.seq, cx.space
    offsets = [t.offset for ts in cx.terms.values() for t in ts]
    lo_a = [min(o.alpha[i] for o in offsets) for i in range(seq.m)]
    hi_a = [max(o.alpha[i] for o in offsets) for i in range(seq.m)]
    lo_b = [min(o.beta[j] for o in offsets) for j in range(seq.n)]
    hi_b = [max(o.beta[j] for o in offsets) for j in range(seq.n)]
    pad_a_low = 0 if space == SPACE_PLUS else box
    pad_b_low = 0 if space == SPACE_MINUS else box
    lows = (
        tuple(v - pad_a_low for v in lo_a),
        tuple(v - pad_b_low for v in lo_b),
    )
    highs = (
        tuple(v + box for v in hi_a),
        tuple(v + box for v in hi_b),
    )
    return lows, highs


def hypercohomology_table_bounded(
    cx: MonomialComplex, lows, highs, limit: int | None = None
) -> dict[Character, dict[int, int]]:
    """hypercohomology_table over explicit per-coordinate character bounds."""
    if cx.reference_degree is None or not cx.terms:
        return {}
    out: dict[Character, dict[int, int]] = {}
    kwargs = {} if limit is None else {"limit": limit}
    for ch in characters_of_degree(
        cx.seq, cx.space, cx.reference_degree, low=lows, high=highs, **kwargs
    ):
        dims = hypercohomology_strand(cx, ch)
        if dims:
            out[ch] = dims
    return out


# ---------------------------------------------------------------------------
# Standard complexes on the quotients.


def _koszul_sign(pos: int) -> int:
    return -1 if pos % 2 else 1


def exceptional_koszul(seq: WeightSequence, side: str, d: int) -> MonomialComplex:
    """Koszul complex of the coordinate cut of the exceptional locus.

    On X+ the exceptional weighted projective space P(b) is cut by all x_i,
    so O_{E+}(d) is resolved by terms O(d + sum_{i in S} a_i) over subsets S,
    in cohomological degrees -|S|; the minus side mirrors with the y's.
    """
    if seq.m < 2 or seq.n < 2:
        raise Unsupported("the exceptional locus needs m, n >= 2")
    if side == SPACE_PLUS:
        weights = seq.a
        embed = lambda exps: x_character(seq, exps)
    elif side == SPACE_MINUS:
        weights = seq.b
        embed = lambda exps: y_character(seq, exps)
    else:
        raise WrongSide(f"exceptional locus lives on a side, not {side!r}")
    count = len(weights)
    subsets = []
    for size in range(count + 1):
        subsets.extend(itertools.combinations(range(count), size))
    terms: dict[int, list[Term]] = {}
    index: dict[tuple, tuple[int, int]] = {}
    for sub in subsets:
        deg = -len(sub)
        exps = tuple(1 if i in sub else 0 for i in range(count))
        twist = d + sum(weights[i] for i in sub)
        terms.setdefault(deg, [])
        index[sub] = (deg, len(terms[deg]))
        terms[deg].append(Term(twist, embed(exps)))
    diffs: dict[int, dict[tuple[int, int], Monomial]] = {}
    for sub in subsets:
        if not sub:
            continue
        sdeg, sidx = index[sub]
        for pos, i in enumerate(sub):
            smaller = sub[:pos] + sub[pos + 1 :]
            tdeg, tidx = index[smaller]
            gamma = embed(tuple(1 if c == i else 0 for c in range(count)))
            diffs.setdefault(sdeg, {})[(sidx, tidx)] = Monomial(
                Fraction(_koszul_sign(pos)), gamma
            )
    return MonomialComplex(seq, side, terms, diffs)


def euler_cotangent_complex(seq: WeightSequence, side: str, d: int) -> MonomialComplex:
    """A line-bundle complex on a side quasi-isomorphic to the twisted
    cotangent sheaf of the exceptional projective space.

    Only the unweighted Euler sequence is in scope: on X+ all b_j must be 1.
    The complex is the totalization of the Koszul resolutions of the Euler
    presentation [O_{E+}(d-1)^n -> O_{E+}(d)], its cohomology being the
    kernel Omega^1_{E+}(d) in degree 0.
    """
    if seq.m < 2 or seq.n < 2:
        raise Unsupported("the exceptional locus needs m, n >= 2")
    if side == SPACE_PLUS:
        if any(b != 1 for b in seq.b):
            raise _unsupported_weights(seq, "b")
        cut_weights = seq.a
        fiber = seq.n
        embed_cut = lambda exps: x_character(seq, exps)
        embed_fiber = lambda j: y_character(
            seq, tuple(1 if c == j else 0 for c in range(seq.n))
        )
    elif side == SPACE_MINUS:
        if any(a != 1 for a in seq.a):
            raise _unsupported_weights(seq, "a")
        cut_weights = seq.b
        fiber = seq.m
        embed_cut = lambda exps: y_character(seq, exps)
        embed_fiber = lambda i: x_character(
            seq, tuple(1 if c == i else 0 for c in range(seq.m))
        )
    else:
        raise WrongSide(f"cotangent objects live on a side, not {side!r}")

    count = len(cut_weights)
    subsets = []
    for size in range(count + 1):
        subsets.extend(itertools.combinations(range(count), size))

    terms: dict[int, list[Term]] = {}
    index: dict[tuple, tuple[int, int]] = {}

    def add(key, deg, twist, offset):
        terms.setdefault(deg, [])
        index[key] = (deg, len(terms[deg]))
        terms[deg].append(Term(twist, offset))

    for sub in subsets:
        exps = tuple(1 if i in sub else 0 for i in range(count))
        a_s = sum(cut_weights[i] for i in sub)
        base = embed_cut(exps)
        for j in range(fiber):
            add(
                (sub, 0, j),
                -len(sub),
                (d - 1) + a_s,
                base + embed_fiber(j),
            )
        add((sub, 1, None), -len(sub) + 1, d + a_s, base)

    diffs: dict[int, dict[tuple[int, int], Monomial]] = {}

    def put(src_key, tgt_key, coeff, gamma):
        sdeg, sidx = index[src_key]
        tdeg, tidx = index[tgt_key]
        if tdeg != sdeg + 1:
            raise InconsistentDegrees("totalization degree mismatch")
        diffs.setdefault(sdeg, {})[(sidx, tidx)] = Monomial(Fraction(coeff), gamma)

    for sub in subsets:
        # Koszul differentials within each row.
        for pos, i in enumerate(sub):
            smaller = sub[:pos] + sub[pos + 1 :]
            gamma = embed_cut(tuple(1 if c == i else 0 for c in range(count)))
            sign = _koszul_sign(pos)
            for j in range(fiber):
                put((sub, 0, j), (smaller, 0, j), sign, gamma)
            put((sub, 1, None), (smaller, 1, None), sign, gamma)
        # Euler map across rows, sign-twisted by the Koszul degree.
        esign = -1 if len(sub) % 2 else 1
        for j in range(fiber):
            put((sub, 0, j), (sub, 1, None), esign, embed_fiber(j))
    return MonomialComplex(seq, side, terms, diffs)


def _unsupported_weights(seq, side_name):
    from .errors import UnsupportedWeights

    return UnsupportedWeights(
        f"Euler cotangent objects need unit {side_name}-weights, got {seq}"
    )
