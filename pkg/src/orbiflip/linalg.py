"""Torus characters, monomial complexes of twists, and strand linear algebra.

A character is an exponent pair (alpha, beta) for the x- and y-variables.
Complexes of orbifold line bundles with monomial differentials decompose into
finite-dimensional strands, one per character; every verification in this
package bottoms out in exact homology computations on such strands.

Each complex term carries, besides its twist, an offset character: the
cumulative monomial multidegree relative to the complex's reference sheaf.
The strand of the complex at an absolute character chi selects in each term
the single potential basis monomial chi - offset and keeps it when it is a
section of the term's twist on the ambient space.  Differential entries act
on strands by their rational coefficients alone, the monomial part being
absorbed by the offsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .errors import BoxTooLarge, InconsistentDegrees, Unsupported
from .exact import complex_homology_dims
from .weights import WeightSequence

SPACE_MINUS = "minus"
SPACE_PLUS = "plus"
SPACE_Y = "Y"
SPACE_MODULE = "module"

SPACES = (SPACE_MINUS, SPACE_PLUS, SPACE_Y, SPACE_MODULE)

ENUMERATION_LIMIT = 4_000_000


class Character(NamedTuple):
    """Exponent vectors of a monomial x^alpha y^beta (entries may be negative)."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __add__(self, other: "Character") -> "Character":
        return Character(
            tuple(u + v for u, v in zip(self.alpha, other.alpha)),
            tuple(u + v for u, v in zip(self.beta, other.beta)),
        )

    def __sub__(self, other: "Character") -> "Character":
        return Character(
            tuple(u - v for u, v in zip(self.alpha, other.alpha)),
            tuple(u - v for u, v in zip(self.beta, other.beta)),
        )

    def __neg__(self) -> "Character":
        return Character(tuple(-u for u in self.alpha), tuple(-u for u in self.beta))

    def is_nonnegative(self) -> bool:
        return all(u >= 0 for u in self.alpha) and all(u >= 0 for u in self.beta)

    def render(self) -> str:
        parts = [f"x{i + 1}^{e}" for i, e in enumerate(self.alpha) if e]
        parts += [f"y{j + 1}^{e}" for j, e in enumerate(self.beta) if e]
        return "*".join(parts) if parts else "1"


def zero_character(seq: WeightSequence) -> Character:
    return Character((0,) * seq.m, (0,) * seq.n)


def x_character(seq: WeightSequence, exponents) -> Character:
    return Character(tuple(exponents), (0,) * seq.n)


def y_character(seq: WeightSequence, exponents) -> Character:
    return Character((0,) * seq.m, tuple(exponents))


class Monomial(NamedTuple):
    """A nonzero rational multiple of a single character."""

    coeff: Fraction
    char: Character


class Term(NamedTuple):
    """One summand of a complex: a twist plus the offset character of its generator."""

    twist: object  # int on X-/X+/module, (k1, k2) pair on Y
    offset: Character


def degree(seq: WeightSequence, space: str, char: Character):
    """Twist degree of a character.

    Convention fixed by the pullback identities: on the minus side x_i has
    degree a_i and y_j degree -b_j; the plus side negates; on Y the bidegree
    is the pair (sum a*alpha, sum b*beta); module means the x-side polynomial
    ring, graded by the a-weights.
    """
    da = sum(w * e for w, e in zip(seq.a, char.alpha))
    db = sum(w * e for w, e in zip(seq.b, char.beta))
    if space == SPACE_MINUS:
        return da - db
    if space == SPACE_PLUS:
        return db - da
    if space == SPACE_Y:
        return (da, db)
    if space == SPACE_MODULE:
        return da
    raise Unsupported(f"unknown space {space!r}")


def is_section(seq: WeightSequence, space: str, twist, char: Character) -> bool:
    """Membership of a character in the global sections of O(twist).

    minus/plus: nonnegative exponents of the matching twist degree.
    Y with twist (k1, k2): nonnegative, degree difference k1 - k2, and
    x-weighted degree at least k1 (the exceptional-divisor condition).
    module: nonnegative exponents (twists index generators, no constraint).
    """
    if not char.is_nonnegative():
        return False
    if space == SPACE_MODULE:
        return True
    d = degree(seq, space, char)
    if space == SPACE_Y:
        k1, k2 = twist
        da, db = d
        return da - db == k1 - k2 and da >= k1
    return d == twist


def characters_of_degree(
    seq: WeightSequence,
    space: str,
    value,
    *,
    low,
    high,
    limit: int = ENUMERATION_LIMIT,
) -> Iterator[Character]:
    """All characters in a box satisfying the space's degree equation.

    For minus/module the equation is sum(a*alpha) - sum(b*beta) == value (on
    the plus side negated); on Y pass value = k1 - k2.  `low` and `high` are
    either int bounds applied to every exponent or (alpha_bounds, beta_bounds)
    pairs of per-coordinate bounds.  One coordinate of largest weight is
    solved exactly, the others are enumerated.
    """
    weights = list(seq.a) + [-w for w in seq.b]
    if space == SPACE_PLUS:
        value = -value
    size = seq.m + seq.n
    if size == 0:
        return

    def expand(bound):
        if isinstance(bound, int):
            return [bound] * size
        return list(bound[0]) + list(bound[1])

    lows = expand(low)
    highs = expand(high)
    solve_at = max(range(size), key=lambda c: (abs(weights[c]), c))
    free = [c for c in range(size) if c != solve_at]
    total = 1
    for c in free:
        total *= max(highs[c] - lows[c] + 1, 0)
        if total > limit:
            raise BoxTooLarge(f"character box of size > {limit}")

    def rec(idx: int, partial: int, chosen: list[int]):
        if idx == len(free):
            rem = value - partial
            w = weights[solve_at]
            if rem % w:
                return
            v = rem // w
            if v < lows[solve_at] or v > highs[solve_at]:
                return
            full = [0] * size
            for c, e in zip(free, chosen):
                full[c] = e
            full[solve_at] = v
            yield Character(tuple(full[: seq.m]), tuple(full[seq.m :]))
            return
        c = free[idx]
        w = weights[c]
        for e in range(lows[c], highs[c] + 1):
            chosen.append(e)
            yield from rec(idx + 1, partial + w * e, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def section_basis(seq: WeightSequence, space: str, twist, box: int) -> list[Character]:
    """Lattice points of the section membership predicate inside the box,
    in deterministic lexicographic order."""
    value = twist
    if space == SPACE_Y:
        value = twist[0] - twist[1]
    found = [
        ch
        for ch in characters_of_degree(seq, space, value, low=0, high=box)
        if is_section(seq, space, twist, ch)
    ]
    return sorted(found)


def _twist_delta(space: str, src, tgt):
    if space == SPACE_Y:
        return (tgt[0] - src[0], tgt[1] - src[1])
    return tgt - src


class MonomialComplex:
    """A bounded complex of twists with matrices of monomial entries.

    terms maps a cohomological degree to its tuple of Terms; diffs[d] maps
    (source_index, target_index) pairs, source in degree d and target in
    degree d + 1, to Monomial entries.  Construction verifies that entries
    are honest sheaf maps (nonnegative monomial of the degree dictated by the
    twists, consistent with the offsets) and that d composed with d vanishes.
    """

    def __init__(self, seq: WeightSequence, space: str, terms, diffs):
        if space not in SPACES:
            raise Unsupported(f"unknown space {space!r}")
        self.seq = seq
        self.space = space
        self.terms: dict[int, tuple[Term, ...]] = {
            d: tuple(ts) for d, ts in terms.items() if ts
        }
        self.diffs: dict[int, dict[tuple[int, int], Monomial]] = {
            d: dict(tab) for d, tab in diffs.items() if tab
        }
        self._validate()

    def _validate(self):
        seq, space = self.seq, self.space
        ref = None
        for d, ts in self.terms.items():
            for term in ts:
                if space == SPACE_Y:
                    if not (isinstance(term.twist, tuple) and len(term.twist) == 2):
                        raise InconsistentDegrees("Y terms need (k1, k2) twists")
                elif not isinstance(term.twist, int):
                    raise InconsistentDegrees(f"{space} terms need integer twists")
                g = term.offset
                if len(g.alpha) != seq.m or len(g.beta) != seq.n:
                    raise InconsistentDegrees("offset character has wrong shape")
                if space == SPACE_Y:
                    da, db = degree(seq, SPACE_Y, g)
                    r = (term.twist[0] - term.twist[1]) + (da - db)
                elif space == SPACE_MODULE:
                    r = term.twist + degree(seq, SPACE_MODULE, g)
                else:
                    r = term.twist + degree(seq, space, g)
                if ref is None:
                    ref = r
                elif r != ref:
                    raise InconsistentDegrees(
                        f"terms disagree on the reference degree: {r} != {ref}"
                    )
        self.reference_degree = ref

        for d, tab in self.diffs.items():
            srcs = self.terms.get(d, ())
            tgts = self.terms.get(d + 1, ())
            for (i, j), mono in tab.items():
                if i >= len(srcs) or j >= len(tgts):
                    raise InconsistentDegrees("differential entry out of range")
                if mono.coeff == 0:
                    raise InconsistentDegrees("zero coefficient stored")
                src, tgt = srcs[i], tgts[j]
                gamma = src.offset - tgt.offset
                if gamma != mono.char:
                    raise InconsistentDegrees(
                        "entry character must equal offset difference"
                    )
                delta = _twist_delta(self.space, src.twist, tgt.twist)
                if not is_section(seq, space, delta, gamma):
                    raise InconsistentDegrees(
                        f"entry {mono.char.render()} is not a section of O({delta})"
                    )

        # d o d = 0, coefficientwise (characters agree automatically).
        for d, tab in self.diffs.items():
            nxt = self.diffs.get(d + 1)
            if not nxt:
                continue
            acc: dict[tuple[int, int], Fraction] = {}
            for (i, j), m1 in tab.items():
                for (j2, k), m2 in nxt.items():
                    if j2 == j:
                        key = (i, k)
                        acc[key] = acc.get(key, Fraction(0)) + m1.coeff * m2.coeff
            for key, total in acc.items():
                if total != 0:
                    raise InconsistentDegrees(f"d o d != 0 at {d}, entry {key}")

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def term_count(self) -> int:
        return sum(len(ts) for ts in self.terms.values())

    def tensor(self, twist_delta) -> "MonomialComplex":
        """Tensor by O(twist_delta) on the same space: twists shift, offsets stay."""
        if self.space == SPACE_Y:
            shifted = {
                d: [
                    Term((t.twist[0] + twist_delta[0], t.twist[1] + twist_delta[1]), t.offset)
                    for t in ts
                ]
                for d, ts in self.terms.items()
            }
        else:
            shifted = {
                d: [Term(t.twist + twist_delta, t.offset) for t in ts]
                for d, ts in self.terms.items()
            }
        return MonomialComplex(self.seq, self.space, shifted, self.diffs)

    def shift(self, amount: int) -> "MonomialComplex":
        """Shift functor [amount]: degrees drop by amount, differentials keep signs
        (only dimensions are consumed downstream)."""
        terms = {d - amount: ts for d, ts in self.terms.items()}
        diffs = {d - amount: tab for d, tab in self.diffs.items()}
        return MonomialComplex(self.seq, self.space, terms, diffs)

    def translate(self, offset_delta: Character, degree_delta: int = 0) -> "MonomialComplex":
        """Add a common character to every offset and shift all degrees up.

        Entry characters are offset differences, so they are unchanged; only
        the reference point of the strand grading moves.
        """
        terms = {
            d + degree_delta: [Term(t.twist, t.offset + offset_delta) for t in ts]
            for d, ts in self.terms.items()
        }
        diffs = {d + degree_delta: tab for d, tab in self.diffs.items()}
        return MonomialComplex(self.seq, self.space, terms, diffs)

    def dual_into(self, target_twist) -> "MonomialComplex":
        """RHom(-, O(target_twist)) for a line-bundle complex: terms reflect to
        O(target - twist) at negated degrees with negated offsets; entries
        transpose with a sign making the squares anticommute."""
        terms: dict[int, list[Term]] = {}
        index: dict[tuple[int, int], tuple[int, int]] = {}
        for d, ts in self.terms.items():
            nd = -d
            terms.setdefault(nd, [])
            for i, t in enumerate(ts):
                if self.space == SPACE_Y:
                    tw = (target_twist[0] - t.twist[0], target_twist[1] - t.twist[1])
                else:
                    tw = target_twist - t.twist
                index[(d, i)] = (nd, len(terms[nd]))
                terms[nd].append(Term(tw, -t.offset))
        diffs: dict[int, dict[tuple[int, int], Monomial]] = {}
        for d, tab in self.diffs.items():
            for (i, j), mono in tab.items():
                (sd, si) = index[(d + 1, j)]
                (td, ti) = index[(d, i)]
                # sd = -(d+1), td = -d = sd + 1
                sign = -1 if sd % 2 else 1
                diffs.setdefault(sd, {})[(si, ti)] = Monomial(mono.coeff * sign, mono.char)
        return MonomialComplex(self.seq, self.space, terms, diffs)

    def summary(self) -> dict:
        def tw(t):
            return list(t) if isinstance(t, tuple) else t

        return {
            "space": self.space,
            "terms": {
                str(d): [tw(t.twist) for t in ts] for d, ts in sorted(self.terms.items())
            },
        }

    def to_json_dict(self) -> dict:
        data = self.summary()
        data["offsets"] = {
            str(d): [[list(t.offset.alpha), list(t.offset.beta)] for t in ts]
            for d, ts in sorted(self.terms.items())
        }
        data["entries"] = {
            str(d): [
                {
                    "src": i,
                    "tgt": j,
                    "coeff": str(m.coeff),
                    "char": [list(m.char.alpha), list(m.char.beta)],
                }
                for (i, j), m in sorted(tab.items())
            ]
            for d, tab in sorted(self.diffs.items())
        }
        return data


def single_twist_complex(
    seq: WeightSequence, space: str, twist, degree_at: int = 0, offset: Character | None = None
) -> MonomialComplex:
    off = offset if offset is not None else zero_character(seq)
    return MonomialComplex(seq, space, {degree_at: [Term(twist, off)]}, {})


@dataclass(frozen=True)
class StrandComplex:
    """The finite-dimensional restriction of a complex to one character.

    bases[k] lists (degree-local) term indices whose shifted character is a
    section; mats[k] is the matrix of rational coefficients from degree
    degrees[k] to degrees[k] + 1 stored as rows indexed by targets.
    """

    character: Character
    degrees: tuple[int, ...]
    bases: tuple[tuple[int, ...], ...]
    mats: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(b) for d, b in zip(self.degrees, self.bases))

    def homology(self) -> dict[int, int]:
        """Nonzero homology dimensions by cohomological degree."""
        dims = self.dims()
        mats = [list(map(list, m)) for m in self.mats]
        hom = complex_homology_dims(dims, mats)
        return {d: h for d, h in zip(self.degrees, hom) if h}

    def to_json_dict(self) -> dict:
        return {
            "character": [list(self.character.alpha), list(self.character.beta)],
            "degrees": list(self.degrees),
            "dims": self.dims(),
            "homology": {str(d): h for d, h in sorted(self.homology().items())},
        }


def strand(cx: MonomialComplex, character: Character) -> StrandComplex:
    """Restrict a monomial complex to one torus character.

    In each term the candidate monomial is character - offset; it survives if
    it is a section of the term's twist.  Entries act by coefficient; a
    present source mapping to an absent target would violate monotonicity of
    section membership and raises InconsistentDegrees.
    """
    seq, space = cx.seq, cx.space
    if not cx.terms:
        return StrandComplex(character, (), (), ())
    lo = min(cx.terms)
    hi = max(cx.terms)
    degrees = tuple(range(lo, hi + 1))
    bases = []
    for d in degrees:
        present = []
        for i, t in enumerate(cx.terms.get(d, ())):
            if is_section(seq, space, t.twist, character - t.offset):
                present.append(i)
        bases.append(tuple(present))
    mats = []
    for k, d in enumerate(degrees[:-1]):
        src = bases[k]
        tgt = bases[k + 1]
        pos = {i: c for c, i in enumerate(tgt)}
        rows = [[Fraction(0)] * len(src) for _ in tgt]
        tab = cx.diffs.get(d, {})
        for c, i in enumerate(src):
            for (si, tj), mono in tab.items():
                if si != i:
                    continue
                if tj not in pos:
                    raise InconsistentDegrees(
                        "present source maps to absent target in strand"
                    )
                rows[pos[tj]][c] = mono.coeff
        mats.append(tuple(tuple(r) for r in rows))
    return StrandComplex(character, degrees, tuple(bases), tuple(mats))


def homology_dims(strand_complex: StrandComplex) -> list[int]:
    """Exact homology ranks over Q across the strand's full degree span."""
    dims = strand_complex.dims()
    mats = [list(map(list, m)) for m in strand_complex.mats]
    return complex_homology_dims(dims, mats)


def strand_by_degree(cx: MonomialComplex, value: int) -> StrandComplex:
    """Direct sum of the strands at every character of the given total degree.

    Only supported on module-space complexes, where the character lattice of a
    fixed degree is finite.
    """
    if cx.space != SPACE_MODULE:
        raise Unsupported("degree strands are defined for module complexes only")
    seq = cx.seq
    cap = max(value, 0)
    chars = sorted(
        ch
        for ch in characters_of_degree(seq, SPACE_MODULE, value, low=0, high=cap)
        if is_section(seq, SPACE_MODULE, None, ch)
    )
    strands = [s for s in (strand(cx, ch) for ch in chars) if any(s.dims())]
    if not strands:
        return StrandComplex(zero_character(seq), (), (), ())
    degrees = strands[0].degrees  # every strand spans the complex's full range
    bases: list[list[int]] = [[] for _ in degrees]
    for s in strands:
        for k, base in enumerate(s.bases):
            bases[k].extend(base)
    mats = []
    for k in range(len(degrees) - 1):
        nrows = len(bases[k + 1])
        ncols = len(bases[k])
        rows = [[Fraction(0)] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for s in strands:
            m = s.mats[k]
            for r, row in enumerate(m):
                for c, v in enumerate(row):
                    rows[r0 + r][c0 + c] = v
            r0 += len(s.bases[k + 1])
            c0 += len(s.bases[k])
        mats.append(tuple(tuple(r) for r in rows))
    return StrandComplex(zero_character(seq), degrees, tuple(map(tuple, bases)), tuple(mats))


def strand_table_json(cx: MonomialComplex, characters) -> str:
    """Debug dump: strand dimensions and homology per character."""
    rows = [strand(cx, ch).to_json_dict() for ch in characters]
    return json.dumps({"schema": "orbiflip/1", "strands": rows}, sort_keys=True)
