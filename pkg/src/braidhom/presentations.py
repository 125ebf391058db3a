"""Group presentations, a catalog of the groups the toolkit computes with,
and the representation objects that feed twisted cohomology.

The catalog covers closed orientable surface groups, free groups, planar
pure braid groups, and finite direct products.  Pure braid relators are
not transcribed from a book: they are derived at call time from the braid
action on a free group and each one is verified inside Aut(F_n), where
the braid group embeds faithfully.  A frozen snapshot in the test suite
pins the derived table.

Representation objects come in two flavours: one dimensional characters
with values r * zeta_N^e in a cyclotomic field, and rational matrix
representations.  Both expose ``word_value`` / ``zero_value`` so the Fox
calculus in :mod:`braidhom.words` can evaluate group ring elements
through them.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycContext, CycElt
from .errors import AlphabetMismatchError, InputError, PresentationParseError
from .exactlin import QMat
from .words import Alphabet, Word, commutator, generator_word

__all__ = [
    "Presentation",
    "surface_presentation",
    "free_presentation",
    "artin_pure_presentation",
    "artin_pure_relators",
    "product_presentation",
    "catalog",
    "parse_presentation",
    "serialize_presentation",
    "load_external",
    "Character",
    "CharacterTuple",
    "CharacterCheck",
    "validate_character",
    "MatrixRep",
    "AdjointRep",
    "validate_matrix_rep",
    "SpaceSpec",
]


class Presentation:
    """A finite presentation: an alphabet plus freely reduced relators.

    Instances are immutable.  ``source`` carries free-text provenance for
    externally loaded files, ``warnings`` flags degenerate constructions
    (only the genus zero surface uses it), and ``product_factors`` is
    populated by :func:`product_presentation` so downstream code can split
    a character on the product back into factor characters.
    """

    __slots__ = ("alphabet", "relators", "source", "warnings", "product_factors")

    def __init__(
        self,
        alphabet: Alphabet,
        relators: Iterable[Word] = (),
        source: str | None = None,
        warnings: Iterable[str] = (),
        product_factors=None,
    ):
        relators = tuple(relators)
        for r in relators:
            alphabet.check_word(r)
            if r.is_identity:
                raise ValueError("identity relator is not allowed")
        self.alphabet = alphabet
        self.relators = relators
        self.source = source
        self.warnings = tuple(warnings)
        self.product_factors = product_factors

    @property
    def num_generators(self) -> int:
        return len(self.alphabet)

    @property
    def num_relators(self) -> int:
        return len(self.relators)

    @property
    def generator_names(self) -> tuple[str, ...]:
        return self.alphabet.names

    def __eq__(self, other) -> bool:
        # provenance and warnings do not affect identity of the group data
        return (
            isinstance(other, Presentation)
            and self.alphabet == other.alphabet
            and self.relators == other.relators
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.relators))

    def __repr__(self) -> str:
        return "Presentation(gens=%r, relators=%d)" % (
            list(self.alphabet.names),
            len(self.relators),
        )


# ---------------------------------------------------------------------------
# catalog constructions


def surface_presentation(g: int) -> Presentation:
    """Closed orientable genus g surface group.

    One relator, the product of the g handle commutators.  Genus zero
    yields the trivial group: an empty presentation with a warning flag
    instead of an error, so space descriptors stay uniform downstream.
    """
    if g < 0:
        raise InputError("genus must be nonnegative, got %d" % g)
    if g == 0:
        return Presentation(
            Alphabet(()),
            (),
            warnings=("genus zero surface group is trivial",),
        )
    if g == 1:
        alphabet = Alphabet(("a", "b"))
    else:
        names = []
        for i in range(1, g + 1):
            names.append("a%d" % i)
            names.append("b%d" % i)
        alphabet = Alphabet(names)
    rel = Word()
    for i in range(g):
        rel = rel * commutator(generator_word(2 * i), generator_word(2 * i + 1))
    return Presentation(alphabet, (rel,))


def free_presentation(k: int) -> Presentation:
    """Free group of rank k; single letters up to rank 26, x1..xk beyond."""
    if k < 1:
        raise InputError("free rank must be positive, got %d" % k)
    if k <= 26:
        names = tuple(string.ascii_lowercase[:k])
    else:
        names = tuple("x%d" % i for i in range(1, k + 1))
    return Presentation(Alphabet(names), ())


# --- planar pure braid groups ----------------------------------------------
#
# Strands are 0-indexed internally.  The generator for strands r < s is the
# braid word sigma_{s-1} ... sigma_{r+1} sigma_r^2 sigma_{r+1}^-1 ...
# sigma_{s-1}^-1, and the public generator name for the pair is A{r+1}_{s+1}.
#
# An endomorphism of the free group F_m is a tuple of m Words, the images
# of the generators.  The braid group acts through the usual rule on a
# punctured disk fundamental group; composing those endomorphisms letter by
# letter gives an exact, convention-stable calculus, and the action is
# faithful, so "this word acts trivially on F_n" decides triviality in the
# braid group.

Endo = tuple[Word, ...]


def _identity_endo(m: int) -> Endo:
    return tuple(generator_word(i) for i in range(m))


def _endo_apply(endo: Endo, w: Word) -> Word:
    out = Word()
    for g, s in w.letters:
        img = endo[g]
        out = out * (img if s == 1 else img.inverse())
    return out


def _endo_compose(f: Endo, g: Endo) -> Endo:
    """The endomorphism x -> f(g(x))."""
    return tuple(_endo_apply(f, w) for w in g)


def _sigma_endo(k: int, m: int, sign: int) -> Endo:
    """Elementary braid automorphism of F_m braiding punctures k, k+1."""
    images = list(_identity_endo(m))
    xk = generator_word(k)
    xk1 = generator_word(k + 1)
    if sign == 1:
        images[k] = xk * xk1 * xk.inverse()
        images[k + 1] = xk
    else:
        images[k] = xk1
        images[k + 1] = xk1.inverse() * xk * xk1
    return tuple(images)


def _braid_endo(letters: Sequence[tuple[int, int]], m: int) -> Endo:
    acc = _identity_endo(m)
    for k, sign in letters:
        acc = _endo_compose(acc, _sigma_endo(k, m, sign))
    return acc


def _pure_gen_letters(r: int, s: int) -> list[tuple[int, int]]:
    """Braid word for the generator braiding strands r < s (0-indexed)."""
    pre = [(k, 1) for k in range(s - 1, r, -1)]
    post = [(k, -1) for k in range(r + 1, s)]
    return pre + [(r, 1), (r, 1)] + post


def _invert_letters(letters: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(k, -sign) for k, sign in reversed(letters)]


def _mirror_letters(letters: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Flip every crossing, keeping the order."""
    return [(k, -sign) for k, sign in letters]


def _pair_list(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _acts_trivially(word: Word, pairs: Sequence[tuple[int, int]], n: int) -> bool:
    """Decide triviality of a word in the pair generators inside Aut(F_n)."""
    letters: list[tuple[int, int]] = []
    for g, sign in word.letters:
        bw = _pure_gen_letters(*pairs[g])
        letters.extend(bw if sign == 1 else _invert_letters(bw))
    return _braid_endo(letters, n) == _identity_endo(n)


@lru_cache(maxsize=None)
def artin_pure_relators(n: int) -> tuple[Word, ...]:
    """Relators for the planar pure braid group on n strands.

    The alphabet is the pair generators ordered lexicographically.  The
    group is an iterated extension: adding strand j gives a free fiber on
    the pairs (i, j), i < j, acted on by the subgroup on the first j
    strands.  For each lower generator q and fiber generator f we compute
    the conjugate q f q^-1 as a word in fiber letters by composing the
    braid automorphisms of the fiber free group, which produces one
    relator per pair.  The direction of the action depends on composition
    order conventions, so it is probed per lower generator and every
    emitted relator is checked to act trivially on F_n; the faithfulness
    of that action makes the check a proof.
    """
    if n < 1:
        raise InputError("strand count must be positive, got %d" % n)
    pairs = _pair_list(n)
    index = {p: k for k, p in enumerate(pairs)}
    rels: list[Word] = []
    for j in range(2, n):
        # fiber letters x_i <-> pair (i, j), free group of rank j
        for r in range(j):
            for s in range(r + 1, j):
                base = _pure_gen_letters(r, s)
                # In this composition convention conjugation by the pair
                # generator acts on the fiber as the mirrored braid word
                # (every crossing flipped, order kept); the remaining
                # pairings keep the probe honest if a convention shifts.
                mirror = _braid_endo(_mirror_letters(base), j)
                reverse = _braid_endo(list(reversed(base)), j)
                forward = _braid_endo(base, j)
                backward = _braid_endo(_invert_letters(base), j)
                actions = (
                    (1, mirror),
                    (-1, reverse),
                    (1, backward),
                    (-1, forward),
                    (1, reverse),
                    (-1, mirror),
                    (1, forward),
                    (-1, backward),
                )
                chosen = None
                for orient, act in actions:
                    cand = _conjugation_relator(r, s, j, 0, orient, act, index)
                    if _acts_trivially(cand, pairs, n):
                        chosen = (orient, act)
                        break
                if chosen is None:
                    raise AssertionError(
                        "no orientation of the action verified for pair "
                        "(%d, %d) at level %d" % (r, s, j)
                    )
                orient, act = chosen
                for i in range(j):
                    rel = _conjugation_relator(r, s, j, i, orient, act, index)
                    if not _acts_trivially(rel, pairs, n):
                        raise AssertionError(
                            "derived relator failed the Aut(F_n) check at "
                            "level %d, pair (%d, %d), fiber %d" % (j, r, s, i)
                        )
                    rels.append(rel)
    return tuple(rels)


def _conjugation_relator(r, s, j, i, orient, act: Endo, index) -> Word:
    """q^orient f q^-orient (image)^-1 with f the i-th fiber letter."""
    image = act[i]
    translated = Word(tuple((index[(g, j)], sign) for g, sign in image.letters))
    q = generator_word(index[(r, s)], orient)
    f = generator_word(index[(i, j)])
    return q * f * q.inverse() * translated.inverse()


def artin_pure_presentation(n: int) -> Presentation:
    """Planar pure braid group on n strands, generators A{i}_{j}."""
    if n < 1:
        raise InputError("strand count must be positive, got %d" % n)
    names = tuple("A%d_%d" % (i + 1, j + 1) for i, j in _pair_list(n))
    return Presentation(Alphabet(names), artin_pure_relators(n))


def product_presentation(*factors: Presentation) -> Presentation:
    """Direct product: disjoint union of alphabets plus cross commutators.

    Factor generators are renamed with a _k suffix (k the 1-based factor
    position) to keep names distinct.  The factor layout is recorded on
    the result so characters can be split back into components.
    """
    if len(factors) < 2:
        raise InputError("product needs at least two factors")
    names: list[str] = []
    offsets: list[int] = []
    for k, p in enumerate(factors, start=1):
        offsets.append(len(names))
        names.extend("%s_%d" % (name, k) for name in p.alphabet.names)
    alphabet = Alphabet(names)

    def shift(w: Word, off: int) -> Word:
        return Word(tuple((g + off, s) for g, s in w.letters))

    relators: list[Word] = []
    for off, p in zip(offsets, factors):
        relators.extend(shift(r, off) for r in p.relators)
    for ka in range(len(factors)):
        for kb in range(ka + 1, len(factors)):
            for ia in range(len(factors[ka].alphabet)):
                for ib in range(len(factors[kb].alphabet)):
                    relators.append(
                        commutator(
                            generator_word(offsets[ka] + ia),
                            generator_word(offsets[kb] + ib),
                        )
                    )
    warnings = tuple(w for p in factors for w in p.warnings)
    return Presentation(
        alphabet,
        relators,
        warnings=warnings,
        product_factors=tuple(zip(offsets, factors)),
    )


def catalog(spec: str) -> Presentation:
    """Build a catalog presentation from a string id.

    Grammar: ``surface:g`` | ``free:k`` | ``artin_pure:n`` |
    ``product(id,id,...)`` with ids nested recursively.
    """
    spec = spec.strip()
    if spec.startswith("product(") and spec.endswith(")"):
        inner = spec[len("product(") : -1]
        parts: list[str] = []
        depth = 0
        current = []
        for ch in inner:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch == "," and depth == 0:
                parts.append("".join(current))
                current = []
            else:
                current.append(ch)
        parts.append("".join(current))
        if any(not p.strip() for p in parts):
            raise InputError("empty factor in product id %r" % spec)
        return product_presentation(*(catalog(p) for p in parts))
    kind, sep, param = spec.partition(":")
    if not sep:
        raise InputError("catalog id %r needs a :parameter" % spec)
    try:
        value = int(param)
    except ValueError:
        raise InputError("catalog parameter %r is not an integer" % param) from None
    if kind == "surface":
        return surface_presentation(value)
    if kind == "free":
        return free_presentation(value)
    if kind == "artin_pure":
        return artin_pure_presentation(value)
    raise InputError("unknown catalog kind %r" % kind)


# ---------------------------------------------------------------------------
# file format

_GENS_PREFIX = "gens:"
_REL_PREFIX = "rel:"
_SOURCE_PREFIX = "source:"


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation format.

    A ``gens:`` line must precede any ``rel:`` line; ``#`` starts a
    comment; ``source:`` lines carry provenance.  All errors report the
    offending line number.
    """
    alphabet: Alphabet | None = None
    relators: list[Word] = []
    sources: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(_GENS_PREFIX):
            if alphabet is not None:
                raise PresentationParseError("duplicate gens line", lineno)
            names = line[len(_GENS_PREFIX) :].split()
            if not names:
                raise PresentationParseError("empty generator list", lineno)
            try:
                alphabet = Alphabet(names)
            except ValueError as exc:
                raise PresentationParseError(str(exc), lineno) from None
        elif line.startswith(_REL_PREFIX):
            if alphabet is None:
                raise PresentationParseError(
                    "rel line before the gens line", lineno
                )
            word = alphabet.parse_word(line[len(_REL_PREFIX) :], line=lineno)
            if word.is_identity:
                raise PresentationParseError(
                    "relator reduces to the identity", lineno
                )
            relators.append(word)
        elif line.startswith(_SOURCE_PREFIX):
            sources.append(line[len(_SOURCE_PREFIX) :].strip())
        else:
            raise PresentationParseError("unrecognized line %r" % line, lineno)
    if alphabet is None:
        raise PresentationParseError("missing gens line", None)
    return Presentation(alphabet, relators, source="; ".join(sources) or None)


def serialize_presentation(p: Presentation) -> str:
    lines = [_GENS_PREFIX + (" " + " ".join(p.alphabet.names) if p.alphabet.names else "")]
    if p.source:
        lines.append("%s %s" % (_SOURCE_PREFIX, p.source))
    for r in p.relators:
        lines.append("%s %s" % (_REL_PREFIX, p.alphabet.format_word(r)))
    return "\n".join(lines) + "\n"


def load_external(path) -> Presentation:
    """Load a presentation file, tagging it with provenance.

    The returned presentation is unvalidated beyond syntax; homological
    gates (first Betti number checks) are applied by callers before any
    structural conclusions are drawn from the file.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    p = parse_presentation(text)
    if p.source is None:
        p = Presentation(p.alphabet, p.relators, source="file %s" % path)
    return p


# ---------------------------------------------------------------------------
# characters


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise InputError("cannot read %r as a rational number" % (value,))


class Character:
    """One dimensional representation with values r * zeta_N^e.

    The unit part is a root of unity of order dividing N, stored as an
    exponent per generator; the optional radial part is a positive
    rational per generator.  All arithmetic is exact in the cyclotomic
    field of order N.
    """

    __slots__ = ("alphabet", "order", "exponents", "radial")

    def __init__(
        self,
        alphabet: Alphabet,
        order: int,
        values: Mapping[str, int] | Sequence[int] | None = None,
        radial: Mapping[str, object] | Sequence[object] | None = None,
    ):
        if order < 1:
            raise InputError("cyclotomic order must be positive, got %r" % order)
        k = len(alphabet)
        if values is None:
            exps = [0] * k
        elif isinstance(values, Mapping):
            exps = [0] * k
            for name, e in values.items():
                exps[alphabet.index_of(name)] = int(e)
        else:
            values = list(values)
            if len(values) != k:
                raise InputError(
                    "expected %d exponents, got %d" % (k, len(values))
                )
            exps = [int(e) for e in values]
        if radial is None:
            rads = [Fraction(1)] * k
        elif isinstance(radial, Mapping):
            rads = [Fraction(1)] * k
            for name, r in radial.items():
                rads[alphabet.index_of(name)] = _as_fraction(r)
        else:
            radial = list(radial)
            if len(radial) != k:
                raise InputError(
                    "expected %d radial values, got %d" % (k, len(radial))
                )
            rads = [_as_fraction(r) for r in radial]
        if any(r <= 0 for r in rads):
            raise InputError("radial values must be positive")
        self.alphabet = alphabet
        self.order = order
        self.exponents = tuple(e % order for e in exps)
        self.radial = tuple(rads)

    # -- structure

    @property
    def dim(self) -> int:
        return 1

    @property
    def context(self) -> CycContext:
        return CycContext(self.order)

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents) and all(
            r == 1 for r in self.radial
        )

    @property
    def has_radial_part(self) -> bool:
        return any(r != 1 for r in self.radial)

    def value(self, gen: int | str) -> CycElt:
        i = gen if isinstance(gen, int) else self.alphabet.index_of(gen)
        ctx = self.context
        v = ctx.zeta(self.exponents[i])
        if self.radial[i] != 1:
            v = ctx.from_rational(self.radial[i]) * v
        return v

    def word_value(self, w: Word) -> CycElt:
        exp = 0
        rad = Fraction(1)
        for g, s in w.letters:
            exp += s * self.exponents[g]
            if self.radial[g] != 1:
                rad *= self.radial[g] if s == 1 else 1 / self.radial[g]
        ctx = self.context
        v = ctx.zeta(exp % self.order)
        if rad != 1:
            v = ctx.from_rational(rad) * v
        return v

    def zero_value(self) -> CycElt:
        return self.context.zero()

    # -- algebra

    def rescale(self, order: int) -> "Character":
        """The same character presented in the cyclotomy of ``order``."""
        if order % self.order:
            raise InputError(
                "cannot rescale order %d to non-multiple %d" % (self.order, order)
            )
        f = order // self.order
        return Character(
            self.alphabet,
            order,
            [e * f for e in self.exponents],
            self.radial,
        )

    def inverse(self) -> "Character":
        return Character(
            self.alphabet,
            self.order,
            [-e for e in self.exponents],
            [1 / r for r in self.radial],
        )

    def __mul__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise InputError("characters live on different alphabets")
        n = lcm(self.order, other.order)
        a, b = self.rescale(n), other.rescale(n)
        return Character(
            self.alphabet,
            n,
            [x + y for x, y in zip(a.exponents, b.exponents)],
            [x * y for x, y in zip(a.radial, b.radial)],
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.alphabet == other.alphabet
            and self.order == other.order
            and self.exponents == other.exponents
            and self.radial == other.radial
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.order, self.exponents, self.radial))

    def __repr__(self) -> str:
        vals = ", ".join(
            "%s:%d" % (n, e) for n, e in zip(self.alphabet.names, self.exponents)
        )
        return "Character(N=%d, %s)" % (self.order, vals)

    # -- serialization, format {"N":, "values": {...}, "radial": {...}?}

    def to_json(self) -> dict:
        data: dict = {
            "N": self.order,
            "values": {
                name: e for name, e in zip(self.alphabet.names, self.exponents)
            },
        }
        if self.has_radial_part:
            data["radial"] = {
                name: str(r)
                for name, r in zip(self.alphabet.names, self.radial)
                if r != 1
            }
        return data

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: Mapping) -> "Character":
        if "N" not in data:
            raise InputError("character JSON needs an N field")
        order = data["N"]
        if not isinstance(order, int):
            raise InputError("character N must be an integer, got %r" % (order,))
        values = data.get("values", {})
        radial = data.get("radial")
        if not isinstance(values, Mapping):
            raise InputError("character values must be an object")
        if radial is not None and not isinstance(radial, Mapping):
            raise InputError("character radial must be an object")
        return cls(alphabet, order, values, radial)


@dataclass(frozen=True)
class CharacterCheck:
    """Result of validating a character or representation on a presentation."""

    ok: bool
    failing_relator: Word | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_character(p: Presentation, chi: Character) -> CharacterCheck:
    """Check that every relator evaluates to 1 under the character."""
    if chi.alphabet != p.alphabet:
        raise InputError("character alphabet does not match the presentation")
    one = chi.context.one()
    for r in p.relators:
        if chi.word_value(r) != one:
            return CharacterCheck(False, r)
    return CharacterCheck(True)


class CharacterTuple:
    """A tuple of characters of one factor group, rescaled to a common order.

    Used for character data on n-fold products: component i is the
    character of the i-th factor.  Pairwise product triviality is the
    membership condition the jump locus formulas consume.
    """

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Character]):
        components = tuple(components)
        if not components:
            raise InputError("character tuple needs at least one component")
        alphabet = components[0].alphabet
        if any(c.alphabet != alphabet for c in components):
            raise InputError("tuple components live on different alphabets")
        n = 1
        for c in components:
            n = lcm(n, c.order)
        self.components = tuple(c.rescale(n) for c in components)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        return self.components[0].order

    @property
    def factor_alphabet(self) -> Alphabet:
        return self.components[0].alphabet

    @property
    def is_trivial(self) -> bool:
        return all(c.is_trivial for c in self.components)

    def component(self, i: int) -> Character:
        return self.components[i]

    def component_trivial(self, i: int) -> bool:
        return self.components[i].is_trivial

    def pair_product_trivial(self, i: int, j: int) -> bool:
        return (self.components[i] * self.components[j]).is_trivial

    def inverse(self) -> "CharacterTuple":
        return CharacterTuple(c.inverse() for c in self.components)

    def as_product_character(self, product: Presentation) -> Character:
        """The corresponding character on a product presentation.

        The product must have exactly one factor per component, each with
        the component alphabet's size.
        """
        if product.product_factors is None:
            raise InputError("presentation carries no product structure")
        factors = product.product_factors
        if len(factors) != len(self.components):
            raise InputError(
                "tuple has %d components but the product has %d factors"
                % (len(self.components), len(factors))
            )
        exps: list[int] = []
        rads: list[Fraction] = []
        for (off, fac), c in zip(factors, self.components):
            if len(fac.alphabet) != len(c.alphabet):
                raise InputError("component alphabet size mismatch")
            exps.extend(c.exponents)
            rads.extend(c.radial)
        return Character(product.alphabet, self.order, exps, rads)

    @classmethod
    def from_product_character(
        cls, chi: Character, product: Presentation
    ) -> "CharacterTuple":
        """Split a character on a product into its factor components."""
        if product.product_factors is None:
            raise InputError("presentation carries no product structure")
        if chi.alphabet != product.alphabet:
            raise InputError("character alphabet does not match the product")
        comps = []
        for off, fac in product.product_factors:
            k = len(fac.alphabet)
            comps.append(
                Character(
                    fac.alphabet,
                    chi.order,
                    chi.exponents[off : off + k],
                    chi.radial[off : off + k],
                )
            )
        return cls(comps)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharacterTuple)
            and self.components == other.components
        )

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "CharacterTuple(%d components, N=%d)" % (
            len(self.components),
            self.order,
        )

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, alphabet: Alphabet, data: Mapping) -> "CharacterTuple":
        if not isinstance(data, Mapping) or "components" not in data:
            raise InputError("character tuple JSON needs a components list")
        items = data["components"]
        if not isinstance(items, Sequence) or isinstance(items, (str, bytes)):
            raise InputError("character tuple components must be a list")
        return cls(Character.from_json(alphabet, item) for item in items)


def product_character(product: Presentation, *components: Character) -> Character:
    """Splice one character per factor into a character of the product.

    Unlike CharacterTuple this allows the factors to have different
    alphabets; each component must live exactly on its factor's
    alphabet.  Orders are rescaled to their lcm.
    """
    if product.product_factors is None:
        raise InputError("presentation carries no product structure")
    factors = product.product_factors
    if len(components) != len(factors):
        raise InputError(
            "got %d characters for a product with %d factors"
            % (len(components), len(factors))
        )
    order = 1
    for (off, fac), c in zip(factors, components):
        if c.alphabet != fac.alphabet:
            raise AlphabetMismatchError(
                "character alphabet does not match factor at offset %d" % off
            )
        order = lcm(order, c.order)
    exps: list[int] = []
    rads: list[Fraction] = []
    for c in components:
        scaled = c.rescale(order)
        exps.extend(scaled.exponents)
        rads.extend(scaled.radial)
    return Character(product.alphabet, order, exps, rads)


# ---------------------------------------------------------------------------
# matrix representations


class MatrixRep:
    """A representation by invertible rational matrices.

    ``flavor`` is "SL" (unit determinant enforced per generator) or "GL"
    (any nonzero determinant).  Word evaluation multiplies images left to
    right; inverses are cached.
    """

    __slots__ = ("alphabet", "images", "flavor", "dim", "_inverses")

    def __init__(
        self,
        alphabet: Alphabet,
        images: Mapping[str, QMat] | Sequence[QMat],
        flavor: str = "SL",
    ):
        if flavor not in ("SL", "GL"):
            raise InputError("flavor must be SL or GL, got %r" % flavor)
        k = len(alphabet)
        if isinstance(images, Mapping):
            if set(images) != set(alphabet.names):
                raise InputError("images must cover exactly the generators")
            mats = [images[name] for name in alphabet.names]
        else:
            mats = list(images)
            if len(mats) != k:
                raise InputError("expected %d images, got %d" % (k, len(mats)))
        if not mats:
            raise InputError("matrix representation needs at least one generator")
        d = mats[0].n
        for m in mats:
            if not isinstance(m, QMat):
                raise InputError("images must be QMat instances")
            if m.n != d:
                raise InputError("image sizes disagree")
            det = m.determinant()
            if det == 0:
                raise InputError("image matrix is singular")
            if flavor == "SL" and det != 1:
                raise InputError("SL flavor requires determinant 1, got %s" % det)
        self.alphabet = alphabet
        self.images = tuple(mats)
        self.flavor = flavor
        self.dim = d
        self._inverses: dict[int, QMat] = {}

    def image(self, gen: int | str) -> QMat:
        i = gen if isinstance(gen, int) else self.alphabet.index_of(gen)
        return self.images[i]

    def _inverse(self, i: int) -> QMat:
        if i not in self._inverses:
            self._inverses[i] = self.images[i].inverse()
        return self._inverses[i]

    def word_value(self, w: Word) -> QMat:
        out = QMat.identity(self.dim)
        for g, s in w.letters:
            out = out * (self.images[g] if s == 1 else self._inverse(g))
        return out

    def zero_value(self) -> QMat:
        return QMat.zeros(self.dim)

    def adjoint_rep(self) -> "AdjointRep":
        return AdjointRep(self)

    def __repr__(self) -> str:
        return "MatrixRep(%s_%d on %d generators)" % (
            self.flavor,
            self.dim,
            len(self.images),
        )


def _traceless_basis(d: int) -> list[QMat]:
    """Basis of trace zero d x d matrices: diagonal differences then E_ij."""
    basis = []
    for i in range(d - 1):
        rows = [[Fraction(0)] * d for _ in range(d)]
        rows[i][i] = Fraction(1)
        rows[i + 1][i + 1] = Fraction(-1)
        basis.append(QMat(rows))
    for i in range(d):
        for j in range(d):
            if i != j:
                rows = [[Fraction(0)] * d for _ in range(d)]
                rows[i][j] = Fraction(1)
                basis.append(QMat(rows))
    return basis


def _traceless_coords(m: QMat) -> list[Fraction]:
    """Coordinates in the `_traceless_basis` order; trace must vanish."""
    d = m.n
    diag = [m.rows[i][i] for i in range(d)]
    if sum(diag) != 0:
        raise ValueError("matrix has nonzero trace")
    coords = []
    acc = Fraction(0)
    for i in range(d - 1):
        acc += diag[i]
        coords.append(acc)
    for i in range(d):
        for j in range(d):
            if i != j:
                coords.append(m.rows[i][j])
    return coords


class AdjointRep:
    """The conjugation action on trace zero matrices, as explicit matrices.

    For a d dimensional representation this is a (d^2 - 1) dimensional
    rational representation; its cohomology computes tangent spaces of
    character varieties at the underlying point.
    """

    __slots__ = ("rep", "dim", "_basis")

    def __init__(self, rep: MatrixRep):
        self.rep = rep
        self.dim = rep.dim * rep.dim - 1
        self._basis = _traceless_basis(rep.dim)

    @property
    def alphabet(self) -> Alphabet:
        return self.rep.alphabet

    def _ad(self, a: QMat) -> QMat:
        ainv = a.inverse()
        cols = [_traceless_coords(a * b * ainv) for b in self._basis]
        rows = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return QMat(rows)

    def word_value(self, w: Word) -> QMat:
        return self._ad(self.rep.word_value(w))

    def image(self, gen: int | str) -> QMat:
        i = gen if isinstance(gen, int) else self.alphabet.index_of(gen)
        return self._ad(self.rep.images[i])

    def zero_value(self) -> QMat:
        return QMat.zeros(self.dim)


def validate_matrix_rep(p: Presentation, rep) -> CharacterCheck:
    """Check that every relator maps to the identity matrix."""
    if rep.alphabet != p.alphabet:
        raise InputError("representation alphabet does not match the presentation")
    for r in p.relators:
        if not rep.word_value(r).is_identity():
            return CharacterCheck(False, r)
    return CharacterCheck(True)


# ---------------------------------------------------------------------------
# space descriptors

_SURFACE_KINDS = ("sphere", "plane", "disk", "c-star", "genus", "hyperbolic")


@dataclass(frozen=True)
class SpaceSpec:
    """A description of the space whose braid groups are under study.

    Surface kinds: sphere, plane, disk, c-star, genus (closed orientable,
    ``genus`` >= 1), hyperbolic (noncompact with free nonabelian or small
    fundamental group, ``free_rank`` the rank).  The higher-dim kind
    carries the real dimension and a coarse description of the base
    fundamental group for wreath product reporting.
    """

    kind: str
    genus: int | None = None
    free_rank: int | None = None
    real_dim: int | None = None
    base_kind: str = "trivial"
    base_b1: int = 0
    base_torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _SURFACE_KINDS + ("higher-dim",):
            raise InputError("unknown space kind %r" % self.kind)
        if self.kind == "genus":
            if self.genus is None or self.genus < 1:
                raise InputError("genus kind needs genus >= 1")
        if self.kind == "hyperbolic":
            if self.free_rank is None or self.free_rank < 0:
                raise InputError("hyperbolic kind needs a free rank >= 0")
        if self.kind == "higher-dim":
            if self.real_dim is None or self.real_dim < 3:
                raise InputError("higher-dim kind needs real dimension >= 3")
            if self.base_kind not in ("trivial", "finite", "projective", "other"):
                raise InputError("unknown base kind %r" % self.base_kind)

    @classmethod
    def parse(cls, text: str) -> "SpaceSpec":
        text = text.strip()
        parts = text.split(":")
        kind = parts[0]
        if kind == "noncompact-hyperbolic":
            kind = "hyperbolic"
        if kind == "compact-genus":
            kind = "genus"
        if kind in ("sphere", "plane", "disk", "c-star"):
            if len(parts) > 1:
                raise InputError("space kind %r takes no parameter" % kind)
            return cls(kind)
        if kind == "genus":
            if len(parts) != 2:
                raise InputError("genus space needs one parameter, e.g. genus:2")
            return cls("genus", genus=_parse_int(parts[1]))
        if kind == "hyperbolic":
            if len(parts) != 2:
                raise InputError(
                    "hyperbolic space needs one parameter, e.g. hyperbolic:2"
                )
            return cls("hyperbolic", free_rank=_parse_int(parts[1]))
        if kind == "higher-dim":
            if len(parts) < 2 or len(parts) > 4:
                raise InputError(
                    "higher-dim space is higher-dim:<real-dim>[:<base>[:<b1>]]"
                )
            real_dim = _parse_int(parts[1])
            base_kind = parts[2] if len(parts) > 2 else "trivial"
            base_b1 = _parse_int(parts[3]) if len(parts) > 3 else 0
            return cls(
                "higher-dim",
                real_dim=real_dim,
                base_kind=base_kind,
                base_b1=base_b1,
            )
        raise InputError("unknown space kind %r" % kind)

    @property
    def complex_dim(self) -> int | None:
        if self.real_dim is not None and self.real_dim % 2 == 0:
            return self.real_dim // 2
        return None

    def describe(self) -> str:
        if self.kind == "genus":
            return "closed orientable surface of genus %d" % self.genus
        if self.kind == "hyperbolic":
            return (
                "noncompact hyperbolic surface with free fundamental group "
                "of rank %d" % self.free_rank
            )
        if self.kind == "higher-dim":
            return "manifold of real dimension %d (base %s)" % (
                self.real_dim,
                self.base_kind,
            )
        return {
            "sphere": "the 2-sphere",
            "plane": "the plane",
            "disk": "the open disk",
            "c-star": "the punctured plane",
        }[self.kind]


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError("expected an integer, got %r" % text) from None
