"""Acceptance criteria as callable checks.

Each criterion is one function returning a :class:`CriterionResult`.
They are exact checks at desk scale: seeded sampling where the criterion
is statistical, closed-form comparison where it is not.  The CLI
``verify`` subcommand and the acceptance test module both run them
through :func:`run_criteria`.
"""

import math
import os
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .anchors import ANCHORS
from .cohomology import (
    abelianization,
    charvar_dims,
    h1_dim,
    kunneth_h1,
    random_character,
    random_character_tuple,
    random_surface_sl2,
    seeded_rng,
    surface_profile,
    tangent_dim_at,
)
from .exactlin import IntMatrix, is_unimodular, smith_normal_form
from .leray import b1_pure_braid, h1_twisted_pure_braid, sigma1_membership
from .presentations import (
    Character,
    CharacterTuple,
    Presentation,
    SpaceSpec,
    catalog,
    parse_presentation,
    product_character,
    surface_presentation,
)
from .verdict import KAHLER, NOT_KAHLER, kahler_verdict
from .words import GroupRingElement, fox_derivative, free_reduce, generator_word

__all__ = ["CriterionResult", "CRITERIA", "run_criteria", "DEFAULT_SEED"]

DEFAULT_SEED = 97

# path of the optional external two-strand torus data, relative to the
# repository root; the criterion that uses it is gated on its presence
P2_TORUS_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))),
    "data",
    "p2_torus.pres",
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str


def _result(number: int, name: str, failures: list, detail: str) -> CriterionResult:
    if failures:
        shown = "; ".join(str(f) for f in failures[:3])
        return CriterionResult(number, name, False, "%s; failing: %s" % (detail, shown))
    return CriterionResult(number, name, True, detail)


# ---------------------------------------------------------------------------
# 1: Fox identity


def _random_word(rng: random.Random, num_gens: int, max_len: int):
    length = rng.randint(0, max_len)
    letters = [
        (rng.randrange(num_gens), rng.choice((1, -1))) for _ in range(length)
    ]
    return free_reduce(letters)


def criterion_fox_identity(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Sum over generators of (dw/dx_j)(x_j - 1) equals w - 1, exactly."""
    rng = seeded_rng(seed + 1)
    one = GroupRingElement.one()
    failures = []
    for i in range(500):
        k = rng.randint(1, 6)
        w = _random_word(rng, k, 64)
        total = GroupRingElement.zero()
        for j in range(k):
            xj = GroupRingElement.from_word(generator_word(j))
            total = total + fox_derivative(w, j) * (xj - one)
        expected = GroupRingElement.from_word(w) - one
        if total != expected:
            failures.append((i, w))
    return _result(
        1,
        "fox-identity",
        failures,
        "500 seeded words, alphabet size <= 6, length <= 64",
    )


# ---------------------------------------------------------------------------
# 2: Smith normal form


def _random_unimodular(rng: random.Random, n: int) -> IntMatrix:
    rows = IntMatrix.identity(n).rows
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        for col in range(n):
            rows[i][col] += c * rows[j][col]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        rows[i], rows[j] = rows[j], rows[i]
    return IntMatrix(rows, ncols=n)


def criterion_snf(seed: int = DEFAULT_SEED) -> CriterionResult:
    """U A V = D with unimodular transforms, divisor chain, invariance."""
    rng = seeded_rng(seed + 2)
    failures = []
    for i in range(200):
        m, n = rng.randint(1, 40), rng.randint(1, 40)
        a = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)], ncols=n
        )
        res = smith_normal_form(a)
        if (res.u @ a @ res.v) != res.d:
            failures.append((i, "decomposition"))
            continue
        if not (is_unimodular(res.u) and is_unimodular(res.v)):
            failures.append((i, "transforms not unimodular"))
            continue
        divs = res.divisors
        if any(divs[t + 1] % divs[t] for t in range(len(divs) - 1)):
            failures.append((i, "divisor chain broken"))
            continue
        if i % 5 == 0 and m <= 25 and n <= 25:
            left = _random_unimodular(rng, m)
            right = _random_unimodular(rng, n)
            if smith_normal_form(left @ a @ right).divisors != divs:
                failures.append((i, "divisors not invariant"))
    return _result(
        2,
        "snf",
        failures,
        "200 seeded integer matrices up to 40x40, with unimodular "
        "invariance spot checks",
    )


# ---------------------------------------------------------------------------
# 3 and 4: untwisted first homology of surface braid groups


def criterion_surface_b1(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Positive genus: free rank 2gn and torsion free cokernel."""
    failures = []
    for g in (1, 2, 3):
        space = SpaceSpec.parse("genus:%d" % g)
        for n in range(2, 7):
            rep = b1_pure_braid(space, n)
            if rep.free_rank != 2 * g * n:
                failures.append((g, n, "rank", rep.free_rank))
            if rep.torsion != ():
                failures.append((g, n, "torsion", rep.torsion))
            if any(d != 1 for d in rep.divisors):
                failures.append((g, n, "divisors", rep.divisors))
    return _result(
        3,
        "surface-b1",
        failures,
        "genus 1..3, n 2..6: free rank 2gn, all divisors 1",
    )


def criterion_sphere_b1(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Sphere: free rank C(n,2) - n; torsion reported, not asserted."""
    failures = []
    torsions = {}
    space = SpaceSpec.parse("sphere")
    for n in range(3, 7):
        rep = b1_pure_braid(space, n)
        expected = math.comb(n, 2) - n
        if rep.free_rank != expected:
            failures.append((n, "rank", rep.free_rank, expected))
        torsions[n] = list(rep.torsion)
    detail = (
        "sphere n 3..6: free rank C(n,2) - n; computed torsion %r is "
        "reported as an open tension, not asserted" % (torsions,)
    )
    return _result(4, "sphere-b1", failures, detail)


# ---------------------------------------------------------------------------
# 5: twisted dimension equals the pair count over the torus


def _pair_trivial_by_exponents(rho: CharacterTuple, i: int, j: int) -> bool:
    a, b = rho.components[i], rho.components[j]
    return all((x + y) % a.order == 0 for x, y in zip(a.exponents, b.exponents))


def _exponent_pair_count(rho: CharacterTuple) -> int:
    n = rho.n_components
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if _pair_trivial_by_exponents(rho, i, j)
    )


def criterion_torus_pair_count(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Genus 1 twisted h1 at a nontrivial tuple is the trivial-pair count."""
    rng = seeded_rng(seed + 5)
    space = SpaceSpec.parse("genus:1")
    alphabet = surface_presentation(1).alphabet
    failures = []
    for n in (2, 3, 4):
        produced = 0
        while produced < 200:
            rho = random_character_tuple(
                alphabet, n, rng, max_order=12, pair_bias=0.3
            )
            if rho.is_trivial:
                continue
            produced += 1
            got = h1_twisted_pure_braid(space, n, rho)
            expected = _exponent_pair_count(rho)
            if got != expected:
                failures.append((n, rho.to_json(), got, expected))
    return _result(
        5,
        "torus-pair-count",
        failures,
        "200 seeded nontrivial tuples per n in {2,3,4}, cyclotomy <= 12",
    )


# ---------------------------------------------------------------------------
# 6: presentation-based surface oracle


def criterion_surface_oracle(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Nontrivial characters: h1 = 2g - 2 for g >= 2, and 0 for the torus."""
    rng = seeded_rng(seed + 6)
    failures = []
    for g in (1, 2, 3):
        pres = surface_presentation(g)
        expected = 0 if g == 1 else 2 * g - 2
        for i in range(50):
            chi = random_character(pres.alphabet, rng, max_order=12, nontrivial=True)
            got = h1_dim(pres, chi)
            if got != expected:
                failures.append((g, i, got, expected))
    return _result(
        6,
        "surface-oracle",
        failures,
        "50 seeded nontrivial characters per genus in {1,2,3}",
    )


# ---------------------------------------------------------------------------
# 7: Kunneth cross oracle


def _p2_torus_character(pres: Presentation, rho: CharacterTuple) -> Character:
    """Restrict a two-strand torus character tuple along the split model.

    The translation lattice generators move both strands, the fiber
    generators move only the second strand.
    """
    r1, r2 = rho.components
    order = r1.order
    e1a, e1b = r1.exponents
    e2a, e2b = r2.exponents
    exps = [(e1a + e2a) % order, (e1b + e2b) % order, e2a % order, e2b % order]
    return Character(pres.alphabet, order, exps)


def criterion_kunneth_cross(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Product presentations: Fox h1 equals the Kunneth formula value."""
    rng = seeded_rng(seed + 7)
    failures = []
    for g in (1, 2):
        prod = catalog("product(surface:%d,surface:%d)" % (g, g))
        factor_alphabet = surface_presentation(g).alphabet
        for i in range(50):
            ca = random_character(factor_alphabet, rng, max_order=6)
            cb = random_character(factor_alphabet, rng, max_order=6)
            chi = product_character(prod, ca, cb)
            got = h1_dim(prod, chi)
            expected = kunneth_h1(
                [surface_profile(g, ca).pair, surface_profile(g, cb).pair]
            )
            if got != expected:
                failures.append((g, i, got, expected))
    gated = "external torus data absent, gated leg skipped"
    if os.path.exists(P2_TORUS_PATH):
        with open(P2_TORUS_PATH, "r", encoding="utf-8") as fh:
            pres = parse_presentation(fh.read())
        profile = abelianization(pres)
        if profile.rank != 4 or profile.torsion != ():
            gated = "external torus data failed its gate, leg skipped"
        else:
            space = SpaceSpec.parse("genus:1")
            torus_alphabet = surface_presentation(1).alphabet
            for i in range(40):
                rho = random_character_tuple(
                    torus_alphabet, 2, rng, max_order=12, pair_bias=0.35
                )
                chi = _p2_torus_character(pres, rho)
                got = h1_dim(pres, chi)
                expected = h1_twisted_pure_braid(space, 2, rho)
                if got != expected:
                    failures.append(("p2-torus", i, got, expected))
            gated = "gated two-strand torus leg ran on 40 tuples"
    return _result(
        7,
        "kunneth-cross",
        failures,
        "100 seeded product characters, genus 1 and 2; " + gated,
    )


# ---------------------------------------------------------------------------
# 8: character variety tangent dimensions


def criterion_tangent(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Gated SL2 samples have h1 = 6; closed forms give 9, 6, 16, 10."""
    rng = seeded_rng(seed + 8)
    pres = surface_presentation(2)
    failures = []
    gated = 0
    for i in range(100):
        rho = random_surface_sl2(2, rng)
        report = tangent_dim_at(pres, rho)
        if report.h0_ad == 0:
            gated += 1
            if report.h1 != 6:
                failures.append(("sample", i, report.h1))
    if gated < 90:
        failures.append(("irreducibility gate passed only %d of 100" % gated,))
    closed = charvar_dims(2, [2])
    if closed.hom_dims != (9,):
        failures.append(("hom", closed.hom_dims))
    if closed.char_dims != (6,):
        failures.append(("char", closed.char_dims))
    if charvar_dims(2, [3]).char_dims != (16,):
        failures.append(("char-rank3", charvar_dims(2, [3]).char_dims))
    if charvar_dims(2, [2], "GL").tangent != 10:
        failures.append(("gl-tangent", charvar_dims(2, [2], "GL").tangent))
    return _result(
        8,
        "tangent-charvar",
        failures,
        "100 seeded SL2 points (%d passed the gate, each with h1 = 6) "
        "plus the four closed-form values" % gated,
    )


# ---------------------------------------------------------------------------
# 9: punctured plane suite


def criterion_cstar(seed: int = DEFAULT_SEED) -> CriterionResult:
    """b1 = n + C(n,2) and the twisted pair-count recipe."""
    rng = seeded_rng(seed + 9)
    space = SpaceSpec.parse("c-star")
    alphabet = catalog("free:1").alphabet
    failures = []
    for n in range(2, 7):
        rep = b1_pure_braid(space, n)
        expected = n + math.comb(n, 2)
        if rep.free_rank != expected or rep.torsion != ():
            failures.append((n, "b1", rep.free_rank, rep.torsion))
    for i in range(200):
        n = 2 + (i % 3)
        rho = random_character_tuple(alphabet, n, rng, max_order=12, pair_bias=0.3)
        got = h1_twisted_pure_braid(space, n, rho)
        if rho.is_trivial:
            expected = n + math.comb(n, 2)
        else:
            expected = _exponent_pair_count(rho)
        if got != expected:
            failures.append(("twisted", i, got, expected))
    return _result(
        9,
        "cstar-suite",
        failures,
        "b1 for n 2..6 and 200 seeded tuples against the pair-count recipe",
    )


# ---------------------------------------------------------------------------
# 10: the verdict table


def criterion_verdict_table(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Full enumeration matches the theorem; anchors match the table."""
    anchor_values = set(ANCHORS.values())
    failures = []
    specs = [
        "sphere",
        "plane",
        "disk",
        "c-star",
        "genus:1",
        "genus:2",
        "genus:3",
        "hyperbolic:2",
    ]
    for spec in specs:
        space = SpaceSpec.parse(spec)
        for n in range(2, 7):
            for flavor in ("pure", "full"):
                verdict = kahler_verdict(space, n, flavor)
                expected = (
                    KAHLER if spec == "sphere" and n <= 3 else NOT_KAHLER
                )
                if verdict.status != expected:
                    failures.append((spec, n, flavor, verdict.status))
                    continue
                if not verdict.trace:
                    failures.append((spec, n, flavor, "empty trace"))
                    continue
                for step in verdict.trace:
                    if step.anchor and step.anchor not in anchor_values:
                        failures.append((spec, n, flavor, "anchor drift"))
                if verdict.status == NOT_KAHLER and not verdict.trace[-1].anchor:
                    failures.append((spec, n, flavor, "unanchored conclusion"))
    return _result(
        10,
        "verdict-table",
        failures,
        "8 space kinds x n 2..6 x pure/full, anchors checked byte for byte",
    )


# ---------------------------------------------------------------------------
# 11: jump locus bidirectionality


def criterion_sigma_bidirectional(seed: int = DEFAULT_SEED) -> CriterionResult:
    """Membership, positive twisted h1, and listed containment agree."""
    rng = seeded_rng(seed + 11)
    failures = []
    cases = [
        ("genus:1", surface_presentation(1).alphabet),
        ("genus:2", surface_presentation(2).alphabet),
        ("c-star", catalog("free:1").alphabet),
    ]
    for spec, alphabet in cases:
        space = SpaceSpec.parse(spec)
        for i in range(500):
            n = 2 + (i % 3)
            rho = random_character_tuple(
                alphabet, n, rng, max_order=12, pair_bias=0.35
            )
            h = h1_twisted_pure_braid(space, n, rho)
            report = sigma1_membership(space, n, rho)
            if report.member != (h > 0):
                failures.append((spec, n, i, "member vs h1"))
            if report.member != bool(report.components):
                failures.append((spec, n, i, "member vs components"))
            if report.h1 != h:
                failures.append((spec, n, i, "reported h1 drift"))
    return _result(
        11,
        "sigma-bidirectional",
        failures,
        "500 seeded tuples per space over genus 1, genus 2 and the "
        "punctured plane, n cycling 2..4",
    )


# ---------------------------------------------------------------------------
# registry

CRITERIA: tuple[tuple[int, str, Callable[[int], CriterionResult]], ...] = (
    (1, "fox-identity", criterion_fox_identity),
    (2, "snf", criterion_snf),
    (3, "surface-b1", criterion_surface_b1),
    (4, "sphere-b1", criterion_sphere_b1),
    (5, "torus-pair-count", criterion_torus_pair_count),
    (6, "surface-oracle", criterion_surface_oracle),
    (7, "kunneth-cross", criterion_kunneth_cross),
    (8, "tangent-charvar", criterion_tangent),
    (9, "cstar-suite", criterion_cstar),
    (10, "verdict-table", criterion_verdict_table),
    (11, "sigma-bidirectional", criterion_sigma_bidirectional),
)


def run_criteria(
    numbers: Optional[Iterable[int]] = None,
    names: Optional[Iterable[str]] = None,
    seed: int = DEFAULT_SEED,
) -> list[CriterionResult]:
    """Run selected acceptance criteria (all of them by default)."""
    wanted_numbers = set(numbers) if numbers is not None else None
    wanted_names = set(names) if names is not None else None
    known_numbers = {num for num, _, _ in CRITERIA}
    known_names = {name for _, name, _ in CRITERIA}
    if wanted_numbers is not None and not wanted_numbers <= known_numbers:
        from .errors import InputError

        raise InputError(
            "unknown criterion number(s): %s"
            % sorted(wanted_numbers - known_numbers)
        )
    if wanted_names is not None and not wanted_names <= known_names:
        from .errors import InputError

        raise InputError(
            "unknown criterion name(s): %s" % sorted(wanted_names - known_names)
        )
    results = []
    for number, name, func in CRITERIA:
        if wanted_numbers is not None and number not in wanted_numbers:
            continue
        if wanted_names is not None and name not in wanted_names:
            continue
        results.append(func(seed))
    return results
