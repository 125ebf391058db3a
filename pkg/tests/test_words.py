import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidhom.errors import AlphabetMismatchError, PresentationParseError
from braidhom.words import (
    Alphabet,
    GroupRingElement,
    Word,
    augmentation,
    commutator,
    evaluate,
    fox_derivative,
    free_reduce,
    generator_word,
)

AB = Alphabet(["x", "y"])
X = generator_word(0)
Y = generator_word(1)


def word(*letters):
    return free_reduce(letters)


raw_letters = st.lists(
    st.tuples(st.integers(0, 5), st.sampled_from([1, -1])), max_size=120
)


class TestFreeReduction:
    def test_simple_cancellation(self):
        assert word((0, 1), (0, -1)) == Word()
        assert word((0, 1), (1, 1), (1, -1), (0, -1)) == Word()

    def test_no_overcancellation(self):
        w = word((0, 1), (0, 1), (0, -1))
        assert w == word((0, 1))

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            free_reduce([(0, 2)])

    def test_rejects_out_of_alphabet(self):
        with pytest.raises(AlphabetMismatchError):
            free_reduce([(7, 1)], alphabet=AB)

    @given(raw_letters)
    def test_idempotent(self, raw):
        w = free_reduce(raw)
        assert free_reduce(w.letters) == w
        assert len(w) <= len(raw)

    @given(raw_letters)
    def test_no_adjacent_cancelling_pair(self, raw):
        w = free_reduce(raw)
        for (g1, s1), (g2, s2) in zip(w.letters, w.letters[1:]):
            assert not (g1 == g2 and s1 == -s2)

    @given(raw_letters)
    def test_inverse_cancels(self, raw):
        w = free_reduce(raw)
        assert w * w.inverse() == Word()
        assert w.inverse() * w == Word()

    @given(raw_letters, raw_letters, raw_letters)
    def test_multiplication_associative(self, a, b, c):
        u, v, w = free_reduce(a), free_reduce(b), free_reduce(c)
        assert (u * v) * w == u * (v * w)


class TestAlphabet:
    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            Alphabet(["a", "a"])

    def test_empty_name_rejected(self):
        with pytest.raises(ValueError):
            Alphabet(["a", ""])

    def test_parse_round_trip(self):
        w = AB.parse_word("x y^-1 x")
        assert w.letters == ((0, 1), (1, -1), (0, 1))
        assert AB.format_word(w) == "x y^-1 x"

    def test_parse_reduces(self):
        assert AB.parse_word("x x^-1") == Word()

    def test_parse_rejects_unknown_generator(self):
        with pytest.raises(PresentationParseError):
            AB.parse_word("x z")

    def test_parse_rejects_general_exponents(self):
        for bad in ("x^2", "x^1", "x^-2", "x^"):
            with pytest.raises(PresentationParseError):
                AB.parse_word(bad)


class TestGroupRing:
    def test_augmentation_counts_coefficients(self):
        e = GroupRingElement.from_word(X) * 2 - GroupRingElement.one() * 3
        assert augmentation(e) == -1

    def test_zero_terms_dropped(self):
        e = GroupRingElement.from_word(X) - GroupRingElement.from_word(X)
        assert e == GroupRingElement.zero()
        assert not e

    @given(raw_letters, raw_letters)
    def test_multiplication_matches_word_product(self, a, b):
        u, v = free_reduce(a), free_reduce(b)
        prod = GroupRingElement.from_word(u) * GroupRingElement.from_word(v)
        assert prod == GroupRingElement.from_word(u * v)


def ring_x(gen, sign=1):
    return GroupRingElement.from_word(generator_word(gen, sign))


class TestFoxDerivative:
    def test_single_generator(self):
        assert fox_derivative(X, 0) == GroupRingElement.one()
        assert fox_derivative(Y, 0) == GroupRingElement.zero()

    def test_inverse_generator(self):
        # d(x^-1)/dx = -x^-1
        assert fox_derivative(X.inverse(), 0) == GroupRingElement.from_word(
            X.inverse(), -1
        )

    def test_product_rule_example(self):
        # d(xy)/dx = 1, d(xy)/dy = x
        xy = X * Y
        assert fox_derivative(xy, 0) == GroupRingElement.one()
        assert fox_derivative(xy, 1) == ring_x(0)

    def test_commutator_example(self):
        # d([x,y])/dx = 1 - xyx^-1
        c = commutator(X, Y)
        expected = GroupRingElement.one() - GroupRingElement.from_word(
            X * Y * X.inverse()
        )
        assert fox_derivative(c, 0) == expected

    @given(raw_letters)
    def test_fundamental_identity(self, raw):
        # sum_j d(w)/dx_j * (x_j - 1) == w - 1
        w = free_reduce(raw)
        k = w.max_index() + 1
        total = GroupRingElement.zero()
        for j in range(k):
            total = total + fox_derivative(w, j) * (
                ring_x(j) - GroupRingElement.one()
            )
        assert total == GroupRingElement.from_word(w) - GroupRingElement.one()

    @given(raw_letters)
    def test_inverse_rule(self, raw):
        # d(w^-1)/dx = -w^-1 * d(w)/dx
        w = free_reduce(raw)
        for j in range(w.max_index() + 1):
            lhs = fox_derivative(w.inverse(), j)
            rhs = GroupRingElement.from_word(w.inverse(), -1) * fox_derivative(w, j)
            assert lhs == rhs

    @given(raw_letters, raw_letters)
    def test_product_rule(self, a, b):
        # d(uv)/dx = d(u)/dx + u * d(v)/dx
        u, v = free_reduce(a), free_reduce(b)
        for j in range(max(u.max_index(), v.max_index()) + 1):
            lhs = fox_derivative(u * v, j)
            rhs = fox_derivative(u, j) + GroupRingElement.from_word(u) * fox_derivative(
                v, j
            )
            assert lhs == rhs


class _CountRep:
    """Evaluation hook mapping every generator to 1; evaluate then equals
    augmentation."""

    def word_value(self, w):
        return 1

    def zero_value(self):
        return 0


def test_evaluate_trivial_rep_is_augmentation():
    e = GroupRingElement.from_word(X * Y) * 3 - GroupRingElement.one()
    assert evaluate(e, _CountRep()) == augmentation(e)
