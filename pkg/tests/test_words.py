import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzv_identities import index as ix
from mzv_identities.combo import FINITE, ZetaCombo
from mzv_identities.errors import DivisibilityError, WordError
from mzv_identities.words import (
    NcPoly,
    RegPoly,
    alpha,
    beta_proj,
    derivation,
    index_from_word,
    lx_shift,
    nc_mul,
    reg_star,
    sigma_trunc,
    stuffle,
    tau,
    to_zeta_combo,
    word_from_index,
)

P = NcPoly
W = NcPoly.word

words = st.text(alphabet="xy", max_size=5)
coefs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
polys = st.dictionaries(words, coefs, max_size=4).map(NcPoly)
h1_words = words.map(lambda w: w + "y" if w else w)


def all_words(max_deg):
    for n in range(max_deg + 1):
        for letters in itertools.product("xy", repeat=n):
            yield "".join(letters)


def h1(max_deg):
    return [w for w in all_words(max_deg) if w == "" or w.endswith("y")]


# -- words and indices -------------------------------------------------------

def test_word_index_examples():
    assert word_from_index((2, 1)) == "xyy"
    assert index_from_word("xxy") == (3,)
    assert index_from_word(word_from_index((3, 1))) == (3, 1)
    assert word_from_index((3, 1)) == "xxyy"


def test_index_from_word_rejects_non_h1():
    for bad in ("", "x", "yx"):
        with pytest.raises(WordError):
            index_from_word(bad)


def test_word_index_bijection_exhaustive():
    for n in range(1, 11):
        for k in ix.all_compositions(n):
            assert index_from_word(word_from_index(k)) == k
    for w in h1(10):
        if w:
            assert word_from_index(index_from_word(w)) == w


# -- ring structure ------------------------------------------------------------

def test_nc_mul_examples():
    assert nc_mul(W("xy"), W("y")) == W("xyy")
    assert nc_mul(P({"x": 1, "xy": -1}), W("xy", -1)) == P({"xxy": -1, "xyxy": 1})
    assert nc_mul(P.one(), W("xyx")) == W("xyx")


@given(polys, polys, polys)
def test_nc_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_coefficients_are_reduced_and_nonzero():
    p = P({"xy": Fraction(2, 4), "y": 0}) + W("xy", Fraction(-1, 2))
    assert p.is_zero()
    q = P({"xy": Fraction(6, 4)})
    assert q.coefficient("xy") == Fraction(3, 2)
    assert q.coefficient("xy").denominator == 2


def test_display_order():
    p = P({"y": 1, "xy": 1, "x": 1, "yx": -2, "": 3})
    assert p.words() == ["", "x", "y", "xy", "yx"]
    assert str(p) == "3 + x + y + xy - 2*yx"


# -- tau, alpha --------------------------------------------------------------

def test_tau_examples():
    assert tau(W("x")) == W("y")
    assert tau(W("xxy")) == W("xyy")


@given(polys, polys)
def test_tau_involutive_anti_automorphism(a, b):
    assert tau(tau(a)) == a
    assert tau(a * b) == tau(b) * tau(a)


def test_alpha_examples():
    assert alpha(W("x")) == P({"x": 1, "xy": -1})
    assert alpha(W("y")) == W("xy", -1)
    assert alpha(W("xy")) == P({"xxy": -1, "xyxy": 1})


@given(polys, polys)
@settings(max_examples=50)
def test_alpha_ring_homomorphism(a, b):
    assert alpha(a * b) == alpha(a) * alpha(b)


# -- derivations -------------------------------------------------------------

def test_derivation_examples():
    assert derivation("del", 1, W("x")) == W("xy")
    assert derivation("del", 1, W("xy")) == P({"xyy": 1, "xxy": -1})
    assert derivation("D", 2, W("xy")) == W("xxxy")
    assert derivation("D", 3, W("x")).is_zero()


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_derivation_kills_z_and_one(l):
    assert derivation("del", l, P({"x": 1, "y": 1})).is_zero()
    assert derivation("del", l, P.one()).is_zero()


def test_derivation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        derivation("del", 0, W("x"))
    with pytest.raises(ValueError):
        derivation("shuffle", 1, W("x"))


@given(st.sampled_from(["del", "D"]), st.integers(1, 3), polys, polys)
@settings(max_examples=60)
def test_leibniz(kind, l, a, b):
    lhs = derivation(kind, l, a * b)
    rhs = derivation(kind, l, a) * b + a * derivation(kind, l, b)
    assert lhs == rhs


# -- projections and sigma -----------------------------------------------------

def test_beta_examples():
    assert beta_proj(2, P({"x": 1, "xy": 1, "xxy": 1})) == W("xy")
    assert beta_proj(0, P({"": 1, "x": 1})) == P.one()
    assert beta_proj(5, W("xy")).is_zero()
    assert beta_proj(3, P.zero()).is_zero()


def test_sigma_examples():
    assert sigma_trunc(W("y"), 3) == P({"y": 1, "xy": 1, "xxy": 1})
    for cap in (1, 4, 9):
        assert sigma_trunc(W("x"), cap) == W("x")
    assert sigma_trunc(W("xy"), 3) == P({"xy": 1, "xxy": 1})
    assert sigma_trunc(P.zero(), 5).is_zero()


def truncate(a, cap):
    return NcPoly({w: c for w, c in a.terms.items() if len(w) <= cap})


def sigma_by_exponential(a, cap):
    """Truncated exp(sum_l D_l / l) applied to ``a``."""

    def big_d(p):
        out = NcPoly.zero()
        for l in range(1, cap + 1):
            out = out + derivation("D", l, p).scale(Fraction(1, l))
        return truncate(out, cap)

    total = truncate(a, cap)
    power = total
    for n in range(1, cap + 1):
        power = big_d(power)
        if power.is_zero():
            break
        total = total + power.scale(Fraction(1, factorial(n)))
    return total


def test_sigma_matches_truncated_exponential():
    for w in all_words(6):
        assert sigma_trunc(W(w), 6) == sigma_by_exponential(W(w), 6), w


# -- L_x ------------------------------------------------------------------------

def test_lx_shift_examples():
    assert lx_shift("prepend", W("y")) == W("xy")
    assert lx_shift("strip", W("xxy")) == W("xy")
    with pytest.raises(DivisibilityError):
        lx_shift("strip", W("y"))
    with pytest.raises(DivisibilityError):
        lx_shift("strip", P.one())


@given(polys)
def test_lx_round_trip(a):
    assert lx_shift("strip", lx_shift("prepend", a)) == a


def test_lx_commutes_with_sigma():
    for cap in range(1, 7):
        for w in h1(cap):
            lhs = lx_shift("strip", sigma_trunc(lx_shift("prepend", W(w)), cap + 1))
            assert lhs == sigma_trunc(W(w), cap), (w, cap)


# -- stuffle ----------------------------------------------------------------------

def nested_sum(k, n_max):
    """Exact sum over n_max >= n_1 > ... > n_d >= 1 by brute force."""
    total = Fraction(0)
    for ns in itertools.combinations(range(n_max, 0, -1), len(k)):
        term = Fraction(1)
        for n, part in zip(ns, k):
            term /= n**part
        total += term
    return total


def test_stuffle_examples():
    z = lambda *k: W(word_from_index(k))  # noqa: E731
    assert stuffle(z(2), z(3)) == z(2, 3) + z(3, 2) + z(5)
    assert stuffle(z(1), z(1)) == z(1, 1).scale(2) + z(2)
    assert stuffle(P.one(), z(4, 1)) == z(4, 1)


def test_stuffle_matches_truncated_sum_products():
    # the harmonic product is exact already for truncated nested sums
    cases = [((2,), (3,)), ((1,), (1,)), ((2, 1), (1,)), ((1, 2), (3, 1)), ((2,), (1, 1, 2))]
    for a, b in cases:
        prod = stuffle(W(word_from_index(a)), W(word_from_index(b)))
        for n_max in (5, 7):
            expected = nested_sum(a, n_max) * nested_sum(b, n_max)
            got = sum(c * nested_sum(index_from_word(w), n_max) for w, c in prod.items())
            assert got == expected


def test_stuffle_rejects_non_h1():
    with pytest.raises(WordError):
        stuffle(W("x"), W("y"))


def test_stuffle_commutative_associative_exhaustive():
    ws = h1(4)
    for u, v in itertools.product(ws, repeat=2):
        assert stuffle(W(u), W(v)) == stuffle(W(v), W(u))
    for u, v, w in itertools.product(h1(3), repeat=3):
        assert stuffle(stuffle(W(u), W(v)), W(w)) == stuffle(W(u), stuffle(W(v), W(w)))


@given(st.lists(st.sampled_from(h1(4)), min_size=3, max_size=3))
@settings(max_examples=200)
def test_stuffle_associative_degree_four(triple):
    u, v, w = (W(t) for t in triple)
    assert stuffle(stuffle(u, v), w) == stuffle(u, stuffle(v, w))


# -- harmonic regularization -------------------------------------------------------

def reconstruct(reg: RegPoly) -> NcPoly:
    """Undo T -> z_1: sum_j a_j * z_1^(*j)."""
    out = NcPoly.zero()
    for e, coef in reg.coefficients.items():
        power = NcPoly.one()
        for _ in range(e):
            power = stuffle(power, W("y"))
        out = out + stuffle(coef, power)
    return out


def test_reg_star_examples():
    assert reg_star(W("y")) == RegPoly({1: P.one()})
    assert reg_star(W("yxy")) == RegPoly({1: W("xy"), 0: P({"xyy": -1, "xxy": -1})})
    for w in ("xy", "xyxy", "xxyy"):
        assert reg_star(W(w)) == RegPoly({0: W(w)})


def test_reg_star_round_trip_exhaustive():
    for w in h1(7):
        reg = reg_star(W(w))
        for coef in reg.coefficients.values():
            assert all(u == "" or u.startswith("x") for u in coef.words())
        assert reconstruct(reg) == W(w), w


def test_reg_star_admissible_words_are_fixed():
    for w in all_words(7):
        if w.startswith("x") and w.endswith("y"):
            reg = reg_star(W(w))
            assert reg.degree == 0
            assert reg.constant_term() == W(w)


def test_reg_star_is_multiplicative():
    for w in h1(4):
        assert reg_star(stuffle(W("y"), W(w))) == reg_star(W("y")) * reg_star(W(w))
    for u, v in itertools.product(h1(3), repeat=2):
        assert reg_star(stuffle(W(u), W(v))) == reg_star(W(u)) * reg_star(W(v))


# -- zeta combos ------------------------------------------------------------------

def test_to_zeta_combo_examples():
    assert to_zeta_combo(P({"xyy": 1, "xxy": -1})) == ZetaCombo({(2, 1): 1, (3,): -1})
    assert to_zeta_combo(P.zero()) == ZetaCombo()
    assert to_zeta_combo(W("xy", Fraction(1, 2))) == ZetaCombo({(2,): Fraction(1, 2)})
    assert to_zeta_combo(W("y"), FINITE).kind == FINITE
    with pytest.raises(WordError):
        to_zeta_combo(W("yx"))


@given(h1_words)
def test_h1_words_decode(w):
    if w:
        assert word_from_index(index_from_word(w)) == w
