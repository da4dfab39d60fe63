import itertools
import random
from fractions import Fraction

import pytest
from sympy import primerange

from mzv_identities import index as ix
from mzv_identities.combo import FINITE, REAL, ZetaCombo
from mzv_identities.errors import BadPrimeError, ConfigurationError
from mzv_identities.finite import (
    PrimeSet,
    eval_combo_mod_p,
    eval_fmzv,
    eval_fmzv_mod_p,
    inverse_table,
    verify_finite,
)
from mzv_identities.identities import (
    IdentityInstance,
    derivation_finite_instance,
    gen_finite,
    gen_main,
    relation_instance,
)


def brute_mod_p(k, p):
    """Nested loops over p > n_1 > ... > n_d >= 1, inverses by Fermat."""
    total = 0
    for ns in itertools.combinations(range(p - 1, 0, -1), len(k)):
        term = 1
        for n, part in zip(ns, k):
            term = term * pow(n, (p - 2) * part, p) % p
        total += term
    return total % p


def test_examples():
    assert eval_fmzv_mod_p((2,), 7) == 0
    assert eval_fmzv_mod_p((1, 1), 11) == 0
    assert eval_fmzv_mod_p((1,), 5) == 0


def test_inverse_table():
    for p in (2, 3, 5, 101):
        inv = inverse_table(p)
        assert all(n * int(inv[n]) % p == 1 for n in range(1, p))


def test_matches_brute_force_exhaustive():
    for p in primerange(2, 32):
        for w in range(1, 6):
            for k in ix.indices_of_weight(w):
                assert eval_fmzv_mod_p(k, p) == brute_mod_p(k, p), (k, p)


def test_single_power_sums_vanish():
    for k in range(1, 9):
        for p in primerange(k + 2, 200):
            if (p - 1) % k == 0:
                continue
            naive = sum(pow(n, p - 1 - k % (p - 1), p) for n in range(1, p)) % p
            assert naive == 0
            assert eval_fmzv_mod_p((k,), p) == 0


def test_rejects_non_prime():
    with pytest.raises(ValueError):
        eval_fmzv_mod_p((2,), 9)
    with pytest.raises(ValueError):
        PrimeSet((11, 15))
    with pytest.raises(ValueError):
        PrimeSet((13, 11))


def test_combo_mod_p():
    rel = ZetaCombo({(1, 1): 1, (2,): -1}, FINITE)
    assert eval_combo_mod_p(rel, 11) == 0
    assert eval_combo_mod_p(ZetaCombo(kind=FINITE), 11) == 0
    with pytest.raises(BadPrimeError):
        eval_combo_mod_p(ZetaCombo({(2,): Fraction(1, 2)}, FINITE), 2)
    half = eval_combo_mod_p(ZetaCombo({(1, 2): Fraction(1, 2)}, FINITE), 13)
    assert 2 * half % 13 == eval_fmzv_mod_p((1, 2), 13)


def test_prime_set_parse():
    ps = PrimeSet.parse("11..1009")
    assert ps.primes[0] == 11 and ps.primes[-1] == 1009
    assert len(ps) == len(list(primerange(11, 1010)))
    assert PrimeSet.parse("5,7,11").primes == (5, 7, 11)
    assert PrimeSet.default() == ps


def test_verify_finite_examples():
    report = verify_finite(gen_finite((3, 2), 4), PrimeSet.from_range(11, 1009))
    assert report.passed
    assert report.details["primes_tested"] == len(list(primerange(11, 1010)))
    assert verify_finite(derivation_finite_instance(1, "y")).passed
    assert verify_finite(derivation_finite_instance(1, "xy")).passed
    assert verify_finite(derivation_finite_instance(2, "y")).passed


def test_verify_finite_detects_perturbation():
    inst = gen_finite((3, 2), 4)
    report = verify_finite(inst.perturbed())
    assert report.status == "fail"
    assert len(report.details["failures"]) > 0.9 * report.details["primes_tested"]


def test_depth_two_square_is_invisible():
    # zeta_A(2,2) = (zeta_A(2)^2 - zeta_A(4)) / 2 vanishes, so adding it cannot be detected
    for p in primerange(11, 200):
        assert eval_fmzv_mod_p((2, 2), p) == 0


def test_skips_are_reported():
    inst = relation_instance(ZetaCombo({(1, 2): Fraction(1, 7), (2, 1): Fraction(1, 7), (3,): Fraction(-1, 7)},
                                       FINITE), "derivation-finite", {})
    report = verify_finite(inst, PrimeSet((2, 3, 5, 7, 11, 13)))
    assert report.passed
    assert report.details["skipped"] == [
        {"p": 2, "reason": "weight"},
        {"p": 3, "reason": "weight"},
        {"p": 7, "reason": "denominator"},
    ]
    assert report.details["primes_tested"] == 3
    rec = report.to_record()
    assert list(rec) == ["status", "backend", "primes_tested", "skipped", "failures"]


def test_empty_admitted_set_is_configuration_error():
    with pytest.raises(ConfigurationError):
        verify_finite(gen_finite((3, 2), 4), PrimeSet((2, 3, 5, 7)))


def test_rejects_real_instance():
    with pytest.raises(ValueError):
        verify_finite(gen_main((2,), 2))


def test_order_independent():
    inst = gen_finite((2, 1), 3)
    primes = list(primerange(11, 400))
    shuffled = primes[:]
    random.Random(0).shuffle(shuffled)
    a = verify_finite(inst.perturbed(), PrimeSet(tuple(primes)))
    fails = {}
    for p in shuffled:
        fails[p] = eval_combo_mod_p(inst.perturbed().difference(), p)
    expected = [{"p": p, "residue": fails[p]} for p in primes if fails[p]]
    assert a.details["failures"] == expected


def test_eval_fmzv_many_primes():
    ev = eval_fmzv((1, 2), [11, 13])
    assert ev.residues == {11: brute_mod_p((1, 2), 11), 13: brute_mod_p((1, 2), 13)}


def test_kind_is_checked():
    with pytest.raises(ValueError):
        verify_finite(IdentityInstance(ZetaCombo({(2,): 1}, REAL), ZetaCombo(kind=REAL), "main"))
