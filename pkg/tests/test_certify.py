import json
import random
from fractions import Fraction

import pytest

from picardrank.certify import (
    INCONSISTENT,
    NOT_FORCED,
    RANK_ONE,
    RANK_TWO,
    MiscData,
    RankCertificate,
    certify,
    hodge_report,
    synthesize_misc,
    validate_hypotheses,
)
from picardrank.dataio import (
    DataFileError,
    data_from_dict,
    data_to_dict,
    dumps,
    loads_data,
    parse_rational,
)
from picardrank.identities import AmbientKind
from picardrank.prodproj import ProdData, synthesize_prod
from picardrank.schubert import GrassData, synthesize_grass


def rand_q(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 4))


def assert_sound(cert):
    """A certificate must hold on its own matrix: D-row = combination of the rest."""
    m = cert.matrix
    if cert.conclusion.kind == RANK_ONE:
        assert [cert.conclusion.q * x for x in m[0]] == list(m[1])
    elif cert.conclusion.kind == RANK_TWO:
        p, q = cert.conclusion.p, cert.conclusion.q
        assert [p * x + q * y for x, y in zip(m[0], m[1])] == list(m[2])


def test_grass_worked_example():
    cert = certify(GrassData(4, (1, 1), (2, 4), (12, 8)))
    assert cert.hypothesis.ok
    assert cert.p_value == 0
    assert cert.summands and all(v == 0 for _, v in cert.summands)
    assert cert.conclusion.kind == RANK_ONE and cert.conclusion.q == 2
    assert_sound(cert)


def test_prod_worked_example():
    cert = certify(ProdData(3, (1, 1), (1, 2, 1), (3, 3)))
    assert cert.conclusion.kind == RANK_TWO
    assert (cert.conclusion.p, cert.conclusion.q) == (1, 1)
    assert cert.sigma == "{2}|{3}"
    assert_sound(cert)


def test_prod_nonzero_P_is_inconsistent():
    cert = certify(ProdData(3, (1, 1), (1, 2, 1), (3, 4)))
    assert cert.p_value == -1
    assert cert.conclusion.kind == INCONSISTENT


def test_even_quadric_two_rulings_not_forced():
    data = MiscData(AmbientKind.QUADRIC_EVEN, {"d": 1, "alpha1": 1, "alpha2": 0, "mu": 0})
    cert = certify(data)
    assert cert.p_value == 0
    assert cert.conclusion.kind == NOT_FORCED
    assert "rulings" in cert.conclusion.reason


def test_odd_quadric_same_numbers_inconsistent():
    data = MiscData(AmbientKind.QUADRIC_ODD, {"d": 1, "alpha1": 1, "alpha2": 0, "mu": 0})
    cert = certify(data)
    assert cert.conclusion.kind == INCONSISTENT


def test_blowup_examples():
    ok = certify(MiscData(AmbientKind.BLOWUP_P6, {"a1": 2, "a2": 1, "alpha1": 2, "alpha2": 0, "lambda1": 2, "lambda2": 0}))
    assert ok.conclusion.kind == RANK_TWO and (ok.conclusion.p, ok.conclusion.q) == (1, 0)
    assert ok.notes
    bad = certify(MiscData(AmbientKind.BLOWUP_P6, {"a1": 1, "a2": 1, "alpha1": 1, "alpha2": 0, "lambda1": 1, "lambda2": 0}))
    assert not bad.hypothesis.ok and bad.conclusion.kind == NOT_FORCED


def test_curve_example():
    data = synthesize_misc(AmbientKind.CURVE_X_P5, a1=1, a2=0, p=1, q=0)
    cert = certify(data)
    assert cert.conclusion.kind == RANK_TWO and (cert.conclusion.p, cert.conclusion.q) == (1, 0)


def test_projective_rank_one():
    cert = certify(synthesize_misc(AmbientKind.PROJECTIVE, d=3, q=Fraction(5, 2)))
    assert cert.conclusion.kind == RANK_ONE and cert.conclusion.q == Fraction(5, 2)


# hypotheses


def test_grass_zero_a_violates():
    data = GrassData(5, (1, 0), (0, 0, 0), (0, 0))
    assert not validate_hypotheses(data).ok
    cert = certify(data)
    assert cert.hypothesis.to_dict()["status"] == "violated"
    assert cert.conclusion.kind == NOT_FORCED


def test_prod_hypotheses():
    assert validate_hypotheses(ProdData(4, (1, 1, 1), (0, 0, 0, 0), (0, 0, 0))).ok
    assert not validate_hypotheses(ProdData(4, (1, -1, 1), (0, 0, 0, 0), (0, 0, 0))).ok
    assert not validate_hypotheses(ProdData(4, (0, 1, 1), (0, 0, 0, 0), (0, 0, 0))).ok


def test_negative_grass_class_inconsistent():
    cert = certify(GrassData(4, (1, -1), (0, 0), (0, 0)))
    assert cert.conclusion.kind == INCONSISTENT


def test_zero_divisor_certifies_zero():
    g = certify(GrassData(6, (1, 2, 3), (0, 0, 0), (0, 0, 0)))
    assert g.conclusion.kind == RANK_ONE and g.conclusion.q == 0
    p = certify(ProdData(5, (1, 2, 3, 1), (0,) * 5, (0,) * 4))
    assert p.conclusion.kind == RANK_TWO and (p.conclusion.p, p.conclusion.q) == (0, 0)


def test_broken_log_concavity_inconsistent():
    cert = certify(ProdData(4, (4, 1, 4), (0, 0, 0, 0), (0, 0, 0)))
    assert cert.conclusion.kind == INCONSISTENT
    assert "log-concave" in cert.conclusion.reason


def test_hodge_report_lists_minors():
    rep = hodge_report(synthesize_prod(5, (1, 2, 3, 2), 1, 2))
    assert rep.p_value == 0 and not rep.violations
    assert {label for label, _ in rep.minors} >= {"r[1]", "r~[4]"}


# synthesized data and perturbations


@pytest.mark.parametrize("seed", range(40))
def test_synthesized_grass_recovers_q(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 8)
    a = [Fraction(rng.randint(1, 9)) for _ in range(n // 2)]
    q = rand_q(rng)
    cert = certify(synthesize_grass(n, a, q))
    assert cert.conclusion.kind == RANK_ONE and cert.conclusion.q == q
    assert_sound(cert)


def log_concave_a(rng, n):
    # nonincreasing consecutive ratios a_(i+1)/a_i give a log-concave
    # sequence; repeated ratios exercise the merged partition maps
    ratios = sorted((Fraction(rng.randint(1, 4), rng.randint(1, 4)) for _ in range(n - 2)), reverse=True)
    a = [Fraction(rng.randint(1, 5))]
    for r in ratios:
        a.append(a[-1] * r)
    return a


@pytest.mark.parametrize("seed", range(40))
def test_synthesized_prod_recovers_pq(seed):
    rng = random.Random(1000 + seed)
    n = rng.randint(3, 8)
    a = log_concave_a(rng, n)
    p, q = rand_q(rng), rand_q(rng)
    cert = certify(synthesize_prod(n, a, p, q))
    assert cert.conclusion.kind == RANK_TWO
    assert (cert.conclusion.p, cert.conclusion.q) == (p, q)
    assert_sound(cert)


def test_prod_with_equal_ratios():
    # a = (1, 2, 4): sigma merges {2,3}
    cert = certify(synthesize_prod(4, (1, 2, 4), Fraction(3), Fraction(-2)))
    assert cert.sigma == "{2,3}|{4}"
    assert cert.conclusion.kind == RANK_TWO
    assert (cert.conclusion.p, cert.conclusion.q) == (3, -2)


@pytest.mark.parametrize("seed", range(20))
def test_synthesized_misc(seed):
    rng = random.Random(2000 + seed)
    d = rng.randint(1, 9)
    q = rand_q(rng)
    for kind in (AmbientKind.PROJECTIVE, AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        cert = certify(synthesize_misc(kind, d=d, q=q))
        assert cert.conclusion.kind == RANK_ONE and cert.conclusion.q == q
    a2 = rng.randint(1, 5)
    a1 = a2 + rng.randint(1, 5)
    p, q = rand_q(rng), rand_q(rng)
    cert = certify(synthesize_misc(AmbientKind.BLOWUP_P6, a1=a1, a2=a2, p=p, q=q))
    assert cert.conclusion.kind == RANK_TWO and (cert.conclusion.p, cert.conclusion.q) == (p, q)
    cert = certify(synthesize_misc(AmbientKind.CURVE_X_P5, a1=a1, a2=a2, p=p, q=q))
    assert cert.conclusion.kind == RANK_TWO and (cert.conclusion.p, cert.conclusion.q) == (p, q)


def perturb(values, rng):
    values = list(values)
    i = rng.randrange(len(values))
    values[i] += rng.randint(1, 5)
    return tuple(values)


@pytest.mark.parametrize("seed", range(40))
def test_perturbed_grass_never_certified(seed):
    rng = random.Random(3000 + seed)
    n = rng.randint(4, 8)
    a = [Fraction(rng.randint(1, 9)) for _ in range(n // 2)]
    data = synthesize_grass(n, a, Fraction(rng.randint(0, 6)))
    if rng.random() < 0.5:
        bad = GrassData(n, data.a, perturb(data.alpha, rng), data.lambda_)
    else:
        bad = GrassData(n, data.a, data.alpha, perturb(data.lambda_, rng))
    assert certify(bad).conclusion.kind in (INCONSISTENT, NOT_FORCED)


@pytest.mark.parametrize("seed", range(40))
def test_perturbed_prod_never_certified(seed):
    rng = random.Random(4000 + seed)
    n = rng.randint(3, 8)
    a = log_concave_a(rng, n)
    data = synthesize_prod(n, a, Fraction(rng.randint(0, 4)), Fraction(rng.randint(0, 4)))
    if rng.random() < 0.5:
        bad = ProdData(n, data.a, perturb(data.alpha, rng), data.lambda_)
    else:
        bad = ProdData(n, data.a, data.alpha, perturb(data.lambda_, rng))
    assert certify(bad).conclusion.kind in (INCONSISTENT, NOT_FORCED)


# serialization


@pytest.mark.parametrize(
    "data",
    [
        GrassData(4, (1, 1), (2, 4), (12, 8)),
        ProdData(3, (1, 1), (1, 2, 1), (3, 3)),
        MiscData(AmbientKind.QUADRIC_EVEN, {"d": 1, "alpha1": 1, "alpha2": 0, "mu": 0}),
        synthesize_prod(4, (1, 2, 4), Fraction(1, 3), 2),
    ],
)
def test_certificate_round_trip(data):
    cert = certify(data)
    text = dumps(cert.to_dict())
    back = RankCertificate.from_dict(json.loads(text))
    assert back == cert
    assert dumps(back.to_dict()) == text
    assert data_from_dict(data_to_dict(data)) == data


def test_rationals_are_exact_strings():
    cert = certify(synthesize_grass(4, (2, 3), Fraction(1, 3)))
    out = json.loads(dumps(cert.to_dict()))
    assert out["conclusion"] == {"kind": "rank-one", "q": "1/3"}


def test_parse_rational():
    assert parse_rational(3) == 3
    assert parse_rational("-7/4") == Fraction(-7, 4)
    for bad in (1.5, "x", "1/0", True, None):
        with pytest.raises(DataFileError):
            parse_rational(bad)


def test_data_file_errors():
    with pytest.raises(DataFileError, match="line 1"):
        loads_data("{not json")
    with pytest.raises(DataFileError, match="unknown ambient"):
        loads_data('{"ambient": "torus"}')
    with pytest.raises(DataFileError, match="needs 2 entries"):
        loads_data('{"ambient": "grass", "n": 4, "a": [1], "alpha": [1, 2], "lambda": [1, 2]}')
    with pytest.raises(DataFileError, match="missing"):
        loads_data('{"ambient": "quadric_odd", "d": 1}')
