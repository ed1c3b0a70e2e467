import pytest

import h2cert


def test_exponents():
    assert h2cert.exponents(1, 0) == (4, 2)
    assert h2cert.exponents(5, 5) == (273, 213)
    assert h2cert.exponent_chain_holds(4)
    assert not h2cert.exponent_chain_holds(3)


def test_rank_mod_p():
    for p in (2, 3):
        assert h2cert.observed_rank(p, 150, 150)["rank"] == p


def test_sieve_round_trip():
    cert = h2cert.find_sieve(2, 2, 4)
    assert cert["m"] == 69
    assert h2cert.verify_sieve(cert)
    cert["m"] += 1
    assert not h2cert.verify_sieve(cert)


def test_powers_and_presentations():
    independent, relation = h2cert.powers_independent("x", "-1-x", 5, 8)
    assert independent and relation == []
    assert h2cert.coinvariants("group", 4)["freeRank"] == 3
    assert h2cert.h2hat_quotient(2)["freeRank"] == 1
    assert h2cert.ce_h2_rank(2) == 2
    assert [h2cert.enumerate_rational(n) for n in range(1, 6)] == ["0", "1", "-1", "1/2", "-1/2"]


def test_errors_raise():
    with pytest.raises(h2cert.AlgebraError):
        h2cert.exponents(0, 0)
    with pytest.raises(h2cert.AlgebraError):
        h2cert.powers_independent("2", "1", 5, 3)
    with pytest.raises(ValueError):
        h2cert.coinvariants("group", 1)


def test_run_matches_cli_contract():
    code, report, _ = h2cert.run(["ce-h2", "--n", "3", "--quiet"])
    assert code == 0
    assert report["command"] == "ce-h2" and report["schemaVersion"] == 1
    code, report, err = h2cert.run(["sieve-find", "--d"])
    assert code == 2 and report is None and err
    assert "acceptance" in h2cert.commands()
