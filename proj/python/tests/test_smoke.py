import math
import os

import numpy as np
import pytest

import daanneal

CORPUS = os.environ.get(
    "DAANNEAL_CORPUS_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "corpus")
)


def pair(j=1.0):
    return daanneal.IsingInstance(2, [(0, 1, j)])


def test_instance_and_energy():
    inst = pair()
    assert inst.n == 2
    assert inst.couplings == [(0, 1, 1.0)]
    assert inst.energy([1, 1]) == -1.0
    assert inst.energy_cost([1, 1], 0) == 2.0
    assert daanneal.parse_instance_text(inst.to_text()) == inst
    with pytest.raises(ValueError):
        daanneal.IsingInstance(2, [(0, 0, 1.0)])


def test_parse_error_carries_line():
    with pytest.raises(daanneal.InstanceFormatError, match="line 2"):
        daanneal.parse_instance_text("n 2\nJ 0 0 1\n")


def test_pair_matrix_and_stationary():
    beta = 1.0
    p = daanneal.transition_matrix(pair(), beta)
    a = math.exp(-2 * beta)
    assert p.shape == (4, 4)
    assert np.allclose(p.sum(axis=1), 1.0, atol=1e-12)
    assert abs(p[3, 3] - (1 - a) ** 2) < 1e-12
    assert abs(p[1, 0] - 0.5) < 1e-12
    pi = daanneal.stationary(pair(), beta)
    assert np.allclose(pi @ p, pi, atol=1e-12)
    assert abs(daanneal.r_factor(pair(), [1, 1], 0, beta) - (1 - 0.5 * a)) < 1e-14


def test_field_only_matches_gibbs():
    inst = daanneal.parse_instance(os.path.join(CORPUS, "field_only4.txt"))
    assert np.abs(daanneal.stationary(inst, 0.8) - daanneal.gibbs(inst, 0.8)).sum() < 1e-10
    report = daanneal.stationary_report(inst, 0.8)
    assert report["gibbs_residual"]["agree"]


def test_landscape_and_classify():
    well = daanneal.parse_instance(os.path.join(CORPUS, "double_well4.txt"))
    assert daanneal.landscape(well)["gamma_star"] == 2
    assert daanneal.landscape(pair())["gamma_star"] == 0
    assert daanneal.classify("log:gamma=1,k0=1", 2.0)["classification"] == "Converges"
    assert daanneal.classify("log:gamma=2", 2.0)["classification"] == "Diverges"


def test_anneal_is_deterministic():
    well = daanneal.parse_instance(os.path.join(CORPUS, "double_well4.txt"))
    args = dict(schedule="log:gamma=2,k0=1", steps=2000, replicas=20, seed=3, record_stride=500)
    first = daanneal.anneal(well, **args)
    assert first == daanneal.anneal(well, **args, threads=2)
    assert len(first["points"]) == 5
    assert 0.0 <= first["points"][-1]["success"] <= 1.0


def test_verify():
    assert daanneal.verify(pair(), 0.7)["passed"]
