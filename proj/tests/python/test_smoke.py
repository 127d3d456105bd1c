# SPDX-License-Identifier: Apache-2.0
import math

import numpy as np
import pytest

import risctl


def test_dft_codebook_is_orthogonal():
    theta = risctl.dft_codebook(8, 8)
    assert theta.shape == (8, 8)
    gram = theta.conj().T @ theta
    assert np.allclose(gram, 8 * np.eye(8), atol=1e-12)


def test_ls_estimate_inverts_a_noiseless_sweep():
    rng = np.random.default_rng(0)
    z = rng.normal(size=16) + 1j * rng.normal(size=16)
    theta = risctl.dft_codebook(16, 16)
    z_hat = np.asarray(risctl.ls_estimate(theta @ z, 16))
    assert np.allclose(z_hat, z, atol=1e-12)


def test_optimal_config_aligns_phases():
    z = np.array([1j, 1j])
    phi = np.asarray(risctl.optimal_config(z))
    assert np.allclose(phi, [-1j, -1j])


def test_packet_outage():
    assert risctl.packet_outage(49, 450e-6, 900e3, math.inf) == 0.0
    expected = 1 - math.exp(-(2 ** (49 / (450e-6 * 900e3)) - 1) / 11.03)
    assert risctl.packet_outage(49, 450e-6, 900e3, 11.03) == pytest.approx(expected, rel=1e-12)


def test_experiment_runs_deterministically():
    exp = risctl.Experiment("paradigm = bsw-fixed\nlambda_u_db = 12\n")
    a = exp.run(200, 3, threads=1)
    b = exp.run(200, 3, threads=2)
    assert a["mean_goodput_bps"] == b["mean_goodput_bps"]
    assert 0.0 <= a["empirical_p_cc"] <= 1.0
    trial = exp.run_trial(0, 3)
    assert trial["sweep_count"] == 34
    assert exp.min_lambda_u_db(0.99) == pytest.approx(10.11, abs=5e-3)


def test_run_command_returns_csv():
    csv = risctl.run_command("reliability")
    lines = csv.splitlines()
    assert lines[0] == "# schema=1"
    assert lines[1] == "lambda_u_db,lambda_r_db_min,feasible"
    assert float(lines[2].split(",")[0]) == pytest.approx(10.43, abs=5e-3)


def test_config_errors_raise():
    with pytest.raises(risctl.ConfigError, match="tau_s must be < T"):
        risctl.Experiment("tau_s_us = 600\n")
    with pytest.raises(ValueError):
        risctl.run_command("nonsense")
