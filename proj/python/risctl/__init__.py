# SPDX-License-Identifier: Apache-2.0
"""Control-aware link simulator for RIS-aided uplinks."""

from ._risctl import (
    ConfigError,
    Experiment,
    default_config_text,
    dft_codebook,
    ls_estimate,
    optimal_config,
    packet_outage,
    run_command,
)

__all__ = [
    "ConfigError",
    "Experiment",
    "default_config_text",
    "dft_codebook",
    "ls_estimate",
    "optimal_config",
    "packet_outage",
    "run_command",
]
