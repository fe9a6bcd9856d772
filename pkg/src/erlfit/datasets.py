"""Bundled demo data.

The package ships one small SYNTHETIC sample: 37 draws from the
five-parameter family at a=0.801, b=5.5, theta=0.025, lam=0.113,
beta=0.501 (seed 20260822), written by tools/make_synthetic_data.py.
It exists so the CLI and the demos have something to chew on out of the
box.  It is simulated output of this package's own sampler, not a real
surveillance or mortality series.
"""

from __future__ import annotations

from importlib import resources

import numpy as np

from .estimation import Dataset

SYNTHETIC_PARAMS = {"a": 0.801, "b": 5.5, "theta": 0.025, "lam": 0.113, "beta": 0.501}
SYNTHETIC_SEED = 20260822
SYNTHETIC_FILE = "synthetic_demo.csv"


def synthetic_path() -> str:
    """Filesystem path of the bundled synthetic CSV."""
    return str(resources.files("erlfit.data").joinpath(SYNTHETIC_FILE))


def load_synthetic() -> Dataset:
    """The bundled synthetic sample as a Dataset."""
    text = resources.files("erlfit.data").joinpath(SYNTHETIC_FILE).read_text("utf-8")
    values = [float(line) for line in text.splitlines()[1:] if line.strip()]
    return Dataset(np.asarray(values))
