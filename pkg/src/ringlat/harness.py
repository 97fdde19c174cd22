"""Experiment engine: random corpora, density counts and timing sweeps.

Reproducibility contract: every trial derives its own RNG stream from
(seed, trial index) through numpy's SeedSequence/PCG64, so aggregates do
not depend on execution order and identical configs give identical
corpora on any platform.
"""

import csv
import io
import time
from dataclasses import dataclass

import numpy as np

from ringlat.identify import identify
from ringlat.linalg import determinant
from ringlat.matrix import IntMatrix
from ringlat.polyring import MonicPoly, principal_ideal_basis

MODE_RANDOM = "random-lattice"
MODE_PRINCIPAL = "principal-ideal"

TIMING_HEADER = ["dim", "bound", "trials", "mode", "mean_seconds", "seed"]
DENSITY_HEADER = ["dim", "bound", "trials", "ideal_count", "proportion", "seed"]


@dataclass(frozen=True)
class ExperimentConfig:
    dim: int
    bound: int
    trials: int
    seed: int
    mode: str = MODE_RANDOM

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.mode not in (MODE_RANDOM, MODE_PRINCIPAL):
            raise ValueError(f"unknown mode: {self.mode!r}")


@dataclass(frozen=True)
class DensityRow:
    dim: int
    bound: int
    trials: int
    ideal_count: int
    proportion: float
    seed: int


def _rng(seed, *path):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed & (2**64 - 1), *path])))


def _draw_entries(rng, count, bound):
    """count integers uniform in (-2^bound, 2^bound), any bound size.

    Bounds past 62 bits overflow numpy's int64 sampler, so wide entries
    are assembled from 32-bit words with rejection to stay uniform.
    """
    if bound <= 62:
        hi = 2**bound
        return [int(e) for e in rng.integers(-hi + 1, hi, size=count)]
    span = 2 ** (bound + 1) - 1
    words = (bound + 1 + 31) // 32
    out = []
    while len(out) < count:
        val = 0
        for w in rng.integers(0, 2**32, size=words):
            val = (val << 32) | int(w)
        val &= 2 ** (bound + 1) - 1
        if val < span:
            out.append(val - (2**bound - 1))
    return out


def random_basis(n, bound, seed, _salt=()):
    """Nonsingular n x n matrix with entries uniform in (-2^bound, 2^bound).

    Deterministic in (n, bound, seed); singular draws are rejected and
    redrawn from the same stream.
    """
    if n < 1 or bound < 1:
        raise ValueError("n and bound must be at least 1")
    rng = _rng(seed, *_salt)
    while True:
        entries = _draw_entries(rng, n * n, bound)
        m = IntMatrix([entries[i * n : (i + 1) * n] for i in range(n)])
        if determinant(m) != 0:
            return m


def random_monic(n, rng, coeff_set=(-1, 0, 1)):
    """Monic degree-n polynomial with non-leading coefficients from coeff_set."""
    choices = sorted(coeff_set)
    return MonicPoly([choices[i] for i in rng.integers(0, len(choices), size=n)])


def random_principal(n, bound, seed, coeff_set=(-1, 0, 1), _salt=()):
    """Random principal-ideal lattice instance (f, g, basis).

    f is monic of degree n with non-leading coefficients drawn from
    coeff_set (small coefficients keep the basis entries from exploding);
    g is a generator with coefficients uniform in (-2^bound, 2^bound).
    Degenerate draws (zero or rank-deficient generators) are rejected.
    """
    if n < 1 or bound < 1:
        raise ValueError("n and bound must be at least 1")
    rng = _rng(seed, *_salt)
    while True:
        f = random_monic(n, rng, coeff_set)
        g = _draw_entries(rng, n, bound)
        if all(e == 0 for e in g):
            continue
        try:
            b = principal_ideal_basis(f, g)
        except ValueError:
            continue
        return f, g, b


def density_experiment(cfg):
    """Count ideal lattices among cfg.trials random draws."""
    if cfg.mode != MODE_RANDOM:
        raise ValueError("density experiments use random-lattice mode")
    count = 0
    for trial in range(cfg.trials):
        b = random_basis(cfg.dim, cfg.bound, cfg.seed, _salt=(trial,))
        if identify(b) is not None:
            count += 1
    return DensityRow(
        dim=cfg.dim,
        bound=cfg.bound,
        trials=cfg.trials,
        ideal_count=count,
        proportion=count / cfg.trials,
        seed=cfg.seed,
    )


def timing_experiment(cfg, warmup=True):
    """Mean wall-clock seconds of identify over cfg.trials fresh instances.

    Instance generation is excluded from the timing; with warmup enabled
    one extra untimed run precedes the measured ones.  Returns a dict in
    TIMING_HEADER order.
    """

    def instance(trial):
        if cfg.mode == MODE_PRINCIPAL:
            return random_principal(cfg.dim, cfg.bound, cfg.seed, _salt=(trial,))[2]
        return random_basis(cfg.dim, cfg.bound, cfg.seed, _salt=(trial,))

    if warmup:
        identify(instance(cfg.trials))  # distinct salt, result discarded
    total = 0.0
    for trial in range(cfg.trials):
        b = instance(trial)
        start = time.perf_counter()
        identify(b)
        total += time.perf_counter() - start
    return {
        "dim": cfg.dim,
        "bound": cfg.bound,
        "trials": cfg.trials,
        "mode": cfg.mode,
        "mean_seconds": total / cfg.trials,
        "seed": cfg.seed,
    }


def density_sweep(dims, bounds, trials, seed):
    """DensityRow per (dim, bound) pair of the grid."""
    return [
        density_experiment(ExperimentConfig(dim=d, bound=b, trials=trials, seed=seed))
        for d in dims
        for b in bounds
    ]


def timing_sweep(dims, bounds, trials, seed, modes=(MODE_RANDOM, MODE_PRINCIPAL), warmup=True):
    """One timing row per (dim, bound, mode) triple of the grid."""
    return [
        timing_experiment(ExperimentConfig(dim=d, bound=b, trials=trials, seed=seed, mode=m), warmup=warmup)
        for d in dims
        for b in bounds
        for m in modes
    ]


def density_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(DENSITY_HEADER)
    for r in rows:
        w.writerow([r.dim, r.bound, r.trials, r.ideal_count, r.proportion, r.seed])
    return buf.getvalue()


def timing_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(TIMING_HEADER)
    for r in rows:
        w.writerow([r[k] for k in TIMING_HEADER])
    return buf.getvalue()


def density_svg(rows, path):
    """Line plot of ideal-lattice proportion.

    With several dims the x axis is dim (one series per bound); a sweep
    over a single dim is plotted against bound instead.
    """
    import matplotlib

    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    vs_bound = len({r.dim for r in rows}) == 1 and len({r.bound for r in rows}) > 1
    key, x_of = (
        ((lambda r: r.dim), (lambda r: r.bound)) if vs_bound else ((lambda r: r.bound), (lambda r: r.dim))
    )
    series_by = {}
    for r in rows:
        series_by.setdefault(key(r), []).append(r)
    for val, series in sorted(series_by.items()):
        series.sort(key=x_of)
        label = f"dim={val}" if vs_bound else f"bound={val}"
        ax.plot([x_of(r) for r in series], [r.proportion for r in series], marker="o", label=label)
    ax.set_xlabel("bound" if vs_bound else "dim")
    ax.set_ylabel("proportion of ideal lattices")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def timing_svg(rows, path):
    """Line plot of mean identify seconds; one series per (bound, mode)."""
    import matplotlib

    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    by_key = {}
    for r in rows:
        by_key.setdefault((r["bound"], r["mode"]), []).append(r)
    for (bound, mode), series in sorted(by_key.items()):
        series.sort(key=lambda r: r["dim"])
        ax.plot(
            [r["dim"] for r in series],
            [r["mean_seconds"] for r in series],
            marker="o",
            label=f"bound={bound}, {mode}",
        )
    ax.set_xlabel("dim")
    ax.set_ylabel("mean seconds")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
