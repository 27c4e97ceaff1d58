"""Classic continuous test functions (F1-F23) with a machine-readable catalog.

The suite is the standard 23-function set used throughout the
metaheuristics literature: seven unimodal functions (F1-F7), six
scalable multimodal functions (F8-F13) and ten fixed-dimension
multimodal functions (F14-F23).  Each entry records its search box,
its global minimum value and a minimizer, so tests can verify the
implementations directly against the catalog.

Notes on the catalog values
---------------------------
* For functions whose optimum is a closed form (origin / all-ones /
  known per-coordinate root), ``f_min`` is exact.
* For the fixed-dimension functions the catalog stores minimizers and
  minima polished numerically to full double precision (Nelder-Mead +
  BFGS from the classical starting points; see scripts/refine_minima.py).
  Rounded textbook values such as -10.5363 for Shekel-10 agree with
  these to the printed precision.
* F7 (Quartic) adds uniform [0,1) observation noise per evaluation.
  The noise stream is supplied by the caller; without one the function
  is deterministic (noise term zero), which is the variant used by
  exactness tests.
* F2's product term overflows double precision in very high dimension
  near the box corners; it is capped at 1e300 so the objective stays
  finite everywhere inside the box (comparison data in the literature
  caps at the same magnitude).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .objective import BoundedProblem

__all__ = [
    "BenchmarkSpec",
    "CATALOG",
    "catalog_json",
    "known_optimum",
    "make_benchmark",
]

CANONICAL_DIMS = (30, 100, 500, 1000)

_PROD_CAP = 1e300


# ---------------------------------------------------------------------------
# function definitions (each maps a (dim,) float array to a scalar)
# ---------------------------------------------------------------------------

def _sphere(x):
    return float(np.dot(x, x))


def _schwefel_2_22(x):
    a = np.abs(x)
    with np.errstate(over="ignore"):
        prod = float(np.prod(a))
    if not math.isfinite(prod) or prod > _PROD_CAP:
        prod = _PROD_CAP
    return float(np.sum(a)) + prod


def _schwefel_1_2(x):
    c = np.cumsum(x)
    return float(np.dot(c, c))


def _schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def _rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def _step(x):
    f = np.floor(x + 0.5)
    return float(np.dot(f, f))


def _quartic_core(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x ** 4))


def _schwefel(x):
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def _rastrigin(x):
    return float(np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def _ackley(x):
    n = x.size
    s1 = np.dot(x, x) / n
    s2 = np.sum(np.cos(2.0 * np.pi * x)) / n
    return float(-20.0 * np.exp(-0.2 * np.sqrt(s1)) - np.exp(s2) + 20.0 + np.e)


def _griewank(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _u_penalty(x, a, k, m):
    out = np.zeros_like(x)
    hi = x > a
    lo = x < -a
    out[hi] = k * (x[hi] - a) ** m
    out[lo] = k * (-x[lo] - a) ** m
    return out


def _penalized(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    term = (10.0 * np.sin(np.pi * y[0]) ** 2
            + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
            + (y[-1] - 1.0) ** 2)
    return float(np.pi / n * term + np.sum(_u_penalty(x, 10.0, 100.0, 4.0)))


def _penalized2(x):
    term = (np.sin(3.0 * np.pi * x[0]) ** 2
            + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
            + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2))
    return float(0.1 * term + np.sum(_u_penalty(x, 5.0, 100.0, 4.0)))


_FOX_A1 = np.tile([-32.0, -16.0, 0.0, 16.0, 32.0], 5)
_FOX_A2 = np.repeat([-32.0, -16.0, 0.0, 16.0, 32.0], 5)


def _foxholes(x):
    j = np.arange(1.0, 26.0)
    denom = j + (x[0] - _FOX_A1) ** 6 + (x[1] - _FOX_A2) ** 6
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / denom)))


_KOW_A = np.array([0.1957, 0.1947, 0.1735, 0.16, 0.0844, 0.0627,
                   0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
_KOW_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def _kowalik(x):
    num = x[0] * (_KOW_B ** 2 + _KOW_B * x[1])
    den = _KOW_B ** 2 + _KOW_B * x[2] + x[3]
    return float(np.sum((_KOW_A - num / den) ** 2))


def _camel6(x):
    x1, x2 = x[0], x[1]
    return float((4.0 - 2.1 * x1 ** 2 + x1 ** 4 / 3.0) * x1 ** 2
                 + x1 * x2 + (-4.0 + 4.0 * x2 ** 2) * x2 ** 2)


def _branin(x):
    x1, x2 = x[0], x[1]
    return float((x2 - 5.1 * x1 ** 2 / (4.0 * np.pi ** 2) + 5.0 * x1 / np.pi - 6.0) ** 2
                 + 10.0 * (1.0 - 1.0 / (8.0 * np.pi)) * np.cos(x1) + 10.0)


def _goldstein_price(x):
    x1, x2 = x[0], x[1]
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1 ** 2
                                      - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 ** 2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (18.0 - 32.0 * x1 + 12.0 * x1 ** 2
                                             + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 ** 2)
    return float(a * b)


_H_C = np.array([1.0, 1.2, 3.0, 3.2])
_H3_A = np.array([[3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0],
                  [3.0, 10.0, 30.0],
                  [0.1, 10.0, 35.0]])
_H3_P = 1e-4 * np.array([[3689.0, 1170.0, 2673.0],
                         [4699.0, 4387.0, 7470.0],
                         [1091.0, 8732.0, 5547.0],
                         [381.0, 5743.0, 8828.0]])


def _hartman3(x):
    inner = np.sum(_H3_A * (x - _H3_P) ** 2, axis=1)
    return float(-np.sum(_H_C * np.exp(-inner)))


_H6_A = np.array([[10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
                  [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
                  [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
                  [17.0, 8.0, 0.05, 10.0, 0.1, 14.0]])
_H6_P = 1e-4 * np.array([[1312.0, 1696.0, 5569.0, 124.0, 8283.0, 5886.0],
                         [2329.0, 4135.0, 8307.0, 3736.0, 1004.0, 9991.0],
                         [2348.0, 1451.0, 3522.0, 2883.0, 3047.0, 6650.0],
                         [4047.0, 8828.0, 8732.0, 5743.0, 1091.0, 381.0]])


def _hartman6(x):
    inner = np.sum(_H6_A * (x - _H6_P) ** 2, axis=1)
    return float(-np.sum(_H_C * np.exp(-inner)))


_SHEKEL_A = np.array([[4.0, 4.0, 4.0, 4.0],
                      [1.0, 1.0, 1.0, 1.0],
                      [8.0, 8.0, 8.0, 8.0],
                      [6.0, 6.0, 6.0, 6.0],
                      [3.0, 7.0, 3.0, 7.0],
                      [2.0, 9.0, 2.0, 9.0],
                      [5.0, 5.0, 3.0, 3.0],
                      [8.0, 1.0, 8.0, 1.0],
                      [6.0, 2.0, 6.0, 2.0],
                      [7.0, 3.6, 7.0, 3.6]])
_SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def _shekel(m: int) -> Callable[[np.ndarray], float]:
    a = _SHEKEL_A[:m]
    c = _SHEKEL_C[:m]

    def f(x):
        d = a - x
        return float(-np.sum(1.0 / (np.sum(d * d, axis=1) + c)))

    return f


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BenchmarkSpec:
    """Static description of one test function.

    ``x_min`` is one global minimizer (several functions have more by
    symmetry).  For scalable functions it is a per-coordinate value
    broadcast to the requested dimension; for fixed-dimension functions
    it is the full vector.  ``f_min_per_dim`` marks minima that scale
    linearly with the dimension (only F8).
    """

    fid: str
    name: str
    kind: str  # US / UN / MS / MN / FM
    fixed_dim: int | None  # None => scalable (any dim >= 2)
    lower: float
    upper: float
    f_min: float
    f_min_per_dim: bool
    x_min_coord: float | None  # scalable: broadcast coordinate
    x_min_vector: tuple | None  # fixed-dim: full minimizer
    func: Callable[[np.ndarray], float]


def _spec(fid, name, kind, fixed_dim, lo, hi, f_min, func,
          x_coord=None, x_vec=None, per_dim=False):
    return BenchmarkSpec(fid, name, kind, fixed_dim, float(lo), float(hi),
                         float(f_min), per_dim, x_coord,
                         tuple(x_vec) if x_vec is not None else None, func)


CATALOG: dict[str, BenchmarkSpec] = {s.fid: s for s in [
    _spec("F1", "Sphere", "US", None, -100, 100, 0.0, _sphere, x_coord=0.0),
    _spec("F2", "Schwefel 2.22", "UN", None, -10, 10, 0.0, _schwefel_2_22, x_coord=0.0),
    _spec("F3", "Schwefel 1.2", "UN", None, -100, 100, 0.0, _schwefel_1_2, x_coord=0.0),
    _spec("F4", "Schwefel 2.21", "US", None, -100, 100, 0.0, _schwefel_2_21, x_coord=0.0),
    _spec("F5", "Rosenbrock", "UN", None, -30, 30, 0.0, _rosenbrock, x_coord=1.0),
    _spec("F6", "Step", "US", None, -100, 100, 0.0, _step, x_coord=0.0),
    # Quartic's customary box is [-1.28, 1.28]; see module docstring for noise.
    _spec("F7", "Quartic", "US", None, -1.28, 1.28, 0.0, _quartic_core, x_coord=0.0),
    _spec("F8", "Schwefel", "MS", None, -500, 500, -418.9828872724336, _schwefel,
          x_coord=420.9687474737558, per_dim=True),
    _spec("F9", "Rastrigin", "MS", None, -5.12, 5.12, 0.0, _rastrigin, x_coord=0.0),
    _spec("F10", "Ackley", "MN", None, -32, 32, 0.0, _ackley, x_coord=0.0),
    _spec("F11", "Griewank", "MN", None, -600, 600, 0.0, _griewank, x_coord=0.0),
    _spec("F12", "Penalized", "MN", None, -50, 50, 0.0, _penalized, x_coord=-1.0),
    _spec("F13", "Penalized 2", "MN", None, -50, 50, 0.0, _penalized2, x_coord=1.0),
    _spec("F14", "Foxholes", "FM", 2, -65, 65, 0.9980038377944498, _foxholes,
          x_vec=(-31.97833357139726, -31.978336789414364)),
    _spec("F15", "Kowalik", "FM", 4, -5, 5, 3.074859878056051e-04, _kowalik,
          x_vec=(0.19283345304274813, 0.19083624027597035,
                 0.12311729907598003, 0.13576599033984466)),
    _spec("F16", "Six-Hump Camel", "FM", 2, -5, 5, -1.0316284534898774, _camel6,
          x_vec=(0.08984200893527233, -0.712656403019058)),
    _spec("F17", "Branin", "FM", 2, -5, 5, 0.39788735772973816, _branin,
          x_vec=(math.pi, 2.275)),
    _spec("F18", "Goldstein-Price", "FM", 2, -2, 2, 3.0, _goldstein_price,
          x_vec=(0.0, -1.0)),
    # Hartman functions live on the unit cube in every primary source we
    # could check; minima printed elsewhere agree only on that domain.
    _spec("F19", "Hartman 3", "FM", 3, 0, 1, -3.862779787332663, _hartman3,
          x_vec=(0.11458886908541062, 0.5556488928322367, 0.8525469854282611)),
    _spec("F20", "Hartman 6", "FM", 6, 0, 1, -3.3223680114155147, _hartman6,
          x_vec=(0.20168950909365746, 0.15001069354111374, 0.4768739729250998,
                 0.2753324275220782, 0.3116516172395686, 0.6573005345536702)),
    _spec("F21", "Shekel 5", "FM", 4, 0, 10, -10.153199679058229, _shekel(5),
          x_vec=(4.000037152376549, 4.000133278657566,
                 4.000037151057555, 4.000133277090425)),
    _spec("F22", "Shekel 7", "FM", 4, 0, 10, -10.402940566818662, _shekel(7),
          x_vec=(4.000572914277084, 4.000689366040889,
                 3.9994897107938447, 3.9996061600067923)),
    _spec("F23", "Shekel 10", "FM", 4, 0, 10, -10.536409816692045, _shekel(10),
          x_vec=(4.000746530253313, 4.000592936779709,
                 3.9996633957714787, 3.9995097993299975)),
]}


def _resolve_dim(spec: BenchmarkSpec, dim: int | None) -> int:
    if spec.fixed_dim is not None:
        if dim not in (None, spec.fixed_dim):
            raise ValueError(f"{spec.fid} ({spec.name}) is fixed at dim={spec.fixed_dim}")
        return spec.fixed_dim
    if dim is None:
        return 30
    if dim < 2:
        raise ValueError(f"{spec.fid} needs dim >= 2; got {dim}")
    return int(dim)


def make_benchmark(fid: str, dim: int | None = None,
                   noise_rng: np.random.Generator | None = None) -> BoundedProblem:
    """Instantiate catalog entry ``fid`` at dimension ``dim``.

    Parameters
    ----------
    fid : str
        Function id, ``"F1"`` .. ``"F23"``.
    dim : int, optional
        Dimension for the scalable functions (default 30).  Must be
        omitted or match for the fixed-dimension functions.
    noise_rng : numpy Generator, optional
        Noise stream for F7.  When given, every evaluation adds an
        independent uniform [0, 1) draw; when omitted F7 is noise-free.
        Ignored by every other function.

    Returns
    -------
    BoundedProblem
    """
    try:
        spec = CATALOG[fid]
    except KeyError:
        raise KeyError(f"unknown benchmark id {fid!r}; expected F1..F23") from None
    n = _resolve_dim(spec, dim)
    func = spec.func
    if fid == "F7" and noise_rng is not None:
        rng = noise_rng
        base = spec.func

        def func(x, _base=base, _rng=rng):
            return _base(x) + float(_rng.uniform())

    return BoundedProblem(
        name=f"{fid}-{spec.name}-d{n}",
        dim=n,
        lower=np.full(n, spec.lower),
        upper=np.full(n, spec.upper),
        func=func,
    )


def known_optimum(fid: str, dim: int | None = None) -> tuple[float, np.ndarray]:
    """Return ``(f_min, x_min)`` for catalog entry ``fid`` at ``dim``."""
    spec = CATALOG[fid]
    n = _resolve_dim(spec, dim)
    if spec.x_min_vector is not None:
        x = np.array(spec.x_min_vector, dtype=float)
    else:
        x = np.full(n, spec.x_min_coord, dtype=float)
    f = spec.f_min * n if spec.f_min_per_dim else spec.f_min
    return f, x


def catalog_json() -> dict:
    """The full catalog as a JSON-serializable dict (schema-versioned)."""
    entries = []
    for spec in CATALOG.values():
        entries.append({
            "id": spec.fid,
            "name": spec.name,
            "kind": spec.kind,
            "range": [spec.lower, spec.upper],
            "dims": list(CANONICAL_DIMS) if spec.fixed_dim is None else [spec.fixed_dim],
            "scalable": spec.fixed_dim is None,
            "f_min": spec.f_min,
            "f_min_per_dim": spec.f_min_per_dim,
        })
    return {"schema": "snailopt.benchmark_catalog/1", "functions": entries}


if __name__ == "__main__":
    # every catalog minimizer must reproduce its catalog minimum
    for fid in CATALOG:
        prob = make_benchmark(fid)
        f_min, x_min = known_optimum(fid)
        got = prob.func(x_min)
        tol = 1e-8 if f_min == 0.0 else 1e-4
        assert abs(got - f_min) <= tol, (fid, got, f_min)
    assert make_benchmark("F1", 500).dim == 500
    print(json.dumps(catalog_json(), indent=2)[:400], "...")
    print("benchmark self-checks passed")
