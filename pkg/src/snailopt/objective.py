"""Bounded objective functions and evaluation bookkeeping.

Every search problem handled by this package is a box-constrained
minimization problem: a callable objective together with elementwise
lower/upper bounds.  This module defines the problem container, the
evaluation counter used for budget accounting, and the two primitive
operations every optimizer in the package goes through: ``clamp`` and
``evaluate``.

Keeping all evaluations behind :func:`evaluate` guarantees that budget
accounting is exact and that non-finite objective values are caught at
the point of evaluation rather than corrupting a search later on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "BoundedProblem",
    "EvalCounter",
    "NonFiniteObjective",
    "clamp",
    "evaluate",
]


class NonFiniteObjective(RuntimeError):
    """Raised when an objective returns NaN or +/-inf inside its box.

    The offending input vector is kept on the exception (``.x``) so a
    failed run can report exactly where the objective broke its
    contract.
    """

    def __init__(self, name: str, x: np.ndarray, value: float):
        super().__init__(
            f"objective {name!r} returned non-finite value {value!r} "
            f"at x={np.asarray(x).tolist()}"
        )
        self.name = name
        self.x = np.array(x, dtype=float, copy=True)
        self.value = value


@dataclass(frozen=True)
class BoundedProblem:
    """A box-constrained minimization problem.

    Parameters
    ----------
    name : str
        Human-readable identifier (shows up in logs and result files).
    dim : int
        Number of decision variables.
    lower, upper : ndarray, shape (dim,)
        Elementwise bounds; ``lower < upper`` in every coordinate.
    func : callable
        Maps a ``(dim,)`` float array to a scalar objective value.
    """

    name: str
    dim: int
    lower: np.ndarray
    upper: np.ndarray
    func: Callable[[np.ndarray], float]

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float)
        hi = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if lo.shape != (self.dim,) or hi.shape != (self.dim,):
            raise ValueError(
                f"bounds must have shape ({self.dim},); got {lo.shape} and {hi.shape}"
            )
        if not np.all(lo < hi):
            raise ValueError("every lower bound must be strictly below its upper bound")

    @property
    def width(self) -> np.ndarray:
        """Box edge lengths, ``upper - lower``."""
        return self.upper - self.lower


@dataclass
class EvalCounter:
    """Counts objective evaluations; one increment per :func:`evaluate`."""

    count: int = 0

    def tick(self) -> int:
        self.count += 1
        return self.count


def clamp(x: np.ndarray, problem: BoundedProblem) -> np.ndarray:
    """Project ``x`` onto the problem's box, componentwise.

    Returns a new array; the input is never modified.  Idempotent:
    clamping a clamped point is a no-op, and an in-box point is
    returned bitwise unchanged.
    """
    return np.clip(np.asarray(x, dtype=float), problem.lower, problem.upper)


def evaluate(problem: BoundedProblem, x: np.ndarray, counter: EvalCounter) -> float:
    """Evaluate ``problem`` at ``x``, incrementing ``counter`` by one.

    Raises
    ------
    NonFiniteObjective
        If the objective returns NaN or an infinity.  Objectives are
        required to be finite everywhere inside their box; a violation
        here is a bug in the objective, not in the caller.
    """
    value = float(problem.func(np.asarray(x, dtype=float)))
    counter.tick()
    if not np.isfinite(value):
        raise NonFiniteObjective(problem.name, x, value)
    return value


if __name__ == "__main__":
    # quick self-checks
    sphere = BoundedProblem(
        name="sphere-3d",
        dim=3,
        lower=np.full(3, -5.0),
        upper=np.full(3, 5.0),
        func=lambda x: float(np.dot(x, x)),
    )
    c = EvalCounter()
    x_in = np.array([1.0, -2.0, 0.5])
    assert np.array_equal(clamp(x_in, sphere), x_in)
    assert np.array_equal(clamp(sphere.upper + 1.0, sphere), sphere.upper)
    assert np.array_equal(clamp(clamp(x_in, sphere), sphere), clamp(x_in, sphere))
    v = evaluate(sphere, np.zeros(3), c)
    assert v == 0.0 and c.count == 1
    evaluate(sphere, x_in, c)
    assert c.count == 2

    bad = BoundedProblem(
        name="bad",
        dim=1,
        lower=np.array([-1.0]),
        upper=np.array([1.0]),
        func=lambda x: float("nan"),
    )
    try:
        evaluate(bad, np.zeros(1), c)
    except NonFiniteObjective as err:
        assert err.x.shape == (1,)
    else:
        raise AssertionError("non-finite value must raise")
    print("objective self-checks passed")
