"""f-divergences on positive discrete weight vectors.

A scalar generator f, convex on (0, inf) with f(1) = 0, induces
I_f[p : q] = sum_i p_i f(q_i / p_i). Three generator transforms are exposed:

    dual          f(u) -> u f(1/u)          swaps the arguments
    j_symmetrize  (f + dual f) / 2          Jeffreys-style half sum
    js form       half-sum of divergences to the midpoint mixture

The JS-type symmetrization is defined at the divergence level; matching
generator-level forms exist for both argument orders and are kept mostly for
cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .errors import DomainError, ParameterError, ShapeError, \
    UnsupportedGeneratorError

#: Stable identifiers accepted by make_f_generator.
F_GENERATOR_NAMES = ("kl", "tv", "chi2")


@dataclass(frozen=True, eq=False)
class FGenerator:
    """Convex scalar generator on (0, inf) with f(1) = 0.

    fn must be vectorized over positive float arrays (plain numpy
    expressions are). __call__ evaluates at a single positive ratio.
    """

    name: str
    fn: Callable

    def __post_init__(self):
        probe = float(self.fn(1.0))
        if abs(probe) > 1e-12:
            raise ParameterError(
                f"f generator {self.name!r} must vanish at 1, got f(1)={probe}"
            )

    def __call__(self, u: float) -> float:
        u = float(u)
        if not (np.isfinite(u) and u > 0.0):
            raise DomainError(
                f"f generator {self.name!r} is defined on (0, inf), got {u}"
            )
        return float(self.fn(u))


def make_f_generator(name: str) -> FGenerator:
    """Construct a built-in scalar generator by its stable identifier.

    kl     -log u        (induces KL[p : q])
    tv     |u - 1| / 2   (induces total variation)
    chi2   (u - 1)^2     (induces Neyman chi-square)
    """
    if name == "kl":
        return FGenerator("kl", lambda u: -np.log(u))
    if name == "tv":
        return FGenerator("tv", lambda u: 0.5 * np.abs(u - 1.0))
    if name == "chi2":
        return FGenerator("chi2", lambda u: (u - 1.0) ** 2)
    raise UnsupportedGeneratorError(
        f"unknown f generator {name!r}; known generators: "
        f"{', '.join(F_GENERATOR_NAMES)}"
    )


@dataclass(frozen=True, eq=False)
class DiscreteDist:
    """Finite vector of strictly positive weights.

    Set normalized=True for points of the probability simplex; the total is
    then required to be within 1e-12 of one.
    """

    weights: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if w.ndim != 1:
            raise ShapeError(
                f"weights must be a 1-D vector, got shape {w.shape}"
            )
        if not (np.all(np.isfinite(w)) and np.all(w > 0.0)):
            raise DomainError("weights must be finite and strictly positive")
        if self.normalized and abs(float(np.sum(w)) - 1.0) > 1e-12:
            raise DomainError(
                f"normalized weights must sum to 1 within 1e-12, got "
                f"{float(np.sum(w))}"
            )
        object.__setattr__(self, "weights", w)


Weights = Union[DiscreteDist, np.ndarray, list, tuple]


def _weights(x: Weights, label: str) -> np.ndarray:
    if isinstance(x, DiscreteDist):
        return x.weights
    w = np.atleast_1d(np.asarray(x, dtype=float))
    if w.ndim != 1:
        raise ShapeError(f"{label} must be a 1-D vector, got shape {w.shape}")
    if not (np.all(np.isfinite(w)) and np.all(w > 0.0)):
        raise DomainError(
            f"{label} must have finite, strictly positive entries"
        )
    return w


def scalar_f_div(f: FGenerator, a: float, b: float) -> float:
    """Single-cell contribution a f(b / a) for positive a, b.

    Zero at a = b. Individual cells can be negative for sign-changing
    generators such as kl; non-negativity is a property of the aggregate on
    normalized weights.
    """
    a = float(a)
    b = float(b)
    for label, v in (("a", a), ("b", b)):
        if not (np.isfinite(v) and v > 0.0):
            raise DomainError(
                f"scalar_f_div requires positive finite {label}, got {v}"
            )
    return a * float(f.fn(b / a))


def f_div(f: FGenerator, p: Weights, q: Weights) -> float:
    """Discrete f-divergence I_f[p : q] = sum_i p_i f(q_i / p_i).

    Non-negative and zero iff p = q when both vectors are normalized, by
    Jensen's inequality.
    """
    pw = _weights(p, "p")
    qw = _weights(q, "q")
    if pw.shape != qw.shape:
        raise ShapeError(
            f"p and q must have equal length, got {pw.shape[0]} and "
            f"{qw.shape[0]}"
        )
    return float(np.sum(pw * f.fn(qw / pw)))


def dual_generator(f: FGenerator) -> FGenerator:
    """Dual generator u f(1/u); induces the argument-swapped divergence.

    Involutive: dualizing twice gives back a generator pointwise equal to f.
    """
    return FGenerator(f.name + "_dual", lambda u: u * f.fn(1.0 / u))


def j_symmetrize(f: FGenerator) -> FGenerator:
    """Average of f and its dual; induces (I_f[p:q] + I_f[q:p]) / 2."""
    d = dual_generator(f)
    return FGenerator(f.name + "_jsym", lambda u: 0.5 * (f.fn(u) + d.fn(u)))


def js_symmetrize_div(f: FGenerator, p: Weights, q: Weights) -> float:
    """JS-type symmetrization: half-sum of divergences to the midpoint
    mixture m = (p + q)/2,

        (I_f[p : m] + I_f[q : m]) / 2.

    For f = kl on normalized inputs this is the Jensen-Shannon divergence,
    bounded by log 2.
    """
    pw = _weights(p, "p")
    qw = _weights(q, "q")
    if pw.shape != qw.shape:
        raise ShapeError(
            f"p and q must have equal length, got {pw.shape[0]} and "
            f"{qw.shape[0]}"
        )
    m = 0.5 * (pw + qw)
    return 0.5 * (f_div(f, pw, m) + f_div(f, qw, m))


def js_generator(f: FGenerator) -> FGenerator:
    """Generator whose induced divergence equals js_symmetrize_div:

        (1/2) [ f((1 + u)/2) + u f((1 + u)/(2u)) ]
    """
    return FGenerator(
        f.name + "_jssym",
        lambda u: 0.5 * (f.fn((1.0 + u) / 2.0)
                         + u * f.fn((1.0 + u) / (2.0 * u))),
    )


def js_generator_mixture_first(f: FGenerator) -> FGenerator:
    """Generator for the opposite argument order, half-sum of divergences
    measured *from* the midpoint mixture, (I_f[m:p] + I_f[m:q]) / 2:

        (1 + u)/4 [ f(2u/(1 + u)) + f(2/(1 + u)) ]

    Agrees with js_generator exactly when f equals its own dual.
    """
    return FGenerator(
        f.name + "_jssym_mix",
        lambda u: (1.0 + u) / 4.0 * (f.fn(2.0 * u / (1.0 + u))
                                     + f.fn(2.0 / (1.0 + u))),
    )


_F_KL = make_f_generator("kl")


def kl(p: Weights, q: Weights) -> float:
    """Kullback-Leibler divergence sum_i p_i log(p_i / q_i).

    The f-divergence induced by the kl generator; intended for normalized
    weights, where it is non-negative.
    """
    return f_div(_F_KL, p, q)


def extended_kl(p: Weights, q: Weights) -> float:
    """KL extended to unnormalized positive weights:

        sum_i p_i log(p_i / q_i) + q_i - p_i

    Non-negative on the whole positive orthant and coincides with kl when
    both vectors are normalized. Equals the Bregman divergence of the
    Shannon negentropy generator.
    """
    pw = _weights(p, "p")
    qw = _weights(q, "q")
    if pw.shape != qw.shape:
        raise ShapeError(
            f"p and q must have equal length, got {pw.shape[0]} and "
            f"{qw.shape[0]}"
        )
    return float(np.sum(pw * np.log(pw / qw) + qw - pw))
