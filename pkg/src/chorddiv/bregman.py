"""Ordinary, dual, chord, and tangent Bregman divergences.

The chord divergence replaces the tangent plane at theta2 in the usual
Bregman construction with the chord through two interpolants of the segment
[theta1, theta2] on the generator graph. It needs no gradient, lower-bounds
the ordinary divergence, and recovers it as both anchors slide to 1.

All chord quantities are computed on the line restriction
G(lam) = F((1 - lam) theta1 + lam theta2), so multivariate inputs reduce to
the univariate picture:

    B[alpha, beta](theta1 : theta2)
        = G(0) - G(alpha) + alpha (G(beta) - G(alpha)) / (beta - alpha)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    BracketError,
    DegenerateRestrictionError,
    GradientRequiredError,
    ParameterError,
    ShapeError,
    WitnessNotFoundError,
)
from .generators import Generator, restrict_to_line
from .numerics import bisect_root

#: Pairs closer than this in the max norm count as coincident; every
#: divergence returns exactly 0.0 for them, avoiding 0/0 in slope terms.
DEGENERATE_EPS = 1e-14


def _coincident(t1: np.ndarray, t2: np.ndarray) -> bool:
    return float(np.max(np.abs(t1 - t2))) < DEGENERATE_EPS


@dataclass(frozen=True)
class ChordParams:
    """Chord anchor pair: alpha, beta in (0, 1] with alpha != beta.

    The anchors are unordered; swapping them leaves the chord, and hence the
    divergence, unchanged.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        for label, v in (("alpha", self.alpha), ("beta", self.beta)):
            if not (0.0 < float(v) <= 1.0):
                raise ParameterError(
                    f"chord anchor {label} must lie in (0, 1], got {v}"
                )
        if float(self.alpha) == float(self.beta):
            raise ParameterError(
                f"chord anchors must differ, got alpha = beta = {self.alpha}"
            )

    def swapped(self) -> "ChordParams":
        return ChordParams(self.beta, self.alpha)


@dataclass(frozen=True)
class SkewPair:
    """Interpolation positions used to biskew a divergence; gamma != delta.

    Values in [0, 1] keep both interpolants on the segment and therefore in
    any convex domain containing the endpoints. Values outside [0, 1] are
    permitted structurally; the target divergence's own domain checks reject
    interpolants that actually leave the domain.
    """

    gamma: float
    delta: float

    def __post_init__(self):
        for label, v in (("gamma", self.gamma), ("delta", self.delta)):
            if not np.isfinite(float(v)):
                raise ParameterError(f"skew {label} must be finite, got {v}")
        if float(self.gamma) == float(self.delta):
            raise ParameterError(
                f"skew positions must differ, got gamma = delta = {self.gamma}"
            )


def interpolate(theta1, theta2, lam: float) -> np.ndarray:
    """Affine interpolation (1 - lam) theta1 + lam theta2."""
    t1 = np.atleast_1d(np.asarray(theta1, dtype=float))
    t2 = np.atleast_1d(np.asarray(theta2, dtype=float))
    if t1.shape != t2.shape:
        raise ShapeError(
            f"cannot interpolate points of shapes {t1.shape} and {t2.shape}"
        )
    return (1.0 - float(lam)) * t1 + float(lam) * t2


def bregman(F: Generator, theta1, theta2) -> float:
    """Ordinary Bregman divergence B_F(theta1 : theta2).

    The ordinate gap at theta1 between the generator graph and its tangent
    plane at theta2:

        F(theta1) - F(theta2) - <theta1 - theta2, grad F(theta2)>

    Non-negative for convex F; zero iff the arguments coincide.
    """
    if not F.has_grad:
        raise GradientRequiredError(
            f"bregman requires a gradient; generator {F.name} has none"
        )
    t1 = F.point(theta1)
    t2 = F.point(theta2)
    if _coincident(t1, t2):
        return 0.0
    g2 = F.grad(t2)
    return float(F.fn(t1)) - float(F.fn(t2)) - float(np.dot(t1 - t2, g2))


def bregman_dual(F: Generator, theta1, theta2) -> float:
    """Argument-swapped divergence B_F(theta2 : theta1).

    Equals the conjugate-side divergence B_{F*}(grad F(theta1) : grad F(theta2))
    when the conjugate exists.
    """
    return bregman(F, theta2, theta1)


def bregman_chord(F: Generator, theta1, theta2, cp: ChordParams) -> float:
    """Chord Bregman divergence B[alpha, beta](theta1 : theta2).

    Ordinate gap at theta1 between the generator graph and the chord through
    the alpha and beta interpolants of [theta1, theta2] on the graph.
    Gradient free; sandwiched between 0 and the ordinary Bregman divergence,
    which it recovers as alpha, beta -> 1.
    """
    t1 = F.point(theta1)
    t2 = F.point(theta2)
    if _coincident(t1, t2):
        return 0.0
    G = restrict_to_line(F, t1, t2)
    a, b = float(cp.alpha), float(cp.beta)
    g_a = G(a)
    g_b = G(b)
    return G(0.0) - g_a + a * (g_b - g_a) / (b - a)


def bregman_tangent(F: Generator, theta1, theta2, alpha: float) -> float:
    """Tangent Bregman divergence B[alpha](theta1 : theta2).

    Ordinate gap at theta1 against the tangent plane at the alpha
    interpolant; the beta -> alpha limit of the chord divergence. Recovers
    the ordinary divergence at alpha = 1 and vanishes as alpha -> 0.
    """
    a = float(alpha)
    if not (0.0 < a <= 1.0):
        raise ParameterError(f"tangent anchor must lie in (0, 1], got {alpha}")
    if not F.has_grad:
        raise GradientRequiredError(
            f"bregman_tangent requires a gradient; generator {F.name} has none"
        )
    t1 = F.point(theta1)
    t2 = F.point(theta2)
    if _coincident(t1, t2):
        return 0.0
    m = F.point(interpolate(t1, t2, a))
    g_m = F.grad(m)
    return float(F.fn(t1)) - float(F.fn(m)) - a * float(np.dot(t1 - t2, g_m))


def chord_slope(F: Generator, theta1, theta2, cp: ChordParams) -> float:
    """Slope in lam of the chord through the alpha and beta anchors of the
    line restriction; symmetric under anchor swap.

    Zero for coincident inputs, where the restriction is constant.
    """
    t1 = F.point(theta1)
    t2 = F.point(theta2)
    if _coincident(t1, t2):
        return 0.0
    G = restrict_to_line(F, t1, t2)
    a, b = float(cp.alpha), float(cp.beta)
    return (G(a) - G(b)) / (a - b)


def mean_value_witness(F: Generator, theta1, theta2, cp: ChordParams,
                       tol: float = 1e-12) -> float:
    """Anchor lam* strictly between alpha and beta where the restriction's
    derivative equals the chord slope, located by bisection.

    Exists by the mean value theorem and is unique for a strictly convex
    restriction (the derivative is strictly increasing). Consequently the
    chord value can be reconstructed from the witness:
    G(0) - G(alpha) + alpha G'(lam*) equals bregman_chord.

    Raises WitnessNotFoundError if the derivative fails to bracket the
    slope, which cannot happen in exact arithmetic.
    """
    t1 = F.point(theta1)
    t2 = F.point(theta2)
    if _coincident(t1, t2):
        raise DegenerateRestrictionError(
            "mean-value witness is undefined for coincident points"
        )
    G = restrict_to_line(F, t1, t2)
    if not G.has_deriv:
        raise GradientRequiredError(
            f"mean_value_witness requires a gradient; generator {F.name} "
            f"has none"
        )
    a, b = float(cp.alpha), float(cp.beta)
    slope = (G(a) - G(b)) / (a - b)
    lo, hi = min(a, b), max(a, b)

    def gap(lam: float) -> float:
        return G.deriv(lam) - slope

    try:
        return bisect_root(gap, lo, hi, tol=tol)
    except BracketError as exc:
        raise WitnessNotFoundError(
            f"derivative does not bracket the chord slope on [{lo}, {hi}]: "
            f"{exc}"
        ) from exc


def bregman_chord_approx(F: Generator, theta1, theta2,
                         epsilon: float) -> float:
    """Gradient-free approximation of the ordinary Bregman divergence.

    Evaluates the chord divergence with anchors (1 - epsilon, 1), which is
    within O(epsilon) of B_F(theta1 : theta2) using three evaluations of F
    and no gradient.
    """
    eps = float(epsilon)
    if not (0.0 < eps < 1.0):
        raise ParameterError(
            f"approximation offset must lie in (0, 1), got {epsilon}"
        )
    return bregman_chord(F, theta1, theta2, ChordParams(1.0 - eps, 1.0))


def biskew(D: Callable[[np.ndarray, np.ndarray], float], theta1, theta2,
           sp: SkewPair) -> float:
    """Biskewed divergence D((theta1 theta2)_gamma : (theta1 theta2)_delta).

    Evaluates any divergence between the gamma and delta interpolants of the
    segment. Vanishes exactly when the endpoints coincide, since distinct
    skew positions then pick the same point; separates points because the
    interpolants differ whenever the endpoints do.
    """
    t1 = np.atleast_1d(np.asarray(theta1, dtype=float))
    t2 = np.atleast_1d(np.asarray(theta2, dtype=float))
    if t1.shape != t2.shape:
        raise ShapeError(
            f"cannot biskew points of shapes {t1.shape} and {t2.shape}"
        )
    if _coincident(t1, t2):
        return 0.0
    return float(D(interpolate(t1, t2, sp.gamma),
                   interpolate(t1, t2, sp.delta)))
