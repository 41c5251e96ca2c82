"""Resolution of divergence identifiers to callables.

Shared by the CLI, the sweep engine, and clustering. An identifier is either
a bare name (bregman, jensen, kl, ...), an f-divergence form fdiv:<f>,
fdiv_dual:<f>, fdiv_jsym:<f>, fdiv_jssym:<f>, or a biskewed wrapper
biskew:<inner>. Scalar parameters (alpha, beta, gamma, delta, epsilon) are
taken from a params mapping; extra entries are ignored, missing required
ones raise ParameterError.
"""

from __future__ import annotations

from typing import Callable, Mapping, Optional

from .bregman import (
    ChordParams,
    SkewPair,
    biskew,
    bregman,
    bregman_chord,
    bregman_chord_approx,
    bregman_dual,
    bregman_tangent,
)
from .errors import (
    ParameterError,
    UnknownDivergenceError,
    UnsupportedGeneratorError,
)
from .fdiv import (
    dual_generator,
    extended_kl,
    f_div,
    j_symmetrize,
    js_symmetrize_div,
    kl,
    make_f_generator,
)
from .generators import Generator
from .jensen import (
    JensenChordParams,
    jensen,
    jensen_bregman,
    jensen_chord,
    jensen_skewed,
)

#: Identifiers resolvable without a trailing :<name> part.
BARE_DIVERGENCES = (
    "bregman",
    "bregman_dual",
    "bregman_chord",
    "bregman_tangent",
    "bregman_chord_approx",
    "jensen",
    "jensen_skewed",
    "jensen_chord",
    "jensen_bregman",
    "kl",
    "ekl",
)

#: Prefix families taking a trailing :<name> part.
PREFIX_DIVERGENCES = ("fdiv", "fdiv_dual", "fdiv_jsym", "fdiv_jssym", "biskew")


def _param(params: Mapping, key: str, div_id: str) -> float:
    value = params.get(key)
    if value is None:
        raise ParameterError(
            f"divergence {div_id!r} requires parameter {key!r}"
        )
    return float(value)


def _require_generator(generator: Optional[Generator],
                       div_id: str) -> Generator:
    if generator is None:
        raise ParameterError(
            f"divergence {div_id!r} requires a generator"
        )
    return generator


def resolve_divergence(div_id: str, generator: Optional[Generator] = None,
                       params: Optional[Mapping[str, float]] = None
                       ) -> Callable:
    """Resolve an identifier to a two-argument divergence callable.

    Generator-based identifiers close over `generator`; the f-divergence
    family treats the two arguments as positive weight vectors and ignores
    the generator. Parameters are validated eagerly, so invalid anchors or
    skews fail here rather than at the first evaluation.
    """
    params = dict(params or {})

    if div_id.startswith("biskew:"):
        inner_id = div_id[len("biskew:"):]
        if inner_id.startswith("biskew:") or inner_id == "jensen_chord":
            raise ParameterError(
                f"biskew cannot wrap {inner_id!r}: its gamma/delta "
                f"parameters would be consumed twice"
            )
        sp = SkewPair(_param(params, "gamma", div_id),
                      _param(params, "delta", div_id))
        inner = resolve_divergence(inner_id, generator, params)
        return lambda x, y: biskew(inner, x, y, sp)

    head, sep, fname = div_id.partition(":")
    if sep and head in ("fdiv", "fdiv_dual", "fdiv_jsym", "fdiv_jssym"):
        try:
            f = make_f_generator(fname)
        except UnsupportedGeneratorError as exc:
            raise UnknownDivergenceError(
                f"unknown f generator in divergence identifier {div_id!r}"
            ) from exc
        if head == "fdiv":
            return lambda x, y: f_div(f, x, y)
        if head == "fdiv_dual":
            fd = dual_generator(f)
            return lambda x, y: f_div(fd, x, y)
        if head == "fdiv_jsym":
            fj = j_symmetrize(f)
            return lambda x, y: f_div(fj, x, y)
        return lambda x, y: js_symmetrize_div(f, x, y)

    if div_id == "kl":
        return lambda x, y: kl(x, y)
    if div_id == "ekl":
        return lambda x, y: extended_kl(x, y)

    if div_id == "bregman":
        F = _require_generator(generator, div_id)
        return lambda x, y: bregman(F, x, y)
    if div_id == "bregman_dual":
        F = _require_generator(generator, div_id)
        return lambda x, y: bregman_dual(F, x, y)
    if div_id == "bregman_chord":
        F = _require_generator(generator, div_id)
        cp = ChordParams(_param(params, "alpha", div_id),
                         _param(params, "beta", div_id))
        return lambda x, y: bregman_chord(F, x, y, cp)
    if div_id == "bregman_tangent":
        F = _require_generator(generator, div_id)
        a = _param(params, "alpha", div_id)
        if not (0.0 < a <= 1.0):
            raise ParameterError(
                f"tangent anchor must lie in (0, 1], got {a}"
            )
        return lambda x, y: bregman_tangent(F, x, y, a)
    if div_id == "bregman_chord_approx":
        F = _require_generator(generator, div_id)
        eps = _param(params, "epsilon", div_id)
        if not (0.0 < eps < 1.0):
            raise ParameterError(
                f"approximation offset must lie in (0, 1), got {eps}"
            )
        return lambda x, y: bregman_chord_approx(F, x, y, eps)
    if div_id == "jensen":
        F = _require_generator(generator, div_id)
        return lambda x, y: jensen(F, x, y)
    if div_id == "jensen_skewed":
        F = _require_generator(generator, div_id)
        a = _param(params, "alpha", div_id)
        if not (0.0 < a < 1.0):
            raise ParameterError(f"skew must lie in (0, 1), got {a}")
        return lambda x, y: jensen_skewed(F, x, y, a)
    if div_id == "jensen_bregman":
        F = _require_generator(generator, div_id)
        a = _param(params, "alpha", div_id)
        if not (0.0 < a < 1.0):
            raise ParameterError(f"skew must lie in (0, 1), got {a}")
        return lambda x, y: jensen_bregman(F, x, y, a)
    if div_id == "jensen_chord":
        F = _require_generator(generator, div_id)
        jcp = JensenChordParams(_param(params, "alpha", div_id),
                                _param(params, "beta", div_id),
                                _param(params, "gamma", div_id))
        return lambda x, y: jensen_chord(F, x, y, jcp)

    raise UnknownDivergenceError(
        f"unknown divergence identifier {div_id!r}"
    )


def known_divergences() -> tuple:
    """Identifier families for help text."""
    return BARE_DIVERGENCES + tuple(
        p + ":<name>" for p in PREFIX_DIVERGENCES
    )
