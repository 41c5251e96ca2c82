"""Divergence-id resolution: bare ids, prefixed families, parameter plumbing."""

import numpy as np
import pytest

from chorddiv import (
    ParameterError,
    UnknownDivergenceError,
    bregman,
    bregman_chord,
    ChordParams,
    SkewPair,
    biskew,
    known_divergences,
    make_builtin,
    resolve_divergence,
)

QUAD = make_builtin("quadratic", 2)
T1 = np.array([0.0, 0.0])
T2 = np.array([1.0, 0.5])


class TestBareIds:
    def test_bregman(self):
        D = resolve_divergence("bregman", generator=QUAD)
        assert D(T1, T2) == pytest.approx(bregman(QUAD, T1, T2), abs=1e-15)

    def test_bregman_dual(self):
        D = resolve_divergence("bregman_dual", generator=QUAD)
        assert D(T1, T2) == pytest.approx(bregman(QUAD, T2, T1), abs=1e-15)

    def test_bregman_chord(self):
        D = resolve_divergence(
            "bregman_chord", generator=QUAD,
            params={"alpha": 0.25, "beta": 0.75})
        expected = bregman_chord(QUAD, T1, T2, ChordParams(0.25, 0.75))
        assert D(T1, T2) == pytest.approx(expected, abs=1e-15)

    def test_bregman_tangent(self):
        D = resolve_divergence(
            "bregman_tangent", generator=QUAD, params={"alpha": 0.5})
        assert D(T1, T2) > 0.0

    def test_bregman_chord_approx(self):
        D = resolve_divergence(
            "bregman_chord_approx", generator=QUAD,
            params={"epsilon": 1e-4})
        assert D(T1, T2) == pytest.approx(
            bregman(QUAD, T1, T2), rel=1e-3)

    def test_jensen_family(self):
        for div_id, params in (
            ("jensen", {}),
            ("jensen_skewed", {"alpha": 0.3}),
            ("jensen_bregman", {"alpha": 0.3}),
            ("jensen_chord", {"alpha": 0.2, "beta": 0.8, "gamma": 0.5}),
        ):
            D = resolve_divergence(div_id, generator=QUAD, params=params)
            assert D(T1, T2) >= 0.0

    def test_kl_and_ekl_are_generator_free(self):
        p = np.array([0.5, 0.5])
        q = np.array([0.25, 0.75])
        D = resolve_divergence("kl")
        assert D(p, q) == pytest.approx(0.14384103622589045, abs=1e-12)
        E = resolve_divergence("ekl")
        assert E(np.array([2.0, 1.0]), np.array([2.0, 1.0])) == 0.0


class TestPrefixedIds:
    def test_fdiv(self):
        D = resolve_divergence("fdiv:kl")
        p = np.array([0.5, 0.5])
        q = np.array([0.25, 0.75])
        assert D(p, q) == pytest.approx(0.14384103622589045, abs=1e-12)

    def test_fdiv_dual_swaps(self):
        D = resolve_divergence("fdiv:kl")
        Dd = resolve_divergence("fdiv_dual:kl")
        p = np.array([0.4, 1.1])
        q = np.array([0.9, 0.3])
        assert Dd(p, q) == pytest.approx(D(q, p), abs=1e-12)

    def test_fdiv_jsym_symmetric(self):
        D = resolve_divergence("fdiv_jsym:kl")
        p = np.array([0.4, 1.1])
        q = np.array([0.9, 0.3])
        assert D(p, q) == pytest.approx(D(q, p), abs=1e-12)

    def test_fdiv_jssym(self):
        D = resolve_divergence("fdiv_jssym:kl")
        p = np.array([0.9, 0.1])
        q = np.array([0.1, 0.9])
        assert D(p, q) == pytest.approx(0.36806420716849697, abs=1e-12)

    def test_fdiv_unknown_generator(self):
        for div_id in ("fdiv:hellinger", "fdiv_dual:nope",
                       "fdiv_jsym:", "fdiv_jssym:xx"):
            with pytest.raises(UnknownDivergenceError):
                resolve_divergence(div_id)

    def test_biskew_bregman(self):
        sp = SkewPair(0.25, 0.75)
        D = resolve_divergence(
            "biskew:bregman", generator=QUAD,
            params={"gamma": 0.25, "delta": 0.75})
        expected = biskew(
            lambda a, b: bregman(QUAD, a, b), T1, T2, sp)
        assert D(T1, T2) == pytest.approx(expected, abs=1e-15)

    def test_biskew_consumes_inner_params(self):
        D = resolve_divergence(
            "biskew:bregman_chord", generator=QUAD,
            params={"gamma": 0.25, "delta": 0.75,
                    "alpha": 0.3, "beta": 0.9})
        sp = SkewPair(0.25, 0.75)
        cp = ChordParams(0.3, 0.9)
        expected = biskew(
            lambda a, b: bregman_chord(QUAD, a, b, cp), T1, T2, sp)
        assert D(T1, T2) == pytest.approx(expected, abs=1e-15)

    def test_biskew_of_fdiv(self):
        D = resolve_divergence(
            "biskew:fdiv:kl", params={"gamma": 0.25, "delta": 0.75})
        p = np.array([0.5, 0.5])
        q = np.array([0.25, 0.75])
        assert D(p, q) > 0.0

    def test_biskew_rejects_nesting(self):
        with pytest.raises(ParameterError):
            resolve_divergence(
                "biskew:biskew:bregman", generator=QUAD,
                params={"gamma": 0.25, "delta": 0.75})

    def test_biskew_rejects_jensen_chord(self):
        with pytest.raises(ParameterError):
            resolve_divergence(
                "biskew:jensen_chord", generator=QUAD,
                params={"gamma": 0.25, "delta": 0.75,
                        "alpha": 0.2, "beta": 0.8})

    def test_biskew_requires_skews(self):
        with pytest.raises(ParameterError):
            resolve_divergence("biskew:bregman", generator=QUAD)
        with pytest.raises(ParameterError):
            resolve_divergence(
                "biskew:bregman", generator=QUAD, params={"gamma": 0.25})


class TestErrors:
    def test_unknown_id(self):
        with pytest.raises(UnknownDivergenceError):
            resolve_divergence("wasserstein", generator=QUAD)

    def test_unknown_prefix(self):
        with pytest.raises(UnknownDivergenceError):
            resolve_divergence("gdiv:kl")

    def test_generator_required(self):
        for div_id in ("bregman", "bregman_chord", "jensen",
                       "jensen_chord", "bregman_tangent"):
            with pytest.raises(ParameterError):
                resolve_divergence(
                    div_id,
                    params={"alpha": 0.25, "beta": 0.75, "gamma": 0.5})

    def test_missing_required_params(self):
        with pytest.raises(ParameterError):
            resolve_divergence("bregman_chord", generator=QUAD)
        with pytest.raises(ParameterError):
            resolve_divergence(
                "bregman_chord", generator=QUAD, params={"alpha": 0.25})
        with pytest.raises(ParameterError):
            resolve_divergence("bregman_tangent", generator=QUAD)
        with pytest.raises(ParameterError):
            resolve_divergence("bregman_chord_approx", generator=QUAD)
        with pytest.raises(ParameterError):
            resolve_divergence("jensen_skewed", generator=QUAD)

    def test_invalid_params_rejected_eagerly(self):
        with pytest.raises(ParameterError):
            resolve_divergence(
                "bregman_chord", generator=QUAD,
                params={"alpha": 0.5, "beta": 0.5})
        with pytest.raises(ParameterError):
            resolve_divergence(
                "jensen_skewed", generator=QUAD, params={"alpha": 1.0})

    def test_extra_params_ignored(self):
        D = resolve_divergence(
            "bregman", generator=QUAD, params={"alpha": 0.25})
        assert D(T1, T2) == pytest.approx(bregman(QUAD, T1, T2), abs=1e-15)


class TestKnownDivergences:
    def test_contains_core_ids(self):
        ids = known_divergences()
        for div_id in ("bregman", "bregman_dual", "bregman_chord",
                       "bregman_tangent", "bregman_chord_approx",
                       "jensen", "jensen_skewed", "jensen_bregman",
                       "jensen_chord", "kl", "ekl"):
            assert div_id in ids

    def test_mentions_prefixes(self):
        ids = known_divergences()
        joined = " ".join(ids)
        assert "fdiv:" in joined
        assert "biskew:" in joined
