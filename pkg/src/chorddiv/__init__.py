"""Divergence engineering around the chord Bregman construction.

Builds Bregman, Jensen, and f-divergence families from strictly convex
generators, including the gradient-free chord and tangent Bregman
divergences, biskewed variants, numeric Legendre conjugates, right-sided
k-means under any of these divergences, and an (alpha, beta) sweep engine.
"""

from .bregman import (
    DEGENERATE_EPS,
    ChordParams,
    SkewPair,
    biskew,
    bregman,
    bregman_chord,
    bregman_chord_approx,
    bregman_dual,
    bregman_tangent,
    chord_slope,
    interpolate,
    mean_value_witness,
)
from .clustering import (
    ClusterConfig,
    ClusterResult,
    adjusted_rand_index,
    kmeans,
    objective,
)
from .errors import (
    BracketError,
    ChorddivError,
    DegenerateRestrictionError,
    DomainError,
    GradientRequiredError,
    InfeasibleError,
    ParameterError,
    ParseError,
    ShapeError,
    UnknownDivergenceError,
    UnsupportedGeneratorError,
    WitnessNotFoundError,
)
from .fdiv import (
    DiscreteDist,
    F_GENERATOR_NAMES,
    FGenerator,
    dual_generator,
    extended_kl,
    f_div,
    j_symmetrize,
    js_generator,
    js_generator_mixture_first,
    js_symmetrize_div,
    kl,
    make_f_generator,
    scalar_f_div,
)
from .generators import (
    BUILTIN_GENERATORS,
    ConjugateResult,
    Domain,
    Generator,
    LineRestriction,
    legendre_conjugate_numeric,
    make_builtin,
    restrict_to_line,
)
from .jensen import (
    JensenChordParams,
    jensen,
    jensen_bregman,
    jensen_chord,
    jensen_scaled_limit_check,
    jensen_skewed,
)
from .numerics import (
    SweepGrid,
    bisect_root,
    central_diff_grad,
    coordinate_minimize,
    golden_minimize,
    sweep,
)
from .registry import known_divergences, resolve_divergence
from .verify import SUITES, SuiteResult, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "DEGENERATE_EPS",
    "ChordParams",
    "SkewPair",
    "biskew",
    "bregman",
    "bregman_chord",
    "bregman_chord_approx",
    "bregman_dual",
    "bregman_tangent",
    "chord_slope",
    "interpolate",
    "mean_value_witness",
    "ClusterConfig",
    "ClusterResult",
    "adjusted_rand_index",
    "kmeans",
    "objective",
    "BracketError",
    "ChorddivError",
    "DegenerateRestrictionError",
    "DomainError",
    "GradientRequiredError",
    "InfeasibleError",
    "ParameterError",
    "ParseError",
    "ShapeError",
    "UnknownDivergenceError",
    "UnsupportedGeneratorError",
    "WitnessNotFoundError",
    "DiscreteDist",
    "F_GENERATOR_NAMES",
    "FGenerator",
    "dual_generator",
    "extended_kl",
    "f_div",
    "j_symmetrize",
    "js_generator",
    "js_generator_mixture_first",
    "js_symmetrize_div",
    "kl",
    "make_f_generator",
    "scalar_f_div",
    "BUILTIN_GENERATORS",
    "ConjugateResult",
    "Domain",
    "Generator",
    "LineRestriction",
    "legendre_conjugate_numeric",
    "make_builtin",
    "restrict_to_line",
    "JensenChordParams",
    "jensen",
    "jensen_bregman",
    "jensen_chord",
    "jensen_scaled_limit_check",
    "jensen_skewed",
    "SweepGrid",
    "bisect_root",
    "central_diff_grad",
    "coordinate_minimize",
    "golden_minimize",
    "sweep",
    "known_divergences",
    "resolve_divergence",
    "SUITES",
    "SuiteResult",
    "run_all",
    "run_suite",
    "__version__",
]
