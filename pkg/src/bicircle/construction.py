"""The probe-to-image construction, computed two independent ways.

Given a valid scene and a probe point P = (p, q), the chord through C and P
meets k1 again at M, the chord through B and P meets k2 again at N, and the
lines AM and DN meet at the image P'. The synthetic route (construct_image)
performs exactly those kernel steps. The closed-form route (image_closed_form)
evaluates

    p' = (r2^2 - r1^2 + p(r1 + r2 + 2a)) / (r1 + r2 - 2a)
    q' = (r1 + r2 + 2a)(a - r1 + p)(a - r2 - p) / (q(r1 + r2 - 2a))

directly. The central invariant of the package is that the two routes agree
exactly on every admissible input, including the degenerate ones:

* q = 0: the chords run along the axis, M = A and N = D, and line AM / DN
  are taken to be the vertical tangents at A and D; the image is the point
  at infinity in direction (0, 1).
* probe line through B (p = a - r2): the image collapses to A for every q.
  Through C (p = r1 - a): it collapses to D.
* externally tangent circles (r1 + r2 = 2a): AM and DN are parallel for
  every probe and the image is at infinity, perpendicular to the chord
  through B = C.

Everything is a pure function over immutable values. The fuzz harness draws
each trial's randomness from its own deterministically derived stream, so
trials could be evaluated concurrently without changing the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DegenerateProbe, IndeterminateParam, InvalidScenario, WrongOrdering
from .exact import (
    INFINITY,
    ExtendedPoint,
    ExtendedScalar,
    Line,
    Point2,
    as_rational,
    line_through,
    meet,
    second_intersection,
    tangent_at,
)
from .scenario import DerivedScene, Ordering, ScenarioConfig, derive, validate

DEFAULT_SEED = 360
DEFAULT_TRIALS = 1000
DEFAULT_Q_SAMPLES = (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 7))


class CaseFlag(Enum):
    GENERIC = "Generic"
    PROBE_ON_AXIS = "ProbeOnAxis"
    COLLAPSES_TO_A = "CollapsesToA"
    COLLAPSES_TO_D = "CollapsesToD"
    TOUCHING_CIRCLES = "TouchingCircles"
    ON_RADICAL_AXIS = "OnRadicalAxis"


@dataclass(frozen=True)
class ProbePoint:
    """The probe P = (p, q); p doubles as the abscissa of the probe line."""

    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))

    @property
    def point(self) -> Point2:
        return Point2(self.p, self.q)


@dataclass(frozen=True)
class ImageResult:
    """Everything the synthetic construction produces for one probe."""

    M: Point2
    N: Point2
    line_am: Line
    line_dn: Line
    p_prime: ExtendedPoint
    flags: frozenset


def _classify(scene: DerivedScene, probe: ProbePoint) -> frozenset:
    flags = set()
    if probe.q == 0:
        flags.add(CaseFlag.PROBE_ON_AXIS)
    if probe.p == scene.B.x:
        flags.add(CaseFlag.COLLAPSES_TO_A)
    if probe.p == scene.C.x:
        flags.add(CaseFlag.COLLAPSES_TO_D)
    if scene.B == scene.C:
        flags.add(CaseFlag.TOUCHING_CIRCLES)
    if probe.p == scene.radical_axis_x:
        flags.add(CaseFlag.ON_RADICAL_AXIS)
    if not flags:
        flags.add(CaseFlag.GENERIC)
    return frozenset(flags)


def classify_case(cfg: ScenarioConfig, probe: ProbePoint) -> frozenset:
    """Degeneracy flags for the probe; several can hold at once."""
    return _classify(derive(cfg), probe)


def construct_m(scene: DerivedScene, probe: ProbePoint) -> Point2:
    """Second intersection of chord CP with k1 (M = C itself if CP is tangent)."""
    point = probe.point
    if point == scene.C:
        raise DegenerateProbe("probe coincides with C; chord CP is undefined")
    return second_intersection(scene.k1, scene.C, point)


def construct_n(scene: DerivedScene, probe: ProbePoint) -> Point2:
    """Second intersection of chord BP with k2 (N = B itself if BP is tangent)."""
    point = probe.point
    if point == scene.B:
        raise DegenerateProbe("probe coincides with B; chord BP is undefined")
    return second_intersection(scene.k2, scene.B, point)


def construct_image(scene: DerivedScene, probe: ProbePoint) -> ImageResult:
    """Synthetic route: M, N, lines AM and DN, and their intersection P'.

    When a chord degenerates (M = A or N = D, which happens exactly for
    probes on the axis) the corresponding line is replaced by the tangent at
    A or D, the limiting position of the moving chord line. This route uses
    only kernel constructions and never the closed-form expressions, so it
    serves as the independent oracle for image_closed_form.
    """
    point = probe.point
    if point == scene.B or point == scene.C:
        raise DegenerateProbe(f"probe {point} coincides with a chord base point")
    m = construct_m(scene, probe)
    n = construct_n(scene, probe)
    line_am = tangent_at(scene.k1, scene.A) if m == scene.A else line_through(scene.A, m)
    line_dn = tangent_at(scene.k2, scene.D) if n == scene.D else line_through(scene.D, n)
    if line_am == line_dn:
        # Only reachable for tangent circles with the probe on the vertical
        # through B = C: both chords are tangent there and AM, DN collapse
        # onto the axis. The image escapes along that common direction.
        p_prime = ExtendedPoint.at_infinity(*line_am.direction)
    else:
        p_prime = meet(line_am, line_dn)
    return ImageResult(m, n, line_am, line_dn, p_prime, _classify(scene, probe))


def image_closed_form(cfg: ScenarioConfig, probe: ProbePoint) -> ExtendedPoint:
    """Closed-form route: evaluate (p', q') directly from (a, r1, r2, p, q)."""
    validate(cfg)
    a, r1, r2 = cfg.a, cfg.r1, cfg.r2
    p, q = probe.p, probe.q
    if q == 0 and (p == a - r2 or p == r1 - a):
        raise DegenerateProbe(f"probe {probe.point} coincides with a chord base point")
    if r1 + r2 == 2 * a and q != 0:
        # Tangent circles: AM and DN stay perpendicular to the chord through
        # B = C, so the image recedes along that normal direction.
        return ExtendedPoint.at_infinity(q, (a - r2) - p)
    if q == 0 or r1 + r2 == 2 * a:
        return ExtendedPoint.at_infinity(0, 1)
    den = r1 + r2 - 2 * a
    p_im = (r2 * r2 - r1 * r1 + p * (r1 + r2 + 2 * a)) / den
    q_im = ((r1 + r2 + 2 * a) * (a - r1 + p) * (a - r2 - p)) / (q * den)
    return ExtendedPoint.finite(Point2(p_im, q_im))


def locus_x(cfg: ScenarioConfig, p) -> ExtendedScalar:
    """Abscissa of the image line; INFINITY exactly for tangent circles.

    Depends on (a, r1, r2, p) only, never on q: that is the fixed-line
    theorem this package verifies.
    """
    validate(cfg)
    a, r1, r2 = cfg.a, cfg.r1, cfg.r2
    p = as_rational(p)
    if r1 + r2 == 2 * a:
        return INFINITY
    return (r2 * r2 - r1 * r1 + p * (r1 + r2 + 2 * a)) / (r1 + r2 - 2 * a)


def tangent_half_params(cfg: ScenarioConfig, probe: ProbePoint) -> tuple[ExtendedScalar, ExtendedScalar]:
    """Circle parameters (u, v) with param_point(k1, u) = M and param_point(k2, v) = N.

    u = (r1 - a - p)/q and v = q/(r2 - a + p), with the conventions that a
    nonzero numerator over zero is INFINITY and 0/0 (probe on C or B) is an
    error.
    """
    validate(cfg)
    a, r1, r2 = cfg.a, cfg.r1, cfg.r2
    p, q = probe.p, probe.q
    u_num = r1 - a - p
    if q == 0:
        if u_num == 0:
            raise IndeterminateParam("probe coincides with C: u = 0/0")
        u: ExtendedScalar = INFINITY
    else:
        u = u_num / q
    v_den = r2 - a + p
    if v_den == 0:
        if q == 0:
            raise IndeterminateParam("probe coincides with B: v = 0/0")
        v: ExtendedScalar = INFINITY
    else:
        v = q / v_den
    return u, v


def verify_concurrency(cfg: ScenarioConfig, q_samples) -> bool:
    """Check that AM, DN and the radical axis concur, for probes on the radical axis.

    Requires properly intersecting circles (the configuration in which the
    radical axis is the common-chord line). For each nonzero q sample the
    probe (radical_axis_x, q) is pushed through the synthetic construction
    and the image must land exactly back on the radical axis.
    """
    if validate(cfg) is not Ordering.INTERSECTING_ABCD:
        raise WrongOrdering("concurrency check needs properly intersecting circles")
    scene = derive(cfg)
    p = scene.radical_axis_x
    for q in q_samples:
        q = as_rational(q)
        if q == 0:
            raise ValueError("q samples must be nonzero")
        result = construct_image(scene, ProbePoint(p, q))
        if not (result.p_prime.is_finite and result.p_prime.point.x == p):
            return False
    return True


# --- seeded pseudorandom trials -------------------------------------------

def random_rational(rng: random.Random, low: int = -50, high: int = 50,
                    max_denominator: int = 20) -> Fraction:
    """Fraction with numerator in [low, high] and denominator in [1, max_denominator]."""
    return Fraction(rng.randint(low, high), rng.randint(1, max_denominator))


def random_scenario(rng: random.Random) -> ScenarioConfig:
    """Rejection-sample (a, r1, r2) until the configuration is admissible."""
    while True:
        cfg = ScenarioConfig(
            random_rational(rng), random_rational(rng), random_rational(rng)
        )
        try:
            validate(cfg)
        except InvalidScenario:
            continue
        return cfg


def random_probe(rng: random.Random, scene: DerivedScene) -> ProbePoint:
    """Random probe that does not sit on a chord base point (B or C)."""
    while True:
        probe = ProbePoint(random_rational(rng), random_rational(rng))
        if probe.point != scene.B and probe.point != scene.C:
            return probe


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent deterministic stream for one trial (seed plus trial index)."""
    return random.Random(seed * 1_000_003 + index)


@dataclass(frozen=True)
class FuzzFailure:
    trial: int
    config: ScenarioConfig
    probe: ProbePoint
    geometric: ExtendedPoint
    closed_form: ExtendedPoint


@dataclass(frozen=True)
class FuzzReport:
    trials: int
    seed: int
    failures: tuple


def run_oracle_fuzz(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED) -> FuzzReport:
    """Compare the synthetic and closed-form routes on random admissible inputs."""
    failures = []
    for index in range(trials):
        rng = trial_rng(seed, index)
        cfg = random_scenario(rng)
        scene = derive(cfg)
        probe = random_probe(rng, scene)
        geometric = construct_image(scene, probe).p_prime
        closed = image_closed_form(cfg, probe)
        if geometric != closed:
            failures.append(FuzzFailure(index, cfg, probe, geometric, closed))
    return FuzzReport(trials=trials, seed=seed, failures=tuple(failures))
