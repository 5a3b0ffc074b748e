"""Brute-force verifiers for the closed-form results.

Every decision procedure in this package has an independent check
here.  The oracles work from raw definitions (term values, digit
streams, matrix images) and never call the decision procedure they
validate; they may use the definitional formulas (the multiplier, the
cocycle) as inputs, because those are the objects under test, not the
answers.

Defaults are sized for desk use: windows around 150 numerators and
exponent 4, depth 6 stages, 1000 fuzz trials.  Every report records
the seed that produced it.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .ktheory import (
    GeneratorCochain,
    coboundary,
    cross_section_carry,
    mu_cochain,
    prufer_pair,
    xi_cocycle,
    zeta_cocycle,
)
from .multiplier import bicharacter, psi_phase, theta_phase
from .nadic import NadicInteger, QnRational
from .sequences import Angle, AngleSequence

DEFAULT_SEED = 20260817


class FuzzReport:
    """Outcome of a randomized identity sweep."""

    __slots__ = ("kind", "trials", "seed", "checks", "failures")

    def __init__(self, kind, trials, seed, checks, failures):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "trials", trials)
        object.__setattr__(self, "seed", seed)
        object.__setattr__(self, "checks", checks)
        object.__setattr__(self, "failures", list(failures))

    def __setattr__(self, name, value):
        raise AttributeError("FuzzReport is immutable")

    @property
    def passed(self):
        return not self.failures

    def __repr__(self):
        return "FuzzReport(%s, trials=%d, seed=%d, checks=%d, failures=%d)" % (
            self.kind,
            self.trials,
            self.seed,
            self.checks,
            len(self.failures),
        )

    def to_json(self):
        return {
            "kind": self.kind,
            "trials": self.trials,
            "seed": self.seed,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures[:10],
        }


def sample_qn(rng, scale, max_num, max_exp):
    """A random Q_N element with bounded numerator and exponent."""
    return QnRational(rng.randint(-max_num, max_num), rng.randint(0, max_exp), scale)


def _window_values(alpha, top):
    """Common denominator and integer numerators of alpha_0..alpha_top."""
    denom = 1
    for m in range(top + 1):
        d = alpha.value(m).denominator
        denom = denom * d // gcd(denom, d)
    nums = [int(alpha.value(m) * denom) for m in range(top + 1)]
    return denom, nums


def brute_symmetrizer(alpha, window_num=150, window_exp=4, spot_checks=2000, seed=DEFAULT_SEED):
    """All window points g with Theta_alpha(g, h) == 0 for every window h.

    The window is the product of two copies of
    { p/N**k : |p| <= window_num, k <= window_exp }.  Membership
    against the whole window reduces to one coordinate clearance per
    slot, because Theta is additive in each slot separately (that
    additivity is fuzzed independently; see cocycle_fuzz with kind
    "psi_bichar").  A seeded sample of full pairs is replayed both to
    exercise the reduction and to catch formula drift.

    Returns a frozenset of pairs of QnRationals.
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    N = alpha.modulus
    top = 2 * window_exp
    denom, nums = _window_values(alpha, top)

    def reduced(p, k):
        if p == 0:
            return 0, 0
        while k > 0 and p % N == 0:
            p //= N
            k -= 1
        return p, k

    def coord_clears(p, k):
        # p * alpha_{k+j} integral for every exponent j in the window
        for j in range(window_exp + 1):
            if (p * nums[k + j]) % denom:
                return False
        return True

    cleared = {}
    for k in range(window_exp + 1):
        for p in range(-window_num, window_num + 1):
            key = reduced(p, k)
            if key not in cleared:
                cleared[key] = coord_clears(*key)

    coords = sorted(cleared)
    good = [c for c in coords if cleared[c]]
    members = {(x, y) for x in good for y in good}

    rng = random.Random(seed)
    for _ in range(spot_checks):
        (p1, k1), (p2, k2) = rng.choice(coords), rng.choice(coords)
        (p3, k3), (p4, k4) = rng.choice(coords), rng.choice(coords)
        lhs = (p1 * p4 * nums[k1 + k4] - p2 * p3 * nums[k2 + k3]) % denom
        if ((p1, k1), (p2, k2)) in members and lhs:
            raise AssertionError(
                "member (%r, %r) fails against (%r, %r)"
                % ((p1, k1), (p2, k2), (p3, k3), (p4, k4))
            )

    return frozenset(
        (QnRational(p1, k1, N), QnRational(p2, k2, N)) for (p1, k1), (p2, k2) in members
    )


def colimit_report(alpha, depth=6, num_window=24, int_window=6):
    """Build the stage lattices explicitly and compare with the K0 set.

    Stage k is the lattice Z^2 embedded in Q x Q_N by
    (z, p) -> (z + p J_2k / N**2k, p / N**2k); representatives at
    different stages are identified exactly when their images agree.
    The report checks, with everything exact:

    * inclusion: enumerated stage points satisfy the K0 membership test;
    * coverage: every enumerated K0 window point has a stage preimage
      (constructed, not searched);
    * nesting: stage k images recur at stage k+1 via (z, p) ->
      (z - p r_k, N**2 p);
    * coherence: the mirrored connecting identity
      U_{k+1}(D F_k D v) == U_k(v) on every sampled vector.
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    N = alpha.modulus
    at = alpha.carrier.at
    failures = []
    checks = 0

    def image(k, z, p):
        m = N ** (2 * k)
        return (z + Fraction(p * at(2 * k), m), Fraction(p, m))

    def member(first, second):
        k = 0
        t = second
        while t.denominator != 1:
            t *= N
            k += 1
        return (first - Fraction(int(t) * at(k), N ** k)).denominator == 1

    for k in range(depth):
        # the mirrored connecting identity U_{k+1} (D F_k D) == U_k, exactly
        r_k = N * alpha.digit(2 * k + 1) + alpha.digit(2 * k)
        m0, m1 = N ** (2 * k), N ** (2 * k + 2)
        u_next = ((Fraction(1), Fraction(at(2 * k + 2), m1)), (Fraction(0), Fraction(1, m1)))
        mirrored = ((1, -r_k), (0, N ** 2))
        product = tuple(
            tuple(sum(u_next[i][t] * mirrored[t][j] for t in range(2)) for j in range(2))
            for i in range(2)
        )
        u_here = ((Fraction(1), Fraction(at(2 * k), m0)), (Fraction(0), Fraction(1, m0)))
        checks += 1
        if product != u_here:
            failures.append("mirrored connecting identity fails at stage %d" % k)

    stage_points = set()
    for k in range(depth + 1):
        r_k = N * alpha.digit(2 * k + 1) + alpha.digit(2 * k) if k < depth else None
        for z in range(-int_window, int_window + 1):
            for p in range(-num_window * N, num_window * N + 1):
                pt = image(k, z, p)
                checks += 1
                if not member(*pt):
                    failures.append("stage %d point (%d, %d) misses K0" % (k, z, p))
                stage_points.add(pt)
                if k < depth:
                    # nesting: the same image recurs one stage later
                    if image(k + 1, z - p * r_k, N ** 2 * p) != pt:
                        failures.append("stage %d point (%d, %d) not nested" % (k, z, p))

    covered = 0
    for k in range(2 * depth + 1):
        for p in range(-num_window, num_window + 1):
            x = Fraction(p, N ** k)
            for z in range(-int_window, int_window + 1):
                first = z + Fraction(p * at(k), N ** k)
                checks += 1
                stage = (k + 1) // 2
                pp = p * N ** (2 * stage - k)
                zz = first - Fraction(pp * at(2 * stage), N ** (2 * stage))
                if zz.denominator != 1:
                    failures.append("K0 point (%s, %s) has no stage preimage" % (first, x))
                    continue
                if image(stage, int(zz), pp) != (first, x):
                    failures.append("constructed preimage mismatch at (%s, %s)" % (first, x))
                    continue
                covered += 1

    return {
        "match": not failures,
        "stages": depth + 1,
        "stage_points": len(stage_points),
        "covered": covered,
        "checks": checks,
        "failures": failures[:10],
    }


def colimit_compare(alpha, depth=6, num_window=24, int_window=6):
    """True when the explicit direct limit agrees with the K0 description."""
    return colimit_report(alpha, depth, num_window, int_window)["match"]


def _fuzz_xi(carrier, trials, seed, max_num, max_exp):
    rng = random.Random(seed)
    N = carrier.modulus
    failures = []
    checks = 0
    zero = QnRational(0, 0, N)
    for t in range(trials):
        x = sample_qn(rng, N, max_num, max_exp)
        y = sample_qn(rng, N, max_num, max_exp)
        z = sample_qn(rng, N, max_num, max_exp)
        checks += 4
        if xi_cocycle(carrier, x, y) != xi_cocycle(carrier, y, x):
            failures.append("symmetry fails at trial %d" % t)
        if xi_cocycle(carrier, x + y, z) + xi_cocycle(carrier, x, y) != xi_cocycle(
            carrier, y + z, x
        ) + xi_cocycle(carrier, y, z):
            failures.append("cocycle identity fails at trial %d" % t)
        if xi_cocycle(carrier, x, zero) != 0:
            failures.append("normalisation fails at trial %d" % t)
        # independent route: xi as the coboundary defect of the pairing lift
        def lift(u):
            return Fraction(u.num * carrier.at(u.exp), N ** u.exp)
        if lift(x) + lift(y) - lift(x + y) != xi_cocycle(carrier, x, y):
            failures.append("pairing-lift route disagrees at trial %d" % t)
    return FuzzReport("xi", trials, seed, checks, failures)


def _fuzz_zeta(carrier, trials, seed, max_num, max_exp):
    rng = random.Random(seed)
    N = carrier.modulus
    failures = []
    checks = 0
    for t in range(trials):
        x = sample_qn(rng, N, max_num, max_exp)
        y = sample_qn(rng, N, max_num, max_exp)
        checks += 3
        zc = zeta_cocycle(carrier, x, y)
        if zc not in (0, 1):
            failures.append("zeta out of range at trial %d" % t)
        carry = cross_section_carry(prufer_pair(carrier, x), prufer_pair(carrier, y))
        if zc != carry:
            failures.append("zeta disagrees with its carry form at trial %d" % t)
        neg_mu = lambda u: -mu_cochain(carrier, u)
        if zc + coboundary(neg_mu, x, y) != xi_cocycle(carrier, x, y):
            failures.append("zeta + d(-mu) != xi at trial %d" % t)
    return FuzzReport("zeta", trials, seed, checks, failures)


def _fuzz_psi_bichar(alpha, trials, seed, max_num, max_exp):
    rng = random.Random(seed)
    N = alpha.modulus
    failures = []
    checks = 0
    zero_seq = AngleSequence.zero(N)
    zero_angle = Angle(0)
    for t in range(trials):
        g = (sample_qn(rng, N, max_num, max_exp), sample_qn(rng, N, max_num, max_exp))
        g2 = (sample_qn(rng, N, max_num, max_exp), sample_qn(rng, N, max_num, max_exp))
        h = (sample_qn(rng, N, max_num, max_exp), sample_qn(rng, N, max_num, max_exp))
        gg2 = (g[0] + g2[0], g[1] + g2[1])
        checks += 5
        if theta_phase(alpha, g, h) + theta_phase(alpha, h, g) != zero_angle:
            failures.append("theta not antisymmetric at trial %d" % t)
        if theta_phase(alpha, g, g) != zero_angle:
            failures.append("theta not alternating at trial %d" % t)
        if theta_phase(alpha, gg2, h) != theta_phase(alpha, g, h) + theta_phase(alpha, g2, h):
            failures.append("theta not additive in slot 1 at trial %d" % t)
        hg2 = (h[0] + g2[0], h[1] + g2[1])
        if theta_phase(alpha, g, hg2) != theta_phase(alpha, g, h) + theta_phase(alpha, g, g2):
            failures.append("theta not additive in slot 2 at trial %d" % t)
        if bicharacter(zero_seq, alpha, zero_seq, zero_seq, g, h) != psi_phase(alpha, g, h):
            failures.append("psi disagrees with its bicharacter form at trial %d" % t)
    return FuzzReport("psi_bichar", trials, seed, checks, failures)


def cocycle_fuzz(kind, subject, trials=1000, seed=DEFAULT_SEED, max_num=60, max_exp=6):
    """Randomized sweeps of the algebraic laws.

    kind "xi" and "zeta" take a carrier (NadicInteger); kind
    "psi_bichar" takes an AngleSequence.  Each law is checked exactly;
    the report lists the first few failures, if any.
    """
    if kind == "xi":
        if not isinstance(subject, NadicInteger):
            raise TypeError("kind 'xi' takes a carrier")
        return _fuzz_xi(subject, trials, seed, max_num, max_exp)
    if kind == "zeta":
        if not isinstance(subject, NadicInteger):
            raise TypeError("kind 'zeta' takes a carrier")
        return _fuzz_zeta(subject, trials, seed, max_num, max_exp)
    if kind == "psi_bichar":
        if not isinstance(subject, AngleSequence):
            raise TypeError("kind 'psi_bichar' takes an AngleSequence")
        return _fuzz_psi_bichar(subject, trials, seed, max_num, max_exp)
    raise ValueError("unknown fuzz kind %r" % (kind,))


def coboundary_solve(J, R, depth=8, samples=60, seed=DEFAULT_SEED):
    """Solve xi_J - xi_R = d(psi) on generators from cocycle values alone.

    Works digit by digit: the difference cocycle evaluated at
    (1/N**(k+1), (N-1)/N**(k+1)) recovers the digit gap, the candidate
    psi(1) is the minimal-magnitude representative forced at each
    depth, and a candidate is accepted only if it stabilises over the
    last three depths and the coboundary identity replays on seeded
    samples.  Returns the cochain, or None.

    Independent of :func:`ncsolenoid.ktheory.cohomologous`, which
    decides via exact carrier arithmetic.
    """
    if J.modulus != R.modulus:
        raise ValueError("carriers live at different scales")
    N = J.modulus
    sigma_digits = []
    for i in range(depth):
        x = QnRational(1, i + 1, N)
        y = QnRational(N - 1, i + 1, N)
        sigma_digits.append(xi_cocycle(J, x, y) - xi_cocycle(R, x, y))

    candidates = []
    acc = 0
    w = 1
    for i in range(depth):
        acc += w * sigma_digits[i]
        w *= N
        rep = (-acc) % w
        if rep > w // 2:
            rep -= w
        candidates.append(rep)
    if len(set(candidates[-3:])) != 1:
        return None
    psi1 = candidates[-1]

    table = {0: psi1}
    acc = 0
    w = 1
    for k in range(1, depth + 1):
        acc += w * sigma_digits[k - 1]
        w *= N
        num = psi1 + acc
        if num % w:
            return None
        table[k] = num // w
    psi = GeneratorCochain(N, table)

    rng = random.Random(seed)
    for _ in range(samples):
        x = sample_qn(rng, N, 40, depth - 1)
        y = sample_qn(rng, N, 40, depth - 1)
        want = xi_cocycle(J, x, y) - xi_cocycle(R, x, y)
        if coboundary(psi, x, y) != want:
            return None
    return psi
