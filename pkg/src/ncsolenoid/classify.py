"""Isomorphism classification of twisted solenoid algebras.

Two twisted algebras, given by angle sequences alpha over N and beta
over M, can only be isomorphic when N and M have the same prime
support.  Writing R = gcd(N, M), mu = N/R, nu = M/R, both sequences are
first rescaled to the common scale R:

    rescale(alpha, R)_n = frac(mu**n * alpha_n),

which keeps the head and reinterprets the exact carrier value at scale
R verbatim.  After rescaling, the known sufficient condition for
isomorphism is that one side equals the other transformed by a shift,
an optional block shift, and an optional global sign:

* ``shift(q)`` drops the first q terms;
* ``block_shift(d)``, for a proper divisor d of R, interleaves the
  division by R so that the sequence is read d slots into each block:
  delta_n = (beta_n + (m_n mod d)) / d with m_n the n-th digit.  Spread
  over the prime ladder of R, a block of single-prime divisions can be
  entered at any intermediate point; which primes come first only
  enters through their product d, so enumerating proper divisors
  enumerates all interleavings.

The search tries both directions and both signs.  A hit is returned as
a replayable witness.  Exact invariants preserved by every move (and
by rescaling) give sound No verdicts:

* the reduced denominator of the carrier value;
* the prime-to-R part of the denominator of the head;
* periodicity, and with it simplicity of the algebra.

For a periodic sequence the shift moves cycle with the period, so the
search space is finite and exhausting it upgrades the result from
Unknown to No.  Aperiodic searches that exhaust the bound stay Unknown.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .nadic import (
    NadicInteger,
    QnRational,
    check_scale,
    distinct_primes,
    format_fraction,
    is_prime,
    multiplicative_order,
)
from .sequences import Angle, AngleSequence


class IsoVerdict:
    """Yes-with-witness / No-with-reason / Unknown-at-bound."""

    __slots__ = ("kind", "witness", "reason", "bound")

    def __init__(self, kind, witness=None, reason=None, bound=None):
        if kind not in ("yes", "no", "unknown"):
            raise ValueError("bad verdict kind %r" % (kind,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "reason", reason)
        object.__setattr__(self, "bound", bound)

    def __setattr__(self, name, value):
        raise AttributeError("IsoVerdict is immutable")

    @classmethod
    def yes(cls, witness):
        return cls("yes", witness=witness)

    @classmethod
    def no(cls, reason):
        return cls("no", reason=reason)

    @classmethod
    def unknown(cls, bound):
        return cls("unknown", bound=bound)

    @property
    def is_yes(self):
        return self.kind == "yes"

    @property
    def is_no(self):
        return self.kind == "no"

    @property
    def is_unknown(self):
        return self.kind == "unknown"

    def __repr__(self):
        if self.is_yes:
            return "IsoVerdict(yes, witness=%r)" % (self.witness,)
        if self.is_no:
            return "IsoVerdict(no, %s)" % self.reason
        return "IsoVerdict(unknown, bound=%r)" % (self.bound,)

    def to_json(self):
        if self.is_yes:
            return {"verdict": "Yes", "witness": self.witness}
        if self.is_no:
            return {"verdict": "No", "reason": self.reason}
        return {"verdict": "Unknown", "bound": self.bound}


def same_prime_support(n, m):
    """Whether two scales are built from the same set of primes."""
    return distinct_primes(check_scale(n)) == distinct_primes(check_scale(m))


def rescale(alpha, target):
    """Rewrite alpha over a divisor scale: n -> frac((N/R)**n * alpha_n).

    The head is unchanged and an exact carrier value carries over
    verbatim (only its residues are now read mod R**n).

    >>> a = AngleSequence.constant(4, Fraction(1, 3))
    >>> [rescale(a, 2).value(n) for n in range(4)]
    [Fraction(1, 3), Fraction(2, 3), Fraction(1, 3), Fraction(2, 3)]
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    target = check_scale(target)
    if alpha.modulus % target:
        raise ValueError("%d does not divide the scale %d" % (target, alpha.modulus))
    if target == alpha.modulus:
        return alpha
    if alpha.carrier.is_exact:
        carrier = NadicInteger.from_value(alpha.carrier.value, target)
    else:
        depth = alpha.carrier.length
        reps = [alpha.carrier.at(k) % target ** k for k in range(depth + 1)]
        digits = [(reps[k + 1] - reps[k]) // target ** k for k in range(depth)]
        carrier = NadicInteger.from_prefix(digits, target)
    return AngleSequence(target, alpha.base, carrier)


def block_shift(alpha, block):
    """Enter each division block d slots in: n -> (alpha_n + (m_n mod d))/d.

    Requires a proper divisor d of the scale (d == 1 is the identity).
    Exact carriers only; the carrier value becomes (w - c0)/d with
    c0 = (first digit) mod d.
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    d = block
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValueError("block must be a positive integer")
    if alpha.modulus % d or d == alpha.modulus:
        raise ValueError("block must be a proper divisor of the scale %d" % alpha.modulus)
    if d == 1:
        return alpha
    if not alpha.carrier.is_exact:
        raise ValueError("block shifts need an exact carrier")
    c0 = alpha.digit(0) % d
    head = (alpha.base + c0) / d
    value = (alpha.carrier.value - c0) / d
    return AngleSequence(alpha.modulus, head, NadicInteger.from_value(value, alpha.modulus))


def _coprime_part(n, scale):
    """Strip every prime of the scale out of n."""
    for p in distinct_primes(scale):
        while n % p == 0:
            n //= p
    return n


def _obstruction(a, b, scale):
    """A reason string if an exact invariant separates a and b, else None."""
    if a.carrier.value.denominator != b.carrier.value.denominator:
        return "carrier denominators differ (%d vs %d)" % (
            a.carrier.value.denominator,
            b.carrier.value.denominator,
        )
    da = _coprime_part(a.base.denominator, scale)
    db = _coprime_part(b.base.denominator, scale)
    if da != db:
        return "prime-to-scale parts of the head denominators differ (%d vs %d)" % (da, db)
    pa, pb = a.period(), b.period()
    if (pa is None) != (pb is None):
        return "exactly one side is periodic"
    if pa is not None and pa != pb:
        return "periods differ (%d vs %d)" % (pa, pb)
    return None


def _proper_divisors(n):
    return [d for d in range(1, n) if n % d == 0]


def isomorphic(alpha, beta, bound=32):
    """Decide *-isomorphism of the twisted algebras where possible.

    Yes verdicts carry a replayable witness (see :func:`replay_witness`);
    No verdicts cite either a prime-support mismatch, a separating
    invariant, or an exhausted periodic search; everything else is
    Unknown at the given shift bound.
    """
    for s in (alpha, beta):
        if not isinstance(s, AngleSequence):
            raise TypeError("expected AngleSequences")
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise ValueError("bound must be a nonnegative integer")
    if not same_prime_support(alpha.modulus, beta.modulus):
        return IsoVerdict.no(
            "prime supports differ (%d vs %d)" % (alpha.modulus, beta.modulus)
        )
    if not (alpha.carrier.is_exact and beta.carrier.is_exact):
        return IsoVerdict.unknown(bound)
    scale = gcd(alpha.modulus, beta.modulus)
    a = rescale(alpha, scale)
    b = rescale(beta, scale)
    reason = _obstruction(a, b, scale)
    if reason is not None:
        return IsoVerdict.no(reason)

    blocks = _proper_divisors(scale)
    pa = a.period()
    exhaustive = pa is not None  # periods agree by now, shifts then cycle
    shift_top = min(bound, pa - 1) if exhaustive else bound
    for label, x, y in (("forward", a, b), ("reverse", b, a)):
        for q in range(shift_top + 1):
            moved = y.shift(q)
            for d in blocks:
                candidate = block_shift(moved, d)
                for sign in (1, -1):
                    image = candidate if sign == 1 else -candidate
                    if x == image:
                        witness = {
                            "R": scale,
                            "mu": alpha.modulus // scale,
                            "nu": beta.modulus // scale,
                            "direction": label,
                            "shift": q,
                            "block": d,
                            "sign": sign,
                            "matched": {
                                "alpha0": format_fraction(image.base),
                                "carrier": format_fraction(image.carrier.value),
                            },
                        }
                        return IsoVerdict.yes(witness)
    if exhaustive and pa - 1 <= bound:
        return IsoVerdict.no(
            "periodic search exhausted (period %d, both directions, all blocks, both signs)"
            % pa
        )
    return IsoVerdict.unknown(bound)


def prime_case_isomorphic(alpha, beta, bound=32):
    """The prime-scale specialisation: shifts and signs only.

    Distinct primes are never isomorphic; equal primes reduce to the
    general search, whose only block is the trivial one.
    """
    for s in (alpha, beta):
        if not isinstance(s, AngleSequence):
            raise TypeError("expected AngleSequences")
    if not (is_prime(alpha.modulus) and is_prime(beta.modulus)):
        raise ValueError("prime scales only; use isomorphic() for composites")
    if alpha.modulus != beta.modulus:
        return IsoVerdict.no(
            "distinct primes %d and %d" % (alpha.modulus, beta.modulus)
        )
    return isomorphic(alpha, beta, bound)


def replay_witness(alpha, beta, verdict, depth=None):
    """Recompute a Yes witness and compare the two sides term by term.

    Returns True when every compared term matches; raises on a verdict
    that is not a Yes.
    """
    if not isinstance(verdict, IsoVerdict) or not verdict.is_yes:
        raise ValueError("only Yes verdicts can be replayed")
    w = verdict.witness
    scale = w["R"]
    a = rescale(alpha, scale)
    b = rescale(beta, scale)
    x, y = (a, b) if w["direction"] == "forward" else (b, a)
    image = block_shift(y.shift(w["shift"]), w["block"])
    if w["sign"] == -1:
        image = -image
    if depth is None:
        pa, pb = a.period(), b.period()
        depth = 3 * (pa + pb) if (pa is not None and pb is not None) else 30
    return all(x.value(n) == image.value(n) for n in range(depth + 1))


def aut_generators(scale, bound):
    """Bounded slice of a generating family for the automorphisms of Q_N.

    Images of 1 of the shape p / N**k with p a divisor of N other than
    N itself, both signs, k up to the bound.  Contains 1.

    >>> [g.fraction for g in aut_generators(2, 1)]
    [Fraction(1, 1), Fraction(-1, 1), Fraction(1, 2), Fraction(-1, 2)]
    """
    scale = check_scale(scale)
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 0:
        raise ValueError("bound must be a nonnegative integer")
    divisors = [p for p in range(1, scale) if scale % p == 0]
    out = []
    for k in range(bound + 1):
        for p in divisors:
            out.append(QnRational(p, k, scale))
            out.append(QnRational(-p, k, scale))
    return out


class AngleMatrix:
    """A square matrix of optional unit phases (None stands for 0).

    Closed under products as long as every entry of the product is a
    sum of at most one phase, which holds for the monomial matrices
    used here; multiplying entries means adding angles.

    >>> v = AngleMatrix.cyclic(3)
    >>> v ** 3 == AngleMatrix.identity(3)
    True
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for e in r:
                if e is not None and not isinstance(e, Angle):
                    raise ValueError("entries are Angles or None")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("AngleMatrix is immutable")

    @property
    def size(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n):
        zero = Angle(0)
        return cls(
            [[zero if i == j else None for j in range(n)] for i in range(n)]
        )

    @classmethod
    def diagonal(cls, angles):
        angles = list(angles)
        n = len(angles)
        return cls(
            [[angles[i] if i == j else None for j in range(n)] for i in range(n)]
        )

    @classmethod
    def cyclic(cls, n):
        """The permutation sending basis vector e_{i+1} to e_i (e_0 wraps)."""
        zero = Angle(0)
        return cls(
            [[zero if j == (i + 1) % n else None for j in range(n)] for i in range(n)]
        )

    def __matmul__(self, other):
        if not isinstance(other, AngleMatrix) or other.size != self.size:
            return NotImplemented
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                terms = [
                    self.rows[i][t] + other.rows[t][j]
                    for t in range(n)
                    if self.rows[i][t] is not None and other.rows[t][j] is not None
                ]
                if len(terms) > 1:
                    raise ValueError("product entry is not a single phase")
                row.append(terms[0] if terms else None)
            out.append(row)
        return AngleMatrix(out)

    def __pow__(self, m):
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            return NotImplemented
        out = AngleMatrix.identity(self.size)
        for _ in range(m):
            out = out @ self
        return out

    def scaled(self, angle):
        """Multiply every nonzero entry by a global phase."""
        if not isinstance(angle, Angle):
            raise ValueError("expected an Angle")
        return AngleMatrix(
            [
                [None if e is None else e + angle for e in row]
                for row in self.rows
            ]
        )

    def __eq__(self, other):
        if not isinstance(other, AngleMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "AngleMatrix(%r)" % (self.rows,)

    def to_json(self):
        return [
            [None if e is None else e.to_json() for e in row] for row in self.rows
        ]


class BundleData:
    """Flat-bundle presentation data for a periodic sequence.

    Fields: the order q of the fibre phase, the solenoid power k, the
    phase lam = e(p/q), the diagonal and cyclic unitaries u and v with
    v u = lam u v and u**q = v**q = 1, and a label for the base space.
    """

    __slots__ = ("modulus", "q", "p", "k", "lam", "u", "v", "base_label")

    def __init__(self, modulus, q, p, k, lam, u, v, base_label):
        for name, value in (
            ("modulus", modulus),
            ("q", q),
            ("p", p),
            ("k", k),
            ("lam", lam),
            ("u", u),
            ("v", v),
            ("base_label", base_label),
        ):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("BundleData is immutable")

    def __repr__(self):
        return "BundleData(q=%d, k=%d, lam=%r)" % (self.q, self.k, self.lam)

    def to_json(self):
        return {
            "q": self.q,
            "p": self.p,
            "k": self.k,
            "lambda": self.lam.to_json(),
            "base": self.base_label,
            "u": self.u.to_json(),
            "v": self.v.to_json(),
        }


def bundle_data(alpha):
    """The bundle presentation attached to a periodic angle sequence.

    Writing alpha_0 = p/q in lowest terms, the fibre is a q x q phase
    pair (u, v) with v u = e(p/q) u v, and the base is the square of
    the solenoid at scale N**k, k the multiplicative order of N mod q.
    Raises for aperiodic input.

    >>> from .nadic import NadicInteger
    >>> a = AngleSequence(2, Fraction(1, 3), NadicInteger.from_value(Fraction(-1, 3), 2))
    >>> data = bundle_data(a)
    >>> (data.q, data.k, data.lam)
    (3, 2, Angle(1/3))
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not alpha.is_exact:
        raise ValueError("bundle data needs an exact carrier")
    if alpha.period() is None:
        raise ValueError("bundle data is defined for periodic sequences only")
    p, q = alpha.base.numerator, alpha.base.denominator
    k = multiplicative_order(alpha.modulus, q)
    lam = Angle(alpha.base)
    u = AngleMatrix.diagonal([j * lam for j in range(q)])
    v = AngleMatrix.cyclic(q)
    assert v @ u == (u @ v).scaled(lam)
    assert u ** q == AngleMatrix.identity(q)
    assert v ** q == AngleMatrix.identity(q)
    label = "S_{%d^%d} x S_{%d^%d}" % (alpha.modulus, k, alpha.modulus, k)
    return BundleData(alpha.modulus, q, p, k, lam, u, v, label)


def conjugacy_report(alpha, beta, bound=32):
    """What isomorphism data says about conjugacy of the two actions.

    Conjugate actions have isomorphic twisted algebras, so a No verdict
    rules conjugacy out; anything else is inconclusive.
    """
    verdict = isomorphic(alpha, beta, bound)
    if verdict.is_no:
        return {
            "conjugate": "No",
            "reason": "the twisted algebras are not isomorphic: " + verdict.reason,
        }
    return {
        "conjugate": "Unknown",
        "note": "isomorphism data alone does not decide conjugacy",
        "isomorphism": verdict.to_json(),
    }
