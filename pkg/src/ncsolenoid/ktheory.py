"""The ordered K0 data of a twisted solenoid algebra, in exact arithmetic.

Fix a coherent angle sequence alpha over scale N with carrier J.  The
K0 group of the attached algebra is the subgroup of Q x Q_N

    K_alpha = { (z + p * J_k / N**k,  p / N**k) : z, p integers, k >= 0 },

ordered by the first coordinate, and the unique trace sends
(z + p J_k / N**k, p / N**k) to z + p * alpha_k.

The same group has a cocycle presentation on the set Z x Q_N with the
twisted sum

    (z, x) + (z', x') = (z + z' + xi_J(x, x'), x + x'),

where xi_J is an integer-valued symmetric 2-cocycle on Q_N determined
by the carrier.  For x = p1/N**k1 and y = p2/N**k2 in lowest terms,
with S(k, m) = (J_m - J_k) / N**k:

    xi_J(x, y) = -p1 * S(k1, k2)          if k1 < k2,
                 -p2 * S(k2, k1)          if k2 < k1,
                  q  * S(r,  k1)          if k1 == k2,

the last case writing x + y = q / N**r in lowest terms (q = r = 0 when
x + y == 0).  The correspondence between the two presentations is
(z, p/N**k) <-> (z + p J_k / N**k, p/N**k).

Related integer cochains measure how the cocycle interacts with the
pairing x = p/N**k |-> frac(p J_k / N**k) into Q/Z:

* ``prufer_pair``: the pairing itself, as an exact Angle;
* ``mu_cochain``: mu_J(x) = -floor(p J_k / N**k) on lowest terms;
* ``cross_section_carry``: the carry cocycle s(t) + s(t') - s(t + t')
  of the section s: Q/Z -> [0, 1);
* ``zeta_cocycle``: the pullback of the carry cocycle along the
  pairing; it satisfies zeta_J + d(-mu_J) = xi_J with the coboundary
  convention d(c)(x, y) = c(x) + c(y) - c(x + y).

Two carriers J, R give cohomologous cocycles exactly when J - R is the
canonical copy of an ordinary integer m; a witness cochain psi with
xi_J - xi_R = d(psi) then has psi(1) = -m and is linear on each
generator level: psi(p / N**k) = p * (psi(1) + J_k - R_k) / N**k.

Stagewise, K0 is the increasing union of rank-2 lattices.  Stage k maps
into Q x Q_N by the embedding matrix

    U_k = [[1, J_{2k} / N**2k], [0, 1 / N**2k]]

(acting on integer columns (z, p)), and consecutive stages are linked
by the connecting matrix

    F_k = [[1, r_k], [0, N**2]],      r_k = N * j_{2k+1} + j_{2k}.

The lattice images U_k(Z^2) increase with k and their union is exactly
K_alpha.  Note the orientation: with these exact matrices the vector
identity that holds is U_{k+1} * D * F_k * D = U_k with D = diag(1, -1)
(equivalently, the mirrored embeddings U_k * D form a strictly
compatible family with the same lattice images).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import floor

from .nadic import (
    NadicInteger,
    QnRational,
    as_fraction,
    format_fraction,
    frac_part,
    is_prime,
    multiplicative_order,
)
from .sequences import Angle, AngleSequence


def j_seq(alpha):
    """The carrier of an angle sequence (the digit stream as a tower)."""
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    return alpha.carrier


def _check_carrier(J):
    if not isinstance(J, NadicInteger):
        raise TypeError("expected a NadicInteger carrier")
    return J


def _check_point(J, x):
    if not isinstance(x, QnRational):
        raise ValueError("expected a QnRational")
    if x.modulus != J.modulus:
        raise ValueError("scale %d does not match carrier scale %d" % (x.modulus, J.modulus))
    return x


def xi_cocycle(J, x, y):
    """The integer 2-cocycle xi_J(x, y) on Q_N (symmetric, zero on 0).

    >>> J = NadicInteger.iota(1, 2)
    >>> xi_cocycle(J, QnRational(1, 1, 2), QnRational(1, 1, 2))
    1
    >>> xi_cocycle(J, QnRational(1, 1, 2), QnRational(1, 2, 2))
    0
    """
    _check_carrier(J)
    _check_point(J, x)
    _check_point(J, y)
    if x.exp < y.exp:
        return -x.num * J.segment(x.exp, y.exp)
    if y.exp < x.exp:
        return -y.num * J.segment(y.exp, x.exp)
    s = x + y
    return s.num * J.segment(s.exp, x.exp)


def prufer_pair(J, x):
    """The pairing  p/N**k |-> frac(p * J_k / N**k)  into Q/Z."""
    _check_carrier(J)
    _check_point(J, x)
    return Angle(Fraction(x.num * J.at(x.exp), J.modulus ** x.exp))


def mu_cochain(J, x):
    """The integer cochain mu_J(x) = -floor(p * J_k / N**k) on lowest terms.

    >>> J = NadicInteger.iota(1, 2)
    >>> mu_cochain(J, QnRational(3, 1, 2))
    -1
    """
    _check_carrier(J)
    _check_point(J, x)
    return -floor(Fraction(x.num * J.at(x.exp), J.modulus ** x.exp))


def cross_section_carry(t1, t2):
    """Carry cocycle of the section Q/Z -> [0, 1): s(t1)+s(t2)-s(t1+t2).

    Takes Angles (or rationals read mod 1); the result is 0 or 1.
    """
    a1 = t1.value if isinstance(t1, Angle) else frac_part(as_fraction(t1))
    a2 = t2.value if isinstance(t2, Angle) else frac_part(as_fraction(t2))
    out = a1 + a2 - frac_part(a1 + a2)
    assert out.denominator == 1
    return int(out)


def zeta_cocycle(J, x, y):
    """The pullback of the carry cocycle along the pairing (values 0 or 1)."""
    return cross_section_carry(prufer_pair(J, x), prufer_pair(J, y))


def coboundary(c, x, y):
    """d(c)(x, y) = c(x) + c(y) - c(x + y) for an integer cochain c."""
    return c(x) + c(y) - c(x + y)


class GeneratorCochain:
    """An integer cochain on Q_N determined by its values on 1/N**k.

    The table holds psi_k = psi(1/N**k) for k = 0..depth, and the
    cochain extends linearly on each level: psi(p/N**k) = p * psi_k on
    lowest terms.  Evaluation beyond the recorded depth raises.
    """

    __slots__ = ("modulus", "table")

    def __init__(self, modulus, table):
        table = dict(table)
        if 0 not in table:
            raise ValueError("the table must cover the generator 1 (level 0)")
        for k, v in table.items():
            if not isinstance(k, int) or k < 0 or isinstance(v, bool) or not isinstance(v, int):
                raise ValueError("table must map levels to integers")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("GeneratorCochain is immutable")

    @property
    def depth(self):
        return max(self.table)

    def psi1(self):
        return self.table[0]

    def __call__(self, x):
        if not isinstance(x, QnRational) or x.modulus != self.modulus:
            raise ValueError("expected a Q_N element at scale %d" % self.modulus)
        if x.exp not in self.table:
            raise ValueError("level %d exceeds the recorded depth" % x.exp)
        return x.num * self.table[x.exp]

    def __repr__(self):
        return "GeneratorCochain(scale=%d, table=%r)" % (self.modulus, self.table)

    def to_json(self):
        return {"psi": {str(k): str(v) for k, v in sorted(self.table.items())}}

    @classmethod
    def from_difference(cls, J, R, psi1, depth):
        """The linear cochain with psi_k = (psi1 + J_k - R_k) / N**k.

        Raises if some stage fails the integrality requirement.
        """
        _check_carrier(J)
        _check_carrier(R)
        if J.modulus != R.modulus:
            raise ValueError("carriers live at different scales")
        table = {}
        for k in range(depth + 1):
            num = psi1 + J.at(k) - R.at(k)
            den = J.modulus ** k
            if num % den:
                raise ValueError("no integral cochain at level %d" % k)
            table[k] = num // den
        return cls(J.modulus, table)


def cohomologous(J, R, depth=8, samples=100, seed=20260817):
    """A witness cochain with xi_J - xi_R = d(psi), or None.

    The cocycles are cohomologous exactly when J - R is the canonical
    copy of an ordinary integer m; the witness then has psi(1) = -m.
    Before returning, the identity is replayed on ``samples`` seeded
    random pairs within the recorded depth.
    """
    _check_carrier(J)
    _check_carrier(R)
    if J.modulus != R.modulus:
        raise ValueError("carriers live at different scales")
    if not (J.is_exact and R.is_exact):
        raise ValueError("cohomology is undecidable from finite prefixes")
    diff = J.value - R.value
    if diff.denominator != 1:
        return None
    psi = GeneratorCochain.from_difference(J, R, -int(diff), depth)
    rng = random.Random(seed)
    N = J.modulus
    for _ in range(samples):
        x = QnRational(rng.randrange(-50, 51), rng.randrange(0, depth), N)
        y = QnRational(rng.randrange(-50, 51), rng.randrange(0, depth), N)
        want = xi_cocycle(J, x, y) - xi_cocycle(R, x, y)
        if coboundary(psi, x, y) != want:
            raise AssertionError("witness failed replay at (%r, %r)" % (x, y))
    return psi


class WeakEquivalence:
    """Verdict for the scaling relation N**k * J == R modulo integers."""

    __slots__ = ("kind", "exponent", "direction", "bound", "reason")

    def __init__(self, kind, exponent=None, direction=None, bound=None, reason=None):
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "exponent", exponent)
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "reason", reason)

    def __setattr__(self, name, value):
        raise AttributeError("WeakEquivalence is immutable")

    @property
    def is_yes(self):
        return self.kind == "yes"

    @property
    def is_no(self):
        return self.kind == "no"

    def __repr__(self):
        if self.kind == "yes":
            return "WeakEquivalence(yes, k=%d, direction=%s)" % (self.exponent, self.direction)
        if self.kind == "no":
            return "WeakEquivalence(no, %s)" % self.reason
        return "WeakEquivalence(unknown, bound=%d)" % self.bound

    def to_json(self):
        if self.kind == "yes":
            return {"verdict": "Yes", "k": self.exponent, "direction": self.direction}
        if self.kind == "no":
            return {"verdict": "No", "reason": self.reason}
        return {"verdict": "Unknown", "bound": self.bound}


def weakly_equivalent(J, R, bound=64):
    """Decide whether N**k J - R or N**k R - J is an integer for some k.

    Prime scales only.  Since scaling by N permutes residues mod the
    common reduced denominator b with period ord_b(N), scanning one full
    cycle is complete: the verdict is No once the cycle is exhausted,
    and Unknown only when ``bound`` truncates the cycle.
    """
    _check_carrier(J)
    _check_carrier(R)
    if J.modulus != R.modulus:
        raise ValueError("carriers live at different scales")
    if not is_prime(J.modulus):
        raise ValueError("weak equivalence is implemented for prime scales only")
    if not (J.is_exact and R.is_exact):
        raise ValueError("weak equivalence is undecidable from finite prefixes")
    a, b = J.value.numerator, J.value.denominator
    c, d = R.value.numerator, R.value.denominator
    if b != d:
        return WeakEquivalence("no", reason="reduced denominators differ (%d vs %d)" % (b, d))
    N = J.modulus
    cycle = multiplicative_order(N, b)
    for k in range(min(bound, cycle - 1) + 1):
        w = pow(N, k, b) if b > 1 else 0
        if (w * a - c) % b == 0:
            return WeakEquivalence("yes", exponent=k, direction="left")
        if (w * c - a) % b == 0:
            return WeakEquivalence("yes", exponent=k, direction="right")
    if cycle - 1 <= bound:
        return WeakEquivalence("no", reason="full scaling cycle of length %d exhausted" % cycle)
    return WeakEquivalence("unknown", bound=bound)


class ExtensionElement:
    """(z, x) in the cocycle presentation Z x Q_N with the twisted sum.

    >>> a = AngleSequence.constant(3, Fraction(1, 2))
    >>> e = ExtensionElement(a, 0, QnRational(1, 1, 3))
    >>> (e + e + e).z
    1
    """

    __slots__ = ("alpha", "z", "x")

    def __init__(self, alpha, z, x):
        if not isinstance(alpha, AngleSequence):
            raise TypeError("expected an AngleSequence context")
        if isinstance(z, bool) or not isinstance(z, int):
            raise ValueError("z must be an integer")
        if not isinstance(x, QnRational) or x.modulus != alpha.modulus:
            raise ValueError("x must be a Q_N element at the sequence scale")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", x)

    def __setattr__(self, name, value):
        raise AttributeError("ExtensionElement is immutable")

    def _require_same(self, other):
        if not isinstance(other, ExtensionElement):
            raise TypeError("expected an ExtensionElement")
        if other.alpha != self.alpha:
            raise ValueError("elements live over different sequences")

    def __add__(self, other):
        self._require_same(other)
        z = self.z + other.z + xi_cocycle(self.alpha.carrier, self.x, other.x)
        return ExtensionElement(self.alpha, z, self.x + other.x)

    def __neg__(self):
        mx = -self.x
        return ExtensionElement(
            self.alpha, -self.z - xi_cocycle(self.alpha.carrier, self.x, mx), mx
        )

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ExtensionElement):
            return NotImplemented
        return self.alpha == other.alpha and self.z == other.z and self.x == other.x

    def __hash__(self):
        return hash((self.alpha, self.z, self.x))

    def __repr__(self):
        return "ExtensionElement(z=%d, x=%r)" % (self.z, self.x)

    def to_json(self):
        return {"z": str(self.z), "x": self.x.to_json()}

    @classmethod
    def from_json(cls, obj, alpha):
        if not isinstance(obj, dict):
            raise ValueError("bad extension element object")
        z = obj.get("z", "0")
        if isinstance(z, str):
            z = int(as_fraction(z))
        x = QnRational.from_json(obj.get("x", {}), alpha.modulus)
        return cls(alpha, z, x)


def k_member(alpha, first, second):
    """Whether (first, second) lies in K_alpha inside Q x Q_N."""
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    if not isinstance(second, QnRational) or second.modulus != alpha.modulus:
        raise ValueError("second coordinate must be a Q_N element at the sequence scale")
    first = as_fraction(first)
    k = second.exp
    shift = first - Fraction(second.num * alpha.carrier.at(k), alpha.modulus ** k)
    return shift.denominator == 1


class KPairElement:
    """A point (first, second) of K_alpha inside Q x Q_N.

    Membership is validated on construction.
    """

    __slots__ = ("alpha", "first", "second")

    def __init__(self, alpha, first, second):
        first = as_fraction(first)
        if not k_member(alpha, first, second):
            raise ValueError("(%s, %r) is not a K0 point" % (format_fraction(first), second))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def __setattr__(self, name, value):
        raise AttributeError("KPairElement is immutable")

    def _require_same(self, other):
        if not isinstance(other, KPairElement):
            raise TypeError("expected a KPairElement")
        if other.alpha != self.alpha:
            raise ValueError("elements live over different sequences")

    def __add__(self, other):
        self._require_same(other)
        return KPairElement(self.alpha, self.first + other.first, self.second + other.second)

    def __neg__(self):
        return KPairElement(self.alpha, -self.first, -self.second)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, KPairElement):
            return NotImplemented
        return (
            self.alpha == other.alpha
            and self.first == other.first
            and self.second == other.second
        )

    def __hash__(self):
        return hash((self.alpha, self.first, self.second))

    def __repr__(self):
        return "KPairElement(%s, %r)" % (format_fraction(self.first), self.second)

    def to_json(self):
        return {"first": format_fraction(self.first), "second": self.second.to_json()}

    @classmethod
    def from_json(cls, obj, alpha):
        if not isinstance(obj, dict):
            raise ValueError("bad K0 point object")
        first = as_fraction(obj.get("first", "0"))
        second = QnRational.from_json(obj.get("second", {}), alpha.modulus)
        return cls(alpha, first, second)


def k_project(elem):
    """Projection of a K0 point to its Q_N coordinate."""
    if isinstance(elem, KPairElement):
        return elem.second
    if isinstance(elem, ExtensionElement):
        return elem.x
    raise TypeError("expected a K0 element")


def as_pair(elem):
    """Convert (z, x) from the cocycle presentation to a concrete K0 point."""
    if not isinstance(elem, ExtensionElement):
        raise TypeError("expected an ExtensionElement")
    alpha = elem.alpha
    k = elem.x.exp
    first = elem.z + Fraction(elem.x.num * alpha.carrier.at(k), alpha.modulus ** k)
    return KPairElement(alpha, first, elem.x)


def as_extension(elem):
    """Convert a concrete K0 point to its cocycle presentation."""
    if not isinstance(elem, KPairElement):
        raise TypeError("expected a KPairElement")
    alpha = elem.alpha
    k = elem.second.exp
    z = elem.first - Fraction(elem.second.num * alpha.carrier.at(k), alpha.modulus ** k)
    assert z.denominator == 1
    return ExtensionElement(alpha, int(z), elem.second)


def trace(elem):
    """The canonical trace: (z, p/N**k) |-> z + p * alpha_k, as a Fraction.

    >>> a = AngleSequence.constant(3, Fraction(1, 2))
    >>> trace(ExtensionElement(a, 1, QnRational(1, 1, 3)))
    Fraction(3, 2)
    """
    if isinstance(elem, KPairElement):
        elem = as_extension(elem)
    if not isinstance(elem, ExtensionElement):
        raise TypeError("expected a K0 element")
    return elem.z + elem.alpha.value(elem.x.exp) * elem.x.num


def r_digit(alpha, k):
    """The stage digit r_k = N * j_{2k+1} + j_{2k} in [0, N**2)."""
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    return alpha.modulus * alpha.digit(2 * k + 1) + alpha.digit(2 * k)


def connecting_matrix(alpha, k):
    """The integer stage map [[1, r_k], [0, N**2]] on column vectors."""
    return ((1, r_digit(alpha, k)), (0, alpha.modulus ** 2))


def embedding_matrix(alpha, k):
    """The stage-k embedding [[1, J_2k/N**2k], [0, 1/N**2k]] into Q x Q_N.

    >>> a = AngleSequence.constant(3, Fraction(1, 2))
    >>> embedding_matrix(a, 1)
    ((Fraction(1, 1), Fraction(4, 9)), (Fraction(0, 1), Fraction(1, 9)))
    """
    if not isinstance(alpha, AngleSequence):
        raise TypeError("expected an AngleSequence")
    m = alpha.modulus ** (2 * k)
    return (
        (Fraction(1), Fraction(alpha.carrier.at(2 * k), m)),
        (Fraction(0), Fraction(1, m)),
    )


def mat_mul(A, B):
    """2x2 matrix product over the rationals."""
    return tuple(
        tuple(sum(Fraction(A[i][t]) * Fraction(B[t][j]) for t in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_apply(A, v):
    """Apply a 2x2 matrix to a column vector (pairs in, pairs out)."""
    return (
        Fraction(A[0][0]) * v[0] + Fraction(A[0][1]) * v[1],
        Fraction(A[1][0]) * v[0] + Fraction(A[1][1]) * v[1],
    )

#: The mirror D = diag(1, -1); U_{k+1} * (D F_k D) == U_k holds exactly.
MIRROR = ((1, 0), (0, -1))


def k1_shape(modulus):
    """K1 of the twisted algebra: free of rank two over Q_N (constant shape)."""
    from .nadic import check_scale

    check_scale(modulus)
    return "(Q_%d)^2" % modulus
