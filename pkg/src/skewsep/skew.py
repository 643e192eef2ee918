"""Skew polynomial rings B[X; rho, D] with right-hand coefficients.

Polynomials are written f = sum X^i a_i with the coefficients on the
right.  Scalars move across X by the rule

    alpha * X = X * rho(alpha) + D(alpha)

for a ring automorphism rho and a rho-twisted derivation D.  Iterating it,
alpha * X^i expands into sum_j X^j c_ij(alpha) where the additive maps
c_ij are built by the recursion implemented in commutation_map: c_00 is
the identity, c_i0 = D^i, c_ii = rho^i and otherwise

    c_ij = rho o c_{i-1, j-1} + D o c_{i-1, j}.

Every product in the ring reduces to this expansion, so getting it right
(and testing it against repeated elementary multiplications) pins down the
whole multiplication.

A monic f generates a two-sided ideal fR = Rf exactly when a coefficient
recurrence and a scalar commutation identity hold; is_invariant checks
those, is_invariant_direct checks the defining products themselves, and
the two must always agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import BaseRing, RingElement, RingMap, validate_automorphism, \
    validate_derivation, validate_ring
from .rings import centralizer, fixed_subring
from .linalg import sub_member


class SkewPolyRing:
    __slots__ = ("base", "rho", "deriv", "_cmaps", "_rho_pows")

    def __init__(self, base: BaseRing, rho: RingMap, deriv: RingMap, validate: bool = True):
        if rho.ring != base or deriv.ring != base:
            raise ValueError("maps must act on the coefficient ring")
        if validate:
            problems = validate_ring(base)
            problems += [f"automorphism: {v}" for v in validate_automorphism(base, rho)]
            problems += [f"derivation: {v}" for v in validate_derivation(base, deriv, rho)]
            if problems:
                raise ValueError("invalid skew polynomial data:\n" + "\n".join(problems))
        self.base = base
        self.rho = rho
        self.deriv = deriv
        # write-once memo tables; safe to fill lazily, entries are idempotent
        self._cmaps: dict[tuple[int, int], RingMap] = {(0, 0): RingMap.identity(base)}
        self._rho_pows: dict[int, RingMap] = {0: RingMap.identity(base), 1: rho}

    def rho_power(self, k: int) -> RingMap:
        got = self._rho_pows.get(k)
        if got is None:
            if k > 0:
                got = self.rho.compose(self.rho_power(k - 1))
            else:
                got = self.rho_power(k + 1).compose(self.rho.inverse())
            self._rho_pows[k] = got
        return got

    def commutation_map(self, i: int, j: int) -> RingMap:
        """The X^j component of moving a scalar across X^i."""
        if not 0 <= j <= i:
            raise ValueError("commutation_map requires 0 <= j <= i")
        got = self._cmaps.get((i, j))
        if got is None:
            if j == 0:
                got = self.deriv.compose(self.commutation_map(i - 1, 0))
            elif j == i:
                got = self.rho.compose(self.commutation_map(i - 1, i - 1))
            else:
                got = self.rho.compose(self.commutation_map(i - 1, j - 1)).add(
                    self.deriv.compose(self.commutation_map(i - 1, j)))
            self._cmaps[(i, j)] = got
        return got

    def commute_scalar(self, alpha: RingElement, i: int) -> "SkewPoly":
        """Right-coefficient form of alpha * X^i."""
        return SkewPoly(self, [self.commutation_map(i, j).apply(alpha)
                               for j in range(i + 1)])

    # ------------------------------------------------------- constructors

    def poly(self, coeffs) -> "SkewPoly":
        elems = [c if isinstance(c, RingElement) else self.base.element(c)
                 for c in coeffs]
        return SkewPoly(self, elems)

    def zero(self) -> "SkewPoly":
        return SkewPoly(self, [])

    def one(self) -> "SkewPoly":
        return SkewPoly(self, [self.base.one()])

    def x(self) -> "SkewPoly":
        return SkewPoly(self, [self.base.zero(), self.base.one()])

    def const(self, elem: RingElement) -> "SkewPoly":
        return SkewPoly(self, [elem])

    def monomial(self, coeff: RingElement, i: int) -> "SkewPoly":
        return SkewPoly(self, [self.base.zero()] * i + [coeff])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPolyRing) and self.base == other.base
                and self.rho == other.rho and self.deriv == other.deriv)

    def __hash__(self) -> int:
        return hash((self.base, self.rho, self.deriv))

    def __repr__(self) -> str:
        return f"SkewPolyRing({self.base!r})"


class SkewPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewPolyRing, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        for c in coeffs:
            if c.ring != ring.base:
                raise ValueError("coefficient from a different ring")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.base.one()

    def coefficient(self, i: int) -> RingElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.base.zero()

    def _check(self, other) -> None:
        if not isinstance(other, SkewPoly) or other.ring != self.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coefficient(i) + other.coefficient(i)
                                    for i in range(n)])

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ring, [self.coefficient(i) - other.coefficient(i)
                                    for i in range(n)])

    def __neg__(self):
        return SkewPoly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        """Product via the commutation expansion of each a_i X^j."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return self.ring.zero()
        ring = self.ring
        base = ring.base
        out = [base.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                # X^i a X^j b = sum_k X^(i+k) (c_jk(a) * b)
                for k in range(j + 1):
                    part = ring.commutation_map(j, k).apply(a) * b
                    if not part.is_zero():
                        out[i + k] = out[i + k] + part
        return SkewPoly(ring, out)

    def scale_right(self, elem: RingElement) -> "SkewPoly":
        """Multiply by a scalar on the right (coefficientwise)."""
        return SkewPoly(self.ring, [c * elem for c in self.coeffs])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewPoly) and self.ring == other.ring
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xi = "1" if i == 0 else ("X" if i == 1 else f"X^{i}")
            if i == 0:
                parts.append(f"({c})")
            elif c == self.ring.base.one():
                parts.append(xi)
            else:
                parts.append(f"{xi}*({c})")
        return " + ".join(reversed(parts))

    def __repr__(self) -> str:
        return f"SkewPoly({[list(c.coords) for c in self.coeffs]})"


def divmod_monic(g: SkewPoly, f: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Quotient and remainder with g = f * q + r and deg r < deg f."""
    if g.ring != f.ring:
        raise ValueError("polynomials from different rings")
    if not f.is_monic():
        raise ValueError("divisor must be monic")
    ring = g.ring
    m = f.degree()
    q = ring.zero()
    r = g
    while r.degree() >= m:
        d = r.degree()
        piece = ring.monomial(r.coefficient(d), d - m)
        q = q + piece
        r = r - f * piece
    return q, r


def twist_commutes(g: SkewPoly) -> bool:
    """Does alpha * g = g * rho(alpha) hold for every scalar alpha?"""
    ring = g.ring
    for e in ring.base.basis():
        if ring.const(e) * g != g * ring.const(ring.rho.apply(e)):
            return False
    return True


@dataclass(frozen=True)
class InvariantFailure:
    """First criterion violation found by is_invariant.

    condition is "coefficient-recurrence" (indexed by the coefficient i)
    or "scalar-commutation" (indexed by the target degree j and the basis
    element the identity failed on).
    """

    condition: str
    index: int
    basis_index: int | None = None

    def describe(self, ring: BaseRing) -> str:
        if self.condition == "coefficient-recurrence":
            return f"coefficient recurrence fails at a_{self.index}"
        return (f"scalar commutation fails at degree {self.index} "
                f"on basis element {ring.name_of(self.basis_index)}")


def is_invariant(f: SkewPoly) -> tuple[bool, InvariantFailure | None]:
    """Does monic f generate a two-sided ideal?  Criterion-based test.

    Checks the coefficient recurrence through the derivation first (it is
    cheap and prunes most candidates), then the scalar commutation
    identity on every basis element.
    """
    if not f.is_monic():
        raise ValueError("invariance test requires a monic polynomial")
    ring = f.ring
    m = f.degree()
    if m == 0:
        return True, None
    a = [f.coefficient(i) for i in range(m + 1)]
    rho, deriv = ring.rho, ring.deriv
    shift = rho.apply(a[m - 1]) - a[m - 1]
    if deriv.apply(a[0]) != a[0] * shift:
        return False, InvariantFailure("coefficient-recurrence", 0)
    for i in range(1, m):
        want = a[i - 1] - rho.apply(a[i - 1]) + a[i] * shift
        if deriv.apply(a[i]) != want:
            return False, InvariantFailure("coefficient-recurrence", i)
    rho_m = ring.rho_power(m)
    for t, alpha in enumerate(ring.base.basis()):
        target = rho_m.apply(alpha)
        for j in range(m):
            acc = ring.base.zero()
            for i in range(j, m + 1):
                acc = acc + ring.commutation_map(i, j).apply(alpha) * a[i]
            if a[j] * target != acc:
                return False, InvariantFailure("scalar-commutation", j, t)
    return True, None


def is_invariant_direct(f: SkewPoly) -> bool:
    """Same question, decided from the defining products.

    Checks alpha * f = f * rho^m(alpha) on basis scalars and
    X * f = f * (X - (rho(a_{m-1}) - a_{m-1})).
    """
    if not f.is_monic():
        raise ValueError("invariance test requires a monic polynomial")
    ring = f.ring
    m = f.degree()
    if m == 0:
        return True
    rho_m = ring.rho_power(m)
    for alpha in ring.base.basis():
        if ring.const(alpha) * f != f * ring.const(rho_m.apply(alpha)):
            return False
    am1 = f.coefficient(m - 1)
    shift = ring.rho.apply(am1) - am1
    return ring.x() * f == f * (ring.x() - ring.const(shift))


def coeffs_central_in_fixed_subring(f: SkewPoly) -> bool:
    """For an invariant f with rho-fixed coefficients, are the coefficients
    central inside the joint fixed subring of rho and D?

    This is a consequence of invariance, so a False return signals an
    implementation bug; it is exposed as a self-test hook.
    """
    ring = f.ring
    ok, _ = is_invariant(f)
    if not ok:
        raise ValueError("polynomial is not invariant")
    for c in f.coeffs:
        if ring.rho.apply(c) != c:
            raise ValueError("polynomial has coefficients moved by the automorphism")
    fixed = fixed_subring(ring.base, [(ring.rho, "fixed-point"),
                                      (ring.deriv, "kernel")])
    cent = centralizer(ring.base, fixed)
    return all(sub_member(cent, c.coords) for c in f.coeffs)


def horner_tails(f: SkewPoly) -> list[SkewPoly]:
    """Tails T_j = sum_{k >= j} X^(k-j) a_{k+1} of a monic f, j = 0..m-1.

    T_{m-1} = 1 and X * T_j = T_{j-1} - a_j for j >= 1, while
    X * T_0 = f - a_0; the tails drive the trace map downstairs.
    """
    if not f.is_monic() or f.degree() < 1:
        raise ValueError("tails need a monic polynomial of degree >= 1")
    ring = f.ring
    m = f.degree()
    return [ring.poly([f.coefficient(k + 1) for k in range(j, m)])
            for j in range(m)]


def derivation_on_powers(seed: SkewPoly, count: int) -> list[SkewPoly]:
    """Values g_0..g_count at X^0..X^count of the right-linear derivation
    sending X to seed.

    Built by g_{j+1} = g_j X + X^j seed, which needs the seed to commute
    with scalars through the twist; that is checked up front.
    """
    ring = seed.ring
    if not twist_commutes(seed):
        raise ValueError("seed does not commute with scalars through the twist")
    out = [ring.zero()]
    if count >= 1:
        out.append(seed)
    xp = ring.x()
    xpow = ring.one()
    for j in range(1, count):
        xpow = xpow * xp             # X^j
        out.append(out[j] * xp + xpow * seed)
    return out
