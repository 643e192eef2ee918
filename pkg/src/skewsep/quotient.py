"""Quotients A = R/fR by the right ideal of a monic invariant polynomial.

The quotient is taken with respect to a monic f of degree m >= 1 that
generates a two-sided ideal and whose coefficients are fixed by the
twist; build_quotient refuses anything else with a ScopeError carrying
the failed-condition certificate.  Under those hypotheses A is a free
right module over the coefficient ring B with basis 1, x, .., x^{m-1}
(x the image of X), so every element is a coordinate vector of m ring
elements and, flattened, an integer vector of length m * rank.  All the
structural subgroups (twisted centralizers, the center, kernels and
images of the trace map and the x-commutator) are computed exactly in
that flat picture.

The trace map is tr(z) = sum_j t_j * z * x^j with t_j the Horner tails
of f; weak separability downstream is a statement about its kernel.
"""

from __future__ import annotations

from .linalg import Matrix, Submodule, hnf, kernel
from .rings import RingElement
from .skew import SkewPoly, SkewPolyRing, divmod_monic, horner_tails, is_invariant


class ScopeError(ValueError):
    """f is outside the supported scope (not invariant or not fixed-coefficient)."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class QuotientRing:
    __slots__ = ("ring", "f", "m", "base", "coeff", "dim", "tails",
                 "_x_powers", "_trace_matrix", "_x_comm_matrix",
                 "_twisted", "_center", "_trace_kernel")

    def __init__(self, ring: SkewPolyRing, f: SkewPoly):
        # use build_quotient; this constructor trusts its caller
        self.ring = ring
        self.f = f
        self.m = f.degree()
        self.base = ring.base
        self.coeff = ring.base.coeff
        self.dim = self.m * self.base.rank
        self.tails = [self.reduce_poly(t) for t in horner_tails(f)]
        self._x_powers: list | None = None
        self._trace_matrix: Matrix | None = None
        self._x_comm_matrix: Matrix | None = None
        self._twisted: dict[int, Submodule] = {}
        self._center: Submodule | None = None
        self._trace_kernel: Submodule | None = None

    # ------------------------------------------------------------ elements

    def element(self, coords) -> "AElement":
        elems = [c if isinstance(c, RingElement) else self.base.element(c)
                 for c in coords]
        if len(elems) != self.m:
            raise ValueError(f"need {self.m} coefficients")
        return AElement(self, elems)

    def from_flat(self, flat) -> "AElement":
        r = self.base.rank
        if len(flat) != self.dim:
            raise ValueError("flat vector has wrong length")
        return AElement(self, [self.base.element(flat[j * r:(j + 1) * r])
                               for j in range(self.m)])

    def zero(self) -> "AElement":
        return AElement(self, [self.base.zero()] * self.m)

    def one(self) -> "AElement":
        return self.embed(self.base.one())

    def embed(self, elem: RingElement) -> "AElement":
        return AElement(self, [elem] + [self.base.zero()] * (self.m - 1))

    def x_elem(self) -> "AElement":
        return self.reduce_poly(self.ring.x())

    def basis_elements(self) -> list["AElement"]:
        out = []
        for j in range(self.m):
            for t in range(self.base.rank):
                coords = [self.base.zero()] * self.m
                coords[j] = self.base.basis_element(t)
                out.append(AElement(self, coords))
        return out

    def reduce_poly(self, g: SkewPoly) -> "AElement":
        if g.ring != self.ring:
            raise ValueError("polynomial from a different ring")
        _, rem = divmod_monic(g, self.f)
        return AElement(self, [rem.coefficient(i) for i in range(self.m)])

    def lift(self, a: "AElement") -> SkewPoly:
        return SkewPoly(self.ring, list(a.coords))

    def x_power(self, j: int) -> "AElement":
        if self._x_powers is None:
            pows = [self.one()]
            x = self.x_elem()
            for _ in range(2 * self.m):
                pows.append(pows[-1] * x)
            self._x_powers = pows
        return self._x_powers[j]

    # ------------------------------------------------------------ operators

    def left_mul_matrix_of(self, a: "AElement") -> Matrix:
        cols = [(a * z).flat() for z in self.basis_elements()]
        return Matrix.from_columns(cols, self.coeff, rows=self.dim)

    def right_mul_matrix_of(self, a: "AElement") -> Matrix:
        cols = [(z * a).flat() for z in self.basis_elements()]
        return Matrix.from_columns(cols, self.coeff, rows=self.dim)

    def trace(self, z: "AElement") -> "AElement":
        """tr(z) = sum_j t_j * z * x^j over the Horner tails t_j."""
        if z.parent != self:
            raise ValueError("element from a different quotient")
        out = self.zero()
        for j, t in enumerate(self.tails):
            out = out + t * z * self.x_power(j)
        return out

    def trace_matrix(self) -> Matrix:
        if self._trace_matrix is None:
            cols = [self.trace(z).flat() for z in self.basis_elements()]
            self._trace_matrix = Matrix.from_columns(cols, self.coeff, rows=self.dim)
        return self._trace_matrix

    def trace_kernel(self) -> Submodule:
        if self._trace_kernel is None:
            self._trace_kernel = kernel(self.trace_matrix())
        return self._trace_kernel

    def x_commutator(self, z: "AElement") -> "AElement":
        """z x - x z."""
        if z.parent != self:
            raise ValueError("element from a different quotient")
        x = self.x_power(1)
        return z * x - x * z

    def x_commutator_matrix(self) -> Matrix:
        if self._x_comm_matrix is None:
            x = self.x_power(1)
            self._x_comm_matrix = self.right_mul_matrix_of(x).sub(
                self.left_mul_matrix_of(x))
        return self._x_comm_matrix

    def x_commutator_image(self, sub: Submodule) -> Submodule:
        """Image of the x-commutator restricted to a subgroup."""
        if sub.ambient_dim != self.dim or sub.coeff != self.coeff:
            raise ValueError("subgroup does not live in this quotient")
        mat = self.x_commutator_matrix()
        gens = [mat.apply(row) for row in sub.basis]
        return hnf(gens, self.coeff, dim=self.dim)

    # ----------------------------------------------------------- subgroups

    def twisted_centralizer(self, k: int) -> Submodule:
        """Elements u with alpha u = u rho^k(alpha) for all scalars alpha."""
        got = self._twisted.get(k)
        if got is None:
            rho_k = self.ring.rho_power(k)
            rows = []
            for alpha in self.base.basis():
                left = self.left_mul_matrix_of(self.embed(alpha))
                right = self.right_mul_matrix_of(self.embed(rho_k.apply(alpha)))
                rows.extend(left.sub(right).entries)
            got = kernel(Matrix(rows, self.coeff, cols=self.dim))
            self._twisted[k] = got
        return got

    def base_centralizer(self) -> Submodule:
        """Elements commuting with every scalar."""
        return self.twisted_centralizer(0)

    def center(self) -> Submodule:
        """Elements commuting with the whole quotient.

        Computed from scratch against every basis element, not as
        V intersect Ker(x-commutator); that identity is a theorem the
        tests check, not something to bake in.
        """
        if self._center is None:
            rows = []
            for z in self.basis_elements():
                comm = self.left_mul_matrix_of(z).sub(self.right_mul_matrix_of(z))
                rows.extend(comm.entries)
            self._center = kernel(Matrix(rows, self.coeff, cols=self.dim))
        return self._center

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuotientRing) and self.ring == other.ring
                and self.f == other.f)

    def __hash__(self) -> int:
        return hash((self.ring, self.f))

    def __repr__(self) -> str:
        return f"QuotientRing(f = {self.f}, dim {self.dim} over {self.coeff})"


class AElement:
    __slots__ = ("parent", "coords")

    def __init__(self, parent: QuotientRing, coords):
        self.parent = parent
        self.coords = tuple(coords)

    def flat(self) -> tuple[int, ...]:
        return tuple(c for elem in self.coords for c in elem.coords)

    def _check(self, other) -> None:
        if not isinstance(other, AElement) or other.parent != self.parent:
            raise ValueError("elements from different quotients")

    def __add__(self, other):
        self._check(other)
        return AElement(self.parent, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return AElement(self.parent, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return AElement(self.parent, [-a for a in self.coords])

    def __mul__(self, other):
        self._check(other)
        q = self.parent
        return q.reduce_poly(q.lift(self) * q.lift(other))

    def scale(self, c: int) -> "AElement":
        return AElement(self.parent, [a.scale(c) for a in self.coords])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AElement) and self.parent == other.parent
                and self.coords == other.coords)

    def __hash__(self) -> int:
        return hash(self.coords)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for j, c in enumerate(self.coords):
            if c.is_zero():
                continue
            xj = "1" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if j == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"{xj}*({c})")
        return " + ".join(reversed(parts))

    def __repr__(self) -> str:
        return f"AElement({[list(c.coords) for c in self.coords]})"


def build_quotient(ring: SkewPolyRing, f: SkewPoly) -> QuotientRing:
    """Construct A = R/fR, enforcing the standing hypotheses on f."""
    if f.ring != ring:
        raise ValueError("polynomial from a different ring")
    if not f.is_monic() or f.degree() < 1:
        raise ValueError("f must be monic of degree >= 1")
    for i, c in enumerate(f.coeffs):
        if ring.rho.apply(c) != c:
            raise ScopeError(
                f"outside the fixed-coefficient scope: a_{i} is moved by the twist")
    ok, cert = is_invariant(f)
    if not ok:
        raise ScopeError(
            "f does not generate a two-sided ideal: " + cert.describe(ring.base),
            certificate=cert)
    return QuotientRing(ring, f)
