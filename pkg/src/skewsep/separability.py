"""Separability and weak separability of A = R/fR over the coefficient ring.

Two independent routes are implemented.

The criterion route: A is separable over B iff some u in the twisted
centralizer for exponent 1 - m has trace 1, and weakly separable iff the
twist-1 centralizer cut down to the trace kernel equals the image of the
x-commutator on the base centralizer.  Everything is a finite exact
linear-algebra problem in the flat coordinates of A.

The oracle route: weak separability literally says every B-linear
derivation of A is an inner one, so derivation_module computes the full
module of B-derivations (as vectorized matrices constrained by the
Leibniz rule) and the submodule of inner derivations, and
oracle_weakly_separable compares them.  The two routes share no
criterion-specific code, which is the point: they must agree.

Inclusions that hold by theorem (commutator image inside the trace
kernel, separable implying weakly separable, derivation values at x
filling the whole twist-1 trace kernel) are asserted at runtime; a
violation raises InternalInvariantError, meaning the implementation, not
the input, is wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Submodule, hnf, kernel, solve, \
    sub_contains, sub_equal, sub_intersect, sub_member
from .quotient import AElement, QuotientRing
from .skew import derivation_on_powers, divmod_monic, twist_commutes


class InternalInvariantError(RuntimeError):
    """A relation that is a theorem failed; the engine itself is broken."""


@dataclass(frozen=True)
class ExactnessReport:
    """Exactness of the base-centralizer / twist-1 / trace sequence."""

    exact_at_twist1: bool
    commutator_kernel_is_center: bool


@dataclass(frozen=True)
class Verdict:
    separable: bool
    witness: AElement | None
    weakly_separable: bool
    trace_kernel_in_twist1: Submodule   # twist-1 centralizer cut to Ker(trace)
    commutator_image: Submodule         # x-commutator image of the base centralizer
    exactness: ExactnessReport


@dataclass(frozen=True)
class DerivationTypeReport:
    """Verdicts recomputed through the trivial-twist exact sequences."""

    weakly_separable: bool
    separable: bool
    trace_image_in_center: bool


@dataclass(frozen=True)
class DerivationModule:
    """All B-derivations of A next to the inner ones, as vectorized matrices."""

    dim: int
    module: Submodule      # subgroup of coeff^(dim*dim), row-major matrices
    inner: Submodule

    def matrices(self) -> list[Matrix]:
        """Generators of the full module, unflattened."""
        return [_unvectorize(row, self.dim, self.module.coeff)
                for row in self.module.basis]


def _unvectorize(row, dim: int, coeff) -> Matrix:
    return Matrix([row[p * dim:(p + 1) * dim] for p in range(dim)], coeff, cols=dim)


def _matvec(row, vec, dim: int):
    """Apply the row-major vectorized matrix stored in row to vec."""
    return tuple(sum(row[p * dim + q] * vec[q] for q in range(dim))
                 for p in range(dim))


def is_separable(a: QuotientRing) -> tuple[bool, AElement | None]:
    """Search the twisted centralizer for a trace-1 element.

    The centralizer basis parametrizes every admissible candidate, so an
    unsolvable linear system is a proof of non-separability, not a missed
    witness.
    """
    target = a.one().flat()
    cand = a.twisted_centralizer(1 - a.m)
    if cand.is_zero():
        return False, None
    tmat = a.trace_matrix()
    cols = [tmat.apply(row) for row in cand.basis]
    system = Matrix.from_columns(cols, a.coeff, rows=a.dim)
    res = solve(system, target)
    if res is None:
        return False, None
    coeffs, _ = res
    u = a.zero()
    for c, row in zip(coeffs, cand.basis):
        u = u + a.from_flat(row).scale(c)
    if a.trace(u) != a.one():
        raise InternalInvariantError("witness reconstruction lost the trace")
    return True, u


def _split_subgroups(a: QuotientRing):
    twist1 = a.twisted_centralizer(1)
    s1 = sub_intersect(twist1, a.trace_kernel())
    s2 = a.x_commutator_image(a.base_centralizer())
    if not sub_contains(s1, s2):
        raise InternalInvariantError(
            "commutator image escaped the twist-1 trace kernel")
    return s1, s2


def exactness_report(a: QuotientRing) -> ExactnessReport:
    """Exactness facts behind the weak-separability criterion.

    exact_at_twist1 is the criterion itself.  The second flag compares
    the kernel of the x-commutator restricted to the base centralizer
    with the center of A; their equality is a theorem, so False would be
    an engine bug (and is also asserted elsewhere).
    """
    s1, s2 = _split_subgroups(a)
    restr_kernel = sub_intersect(a.base_centralizer(),
                                 kernel(a.x_commutator_matrix()))
    return ExactnessReport(
        exact_at_twist1=sub_equal(s1, s2),
        commutator_kernel_is_center=sub_equal(restr_kernel, a.center()))


def is_weakly_separable(a: QuotientRing) -> Verdict:
    """Full criterion-route verdict for A = R/fR."""
    s1, s2 = _split_subgroups(a)
    weakly = sub_equal(s1, s2)
    separable, witness = is_separable(a)
    if separable and not weakly:
        raise InternalInvariantError("separable instance judged not weakly separable")
    report = exactness_report(a)
    if not report.commutator_kernel_is_center:
        raise InternalInvariantError(
            "kernel of the restricted x-commutator is not the center")
    if report.exact_at_twist1 != weakly:
        raise InternalInvariantError("exactness report disagrees with the criterion")
    return Verdict(separable=separable, witness=witness, weakly_separable=weakly,
                   trace_kernel_in_twist1=s1, commutator_image=s2,
                   exactness=report)


def derivation_type_report(a: QuotientRing) -> DerivationTypeReport:
    """Trivial-twist reformulation of both verdicts; asserts agreement.

    Requires the twist to be the identity.  In that case every twisted
    centralizer collapses to the base centralizer V, the verdicts become
    exactness statements about V -> V -> C(A), and separability adds
    surjectivity of the trace onto the center.
    """
    if not a.ring.rho.is_identity():
        raise ValueError("derivation-type report needs the identity twist")
    v = a.base_centralizer()
    c = a.center()
    trace_image = hnf([a.trace_matrix().apply(row) for row in v.basis],
                      a.coeff, dim=a.dim)
    if not sub_contains(c, trace_image):
        raise InternalInvariantError("trace image of the base centralizer "
                                     "left the center")
    middle = sub_intersect(v, a.trace_kernel())
    weakly = sub_equal(middle, a.x_commutator_image(v))
    separable = weakly and sub_equal(trace_image, c)
    verdict = is_weakly_separable(a)
    if weakly != verdict.weakly_separable or separable != verdict.separable:
        raise InternalInvariantError(
            "derivation-type sequences disagree with the criterion route")
    return DerivationTypeReport(weakly_separable=weakly, separable=separable,
                                trace_image_in_center=True)


# ----------------------------------------------------------------- oracle

def derivation_module(a: QuotientRing) -> DerivationModule:
    """Every B-linear derivation of A, computed from first principles.

    A derivation is an additive self-map delta with delta(B) = 0 and
    delta(zw) = delta(z) w + z delta(w).  Writing delta as an unknown
    dim x dim matrix over the coefficients and imposing those equations
    on all basis pairs gives a linear system; its kernel is the module
    of derivations.  Inner derivations are the maps z -> vz - zv for v
    in the base centralizer (commutation with B forces v there).
    """
    dim = a.dim
    basis = a.basis_elements()
    left = [a.left_mul_matrix_of(z) for z in basis]
    right = [a.right_mul_matrix_of(z) for z in basis]
    rows = set()
    # delta kills the embedded coefficient ring: columns 0..rank-1 vanish
    for t in range(a.base.rank):
        for p in range(dim):
            row = [0] * (dim * dim)
            row[p * dim + t] = 1
            rows.add(tuple(row))
    # Leibniz rule on basis pairs
    red = a.coeff.reduce
    for i in range(dim):
        li = left[i].entries
        for j in range(dim):
            rj = right[j].entries
            u = [li[q][j] for q in range(dim)]   # flat(z_i * z_j) = column j of L_i
            for p in range(dim):
                row = [0] * (dim * dim)
                base_p = p * dim
                for q in range(dim):
                    if u[q]:
                        row[base_p + q] += u[q]
                for s in range(dim):
                    c = rj[p][s]
                    if c:
                        row[s * dim + i] -= c
                    c = li[p][s]
                    if c:
                        row[s * dim + j] -= c
                row = tuple(red(e) for e in row)
                if any(row):
                    rows.add(row)
    module = kernel(Matrix(sorted(rows), a.coeff, cols=dim * dim))
    inner_gens = []
    for vrow in a.base_centralizer().basis:
        v = a.from_flat(vrow)
        ad = a.left_mul_matrix_of(v).sub(a.right_mul_matrix_of(v))
        inner_gens.append([e for r in ad.entries for e in r])
    inner = hnf(inner_gens, a.coeff, dim=dim * dim)
    if not sub_contains(module, inner):
        raise InternalInvariantError("an inner derivation failed the Leibniz system")
    return DerivationModule(dim=dim, module=module, inner=inner)


def oracle_weakly_separable(a: QuotientRing) -> bool:
    """Decide weak separability by its definition: all derivations inner.

    Also cross-checks that the values delta(x) over all derivations fill
    exactly the twist-1 trace kernel, which ties the oracle to the
    criterion data without using the criterion.
    """
    dm = derivation_module(a)
    xflat = a.x_elem().flat()
    values_at_x = hnf([_matvec(row, xflat, a.dim) for row in dm.module.basis],
                      a.coeff, dim=a.dim)
    s1, _ = _split_subgroups(a)
    if not sub_equal(values_at_x, s1):
        raise InternalInvariantError(
            "derivation values at x do not match the twist-1 trace kernel")
    return sub_equal(dm.module, dm.inner)


def inner_derivation_matrix(a: QuotientRing, v: AElement) -> Matrix:
    """Matrix of z -> vz - zv."""
    if v.parent != a:
        raise ValueError("element from a different quotient")
    return a.left_mul_matrix_of(v).sub(a.right_mul_matrix_of(v))


def derivation_from_value(a: QuotientRing, u: AElement) -> Matrix:
    """The B-derivation of A sending x to u, as a dim x dim matrix.

    u must lie in the twist-1 centralizer and in the trace kernel; those
    are exactly the values a derivation can take at x.  The construction
    lifts u, extends it along powers of X, checks that the lift preserves
    the ideal, and pushes the result back down.
    """
    if u.parent != a:
        raise ValueError("element from a different quotient")
    if not sub_member(a.twisted_centralizer(1), u.flat()):
        raise ValueError("value is not in the twist-1 centralizer")
    if not a.trace(u).is_zero():
        raise ValueError("value is not killed by the trace")
    seed = a.lift(u)
    if not twist_commutes(seed):
        raise InternalInvariantError("twist-1 membership did not lift")
    gs = derivation_on_powers(seed, a.m)
    lifted = seed.ring.zero()
    for k in range(1, a.m + 1):
        lifted = lifted + gs[k].scale_right(a.f.coefficient(k))
    _, rem = divmod_monic(lifted, a.f)
    if not rem.is_zero():
        raise InternalInvariantError("derivation lift does not preserve the ideal")
    cols = []
    for j in range(a.m):
        for t in range(a.base.rank):
            img = a.reduce_poly(gs[j].scale_right(a.base.basis_element(t)))
            cols.append(img.flat())
    return Matrix.from_columns(cols, a.coeff, rows=a.dim)
