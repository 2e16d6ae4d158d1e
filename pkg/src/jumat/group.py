"""Group structure of the J-unitary polynomial matrices.

The group under study consists of square polynomial matrices U with
U.D.U* = D for the metric D = diag(-1, 1, ..., 1), conjugation treating
the variable as real.  Its normalized members (U(0) = I) decompose
uniquely into elementary generators

    G_z(phase, tangent) = D[z(phase - tangent*tangent/2)z*
                            + (z tangent* - tangent z*)] + I

where z is a normalized isotropic direction (first entry 1, z*Dz = 0),
the phase is an odd-under-star scalar polynomial vanishing at 0, and the
tangent is a vector polynomial whose coefficients are orthogonal to both
z and Dz.  Generators over a common z form a subgroup with the explicit
multiplication law implemented by :func:`compose`; words of generators
with distinct adjacent directions are reduced normal forms.

Three coefficient regimes are supported: unrestricted complex entries,
real entries, and entries real with respect to the rotated variable
(coefficients alternate real / purely imaginary by power).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from jumat.linalg import (
    add_vec,
    as_vector,
    hdot,
    identity_matrix,
    is_zero_vector,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    matvec,
    metric_rows,
    metric_vec,
    neg_vec,
    nullspace,
    outer,
    star_matrix,
    zero_vector,
)
from jumat.poly import NEG_INF, MatrixPolynomial, ScalarPoly, VectorPoly
from jumat.scalars import GaussianRational

_HALF = GaussianRational(Fraction(1, 2))


class Mode(enum.Enum):
    """Coefficient regime for group elements."""

    COMPLEX = "complex"
    REAL_OMEGA = "real_omega"
    REAL_LAMBDA = "real_lambda"

    @property
    def requires_real_directions(self) -> bool:
        return self is not Mode.COMPLEX


def _entry_fits(x: GaussianRational, power: int, mode: Mode) -> bool:
    if mode is Mode.COMPLEX:
        return True
    if mode is Mode.REAL_OMEGA:
        return x.is_real()
    # Alternating regime: real at even powers, purely imaginary at odd.
    return x.is_real() if power % 2 == 0 else x.is_imaginary()


def vector_fits_mode(vec, power: int, mode: Mode) -> bool:
    return all(_entry_fits(x, power, mode) for x in vec)


def matrix_fits_mode(m: MatrixPolynomial, mode: Mode) -> bool:
    if mode is Mode.COMPLEX:
        return True
    for k, mat in enumerate(m.coefficients()):
        for row in mat:
            if not all(_entry_fits(x, k, mode) for x in row):
                return False
    return True


class IsotropicDirection:
    """Normalized direction on the isotropic cone: first entry 1, z*Dz = 0."""

    __slots__ = ("entries",)

    def __init__(self, entries, mode: Mode = Mode.COMPLEX):
        entries = as_vector(entries)
        if len(entries) < 2:
            raise ValueError("directions need at least two components")
        if entries[0] != 1:
            raise ValueError("direction must have first component 1")
        if hdot(entries, metric_vec(entries)):
            raise ValueError("direction is not isotropic")
        if mode.requires_real_directions and not all(x.is_real() for x in entries):
            raise ValueError(f"direction entries must be real in mode {mode.value}")
        self.entries = entries

    @property
    def nu(self) -> int:
        return len(self.entries)

    def star_partner(self) -> IsotropicDirection:
        """The direction -Dz indexing the star of a generator over z."""
        return IsotropicDirection(neg_vec(metric_vec(self.entries)))

    def __eq__(self, other):
        return (
            isinstance(other, IsotropicDirection) and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IsotropicDirection({list(self.entries)})"


def tangent_space_basis(z: IsotropicDirection) -> tuple:
    """Exact basis of {d : d*z = 0, d*Dz = 0}; empty for nu = 2.

    The two pairing conditions are conjugate-linear in d, so the kernel is
    computed from the conjugated constraint rows.  Every basis vector has
    first component 0 (equivalently Dd = d), and the dimension is nu - 2.
    """
    zc = tuple(x.conjugate() for x in z.entries)
    dzc = tuple(x.conjugate() for x in metric_vec(z.entries))
    basis = tuple(nullspace((zc, dzc)))
    assert len(basis) == z.nu - 2
    for d in basis:
        assert not d[0] and metric_vec(d) == d
    return basis


def in_tangent_space(d, z: IsotropicDirection) -> bool:
    return not hdot(d, z.entries) and not hdot(d, metric_vec(z.entries))


class PhasePoly:
    """Phase polynomial i*(rho_1 w + rho_2 w^2 + ...) with rational rho.

    Purely imaginary coefficients and a zero constant term make the
    polynomial odd under star.  In the real-coefficient regime only the
    zero phase exists; in the alternating regime even powers must vanish.
    """

    __slots__ = ("rhos",)

    def __init__(self, rhos=(), mode: Mode = Mode.COMPLEX):
        rhos = [Fraction(r) for r in rhos]
        while rhos and not rhos[-1]:
            rhos.pop()
        self.rhos = tuple(rhos)
        if mode is Mode.REAL_OMEGA and self.rhos:
            raise ValueError("real-coefficient generators admit no phase")
        if mode is Mode.REAL_LAMBDA:
            for k, r in enumerate(self.rhos):
                if k % 2 == 1 and r:
                    raise ValueError(
                        "alternating regime requires odd-power phases only"
                    )

    @classmethod
    def monomial(cls, rho, power: int, mode: Mode = Mode.COMPLEX) -> PhasePoly:
        rho = Fraction(rho)
        if power < 1:
            raise ValueError("phase powers start at 1")
        return cls((Fraction(0),) * (power - 1) + (rho,), mode=mode)

    @classmethod
    def from_scalar_poly(cls, p: ScalarPoly, mode: Mode = Mode.COMPLEX) -> PhasePoly:
        if p.coefficient(0):
            raise ValueError("phase polynomials vanish at 0")
        rhos = []
        for c in p.coefficients()[1:]:
            if not c.is_imaginary():
                raise ValueError("phase coefficients must be purely imaginary")
            rhos.append(c.im)
        return cls(rhos, mode=mode)

    def is_zero(self) -> bool:
        return not self.rhos

    @property
    def degree(self):
        return len(self.rhos) if self.rhos else NEG_INF

    def rho(self, power: int) -> Fraction:
        if 1 <= power <= len(self.rhos):
            return self.rhos[power - 1]
        return Fraction(0)

    def to_scalar_poly(self) -> ScalarPoly:
        return ScalarPoly(
            (GaussianRational(0),) + tuple(GaussianRational(0, r) for r in self.rhos)
        )

    def __add__(self, other):
        if not isinstance(other, PhasePoly):
            return NotImplemented
        n = max(len(self.rhos), len(other.rhos))
        return PhasePoly(self.rho(k + 1) + other.rho(k + 1) for k in range(n))

    def __neg__(self):
        return PhasePoly(-r for r in self.rhos)

    def __eq__(self, other):
        return isinstance(other, PhasePoly) and self.rhos == other.rhos

    def __hash__(self):
        return hash(self.rhos)

    def __repr__(self):
        return f"PhasePoly({[str(r) for r in self.rhos]})"

    def fits_mode(self, mode: Mode) -> bool:
        if mode is Mode.REAL_OMEGA:
            return not self.rhos
        if mode is Mode.REAL_LAMBDA:
            return all(not r for k, r in enumerate(self.rhos) if k % 2 == 1)
        return True


class TangentPoly:
    """Vector polynomial g_1 w + g_2 w^2 + ... with g_k in the tangent space of z."""

    __slots__ = ("direction", "coeffs")

    def __init__(self, direction: IsotropicDirection, coeffs=(), mode: Mode = Mode.COMPLEX):
        coeffs = [as_vector(v) for v in coeffs]
        while coeffs and is_zero_vector(coeffs[-1]):
            coeffs.pop()
        self.direction = direction
        self.coeffs = tuple(coeffs)
        if self.coeffs and direction.nu == 2:
            raise ValueError("the tangent space is trivial for nu = 2")
        for k, v in enumerate(self.coeffs, start=1):
            if len(v) != direction.nu:
                raise ValueError("tangent coefficient of wrong height")
            if not in_tangent_space(v, direction):
                raise ValueError("tangent coefficient outside the tangent space")
            if not vector_fits_mode(v, k, mode):
                raise ValueError(f"tangent coefficient violates mode {mode.value}")

    @classmethod
    def zero(cls, direction: IsotropicDirection) -> TangentPoly:
        return cls(direction, ())

    @classmethod
    def monomial(cls, direction, vec, power: int, mode: Mode = Mode.COMPLEX) -> TangentPoly:
        if power < 1:
            raise ValueError("tangent powers start at 1")
        return cls(
            direction,
            (zero_vector(direction.nu),) * (power - 1) + (tuple(vec),),
            mode=mode,
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) if self.coeffs else NEG_INF

    def coefficient(self, power: int) -> tuple:
        if 1 <= power <= len(self.coeffs):
            return self.coeffs[power - 1]
        return zero_vector(self.direction.nu)

    def to_vector_poly(self) -> VectorPoly:
        return VectorPoly(
            self.direction.nu, (zero_vector(self.direction.nu),) + self.coeffs
        )

    def self_product(self) -> ScalarPoly:
        """The scalar polynomial g*g."""
        g = self.to_vector_poly()
        return g.hermitian_product(g)

    def hermitian_with(self, other: TangentPoly) -> ScalarPoly:
        """The scalar polynomial self* . other."""
        return self.to_vector_poly().hermitian_product(other.to_vector_poly())

    def __add__(self, other):
        if not isinstance(other, TangentPoly):
            return NotImplemented
        if other.direction != self.direction:
            raise ValueError("tangent polynomials live over different directions")
        n = max(len(self.coeffs), len(other.coeffs))
        return TangentPoly(
            self.direction,
            (
                add_vec(self.coefficient(k + 1), other.coefficient(k + 1))
                for k in range(n)
            ),
        )

    def __neg__(self):
        return TangentPoly(self.direction, (neg_vec(v) for v in self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, TangentPoly)
            and self.direction == other.direction
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.direction, self.coeffs))

    def __repr__(self):
        return f"TangentPoly(direction={self.direction!r}, degree={self.degree})"

    def fits_mode(self, mode: Mode) -> bool:
        return all(
            vector_fits_mode(v, k, mode) for k, v in enumerate(self.coeffs, start=1)
        )


@dataclass(frozen=True)
class GeneratorParams:
    """Exact parameters (direction, phase, tangent) of one elementary factor."""

    z: IsotropicDirection
    phase: PhasePoly
    tangent: TangentPoly

    def __post_init__(self):
        if self.tangent.direction != self.z:
            raise ValueError("tangent polynomial belongs to a different direction")

    @property
    def nu(self) -> int:
        return self.z.nu

    def is_identity(self) -> bool:
        return self.phase.is_zero() and self.tangent.is_zero()

    def factor_degree(self) -> int:
        """deg(phase - tangent*tangent); 0 for the identity element."""
        if self.is_identity():
            return 0
        d = (self.phase.to_scalar_poly() - self.tangent.self_product()).degree
        assert d is not NEG_INF and d > 0
        return d

    def fits_mode(self, mode: Mode) -> bool:
        return (
            (not mode.requires_real_directions
             or all(x.is_real() for x in self.z.entries))
            and self.phase.fits_mode(mode)
            and self.tangent.fits_mode(mode)
        )


def identity_params(z: IsotropicDirection) -> GeneratorParams:
    return GeneratorParams(z, PhasePoly(), TangentPoly.zero(z))


def phase_params(z: IsotropicDirection, rhos) -> GeneratorParams:
    """Convenience constructor for a tangent-free generator."""
    return GeneratorParams(z, PhasePoly(rhos), TangentPoly.zero(z))


def build_generator(p: GeneratorParams) -> MatrixPolynomial:
    """Expand parameters into the elementary polynomial matrix.

    The result is D[z(phase - g*g/2)z* + (zg* - gz*)] + I; it evaluates to
    the identity at 0 and its degree is deg(phase - g*g).
    """
    z = p.z.entries
    nu = p.nu
    sigma = p.phase.to_scalar_poly() - p.tangent.self_product().scale(_HALF)
    top = max(
        len(sigma.coefficients()) - 1,
        len(p.tangent.coeffs),
    )
    coeffs = [identity_matrix(nu)]
    zz = outer(z, z)
    for k in range(1, top + 1):
        mat = mat_scale(sigma.coefficient(k), zz)
        gk = p.tangent.coefficient(k)
        if not is_zero_vector(gk):
            mat = mat_add(mat, mat_sub(outer(z, gk), outer(gk, z)))
        coeffs.append(metric_rows(mat))
    out = MatrixPolynomial(nu, nu, coeffs)
    if p.is_identity():
        assert out == MatrixPolynomial.identity(nu)
    else:
        assert out.degree == p.factor_degree()
    return out


def compose(a: GeneratorParams, b: GeneratorParams) -> GeneratorParams:
    """Group law over a common direction.

    Tangents add; phases add plus the exact correction
    (b.tangent* a.tangent - a.tangent* b.tangent) / 2, which is odd under
    star and therefore a valid phase.
    """
    if a.z != b.z:
        raise ValueError("composition requires a common direction")
    g, h = a.tangent, b.tangent
    correction = (h.hermitian_with(g) - g.hermitian_with(h)).scale(_HALF)
    phase = a.phase + b.phase + PhasePoly.from_scalar_poly(correction)
    return GeneratorParams(a.z, phase, g + h)


def invert(p: GeneratorParams) -> GeneratorParams:
    """Group inverse: negate both the phase and the tangent."""
    return GeneratorParams(p.z, -p.phase, -p.tangent)


def commutator(a: GeneratorParams, b: GeneratorParams) -> GeneratorParams:
    """a b a^-1 b^-1; always tangent-free, hence central."""
    out = compose(compose(compose(a, b), invert(a)), invert(b))
    assert out.tangent.is_zero()
    return out


def star_params(p: GeneratorParams) -> GeneratorParams:
    """Parameters of star(G): direction -Dz, negated phase, same tangent."""
    z2 = p.z.star_partner()
    return GeneratorParams(
        z2, -p.phase, TangentPoly(z2, p.tangent.coeffs)
    )


class ConstantUnitary:
    """Constant member diag{1, L} with L*L = I; connects the subgroups."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        matrix = tuple(tuple(GaussianRational(x) for x in row) for row in matrix)
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise ValueError("expected a square matrix")
        if matrix[0][0] != 1 or any(matrix[0][j] for j in range(1, n)) or any(
            matrix[i][0] for i in range(1, n)
        ):
            raise ValueError("expected block structure diag{1, L}")
        block = tuple(row[1:] for row in matrix[1:])
        if n > 1 and mat_mul(star_matrix(block), block) != identity_matrix(n - 1):
            raise ValueError("lower block is not unitary")
        self.matrix = matrix

    @classmethod
    def from_block(cls, block) -> ConstantUnitary:
        n = len(block) + 1
        rows = [
            (GaussianRational(1),) + zero_vector(n - 1),
        ]
        for row in block:
            rows.append((GaussianRational(0),) + tuple(GaussianRational(x) for x in row))
        return cls(rows)

    @classmethod
    def identity(cls, nu: int) -> ConstantUnitary:
        return cls(identity_matrix(nu))

    @property
    def nu(self) -> int:
        return len(self.matrix)

    def inverse(self) -> ConstantUnitary:
        return ConstantUnitary(star_matrix(self.matrix))

    def apply(self, vec) -> tuple:
        return matvec(self.matrix, vec)

    def apply_direction(self, z: IsotropicDirection) -> IsotropicDirection:
        return IsotropicDirection(self.apply(z.entries))

    def as_matrix_poly(self) -> MatrixPolynomial:
        return MatrixPolynomial.constant(self.matrix)

    def __eq__(self, other):
        return isinstance(other, ConstantUnitary) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"ConstantUnitary(nu={self.nu})"


def conjugate(w: ConstantUnitary, p: GeneratorParams) -> GeneratorParams:
    """Move a generator to the direction Wz: W G W^-1 has parameters (Wz, phase, Wg)."""
    if w.nu != p.nu:
        raise ValueError("dimension mismatch")
    z2 = w.apply_direction(p.z)
    g2 = TangentPoly(z2, (w.apply(v) for v in p.tangent.coeffs))
    return GeneratorParams(z2, p.phase, g2)


@dataclass(frozen=True)
class Word:
    """Reduced factor sequence: no identity factors, adjacent directions distinct."""

    nu: int
    factors: tuple = ()

    def __post_init__(self):
        for f in self.factors:
            if f.nu != self.nu:
                raise ValueError("factor of wrong dimension in word")
            if f.is_identity():
                raise ValueError("identity factor in a reduced word")
        for a, b in zip(self.factors, self.factors[1:]):
            if a.z == b.z:
                raise ValueError("adjacent factors share a direction")

    def __len__(self):
        return len(self.factors)


def word_reduce(factors, nu: int) -> Word:
    """Aggregate adjacent same-direction factors and drop identities.

    Composition of merged factors can create new identities and new
    same-direction adjacencies; the stack keeps reducing until the
    sequence is a normal form.
    """
    stack: list = []
    for f in factors:
        if f.nu != nu:
            raise ValueError("factor of wrong dimension")
        cur = f
        while True:
            if cur.is_identity():
                break
            if stack and stack[-1].z == cur.z:
                prev = stack.pop()
                cur = compose(prev, cur)
                continue
            stack.append(cur)
            break
    return Word(nu, tuple(stack))


def word_to_matrix(w: Word) -> MatrixPolynomial:
    out = MatrixPolynomial.identity(w.nu)
    for f in w.factors:
        out = out * build_generator(f)
    return out


def word_degree(w: Word) -> int:
    """Sum of factor degrees; equals the degree of the expanded matrix."""
    return sum(f.factor_degree() for f in w.factors)


def invert_word(w: Word) -> Word:
    return Word(w.nu, tuple(invert(f) for f in reversed(w.factors)))


def conjugate_word(u: ConstantUnitary, w: Word) -> Word:
    return Word(w.nu, tuple(conjugate(u, f) for f in w.factors))
