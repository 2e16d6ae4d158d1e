"""Exact, deterministic random generation of group objects.

Everything sampled here is an exact member of its defining set: isotropic
directions come from a stereographic parametrization of the rational
sphere, tangent coefficients are rational combinations of an exact
tangent-space basis, and constant unitaries are Cayley transforms of
skew-Hermitian rational matrices.  Fixed seeds give identical output on
every run; no distributional uniformity is promised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from jumat.group import (
    ConstantUnitary,
    GeneratorParams,
    IsotropicDirection,
    Mode,
    PhasePoly,
    TangentPoly,
    Word,
    tangent_space_basis,
)
from jumat.linalg import (
    add_vec,
    identity_matrix,
    inverse,
    mat_mul,
    mat_sub,
    mat_add,
    scale_vec,
    zero_vector,
)
from jumat.scalars import GaussianRational


@dataclass(frozen=True)
class SampleConfig:
    """Bounds and seed for one deterministic sampling stream.

    ``coefficient_height`` bounds the numerators and denominators of
    sampled phase/tangent coefficients.  Direction coordinates use the
    smaller ``direction_height`` bound before the sphere map, which keeps
    bignum growth in factorization round trips at desk scale.
    """

    nu: int
    mode: Mode = Mode.COMPLEX
    max_factors: int = 4
    max_phase_degree: int = 3
    max_tangent_degree: int = 2
    coefficient_height: int = 40
    direction_height: int = 8
    seed: int = 0

    def __post_init__(self):
        if self.nu < 2:
            raise ValueError("nu must be at least 2")
        if self.coefficient_height < 1 or self.direction_height < 1:
            raise ValueError("height bounds must be positive")


class Sampler:
    """Owns the RNG state for one stream of exact samples."""

    def __init__(self, cfg: SampleConfig):
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)

    def _fraction(self, height=None, nonzero=False) -> Fraction:
        h = height or self.cfg.coefficient_height
        num = self.rng.randint(-h, h)
        while nonzero and num == 0:
            num = self.rng.randint(-h, h)
        return Fraction(num, self.rng.randint(1, h))

    def _scalar(self, height=None, nonzero=False) -> GaussianRational:
        if self.cfg.mode is not Mode.COMPLEX:
            return GaussianRational(self._fraction(height, nonzero))
        while True:
            x = GaussianRational(self._fraction(height), self._fraction(height))
            if x or not nonzero:
                return x

    def direction(self) -> IsotropicDirection:
        """Exact member of the normalized isotropic cone.

        Draws a rational point, maps it stereographically onto the unit
        sphere (in R^(2(nu-1)) for complex entries, R^(nu-1) for real
        ones), flips signs at random for coverage, and pairs coordinates
        into complex components when the mode allows them.
        """
        cfg = self.cfg
        real = cfg.mode is not Mode.COMPLEX
        dim = (cfg.nu - 1) if real else 2 * (cfg.nu - 1)
        x = [self._fraction(cfg.direction_height) for _ in range(dim - 1)]
        norm2 = sum((t * t for t in x), Fraction(0))
        denom = norm2 + 1
        point = [2 * t / denom for t in x] + [(norm2 - 1) / denom]
        point = [t if self.rng.randint(0, 1) else -t for t in point]
        if real:
            comps = [GaussianRational(t) for t in point]
        else:
            comps = [
                GaussianRational(point[2 * k], point[2 * k + 1])
                for k in range(cfg.nu - 1)
            ]
        return IsotropicDirection(
            (GaussianRational(1), *comps), mode=cfg.mode
        )

    def phase(self) -> PhasePoly:
        """Mode-respecting phase; empty whenever the mode forbids phases."""
        cfg = self.cfg
        if cfg.mode is Mode.REAL_OMEGA:
            return PhasePoly()
        degree = self.rng.randint(0, cfg.max_phase_degree)
        if cfg.mode is Mode.REAL_LAMBDA and degree % 2 == 0:
            degree -= 1
        if degree < 1:
            return PhasePoly()
        rhos = []
        for power in range(1, degree + 1):
            if cfg.mode is Mode.REAL_LAMBDA and power % 2 == 0:
                rhos.append(Fraction(0))
            elif power == degree:
                rhos.append(self._fraction(nonzero=True))
            else:
                rhos.append(self._fraction())
        return PhasePoly(rhos, mode=cfg.mode)

    def tangent(self, z: IsotropicDirection) -> TangentPoly:
        """Random tangent polynomial over z; always empty for nu = 2."""
        cfg = self.cfg
        basis = tangent_space_basis(z)
        if not basis:
            return TangentPoly.zero(z)
        degree = self.rng.randint(0, cfg.max_tangent_degree)
        if degree < 1:
            return TangentPoly.zero(z)
        coeffs = []
        for power in range(1, degree + 1):
            force = power == degree
            while True:
                vec = zero_vector(z.nu)
                for b in basis:
                    c = self._scalar()
                    if cfg.mode is Mode.REAL_LAMBDA and power % 2 == 1:
                        c = c * GaussianRational(0, 1)
                    vec = add_vec(vec, scale_vec(c, b))
                if not force or any(vec):
                    break
            coeffs.append(vec)
        return TangentPoly(z, coeffs, mode=cfg.mode)

    def member(self, z: IsotropicDirection | None = None) -> GeneratorParams:
        """Random nonidentity generator, optionally over a fixed direction."""
        if z is None:
            z = self.direction()
        for _ in range(100):
            p = GeneratorParams(z, self.phase(), self.tangent(z))
            if not p.is_identity():
                return p
        raise ValueError(
            "no nonidentity generator exists under this configuration"
        )

    def word(self) -> Word:
        """Random reduced word; empty when the configuration only allows it."""
        cfg = self.cfg
        if cfg.nu == 2 and cfg.mode is Mode.REAL_OMEGA:
            # The normalized real group is trivial in dimension 2.
            return Word(cfg.nu, ())
        count = self.rng.randint(0, cfg.max_factors)
        factors = []
        prev = None
        for _ in range(count):
            z = self.direction()
            while prev is not None and z == prev:
                z = self.direction()
            factors.append(self.member(z))
            prev = z
        return Word(cfg.nu, tuple(factors))

    def constant_unitary(self) -> ConstantUnitary:
        """Cayley transform of a random skew-Hermitian block.

        (I - S)(I + S)^-1 is exactly unitary for skew-Hermitian S, and
        I + S is always invertible over the exact field.
        """
        n = self.cfg.nu - 1
        real = self.cfg.mode is not Mode.COMPLEX
        rows = [[GaussianRational(0)] * n for _ in range(n)]
        for i in range(n):
            if not real:
                rows[i][i] = GaussianRational(0, self._fraction())
            for j in range(i + 1, n):
                x = self._scalar()
                rows[i][j] = x
                rows[j][i] = -x.conjugate()
        s = tuple(tuple(r) for r in rows)
        eye = identity_matrix(n)
        block = mat_mul(mat_sub(eye, s), inverse(mat_add(eye, s)))
        return ConstantUnitary.from_block(block)

    def matrix(self):
        """Random group member: a word expansion times a constant unitary."""
        from jumat.group import word_to_matrix

        w = self.word()
        return word_to_matrix(w) * self.constant_unitary().as_matrix_poly()
