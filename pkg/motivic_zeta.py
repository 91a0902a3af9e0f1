"""
Motivic zeta functions of affine spaces and curves with finite abelian group actions

Symmetric powers of twisted affine lines and spaces are products of twisted
affine lines, which makes their zeta series periodic with period r = |G|.
For a curve C of genus g, degrees above 2g are peeled into a base degree
n_i = 2g + i plus m copies of the regular representation; the resulting
classes assemble into a single rational witness.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from abelian_groups import AbelianGroup, Character, char_inv, char_mul, char_pow, characters
from errors import InvalidArgumentError
from groth_ring import (
    ONE,
    ZERO,
    RingElement,
    aff,
    affine_space_class,
    e0_twist,
    lefschetz,
    product,
    sym_base,
)
from power_series import (
    RationalWitness,
    TPoly,
    one_minus,
    witness_combine,
    witness_from_polynomial,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveSpec:
    """A curve of genus g with an action of G

    ordering fixes lambda_1 .. lambda_r; by default the canonical character
    order, trivial character first.
    """
    genus: int
    group: AbelianGroup
    ordering: Optional[Tuple[Character, ...]] = None

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidArgumentError(f"genus must be >= 0, got {self.genus}")
        if self.ordering is not None:
            if sorted(self.ordering) != characters(self.group):
                raise InvalidArgumentError(
                    f"ordering must list every character of {self.group} exactly once"
                )

    @property
    def r(self) -> int:
        return self.group.order

    @property
    def chars(self) -> List[Character]:
        return list(self.ordering) if self.ordering is not None else characters(self.group)

    def base_degree(self, i: int) -> int:
        """n_i = 2g + i"""
        return 2 * self.genus + i

    def decompose(self, n: int) -> Tuple[int, int]:
        """(i, m) with n = n_i + r m, 1 <= i <= r, m >= 0; needs n > 2g"""
        d = n - 2 * self.genus
        if d < 1:
            raise InvalidArgumentError(f"degree {n} is not above 2g = {2 * self.genus}")
        i = (d - 1) % self.r + 1
        return i, (d - i) // self.r


def _check_in_group(chars: Sequence[Character], group: AbelianGroup) -> None:
    for chi in chars:
        if chi.divisors != group.divisors:
            raise InvalidArgumentError(
                f"character {chi} of {list(chi.divisors)} used with group {group}"
            )


def sym_affine_line(n: int, chi: Character) -> RingElement:
    """[Sym^n(A^1, chi)] = [A^1, chi][A^1, chi^2] ... [A^1, chi^n]"""
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    return affine_space_class([char_pow(chi, k) for k in range(1, n + 1)])


def zeta_affine_line(chi: Character, group: AbelianGroup) -> RationalWitness:
    """Sum_{k<r} [Sym^k(A^1,chi)] t^k / (1 - [Sym^r(A^1,chi)] t^r)"""
    _check_in_group([chi], group)
    r = group.order
    num = TPoly({k: sym_affine_line(k, chi) for k in range(r)})
    return RationalWitness(num, (one_minus(sym_affine_line(r, chi), r),))


def uncorrected_affine_line_witness(chi: Character, group: AbelianGroup) -> RationalWitness:
    """Same numerator with denominator 1 - [Sym^r(A^1,chi)] t

    Only correct for r = 1; kept to document that the displayed exponent
    must be t^r.
    """
    _check_in_group([chi], group)
    r = group.order
    num = TPoly({k: sym_affine_line(k, chi) for k in range(r)})
    return RationalWitness(num, (one_minus(sym_affine_line(r, chi), 1),))


def _check_same_group(chars: Sequence[Character]) -> None:
    shapes = {chi.divisors for chi in chars}
    if len(shapes) > 1:
        raise InvalidArgumentError(
            f"characters from different groups: {sorted(list(s) for s in shapes)}"
        )


def sym_affine_space(n: int, chars: Sequence[Character]) -> RingElement:
    """[Sym^n(A^k, (lambda_1..lambda_k))] = prod_j [Sym^n(A^1, lambda_j)]"""
    _check_same_group(chars)
    return product(sym_affine_line(n, chi) for chi in chars)


def zeta_affine_space(chars: Sequence[Character], group: AbelianGroup) -> RationalWitness:
    _check_same_group(chars)
    _check_in_group(chars, group)
    r = group.order
    num = TPoly({l: sym_affine_space(l, chars) for l in range(r)})
    return RationalWitness(num, (one_minus(sym_affine_space(r, chars), r),))


def omega(j: int, group: AbelianGroup, chars: Optional[Sequence[Character]] = None) -> RingElement:
    """Omega_j = prod_{k=j+1}^r [A^1, lambda_j^-1 lambda_k]"""
    chars = list(chars) if chars is not None else characters(group)
    r = group.order
    if not 1 <= j <= r:
        raise InvalidArgumentError(f"j must lie in [1, {r}], got {j}")
    inverse = char_inv(chars[j - 1])
    return product(aff(char_mul(inverse, chars[k - 1])) for k in range(j + 1, r + 1))


def lefschetz_geometric_sum(m: int, group: AbelianGroup) -> RingElement:
    """1 + L + ... + L^(m-1)"""
    L = lefschetz(group)
    total, power = ZERO, ONE
    for _ in range(m):
        total = total + power
        power = power * L
    return total


def sym_curve_class(n: int, spec: CurveSpec) -> RingElement:
    """[Sym^n(C, sigma)] in the generator alphabet

    Degrees up to 2g + r are base generators. Above that, with
    n = n_i + r m,
        [Sym^n] = [Sym^{n_i}] + sum_j E0Twist(i, j) (1 + L + ... + L^(m-1)) Omega_j^m.
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    if n <= 2 * spec.genus + spec.r:
        return sym_base(n)
    i, m = spec.decompose(n)
    chars = spec.chars
    geometric_part = lefschetz_geometric_sum(m, spec.group)
    total = sym_base(spec.base_degree(i))
    for j in range(1, spec.r + 1):
        total = total + e0_twist(i, j) * geometric_part * omega(j, spec.group, chars) ** m
    return total


def zeta_curve_pieces(spec: CurveSpec) -> List[Tuple[RationalWitness, int]]:
    """The shifted rational pieces whose sum is the curve zeta series"""
    r = spec.r
    chars = spec.chars
    L = lefschetz(spec.group)
    pieces: List[Tuple[RationalWitness, int]] = []

    low_degrees = TPoly({n: sym_base(n) for n in range(2 * spec.genus + 1)})
    pieces.append((witness_from_polynomial(low_degrees), 0))

    base_den = one_minus(1, r)
    omegas = [omega(j, spec.group, chars) for j in range(1, r + 1)]
    for i in range(1, r + 1):
        shift = spec.base_degree(i)
        pieces.append((RationalWitness(TPoly.constant(sym_base(shift)), (base_den,)), shift))
        for j, om in enumerate(omegas, start=1):
            num = TPoly.monomial(e0_twist(i, j) * om, r)
            den = (one_minus(om, r), one_minus(om * L, r))
            pieces.append((RationalWitness(num, den), shift))
    return pieces


def zeta_curve(spec: CurveSpec) -> RationalWitness:
    """Rational witness for sum_n [Sym^n(C, sigma)] t^n"""
    pieces = zeta_curve_pieces(spec)
    witness = witness_combine([w for w, _ in pieces], [s for _, s in pieces])
    logger.info(
        f"zeta_curve genus {spec.genus}, group {spec.group}: "
        f"{len(pieces)} pieces, denominator degree {witness.den.degree}"
    )
    return witness
