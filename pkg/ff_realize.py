"""
Realizations of the equivariant Grothendieck ring by fixed-point counting over prime fields

Counting the F_q-points fixed by one group element g respects both the
scissor relation and fiber products, so it is a ring homomorphism into the
integers. This module evaluates elements under such homomorphisms, builds
the tables for the mu_r scaling action on P^1, and provides brute-force
enumeration oracles that know nothing about the generator alphabet.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence

import numpy as np
from sympy import isprime, primitive_root
from sympy.ntheory import n_order

from abelian_groups import AbelianGroup, Character, GroupElement, characters, make_group, pair
from config import ORACLE_LIMITS
from errors import (
    EnumerationTooLargeError,
    EquimotError,
    InconsistentCountsError,
    InvalidArgumentError,
    SingularCurveError,
    UncoveredGeneratorError,
    UnsupportedScenarioError,
)
from groth_ring import AffLine, E0Twist, GenSymbol, RingElement, SymBase, symbol_from_json, symbol_to_json
from motivic_zeta import CurveSpec
from power_series import RationalWitness, TPoly, one_minus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeField:
    """F_p for a prime p < 2^31"""
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise UnsupportedScenarioError(f"field size must be prime, got {self.p}")
        if self.p >= ORACLE_LIMITS["max_prime"]:
            raise UnsupportedScenarioError(f"prime {self.p} is too large")


def primitive_root_of_unity(q: int, r: int) -> int:
    """zeta_r = w^((q-1)/r) with w the smallest primitive root mod q"""
    PrimeField(q)
    if r < 1 or (q - 1) % r:
        raise UnsupportedScenarioError(f"r = {r} must divide q - 1 = {q - 1}")
    if q == 2:
        return 1
    zeta = pow(primitive_root(q), (q - 1) // r, q)
    assert n_order(zeta, q) == r
    return zeta


@dataclass(frozen=True)
class P1Scenario:
    """P^1 over F_q with mu_r acting by [x:y] -> [zeta_r^g x : y]"""
    q: int
    r: int
    zeta_r: int
    group: AbelianGroup

    def value(self, chi: Character, g: GroupElement) -> int:
        """chi(g) as an element of F_q"""
        return pow(self.zeta_r, pair(chi, g).e, self.q)

    def scaling(self, g: GroupElement) -> int:
        return pow(self.zeta_r, g.residues[0], self.q)


def make_scenario(q: int, r: int) -> P1Scenario:
    zeta = primitive_root_of_unity(q, r)
    scenario = P1Scenario(q, r, zeta, make_group([r]))
    logger.debug(f"scenario q={q}, r={r}: zeta_r = {zeta}")
    return scenario


def scenario_to_json(sc: P1Scenario) -> Dict:
    return {"q": sc.q, "r": sc.r}


def scenario_from_json(data: Dict) -> P1Scenario:
    return make_scenario(int(data["q"]), int(data["r"]))


@dataclass
class GeneratorTable:
    """Values of the generators at one fixed group element"""
    values: Dict[GenSymbol, int] = field(default_factory=dict)

    def __getitem__(self, sym: GenSymbol) -> int:
        return self.values[sym]

    def __contains__(self, sym: GenSymbol) -> bool:
        return sym in self.values

    def missing(self, elem: RingElement) -> List[GenSymbol]:
        return sorted(
            (sym for sym in elem.symbols() if sym not in self.values),
            key=lambda sym: sym.sort_key(),
        )

    def to_json(self) -> List[Dict]:
        ordered = sorted(self.values.items(), key=lambda item: item[0].sort_key())
        return [{"gen": symbol_to_json(sym), "value": value} for sym, value in ordered]

    @classmethod
    def from_json(cls, data: List[Dict], group: AbelianGroup) -> "GeneratorTable":
        if not isinstance(data, list):
            raise InvalidArgumentError(f"a generator table is a list of entries, got {type(data).__name__}")
        try:
            return cls({symbol_from_json(entry["gen"], group): int(entry["value"]) for entry in data})
        except EquimotError:
            raise
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidArgumentError(f"malformed generator table JSON: {type(e).__name__}: {e}") from e


def realize(elem: RingElement, table: GeneratorTable) -> int:
    """Extend the table to the unique ring homomorphism and evaluate"""
    missing = table.missing(elem)
    if missing:
        raise UncoveredGeneratorError(missing)
    total = 0
    for mono, c in elem.items():
        term = c
        for sym, e in mono:
            term *= table[sym] ** e
        total += term
    return total


# The mu_r scaling action on P^1

def p1_weights(sc: P1Scenario, g: GroupElement, n: int, sign: int = -1) -> List[int]:
    """Weight exponents of g on H^0(P^1, O(n)); x^a y^(n-a) has weight zeta^(sign*a*g)"""
    return [(sign * a * g.residues[0]) % sc.r for a in range(n + 1)]


def _projective_fixed_count(q: int, weights: Sequence[int]) -> int:
    """Fixed points of a diagonal action on P^n: disjoint projectivized eigenspaces"""
    return sum((q ** m - 1) // (q - 1) for m in Counter(weights).values())


def _check_p1_spec(sc: P1Scenario, g: GroupElement, spec: CurveSpec) -> None:
    if spec.genus != 0:
        raise UnsupportedScenarioError(f"the P^1 scenario realizes genus 0 only, got genus {spec.genus}")
    if spec.group.divisors != sc.group.divisors:
        raise UnsupportedScenarioError(f"curve group {spec.group} differs from scenario group {sc.group}")
    if g.divisors != sc.group.divisors:
        raise UnsupportedScenarioError(f"group element {g} does not belong to {sc.group}")


def p1_aff_table(sc: P1Scenario, g: GroupElement) -> GeneratorTable:
    """A^1 with weight chi: everything is fixed when chi(g) = 1, else only the origin"""
    return GeneratorTable({
        AffLine(chi): sc.q if pair(chi, g).is_one() else 1
        for chi in characters(sc.group)
    })


def p1_table(sc: P1Scenario, g: GroupElement, spec: CurveSpec, sign: int = -1) -> GeneratorTable:
    """Fixed-point counts of g for every generator of the genus-0 curve P^1

    sign picks the global convention for the abstract root of unity: weights
    zeta^(sign*a*g) and character values zeta^(-sign*chi(g)). Both choices
    give the same table.
    """
    _check_p1_spec(sc, g, spec)
    table = p1_aff_table(sc, g)
    r, q = sc.r, sc.q
    for n in range(1, r + 1):
        table.values[SymBase(n)] = _projective_fixed_count(q, p1_weights(sc, g, n, sign))
    for j, chi in enumerate(spec.chars, start=1):
        twist = (-sign * pair(chi, g).e) % r
        for i in range(1, r + 1):
            weights = p1_weights(sc, g, spec.base_degree(i), sign)
            fixed_dim = sum(1 for w in weights if (w - twist) % r == 0)
            table.values[E0Twist(i, j)] = q ** fixed_dim
    return table


# Brute-force oracles

def _check_bound(points: int, what: str) -> None:
    limit = ORACLE_LIMITS["max_enumeration"]
    if points > limit:
        raise EnumerationTooLargeError(f"{what} needs {points} points, limit is {limit}")


def _digit_blocks(q: int, length: int) -> Iterator[np.ndarray]:
    """All of F_q^length in blocks, one row per vector, one column per coordinate"""
    total = q ** length
    chunk = ORACLE_LIMITS["chunk_size"]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        block = np.empty((len(idx), length), dtype=np.int64)
        for k in range(length):
            idx, block[:, k] = np.divmod(idx, q)
        yield block


def _count_rows(block: np.ndarray, multipliers: Sequence[int], q: int) -> int:
    """Rows v with v_k * multipliers[k] = 0 mod q for every column k"""
    if not len(multipliers):
        return len(block)
    mult = np.asarray(multipliers, dtype=np.int64) % q
    return int(np.all((block * mult) % q == 0, axis=1).sum())


def brute_fixed_sym_a1(n: int, chi: Character, sc: P1Scenario, g: GroupElement) -> int:
    """Monic degree-n polynomials fixed by f(x) -> c^n f(x/c), c = chi(g) in F_q

    The coefficient of x^k is scaled by c^(n-k); every monic polynomial is
    visited.
    """
    q = sc.q
    _check_bound(q ** n, f"Sym^{n}(A^1) over F_{q}")
    c = sc.value(chi, g)
    multipliers = [pow(c, n - k, q) - 1 for k in range(n)]
    if n == 0:
        return 1
    return sum(_count_rows(block, multipliers, q) for block in _digit_blocks(q, n))


def brute_fixed_sym_p1(n: int, sc: P1Scenario, g: GroupElement) -> int:
    """Points of P^n = Sym^n P^1 (binary forms up to scalar) fixed by g

    g acts on the coefficient of x^a y^(n-a) by zeta^(-a g). Points are
    enumerated by their first nonzero coordinate, normalized to 1; a point is
    fixed iff every later coordinate scales like the leading one.
    """
    q = sc.q
    _check_bound((q ** (n + 1) - 1) // (q - 1), f"P^{n} over F_{q}")
    s = pow(sc.scaling(g), q - 2, q)
    scale = [pow(s, a, q) for a in range(n + 1)]
    fixed = 0
    for lead in range(n + 1):
        multipliers = [scale[a] - scale[lead] for a in range(lead + 1, n + 1)]
        fixed += sum(_count_rows(block, multipliers, q) for block in _digit_blocks(q, n - lead))
    return fixed


def count_fixed_p1_by_scalars(n: int, sc: P1Scenario, g: GroupElement) -> int:
    """Same count as brute_fixed_sym_p1, coordinate by coordinate

    For each scalar mu, the vectors with g.v = mu v form a product of
    per-coordinate solution sets found by trying every c in F_q.
    """
    q = sc.q
    s = pow(sc.scaling(g), q - 2, q)
    scale = [pow(s, a, q) for a in range(n + 1)]
    eigenvectors = 0
    for mu in range(1, q):
        solutions = 1
        for a in range(n + 1):
            solutions *= sum(1 for c in range(q) if (scale[a] * c - mu * c) % q == 0)
        eigenvectors += solutions - 1
    return eigenvectors // (q - 1)


# Classical (non-equivariant) zeta functions

def classical_sym_counts(point_counts: Sequence[int], n: int) -> List[int]:
    """c_0..c_n from exp(sum_i N_i t^i / i), exactly"""
    if len(point_counts) < n:
        raise InconsistentCountsError(f"need N_1..N_{n}, got {len(point_counts)} counts")
    coeffs: List[Fraction] = [Fraction(1)]
    for k in range(1, n + 1):
        total = sum(point_counts[i - 1] * coeffs[k - i] for i in range(1, k + 1))
        coeffs.append(Fraction(total, k))
    for k, c in enumerate(coeffs):
        if c.denominator != 1 or c < 0:
            raise InconsistentCountsError(f"c_{k} = {c} is not a nonnegative integer")
    return [int(c) for c in coeffs]


def count_curve_points(a: int, b: int, p: int, s: int = 1) -> int:
    """N_s for y^2 = x^3 + a x + b over F_(p^s)

    N_1 by enumeration (plus the point at infinity); higher s through the
    trace recurrence t_s = a_p t_(s-1) - p t_(s-2).
    """
    return frobenius_counts(a, b, p, s)[s - 1]


def frobenius_counts(a: int, b: int, p: int, s_max: int) -> List[int]:
    if p <= 3 or not isprime(p):
        raise UnsupportedScenarioError(f"curve counting needs a prime p > 3, got {p}")
    if s_max < 1:
        raise UnsupportedScenarioError(f"s must be positive, got {s_max}")
    if (4 * a ** 3 + 27 * b ** 2) % p == 0:
        raise SingularCurveError(f"y^2 = x^3 + {a}x + {b} is singular mod {p}")
    squares = Counter(y * y % p for y in range(p))
    n1 = 1 + sum(squares[(x ** 3 + a * x + b) % p] for x in range(p))
    trace = p + 1 - n1
    assert trace * trace <= 4 * p, "Hasse bound violated"
    traces = [2, trace]
    for _ in range(2, s_max + 1):
        traces.append(trace * traces[-1] - p * traces[-2])
    return [p ** k + 1 - traces[k] for k in range(1, s_max + 1)]


def l_polynomial(point_counts: Sequence[int], q: int, genus: int) -> List[int]:
    """Coefficients of L(t) = Z(t)(1-t)(1-qt), degree 2g"""
    c = classical_sym_counts(point_counts, 2 * genus)
    padded = [0, 0] + c
    return [padded[k + 2] - (1 + q) * padded[k + 1] + q * padded[k] for k in range(2 * genus + 1)]


def class_number_from_counts(point_counts: Sequence[int], q: int, genus: int) -> int:
    """|Pic^0(C)(F_q)| = L(1)"""
    return sum(l_polynomial(point_counts, q, genus))


def classical_zeta_witness(point_counts: Sequence[int], q: int, genus: int) -> RationalWitness:
    """L(t) / ((1 - t)(1 - q t)) with integer coefficients"""
    num = TPoly(dict(enumerate(l_polynomial(point_counts, q, genus))))
    return RationalWitness(num, (one_minus(1, 1), one_minus(q, 1)))


def weil_identity_table(spec: CurveSpec, q: int, point_counts: Sequence[int]) -> GeneratorTable:
    """Identity-element values of every generator, from point counts alone

    At the identity every point is fixed: AffLine -> q, SymBase(n) -> c_n,
    and E0Twist(i, j) -> h q^(n_i - g + 1) since E_0 over Pic^(n_i) has rank
    n_i - g + 1 and Pic^(n_i) has h points.
    """
    top = 2 * spec.genus + spec.r
    counts = classical_sym_counts(point_counts, top)
    h = class_number_from_counts(point_counts, q, spec.genus)
    values: Dict[GenSymbol, int] = {AffLine(chi): q for chi in characters(spec.group)}
    for n in range(1, top + 1):
        values[SymBase(n)] = counts[n]
    for i in range(1, spec.r + 1):
        rank = spec.base_degree(i) - spec.genus + 1
        for j in range(1, spec.r + 1):
            values[E0Twist(i, j)] = h * q ** rank
    return GeneratorTable(values)


def hasse_ok(n1: int, p: int) -> bool:
    return (p + 1 - n1) ** 2 <= 4 * p
