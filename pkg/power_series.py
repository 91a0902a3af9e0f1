"""
Truncated power series in t over the Grothendieck ring, and rationality witnesses

A witness is a pair (num, den) of polynomials in t with den(0) = 1, which
makes the series expansion division-free. Denominators remember the factors
they were built from so that assembling many shifted pieces can share
identical denominators instead of multiplying them again.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from abelian_groups import AbelianGroup
from errors import InvalidArgumentError, NonInvertibleDenominatorError
from groth_ring import ONE, ZERO, RingElement, Scalar, element_from_json, element_to_json, render

logger = logging.getLogger(__name__)


class TPoly:
    """Polynomial in t with RingElement coefficients, zero coefficients dropped"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Dict[int, Scalar]] = None):
        cleaned: Dict[int, RingElement] = {}
        for deg, c in (coeffs or {}).items():
            if deg < 0:
                raise InvalidArgumentError(f"negative degree {deg} in polynomial")
            c = RingElement.coerce(c)
            if not c.is_zero():
                cleaned[int(deg)] = c
        self._coeffs = cleaned

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Scalar]]) -> "TPoly":
        coeffs: Dict[int, RingElement] = {}
        for deg, c in terms:
            coeffs[deg] = coeffs.get(deg, ZERO) + RingElement.coerce(c)
        return cls(coeffs)

    @classmethod
    def constant(cls, c: Scalar) -> "TPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: Scalar, deg: int) -> "TPoly":
        return cls({deg: c})

    def terms(self) -> List[Tuple[int, RingElement]]:
        return sorted(self._coeffs.items())

    def coefficient(self, deg: int) -> RingElement:
        return self._coeffs.get(deg, ZERO)

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return list(self._coeffs) == [0] and self._coeffs[0].is_one()

    def truncate(self, order: int) -> "TPoly":
        """Drop every term of degree > order"""
        return TPoly({d: c for d, c in self._coeffs.items() if d <= order})

    def shift(self, k: int) -> "TPoly":
        return TPoly({d + k: c for d, c in self._coeffs.items()})

    def __add__(self, other: "TPoly") -> "TPoly":
        coeffs = dict(self._coeffs)
        for d, c in other._coeffs.items():
            coeffs[d] = coeffs.get(d, ZERO) + c
        return TPoly(coeffs)

    def __neg__(self) -> "TPoly":
        return TPoly({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other) -> "TPoly":
        if not isinstance(other, TPoly):
            other = TPoly.constant(other)
        coeffs: Dict[int, RingElement] = {}
        for da, ca in self._coeffs.items():
            for db, cb in other._coeffs.items():
                coeffs[da + db] = coeffs.get(da + db, ZERO) + ca * cb
        return TPoly(coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"TPoly({self})"

    def __str__(self) -> str:
        return render_tpoly(self)


T_ONE = TPoly.constant(1)


def one_minus(c: Scalar, k: int) -> TPoly:
    """1 - c t^k"""
    return TPoly({0: ONE}) - TPoly.monomial(c, k)


def tpoly_product(factors: Iterable[TPoly]) -> TPoly:
    result = T_ONE
    for factor in factors:
        result = result * factor
    return result


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of t^0 .. t^order"""
    order: int
    coeffs: Tuple[RingElement, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.coeffs) != self.order + 1:
            raise InvalidArgumentError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_list(cls, coeffs: Sequence[Scalar]) -> "PowerSeries":
        return cls(len(coeffs) - 1, tuple(RingElement.coerce(c) for c in coeffs))

    @classmethod
    def from_tpoly(cls, poly: TPoly, order: int) -> "PowerSeries":
        return cls(order, tuple(poly.coefficient(n) for n in range(order + 1)))

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls(order, (ZERO,) * (order + 1))

    def __getitem__(self, n: int) -> RingElement:
        return self.coeffs[n]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_add(self, other)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_sub(self, other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_mul(self, other)

    def __neg__(self) -> "PowerSeries":
        return ps_neg(self)


def ps_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    order = min(f.order, g.order)
    return PowerSeries(order, tuple(f[n] + g[n] for n in range(order + 1)))


def ps_neg(f: PowerSeries) -> PowerSeries:
    return PowerSeries(f.order, tuple(-c for c in f.coeffs))


def ps_sub(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    return ps_add(f, ps_neg(g))


def ps_scale(f: PowerSeries, c: Scalar) -> PowerSeries:
    c = RingElement.coerce(c)
    return PowerSeries(f.order, tuple(c * x for x in f.coeffs))


def ps_shift(f: PowerSeries, k: int) -> PowerSeries:
    """t^k f, truncated at the same order"""
    coeffs = (ZERO,) * min(k, f.order + 1) + f.coeffs[: max(f.order + 1 - k, 0)]
    return PowerSeries(f.order, coeffs)


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product"""
    order = min(f.order, g.order)
    coeffs = []
    for n in range(order + 1):
        total = ZERO
        for k in range(n + 1):
            if f[k].is_zero() or g[n - k].is_zero():
                continue
            total = total + f[k] * g[n - k]
        coeffs.append(total)
    return PowerSeries(order, tuple(coeffs))


@dataclass(frozen=True)
class RationalWitness:
    """num / den with den given as a product of factors"""
    num: TPoly
    den_factors: Tuple[TPoly, ...] = ()

    @classmethod
    def of(cls, num, den=None) -> "RationalWitness":
        num = num if isinstance(num, TPoly) else TPoly.constant(num)
        if den is None:
            return cls(num, ())
        den = den if isinstance(den, TPoly) else TPoly.constant(den)
        return cls(num, () if den.is_one() else (den,))

    @property
    def den(self) -> TPoly:
        return tpoly_product(self.den_factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalWitness):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if not self.den_factors:
            return str(self.num)
        den = " * ".join(f"[{factor}]" for factor in self.den_factors)
        return f"({self.num}) / ({den})"


def witness_from_polynomial(poly: TPoly) -> RationalWitness:
    return RationalWitness(poly, ())


def geometric(c: Scalar, k: int = 1) -> RationalWitness:
    """1 / (1 - c t^k)"""
    return RationalWitness(T_ONE, (one_minus(c, k),))


def _require_unit_constant(den: TPoly) -> None:
    if not den.coefficient(0).is_one():
        raise NonInvertibleDenominatorError(
            f"denominator constant term must be 1, got {den.coefficient(0)}"
        )


def ps_expand(w: RationalWitness, order: int) -> PowerSeries:
    """The unique f with den*f = num mod t^(order+1), by forward substitution"""
    den = w.den
    _require_unit_constant(den)
    den_tail = [(k, c) for k, c in den.terms() if 0 < k <= order]
    coeffs: List[RingElement] = []
    for n in range(order + 1):
        value = w.num.coefficient(n)
        for k, c in den_tail:
            if k > n:
                break
            prev = coeffs[n - k]
            if not prev.is_zero():
                value = value - c * prev
        coeffs.append(value)
    return PowerSeries(order, tuple(coeffs))


def witness_check(w: RationalWitness, f: PowerSeries) -> bool:
    """den*f == num coefficientwise up to the order of f"""
    den_terms = w.den.terms()
    for n in range(f.order + 1):
        total = ZERO
        for k, c in den_terms:
            if k > n:
                break
            if not f[n - k].is_zero():
                total = total + c * f[n - k]
        if total != w.num.coefficient(n):
            logger.debug(f"witness check failed at t^{n}")
            return False
    return True


def witness_combine(ws: Sequence[RationalWitness], shifts: Sequence[int]) -> RationalWitness:
    """Sum of t^shift_i * w_i over a common denominator

    Identical denominators are shared: the combined denominator is the
    product of the distinct input denominators.
    """
    if len(ws) != len(shifts):
        raise InvalidArgumentError(f"{len(ws)} witnesses but {len(shifts)} shifts")
    if any(s < 0 for s in shifts):
        raise InvalidArgumentError(f"shifts must be nonnegative, got {list(shifts)}")

    dens = [w.den for w in ws]
    for den in dens:
        _require_unit_constant(den)

    distinct: List[TPoly] = []
    factors: List[TPoly] = []
    for w, den in zip(ws, dens):
        if den.is_one() or den in distinct:
            continue
        distinct.append(den)
        factors.extend(w.den_factors)

    # cofactors[k] = product of every distinct denominator except the k-th;
    # index len(distinct) stands for the unit denominator
    cofactors: Dict[int, TPoly] = {}

    def cofactor(index: int) -> TPoly:
        if index not in cofactors:
            cofactors[index] = tpoly_product(d for k, d in enumerate(distinct) if k != index)
        return cofactors[index]

    num = TPoly()
    for w, den, shift in zip(ws, dens, shifts):
        index = len(distinct) if den.is_one() else distinct.index(den)
        num = num + (w.num * cofactor(index)).shift(shift)
    logger.debug(f"combined {len(ws)} witnesses over {len(distinct)} distinct denominators")
    return RationalWitness(num, tuple(factors))


# Rendering

def render_tpoly(poly: TPoly) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for deg, c in poly.terms():
        text = render(c)
        if len(c) > 1 and deg > 0:
            text = f"({text})"
        if deg == 0:
            pieces.append(text)
        else:
            power = "t" if deg == 1 else f"t^{deg}"
            if c.is_one():
                pieces.append(power)
            elif (-c).is_one():
                pieces.append(f"-{power}")
            else:
                pieces.append(f"{text}*{power}")
    return " + ".join(pieces).replace("+ -", "- ")


def render_series(f: PowerSeries, max_terms: Optional[int] = None) -> str:
    shown = f.coeffs if max_terms is None else f.coeffs[:max_terms]
    lines = [f"t^{n}: {render(c)}" for n, c in enumerate(shown)]
    if len(shown) < len(f.coeffs):
        lines.append(f"... ({len(f.coeffs) - len(shown)} more)")
    return "\n".join(lines)


# JSON encodings

def tpoly_to_json(poly: TPoly) -> List[Dict]:
    return [{"deg": d, "coef": element_to_json(c)} for d, c in poly.terms()]


def tpoly_from_json(data: List[Dict], group: AbelianGroup) -> TPoly:
    return TPoly.from_terms((int(entry["deg"]), element_from_json(entry["coef"], group)) for entry in data)


def series_to_json(f: PowerSeries) -> Dict:
    return {"order": f.order, "coeffs": [element_to_json(c) for c in f.coeffs]}


def series_from_json(data: Dict, group: AbelianGroup) -> PowerSeries:
    coeffs = tuple(element_from_json(c, group) for c in data["coeffs"])
    return PowerSeries(int(data["order"]), coeffs)


def witness_to_json(w: RationalWitness) -> Dict:
    return {"num": tpoly_to_json(w.num), "den": tpoly_to_json(w.den)}


def witness_from_json(data: Dict, group: AbelianGroup) -> RationalWitness:
    return RationalWitness.of(tpoly_from_json(data["num"], group), tpoly_from_json(data["den"], group))
