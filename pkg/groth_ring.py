"""
The free commutative ring on the generator alphabet of K_0(Var_k^G)

Generators are twisted affine lines AffLine(chi), opaque symmetric-power
classes SymBase(n) of the curve, and twisted Picard-bundle classes
E0Twist(i, j). Elements are sparse integer polynomials in these generators,
kept in a canonical form so that equality of elements is equality of forms.
The scissor relation is not quotiented out: identities between different
presentations are checked through realization homomorphisms.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from abelian_groups import AbelianGroup, Character, characters
from errors import EquimotError, InvalidArgumentError

logger = logging.getLogger(__name__)


class GenSymbol:
    """Base class of the three generator kinds"""
    rank = -1

    def payload(self) -> Tuple:
        raise NotImplementedError

    @cached_property
    def _key(self) -> Tuple:
        return (self.rank,) + self.payload()

    def sort_key(self) -> Tuple:
        return self._key


@dataclass(frozen=True)
class AffLine(GenSymbol):
    """[A^1, chi]; the trivial character gives the Lefschetz class L"""
    chi: Character
    rank = 0

    def payload(self) -> Tuple:
        return (self.chi.residues, self.chi.divisors)

    def is_lefschetz(self) -> bool:
        return self.chi.is_trivial()

    def __str__(self) -> str:
        if self.is_lefschetz():
            return "L"
        return "A(" + ",".join(str(a) for a in self.chi.residues) + ")"


@dataclass(frozen=True)
class SymBase(GenSymbol):
    """[Sym^n(C, sigma)] for a base degree n >= 1"""
    n: int
    rank = 1

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError(f"SymBase needs n >= 1 (Sym^0 is the unit), got {self.n}")

    def payload(self) -> Tuple:
        return ((self.n,), ())

    def __str__(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class E0Twist(GenSymbol):
    """[E_0, (1/lambda_j) (x) sigma_0] over the base degree n_i"""
    i: int
    j: int
    rank = 2

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise InvalidArgumentError(f"E0Twist indices start at 1, got ({self.i},{self.j})")

    def payload(self) -> Tuple:
        return ((self.i, self.j), ())

    def __str__(self) -> str:
        return f"E[{self.i},{self.j}]"


# A monomial is a tuple of (symbol, exponent) pairs sorted by symbol order
Monomial = Tuple[Tuple[GenSymbol, int], ...]

ONE_MONOMIAL: Monomial = ()


def _monomial(exponents: Dict[GenSymbol, int]) -> Monomial:
    return tuple(sorted(
        ((sym, e) for sym, e in exponents.items() if e),
        key=lambda pair: pair[0].sort_key(),
    ))


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exponents = dict(a)
    for sym, e in b:
        exponents[sym] = exponents.get(sym, 0) + e
    return _monomial(exponents)


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_key(mono: Monomial) -> Tuple:
    return (monomial_degree(mono), tuple((sym.sort_key(), e) for sym, e in mono))


Scalar = Union[int, "RingElement"]


class RingElement:
    """Integer combination of monomials; zero coefficients are never stored"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Dict[Monomial, int]] = None):
        self._coeffs: Dict[Monomial, int] = {
            mono: int(c) for mono, c in (coeffs or {}).items() if c
        }

    # construction

    @classmethod
    def from_int(cls, value: int) -> "RingElement":
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def from_symbol(cls, sym: GenSymbol, exponent: int = 1) -> "RingElement":
        if exponent < 0:
            raise InvalidArgumentError(f"negative exponent {exponent}")
        return cls({_monomial({sym: exponent}): 1})

    @staticmethod
    def coerce(value: Scalar) -> "RingElement":
        if isinstance(value, RingElement):
            return value
        if isinstance(value, int):
            return RingElement.from_int(value)
        raise TypeError(f"cannot use {type(value).__name__} as a ring element")

    # inspection

    def terms(self) -> List[Tuple[Monomial, int]]:
        """Canonical order: total degree, then lexicographic on the monomial"""
        return sorted(self._coeffs.items(), key=lambda item: monomial_key(item[0]))

    def coefficient(self, mono: Monomial) -> int:
        return self._coeffs.get(mono, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return self._coeffs == {ONE_MONOMIAL: 1}

    def constant_term(self) -> int:
        return self._coeffs.get(ONE_MONOMIAL, 0)

    def total_degree(self) -> int:
        return max((monomial_degree(m) for m in self._coeffs), default=0)

    def symbols(self) -> Set[GenSymbol]:
        return {sym for mono in self._coeffs for sym, _ in mono}

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self):
        return self._coeffs.items()

    # arithmetic

    def __add__(self, other: Scalar) -> "RingElement":
        other = RingElement.coerce(other)
        coeffs = dict(self._coeffs)
        for mono, c in other._coeffs.items():
            coeffs[mono] = coeffs.get(mono, 0) + c
        return RingElement(coeffs)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement({mono: -c for mono, c in self._coeffs.items()})

    def __sub__(self, other: Scalar) -> "RingElement":
        return self + (-RingElement.coerce(other))

    def __rsub__(self, other: Scalar) -> "RingElement":
        return RingElement.coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "RingElement":
        other = RingElement.coerce(other)
        coeffs: Dict[Monomial, int] = {}
        for ma, ca in self._coeffs.items():
            for mb, cb in other._coeffs.items():
                mono = _monomial_mul(ma, mb)
                coeffs[mono] = coeffs.get(mono, 0) + ca * cb
        return RingElement(coeffs)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RingElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidArgumentError(f"ring powers need a nonnegative integer exponent, got {exponent}")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # equality on canonical forms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RingElement.from_int(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"RingElement({self})"

    def __str__(self) -> str:
        return render(self)


ZERO = RingElement()
ONE = RingElement.from_int(1)


def normalize(elem: RingElement) -> RingElement:
    """Rebuild an element from its own terms; the identity on canonical forms"""
    return RingElement(dict(elem.terms()))


def ring_eq(a: RingElement, b: RingElement) -> bool:
    return RingElement.coerce(a) == RingElement.coerce(b)


def gen(sym: GenSymbol) -> RingElement:
    return RingElement.from_symbol(sym)


def aff(chi: Character) -> RingElement:
    return gen(AffLine(chi))


def lefschetz(group: AbelianGroup) -> RingElement:
    return aff(group.trivial_character)


def sym_base(n: int) -> RingElement:
    """[Sym^n C]; n = 0 is the unit class"""
    if n == 0:
        return ONE
    return gen(SymBase(n))


def e0_twist(i: int, j: int) -> RingElement:
    return gen(E0Twist(i, j))


def product(factors: Iterable[RingElement]) -> RingElement:
    result = ONE
    for factor in factors:
        result = result * factor
    return result


def affine_space_class(chars: Sequence[Character]) -> RingElement:
    """[A^k, (lambda_1, ..., lambda_k)] = [A^1, lambda_1] ... [A^1, lambda_k]"""
    exponents: Dict[GenSymbol, int] = {}
    for chi in chars:
        sym = AffLine(chi)
        exponents[sym] = exponents.get(sym, 0) + 1
    return RingElement({_monomial(exponents): 1})


def regular_rep_class(group: AbelianGroup) -> RingElement:
    """[A^r, tau] split over all r characters, each once"""
    return affine_space_class(characters(group))


def e_m_class(i: int, m: int, group: AbelianGroup) -> RingElement:
    """[E_m, sigma_m] = [E_0, sigma_0][A^r, tau]^m over base degree n_i"""
    if not 1 <= i <= group.order:
        raise InvalidArgumentError(f"base index i must lie in [1, {group.order}], got {i}")
    if m < 0:
        raise InvalidArgumentError(f"m must be nonnegative, got {m}")
    return e0_twist(i, 1) * regular_rep_class(group) ** m


# Rendering

def render_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(str(sym) if e == 1 else f"{sym}^{e}" for sym, e in mono)


def render(elem: RingElement) -> str:
    if elem.is_zero():
        return "0"
    pieces = []
    for mono, c in elem.terms():
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = render_monomial(mono)
        else:
            body = f"{abs(c)}*{render_monomial(mono)}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


# JSON encodings

def symbol_to_json(sym: GenSymbol) -> Dict:
    if isinstance(sym, AffLine):
        return {"kind": "aff", "chi": list(sym.chi.residues)}
    if isinstance(sym, SymBase):
        return {"kind": "symc", "n": sym.n}
    if isinstance(sym, E0Twist):
        return {"kind": "e0", "i": sym.i, "j": sym.j}
    raise InvalidArgumentError(f"unknown generator {sym!r}")


def _malformed(what: str, err: Exception) -> InvalidArgumentError:
    return InvalidArgumentError(f"malformed {what} JSON: {type(err).__name__}: {err}")


def symbol_from_json(data: Dict, group: AbelianGroup) -> GenSymbol:
    try:
        kind = data.get("kind")
        if kind == "aff":
            return AffLine(group.character(data["chi"]))
        if kind == "symc":
            return SymBase(int(data["n"]))
        if kind == "e0":
            sym = E0Twist(int(data["i"]), int(data["j"]))
        else:
            raise InvalidArgumentError(f"unknown generator kind {kind!r}")
    except EquimotError:
        raise
    except (AttributeError, KeyError, TypeError, ValueError) as e:
        raise _malformed("generator", e) from e
    if sym.i > group.order or sym.j > group.order:
        raise InvalidArgumentError(f"{sym} needs indices in [1, {group.order}] for the group {group}")
    return sym


def monomial_to_json(mono: Monomial) -> List[Dict]:
    return [{"gen": symbol_to_json(sym), "exp": e} for sym, e in mono]


def monomial_from_json(data: List[Dict], group: AbelianGroup) -> Monomial:
    if not isinstance(data, list):
        raise InvalidArgumentError(f"a monomial is a list of generator powers, got {type(data).__name__}")
    exponents: Dict[GenSymbol, int] = {}
    try:
        for entry in data:
            sym = symbol_from_json(entry["gen"], group)
            exp = int(entry["exp"])
            if exp < 0:
                raise InvalidArgumentError(f"negative exponent {exp} in monomial")
            exponents[sym] = exponents.get(sym, 0) + exp
    except EquimotError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise _malformed("monomial", e) from e
    return _monomial(exponents)


def element_to_json(elem: RingElement) -> List[Dict]:
    return [{"coef": str(c), "mon": monomial_to_json(mono)} for mono, c in elem.terms()]


def element_from_json(data: List[Dict], group: AbelianGroup) -> RingElement:
    if not isinstance(data, list):
        raise InvalidArgumentError(f"a ring element is a list of terms, got {type(data).__name__}")
    coeffs: Dict[Monomial, int] = {}
    try:
        for entry in data:
            mono = monomial_from_json(entry["mon"], group)
            coeffs[mono] = coeffs.get(mono, 0) + int(entry["coef"])
    except EquimotError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise _malformed("ring element", e) from e
    return RingElement(coeffs)
