"""
Finite abelian groups as products of cyclic groups

Elements and characters are residue tuples over the same divisors. Values of
characters are kept as exponents of an abstract primitive E-th root of unity,
E being the group exponent, so nothing here is ever floating point.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Sequence, Tuple

from errors import InvalidArgumentError, InvalidGroupError

logger = logging.getLogger(__name__)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d_1 x ... x Z/d_m"""
    divisors: Tuple[int, ...]

    @property
    def order(self) -> int:
        return reduce(lambda acc, d: acc * d, self.divisors, 1)

    @property
    def exponent(self) -> int:
        return reduce(_lcm, self.divisors, 1)

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def element(self, residues: Sequence[int]) -> "GroupElement":
        return GroupElement.of(self.divisors, residues)

    def character(self, residues: Sequence[int]) -> "Character":
        return Character.of(self.divisors, residues)

    @property
    def identity(self) -> "GroupElement":
        return self.element([0] * self.rank)

    @property
    def trivial_character(self) -> "Character":
        return self.character([0] * self.rank)

    def __str__(self) -> str:
        return "[" + ",".join(str(d) for d in self.divisors) + "]"


def _check_shape(divisors: Tuple[int, ...], residues: Sequence[int]) -> Tuple[int, ...]:
    if len(residues) != len(divisors):
        raise InvalidArgumentError(
            f"expected {len(divisors)} residues for group {list(divisors)}, got {list(residues)}"
        )
    return tuple(int(x) % d for x, d in zip(residues, divisors))


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element g, componentwise reduced"""
    residues: Tuple[int, ...]
    divisors: Tuple[int, ...]

    @classmethod
    def of(cls, divisors: Sequence[int], residues: Sequence[int]) -> "GroupElement":
        divisors = tuple(divisors)
        return cls(_check_shape(divisors, residues), divisors)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.divisors)

    def is_identity(self) -> bool:
        return not any(self.residues)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.residues) + ")"


@dataclass(frozen=True, order=True)
class Character:
    """A character chi of the dual group, same shape as the group elements"""
    residues: Tuple[int, ...]
    divisors: Tuple[int, ...]

    @classmethod
    def of(cls, divisors: Sequence[int], residues: Sequence[int]) -> "Character":
        divisors = tuple(divisors)
        return cls(_check_shape(divisors, residues), divisors)

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.divisors)

    def is_trivial(self) -> bool:
        return not any(self.residues)

    def __mul__(self, other: "Character") -> "Character":
        return char_mul(self, other)

    def __invert__(self) -> "Character":
        return char_inv(self)

    def __pow__(self, k: int) -> "Character":
        return char_pow(self, k)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.residues) + ")"


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """zeta_E^e for a fixed abstract primitive E-th root of unity"""
    e: int
    exponent: int

    def is_one(self) -> bool:
        return self.e == 0

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        if self.exponent != other.exponent:
            raise InvalidArgumentError("roots of unity of different exponents")
        return RootOfUnity((self.e + other.e) % self.exponent, self.exponent)


def make_group(divisors: Iterable[int]) -> AbelianGroup:
    """Build a group from its cyclic factors; an empty list is the trivial group"""
    divisors = tuple(int(d) for d in divisors)
    bad = [d for d in divisors if d <= 0]
    if bad:
        raise InvalidGroupError(f"cyclic factors must be >= 1, got {list(divisors)}")
    if not divisors:
        divisors = (1,)
    group = AbelianGroup(divisors)
    logger.debug(f"group {group}: order {group.order}, exponent {group.exponent}")
    return group


def characters(group: AbelianGroup) -> List[Character]:
    """All r characters, ascending lexicographic; the trivial character comes first"""
    return [
        Character(tuple(res), group.divisors)
        for res in itertools.product(*(range(d) for d in group.divisors))
    ]


def group_elements(group: AbelianGroup) -> List[GroupElement]:
    """All r elements, ascending lexicographic; the identity comes first"""
    return [
        GroupElement(tuple(res), group.divisors)
        for res in itertools.product(*(range(d) for d in group.divisors))
    ]


def _same_group(a, b) -> None:
    if a.divisors != b.divisors:
        raise InvalidArgumentError(
            f"{a} and {b} belong to different groups {list(a.divisors)} and {list(b.divisors)}"
        )


def pair(chi: Character, g: GroupElement) -> RootOfUnity:
    """chi(g) as an exponent of zeta_E"""
    _same_group(chi, g)
    exponent = chi.group.exponent
    e = sum(c * x * (exponent // d) for c, x, d in zip(chi.residues, g.residues, chi.divisors))
    return RootOfUnity(e % exponent, exponent)


def char_mul(chi: Character, other: Character) -> Character:
    _same_group(chi, other)
    return Character.of(chi.divisors, [a + b for a, b in zip(chi.residues, other.residues)])


def char_inv(chi: Character) -> Character:
    return Character.of(chi.divisors, [-a for a in chi.residues])


def char_pow(chi: Character, k: int) -> Character:
    return Character.of(chi.divisors, [a * k for a in chi.residues])


def char_order(chi: Character) -> int:
    """Smallest k >= 1 with chi^k trivial"""
    return reduce(
        _lcm,
        (d // math.gcd(a, d) for a, d in zip(chi.residues, chi.divisors)),
        1,
    )


def character_index(chi: Character) -> int:
    """Position of chi in the canonical order"""
    index = 0
    for a, d in zip(chi.residues, chi.divisors):
        index = index * d + a
    return index


def character_at(group: AbelianGroup, index: int) -> Character:
    """Inverse of character_index"""
    if not 0 <= index < group.order:
        raise InvalidArgumentError(
            f"character index out of range: {index} not in [0, {group.order})"
        )
    residues = []
    for d in reversed(group.divisors):
        index, a = divmod(index, d)
        residues.append(a)
    return group.character(list(reversed(residues)))


# JSON encodings

def group_to_json(group: AbelianGroup) -> Dict:
    return {"divisors": list(group.divisors)}


def group_from_json(data: Dict) -> AbelianGroup:
    return make_group(data.get("divisors", []))


def residues_to_json(value) -> Dict:
    """Encode a GroupElement or Character"""
    return {"residues": list(value.residues)}


def element_from_json(group: AbelianGroup, data: Dict) -> GroupElement:
    return group.element(data["residues"])


def character_from_json(group: AbelianGroup, data: Dict) -> Character:
    return group.character(data["residues"])
