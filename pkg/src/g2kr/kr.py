"""Graded Kirillov-Reshetikhin characters for G2, in two independent forms.

Four families, labelled by untwisted/twisted and by the fundamental node:
U1 and U2 for the current algebra, T1 and T2 for the twisted current
algebra.  U2 and T1 are "ladders": grade n carries exactly V((m-n)*omega).
U1 and T2 sum over lattice regions in Z+^4:

    U1: wt(r) = (m - r1 - 3r2 - 3r3)*omega1 + (r2 + r3 - r4)*omega2,
        gr(r) = r1 + r2 + 2r3 + 2r4,
        over A1 = {r >= 0 : r4 <= r2, 2r1 + 3r2 + 3r3 <= m};
    T2: wt(r) = (r1 + r2 - r3)*omega1 + (m - r1 - r2 - r4)*omega2,
        gr(r) = r1 + 2r2 + 2r3 + 3r4,
        over A2 = {r >= 0 : r3 <= r1, r1 + r2 + r3 + r4 <= m}.

The second form is a generating function whose coefficients count the
points of equivalence classes inside the region (see the equivalence
module); `compare` checks the two forms against each other exactly.
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import Iterable

from .characters import Character, irreducible_character, weyl_dim
from .weights import OMEGA1, OMEGA2, Weight, is_dominant

logger = logging.getLogger(__name__)

QuadIndex = tuple[int, int, int, int]


class Family(Enum):
    """Module family: (un)twisted current algebra times fundamental node."""

    U1 = "u1"
    U2 = "u2"
    T1 = "t1"
    T2 = "t2"

    @property
    def fundamental(self) -> Weight:
        """The fundamental weight omega_i the family is built on."""
        return OMEGA1 if self in (Family.U1, Family.T1) else OMEGA2

    @property
    def quad_indexed(self) -> bool:
        """True for the two families summed over a region of Z+^4."""
        return self in (Family.U1, Family.T2)


class GradedDecomposition:
    """Map grade -> {dominant weight -> multiplicity}, canonical sparse form.

    No zero multiplicities and no empty grades are stored, so `==` is
    equality of graded characters in the irreducible basis.
    """

    __slots__ = ("_grades",)

    def __init__(self):
        self._grades: dict[int, dict[Weight, int]] = {}

    def add(self, grade: int, weight: Weight, mult: int = 1) -> None:
        if mult == 0:
            return
        component = self._grades.setdefault(grade, {})
        m = component.get(weight, 0) + mult
        if m:
            component[weight] = m
        else:
            del component[weight]
            if not component:
                del self._grades[grade]

    def grades(self) -> list[int]:
        return sorted(self._grades)

    def component(self, grade: int) -> dict[Weight, int]:
        return dict(self._grades.get(grade, {}))

    def multiplicity(self, grade: int, weight: Weight) -> int:
        return self._grades.get(grade, {}).get(weight, 0)

    def items(self) -> Iterable[tuple[int, Weight, int]]:
        """All (grade, weight, multiplicity) triples, sorted."""
        for grade in sorted(self._grades):
            component = self._grades[grade]
            for weight in sorted(component):
                yield grade, weight, component[weight]

    def __bool__(self):
        return bool(self._grades)

    def __eq__(self, other):
        return (
            isinstance(other, GradedDecomposition)
            and self._grades == other._grades
        )

    def __repr__(self):
        return f"GradedDecomposition({self._grades!r})"


def wt_gr(family: Family, m: int, r) -> tuple[Weight, int]:
    """(weight, grade) of a quad index for the quad-indexed families."""
    r1, r2, r3, r4 = r
    if family is Family.U1:
        return (
            Weight(m - r1 - 3 * r2 - 3 * r3, r2 + r3 - r4),
            r1 + r2 + 2 * r3 + 2 * r4,
        )
    if family is Family.T2:
        return (
            Weight(r1 + r2 - r3, m - r1 - r2 - r4),
            r1 + 2 * r2 + 2 * r3 + 3 * r4,
        )
    raise ValueError(
        f"family {family.value} is ladder-indexed, not quad-indexed"
    )


def enumerate_region(family: Family, m: int) -> list[QuadIndex]:
    """All quad indices of the family's region, in lexicographic order."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    out: list[QuadIndex] = []
    if family is Family.U1:
        for r1 in range(m // 2 + 1):
            for r2 in range((m - 2 * r1) // 3 + 1):
                for r3 in range((m - 2 * r1 - 3 * r2) // 3 + 1):
                    for r4 in range(r2 + 1):
                        out.append((r1, r2, r3, r4))
    elif family is Family.T2:
        for r1 in range(m + 1):
            for r2 in range(m - r1 + 1):
                for r3 in range(min(r1, m - r1 - r2) + 1):
                    for r4 in range(m - r1 - r2 - r3 + 1):
                        out.append((r1, r2, r3, r4))
    else:
        raise ValueError(
            f"family {family.value} is ladder-indexed, not quad-indexed"
        )
    # The defining inequalities force dominance of every indexed weight.
    assert all(is_dominant(wt_gr(family, m, r)[0]) for r in out)
    return out


def in_region(family: Family, m: int, r) -> bool:
    """Membership test for the family's region."""
    r1, r2, r3, r4 = r
    if min(r1, r2, r3, r4) < 0:
        return False
    if family is Family.U1:
        return r4 <= r2 and 2 * r1 + 3 * r2 + 3 * r3 <= m
    if family is Family.T2:
        return r3 <= r1 and r1 + r2 + r3 + r4 <= m
    raise ValueError(
        f"family {family.value} is ladder-indexed, not quad-indexed"
    )


def _ladder(family: Family, m: int) -> GradedDecomposition:
    g = GradedDecomposition()
    fund = family.fundamental
    for r in range(m + 1):
        g.add(m - r, r * fund, 1)
    return g


def kr_graded_character(family: Family, m: int) -> GradedDecomposition:
    """Closed-form graded character in the irreducible basis."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if not family.quad_indexed:
        return _ladder(family, m)
    g = GradedDecomposition()
    for r in enumerate_region(family, m):
        weight, grade = wt_gr(family, m, r)
        g.add(grade, weight, 1)
    return g


def conjecture_coefficient(family, m, j, k, negatives=None):
    """Multiplicity factor of the generating function at (j, k).

    Defined for arbitrary j, k >= 0 and clamped below at zero; a strictly
    negative pre-clamp value is logged and, when a `negatives` list is
    supplied, recorded as (family, m, j, k, value).
    """
    if family is Family.U1:
        raw = 1 + (j - 2 * k) // 3 + min(0, (m + k - 2 * j) // 3)
    elif family is Family.T2:
        raw = 1 + min(k, m - j - k)
    else:
        raise ValueError(
            f"family {family.value} has no generating-function coefficient"
        )
    if raw < 0:
        logger.warning(
            "negative pre-clamp coefficient %d for %s at m=%d, j=%d, k=%d",
            raw, family.value, m, j, k,
        )
        if negatives is not None:
            negatives.append((family, m, j, k, raw))
        return 0
    return raw


def conjecture_graded_character(
    family: Family, m: int, negatives: list | None = None
) -> GradedDecomposition:
    """Generating-function form of the graded character.

    For U2/T1 the expression is the same ladder as the closed form.  For
    U1/T2 it runs over (j, k) and spreads `conjecture_coefficient` copies
    of one irreducible across a band of grades.
    """
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    if not family.quad_indexed:
        return _ladder(family, m)
    g = GradedDecomposition()
    if family is Family.U1:
        for k in range(m // 3 + 1):
            for j in range(2 * k, m - k + 1):
                coeff = conjecture_coefficient(family, m, j, k, negatives)
                if coeff == 0:
                    continue
                weight = Weight(m - j - k, k)
                for s in range(k + 1):
                    g.add(j - k + s, weight, coeff)
    else:
        for j in range(m + 1):
            for k in range(m - j + 1):
                coeff = conjecture_coefficient(family, m, j, k, negatives)
                if coeff == 0:
                    continue
                weight = Weight(j, k)
                base = 3 * m - 2 * j - 3 * k
                for s in range(j + 1):
                    g.add(base + s, weight, coeff)
    return g


def compare(
    a: GradedDecomposition, b: GradedDecomposition
) -> list[tuple[int, Weight, int, int]]:
    """All (grade, weight, mult_a, mult_b) where the two decompositions differ.

    Empty list iff a and b agree as functions (grade, weight) -> multiplicity.
    """
    keys = {(g, w) for g, w, _ in a.items()} | {(g, w) for g, w, _ in b.items()}
    diffs = []
    for grade, weight in sorted(keys):
        ma = a.multiplicity(grade, weight)
        mb = b.multiplicity(grade, weight)
        if ma != mb:
            diffs.append((grade, weight, ma, mb))
    return diffs


def expand_weights(g: GradedDecomposition) -> dict[int, Character]:
    """Expand each grade through the irreducible characters."""
    out: dict[int, Character] = {}
    for grade in g.grades():
        total = Character()
        for weight, mult in g.component(grade).items():
            total = total + irreducible_character(weight).scaled(mult)
        out[grade] = total
    return out


def graded_dimensions(g: GradedDecomposition) -> list[tuple[int, int]]:
    """(grade, total dimension) pairs, sorted by grade."""
    return [
        (
            grade,
            sum(m * weyl_dim(w) for w, m in g.component(grade).items()),
        )
        for grade in g.grades()
    ]
