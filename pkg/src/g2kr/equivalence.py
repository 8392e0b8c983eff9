"""Equivalence classes on the quad-index regions.

Two quad indices are equivalent when they share the same (weight, grade)
pair, which happens exactly when they differ by an integer multiple of a
family-specific shift vector.  The canonical representatives r_{j,k,s}
below enumerate the classes exactly once, their class sizes have closed
forms, and `verify_partition` machine-checks all of that for a given m.
Rebuilding the graded character from representatives weighted by the
closed-form sizes gives a route to the graded character independent of
full region enumeration.
"""

from __future__ import annotations

from typing import Iterator

from .kr import (
    Family,
    GradedDecomposition,
    QuadIndex,
    enumerate_region,
    in_region,
    wt_gr,
)

_SHIFTS = {
    Family.U1: (3, -1, 0, -1),
    Family.T2: (1, 0, 1, -1),
}


def shift_vector(family: Family) -> QuadIndex:
    """Generator of the equivalence: wt and gr are constant along it."""
    try:
        return _SHIFTS[family]
    except KeyError:
        raise ValueError(
            f"family {family.value} is ladder-indexed and has no classes"
        ) from None


def _u1_residues(j: int, k: int) -> tuple[int, int]:
    # j - 2k = r1 + 3*r4 with 0 <= r1 <= 2.
    r4, r1 = divmod(j - 2 * k, 3)
    return r1, r4


def validate_key(family: Family, m: int, j: int, k: int, s: int) -> None:
    """Raise ValueError naming the violated inequality, if any."""
    if min(j, k, s) < 0:
        raise ValueError(f"negative class key (j={j}, k={k}, s={s})")
    if family is Family.U1:
        m0, m1 = divmod(m, 3)
        if k > m0:
            raise ValueError(f"k <= floor(m/3) fails: k={k}, m={m}")
        if not 2 * k <= j <= m - k:
            raise ValueError(f"2k <= j <= m-k fails: j={j}, k={k}, m={m}")
        if s > k:
            raise ValueError(f"s <= k fails: s={s}, k={k}")
        r1, r4 = _u1_residues(j, k)
        if r4 + k > m0 + (m1 - 2 * r1) // 3:
            raise ValueError(
                "zero-coefficient key (r4 + k <= floor(m/3) + "
                f"floor((m mod 3 - 2*r1)/3) fails): j={j}, k={k}, m={m}"
            )
    elif family is Family.T2:
        if j + k > m:
            raise ValueError(f"j + k <= m fails: j={j}, k={k}, m={m}")
        if s > j:
            raise ValueError(f"s <= j fails: s={s}, j={j}")
    else:
        raise ValueError(
            f"family {family.value} is ladder-indexed and has no classes"
        )


def representative(family: Family, m: int, j: int, k: int, s: int) -> QuadIndex:
    """Canonical region point of the class labelled (j, k, s)."""
    validate_key(family, m, j, k, s)
    if family is Family.U1:
        r1, r4 = _u1_residues(j, k)
        return (r1, k + r4 - s, s, r4)
    return (j - s, s, 0, m - j - k)


def class_size_formula(family: Family, m: int, j: int, k: int, s: int) -> int:
    """Closed form for the number of region points in the class."""
    validate_key(family, m, j, k, s)
    if family is Family.U1:
        return 1 + (j - 2 * k) // 3 + min(0, (m + k - 2 * j) // 3)
    return 1 + min(k, m - j - k)


def _region_constraints(family: Family, m: int, r) -> list[int]:
    # The region as a list of affine values, each required >= 0.
    r1, r2, r3, r4 = r
    if family is Family.U1:
        return [r1, r2, r3, r4, r2 - r4, m - 2 * r1 - 3 * r2 - 3 * r3]
    return [r1, r2, r3, r4, r1 - r3, m - r1 - r2 - r3 - r4]


def _shift_interval(family: Family, m: int, r) -> tuple[int, int]:
    """Closed-form bounds on steps along the shift line keeping r in region."""
    shift = shift_vector(family)
    at0 = _region_constraints(family, m, r)
    at1 = _region_constraints(
        family, m, tuple(a + d for a, d in zip(r, shift))
    )
    lo, hi = None, None
    for g0, g1 in zip(at0, at1):
        slope = g1 - g0
        if slope == 0:
            assert g0 >= 0
        elif slope > 0:
            bound = -(g0 // slope)  # ceil(-g0 / slope)
            lo = bound if lo is None else max(lo, bound)
        else:
            bound = g0 // -slope  # floor(g0 / -slope)
            hi = bound if hi is None else min(hi, bound)
    assert lo is not None and hi is not None and lo <= 0 <= hi
    return lo, hi


def class_members(family: Family, m: int, r) -> list[QuadIndex]:
    """Region points on the shift line through r, in increasing step order.

    Region membership is affine in the step, hence an interval; the walk
    in both directions finds the whole class, and the result is asserted
    against the closed-form interval bounds.
    """
    r = tuple(r)
    if not in_region(family, m, r):
        raise ValueError(f"{r} is not in the {family.value} region for m={m}")
    shift = shift_vector(family)
    down = []
    cur = tuple(a - d for a, d in zip(r, shift))
    while in_region(family, m, cur):
        down.append(cur)
        cur = tuple(a - d for a, d in zip(cur, shift))
    up = []
    cur = tuple(a + d for a, d in zip(r, shift))
    while in_region(family, m, cur):
        up.append(cur)
        cur = tuple(a + d for a, d in zip(cur, shift))
    lo, hi = _shift_interval(family, m, r)
    assert (len(down), len(up)) == (-lo, hi)
    return down[::-1] + [r] + up


def class_keys(family: Family, m: int) -> Iterator[tuple[int, int, int]]:
    """All valid (j, k, s) keys for the family at this m."""
    if family is Family.U1:
        m0, m1 = divmod(m, 3)
        for k in range(m0 + 1):
            for j in range(2 * k, m - k + 1):
                r1, r4 = _u1_residues(j, k)
                if r4 + k > m0 + (m1 - 2 * r1) // 3:
                    continue
                for s in range(k + 1):
                    yield j, k, s
    elif family is Family.T2:
        for j in range(m + 1):
            for k in range(m - j + 1):
                for s in range(j + 1):
                    yield j, k, s
    else:
        raise ValueError(
            f"family {family.value} is ladder-indexed and has no classes"
        )


def verify_partition(family: Family, m: int) -> list[str]:
    """Check that the representative classes partition the region.

    Empty report iff the classes of all valid keys are pairwise disjoint,
    their union is the whole region, and every class size matches
    `class_size_formula`.
    """
    failures: list[str] = []
    region = set(enumerate_region(family, m))
    seen: dict[QuadIndex, tuple[int, int, int]] = {}
    for j, k, s in class_keys(family, m):
        try:
            rep = representative(family, m, j, k, s)
            members = class_members(family, m, rep)
        except ValueError as exc:
            failures.append(f"m={m} key ({j},{k},{s}): {exc}")
            continue
        expected = class_size_formula(family, m, j, k, s)
        if len(members) != expected:
            failures.append(
                f"m={m} key ({j},{k},{s}): class has {len(members)} points, "
                f"formula gives {expected}"
            )
        for point in members:
            if point in seen:
                failures.append(
                    f"m={m} point {point} in classes {seen[point]} "
                    f"and ({j},{k},{s})"
                )
            else:
                seen[point] = (j, k, s)
    missing = region - seen.keys()
    if missing:
        failures.append(
            f"m={m}: {len(missing)} region points uncovered, e.g. "
            f"{sorted(missing)[0]}"
        )
    stray = seen.keys() - region
    if stray:
        failures.append(
            f"m={m}: {len(stray)} class points outside region, e.g. "
            f"{sorted(stray)[0]}"
        )
    return failures


def rebuild_graded_character(family: Family, m: int) -> GradedDecomposition:
    """Graded character from representatives weighted by class sizes.

    Independent of `kr_graded_character`: it never enumerates the region,
    only the class keys and the closed-form sizes.
    """
    g = GradedDecomposition()
    for j, k, s in class_keys(family, m):
        rep = representative(family, m, j, k, s)
        weight, grade = wt_gr(family, m, rep)
        g.add(grade, weight, class_size_formula(family, m, j, k, s))
    return g
