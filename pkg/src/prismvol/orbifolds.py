"""Compact 2-orbifolds, Riemann-Hurwitz accounting, and degree equations.

A closed or bounded 2-orbifold here is an underlying compact surface with a
finite multiset of cone points.  Its orbifold Euler characteristic is

    chi_orb = chi(underlying surface) - sum over cones of (1 - 1/index).

A horizontal surface F in a Seifert fibered space projects to the base
orbifold B as a branched cover whose local degree over a cone point equals
the cone index, which forces two conditions on the covering degree d:

    chi(F) = d * chi_orb(B),  and  every cone index divides d.

``prism_case_analysis`` runs that degree equation over the five base
orbifolds obtained by removing one fiber (regular or exceptional) from
either fibration of a prism manifold in the family parametrized by n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import frac_str


class InfiniteSolutionsError(ValueError):
    """Raised when a degree equation degenerates to 0 == d * 0."""


@dataclass(frozen=True)
class SurfaceData:
    """A compact connected surface: genus, boundary circles, orientability.

    For non-orientable surfaces ``genus`` counts cross-caps.
    """

    genus: int
    boundary: int
    orientable: bool = True

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count must be non-negative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable surface needs at least one cross-cap")

    @property
    def euler(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    def to_json(self) -> dict:
        return {
            "orientable": self.orientable,
            "genus": self.genus,
            "boundary": self.boundary,
            "euler": self.euler,
        }


@dataclass(frozen=True)
class Orbifold2D:
    """A compact 2-orbifold with cone singularities only.

    ``cones`` is the multiset of cone indices (each >= 2), stored sorted.
    """

    orientable: bool
    genus: int
    boundary: int
    cones: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count must be non-negative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable base needs at least one cross-cap")
        cones = tuple(sorted(self.cones))
        if any(not isinstance(c, int) or c < 2 for c in cones):
            raise ValueError("cone indices must be integers >= 2")
        object.__setattr__(self, "cones", cones)

    @property
    def underlying_euler(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus - self.boundary
        return 2 - self.genus - self.boundary

    def to_json(self) -> dict:
        return {
            "orientable": self.orientable,
            "genus": self.genus,
            "boundary": self.boundary,
            "cones": list(self.cones),
        }


def orbifold_from_json(data: object) -> Orbifold2D:
    if not isinstance(data, dict):
        raise ValueError("orbifold: expected a JSON object")
    for key in ("orientable", "genus", "boundary"):
        if key not in data:
            raise ValueError(f"orbifold: missing field {key!r}")
    cones = data.get("cones", [])
    if not isinstance(cones, list):
        raise ValueError("orbifold: field 'cones' must be an array of indices")
    return Orbifold2D(
        orientable=bool(data["orientable"]),
        genus=int(data["genus"]),
        boundary=int(data["boundary"]),
        cones=tuple(cones),
    )


def chi_orb(b: Orbifold2D) -> Fraction:
    """Orbifold Euler characteristic, exact."""
    total = Fraction(b.underlying_euler)
    for index in b.cones:
        total -= 1 - Fraction(1, index)
    return total


def riemann_hurwitz_cover(
    base: SurfaceData, degree: int, branch_local_degrees: list[tuple[int, ...]]
) -> SurfaceData:
    """The surface that covers ``base`` with the given branching data.

    Each entry of ``branch_local_degrees`` is the multiset of local degrees
    over one branch point; it must partition ``degree``.  The cover's Euler
    characteristic is  degree * chi(base) - sum(local - 1).

    Local degrees alone do not determine boundary behavior in general, so the
    supported cases are exactly the ones with a forced answer:

    * degree 1 with no genuine branching (the identity);
    * degree 2 over an orientable base with at most one boundary circle and
      at least one genuine branch point.  Branch points have Z/2 monodromy,
      so over a one-boundary base the boundary preimage is connected iff the
      number of genuine branch points is odd, and over a closed base that
      number must be even for the cover to exist at all.
    """
    if degree < 1:
        raise ValueError("degree must be a positive integer")
    branch = [tuple(sorted(point)) for point in branch_local_degrees]
    for point in branch:
        if any(local < 1 for local in point):
            raise ValueError(f"local degrees must be positive, got {point}")
        if sum(point) != degree:
            raise ValueError(
                f"local degrees {point} do not partition the degree {degree}"
            )
    genuine = sum(1 for point in branch if len(point) < degree)
    total_defect = sum(local - 1 for point in branch for local in point)
    chi_cover = degree * base.euler - total_defect

    if degree == 1:
        return SurfaceData(base.genus, base.boundary, base.orientable)
    if not base.orientable:
        raise ValueError("covers of non-orientable bases are not supported here")
    if degree == 2:
        if genuine == 0:
            raise ValueError("an unbranched double cover is not determined by degree data")
        if base.boundary == 0:
            if genuine % 2:
                raise ValueError(
                    "no double cover of a closed surface has an odd number of branch points"
                )
            boundary = 0
        elif base.boundary == 1:
            boundary = 1 if genuine % 2 else 2
        else:
            raise ValueError(
                "double covers of multi-boundary bases need monodromy data"
            )
        genus2, rem = divmod(2 - boundary - chi_cover, 2)
        assert rem == 0
        return SurfaceData(genus2, boundary, True)
    raise ValueError("degrees above 2 need monodromy data beyond local degrees")


def orientation_double_cover(b: Orbifold2D) -> Orbifold2D:
    """Orientation double cover of a non-orientable orbifold.

    The underlying surface with g cross-caps and m boundary circles lifts to
    the orientable surface of genus g - 1 with 2m boundary circles; every
    cone point has two preimages of the same index.
    """
    if b.orientable:
        raise ValueError("the orbifold is already orientable")
    return Orbifold2D(
        orientable=True,
        genus=b.genus - 1,
        boundary=2 * b.boundary,
        cones=b.cones + b.cones,
    )


def horizontal_degree_solutions(
    f: SurfaceData, b: Orbifold2D, require_cone_divisibility: bool = True
) -> list[int]:
    """Positive integer degrees d with chi(f) == d * chi_orb(b).

    With ``require_cone_divisibility`` every cone index must also divide d
    (the local degree over a cone point equals its index).  When
    chi_orb(b) != 0 there is at most one solution.  When chi_orb(b) == 0 the
    equation is either empty (chi(f) != 0) or satisfied by every degree, in
    which case ``InfiniteSolutionsError`` is raised.
    """
    if not b.orientable:
        raise ValueError(
            "base is non-orientable; use nonorientable_base_solutions"
        )
    chi_f = f.euler
    chi_b = chi_orb(b)
    if chi_b == 0:
        if chi_f == 0:
            raise InfiniteSolutionsError(
                "chi(F) = 0 = chi_orb(B): every degree solves the equation"
            )
        return []
    ratio = Fraction(chi_f, 1) / chi_b
    if ratio.denominator != 1 or ratio <= 0:
        return []
    d = int(ratio)
    if require_cone_divisibility and any(d % index for index in b.cones):
        return []
    return [d]


def nonorientable_base_solutions(
    f: SurfaceData, b: Orbifold2D, require_cone_divisibility: bool = True
) -> list[int]:
    """Degrees of covers of a non-orientable base by an orientable surface.

    An orientable cover factors through the orientation double cover, so the
    degrees over ``b`` are exactly twice the degrees over that cover, where
    each duplicated cone index must divide as usual.  (With all cone indices
    equal to 2 this is the even-degree constraint: the degree over the
    orientation cover itself must be even.)
    """
    if b.orientable:
        raise ValueError("base is orientable; use horizontal_degree_solutions")
    if not f.orientable:
        raise ValueError("the covering surface must be orientable here")
    cover = orientation_double_cover(b)
    return [2 * d for d in horizontal_degree_solutions(f, cover, require_cone_divisibility)]


@dataclass(frozen=True)
class CaseResult:
    """One row of the five-case fiber-removal analysis."""

    case: int
    orbifold: Orbifold2D
    chi_orb: Fraction
    degrees: tuple[int, ...]
    chi_only_degrees: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "orbifold": self.orbifold.to_json(),
            "chi_orb": frac_str(self.chi_orb),
            "degrees": list(self.degrees),
            "chi_only_degrees": list(self.chi_only_degrees),
        }


def prism_case_analysis(n: int, fiber_surface: SurfaceData) -> list[CaseResult]:
    """Degree equations over the five fiber-removed prism base orbifolds.

    Removing one fiber from either fibration of the prism manifold with
    parameter n leaves a fibered solid-torus complement over one of five
    bounded base orbifolds (mu = |4n - 1|):

      1. Moebius band, no cones        (cross-cap fibration, exceptional fiber)
      2. Moebius band, one cone {2}    (cross-cap fibration, regular fiber)
      3. disk, cones {2, 2, mu}        (orientable fibration, regular fiber)
      4. disk, cones {2, 2}            (orientable fibration, the mu fiber)
      5. disk, cones {2, mu}           (orientable fibration, an index-2 fiber)

    For each base the degree equation for ``fiber_surface`` is solved with
    and without the cone-divisibility requirement; ``degrees`` is the honest
    solution set, ``chi_only_degrees`` drops divisibility so near-misses stay
    visible.
    """
    from . import seifert  # runtime import: seifert uses this module's types

    oo, on = seifert.prism_fibrations(n)
    mu = abs(4 * n - 1)
    idx2_on = next(i for i, (_, alpha) in enumerate(on.fibers) if alpha == 2)
    idx2_oo = next(i for i, (_, alpha) in enumerate(oo.fibers) if alpha == 2)
    idxmu_oo = next(i for i, (_, alpha) in enumerate(oo.fibers) if alpha == mu)
    bases = [
        seifert.remove_fiber(on, idx2_on),
        seifert.remove_fiber(on, "regular"),
        seifert.remove_fiber(oo, "regular"),
        seifert.remove_fiber(oo, idxmu_oo),
        seifert.remove_fiber(oo, idx2_oo),
    ]
    results = []
    for case, base in enumerate(bases, start=1):
        solve = horizontal_degree_solutions if base.orientable else nonorientable_base_solutions
        degrees = tuple(solve(fiber_surface, base))
        chi_only = tuple(solve(fiber_surface, base, require_cone_divisibility=False))
        results.append(CaseResult(case, base, chi_orb(base), degrees, chi_only))
    return results


def case_analysis_report(n: int, fiber_surface: SurfaceData) -> dict:
    """JSON-ready report of ``prism_case_analysis``."""
    results = prism_case_analysis(n, fiber_surface)
    return {
        "n": n,
        "cases": [r.to_json() for r in results],
        "admits_horizontal": any(r.degrees for r in results),
    }
