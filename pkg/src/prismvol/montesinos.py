"""Montesinos links and their double branched covers.

A Montesinos link is determined here by a genus g >= 0 and a list of
rational tangles beta/alpha.  Its double branched cover is a Seifert fibered
space read off directly from the data: over the sphere with the tangle
fractions as exceptional fibers when g = 0, over the non-orientable genus-g
surface otherwise.  Two-tangle data always covers to a lens space (an
orientable-base genus-0 symbol with at most two exceptional fibers), which is
what excludes twist knots as branching sets for the prism family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import seifert
from .seifert import SeifertSymbol, normalize


@dataclass(frozen=True)
class MontesinosLink:
    genus: int
    tangles: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError("genus must be non-negative")
        tangles = tuple((int(b), int(a)) for b, a in self.tangles)
        if not tangles:
            raise ValueError("a Montesinos link needs at least one tangle")
        for beta, alpha in tangles:
            if alpha < 1:
                raise ValueError(f"tangle ({beta}, {alpha}): alpha must be >= 1")
            if math.gcd(beta, alpha) != 1:
                raise ValueError(f"tangle ({beta}, {alpha}) is not reduced")
        object.__setattr__(self, "tangles", tangles)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "tangles": [[beta, alpha] for beta, alpha in self.tangles],
        }


def link_from_json(data: object) -> MontesinosLink:
    if not isinstance(data, dict):
        raise ValueError("montesinos link: expected a JSON object")
    for key in ("genus", "tangles"):
        if key not in data:
            raise ValueError(f"montesinos link: missing field {key!r}")
    tangles = data["tangles"]
    if not isinstance(tangles, list):
        raise ValueError("montesinos link: field 'tangles' must be an array of pairs")
    pairs = []
    for i, pair in enumerate(tangles):
        if not isinstance(pair, list) or len(pair) != 2 or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in pair
        ):
            raise ValueError(
                f"montesinos link: tangles[{i}] must be a [beta, alpha] integer pair"
            )
        pairs.append((pair[0], pair[1]))
    return MontesinosLink(int(data["genus"]), tuple(pairs))


def double_branched_cover(link: MontesinosLink) -> SeifertSymbol:
    """Normalized Seifert symbol of the double cover branched over the link."""
    base_class = seifert.OO if link.genus == 0 else seifert.ON
    return normalize(SeifertSymbol(base_class, link.genus, link.tangles))


def is_lens_space_symbol(s: SeifertSymbol) -> bool:
    """Whether the symbol is a lens-space one: orientable base of genus 0
    with at most two exceptional fibers after normalization."""
    ns = normalize(s)
    exceptional = sum(1 for _, alpha in ns.fibers if alpha >= 2)
    return ns.base_class == seifert.OO and ns.genus == 0 and exceptional <= 2


def ln_link(n: int) -> tuple[MontesinosLink, MontesinosLink]:
    """Two Montesinos presentations of the n-th branching link of the family.

    Defined for every integer n.  The double branched covers of the two
    presentations are the two prism fibrations whenever |4n - 1| >= 3; for
    the leftover parameters the cover degenerates to a lens-space symbol.
    """
    m = 4 * n - 1
    third = (-2, m) if m > 0 else (2, -m)
    spherical = MontesinosLink(0, ((1, 2), (-1, 2), third))
    crosscap = MontesinosLink(1, ((m, 2),))
    if abs(m) >= 3:
        expected = seifert.prism_fibrations(n)
        assert double_branched_cover(spherical) == expected[0]
        assert double_branched_cover(crosscap) == expected[1]
    return spherical, crosscap


def wn_link(m: int) -> MontesinosLink:
    """Two-tangle Montesinos data for the m-twist knot.

    Tangles 1/2 and m/(2m + 1), stored with positive alpha.  Only the
    two-tangle shape is consumed downstream: it guarantees the double
    branched cover is a lens space.
    """
    a = 2 * m + 1
    tangle = (m, a) if a > 0 else (-m, -a)
    return MontesinosLink(0, ((1, 2), tangle))
