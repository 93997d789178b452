"""Deduction engine for the torsion group DT of p-adic group rings.

DT here is the torsion subgroup of the relative K-group attached to a
p-adic group ring inside its maximal order.  The engine combines a
small base of known structure facts with functorial rules: quotient
maps are surjective on DT, restriction to an order-p subgroup is
surjective, and a weakly hybrid quotient induces an isomorphism.
Answers carry the labels of every statement used; "unknown" is a
legitimate verdict and is never silently strengthened.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .blocks import weakly_hybrid
from .chartable import character_table
from .citations import register
from .groups import FiniteGroup

DT_MAXIMAL = register(
    "dt-maximal-trivial",
    "If p does not divide |G| then Z_p[G] is a maximal order and its "
    "DT group is trivial.",
)
DT_CYCLIC_PRIME = register(
    "dt-cyclic-prime",
    "DT(Z_p[C_p]) is isomorphic to the multiplicative group of the "
    "field with p elements, a cyclic group of order p - 1.",
)
DT_CYCLIC_FOUR = register(
    "dt-cyclic-four",
    "DT(Z_2[C_4]) has order 2.",
)
DT_KLEIN_FOUR = register(
    "dt-klein-four",
    "DT(Z_2[C_2 x C_2]) has order 2.",
)
DT_INVERSION = register(
    "dt-inversion-trivial",
    "If A is abelian of odd order and an involution acts on A by "
    "inversion then DT(Z_2[A x| C_2]) is trivial; this covers C_2 "
    "and the dihedral groups of twice-odd order.",
)
DT_LOWER_BOUND = register(
    "dt-nonmaximal-lower-bound",
    "If DT(Z_p[G]) is trivial then either Z_p[G] is maximal or p = 2 "
    "and v_2(|G|) = 1.",
)
DT_QUOT_SURJECTIVE = register(
    "dt-quotient-surjective",
    "For every normal subgroup N the induced map DT(Z_p[G]) -> "
    "DT(Z_p[G/N]) is surjective.",
)
DT_WH_QUOT_ISO = register(
    "dt-weak-hybrid-quotient-iso",
    "If Z_p[G] is weakly N-hybrid then DT(Z_p[G]) is isomorphic to "
    "DT(Z_p[G/N]).",
)
DT_MAXIMALITY = register(
    "dt-maximality-consequence",
    "If DT(Z_p[G]) is a p-group then Z_p[G] is maximal or p = 2; if "
    "it is trivial then Z_p[G] is maximal or p = 2 and v_2(|G|) = 1.",
)


@dataclass(frozen=True)
class DTAssertion:
    """Engine verdict about DT(Z_p[G]).

    kind is one of trivial / cyclic / order / nontrivial /
    p-part-nontrivial / unknown, with `size` carrying the parameter
    of cyclic(k) and order(k).
    """

    kind: str
    size: Optional[int]
    citations: tuple
    derivation: tuple

    def triviality(self) -> str:
        # collapse to a three-valued answer
        if self.kind == "trivial":
            return "trivial"
        if self.kind in ("cyclic", "order"):
            return "trivial" if self.size == 1 else "nontrivial"
        if self.kind in ("nontrivial", "p-part-nontrivial"):
            return "nontrivial"
        return "unknown"

    def to_jsonable(self):
        out = {
            "assertion": self.kind,
            "citations": list(self.citations),
            "derivation": list(self.derivation),
        }
        if self.size is not None:
            out["size"] = self.size
        return out


def _ivp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _is_cyclic(g: FiniteGroup) -> bool:
    return g.exponent() == g.order


def _odd_part_inverted(g: FiniteGroup):
    """The odd-order elements A when G = A extended by an inverting
    involution, else None."""
    if g.order % 2 != 0:
        return None
    m = g.order // 2
    if m % 2 == 0:
        return None
    odd = [x for x in range(g.order) if g.element_order(x) % 2 == 1]
    if len(odd) != m:
        return None
    odd_set = set(odd)
    for x in odd:
        for y in odd:
            if g.mul(x, y) not in odd_set:
                return None
    outside = [t for t in range(g.order) if t not in odd_set]
    if any(g.element_order(t) != 2 for t in outside):
        return None
    t = outside[0]
    for x in odd:
        if g.mul(g.mul(t, x), t) != g.inv(x):
            return None
    return odd_set


_MATCHERS = {
    "cyclic-of-order-p": lambda g, p: g.order == p and _is_cyclic(g),
    "cyclic-4": lambda g, p: g.order == 4 and _is_cyclic(g),
    "klein-four": lambda g, p: g.order == 4 and g.exponent() == 2,
    "odd-abelian-by-inversion": lambda g, p: _odd_part_inverted(g)
    is not None,
}


def _load_facts():
    path = resources.files(__package__).joinpath("data/dt_facts.json")
    data = json.loads(path.read_text())
    assert data["schema"] == "holring.dt-facts/1"
    return tuple(data["facts"])


_FACTS = _load_facts()


def _match_fact(group: FiniteGroup, p: int):
    for fact in _FACTS:
        want = fact["prime"]
        if want != "p" and want != p:
            continue
        if not _MATCHERS[fact["matcher"]](group, p):
            continue
        spec = fact["assertion"]
        size = spec.get("size")
        if size == "p-1":
            size = p - 1
        return DTAssertion(
            kind=spec["kind"],
            size=size,
            citations=(fact["citation"],),
            derivation=(
                f"fact[{fact['matcher']}]: {fact['source']}",
            ),
        )
    return None


def _describe(group: FiniteGroup) -> str:
    fam = group.family["family"] if group.family else "group"
    return f"{fam}|{group.order}"


def dt_query(group: FiniteGroup, p: int, depth: int = 16) -> DTAssertion:
    """Strongest derivable assertion about DT(Z_p[G]).

    Resolution order: maximality, explicit facts, transfer along a
    weakly hybrid quotient, the non-maximality lower bound, quotient
    surjectivity.  depth caps the recursion through quotients.
    """
    name = _describe(group)
    if group.order % p != 0:
        return DTAssertion(
            "trivial",
            None,
            (DT_MAXIMAL,),
            (f"{name}: p = {p} does not divide |G| = {group.order}",),
        )
    fact = _match_fact(group, p)
    if fact is not None:
        return fact
    v = _ivp(group.order, p)
    if depth > 0:
        found = _via_weak_hybrid_quotient(group, p, depth, name)
        if found is not None:
            return found
    if p > 2 or v >= 2:
        return DTAssertion(
            "nontrivial",
            None,
            (DT_LOWER_BOUND,),
            (
                f"{name}: p = {p} divides |G| = {group.order} and "
                f"(p, v_p(|G|)) = ({p}, {v}) is not (2, 1)",
            ),
        )
    if depth > 0:
        found = _via_quotient_surjectivity(group, p, depth, name)
        if found is not None:
            return found
    return DTAssertion(
        "unknown", None, (), (f"{name}: no rule applies",)
    )


def _proper_normals(group: FiniteGroup):
    for sub in group.normal_subgroups():
        if 1 < sub.order < group.order:
            yield sub


def _via_weak_hybrid_quotient(group, p, depth, name):
    table = character_table(group)
    for sub in _proper_normals(group):
        if sub.order % p == 0:
            continue
        wh = weakly_hybrid(table, sub.element_ids, p)
        if wh.verdict != "yes":
            continue
        quot, _ = group.quotient(sub.element_ids)
        inner = dt_query(quot, p, depth - 1)
        if inner.kind == "unknown":
            continue
        return DTAssertion(
            inner.kind,
            inner.size,
            (DT_WH_QUOT_ISO,) + wh.citations + inner.citations,
            (
                f"{name}: weakly hybrid for a normal subgroup of "
                f"order {sub.order}, so DT agrees with the quotient",
            )
            + inner.derivation,
        )
    return None


def _via_quotient_surjectivity(group, p, depth, name):
    for sub in _proper_normals(group):
        quot, _ = group.quotient(sub.element_ids)
        if quot.order % p != 0:
            continue
        inner = dt_query(quot, p, depth - 1)
        if inner.triviality() == "nontrivial":
            return DTAssertion(
                "nontrivial",
                None,
                (DT_QUOT_SURJECTIVE,) + inner.citations,
                (
                    f"{name}: DT surjects onto the quotient by a "
                    f"normal subgroup of order {sub.order}",
                )
                + inner.derivation,
            )
    return None


def dt_triviality(group: FiniteGroup, p: int):
    """Three-valued wrapper around dt_query used by the hybrid tests."""
    out = dt_query(group, p)
    return out.triviality(), out.citations


def maximality_consequence(
    group: FiniteGroup, p: int, assertion: DTAssertion
) -> dict:
    """Structural consequences of a DT assertion, consistency-checked.

    A trivial DT forces the group ring to be maximal unless p = 2 and
    v_2(|G|) = 1; a DT that is a p-group forces maximality for odd p.
    The maximality call is cross-checked against the block data (the
    ring is maximal exactly when every central idempotent is
    integral), and an assertion contradicting it is flagged.
    """
    from .blocks import padic_blocks

    v = _ivp(group.order, p)
    maximal = v == 0
    blocks = padic_blocks(character_table(group), p)
    all_integral = all(b.idempotent_integral for b in blocks)
    assert all_integral == maximal, "block data contradicts valuation"
    is_p_group_dt = None
    if assertion.kind == "trivial":
        is_p_group_dt = True
    elif assertion.kind in ("cyclic", "order"):
        size = assertion.size
        is_p_group_dt = size == p ** _ivp(size, p)
    notes = []
    consistent = True
    if assertion.triviality() == "trivial":
        if not (maximal or (p == 2 and v == 1)):
            consistent = False
            notes.append(
                "trivial DT requires a maximal ring or p = 2 with "
                f"v_2(|G|) = 1, but (p, v_p(|G|)) = ({p}, {v})"
            )
        else:
            notes.append(
                "consistent: "
                + (
                    "the ring is maximal"
                    if maximal
                    else "p = 2 and v_2(|G|) = 1"
                )
            )
    elif is_p_group_dt and p > 2:
        if not maximal:
            consistent = False
            notes.append(
                "a p-group DT at an odd prime requires a maximal ring"
            )
        else:
            notes.append("consistent: p-group DT and the ring is maximal")
    else:
        notes.append("no maximality constraint derivable")
    return {
        "p": p,
        "group_order": group.order,
        "valuation": v,
        "ring_is_maximal": maximal,
        "all_idempotents_integral": all_integral,
        "dt_is_p_group": is_p_group_dt,
        "consistent": consistent,
        "notes": notes,
        "citations": [DT_MAXIMALITY],
    }
