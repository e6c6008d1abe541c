"""Finite matroids given by their circuit families.

Circuits are the primary representation; bases, duals, and minors are derived
and cached.  Validation of the circuit axioms is exhaustive and therefore
refuses ground sets above a configurable cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceededError, DomainError, InvariantError, ValidationError
from .signed_sets import GroundSet, bits, indices, mask_of

C3_CAP_DEFAULT = 12


@dataclass(frozen=True)
class CircuitViolation:
    """Names the violated circuit axiom and carries a concrete witness."""

    axiom: str
    witness: tuple
    message: str

    def __str__(self) -> str:
        return f"({self.axiom}) {self.message}"


@dataclass(frozen=True)
class MinorSpec:
    """Contract ``contract`` and delete ``delete``; the two must be disjoint."""

    contract: frozenset[int]
    delete: frozenset[int]

    @classmethod
    def of(cls, contract: Iterable[int] = (), delete: Iterable[int] = ()) -> "MinorSpec":
        return cls(frozenset(contract), frozenset(delete))

    def __post_init__(self):
        if self.contract & self.delete:
            raise DomainError("contract and delete sets overlap")

    @property
    def contract_mask(self) -> int:
        return mask_of(self.contract)

    @property
    def delete_mask(self) -> int:
        return mask_of(self.delete)


def _canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: tuple(bits(m))))


class Matroid:
    """A finite matroid on a :class:`GroundSet`, stored by its circuit masks.

    Instances are immutable after construction; lazy caches (bases, dual,
    ranks) are filled once and then only read.
    """

    def __init__(self, ground: GroundSet, circuit_masks: Iterable[int], _validated: bool = False):
        if not _validated:
            raise DomainError("use validate_circuits() or Matroid.from_circuits()")
        self.ground = ground
        self.circuit_masks = _canonical(circuit_masks)
        self._rank_cache: dict[int, int] = {}
        self._dual: "Matroid | None" = None
        self._bases: tuple[int, ...] | None = None

    @classmethod
    def from_circuits(
        cls,
        ground: GroundSet,
        family: Iterable[Iterable[int]],
        *,
        c3_cap: int = C3_CAP_DEFAULT,
        trusted: bool = False,
    ) -> "Matroid":
        got = validate_circuits(ground, family, c3_cap=c3_cap, trusted=trusted)
        if isinstance(got, CircuitViolation):
            raise ValidationError(str(got))
        return got

    @classmethod
    def _from_valid(cls, ground: GroundSet, masks: Iterable[int]) -> "Matroid":
        return cls(ground, masks, _validated=True)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.circuit_masks == other.circuit_masks

    def __hash__(self) -> int:
        return hash((self.ground.labels, self.circuit_masks))

    def __repr__(self) -> str:
        fam = ", ".join("{" + ",".join(self.ground.labels_of(m)) + "}" for m in self.circuit_masks)
        return f"Matroid({list(self.ground.labels)}; circuits [{fam}])"

    @property
    def circuits(self) -> tuple[frozenset[int], ...]:
        return tuple(indices(m) for m in self.circuit_masks)

    # -- independence and rank ----------------------------------------------

    def is_independent(self, a: int | Iterable[int]) -> bool:
        m = a if isinstance(a, int) else mask_of(a)
        self.ground.check_mask(m)
        return all(c & ~m for c in self.circuit_masks)

    def rank(self, a: int | Iterable[int] | None = None) -> int:
        m = self.ground.full_mask if a is None else (a if isinstance(a, int) else mask_of(a))
        self.ground.check_mask(m)
        hit = self._rank_cache.get(m)
        if hit is not None:
            return hit
        r = 0
        ind = 0
        circuits = self.circuit_masks
        for i in bits(m):
            cand = ind | (1 << i)
            if all(c & ~cand for c in circuits):
                ind = cand
                r += 1
        self._rank_cache[m] = r
        return r

    @property
    def bases(self) -> tuple[int, ...]:
        """All maximal circuit-free sets, as masks in canonical order."""
        if self._bases is None:
            r = self.rank()
            elems = range(self.ground.size)
            found = [
                mask_of(combo)
                for combo in itertools.combinations(elems, r)
                if self.is_independent(mask_of(combo))
            ]
            self._bases = _canonical(found)
        return self._bases

    # -- duality -------------------------------------------------------------

    def dual(self) -> "Matroid":
        """The dual matroid; its circuits are this matroid's cocircuits."""
        if self._dual is None:
            full = self.ground.full_mask
            r = self.rank()
            coind: dict[int, bool] = {}

            def coindependent(m: int) -> bool:
                got = coind.get(m)
                if got is None:
                    got = self.rank(full & ~m) == r
                    coind[m] = got
                return got

            cocircuits: list[int] = []
            n = self.ground.size
            for size in range(1, n + 1):
                for combo in itertools.combinations(range(n), size):
                    m = mask_of(combo)
                    if any(c & ~m == 0 for c in cocircuits):
                        continue
                    if not coindependent(m):
                        cocircuits.append(m)
            self._dual = Matroid._from_valid(self.ground, cocircuits)
        return self._dual

    @property
    def cocircuit_masks(self) -> tuple[int, ...]:
        return self.dual().circuit_masks

    @property
    def cocircuits(self) -> tuple[frozenset[int], ...]:
        return self.dual().circuits

    # -- minors ---------------------------------------------------------------

    def minor_with_map(self, spec: MinorSpec) -> tuple["Matroid", tuple[int, ...]]:
        """Minor plus the kept old indices, in the order they become new indices."""
        f = self.ground.check_mask(spec.contract_mask)
        g = self.ground.check_mask(spec.delete_mask)
        kept = tuple(i for i in range(self.ground.size) if not ((f | g) >> i) & 1)
        new_ground = GroundSet(tuple(self.ground.labels[i] for i in kept))
        contracted = contraction_circuit_masks(self.circuit_masks, f)
        remap = {old: new for new, old in enumerate(kept)}
        new_masks = []
        for c in contracted:
            if c & g:
                continue
            new_masks.append(mask_of(remap[i] for i in bits(c)))
        return Matroid._from_valid(new_ground, new_masks), kept

    def minor(self, spec: MinorSpec) -> "Matroid":
        return self.minor_with_map(spec)[0]

    # -- circuit/cocircuit structure -------------------------------------------

    def is_scrawl(self, v: int | Iterable[int]) -> bool:
        """True iff ``v`` never meets a cocircuit exactly once (= union of circuits)."""
        m = v if isinstance(v, int) else mask_of(v)
        self.ground.check_mask(m)
        return all((m & u).bit_count() != 1 for u in self.cocircuit_masks)

    def cocircuit_through_pair(self, circuit: int | Iterable[int], e: int, f: int) -> frozenset[int]:
        """The least cocircuit U with circuit ∩ U = {e, f}."""
        c = circuit if isinstance(circuit, int) else mask_of(circuit)
        if c not in self.circuit_masks:
            raise DomainError("not a circuit of this matroid")
        if e == f or not ((c >> e) & 1 and (c >> f) & 1):
            raise DomainError("need two distinct elements of the circuit")
        want = (1 << e) | (1 << f)
        for u in self.cocircuit_masks:
            if c & u == want:
                return indices(u)
        raise InvariantError(f"no cocircuit meets the circuit exactly in {{{e},{f}}}")

    def fundamental_circuit(self, basis: int | Iterable[int], e: int) -> frozenset[int]:
        """The unique circuit inside basis ∪ {e} that contains e."""
        b = basis if isinstance(basis, int) else mask_of(basis)
        self.ground.check_mask(b)
        self.ground.check_mask(1 << e)
        if b not in self.bases:
            raise DomainError("not a basis of this matroid")
        if (b >> e) & 1:
            raise DomainError("element already in the basis")
        allowed = b | (1 << e)
        for c in self.circuit_masks:
            if (c >> e) & 1 and c & ~allowed == 0:
                return indices(c)
        raise InvariantError("basis plus one element contains no circuit")


def contraction_circuit_masks(circuit_masks: Iterable[int], f: int) -> tuple[int, ...]:
    """Circuits after contracting ``f``: minimal nonempty sets C \\ f."""
    cands = sorted({c & ~f for c in circuit_masks if c & ~f}, key=lambda m: m.bit_count())
    out: list[int] = []
    for m in cands:
        if all(o & ~m for o in out):
            out.append(m)
    return _canonical(out)


def validate_circuits(
    ground: GroundSet,
    family: Iterable[Iterable[int] | int],
    *,
    c3_cap: int = C3_CAP_DEFAULT,
    trusted: bool = False,
) -> Matroid | CircuitViolation:
    """Check (C1), (C2) and the finite elimination axiom (C3) exhaustively.

    Returns the matroid on success, otherwise the first violation found in
    canonical scan order.  ``trusted=True`` skips (C3); otherwise ground sets
    larger than ``c3_cap`` are refused because the (C3) enumeration is
    exponential.
    """
    masks = _canonical(
        (c if isinstance(c, int) else mask_of(c)) for c in family
    )
    for m in masks:
        ground.check_mask(m)
    if any(m == 0 for m in masks):
        return CircuitViolation("C1", ((),), "the empty set is listed as a circuit")
    for a, b in itertools.combinations(masks, 2):
        if a & ~b == 0 or b & ~a == 0:
            small, big = (a, b) if a & ~b == 0 else (b, a)
            return CircuitViolation(
                "C2",
                (indices(small), indices(big)),
                f"circuit {sorted(bits(small))} is contained in circuit {sorted(bits(big))}",
            )
    if not trusted:
        if ground.size > c3_cap:
            raise CapExceededError(
                f"(C3) validation needs ground size <= {c3_cap} (got {ground.size}); "
                "pass trusted=True to skip"
            )
        bad = _find_c3_violation(masks)
        if bad is not None:
            c, x, fam, f = bad
            return CircuitViolation(
                "C3",
                (indices(c), indices(x), tuple(indices(d) for d in fam), f),
                f"no circuit through {f} inside the allowed union for C={sorted(bits(c))}, "
                f"X={sorted(bits(x))}",
            )
    return Matroid._from_valid(ground, masks)


def _find_c3_violation(masks: tuple[int, ...]) -> tuple[int, int, tuple[int, ...], int] | None:
    """First (C, X, family, f) for which strong elimination has no witness.

    The feasibility of an elimination instance depends on the family only
    through the union of its members, so families are deduplicated by that
    union while searching; a concrete family is reconstructed on failure.
    """
    cover_memo: dict[int, int] = {}

    def cover(allowed: int) -> int:
        got = cover_memo.get(allowed)
        if got is None:
            got = 0
            for d in masks:
                if d & ~allowed == 0:
                    got |= d
            cover_memo[allowed] = got
        return got

    for c in masks:
        xs = list(bits(c))
        for size in range(1, len(xs) + 1):
            for x_combo in itertools.combinations(xs, size):
                x = mask_of(x_combo)
                cand = []
                ok = True
                for xi in x_combo:
                    options = [d for d in masks if d & x == (1 << xi)]
                    if not options:
                        ok = False
                        break
                    cand.append(options)
                if not ok:
                    continue
                bad_u = _scan_unions(c, x, cand, cover)
                if bad_u is None:
                    continue
                u, f = bad_u
                fam = _family_for_union(cand, u)
                return c, x, fam, f
    return None


def _scan_unions(c: int, x: int, cand: list[list[int]], cover) -> tuple[int, int] | None:
    seen: set[tuple[int, int]] = set()
    stack = [(0, 0)]
    while stack:
        depth, u = stack.pop()
        if (depth, u) in seen:
            continue
        seen.add((depth, u))
        if depth == len(cand):
            allowed = (c | u) & ~x
            for f in bits(c & ~u):
                if not ((cover(allowed) >> f) & 1):
                    return u, f
            continue
        for d in cand[depth]:
            stack.append((depth + 1, u | d))
    return None


def _family_for_union(cand: list[list[int]], target: int) -> tuple[int, ...]:
    def rec(depth: int, u: int, picked: tuple[int, ...]):
        if depth == len(cand):
            return picked if u == target else None
        for d in cand[depth]:
            if (u | d) & ~target:
                continue
            got = rec(depth + 1, u | d, picked + (d,))
            if got is not None:
                return got
        return None

    got = rec(0, 0, ())
    if got is None:
        raise InvariantError("failed to reconstruct elimination family")
    return got
