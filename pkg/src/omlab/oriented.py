"""Circuit/cocircuit signature pairs and their axiom checkers.

Implements the orthogonality check, strong signed circuit elimination,
the 4-painting and Farkas properties, the constructive dual-signature
derivation, minor-induced signatures and sets, special elimination,
vectors, and conformal decomposition.

The exhaustive checkers quantify over exponential families, so each one has
a ground-size cap and an optional seeded sampling fallback.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import CapExceededError, DomainError, GroundMismatchError, InvariantError, ValidationError
from .matroid import Matroid, MinorSpec, contraction_circuit_masks
from .signed_sets import GroundSet, SignedSubset, bits, indices, mask_of

FOUR_P_CAP_DEFAULT = 10
CE_CAP_DEFAULT = 10
FA_CAP_DEFAULT = 8


# ---------------------------------------------------------------------------
# signatures


class CircuitSignature:
    """A symmetric signing of every circuit of a matroid.

    Exactly one opposite pair {C, -C} per circuit; a cocircuit signature of M
    is a CircuitSignature over M.dual().
    """

    def __init__(self, matroid: Matroid, signed: Iterable[SignedSubset]):
        self.matroid = matroid
        members = frozenset(signed)
        supports: dict[int, list[SignedSubset]] = {}
        for x in members:
            if x.ground != matroid.ground:
                raise GroundMismatchError("signed subset not on the matroid's ground set")
            supports.setdefault(x.support, []).append(x)
        want = set(matroid.circuit_masks)
        if set(supports) != want:
            missing = want - set(supports)
            extra = set(supports) - want
            raise ValidationError(
                f"signature supports do not match the circuit family "
                f"(missing {sorted(map(bin, missing))}, extra {sorted(map(bin, extra))})"
            )
        for s, group in supports.items():
            if len(group) != 2 or -group[0] != group[1]:
                raise ValidationError(
                    f"support {sorted(bits(s))} must carry exactly one opposite pair of signings"
                )
        self.signed = members
        self._rep_by_support = {
            s: min(group, key=lambda x: x.sort_key()) for s, group in supports.items()
        }

    @classmethod
    def from_representatives(cls, matroid: Matroid, reps: Iterable[SignedSubset]) -> "CircuitSignature":
        closure: set[SignedSubset] = set()
        for x in reps:
            closure.add(x)
            closure.add(-x)
        return cls(matroid, closure)

    @property
    def ground(self) -> GroundSet:
        return self.matroid.ground

    def representatives(self) -> tuple[SignedSubset, ...]:
        return tuple(self._rep_by_support[s] for s in self.matroid.circuit_masks)

    def by_support(self, support: int | Iterable[int]) -> SignedSubset:
        m = support if isinstance(support, int) else mask_of(support)
        try:
            return self._rep_by_support[m]
        except KeyError:
            raise DomainError(f"{sorted(bits(m))} is not a circuit of this matroid") from None

    def __contains__(self, x: SignedSubset) -> bool:
        return x in self.signed

    def __eq__(self, other) -> bool:
        if not isinstance(other, CircuitSignature):
            return NotImplemented
        return self.matroid == other.matroid and self.signed == other.signed

    def __hash__(self) -> int:
        return hash((self.matroid, self.signed))

    def reorient(self, a: int | Iterable[int]) -> "CircuitSignature":
        m = a if isinstance(a, int) else mask_of(a)
        return CircuitSignature(self.matroid, (x.reorient(m) for x in self.signed))

    def __repr__(self) -> str:
        reps = ", ".join(str(x) for x in self.representatives())
        return f"CircuitSignature({reps})"

    def pair_masks(self) -> list[tuple[int, int, int]]:
        """(pos, neg, support) for one representative per opposite pair."""
        return [(x.pos, x.neg, x.support) for x in self.representatives()]

    def member_masks(self) -> list[tuple[int, int, int]]:
        """(pos, neg, support) for every signed member, deterministic order."""
        return [(x.pos, x.neg, x.support) for x in sorted(self.signed, key=lambda s: s.sort_key())]


class SignaturePair:
    """A matroid with a circuit signature and a cocircuit signature."""

    def __init__(self, matroid: Matroid, circuit_sig: CircuitSignature, cocircuit_sig: CircuitSignature):
        if circuit_sig.matroid != matroid:
            raise ValidationError("circuit signature does not belong to the matroid")
        if cocircuit_sig.matroid != matroid.dual():
            raise ValidationError("cocircuit signature does not belong to the dual matroid")
        self.matroid = matroid
        self.circuit_sig = circuit_sig
        self.cocircuit_sig = cocircuit_sig

    @property
    def ground(self) -> GroundSet:
        return self.matroid.ground

    def dual(self) -> "SignaturePair":
        return SignaturePair(self.matroid.dual(), self.cocircuit_sig, self.circuit_sig)

    def reorient(self, a: int | Iterable[int]) -> "SignaturePair":
        m = a if isinstance(a, int) else mask_of(a)
        return SignaturePair(self.matroid, self.circuit_sig.reorient(m), self.cocircuit_sig.reorient(m))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignaturePair):
            return NotImplemented
        return (
            self.matroid == other.matroid
            and self.circuit_sig == other.circuit_sig
            and self.cocircuit_sig == other.cocircuit_sig
        )

    def __hash__(self) -> int:
        return hash((self.matroid, self.circuit_sig, self.cocircuit_sig))

    def __repr__(self) -> str:
        return (
            f"SignaturePair(ground={list(self.ground.labels)}, "
            f"{len(self.matroid.circuit_masks)} circuits, "
            f"{len(self.matroid.dual().circuit_masks)} cocircuits)"
        )


@dataclass(frozen=True)
class FourPartition:
    """Disjoint cover of the ground set by black/white/green/red classes."""

    ground: GroundSet
    black: frozenset[int]
    white: frozenset[int]
    green: frozenset[int]
    red: frozenset[int]

    def __post_init__(self):
        masks = [mask_of(self.black), mask_of(self.white), mask_of(self.green), mask_of(self.red)]
        total = 0
        for m in masks:
            if m & total:
                raise DomainError("4-partition classes overlap")
            total |= m
        if total != self.ground.full_mask:
            raise DomainError("4-partition does not cover the ground set")

    @classmethod
    def from_masks(cls, ground: GroundSet, b: int, w: int, g: int, r: int) -> "FourPartition":
        return cls(ground, indices(b), indices(w), indices(g), indices(r))


@dataclass(frozen=True)
class EliminationInstance:
    """Data of one strong-elimination instance: C, X, (C_x | x in X), f."""

    circuit: SignedSubset
    members: tuple[tuple[int, SignedSubset], ...]
    retained: int

    def __post_init__(self):
        c = self.circuit
        sep_union = 0
        for x, cx in self.members:
            if cx.ground != c.ground:
                raise GroundMismatchError("elimination family mixes ground sets")
            xb = 1 << x
            if not c.support & xb:
                raise DomainError(f"{x} is not in the support of the eliminated circuit")
            if cx.support & self.x_mask != xb:
                raise DomainError(f"family member for {x} must meet X exactly in {{{x}}}")
            sep = c.sep_mask(cx)
            if not sep & xb:
                raise DomainError(f"{x} must be a separating element of C and C_{x}")
            sep_union |= sep
        fb = 1 << self.retained
        if not c.support & fb or sep_union & fb:
            raise DomainError("retained element must lie in C's support outside every separator")

    @classmethod
    def of(cls, circuit: SignedSubset, family: dict[int, SignedSubset], retained: int) -> "EliminationInstance":
        return cls(circuit, tuple(sorted(family.items())), retained)

    @property
    def x_mask(self) -> int:
        return mask_of(x for x, _ in self.members)

    @property
    def eliminated(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.members)

    @property
    def family(self) -> dict[int, SignedSubset]:
        return dict(self.members)


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker; falsy iff a violation was found."""

    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class OrthViolation:
    circuit: SignedSubset
    cocircuit: SignedSubset

    def __str__(self) -> str:
        return f"circuit {self.circuit} not orthogonal to cocircuit {self.cocircuit}"


@dataclass(frozen=True)
class FPViolation:
    element: int
    kind: str  # "neither" or "both"

    def __str__(self) -> str:
        return f"element {self.element}: {self.kind} side has a positive member through it"


@dataclass(frozen=True)
class FourPViolation:
    partition: FourPartition
    element: int

    def __str__(self) -> str:
        g = self.partition.ground
        return (
            f"element {g.labels[self.element]} under painting "
            f"B={sorted(g.labels[i] for i in self.partition.black)} "
            f"W={sorted(g.labels[i] for i in self.partition.white)} "
            f"G={sorted(g.labels[i] for i in self.partition.green)} "
            f"R={sorted(g.labels[i] for i in self.partition.red)}"
        )


@dataclass(frozen=True)
class CEViolation:
    instance: EliminationInstance

    def __str__(self) -> str:
        inst = self.instance
        return (
            f"no admissible circuit through {inst.retained} when eliminating "
            f"{sorted(inst.eliminated)} from {inst.circuit}"
        )


@dataclass(frozen=True)
class FAViolation:
    spec: MinorSpec
    reorient: frozenset[int]
    fp: FPViolation

    def __str__(self) -> str:
        return (
            f"minor contract={sorted(self.spec.contract)} delete={sorted(self.spec.delete)} "
            f"reorient={sorted(self.reorient)}: {self.fp}"
        )


@dataclass(frozen=True)
class DeriveFailure:
    """A constructed cocircuit not orthogonal to some signed circuit."""

    circuit: SignedSubset
    cocircuit: SignedSubset

    def __str__(self) -> str:
        return f"derived cocircuit {self.cocircuit} conflicts with circuit {self.circuit}"


@dataclass(frozen=True)
class DecomposeFailure:
    """No conforming circuit exists through this support element."""

    element: int

    def __str__(self) -> str:
        return f"no conforming circuit through element {self.element}"


# ---------------------------------------------------------------------------
# orthogonality


def check_orthogonality(pair: SignaturePair) -> Verdict:
    """(O): every signed circuit is orthogonal to every signed cocircuit."""
    for c in pair.circuit_sig.representatives():
        for u in pair.cocircuit_sig.representatives():
            if not c.orthogonal(u):
                return Verdict(False, OrthViolation(c, u))
    return Verdict(True)


def check_orthogonality_sep(pair: SignaturePair) -> Verdict:
    """(O'): sep(C,U) nonempty iff sep(C,-U) nonempty, for all pairs."""
    for c in pair.circuit_sig.representatives():
        for u in pair.cocircuit_sig.representatives():
            if bool(c.sep_mask(u)) != bool(c.sep_mask(-u)):
                return Verdict(False, OrthViolation(c, u))
    return Verdict(True)


# ---------------------------------------------------------------------------
# dual-signature derivation (constructive)


def derive_cocircuit_signature(matroid: Matroid, csig: CircuitSignature) -> CircuitSignature | DeriveFailure:
    """Construct the unique cocircuit signature orthogonal to ``csig``.

    Anchors each cocircuit at its smallest element e_U with sign +, then signs
    every other element through the least circuit meeting the cocircuit in
    exactly those two elements.  Fails (with a witness) when no orthogonal
    completion exists, i.e. when ``csig`` lacks strong elimination.
    """
    if csig.matroid != matroid:
        raise DomainError("signature does not belong to the matroid")
    dual = matroid.dual()
    ground = matroid.ground
    reps = []
    for u_mask in dual.circuit_masks:
        e_u = u_mask & -u_mask
        pos, neg = e_u, 0
        for e in bits(u_mask ^ e_u):
            want = e_u | (1 << e)
            chosen = None
            for c_mask in matroid.circuit_masks:
                if c_mask & u_mask == want:
                    chosen = c_mask
                    break
            if chosen is None:
                raise InvariantError(
                    f"no circuit meets cocircuit {sorted(bits(u_mask))} exactly in the anchor pair"
                )
            c = csig.by_support(chosen)
            anchor_sign = 1 if c.pos & e_u else -1
            here_sign = 1 if c.pos & (1 << e) else -1
            if -anchor_sign * here_sign > 0:
                pos |= 1 << e
            else:
                neg |= 1 << e
        reps.append(SignedSubset(ground, pos, neg))
    cosig = CircuitSignature.from_representatives(dual, reps)
    for c in csig.representatives():
        for u in cosig.representatives():
            if not c.orthogonal(u):
                return DeriveFailure(c, u)
    return cosig


def check_signature_uniqueness(
    matroid: Matroid, csig: CircuitSignature, candidate_a: CircuitSignature, candidate_b: CircuitSignature
) -> bool:
    """True iff two (O)-compatible cocircuit signatures coincide as sets."""
    for cand in (candidate_a, candidate_b):
        if not check_orthogonality(SignaturePair(matroid, csig, cand)):
            raise DomainError("candidate cocircuit signature is not (O)-compatible with the circuit signature")
    return candidate_a.signed == candidate_b.signed


# ---------------------------------------------------------------------------
# minors


def _restrict_map(ground: GroundSet, kept: tuple[int, ...], new_ground: GroundSet):
    remap = {old: new for new, old in enumerate(kept)}

    def down(x: SignedSubset, support_mask: int) -> SignedSubset:
        pos = mask_of(remap[i] for i in bits(x.pos & support_mask))
        neg = mask_of(remap[i] for i in bits(x.neg & support_mask))
        return SignedSubset(new_ground, pos, neg)

    return down


def induced_signature(pair: SignaturePair, spec: MinorSpec) -> SignaturePair:
    """Signatures induced on a minor by restricting lifted signed (co)circuits.

    Requires (O) implicitly: if two lifts of the same minor circuit restrict
    to non-opposite signings, the induction is ill-defined and an upstream
    (O) violation is reported.
    """
    m = pair.matroid
    f_mask = m.ground.check_mask(spec.contract_mask)
    g_mask = m.ground.check_mask(spec.delete_mask)
    n, kept = m.minor_with_map(spec)
    down = _restrict_map(m.ground, kept, n.ground)
    up = {new: old for new, old in enumerate(kept)}

    def lift_side(sig: CircuitSignature, minor_matroid: Matroid, extra_mask: int) -> CircuitSignature:
        reps = []
        for c_new in minor_matroid.circuit_masks:
            old_support = mask_of(up[i] for i in bits(c_new))
            classes: set[SignedSubset] = set()
            witness = None
            for lift in sig.representatives():
                s = lift.support
                if old_support & ~s == 0 and s & ~(old_support | extra_mask) == 0:
                    restricted = down(lift, old_support)
                    classes.add(restricted.canonical_rep())
                    if witness is None:
                        witness = restricted
            if not classes:
                raise InvariantError(
                    f"minor circuit {sorted(bits(c_new))} has no lift: the minor machinery is broken"
                )
            if len(classes) > 1:
                raise ValidationError(
                    "induced signing depends on the choice of lift; the signature pair violates (O)"
                )
            reps.append(witness)
        return CircuitSignature.from_representatives(minor_matroid, reps)

    csig_n = lift_side(pair.circuit_sig, n, f_mask)
    cosig_n = lift_side(pair.cocircuit_sig, n.dual(), g_mask)
    return SignaturePair(n, csig_n, cosig_n)


class InducedSets(NamedTuple):
    circuits_side: frozenset[SignedSubset]
    cocircuits_side: frozenset[SignedSubset]
    minor: Matroid


def induced_sets(pair: SignaturePair, spec: MinorSpec, mode: str = "circuits") -> InducedSets:
    """The sets of restricted signed subsets a minor inherits.

    ``mode`` selects the inherited family: ``"circuits"`` keeps restrictions
    of signed (co)circuits whose restricted support is a (co)circuit of the
    minor; ``"tilde"`` drops that support condition; ``"vectors"`` restricts
    whole (co)vectors.  The latter two are experimental alternatives.
    """
    m = pair.matroid
    f_mask = m.ground.check_mask(spec.contract_mask)
    g_mask = m.ground.check_mask(spec.delete_mask)
    n, kept = m.minor_with_map(spec)
    en_mask = m.ground.full_mask & ~(f_mask | g_mask)
    down = _restrict_map(m.ground, kept, n.ground)
    remap = {old: new for new, old in enumerate(kept)}

    def new_mask(old_mask: int) -> int:
        return mask_of(remap[i] for i in bits(old_mask))

    if mode == "vectors":
        src_s: Iterable[SignedSubset] = vectors(pair.circuit_sig)
        src_t: Iterable[SignedSubset] = vectors(pair.cocircuit_sig)
    else:
        src_s = pair.circuit_sig.signed
        src_t = pair.cocircuit_sig.signed

    def side(members: Iterable[SignedSubset], avoid_mask: int, minor_circuits: frozenset[int]) -> frozenset[SignedSubset]:
        out = set()
        for x in members:
            if x.support & avoid_mask:
                continue
            if mode == "circuits" and new_mask(x.support & en_mask) not in minor_circuits:
                continue
            out.add(down(x, x.support & en_mask))
        return frozenset(out)

    circ_n = frozenset(n.circuit_masks)
    cocirc_n = frozenset(n.dual().circuit_masks)
    return InducedSets(
        side(src_s, g_mask, circ_n),
        side(src_t, f_mask, cocirc_n),
        n,
    )


# ---------------------------------------------------------------------------
# Farkas property


def fp_report(
    s_members: Iterable[SignedSubset], t_members: Iterable[SignedSubset], ground: GroundSet
) -> dict[int, tuple[str, SignedSubset] | None]:
    """Per element: the side and least positive member through it, or None.

    An element mapping to None or to witnesses on both sides violates (FP);
    "positive" requires a nonempty support, so the empty subset never counts.
    """
    s_pos = sorted((x for x in s_members if x.is_positive()), key=lambda x: x.sort_key())
    t_pos = sorted((x for x in t_members if x.is_positive()), key=lambda x: x.sort_key())
    report: dict[int, tuple[str, SignedSubset] | None] = {}
    for e in range(ground.size):
        b = 1 << e
        s_hit = next((x for x in s_pos if x.pos & b), None)
        t_hit = next((x for x in t_pos if x.pos & b), None)
        if s_hit is not None and t_hit is None:
            report[e] = ("S", s_hit)
        elif t_hit is not None and s_hit is None:
            report[e] = ("T", t_hit)
        else:
            report[e] = None
    return report


def check_FP(
    s_members: Iterable[SignedSubset], t_members: Iterable[SignedSubset], ground: GroundSet
) -> Verdict:
    """(FP): each element lies in a positive member of exactly one side."""
    s_cover = t_cover = 0
    for x in s_members:
        if x.ground != ground:
            raise GroundMismatchError("FP sides live on different ground sets")
        if x.is_positive():
            s_cover |= x.pos
    for y in t_members:
        if y.ground != ground:
            raise GroundMismatchError("FP sides live on different ground sets")
        if y.is_positive():
            t_cover |= y.pos
    both = s_cover & t_cover
    if both:
        e = (both & -both).bit_length() - 1
        return Verdict(False, FPViolation(e, "both"))
    neither = ground.full_mask & ~(s_cover | t_cover)
    if neither:
        e = (neither & -neither).bit_length() - 1
        return Verdict(False, FPViolation(e, "neither"))
    return Verdict(True)


# ---------------------------------------------------------------------------
# 4-painting property


def _paint_scan(
    circ_pairs: list[tuple[int, int, int]],
    cocirc_pairs: list[tuple[int, int, int]],
    b: int,
    w: int,
    g: int,
    r: int,
) -> int:
    """Elements of B|W failing the exactly-one alternative; 0 means OK."""
    us = 0
    for p, m, s in circ_pairs:
        if not s & r:
            if not ((m & b) | (p & w)) or not ((p & b) | (m & w)):
                us |= s
    ut = 0
    for p, m, s in cocirc_pairs:
        if not s & g:
            if not ((m & b) | (p & w)) or not ((p & b) | (m & w)):
                ut |= s
    return (b | w) & ~(us ^ ut)


def check_4P_at(pair: SignaturePair, partition: FourPartition, focus: int) -> bool:
    """Exactly-one alternative of the painting property at a single partition."""
    if partition.ground != pair.ground:
        raise GroundMismatchError("partition lives on a different ground set")
    b, w = mask_of(partition.black), mask_of(partition.white)
    g, r = mask_of(partition.green), mask_of(partition.red)
    fb = 1 << focus
    if not (b | w) & fb:
        raise DomainError("focus element must be painted black or white")
    bad = _paint_scan(pair.circuit_sig.pair_masks(), pair.cocircuit_sig.pair_masks(), b, w, g, r)
    return not bad & fb


def check_4P(
    pair: SignaturePair, *, cap: int = FOUR_P_CAP_DEFAULT, sample: int | None = None, seed: int = 0
) -> Verdict:
    """(4P): for every 4-partition and focus element, exactly one alternative.

    Exhaustive over all 4^n partitions up to the cap; above it a seeded
    random sample of partitions must be requested explicitly.
    """
    ground = pair.ground
    n = ground.size
    circ_pairs = pair.circuit_sig.pair_masks()
    cocirc_pairs = pair.cocircuit_sig.pair_masks()

    def run(assignments) -> Verdict:
        for colors in assignments:
            b = w = g = r = 0
            for i, col in enumerate(colors):
                if col == 0:
                    b |= 1 << i
                elif col == 1:
                    w |= 1 << i
                elif col == 2:
                    g |= 1 << i
                else:
                    r |= 1 << i
            bad = _paint_scan(circ_pairs, cocirc_pairs, b, w, g, r)
            if bad:
                e = (bad & -bad).bit_length() - 1
                part = FourPartition.from_masks(ground, b, w, g, r)
                return Verdict(False, FourPViolation(part, e))
        return Verdict(True)

    if sample is not None:
        rng = random.Random(seed)
        verdict = run(tuple(rng.randrange(4) for _ in range(n)) for _ in range(sample))
        return Verdict(verdict.ok, verdict.witness, f"sampled {sample} partitions, seed={seed}")
    if n > cap:
        raise CapExceededError(
            f"exhaustive (4P) needs ground size <= {cap} (got {n}); use sampling instead"
        )
    return run(itertools.product(range(4), repeat=n))


# ---------------------------------------------------------------------------
# strong signed circuit elimination


def check_CE(
    sig: CircuitSignature, *, cap: int = CE_CAP_DEFAULT, sample: int | None = None, seed: int = 0
) -> Verdict:
    """(CE): every elimination instance admits a sign-conforming circuit.

    Families are enumerated up to the union of their members' signs, which is
    all the admissibility condition depends on; a concrete witness family is
    reconstructed when a violation is found.
    """
    n = sig.ground.size
    if sample is not None:
        return _check_ce_sampled(sig, sample, seed)
    if n > cap:
        raise CapExceededError(
            f"exhaustive (CE) needs ground size <= {cap} (got {n}); use sampling instead"
        )
    members = sig.member_masks()
    cover_memo: dict[tuple[int, int], int] = {}

    def cover(ap: int, an: int) -> int:
        got = cover_memo.get((ap, an))
        if got is None:
            got = 0
            for p, m, s in members:
                if not (p & ~ap or m & ~an):
                    got |= s
            cover_memo[(ap, an)] = got
        return got

    for c in sig.representatives():
        cp, cm, cs = c.pos, c.neg, c.support
        xs = list(bits(cs))
        for size in range(1, len(xs) + 1):
            for x_combo in itertools.combinations(xs, size):
                x = mask_of(x_combo)
                cand: list[list[tuple[int, int, int]]] = []
                feasible = True
                for xi in x_combo:
                    xb = 1 << xi
                    options = [
                        (p, m, s)
                        for p, m, s in members
                        if s & x == xb and ((p & xb) if cm & xb else (m & xb))
                    ]
                    if not options:
                        feasible = False
                        break
                    cand.append(options)
                if not feasible:
                    continue
                bad = _ce_scan(cp, cm, cs, x, cand, cover)
                if bad is None:
                    continue
                upos, uneg, f = bad
                fam = _ce_family_for_union(cand, upos, uneg)
                inst = EliminationInstance.of(
                    c,
                    {
                        xi: SignedSubset(sig.ground, p, m)
                        for xi, (p, m, _) in zip(x_combo, fam)
                    },
                    f,
                )
                return Verdict(False, CEViolation(inst))
    return Verdict(True)


def _ce_scan(cp, cm, cs, x, cand, cover):
    seen: set[tuple[int, int, int]] = set()

    def rec(depth: int, upos: int, uneg: int):
        key = (depth, upos, uneg)
        if key in seen:
            return None
        seen.add(key)
        if depth == len(cand):
            sepu = (cp & uneg) | (cm & upos)
            frange = cs & ~sepu
            if not frange:
                return None
            ap = (cp | upos) & ~x
            an = (cm | uneg) & ~x
            bad = frange & ~cover(ap, an)
            if bad:
                return upos, uneg, (bad & -bad).bit_length() - 1
            return None
        for p, m, _ in cand[depth]:
            got = rec(depth + 1, upos | p, uneg | m)
            if got is not None:
                return got
        return None

    return rec(0, 0, 0)


def _ce_family_for_union(cand, target_pos, target_neg):
    def rec(depth: int, upos: int, uneg: int, picked: tuple):
        if depth == len(cand):
            return picked if (upos, uneg) == (target_pos, target_neg) else None
        for opt in cand[depth]:
            p, m, _ = opt
            if (upos | p) & ~target_pos or (uneg | m) & ~target_neg:
                continue
            got = rec(depth + 1, upos | p, uneg | m, picked + (opt,))
            if got is not None:
                return got
        return None

    got = rec(0, 0, 0, ())
    if got is None:
        raise InvariantError("failed to reconstruct elimination family")
    return got


def _check_ce_sampled(sig: CircuitSignature, trials: int, seed: int) -> Verdict:
    rng = random.Random(seed)
    members = sig.member_masks()
    reps = sig.representatives()
    detail = f"sampled {trials} instances, seed={seed}"
    for _ in range(trials):
        c = reps[rng.randrange(len(reps))]
        support = list(bits(c.support))
        size = rng.randrange(1, len(support) + 1)
        x_combo = tuple(sorted(rng.sample(support, size)))
        x = mask_of(x_combo)
        family = {}
        upos = uneg = 0
        ok = True
        for xi in x_combo:
            xb = 1 << xi
            options = [
                (p, m, s)
                for p, m, s in members
                if s & x == xb and ((p & xb) if c.neg & xb else (m & xb))
            ]
            if not options:
                ok = False
                break
            p, m, s = options[rng.randrange(len(options))]
            family[xi] = SignedSubset(sig.ground, p, m)
            upos |= p
            uneg |= m
        if not ok:
            continue
        sepu = (c.pos & uneg) | (c.neg & upos)
        frange = list(bits(c.support & ~sepu))
        if not frange:
            continue
        f = frange[rng.randrange(len(frange))]
        ap = (c.pos | upos) & ~x
        an = (c.neg | uneg) & ~x
        found = any(
            (s >> f) & 1 and not (p & ~ap or m & ~an) for p, m, s in members
        )
        if not found:
            inst = EliminationInstance.of(c, family, f)
            return Verdict(False, CEViolation(inst), detail)
    return Verdict(True, detail=detail)


# ---------------------------------------------------------------------------
# Farkas axiom (FA)


def check_FA(
    pair: SignaturePair, *, cap: int = FA_CAP_DEFAULT, sample: int | None = None, seed: int = 0
) -> Verdict:
    """(FA): every minor's induced sets have (FP) under every reorientation.

    Enumerates all 3^n keep/contract/delete assignments and all reorientation
    subsets of each minor's ground, exhaustively up to the cap.
    """
    ground = pair.ground
    n = ground.size
    if sample is None and n > cap:
        raise CapExceededError(
            f"exhaustive (FA) needs ground size <= {cap} (got {n}); use sampling instead"
        )
    full = ground.full_mask
    circ_signed = pair.circuit_sig.member_masks()
    cocirc_signed = pair.cocircuit_sig.member_masks()
    circuit_masks = pair.matroid.circuit_masks
    cocircuit_masks = pair.matroid.dual().circuit_masks
    contract_cache: dict[int, tuple[int, ...]] = {}
    dual_contract_cache: dict[int, tuple[int, ...]] = {}

    def minor_members(f: int, g: int):
        en = full & ~(f | g)
        circ_n = contract_cache.get(f)
        if circ_n is None:
            circ_n = contraction_circuit_masks(circuit_masks, f)
            contract_cache[f] = circ_n
        circ_here = frozenset(c for c in circ_n if not c & g)
        cocirc_n = dual_contract_cache.get(g)
        if cocirc_n is None:
            cocirc_n = contraction_circuit_masks(cocircuit_masks, g)
            dual_contract_cache[g] = cocirc_n
        cocirc_here = frozenset(u for u in cocirc_n if not u & f)
        s_members = [
            (p & en, m & en)
            for p, m, s in circ_signed
            if not s & g and (s & en) in circ_here
        ]
        t_members = [
            (p & en, m & en)
            for p, m, s in cocirc_signed
            if not s & f and (s & en) in cocirc_here
        ]
        return en, s_members, t_members

    def fp_fail(en: int, s_members, t_members, a: int):
        cover_s = 0
        for p, m in s_members:
            if not ((m & ~a) | (p & a)):
                cover_s |= p | m
        cover_t = 0
        for p, m in t_members:
            if not ((m & ~a) | (p & a)):
                cover_t |= p | m
        both = cover_s & cover_t
        if both:
            return (both & -both).bit_length() - 1, "both"
        neither = en & ~(cover_s | cover_t)
        if neither:
            return (neither & -neither).bit_length() - 1, "neither"
        return None

    def violation(f: int, g: int, a: int, hit) -> Verdict:
        e, kind = hit
        spec = MinorSpec(indices(f), indices(g))
        return Verdict(False, FAViolation(spec, indices(a), FPViolation(e, kind)))

    if sample is not None:
        rng = random.Random(seed)
        detail = f"sampled {sample} minor/reorientation pairs, seed={seed}"
        for _ in range(sample):
            f = g = 0
            for i in range(n):
                state = rng.randrange(3)
                if state == 1:
                    f |= 1 << i
                elif state == 2:
                    g |= 1 << i
            en, s_members, t_members = minor_members(f, g)
            a = 0
            for i in bits(en):
                if rng.randrange(2):
                    a |= 1 << i
            hit = fp_fail(en, s_members, t_members, a)
            if hit is not None:
                v = violation(f, g, a, hit)
                return Verdict(False, v.witness, detail)
        return Verdict(True, detail=detail)

    for states in itertools.product(range(3), repeat=n):
        f = g = 0
        for i, st in enumerate(states):
            if st == 1:
                f |= 1 << i
            elif st == 2:
                g |= 1 << i
        en, s_members, t_members = minor_members(f, g)
        positions = list(bits(en))
        for k in range(1 << len(positions)):
            a = 0
            kk = k
            while kk:
                low = kk & -kk
                a |= 1 << positions[low.bit_length() - 1]
                kk ^= low
            hit = fp_fail(en, s_members, t_members, a)
            if hit is not None:
                return violation(f, g, a, hit)
    return Verdict(True)


def fa_gap_witness(
    pair: SignaturePair,
    *,
    cap: int = FA_CAP_DEFAULT,
    sample: int | None = None,
    seed: int = 0,
) -> FAViolation | None:
    """Hunt for a pair with the painting property but without the Farkas axiom.

    Whether (4P) alone implies (FA) is open; this harness reports a
    counterexample when one is found and None otherwise.  Finite ground sets
    cannot settle the question, so None is the expected outcome here.
    """
    if not check_4P(pair, cap=max(cap, FOUR_P_CAP_DEFAULT), sample=sample, seed=seed):
        return None
    verdict = check_FA(pair, cap=cap, sample=sample, seed=seed)
    if verdict:
        return None
    return verdict.witness


# ---------------------------------------------------------------------------
# special elimination (orthogonality refines ordinary elimination)


def special_eliminate(pair: SignaturePair, inst: EliminationInstance) -> SignedSubset:
    """A circuit D with f in its support, D(f) = C(f), avoiding X.

    Follows the constructive route: X + f is coindependent in the restriction
    to the union of supports, extend to a cobasis, take the fundamental
    circuit of f, and orient it to agree with C at f.
    """
    return _eliminate(pair, inst, avoid=0)


def eliminate_avoiding(pair: SignaturePair, inst: EliminationInstance, offending: int) -> SignedSubset:
    """Like special_eliminate but the result also avoids one offending element.

    ``offending`` must witness a failed sign inclusion of the base result:
    it lies in D^- while only the allowed positive part covers it, or
    vice versa.
    """
    base = special_eliminate(pair, inst)
    apos = inst.circuit.pos
    aneg = inst.circuit.neg
    for _, cx in inst.members:
        apos |= cx.pos
        aneg |= cx.neg
    off = 1 << offending
    if not ((base.neg & (apos & ~aneg) & off) or (base.pos & (aneg & ~apos) & off)):
        raise DomainError(f"element {offending} is not an offending element for the derived circuit")
    return _eliminate(pair, inst, avoid=off)


def _eliminate(pair: SignaturePair, inst: EliminationInstance, avoid: int) -> SignedSubset:
    m = pair.matroid
    c = inst.circuit
    if c not in pair.circuit_sig:
        raise DomainError("eliminated circuit is not in the signature")
    for _, cx in inst.members:
        if cx not in pair.circuit_sig:
            raise DomainError("family member is not in the signature")
    g = c.support
    for _, cx in inst.members:
        g |= cx.support
    x = inst.x_mask
    fb = 1 << inst.retained
    blocked = x | fb | avoid
    rank_g = m.rank(g)
    if m.rank(g & ~blocked) != rank_g:
        raise InvariantError(
            "X plus the retained element is not coindependent in the restriction; "
            "this contradicts the special-elimination guarantee"
        )
    cobasis = blocked
    for i in bits(g & ~blocked):
        cand = cobasis | (1 << i)
        if m.rank(g & ~cand) == rank_g:
            cobasis = cand
    basis = g & ~cobasis
    allowed = basis | fb
    support = None
    for cm in m.circuit_masks:
        if cm & fb and not cm & ~allowed:
            support = cm
            break
    if support is None:
        raise InvariantError("no fundamental circuit through the retained element")
    d = pair.circuit_sig.by_support(support)
    c_sign = 1 if c.pos & fb else -1
    d_sign = 1 if d.pos & fb else -1
    return d if c_sign == d_sign else -d


# ---------------------------------------------------------------------------
# vectors and conformal decomposition


def vectors(sig: CircuitSignature, support_cap: int | None = None) -> frozenset[SignedSubset]:
    """All compositions of signed circuits: binary-composition fixpoint.

    ``support_cap`` prunes to vectors with support size at most the cap;
    pruning is safe because composition only grows supports.
    """
    ground = sig.ground

    def keep(p: int, n: int) -> bool:
        return support_cap is None or (p | n).bit_count() <= support_cap

    result: set[tuple[int, int]] = set()
    queue: deque[tuple[int, int]] = deque()
    for s in sig.signed:
        key = (s.pos, s.neg)
        if keep(*key) and key not in result:
            result.add(key)
            queue.append(key)
    while queue:
        xp, xn = queue.popleft()
        xs = xp | xn
        for yp, yn in list(result):
            ys = yp | yn
            for key in (
                (xp | (yp & ~xs), xn | (yn & ~xs)),
                (yp | (xp & ~ys), yn | (xn & ~ys)),
            ):
                if keep(*key) and key not in result:
                    result.add(key)
                    queue.append(key)
    return frozenset(SignedSubset(ground, p, n) for p, n in result)


def conformal_decompose(
    pair: SignaturePair,
    target: SignedSubset,
    *,
    trust_4p: bool = False,
    cap_4p: int = FOUR_P_CAP_DEFAULT,
) -> list[SignedSubset] | DecomposeFailure:
    """Signed circuits conforming to ``target`` whose composition is ``target``.

    Greedy cover: for every support element pick the least conforming circuit
    through it.  Preconditions: the pair satisfies (4P) (checked unless
    trusted) and ``target`` is orthogonal to every signed cocircuit.
    """
    if target.ground != pair.ground:
        raise GroundMismatchError("target lives on a different ground set")
    if not trust_4p:
        verdict = check_4P(pair, cap=cap_4p)
        if not verdict:
            raise DomainError(f"pair fails (4P): {verdict.witness}")
    for u in pair.cocircuit_sig.representatives():
        if not target.orthogonal(u):
            raise DomainError(f"target is not orthogonal to cocircuit {u}")
    chosen: list[SignedSubset] = []
    seen: set[SignedSubset] = set()
    reps = sorted(pair.circuit_sig.signed, key=lambda s: s.sort_key())
    for e in bits(target.support):
        b = 1 << e
        hit = None
        for c in reps:
            if c.support & b and c.conforms_to(target):
                hit = c
                break
        if hit is None:
            return DecomposeFailure(e)
        if hit not in seen:
            seen.add(hit)
            chosen.append(hit)
    return chosen


# ---------------------------------------------------------------------------
# canonical example generator


def alternating_rank2(n: int) -> SignaturePair:
    """Rank-2 uniform matroid on n elements with the alternating signing.

    Circuits are all triples signed (+,-,+) in ground order; each cocircuit
    omits one element i and carries opposite signs on the two legs around i:
    plus before it, minus after it.
    """
    if n < 3:
        raise DomainError("the alternating truncation needs at least 3 elements")
    ground = GroundSet.range(n)
    triples = [mask_of(c) for c in itertools.combinations(range(n), 3)]
    m = Matroid._from_valid(ground, triples)
    circ_reps = []
    for combo in itertools.combinations(range(n), 3):
        i, j, k = combo
        circ_reps.append(SignedSubset(ground, (1 << i) | (1 << k), 1 << j))
    cocirc_reps = []
    for i in range(n):
        before = (1 << i) - 1
        after = ground.full_mask & ~((1 << (i + 1)) - 1)
        cocirc_reps.append(SignedSubset(ground, before, after))
    csig = CircuitSignature.from_representatives(m, circ_reps)
    cosig = CircuitSignature.from_representatives(m.dual(), cocirc_reps)
    return SignaturePair(m, csig, cosig)
