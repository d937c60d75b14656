"""Named reflections, their radicals, and reflector-level law checks.

Each reflector quotients by a computable radical subobject: ab by the
commutator subgroup, burnside:k by k-th powers joined with commutators,
reduced by the nilradical, zerorng by sums of products, boole by the
ideal generated by x^2 - x, pi0 by the connected-component kernel.
Composite reflectors chain two units and take the kernel of the
composite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    Algebra,
    AlgebraError,
    ALL_KINDS,
    Morphism,
    Subobject,
    Variety,
    compose,
    full_subobject,
    is_injective,
    sub_algebra,
    subobject,
    zero_subobject,
)
from .homs import enumerate_homs, sections, surjections
from .ops import (
    ExactSequence,
    huq_commutator,
    image,
    induced_on_quotient,
    join_normal,
    kernel,
    normal_closure,
    power_subobject,
    quotient,
)
from .report import Report
from .serialize import algebra_to_doc, morphism_to_doc, subobject_to_doc


class ReflectorError(ValueError):
    """Unknown reflector id or variety mismatch."""


@dataclass(frozen=True)
class Reflector:
    name: str
    kinds: tuple[str, ...]
    torsion_theory: bool
    k: int | None = None
    outer: "Reflector | None" = None
    inner: "Reflector | None" = None

    def applies_to(self, variety: Variety) -> bool:
        return variety.kind in self.kinds

    @property
    def is_composite(self) -> bool:
        return self.outer is not None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class TorsionDecomposition:
    """The canonical sequence radical -> algebra -> reflection."""

    algebra: Algebra
    radical_part: Subobject
    torsion_inclusion: Morphism
    reflection: Algebra
    unit: Morphism

    def __post_init__(self) -> None:
        if kernel(self.unit).elements != self.radical_part.elements:
            raise AlgebraError("unit kernel disagrees with the radical")


# ---------------------------------------------------------------------------
# radical implementations


def _nilradical(A: Algebra) -> Subobject:
    nils = set()
    for x in range(A.order):
        v = x
        for _ in range(A.order):
            if v == 0:
                nils.add(x)
                break
            v = A.mul[v][x]
    return subobject(A, frozenset(nils))


def _boole_radical(A: Algebra) -> Subobject:
    seeds = {A.add[A.mul[x][x]][A.neg[x]] for x in range(A.order)}
    return normal_closure(A, seeds)


def _pi0_radical(A: Algebra) -> Subobject:
    G1, G0 = A.g1, A.g0
    seeds = {G0.op[G0.inv[A.d[g]]][A.c[g]] for g in range(G1.order)}
    N0 = normal_closure(G0, seeds)
    K1 = frozenset(g for g in range(G1.order) if A.d[g] in N0.elements)
    return subobject(A, (K1, N0.elements))


def _base_radical(R: Reflector, A: Algebra) -> Subobject:
    root = R.name.split(":", 1)[0]
    if root == "id":
        return zero_subobject(A)
    if root == "ab":
        return huq_commutator(A, full_subobject(A), full_subobject(A))
    if root == "burnside":
        powers = power_subobject(A, R.k)
        if A.kind == "group":
            return join_normal(A, powers, huq_commutator(A, full_subobject(A), full_subobject(A)))
        return powers
    if root == "reduced":
        return _nilradical(A)
    if root == "zerorng":
        return huq_commutator(A, full_subobject(A), full_subobject(A))
    if root == "boole":
        return _boole_radical(A)
    if root == "pi0":
        return _pi0_radical(A)
    raise ReflectorError(f"no radical for {R.name!r}")


@lru_cache(maxsize=None)
def reflect(R: Reflector, A: Algebra) -> TorsionDecomposition:
    """The canonical short exact sequence T(A) -> A -> F(A)."""
    if not R.applies_to(A.variety):
        raise ReflectorError(f"{R.name} does not apply to {A.variety.kind}")
    if R.is_composite:
        first = reflect(R.inner, A)
        second = reflect(R.outer, first.reflection)
        unit = compose(second.unit, first.unit)
        T = kernel(unit)
        _, incl = sub_algebra(A, T)
        return TorsionDecomposition(A, T, incl, second.reflection, unit)
    T = _base_radical(R, A)
    Q, unit = quotient(A, T)
    _, incl = sub_algebra(A, T)
    return TorsionDecomposition(A, T, incl, Q, unit)


def radical(R: Reflector, A: Algebra) -> Subobject:
    return reflect(R, A).radical_part


def radical_algebra(R: Reflector, A: Algebra) -> Algebra:
    sub, _ = sub_algebra(A, radical(R, A))
    return sub


def map_reflect(R: Reflector, f: Morphism) -> Morphism:
    """The induced morphism between the reflections."""
    eta_dom = reflect(R, f.dom).unit
    eta_cod = reflect(R, f.cod).unit
    return induced_on_quotient(eta_dom, compose(eta_cod, f))


def is_torsion_member(R: Reflector, A: Algebra) -> bool:
    return radical(R, A).is_whole()


def is_free_member(R: Reflector, A: Algebra) -> bool:
    """Member of the reflective subcategory (zero radical)."""
    return radical(R, A).is_zero()


# ---------------------------------------------------------------------------
# registry


_BASES = {
    "ab": (("group",), False),
    "reduced": (("comm-ring",), True),
    "zerorng": (("rng-star",), True),
    "boole": (("nonassoc-ring",), False),
    "pi0": (("gpd-in-group",), True),
    "id": (tuple(sorted(ALL_KINDS)), True),
}

BASE_REFLECTOR_IDS = tuple(_BASES) + ("burnside:<k>", "composite:<outer>∘<inner>")


def reflector_by_id(rid: str) -> Reflector:
    rid = rid.strip()
    if rid.startswith("composite:"):
        body = rid[len("composite:"):]
        if "∘" not in body:
            raise ReflectorError(f"composite id needs outer∘inner, got {rid!r}")
        outer_id, inner_id = body.split("∘", 1)
        outer = reflector_by_id(outer_id)
        inner = reflector_by_id(inner_id if "∘" not in inner_id
                                else f"composite:{inner_id}")
        kinds = tuple(k for k in inner.kinds if k in outer.kinds)
        if not kinds:
            raise ReflectorError(f"{outer_id} and {inner_id} share no variety")
        return Reflector(f"composite:{outer.name}∘{inner.name}", kinds, False,
                         outer=outer, inner=inner)
    if rid.startswith("burnside:"):
        raw = rid[len("burnside:"):]
        if not raw.isdigit() or int(raw) < 1:
            raise ReflectorError(f"burnside exponent must be a positive integer, got {raw!r}")
        return Reflector(f"burnside:{int(raw)}", ("group", "zmod-module"), False, k=int(raw))
    if rid in _BASES:
        kinds, tt = _BASES[rid]
        return Reflector(rid, kinds, tt)
    raise ReflectorError(f"unknown reflector {rid!r}")


_PROTOADDITIVE_BY_DESIGN = {
    ("reduced", "comm-ring"),
    ("zerorng", "rng-star"),
    ("pi0", "gpd-in-group"),
    ("burnside", "zmod-module"),
}


def known_protoadditive_on(R: Reflector, kind: str) -> bool:
    """Whether preservation of split short exact sequences is expected
    for this reflector on this variety (the checks still run)."""
    root = R.name.split(":", 1)[0]
    return root == "id" or (root, kind) in _PROTOADDITIVE_BY_DESIGN


# ---------------------------------------------------------------------------
# corpus sweeps


def split_exact_sequences(corpus) -> list[ExactSequence]:
    """One split short exact sequence per sectioned corpus surjection."""
    out = []
    algebras = list(corpus)
    for A in algebras:
        for B in algebras:
            if A.variety != B.variety:
                continue
            for f in surjections(A, B):
                secs = sections(f)
                if not secs:
                    continue
                _, incl = sub_algebra(A, kernel(f))
                out.append(ExactSequence(incl, f, secs[0]))
    return out


def short_exact_sequences(corpus) -> list[ExactSequence]:
    out = []
    algebras = list(corpus)
    for A in algebras:
        for B in algebras:
            if A.variety != B.variety:
                continue
            for f in surjections(A, B):
                _, incl = sub_algebra(A, kernel(f))
                out.append(ExactSequence(incl, f))
    return out


def _sequence_witness(check: str, R: Reflector, seq: ExactSequence, detail: dict | None = None) -> dict:
    doc = {
        "check": check,
        "reflector": R.name,
        "kernel": morphism_to_doc(seq.k),
        "epi": morphism_to_doc(seq.f),
    }
    if seq.splitting is not None:
        doc["section"] = morphism_to_doc(seq.splitting)
    if detail:
        doc.update(detail)
    return doc


def preserves_split_sequence(R: Reflector, seq: ExactSequence) -> bool:
    """Does applying the reflector keep the sequence split short exact?"""
    Fk = map_reflect(R, seq.k)
    Ff = map_reflect(R, seq.f)
    if not is_injective(Fk):
        return False
    return image(Fk).elements == kernel(Ff).elements


def is_protoadditive(R: Reflector, sequences) -> Report:
    """Scan split short exact sequences for preservation failures."""
    seqs = list(sequences)
    for seq in seqs:
        if seq.splitting is None:
            raise AlgebraError("protoadditivity takes split sequences only")
    witnesses = []
    for seq in seqs:
        if not preserves_split_sequence(R, seq):
            witnesses.append(_sequence_witness("split-preservation", R, seq))
    return Report(
        suite=f"protoadditive[{R.name}]",
        verdict="pass" if not witnesses else "fail",
        witnesses=witnesses,
        sample={"split-sequences": len(seqs)},
        notes=["corpus-restricted verdict"],
    )


def is_idempotent_radical(R: Reflector, corpus) -> Report:
    witnesses = []
    count = 0
    for A in corpus:
        if not R.applies_to(A.variety):
            continue
        count += 1
        T = radical(R, A)
        sub, _ = sub_algebra(A, T)
        TT = radical(R, sub)
        if not TT.is_whole():
            witnesses.append({
                "check": "idempotent-radical",
                "reflector": R.name,
                "algebra": algebra_to_doc(A),
                "radical": subobject_to_doc(T),
                "radical-of-radical": subobject_to_doc(TT),
            })
    return Report(
        suite=f"idempotent-radical[{R.name}]",
        verdict="pass" if not witnesses else "fail",
        witnesses=witnesses,
        sample={"objects": count},
        notes=["corpus-restricted verdict"],
    )


def torsion_theory_report(R: Reflector, corpus) -> Report:
    """Idempotency, hom-vanishing, and closure under extensions."""
    algebras = [A for A in corpus if R.applies_to(A.variety)]
    idem = is_idempotent_radical(R, algebras)
    witnesses = list(idem.witnesses)
    torsion = [A for A in algebras if is_torsion_member(R, A)]
    free = [A for A in algebras if is_free_member(R, A)]
    hom_pairs = 0
    for T in torsion:
        for F in free:
            if T.variety != F.variety:
                continue
            hom_pairs += 1
            nonzero = [f for f in enumerate_homs(T, F)
                       if any(v != 0 for v in (f.map1 + f.map0 if T.is_gpd else f.mapping))]
            if nonzero:
                witnesses.append({
                    "check": "hom-vanishing",
                    "reflector": R.name,
                    "torsion": algebra_to_doc(T),
                    "free": algebra_to_doc(F),
                    "morphism": morphism_to_doc(nonzero[0]),
                })
    seq_count = 0
    for seq in short_exact_sequences(algebras):
        seq_count += 1
        K, A, B = seq.k.dom, seq.f.dom, seq.f.cod
        if is_torsion_member(R, K) and is_torsion_member(R, B) and not is_torsion_member(R, A):
            witnesses.append(_sequence_witness("torsion-extension-closure", R, seq))
        if is_free_member(R, K) and is_free_member(R, B) and not is_free_member(R, A):
            witnesses.append(_sequence_witness("free-extension-closure", R, seq))
    return Report(
        suite=f"torsion-theory[{R.name}]",
        verdict="pass" if not witnesses else "fail",
        witnesses=witnesses,
        sample={"objects": len(algebras), "hom-pairs": hom_pairs, "sequences": seq_count},
        notes=["corpus-restricted verdict"],
    )
