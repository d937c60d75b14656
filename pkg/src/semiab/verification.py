"""Named verification suites sweeping corpora for the library's claims.

Each suite certifies one equivalence or closure property over a named
corpus, or emits replayable counterexample witnesses.  A pass never
claims more than the sweep saw.  Where an instance stream is quadratic
the sweep samples it deterministically from the seed and reports the
sample size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .algebra import (
    Algebra,
    AlgebraError,
    Morphism,
    compose,
    full_subobject,
    identity_morphism,
    is_injective,
    is_isomorphism_map,
    sub_algebra,
    zero_morphism,
)
from .birkhoff import BirkhoffContext, birkhoff_radical, composite_radical, object_cube
from .corpus import corpus_by_id, corpus_ids
from .cubes import NCube, cube_of_morphism, is_nfold_extension, is_pushout_square, square
from .factorisation import (
    classify_em,
    check_orthogonal,
    condition_N_check,
    double_normal_by_galois,
    em_factorize,
    is_normal_extension,
    nfold_normal_by_criterion,
)
from .families import trivial_of_variety
from .homs import enumerate_homs, surjections
from .ops import (
    ExactSequence,
    huq_commutator,
    image,
    induced_on_quotient,
    into_pullback,
    join_normal,
    kernel,
    normal_closure,
    power_subobject,
    pullback,
    quotient,
)
from .reflectors import (
    Reflector,
    is_free_member,
    is_protoadditive,
    is_torsion_member,
    known_protoadditive_on,
    map_reflect,
    radical,
    reflect,
    reflector_by_id,
    split_exact_sequences,
    short_exact_sequences,
    torsion_theory_report,
)
from .report import Report, merge_reports
from .serialize import (
    algebra_from_doc,
    algebra_to_doc,
    cube_from_doc,
    cube_to_doc,
    morphism_from_doc,
    morphism_to_doc,
)

CORPUS_NOTE = "corpus-restricted verdict"


class SuiteError(ValueError):
    """Unknown suite id."""


class SuiteCompatibilityError(ValueError):
    """The reflector or corpus cannot feed this suite."""


# ---------------------------------------------------------------------------
# instance streams


@lru_cache(maxsize=None)
def _surjections_in(corpus: tuple) -> tuple[Morphism, ...]:
    out = []
    for A in corpus:
        for B in corpus:
            if A.variety == B.variety:
                out.extend(surjections(A, B))
    return tuple(out)


def _applicable(R: Reflector, corpus) -> tuple[Algebra, ...]:
    algebras = tuple(A for A in corpus if R.applies_to(A.variety))
    if not algebras:
        raise SuiteCompatibilityError(
            f"reflector {R.name!r} applies to nothing in the corpus")
    return algebras


def _sample(items, seed: int, cap: int) -> list:
    items = list(items)
    if len(items) <= cap:
        return items
    picked = sorted(random.Random(seed).sample(range(len(items)), cap))
    return [items[i] for i in picked]


def _kernel_algebra(f: Morphism) -> Algebra:
    sub, _ = sub_algebra(f.dom, kernel(f))
    return sub


def _seq_doc(check: str, R: Reflector | None, seq: ExactSequence, detail: dict | None = None) -> dict:
    doc = {"check": check, "kernel": morphism_to_doc(seq.k), "epi": morphism_to_doc(seq.f)}
    if R is not None:
        doc["reflector"] = R.name
    if seq.splitting is not None:
        doc["section"] = morphism_to_doc(seq.splitting)
    if detail:
        doc.update(detail)
    return doc


def _pushout_square(f: Morphism, g: Morphism) -> NCube:
    j = join_normal(f.dom, kernel(f), kernel(g))
    _, q = quotient(f.dom, j)
    return square(f, g, induced_on_quotient(f, q), induced_on_quotient(g, q))


def _derived_squares(corpus, seed: int, cap: int) -> list[NCube]:
    """Double extensions (and a few non-extensions) built from corpus epis."""
    surjs = [f for f in _surjections_in(corpus)
             if f.dom.is_gpd or f.dom.order > 1 or f.cod.order > 1]
    by_dom: dict[int, list[Morphism]] = {}
    for f in surjs:
        by_dom.setdefault(id(f.dom), []).append(f)
    squares: list[NCube] = []
    for fs in by_dom.values():
        for i, f in enumerate(fs):
            for g in fs[i:]:
                squares.append(_pushout_square(f, g))
                # collapsing the bottom vertex keeps the square commuting
                # but spoils the pushout comparison (unless the two kernels
                # already join to the whole domain)
                T = trivial_of_variety(f.dom.variety)
                squares.append(square(f, g, zero_morphism(f.cod, T),
                                      zero_morphism(g.cod, T)))
    for f in surjs:
        squares.append(square(f, f, identity_morphism(f.cod), identity_morphism(f.cod)))
    return _sample(squares, seed, cap)


# ---------------------------------------------------------------------------
# protoadditivity routes


def protoadditive_by_definition(R: Reflector, corpus) -> Report:
    """Split-sequence preservation, checked sequence by sequence."""
    seqs = split_exact_sequences(_applicable(R, corpus))
    report = is_protoadditive(R, seqs)
    return Report("protoadditive-definition", report.verdict, report.witnesses,
                  report.sample, [CORPUS_NOTE])


def protoadditive_by_pullbacks(R: Reflector, corpus, seed: int = 0) -> Report:
    """Preservation of pullbacks along split epimorphisms."""
    algebras = _applicable(R, corpus)
    seqs = split_exact_sequences(algebras)
    witnesses = []
    checked = 0
    for seq in seqs:
        f = seq.f
        others = []
        for C in algebras:
            if C.variety == f.cod.variety:
                others.extend(enumerate_homs(C, f.cod))
        for g in _sample(others, seed, 6):
            checked += 1
            P, p1, p2 = pullback(f, g)
            Q, q1, q2 = pullback(map_reflect(R, f), map_reflect(R, g))
            cmp = into_pullback(Q, q1, q2, map_reflect(R, p1), map_reflect(R, p2))
            if not is_isomorphism_map(cmp):
                witnesses.append(_seq_doc("pullback-not-preserved", R, seq,
                                          {"along": morphism_to_doc(g)}))
                break
    return Report("protoadditive-pullbacks",
                  "pass" if not witnesses else "fail", witnesses,
                  {"split-sequences": len(seqs), "pullbacks": checked},
                  [CORPUS_NOTE])


def protoadditive_by_protosplit_monos(R: Reflector, corpus) -> Report:
    """Reflected protosplit monomorphisms staying normal monomorphisms."""
    seqs = split_exact_sequences(_applicable(R, corpus))
    witnesses = []
    for seq in seqs:
        Fk = map_reflect(R, seq.k)
        if not (is_injective(Fk) and image(Fk).normal):
            witnesses.append(_seq_doc("protosplit-mono-image", R, seq))
    return Report("protoadditive-protosplit-monos",
                  "pass" if not witnesses else "fail", witnesses,
                  {"protosplit-monos": len(seqs)}, [CORPUS_NOTE])


def _image_set(f: Morphism):
    if f.dom.is_gpd:
        return (frozenset(f.map1), frozenset(f.map0))
    return frozenset(f.mapping)


def _flat(elements):
    if isinstance(elements, tuple) and len(elements) == 2 and isinstance(elements[0], frozenset):
        return [("g1", x) for x in elements[0]] + [("g0", x) for x in elements[1]]
    return list(elements)


# ---------------------------------------------------------------------------
# suites


def _suite_thm_1_6(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    base = torsion_theory_report(R, algebras)
    witnesses = list(base.witnesses)
    sample = dict(base.sample)
    pullbacks = 0
    for A in algebras:
        dec = reflect(R, A)
        for Y in algebras:
            if Y.variety != A.variety:
                continue
            free_Y = is_free_member(R, Y)
            for g in _sample(enumerate_homs(Y, dec.reflection), seed, 4):
                pullbacks += 1
                _, _, p2 = pullback(dec.unit, g)
                if not is_isomorphism_map(map_reflect(R, p2)):
                    witnesses.append({
                        "check": "unit-pullback-not-inverted",
                        "reflector": R.name,
                        "algebra": algebra_to_doc(A),
                        "along": morphism_to_doc(g),
                        "semi-left-exact-instance": free_Y,
                    })
    sample["unit-pullbacks"] = pullbacks
    return Report("thm-1.6", "pass" if not witnesses else "fail",
                  witnesses, sample, [CORPUS_NOTE])


def _suite_prop_2_2(R: Reflector, corpus, seed: int) -> Report:
    report = protoadditive_by_pullbacks(R, corpus, seed)
    return Report("prop-2.2", report.verdict, report.witnesses, report.sample,
                  report.notes)


def _suite_prop_2_3(R: Reflector, corpus, seed: int) -> Report:
    lhs = protoadditive_by_definition(R, corpus)
    rhs = protoadditive_by_protosplit_monos(R, corpus)
    agree = lhs.passed == rhs.passed
    notes = [CORPUS_NOTE,
             "equivalence agreement: split-sequence route "
             + ("and" if agree else "versus")
             + " protosplit-mono route"]
    witnesses = []
    if agree and not lhs.passed:
        notes.append("both routes fail together; witnesses replay the mono route")
        witnesses = rhs.witnesses
    if not agree:
        witnesses = (lhs.witnesses or rhs.witnesses)
    sample = dict(lhs.sample)
    sample.update(rhs.sample)
    return Report("prop-2.3", "pass" if agree else "fail", witnesses, sample, notes)


def _suite_thm_2_4(R: Reflector, corpus, seed: int) -> Report:
    lhs = protoadditive_by_definition(R, corpus)
    witnesses = []
    seqs = split_exact_sequences(_applicable(R, corpus))
    for seq in seqs:
        K = seq.k.dom
        TK_in_A = set(_flat(_push(seq.k, radical(R, K).elements)))
        TA = set(_flat(radical(R, seq.f.dom).elements))
        imgK = set(_flat(_image_set(seq.k)))
        if TK_in_A != (TA & imgK):
            witnesses.append(_seq_doc("heredity-mismatch", R, seq))
    hereditary = not witnesses
    agree = lhs.passed == hereditary
    if agree and not hereditary:
        kept = witnesses
    elif not agree:
        kept = witnesses or lhs.witnesses
    else:
        kept = []
    notes = [CORPUS_NOTE,
             "equivalence agreement: protoadditivity versus radical heredity on protosplit monos"]
    if agree and not hereditary:
        notes.append("both sides fail together; witnesses replay the heredity route")
    return Report("thm-2.4", "pass" if agree else "fail", kept,
                  {"protosplit-monos": len(seqs), **lhs.sample}, notes)


def _push(f: Morphism, elements):
    if f.dom.is_gpd:
        return (frozenset(f.map1[x] for x in elements[0]),
                frozenset(f.map0[x] for x in elements[1]))
    return frozenset(f.mapping[x] for x in elements)


def _suite_prop_2_5_2_7(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    if R.torsion_theory:
        classes = [("torsion", is_torsion_member), ("free", is_free_member)]
    else:
        classes = [("subvariety", is_free_member)]
    witnesses = []
    split_n = seq_n = 0
    for split, seqs in ((True, split_exact_sequences(algebras)),
                        (False, short_exact_sequences(algebras))):
        for seq in seqs:
            if split:
                split_n += 1
            else:
                seq_n += 1
            K = seq.k.dom
            A, B = seq.f.dom, seq.f.cod
            for label, member in classes:
                if member(R, K) and member(R, B) and not member(R, A):
                    witnesses.append(_seq_doc("class-extension-closure", R, seq,
                                              {"class": label, "split": split}))
    return Report("prop-2.5/2.7", "pass" if not witnesses else "fail", witnesses,
                  {"split-sequences": split_n, "sequences": seq_n}, [CORPUS_NOTE])


def _suite_prop_3_1(R: Reflector, corpus, seed: int) -> Report:
    witnesses = []
    surjs = [f for f in _surjections_in(_applicable(R, corpus))]
    for f in surjs:
        lhs = is_normal_extension(R, f)
        rhs = is_free_member(R, _kernel_algebra(f))
        if lhs != rhs:
            witnesses.append({
                "check": "normal-vs-kernel-mismatch",
                "reflector": R.name,
                "epi": morphism_to_doc(f),
            })
    return Report("prop-3.1", "pass" if not witnesses else "fail", witnesses,
                  {"surjections": len(surjs)}, [CORPUS_NOTE])


def _em_classes(R: Reflector, corpus):
    es, ms = [], []
    for f in _surjections_in(_applicable(R, corpus)):
        cls = classify_em(R, f)
        if cls in ("e", "both"):
            es.append(f)
        if cls in ("m", "both"):
            ms.append(f)
    return es, ms


def _orthogonality_witnesses(R: Reflector, es, ms, seed: int, cap: int):
    witnesses = []
    pairs = [(e, m) for e in es for m in ms]
    checked = 0
    for e, m in _sample(pairs, seed, cap):
        for u in _sample(enumerate_homs(e.dom, m.dom), seed, 4):
            v = _induced_on_cod(e, compose(m, u))
            if v is None:
                continue
            checked += 1
            status, _ = check_orthogonal(e, m, (u, v))
            if status != "unique":
                witnesses.append({
                    "check": "orthogonality-failure",
                    "reflector": R.name,
                    "e": morphism_to_doc(e),
                    "m": morphism_to_doc(m),
                    "top": morphism_to_doc(u),
                    "bottom": morphism_to_doc(v),
                })
    return witnesses, checked


def _induced_on_cod(e: Morphism, through: Morphism) -> Morphism | None:
    """The map on cod(e) acting like ``through`` on e-fibres, if well defined."""
    try:
        return induced_on_quotient(e, through)
    except AlgebraError:
        return None


def _suite_lemma_3_2(R: Reflector, corpus, seed: int) -> Report:
    es, ms = _em_classes(R, corpus)
    witnesses, checked = _orthogonality_witnesses(R, es, ms, seed, 150)
    return Report("lemma-3.2", "pass" if not witnesses else "fail", witnesses,
                  {"e-maps": len(es), "m-maps": len(ms), "squares": checked},
                  [CORPUS_NOTE])


def _suite_prop_3_4(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    es, ms = _em_classes(R, corpus)
    witnesses = []
    fact_n = 0
    for f in _surjections_in(algebras):
        fact_n += 1
        fac = em_factorize(R, f)
        if classify_em(R, fac.e) not in ("e", "both") or classify_em(R, fac.m) not in ("m", "both"):
            witnesses.append({
                "check": "factorisation-classes",
                "reflector": R.name,
                "epi": morphism_to_doc(f),
            })
    ortho_w, ortho_n = _orthogonality_witnesses(R, es, ms, seed, 60)
    witnesses.extend(ortho_w)
    stable_n = 0
    for e in _sample(es, seed, 30):
        for C in algebras:
            if C.variety != e.cod.variety:
                continue
            for g in _sample(enumerate_homs(C, e.cod), seed, 3):
                stable_n += 1
                _, _, p2 = pullback(e, g)
                if classify_em(R, p2) not in ("e", "both"):
                    witnesses.append({
                        "check": "e-class-not-stable",
                        "reflector": R.name,
                        "e": morphism_to_doc(e),
                        "along": morphism_to_doc(g),
                    })
    return Report("prop-3.4", "pass" if not witnesses else "fail", witnesses,
                  {"factorisations": fact_n, "orthogonal-squares": ortho_n,
                   "pullbacks": stable_n}, [CORPUS_NOTE])


def _factorisation_unique(R: Reflector, f: Morphism, alt_e: Morphism) -> bool:
    """Does the alternative Ē/M̄ factorisation of f match the canonical one?"""
    fac = em_factorize(R, f)
    alt_m = _induced_on_cod(alt_e, f)
    if alt_m is None:
        return True  # not a factorisation of f at all
    if classify_em(R, alt_e) not in ("e", "both") or classify_em(R, alt_m) not in ("m", "both"):
        return True  # not an Ē/M̄ factorisation, uniqueness says nothing
    status, diagonals = check_orthogonal(alt_e, fac.m, (fac.e, alt_m))
    return status == "unique" and is_isomorphism_map(diagonals[0])


def _suite_thm_3_5(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    witnesses = []
    count = 0
    alternatives = 0
    surjs = _surjections_in(algebras)
    for f in surjs:
        if not condition_N_check(R, f):
            continue
        count += 1
        fac = em_factorize(R, f)
        if classify_em(R, fac.e) not in ("e", "both") or classify_em(R, fac.m) not in ("m", "both"):
            witnesses.append({
                "check": "factorisation-classes",
                "reflector": R.name,
                "epi": morphism_to_doc(f),
            })
            continue
        # every corpus-constructible rival factorisation must agree up to
        # a unique middle isomorphism
        for M in algebras:
            if M.variety != f.dom.variety:
                continue
            for alt_e in surjections(f.dom, M):
                alternatives += 1
                if not _factorisation_unique(R, f, alt_e):
                    witnesses.append({
                        "check": "factorisation-not-unique",
                        "reflector": R.name,
                        "epi": morphism_to_doc(f),
                        "alt-epi": morphism_to_doc(alt_e),
                    })
    return Report("thm-3.5", "pass" if not witnesses else "fail", witnesses,
                  {"factorisations": count, "alternatives": alternatives},
                  [CORPUS_NOTE])


def _suite_remark_4_3(R: Reflector | None, corpus, seed: int) -> Report:
    witnesses = []
    squares = _derived_squares(tuple(corpus), seed, 140)
    for sq in squares:
        if is_nfold_extension(sq) != is_pushout_square(sq):
            witnesses.append({"check": "pushout-vs-double-extension",
                              "square": cube_to_doc(sq)})
    return Report("remark-4.3", "pass" if not witnesses else "fail", witnesses,
                  {"squares": len(squares)}, [CORPUS_NOTE])


def _suite_thm_4_6(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    witnesses = []
    checked = 0
    for sq in _derived_squares(algebras, seed, 120):
        if not is_nfold_extension(sq):
            continue
        checked += 1
        lhs = nfold_normal_by_criterion(R, sq)
        rhs = double_normal_by_galois(R, sq)
        if lhs != rhs:
            witnesses.append({
                "check": "criterion-vs-galois",
                "reflector": R.name,
                "square": cube_to_doc(sq),
            })
    return Report("thm-4.6", "pass" if not witnesses else "fail", witnesses,
                  {"double-extensions": checked}, [CORPUS_NOTE])


def _suite_prop_5_5(R: Reflector, corpus, seed: int) -> Report:
    algebras = _applicable(R, corpus)
    try:
        ctx = BirkhoffContext(R, algebras)
    except AlgebraError as exc:
        raise SuiteCompatibilityError(str(exc)) from None
    group_oracle = R.name == "ab"
    proto = all(known_protoadditive_on(R, A.kind) for A in algebras)
    if not group_oracle and not proto:
        raise SuiteCompatibilityError(
            "needs the commutator oracle (ab on groups) or a protoadditive reflector")
    witnesses = []
    surjs = _surjections_in(algebras)
    for f in surjs:
        rad = birkhoff_radical(ctx, f)
        if group_oracle:
            K = kernel(f)
            comm = huq_commutator(f.dom, K, full_subobject(f.dom))
            if set(rad.elements) != set(comm.elements):
                witnesses.append({
                    "check": "radical-vs-commutator",
                    "reflector": R.name,
                    "epi": morphism_to_doc(f),
                })
        if proto:
            if rad.is_zero() != is_free_member(R, _kernel_algebra(f)):
                witnesses.append({
                    "check": "normal-vs-kernel-membership",
                    "reflector": R.name,
                    "epi": morphism_to_doc(f),
                })
    return Report("prop-5.5", "pass" if not witnesses else "fail", witnesses,
                  {"surjections": len(surjs)}, [CORPUS_NOTE])


def _composite_parts(R: Reflector) -> tuple[Reflector, Reflector]:
    if not R.is_composite:
        raise SuiteCompatibilityError("this suite needs a composite reflector")
    return R.outer, R.inner


def _suite_thm_6_2(R: Reflector, corpus, seed: int) -> Report:
    _, inner = _composite_parts(R)
    algebras = _applicable(R, corpus)
    ctx = BirkhoffContext(inner, algebras, C=R)
    witnesses = []
    surjs = _surjections_in(algebras)
    for f in surjs:
        c = cube_of_morphism(f)
        via_join = composite_radical(ctx, c, "join").is_zero()
        b_normal = birkhoff_radical(ctx, f).is_zero()
        kernel_in_c = is_free_member(R, _kernel_algebra(f))
        direct = is_normal_extension(R, f)
        if not (via_join == (b_normal and kernel_in_c) == direct):
            witnesses.append({
                "check": "composite-normal-routes",
                "reflector": R.name,
                "epi": morphism_to_doc(f),
            })
    return Report("thm-6.2", "pass" if not witnesses else "fail", witnesses,
                  {"surjections": len(surjs)}, [CORPUS_NOTE])


def _suite_thm_6_5(R: Reflector, corpus, seed: int) -> Report:
    _, inner = _composite_parts(R)
    algebras = _applicable(R, corpus)
    ctx = BirkhoffContext(inner, algebras, C=R)
    direct_ctx = BirkhoffContext(R, algebras)
    witnesses = []
    surjs = _surjections_in(algebras)
    for f in surjs:
        joined = composite_radical(ctx, cube_of_morphism(f), "join")
        direct = birkhoff_radical(direct_ctx, f)
        if set(_flat(joined.elements)) != set(_flat(direct.elements)):
            witnesses.append({
                "check": "join-vs-direct",
                "reflector": R.name,
                "epi": morphism_to_doc(f),
            })
    return Report("thm-6.5", "pass" if not witnesses else "fail", witnesses,
                  {"surjections": len(surjs)}, [CORPUS_NOTE])


def _suite_lemma_6_6(R: Reflector, corpus, seed: int) -> Report:
    outer, inner = _composite_parts(R)
    if inner.name != "ab" or outer.k is None:
        raise SuiteCompatibilityError(
            "the join identity is stated for burnside:k over abelianisation")
    algebras = _applicable(R, corpus)
    ctx = BirkhoffContext(inner, algebras, C=outer)
    witnesses = []
    for A in algebras:
        composite = radical(R, A)
        via_cube = composite_radical(ctx, object_cube(A), "intersection")
        oracle = join_normal(A, radical(inner, A),
                             normal_closure(A, power_subobject(A, outer.k).elements))
        sets = [set(_flat(s.elements)) for s in (composite, via_cube, oracle)]
        if not (sets[0] == sets[1] == sets[2]):
            witnesses.append({
                "check": "composite-object-radical",
                "reflector": R.name,
                "algebra": algebra_to_doc(A),
            })
    return Report("lemma-6.6", "pass" if not witnesses else "fail", witnesses,
                  {"objects": len(algebras)}, [CORPUS_NOTE])


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    name: str
    result: str  # the claim this suite's verdicts instantiate
    needs: str  # "any" | "torsion-theory" | "composite" | "none"
    defaults: tuple[tuple[str | None, str], ...]
    runner: Callable[[Reflector | None, tuple, int], Report]


_TT_TRIO = (("reduced", "rings"), ("zerorng", "rng-star"), ("pi0", "groupoids"))

SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("thm-1.6", "the induced radical is idempotent; units stable under sampled pullbacks",
          "any", _TT_TRIO, _suite_thm_1_6),
    Suite("prop-2.2", "preserves pullbacks along split epimorphisms",
          "any", _TT_TRIO, _suite_prop_2_2),
    Suite("prop-2.3", "sends protosplit monomorphisms to normal monomorphisms",
          "any", _TT_TRIO, _suite_prop_2_3),
    Suite("thm-2.4", "M-hereditary, for M the class of protosplit monomorphisms",
          "any", _TT_TRIO, _suite_thm_2_4),
    Suite("prop-2.5/2.7", "closed under split extensions; closed under extensions",
          "any", _TT_TRIO, _suite_prop_2_5_2_7),
    Suite("prop-3.1", "normal extension exactly when K[f] is torsion-free",
          "torsion-theory", _TT_TRIO, _suite_prop_3_1),
    Suite("lemma-3.2", "every Ē-map is orthogonal to every M̄-map",
          "torsion-theory", _TT_TRIO, _suite_lemma_3_2),
    Suite("prop-3.4", "(Ē, M̄) is a stable factorisation system",
          "torsion-theory", _TT_TRIO, _suite_prop_3_4),
    Suite("thm-3.5", "factors uniquely (up to isomorphism)",
          "torsion-theory", _TT_TRIO, _suite_thm_3_5),
    Suite("remark-4.3", "squares of surjections: double extension equals pushout",
          "none", ((None, "rings"), (None, "groups")), _suite_remark_4_3),
    Suite("thm-4.6", "double extension normal exactly when the rib-kernel meet is torsion-free",
          "torsion-theory", (("reduced", "rings"), ("zerorng", "rng-star")),
          _suite_thm_4_6),
    Suite("prop-5.5", "normal epimorphisms f with K[f] in the subvariety",
          "any", (("ab", "groups"), ("burnside:2", "zmod4-modules")), _suite_prop_5_5),
    Suite("thm-6.2", "K[f] in C and f a B-normal extension",
          "composite", (("composite:burnside:2∘ab", "groups"),), _suite_thm_6_2),
    Suite("thm-6.5", "composite radical is the join of the two routes",
          "composite", (("composite:burnside:2∘ab", "groups"),), _suite_thm_6_5),
    Suite("lemma-6.6", "object radical of the intersection subvariety is the join",
          "composite", (("composite:burnside:2∘ab", "groups"),
                        ("composite:burnside:3∘ab", "groups")), _suite_lemma_6_6),
]}

_ALIASES = {"prop-2.5": "prop-2.5/2.7", "prop-2.7": "prop-2.5/2.7"}


def suite_ids() -> tuple[str, ...]:
    return tuple(SUITES)


def _resolve_reflector(reflector) -> Reflector | None:
    if reflector is None or isinstance(reflector, Reflector):
        return reflector
    return reflector_by_id(reflector)


def _resolve_corpus(corpus):
    if corpus is None:
        return None
    if isinstance(corpus, str):
        return corpus_by_id(corpus)
    return tuple(corpus)


def _check_needs(suite: Suite, R: Reflector | None) -> None:
    if suite.needs == "none":
        if R is not None:
            raise SuiteCompatibilityError(f"suite {suite.name} takes no reflector")
        return
    if R is None:
        raise SuiteCompatibilityError(f"suite {suite.name} needs a reflector")
    if suite.needs == "torsion-theory" and not R.torsion_theory:
        raise SuiteCompatibilityError(
            f"suite {suite.name} needs a torsion-theory reflector, {R.name} is not one")
    if suite.needs == "composite" and not R.is_composite:
        raise SuiteCompatibilityError(
            f"suite {suite.name} needs a composite reflector, {R.name} is not one")


def verify_suite(name: str, reflector=None, corpus=None, seed: int = 0) -> Report:
    """Run one suite; defaults cover its canonical configurations."""
    key = _ALIASES.get(name, name)
    if key not in SUITES:
        raise SuiteError(f"unknown suite id {name!r}")
    suite = SUITES[key]
    R = _resolve_reflector(reflector)
    algebras = _resolve_corpus(corpus)
    if R is None and algebras is None and suite.needs != "none":
        parts = []
        for rid, cid in suite.defaults:
            part = suite.runner(_resolve_reflector(rid), corpus_by_id(cid), seed)
            part.notes.append(f"configuration: {rid or '-'} on {cid}")
            parts.append(part)
        return merge_reports(suite.name, parts)
    if algebras is None:
        cid = next((c for r, c in suite.defaults
                    if R is not None and _default_fits(R, c)), suite.defaults[0][1])
        algebras = corpus_by_id(cid)
    if suite.needs == "none" and R is None:
        parts = []
        if corpus is not None:
            part = suite.runner(None, algebras, seed)
            part.notes.append("configuration: - on given corpus")
            return merge_reports(suite.name, [part])
        for _, cid in suite.defaults:
            part = suite.runner(None, corpus_by_id(cid), seed)
            part.notes.append(f"configuration: - on {cid}")
            parts.append(part)
        return merge_reports(suite.name, parts)
    _check_needs(suite, R)
    return suite.runner(R, algebras, seed)


def _default_fits(R: Reflector, corpus_id: str) -> bool:
    try:
        _applicable(R, corpus_by_id(corpus_id))
        return True
    except SuiteCompatibilityError:
        return False


def verify_all(seed: int = 0) -> list[Report]:
    """Every suite on its canonical default configurations."""
    return [verify_suite(name, seed=seed) for name in SUITES]


# ---------------------------------------------------------------------------
# witness replay


def _replay_sequence(doc) -> ExactSequence:
    k = morphism_from_doc(doc["kernel"])
    f = morphism_from_doc(doc["epi"])
    s = morphism_from_doc(doc["section"]) if "section" in doc else None
    return ExactSequence(k, f, s)


def _replay_split_preservation(doc) -> bool:
    from .reflectors import preserves_split_sequence
    R = reflector_by_id(doc["reflector"])
    return not preserves_split_sequence(R, _replay_sequence(doc))


def _replay_idempotent(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    A = algebra_from_doc(doc["algebra"])
    T = radical(R, A)
    sub, _ = sub_algebra(A, T)
    return not radical(R, sub).is_whole()


def _replay_hom_vanishing(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["morphism"])
    nonzero = any(v != 0 for v in (f.map1 + f.map0 if f.dom.is_gpd else f.mapping))
    return (nonzero and is_torsion_member(R, f.dom) and is_free_member(R, f.cod))


def _replay_closure(doc, member) -> bool:
    R = reflector_by_id(doc["reflector"])
    seq = _replay_sequence(doc)
    K, A, B = seq.k.dom, seq.f.dom, seq.f.cod
    return member(R, K) and member(R, B) and not member(R, A)


def _replay_class_closure(doc) -> bool:
    member = {"torsion": is_torsion_member, "free": is_free_member,
              "subvariety": is_free_member}[doc["class"]]
    return _replay_closure(doc, member)


def _replay_unit_pullback(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    A = algebra_from_doc(doc["algebra"])
    g = morphism_from_doc(doc["along"])
    dec = reflect(R, A)
    _, _, p2 = pullback(dec.unit, g)
    return not is_isomorphism_map(map_reflect(R, p2))


def _replay_pullback_preservation(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    g = morphism_from_doc(doc["along"])
    P, p1, p2 = pullback(f, g)
    Q, q1, q2 = pullback(map_reflect(R, f), map_reflect(R, g))
    cmp = into_pullback(Q, q1, q2, map_reflect(R, p1), map_reflect(R, p2))
    return not is_isomorphism_map(cmp)


def _replay_protosplit_mono(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    k = morphism_from_doc(doc["kernel"])
    Fk = map_reflect(R, k)
    return not (is_injective(Fk) and image(Fk).normal)


def _replay_heredity(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    k = morphism_from_doc(doc["kernel"])
    TK_in_A = set(_flat(_push(k, radical(R, k.dom).elements)))
    TA = set(_flat(radical(R, k.cod).elements))
    imgK = set(_flat(_image_set(k)))
    return TK_in_A != (TA & imgK)


def _replay_normal_vs_kernel(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    return is_normal_extension(R, f) != is_free_member(R, _kernel_algebra(f))


def _replay_orthogonality(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    e = morphism_from_doc(doc["e"])
    m = morphism_from_doc(doc["m"])
    u = morphism_from_doc(doc["top"])
    v = morphism_from_doc(doc["bottom"])
    status, _ = check_orthogonal(e, m, (u, v))
    return status != "unique"


def _replay_factorisation_classes(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    fac = em_factorize(R, f)
    return (classify_em(R, fac.e) not in ("e", "both")
            or classify_em(R, fac.m) not in ("m", "both"))


def _replay_e_stability(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    e = morphism_from_doc(doc["e"])
    g = morphism_from_doc(doc["along"])
    _, _, p2 = pullback(e, g)
    return classify_em(R, p2) not in ("e", "both")


def _replay_uniqueness(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    alt_e = morphism_from_doc(doc["alt-epi"])
    return not _factorisation_unique(R, f, alt_e)


def _replay_pushout_square(doc) -> bool:
    sq = cube_from_doc(doc["square"])
    return is_nfold_extension(sq) != is_pushout_square(sq)


def _replay_criterion_galois(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    sq = cube_from_doc(doc["square"])
    return nfold_normal_by_criterion(R, sq) != double_normal_by_galois(R, sq)


def _replay_radical_commutator(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    ctx = BirkhoffContext(R, (f.dom, f.cod))
    rad = birkhoff_radical(ctx, f)
    comm = huq_commutator(f.dom, kernel(f), full_subobject(f.dom))
    return set(rad.elements) != set(comm.elements)


def _replay_normal_vs_membership(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    ctx = BirkhoffContext(R, (f.dom, f.cod))
    return birkhoff_radical(ctx, f).is_zero() != is_free_member(R, _kernel_algebra(f))


def _replay_composite_routes(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    ctx = BirkhoffContext(R.inner, (f.dom, f.cod), C=R)
    via_join = composite_radical(ctx, cube_of_morphism(f), "join").is_zero()
    b_normal = birkhoff_radical(ctx, f).is_zero()
    kernel_in_c = is_free_member(R, _kernel_algebra(f))
    direct = is_normal_extension(R, f)
    return not (via_join == (b_normal and kernel_in_c) == direct)


def _replay_join_vs_direct(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    f = morphism_from_doc(doc["epi"])
    ctx = BirkhoffContext(R.inner, (f.dom, f.cod), C=R)
    joined = composite_radical(ctx, cube_of_morphism(f), "join")
    direct = birkhoff_radical(BirkhoffContext(R, (f.dom, f.cod)), f)
    return set(_flat(joined.elements)) != set(_flat(direct.elements))


def _replay_object_radical(doc) -> bool:
    R = reflector_by_id(doc["reflector"])
    A = algebra_from_doc(doc["algebra"])
    ctx = BirkhoffContext(R.inner, (A,), C=R.outer)
    composite = radical(R, A)
    via_cube = composite_radical(ctx, object_cube(A), "intersection")
    oracle = join_normal(A, radical(R.inner, A),
                         normal_closure(A, power_subobject(A, R.outer.k).elements))
    sets = [set(_flat(s.elements)) for s in (composite, via_cube, oracle)]
    return not (sets[0] == sets[1] == sets[2])


_REPLAYERS = {
    "split-preservation": _replay_split_preservation,
    "idempotent-radical": _replay_idempotent,
    "hom-vanishing": _replay_hom_vanishing,
    "torsion-extension-closure": lambda d: _replay_closure(d, is_torsion_member),
    "free-extension-closure": lambda d: _replay_closure(d, is_free_member),
    "class-extension-closure": _replay_class_closure,
    "unit-pullback-not-inverted": _replay_unit_pullback,
    "pullback-not-preserved": _replay_pullback_preservation,
    "protosplit-mono-image": _replay_protosplit_mono,
    "heredity-mismatch": _replay_heredity,
    "normal-vs-kernel-mismatch": _replay_normal_vs_kernel,
    "orthogonality-failure": _replay_orthogonality,
    "factorisation-classes": _replay_factorisation_classes,
    "e-class-not-stable": _replay_e_stability,
    "factorisation-not-unique": _replay_uniqueness,
    "pushout-vs-double-extension": _replay_pushout_square,
    "criterion-vs-galois": _replay_criterion_galois,
    "radical-vs-commutator": _replay_radical_commutator,
    "normal-vs-kernel-membership": _replay_normal_vs_membership,
    "composite-normal-routes": _replay_composite_routes,
    "join-vs-direct": _replay_join_vs_direct,
    "composite-object-radical": _replay_object_radical,
}


def replay_witness(doc: dict) -> bool:
    """Re-run a witness; True when the violation reproduces."""
    check = doc.get("check")
    if check not in _REPLAYERS:
        raise SuiteError(f"unknown witness check {check!r}")
    return _REPLAYERS[check](doc)
