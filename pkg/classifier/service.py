# classifier/service.py
from __future__ import annotations

import logging
from functools import lru_cache
from typing import List

from charclass.chern import chern_total_punctured
from charclass.classes import AltFormZ2, pontrjagin, w2_form
from classifier.gf2 import gf2_rank
from errors import InvariantViolation
from exterior.algebra import ExtAlgebra
from models import Comparison, InvariantReport, SpaceSpec, Term, Verdict
from skeleton.cellular import homology, torus_cw, truncate

logger = logging.getLogger("symprod.classifier")


def skew_rank(f: AltFormZ2) -> int:
    if not f.is_alternating():
        raise ValueError("form is not alternating (needs zero diagonal and symmetry over Z/2)")
    rank = gf2_rank(f.matrix)
    if rank % 2:
        raise InvariantViolation(f"alternating form of size {f.size} has odd rank {rank}")
    return rank


def _betti(spec: SpaceSpec) -> List[int]:
    algebra = ExtAlgebra(s=spec.s, cut=spec.n)
    return [algebra.dim(q) for q in range(spec.n + 1)]


def _torsion_free(spec: SpaceSpec, betti: List[int]) -> bool:
    # Sym^n M_{g,k} ~ Sk^n T^s; s = 0 is contractible
    if spec.s == 0:
        return True
    summary = homology(truncate(torus_cw(spec.s), spec.n))
    cellular = summary.betti + [0] * (len(betti) - len(summary.betti))
    if cellular != betti:
        raise InvariantViolation(f"skeleton Betti numbers {cellular} disagree with exterior ranks {betti}")
    return summary.is_torsion_free


@lru_cache(maxsize=None)
def report(spec: SpaceSpec) -> InvariantReport:
    chern = chern_total_punctured(spec.g, spec.k, spec.n)
    classes = pontrjagin(chern)
    if all(p.is_zero() for p in classes):
        pont = "zero"
    else:
        pont = [[Term(**r) for r in p.to_records()] for p in classes]
    betti = _betti(spec)
    result = InvariantReport(
        spec=spec,
        dimension=spec.dimension,
        s=spec.s,
        pi1_rank=spec.s,
        homotopy_class=spec.s,
        betti=betti,
        torsion_free=_torsion_free(spec, betti),
        c1=[Term(**r) for r in chern.c(1).to_records()],
        pontrjagin=pont,
        w2_rank=skew_rank(w2_form(spec.g, spec.k, spec.n)),
    )
    logger.info("report %s: s=%s w2_rank=%s", spec.label(), result.s, result.w2_rank)
    return result


def _stripped(betti: List[int]) -> List[int]:
    out = list(betti)
    while out and out[-1] == 0:
        out.pop()
    return out


def classify(a: SpaceSpec, b: SpaceSpec) -> Comparison:
    ra, rb = report(a), report(b)

    def verdict(v: Verdict, witness: str, previously_known: bool = False) -> Comparison:
        logger.info("compare %s vs %s: %s (%s)", a.label(), b.label(), v.value, witness)
        return Comparison(verdict=v, invariants_a=ra, invariants_b=rb, witness=witness, previously_known=previously_known)

    if a == b:
        return verdict(Verdict.HOMEOMORPHIC, "identical spec")

    if a.s != b.s or a.n != b.n:
        if a.s != b.s:
            return verdict(Verdict.NOT_HOMOTOPY_EQUIVALENT, f"s: {a.s} vs {b.s}")
        if _stripped(ra.betti) != _stripped(rb.betti):
            return verdict(Verdict.NOT_HOMOTOPY_EQUIVALENT, f"betti: {ra.betti} vs {rb.betti}")
        return verdict(Verdict.UNDETERMINED, "homotopy invariants agree across different n")

    if a.g != b.g:
        if a.dimension != b.dimension:
            return verdict(Verdict.UNDETERMINED, f"dimension: {a.dimension} vs {b.dimension}; homotopy invariants agree")
        if ra.w2_rank == rb.w2_rank:
            raise InvariantViolation(f"w2 rank fails to separate genera {a.g} and {b.g}")
        return verdict(
            Verdict.HOMOTOPY_EQUIVALENT_NOT_HOMEOMORPHIC,
            f"w2_rank: {ra.w2_rank} vs {rb.w2_rank}",
            previously_known=2 * max(a.g, b.g) >= a.n,
        )

    return verdict(Verdict.UNDETERMINED, f"dimension: {a.dimension} vs {b.dimension}; homotopy invariants agree")


def compare(a: SpaceSpec, b: SpaceSpec) -> Verdict:
    return classify(a, b).verdict
