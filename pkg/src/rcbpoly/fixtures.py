"""Reference data keyed by claim id, and the registry that checks each claim.

Claims live in ``data/claims.json``.  Namespaces:

* ``paper.*``   printed displays that the computations reproduce;
* ``oeis.*``    printed OEIS prefixes recognised inside computed sequences;
* ``erratum.*`` printed statements that do not hold as typeset.  Each stores
  the printed and the actual value (or the expected verdict), and passes when
  the computation confirms the discrepancy.

A claim's ``applies`` field is ``any`` (polynomial in r: specialized in
numeric mode) or ``fixed`` (independent of the context's r).
"""

from __future__ import annotations

import fnmatch
import json
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Callable

from .exactalg import AlgebraError, ParamPoly, Series
from .family import (
    SYMBOLIC,
    CheckReport,
    FamilyContext,
    _jsonable,
    central_entry,
    central_hankel_report,
    central_plus_sequence,
    central_sequence,
    central_via_gf,
    check_moment_closed_form,
    check_rowsum_closed_form,
    coeff_closed_form,
    coefficient_array,
    h_hat,
    h_hat_closed,
    h_hat_coefficient_array,
    moment_column,
    moment_hankel,
    moment_matrix,
    moments,
    moments_unaerated_ftra,
    polynomial,
    qpoly_recurrence_check,
    r_components,
    rowsum_gf,
    rowsum_gf_via_proof,
    rowsum_hankel,
    rowsum_proof_matrix,
    rowsum_proof_pair,
    unaerated_central,
)
from .hankel import (
    JFraction,
    SFraction,
    hankel_transform,
    jfraction_extract,
    sfraction_extract,
    unaerate,
)
from .riordan import (
    SeqVec,
    TriMatrix,
    binomial_pair,
    multiply,
    pair_from_rational,
    production_matrix,
    to_matrix,
)

KINDS = ("sequence", "matrix", "polys", "jfraction", "sfraction", "verdict", "erratum")


class UnknownClaim(KeyError):
    """No fixture is registered under this claim id."""


@dataclass(frozen=True)
class ReferenceClaim:
    claim_id: str
    location: str
    kind: str
    provenance: str
    data: object
    applies: str = "any"
    note: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown claim kind {self.kind!r}")
        if self.applies not in ("any", "fixed"):
            raise ValueError(f"unknown applicability {self.applies!r}")

    @classmethod
    def from_json(cls, obj: dict) -> "ReferenceClaim":
        return cls(
            obj["claim_id"],
            obj["location"],
            obj["kind"],
            obj["provenance"],
            _decode(obj["kind"], obj["data"]),
            obj.get("applies", "any"),
            obj.get("note", ""),
        )

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "location": self.location,
            "kind": self.kind,
            "provenance": self.provenance,
            "applies": self.applies,
            "data": _encode(self.kind, self.data),
        }
        if self.note:
            out["note"] = self.note
        return out


def _decode(kind: str, data):
    if kind == "sequence":
        return SeqVec.from_json(data)
    if kind == "matrix":
        return TriMatrix.from_json(data)
    if kind == "polys":
        return tuple(tuple(ParamPoly.from_json(c) for c in p) for p in data)
    if kind == "jfraction":
        return JFraction.from_json(data)
    if kind == "sfraction":
        return SFraction.from_json(data)
    if kind == "erratum":
        return {
            "of": data["of"],
            "printed": _decode(data["of"], data["printed"]),
            "actual": _decode(data["of"], data["actual"]),
        }
    return data


def _encode(kind: str, data):
    if kind == "polys":
        return [[c.to_json() for c in p] for p in data]
    if kind == "erratum":
        return {
            "of": data["of"],
            "printed": _encode(data["of"], data["printed"]),
            "actual": _encode(data["of"], data["actual"]),
        }
    if kind == "verdict":
        return data
    return data.to_json()


@lru_cache(maxsize=1)
def load_claims() -> tuple:
    text = resources.files("rcbpoly").joinpath("data/claims.json").read_text()
    return tuple(ReferenceClaim.from_json(c) for c in json.loads(text)["claims"])


def lookup(claim_id: str) -> ReferenceClaim:
    for c in load_claims():
        if c.claim_id == claim_id:
            return c
    raise UnknownClaim(claim_id)


def claim_ids(pattern: str = "*") -> list:
    return [c.claim_id for c in load_claims() if fnmatch.fnmatchcase(c.claim_id, pattern)]


# --- producers ---------------------------------------------------------------
# Each producer takes (ctx, claim) and returns an object of the claim's kind
# (for errata: of data["of"]).  Fixed claims are always given SYMBOLIC.

Producer = Callable[[FamilyContext, ReferenceClaim], object]
PRODUCERS: dict[str, Producer] = {}


def producer(*ids: str):
    def wrap(fn):
        for i in ids:
            PRODUCERS[i] = fn
        return fn

    return wrap


def _n(claim: ReferenceClaim) -> int:
    data = claim.data["actual"] if claim.kind == "erratum" else claim.data
    if isinstance(data, SeqVec):
        return data.offset + len(data)
    if isinstance(data, TriMatrix):
        return data.shape[0]
    if isinstance(data, JFraction):
        return data.depth
    if isinstance(data, SFraction):
        return len(data.alpha)
    return len(data)


def _ctx(ctx: FamilyContext, order: int) -> FamilyContext:
    return FamilyContext(ctx.r, max(order, 4))


def _verdict(report: CheckReport) -> str:
    return report.status


@producer("paper.P_matrix.7x7")
def _p_matrix(ctx, claim):
    n = _n(claim)
    return to_matrix(coefficient_array(_ctx(ctx, n)), n)


@producer("paper.M_matrix.7x7")
def _m_matrix(ctx, claim):
    n = _n(claim)
    return to_matrix(moment_matrix(_ctx(ctx, n)), n)


@producer("paper.production_matrix.7x7")
def _production(ctx, claim):
    n = _n(claim)
    return production_matrix(moment_matrix(_ctx(ctx, n + 1)), n)


def _closed_form_matrix(form):
    def make(ctx, claim):
        n = _n(claim)
        return TriMatrix.from_function(
            n, n, lambda i, j: ctx.spec(coeff_closed_form(i, j, form)) if j <= i else 0
        )

    return make


producer("paper.pnk.cor2")(_closed_form_matrix("cor2"))
producer("erratum.pnk.prop")(_closed_form_matrix("prop"))
producer("erratum.pnk.cor1")(_closed_form_matrix("cor1"))


@producer("paper.polys.P0_P3")
def _polys(ctx, claim):
    return tuple(polynomial(ctx, n, "array" if n else "sum") for n in range(_n(claim)))


@producer("paper.moments.column")
def _moment_column(ctx, claim):
    n = _n(claim)
    return moment_column(_ctx(ctx, n), n)


@producer("paper.moments.closed_form")
def _moments(ctx, claim):
    return moments(ctx, _n(claim))


@producer("paper.moments.unaerated")
def _moments_un(ctx, claim):
    return moments_unaerated_ftra(ctx, _n(claim))


@producer("paper.moment_hankel.aerated")
def _moment_hankel(ctx, claim):
    return moment_hankel(ctx, _n(claim) - 1)


@producer("paper.moment_hankel.unaerated")
def _moment_hankel_un(ctx, claim):
    return moment_hankel(ctx, _n(claim) - 1, aerated=False)


@producer("paper.jfraction.moments")
def _jfraction(ctx, claim):
    depth = _n(claim)
    gf = moment_matrix(_ctx(ctx, 2 * depth + 1)).g
    return jfraction_extract(gf, depth)


@producer("paper.sfraction.unaerated")
def _sfraction(ctx, claim):
    depth = _n(claim)
    col = moment_column(_ctx(ctx, 2 * depth + 2), 2 * depth + 2)
    return sfraction_extract(Series(unaerate(col).terms, depth + 1), depth)


@producer("paper.central.entries")
def _central_entries(ctx, claim):
    n = _n(claim)
    c = _ctx(ctx, 2 * n)
    return SeqVec(tuple(central_entry(c, k) for k in range(n)))


@producer("paper.central.closed_form")
def _central_closed(ctx, claim):
    return central_sequence(ctx, _n(claim))


@producer("paper.central.reversion_gf")
def _central_gf(ctx, claim):
    return central_via_gf(ctx, _n(claim) - 1)


@producer("paper.central.boubaker")
def _central_boubaker(ctx, claim):
    return central_via_gf(FamilyContext(3), _n(claim) - 1)


@producer("paper.central.r0_component", "paper.central.r1_component")
def _central_components(ctx, claim):
    j = int(claim.claim_id[-len("_component") - 1])
    return SeqVec(tuple(r_components(central_sequence(SYMBOLIC, _n(claim)), 1)[j]))


@lru_cache(maxsize=4)
def _central_hankel(max_n: int, un_max_n: int):
    return central_hankel_report(max_n, un_max_n)


@producer("paper.central_hankel.ratio")
def _central_ratio(ctx, claim):
    return _central_hankel(_n(claim) - 1, 0).aerated_ratio


@producer("paper.central_hankel.r0", "paper.central_hankel.r1", "oeis.A005161.prefix")
def _central_ratio_components(ctx, claim):
    j = 1 if claim.claim_id.endswith("r1") else 0
    return SeqVec(tuple(_central_hankel(_n(claim) - 1, 0).aerated_components[j]))


@producer("paper.unaerated_central.sequence")
def _unaerated_central(ctx, claim):
    return SeqVec(tuple(ctx.spec(unaerated_central(n)) for n in range(_n(claim))))


@producer("paper.unaerated_central.r0", "paper.unaerated_central.r1")
def _unaerated_components(ctx, claim):
    j = 1 if claim.claim_id.endswith("r1") else 0
    terms = [unaerated_central(n) for n in range(_n(claim))]
    return SeqVec(tuple(r_components(terms, 1)[j]))


@producer("paper.unaerated_hankel.r0", "oeis.A051255.prefix", "erratum.unaerated_hankel.r1")
def _unaerated_hankel(ctx, claim):
    j = 1 if claim.claim_id.endswith("r1") else 0
    return SeqVec(tuple(_central_hankel(0, _n(claim) - 1).unaerated_components[j]))


@producer("paper.central_plus.r0", "paper.central_plus.r1")
def _central_plus_components(ctx, claim):
    j = 1 if claim.claim_id.endswith("r1") else 0
    return SeqVec(tuple(r_components(central_plus_sequence(SYMBOLIC, _n(claim)), 1)[j]))


@producer("paper.central_plus.boubaker")
def _central_plus_boubaker(ctx, claim):
    return central_plus_sequence(FamilyContext(3), _n(claim))


@producer("paper.central_plus.boubaker_hankel")
def _central_plus_hankel(ctx, claim):
    n = _n(claim)
    return hankel_transform(central_plus_sequence(FamilyContext(3), 2 * n - 1), n - 1)


@producer("oeis.A006013.prefix")
def _a006013(ctx, claim):
    n = _n(claim)
    odd = central_plus_sequence(FamilyContext(3), 2 * n).terms[1::2]
    return SeqVec(tuple(t * (-1) ** k for k, t in enumerate(odd)))


@producer("oeis.A059492.prefix")
def _a059492(ctx, claim):
    # the Hankel terms h_1, h_3, ... give A059492 from index 1 on
    n = _n(claim) - 1
    h = hankel_transform(central_plus_sequence(FamilyContext(3), 4 * n), 2 * n - 1)
    return SeqVec(tuple(h[2 * k + 1] * (-1) ** (k + 1) for k in range(n)), offset=1)


@producer("paper.rowsum_hankel.sequence")
def _rowsum_hankel(ctx, claim):
    return rowsum_hankel(ctx, _n(claim) - 1)


@producer("paper.rowsum_hankel.coeff_array")
def _h_array(ctx, claim):
    return h_hat_coefficient_array(_n(claim))


@producer("paper.rowsum_hankel.reversal")
def _h_reversal(ctx, claim):
    return h_hat_coefficient_array(_n(claim)).row_reversal()


@producer("paper.rowsum_hankel.reversal_pair")
def _h_reversal_pair(ctx, claim):
    n = _n(claim)
    return to_matrix(pair_from_rational([1], [1, 1, 1], n), n)


@producer("erratum.rowsum_hankel.factorization")
def _factorization(ctx, claim):
    n = _n(claim)
    prod = multiply(pair_from_rational([1], [1, 0, 1], n), binomial_pair(n))
    return SeqVec(prod.g.coeffs)


@producer("paper.moment_gf.matrix_variant")
def _moment_gf_matrix(ctx, claim):
    return _verdict(check_moment_closed_form(16, "matrix"))


@producer("erratum.moment_gf.cfrac_variant")
def _moment_gf_cfrac(ctx, claim):
    return _verdict(check_moment_closed_form(16, "cfrac"))


@producer("erratum.rowsum_gf.closed_form")
def _rowsum_printed(ctx, claim):
    return _verdict(check_rowsum_closed_form(16, "printed"))


@producer("paper.rowsum_gf.corrected")
def _rowsum_corrected(ctx, claim):
    return _verdict(check_rowsum_closed_form(16, "corrected"))


@producer("paper.rowsum.proof_matrix")
def _proof_matrix(ctx, claim):
    ok = to_matrix(rowsum_proof_pair(13), 12) == rowsum_proof_matrix(12)
    return "pass" if ok else "fail"


@producer("paper.rowsum.ftra_identity")
def _proof_ftra(ctx, claim):
    c = _ctx(ctx, 16)
    return "pass" if rowsum_gf_via_proof(c).agrees(rowsum_gf(c), 16) else "fail"


@producer("paper.h_hat.closed_form")
def _h_closed(ctx, claim):
    values = (2, 3, 5, -2, Fraction(1, 2))
    ok = all(h_hat(n)(v) == h_hat_closed(n, v) for v in values for n in range(11))
    return "pass" if ok else "fail"


@producer("erratum.qpoly.corollary")
def _qpoly(ctx, claim):
    reports = [qpoly_recurrence_check(v, 4) for v in (2, 3, 5)]
    if all(rep.status == "pass" for rep in reports):
        return "pass"
    return "fail"


# --- verification ------------------------------------------------------------


def _specialize(data, kind: str, at):
    if kind in ("sequence", "matrix"):
        return data.evaluate_r(at)
    if kind == "polys":
        return tuple(tuple(ParamPoly.const(c(at)) for c in p) for p in data)
    if kind == "jfraction":
        return JFraction(tuple(v(at) for v in data.a), tuple(v(at) for v in data.b))
    if kind == "sfraction":
        return SFraction(tuple(v(at) for v in data.alpha))
    return data


def _same(kind: str, expected, found) -> bool:
    if kind == "sequence":
        if not isinstance(found, SeqVec):
            return False
        # compare over the shared index range; it must cover the expected tail
        lo = max(found.offset, expected.offset)
        want = expected.terms[lo - expected.offset :]
        got = found.terms[lo - found.offset : lo - found.offset + len(want)]
        return len(want) > 0 and tuple(got) == tuple(want)
    if kind == "polys":
        return len(expected) == len(found) and all(
            tuple(a) == tuple(b) for a, b in zip(expected, found)
        )
    return expected == found


def verify_claim(claim: ReferenceClaim, ctx: FamilyContext = SYMBOLIC) -> CheckReport:
    fn = PRODUCERS.get(claim.claim_id)
    if fn is None:
        return CheckReport(claim.claim_id, "skipped", location=claim.location, detail="no producer")
    numeric = ctx.r is not None and claim.applies == "any"
    run_ctx = ctx if claim.applies == "any" else SYMBOLIC
    try:
        found = fn(run_ctx, claim)
    except (AlgebraError, ValueError, IndexError) as exc:
        return CheckReport(
            claim.claim_id, "fail", location=claim.location, detail=f"{type(exc).__name__}: {exc}"
        )
    if claim.kind == "erratum":
        kind = claim.data["of"]
        printed, actual = claim.data["printed"], claim.data["actual"]
        ok = _same(kind, actual, found) and not _same(kind, printed, found)
        return CheckReport(
            claim.claim_id,
            "pass" if ok else "fail",
            found,
            {"printed": printed, "actual": actual},
            claim.location,
            claim.note,
        )
    expected = _specialize(claim.data, claim.kind, ctx.r) if numeric else claim.data
    ok = _same(claim.kind, expected, found)
    return CheckReport(
        claim.claim_id, "pass" if ok else "fail", found, expected, claim.location, claim.note
    )


@dataclass(frozen=True)
class VerifyReport:
    mode: str
    r: object
    pattern: str
    results: tuple

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for rep in self.results:
            out[rep.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(rep.status != "fail" for rep in self.results)

    def failures(self) -> list:
        return [rep.claim_id for rep in self.results if rep.status == "fail"]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "r": _jsonable(self.r),
            "pattern": self.pattern,
            "counts": self.counts,
            "results": [rep.to_json() for rep in self.results],
        }


def verify_all(
    ctx: FamilyContext = SYMBOLIC, pattern: str = "*", claims=None
) -> VerifyReport:
    """Check every claim whose id matches the glob ``pattern``.

    ``claims`` overrides the embedded fixtures (used for negative controls).
    Results are in fixture order, so reports are deterministic.
    """
    pool = load_claims() if claims is None else tuple(claims)
    chosen = [c for c in pool if fnmatch.fnmatchcase(c.claim_id, pattern)]
    return VerifyReport(ctx.mode, ctx.r, pattern, tuple(verify_claim(c, ctx) for c in chosen))


def corrupt(claim: ReferenceClaim) -> ReferenceClaim:
    """Copy of a sequence or matrix claim with its last entry shifted by one."""
    if claim.kind == "sequence":
        terms = list(claim.data.terms)
        terms[-1] = terms[-1] + 1
        return replace(claim, data=SeqVec(tuple(terms), claim.data.offset))
    if claim.kind == "matrix":
        rows = [list(row) for row in claim.data.rows]
        rows[-1][0] = rows[-1][0] + 1
        return replace(claim, data=TriMatrix(tuple(tuple(row) for row in rows)))
    raise ValueError(f"cannot corrupt a {claim.kind} claim")
