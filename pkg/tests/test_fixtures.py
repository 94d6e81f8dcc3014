from __future__ import annotations

import json
from dataclasses import replace

import pytest

from rcbpoly.family import FamilyContext
from rcbpoly.fixtures import (
    PRODUCERS,
    ReferenceClaim,
    UnknownClaim,
    claim_ids,
    corrupt,
    load_claims,
    lookup,
    verify_all,
    verify_claim,
)
from rcbpoly.riordan import SeqVec

CLAIMS = load_claims()


def test_ids_unique_and_namespaced():
    ids = [c.claim_id for c in CLAIMS]
    assert len(ids) == len(set(ids))
    assert all(i.split(".")[0] in ("paper", "oeis", "erratum") for i in ids)
    assert all(i in PRODUCERS for i in ids)


def test_lookup():
    claim = lookup("paper.moments.column")
    assert claim.kind == "sequence"
    assert str(claim.data[10]) == "42 - 90*r + 75*r^2 - 35*r^3 + 9*r^4 - r^5"
    with pytest.raises(UnknownClaim):
        lookup("paper.nothing")
    assert claim_ids("oeis.*") == [c.claim_id for c in CLAIMS if c.claim_id.startswith("oeis.")]


@pytest.mark.parametrize("claim", CLAIMS, ids=lambda c: c.claim_id)
def test_json_roundtrip(claim):
    obj = claim.to_json()
    again = ReferenceClaim.from_json(json.loads(json.dumps(obj)))
    assert again == claim
    assert claim.location and claim.provenance


def test_claim_validation():
    claim = lookup("paper.moments.column")
    with pytest.raises(ValueError):
        replace(claim, kind="table")
    with pytest.raises(ValueError):
        replace(claim, applies="some")


def test_verify_all_symbolic():
    rep = verify_all()
    assert rep.ok, rep.failures()
    assert rep.counts == {"pass": len(CLAIMS), "fail": 0, "skipped": 0}


@pytest.mark.parametrize("rv", [3, -2, "1/2"])
def test_verify_all_numeric(rv):
    rep = verify_all(FamilyContext.numeric(rv))
    assert rep.ok, rep.failures()
    assert rep.mode == "numeric"


def test_verify_r1_degenerate():
    # at r = 1 the moment g.f. is 1, so the continued fractions stop at depth 1
    rep = verify_all(FamilyContext.numeric(1))
    assert sorted(rep.failures()) == ["paper.jfraction.moments", "paper.sfraction.unaerated"]


def test_erratum_namespace():
    rep = verify_all(pattern="erratum.*")
    assert rep.ok and len(rep.results) == 7


def test_negative_control():
    claims = list(CLAIMS)
    i = next(k for k, c in enumerate(claims) if c.claim_id == "paper.moments.column")
    claims[i] = corrupt(claims[i])
    rep = verify_all(claims=claims)
    assert rep.failures() == ["paper.moments.column"]
    j = next(k for k, c in enumerate(claims) if c.claim_id == "paper.M_matrix.7x7")
    assert verify_claim(corrupt(claims[j])).status == "fail"
    with pytest.raises(ValueError):
        corrupt(lookup("paper.jfraction.moments"))


def test_skipped_and_offset():
    claim = replace(lookup("paper.moments.column"), claim_id="paper.unregistered")
    assert verify_claim(claim).status == "skipped"
    # sequence claims are aligned by index offset
    base = lookup("paper.moments.column")
    tail = replace(base, data=SeqVec(base.data.terms[1:], 1))
    assert verify_claim(tail).status == "pass"
    misaligned = replace(base, data=SeqVec(base.data.terms[1:], 0))
    assert verify_claim(misaligned).status == "fail"


def test_report_json_is_deterministic():
    a = json.dumps(verify_all(pattern="paper.central*").to_json())
    b = json.dumps(verify_all(pattern="paper.central*").to_json())
    assert a == b
    obj = json.loads(a)
    assert set(obj) == {"mode", "r", "pattern", "counts", "results"}
    assert set(obj["results"][0]) == {"claim_id", "status", "lhs", "rhs", "location", "detail"}
