"""HTTP service over the library.

Every operation is a POST endpoint with a pydantic request model and a JSON
response.  Rationals travel as exact fraction strings ("-3/2") in both
directions; no floats anywhere.  The CLI is a thin client of this app (it
mounts it in process by default), so the service is the single place where
request validation and JSON shaping happen.
"""

from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .rootmorita import cbh_roundtrip, hodges_data, morita_certificate
from .series import expand
from .toric import build_fan, divisor_spec, enumerate_sections, localization_series
from .verify import (
    mutation_suite,
    run_all,
    verify_abl,
    verify_bteng,
    verify_dominant,
    verify_hodges,
    verify_identities,
    verify_krs,
    verify_obar,
)

app = FastAPI(
    title="kleinhilb",
    version="0.1.0",
    description="Exact-arithmetic section spaces and crossed-product "
                "verification for cyclic-quotient resolutions.",
)


def _fraction(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise HTTPException(
            status_code=422, detail=f"malformed fraction {text!r}")


def _k_vector(n, k):
    if k is None:
        return (Fraction(0),) * (n - 1)
    vals = tuple(_fraction(x) for x in k)
    if len(vals) != n - 1:
        raise HTTPException(
            status_code=422,
            detail=f"parameter vector needs {n - 1} entries, got {len(vals)}")
    return vals


def _b_vector(n, b):
    if b is None:
        b = []
    vals = [int(x) for x in b]
    if len(vals) > n - 1:
        raise HTTPException(
            status_code=422,
            detail=f"divisor vector needs at most {n - 1} entries, got {len(vals)}")
    if any(x < 0 for x in vals):
        raise HTTPException(status_code=422,
                            detail="divisor multiplicities must be >= 0")
    return tuple(vals) + (0,) * (n - 1 - len(vals))


def _box(box):
    vals = [int(x) for x in (box if box is not None else [20, 20])]
    if len(vals) == 1:
        vals = vals + vals
    if len(vals) != 2 or min(vals) < 0:
        raise HTTPException(status_code=422,
                            detail="box must be one or two nonnegative bounds")
    return (vals[0], vals[1])


def _series_json(f):
    num = sorted(f.numerator.terms.items())
    return {
        "numerator": [[r, s, str(c)] for (r, s), c in num],
        "denominator": [[r, s] for (r, s) in f.denominator],
    }


class FanRequest(BaseModel):
    n: int = Field(ge=2, le=64)


class SectionsRequest(BaseModel):
    n: int = Field(ge=2, le=64)
    b: Optional[list[int]] = None
    box: Optional[list[int]] = None


class SeriesRequest(BaseModel):
    n: int = Field(ge=2, le=64)
    b: Optional[list[int]] = None


class ExpandRequest(BaseModel):
    n: int = Field(ge=2, le=64)
    b: Optional[list[int]] = None
    level: int = Field(default=12, ge=0, le=200)


class AblVerifyRequest(BaseModel):
    n: int = Field(ge=2, le=16)
    b: Optional[list[int]] = None
    level: int = Field(default=20, ge=0, le=200)


class KrsRequest(BaseModel):
    n: int = Field(ge=2, le=8)
    k: Optional[list[str]] = None
    b: Optional[list[int]] = None
    order_bound: int = Field(default=10, ge=1, le=40)


class GradedRequest(BaseModel):
    n: int = Field(ge=2, le=8)
    k: Optional[list[str]] = None
    b: Optional[list[int]] = None
    degree_bound: int = Field(default=12, ge=0, le=60)
    order_bound: Optional[int] = Field(default=None, ge=1, le=60)


class MoritaRequest(BaseModel):
    n: int = Field(ge=2, le=32)
    k: Optional[list[str]] = None
    p: int = Field(ge=1)


class ParamRequest(BaseModel):
    n: int = Field(ge=2, le=32)
    k: Optional[list[str]] = None


class CbhRequest(BaseModel):
    n: int = Field(ge=2, le=64)
    k: Optional[list[str]] = None
    lam: Optional[list[str]] = None


class IdentitiesRequest(BaseModel):
    n: int = Field(ge=2, le=6)
    k: Optional[list[str]] = None
    seed: int = 0
    triples: int = Field(default=100, ge=0, le=5000)


class AllRequest(BaseModel):
    n: int = Field(ge=2, le=6)
    k: Optional[list[str]] = None
    window: int = Field(default=12, ge=4, le=40)
    box: Optional[list[int]] = None
    seed: int = 0


class MutationRequest(BaseModel):
    seed: int = 0


@app.post("/fan")
def fan_endpoint(req: FanRequest):
    fan = build_fan(req.n)
    return {
        "n": req.n,
        "rays": [list(v) for v in fan.rays],
        "charts": [
            {"cone": [list(fan.rays[i]), list(fan.rays[i + 1])],
             "dual": [list(g) for g in fan.dual_generators(i)]}
            for i in range(req.n)
        ],
    }


@app.post("/sections")
def sections_endpoint(req: SectionsRequest):
    b = _b_vector(req.n, req.b)
    box = _box(req.box)
    secs = enumerate_sections(divisor_spec(req.n, b), box)
    return {
        "n": req.n,
        "b": list(b),
        "box": list(box),
        "monomials": [list(u) for u in sorted(secs.monomials)],
    }


@app.post("/abl-series")
def abl_series_endpoint(req: SeriesRequest):
    b = _b_vector(req.n, req.b)
    f = localization_series(divisor_spec(req.n, b))
    out = {"n": req.n, "b": list(b)}
    out.update(_series_json(f))
    return out


@app.post("/expand")
def expand_endpoint(req: ExpandRequest):
    b = _b_vector(req.n, req.b)
    f = localization_series(divisor_spec(req.n, b))
    ell = (req.n + 1, 1)
    ts = expand(f, ell, req.level)
    terms = sorted(ts.coefficients.items(),
                   key=lambda mc: (ell[0] * mc[0][0] + ell[1] * mc[0][1], mc[0]))
    return {
        "n": req.n,
        "b": list(b),
        "level": req.level,
        "ell": list(ell),
        "terms": [[r, s, str(c)] for (r, s), c in terms],
    }


@app.post("/abl")
def abl_endpoint(req: AblVerifyRequest):
    b = _b_vector(req.n, req.b)
    return verify_abl(req.n, b, level=req.level).to_json_dict()


@app.post("/krs")
def krs_endpoint(req: KrsRequest):
    k = _k_vector(req.n, req.k)
    b = _b_vector(req.n, req.b)
    return verify_krs(req.n, k, b, order_bound=req.order_bound).to_json_dict()


@app.post("/obar")
def obar_endpoint(req: GradedRequest):
    k = _k_vector(req.n, req.k)
    b = _b_vector(req.n, req.b)
    rep = verify_obar(req.n, k, b, degree_bound=req.degree_bound,
                      order_bound=req.order_bound)
    return rep.to_json_dict()


@app.post("/bteng")
def bteng_endpoint(req: GradedRequest):
    k = _k_vector(req.n, req.k)
    b = _b_vector(req.n, req.b)
    rep = verify_bteng(req.n, k, b, degree_bound=req.degree_bound,
                       order_bound=req.order_bound)
    return rep.to_json_dict()


@app.post("/morita")
def morita_endpoint(req: MoritaRequest):
    if not 1 <= req.p <= req.n - 1:
        raise HTTPException(status_code=422,
                            detail=f"p must lie in 1..{req.n - 1}")
    k = _k_vector(req.n, req.k)
    cert = morita_certificate(req.n, k, req.p)

    def cond_json(cond):
        out = {"ok": cond.ok,
               "g": [str(c) for c in cond.g],
               "h": [str(c) for c in cond.h]}
        if cond.ok:
            alpha, beta = cond.certificate
            out["certificate"] = {"alpha": [str(c) for c in alpha],
                                  "beta": [str(c) for c in beta]}
        else:
            i, j, v = cond.witness
            out["witness"] = [i, j, str(v)]
        return out

    return {
        "n": req.n,
        "k": [str(x) for x in k],
        "p": req.p,
        "condition1": cond_json(cert.condition1),
        "condition2": cond_json(cert.condition2),
        "dominant": {
            "ok": cert.dominant.dominant,
            "culprits": [[i, j, str(v)] for (i, j, v) in cert.dominant.culprits],
        },
    }


@app.post("/dominant")
def dominant_endpoint(req: ParamRequest):
    k = _k_vector(req.n, req.k)
    return verify_dominant(req.n, k).to_json_dict()


@app.post("/hodges")
def hodges_endpoint(req: ParamRequest):
    k = _k_vector(req.n, req.k)
    return verify_hodges(req.n, k).to_json_dict()


@app.post("/cbh")
def cbh_endpoint(req: CbhRequest):
    if (req.k is None) == (req.lam is None):
        raise HTTPException(status_code=422,
                            detail="provide exactly one of k or lam")
    if req.lam is not None:
        lam = tuple(_fraction(x) for x in req.lam)
        if len(lam) != req.n:
            raise HTTPException(status_code=422,
                                detail=f"lam needs {req.n} entries")
        try:
            k = cbh_roundtrip(req.n, lam)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
    else:
        k = _k_vector(req.n, req.k)
        lam = hodges_data(req.n, k).lam
    return {"n": req.n,
            "k": [str(x) for x in k],
            "lam": [str(x) for x in lam],
            "trace": str(sum(lam))}


@app.post("/identities")
def identities_endpoint(req: IdentitiesRequest):
    k = _k_vector(req.n, req.k)
    rep = verify_identities(req.n, k, seed=req.seed, triples=req.triples)
    return rep.to_json_dict()


@app.post("/all")
def all_endpoint(req: AllRequest):
    k = _k_vector(req.n, req.k)
    box = _box(req.box)
    reports = run_all(req.n, k, window=req.window, box=box[0], seed=req.seed)
    return {"reports": [r.to_json_dict() for r in reports]}


@app.post("/mutations")
def mutations_endpoint(req: MutationRequest):
    return {"reports": [r.to_json_dict() for r in mutation_suite(seed=req.seed)]}
