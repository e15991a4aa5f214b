"""HTTP service exposing the computations over JSON.

One POST endpoint per computation; the request carries the problem inline
(characteristic, variables, generator expressions) plus the seed and the
verification level, and the response carries exactly the fields the
command produces:

    {"n", "p", "seed", "g", "segre", "csm", "chi", "sections", "warnings"}

Errors come back as ``{"error": {"code", "message"}}`` with the code from
:mod:`charclass.errors` (parse -> 400, unsupported -> 422, genericity -> 503,
internal -> 500).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .classes import csm_class_details, segre_class_details
from .chow import section_euler_characteristics
from .errors import CharclassError
from .problem_file import ProblemFile, build_ideal
from .projdeg import projective_degrees
from .randomness import RandomScalarSource

_STATUS_BY_CODE = {"parse": 400, "unsupported": 422, "genericity": 503, "internal": 500}


class ProblemPayload(BaseModel):
    """A homogeneous ideal, inline."""

    p: int = Field(default=32749, description="odd prime characteristic")
    variables: list[str] = Field(min_length=1)
    generators: list[str] = Field(min_length=1, description="polynomial expressions")
    name: str | None = None

    def to_ideal(self):
        problem = ProblemFile(
            p=self.p,
            variables=tuple(self.variables),
            generators=tuple(self.generators),
            name=self.name,
        )
        return build_ideal(problem)


class ComputeRequest(BaseModel):
    problem: ProblemPayload
    seed: int = 0
    verify: int | None = Field(
        default=None,
        ge=0,
        description="independent recomputations per projective degree; "
        "defaults to 1 for segre/csm/euler/sections and 0 for projdeg",
    )


class ComputeResponse(BaseModel):
    n: int
    p: int
    seed: int
    g: list[int] | None = None
    segre: list[int] | None = None
    csm: list[int] | None = None
    chi: int | None = None
    sections: list[int] | None = None
    warnings: list[str] | None = None


app = FastAPI(
    title="charclass",
    version=__version__,
    description="Segre classes, Chern-Schwartz-MacPherson classes and Euler "
    "characteristics of projective schemes over prime fields.",
)


@app.exception_handler(CharclassError)
async def charclass_error_handler(request: Request, exc: CharclassError):
    return JSONResponse(
        status_code=_STATUS_BY_CODE.get(exc.code, 500),
        content={"error": {"code": exc.code, "message": str(exc)}},
    )


@app.exception_handler(Exception)
async def unexpected_error_handler(request: Request, exc: Exception):
    return JSONResponse(
        status_code=500,
        content={"error": {"code": "internal", "message": f"{type(exc).__name__}: {exc}"}},
    )


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


def _base(req: ComputeRequest, ideal) -> dict:
    return {"n": ideal.n, "p": ideal.ring.p, "seed": req.seed}


@app.post("/projdeg", response_model=ComputeResponse, response_model_exclude_none=True)
def projdeg_endpoint(req: ComputeRequest):
    ideal = req.problem.to_ideal()
    src = RandomScalarSource(seed=req.seed)
    verify = req.verify if req.verify is not None else 0
    g = projective_degrees(ideal, src, verify=verify)
    return ComputeResponse(**_base(req, ideal), g=list(g.g))


@app.post("/segre", response_model=ComputeResponse, response_model_exclude_none=True)
def segre_endpoint(req: ComputeRequest):
    ideal = req.problem.to_ideal()
    src = RandomScalarSource(seed=req.seed)
    verify = req.verify if req.verify is not None else 1
    result = segre_class_details(ideal, src, verify=verify)
    return ComputeResponse(
        **_base(req, ideal),
        g=list(result.degrees.g),
        segre=result.segre.to_list(),
        warnings=list(result.warnings) or None,
    )


@app.post("/csm", response_model=ComputeResponse, response_model_exclude_none=True)
def csm_endpoint(req: ComputeRequest):
    ideal = req.problem.to_ideal()
    src = RandomScalarSource(seed=req.seed)
    verify = req.verify if req.verify is not None else 1
    result = csm_class_details(ideal, src, verify=verify)
    return ComputeResponse(
        **_base(req, ideal),
        csm=result.csm.to_list(),
        chi=result.chi,
        warnings=list(result.warnings) or None,
    )


@app.post("/euler", response_model=ComputeResponse, response_model_exclude_none=True)
def euler_endpoint(req: ComputeRequest):
    ideal = req.problem.to_ideal()
    src = RandomScalarSource(seed=req.seed)
    verify = req.verify if req.verify is not None else 1
    result = csm_class_details(ideal, src, verify=verify)
    return ComputeResponse(
        **_base(req, ideal),
        chi=result.chi,
        warnings=list(result.warnings) or None,
    )


@app.post("/sections", response_model=ComputeResponse, response_model_exclude_none=True)
def sections_endpoint(req: ComputeRequest):
    ideal = req.problem.to_ideal()
    src = RandomScalarSource(seed=req.seed)
    verify = req.verify if req.verify is not None else 1
    result = csm_class_details(ideal, src, verify=verify)
    sections = section_euler_characteristics(result.csm)
    return ComputeResponse(
        **_base(req, ideal),
        sections=list(sections),
        warnings=list(result.warnings) or None,
    )
