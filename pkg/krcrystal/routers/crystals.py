import logging

from fastapi import APIRouter
from fastapi.responses import PlainTextResponse

from krcrystal.schemas import (
    CrystalRef,
    CrystalSummary,
    DotRequest,
    ElementDoc,
    EpsPhiResponse,
    MinimalEntry,
    RowsResponse,
    StepRequest,
    VerificationReport,
    VerifyRequest,
    WeightRequest,
)
from krcrystal.services import operations
from krcrystal.services.crystal_cache import crystal_cache
from krcrystal.services.kr import KRCrystal
from krcrystal.services.letters import Direction
from krcrystal.utils.codec import parse_weight

router = APIRouter(prefix="/crystals", tags=["crystals"])
logger = logging.getLogger("krcrystal.routers.crystals")


def _crystal(ref: CrystalRef) -> KRCrystal:
    return crystal_cache.get(ref.cartan_type(), ref.r, ref.s)


# Handlers are sync so enumeration runs in the threadpool.

@router.post("/summary", response_model=CrystalSummary)
def crystal_summary(body: CrystalRef):
    return operations.summary(_crystal(body))


@router.post("/step", response_model=RowsResponse)
def crystal_step(body: StepRequest):
    rows = operations.step(_crystal(body), body.rows, body.i, Direction(body.direction))
    return {"rows": rows}


@router.post("/sigma", response_model=RowsResponse)
def crystal_sigma(body: ElementDoc):
    return {"rows": operations.sigma(_crystal(body), body.rows)}


@router.post("/eps-phi", response_model=EpsPhiResponse)
def crystal_eps_phi(body: ElementDoc):
    return operations.eps_phi(_crystal(body), body.rows)


@router.post("/minimal", response_model=RowsResponse)
def crystal_minimal(body: WeightRequest):
    crystal = _crystal(body)
    weight = parse_weight(",".join(str(x) for x in body.weight), crystal.cartan)
    return {"rows": operations.minimal(crystal, weight.coords)}


@router.post("/minimal/list", response_model=list[MinimalEntry])
def crystal_minimal_list(body: CrystalRef):
    return operations.minimal_list(_crystal(body))


@router.post("/verify", response_model=VerificationReport)
def crystal_verify(body: VerifyRequest):
    report = operations.verify(_crystal(body), body.kind)
    logger.info(
        "verification_requested",
        extra={"extra": {"crystal": report.crystal, "kind": body.kind, "passed": report.passed}},
    )
    return report


@router.post("/graph", response_class=PlainTextResponse)
def crystal_graph(body: DotRequest):
    return PlainTextResponse(operations.graph_dot(_crystal(body), affine=not body.classical))
