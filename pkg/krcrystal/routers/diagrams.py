from fastapi import APIRouter

from krcrystal.schemas import (
    DiagramRequest,
    DiagramResponse,
    E1Response,
    ElementDoc,
    PairRequest,
    PairResponse,
    RowsResponse,
    StringResponse,
    WeightRequest,
)
from krcrystal.services import operations
from krcrystal.services.crystal_cache import crystal_cache
from krcrystal.utils.codec import parse_weight

router = APIRouter(prefix="/diagrams", tags=["diagrams"])


@router.post("/phi", response_model=RowsResponse)
def diagram_phi(body: DiagramRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return {"rows": operations.diagram_phi(crystal, body.diagram)}


@router.post("/string", response_model=StringResponse)
def diagram_string(body: DiagramRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return {"string": operations.diagram_string(crystal, body.diagram)}


@router.post("/s-involution", response_model=DiagramResponse)
def diagram_s_involution(body: DiagramRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return {"diagram": operations.diagram_s_involution(crystal, body.diagram)}


@router.post("/psi", response_model=RowsResponse)
def diagram_psi(body: PairRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return {"rows": operations.pair_psi(crystal, body.P, body.p)}


@router.post("/pair-of", response_model=PairResponse)
def diagram_pair_of(body: ElementDoc):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return operations.element_pair(crystal, body.rows)


@router.post("/e1-pair", response_model=E1Response)
def diagram_e1_pair(body: PairRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    return {"pair": operations.pair_e1(crystal, body.P, body.p)}


@router.post("/of-weight", response_model=DiagramResponse)
def diagram_of_weight(body: WeightRequest):
    crystal = crystal_cache.get(body.cartan_type(), body.r, body.s)
    weight = parse_weight(",".join(str(x) for x in body.weight), crystal.cartan)
    return {"diagram": operations.weight_diagram(crystal, weight.coords)}
