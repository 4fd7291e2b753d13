"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str
    version: str


class AnalyzeRequest(BaseModel):
    f: str = Field(description="holomorphic polynomial in z1, z2")
    g: str | None = Field(default=None, description="optional second factor")
    t: str = "1/20"
    gamma: str = "1"
    gamma1: str = "1"
    gamma2: str = "1"
    seed: int = 0
    with_folds: bool = False
    fold_seeds: int = 200


class CountsOrPairRequest(BaseModel):
    """Either a polynomial pair or explicit (p, q, m, n) counts."""

    f: str | None = None
    g: str | None = None
    p: int | None = None
    q: int | None = None
    m: int | None = None
    n: int | None = None


class DeformRequest(BaseModel):
    f: str
    g: str
    t: str = "1/20"
    gamma: str = "1"
    gamma1: str = "1"
    gamma2: str = "1"
    probe_samples: int = 120
    seed: int = 0


class FoldsRequest(BaseModel):
    f: str
    g: str
    t: str = "1/20"
    gamma: str = "1"
    gamma1: str = "1"
    gamma2: str = "1"
    seeds: int = 200
    seed: int = 0
    epsilon: float = 1.0
    accept_tol: float = 1e-10
    cluster_tol: float = 1e-6


class VerifyRequest(BaseModel):
    grid_max_m: int = 6
    grid_max_p: int = 5
    example1_m: int | None = None
    instances: int = 100
    folds: bool = False
    f: str | None = None
    g: str | None = None
    t: str = "1/20"
    gamma: str = "1"
    gamma1: str = "1"
    gamma2: str = "1"
    fold_seeds: int = 200
    seed: int = 0
    tol: float = 1e-8


class WeightsModel(BaseModel):
    polar_weight: list[int] | None
    d_p: int | None
    radial_weight: list[int] | None
    d_r: int | None
    ambiguous: bool


class LinkModel(BaseModel):
    p: int
    q: int
    m: int
    n: int
    alphas: list[list[float]]
    betas: list[list[float]]
    d_p: int
    d_r: int
    ell: int
    chi_base: int
    chi_total: int
    chi_paper_literal: int
    boundary_circles: int
    genus: int


class EllModel(BaseModel):
    from_links: int
    from_degrees: int
    from_folds: int | None
    consistent: bool


class MonodromyModel(BaseModel):
    delta_star: list[list[int]]
    delta_star_str: str
    delta_star_initial: list[list[int]]
    delta1_coeffs: list[int]


class HandleModel(BaseModel):
    index: int
    d_p: int
    joins: list[int]


class StageModel(BaseModel):
    index: int
    chi: int
    components: int
    boundary_circles: int
    disks_removed: int
    annuli_glued: int


class HandlesModel(BaseModel):
    pieces: int
    ball_piece: int
    solid_tori: list[int]
    handles: list[HandleModel]
    stages: list[StageModel]
    genus: int


class MorseModel(BaseModel):
    verdict: str
    index: int | None
    eigenvalues: list[float]


class FoldsModel(BaseModel):
    search_status: str
    attempts: int
    orbit_count: int
    circle_count: int
    radii: list[float]
    circle_radii: list[float]
    residual: float
    residuals: list[float]
    seeds: int
    converged: int
    convergence_rate: float
    delta_t_valid: bool
    representative_points: list[list[list[float]]]
    morse: list[MorseModel]
    gamma: str
    gamma1: str
    gamma2: str


class AnalyzeResponse(BaseModel):
    status: str
    input: dict
    weights: WeightsModel
    link: LinkModel
    links_before: list[int]
    links_after: list[int]
    ell: EllModel
    monodromy: MonodromyModel
    handles: HandlesModel
    folds: FoldsModel | None = None


class MonodromyResponse(MonodromyModel):
    p: int
    q: int
    m: int
    n: int
    d_p: int


class HandlesResponse(HandlesModel):
    p: int
    q: int
    m: int
    n: int


class GenericityModel(BaseModel):
    verdict: str
    margin: float | None
    excluded_values: list[list[float]]
    detail: str


class DeformResponse(BaseModel):
    status: str
    input: dict
    h_case: str
    h: str
    deformed: str
    polar_weight: list[int]
    d_p: int
    predicted_ell: int
    genericity: GenericityModel


class FoldsResponse(FoldsModel):
    status: str
    expected_ell: int
    deformed: str


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    status: str
    checks: list[CheckModel]
