"""Report assembly shared by the HTTP service and the CLI.

Every public function here returns a plain JSON-ready dict.  Invalid user
input raises InputError; internal cross-checks that fail mark the report
status instead of raising, so disagreements between independent
computation paths are always surfaced to the caller.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import deform, handles, homogeneity, monodromy, numeric, seifert
from .mixedpoly import GaussianRational, MixedPolynomial, ParseError

STATUS_OK = "ok"
STATUS_INCONSISTENT = "inconsistent"
STATUS_INCONCLUSIVE = "inconclusive"


class InputError(ValueError):
    """User-supplied input failed to parse or violates a precondition."""


def parse_polynomial(text: str, label: str) -> MixedPolynomial:
    try:
        return MixedPolynomial.parse(text)
    except (ParseError, ValueError, OverflowError) as exc:
        raise InputError(f"invalid {label}: {exc}") from exc


def parse_rational(text: str, label: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid {label}: {exc}") from exc


def parse_gaussian(text: str, label: str) -> GaussianRational:
    poly = parse_polynomial(text, label)
    if poly.is_zero():
        return GaussianRational.of(0)
    if len(poly.terms) != 1 or poly.terms[0].nu != (0, 0) or poly.terms[0].mu != (0, 0):
        raise InputError(f"invalid {label}: expected a constant, got {poly}")
    return poly.terms[0].coeff


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _weight_dict(data: homogeneity.WeightData) -> dict:
    polar, radial = data.polar, data.radial
    return {
        "polar_weight": list(polar.weights) if polar else None,
        "d_p": polar.degree if polar else None,
        "radial_weight": list(radial.weights) if radial else None,
        "d_r": radial.degree if radial else None,
        "ambiguous": bool((polar and polar.ambiguous) or (radial and radial.ambiguous)),
    }


def _link_dict(link: seifert.SeifertLinkData) -> dict:
    d_p, d_r = seifert.degrees(link)
    return {
        "p": link.p,
        "q": link.q,
        "m": link.m,
        "n": link.n,
        "alphas": [_complex_pair(a) for a in link.alphas],
        "betas": [_complex_pair(b) for b in link.betas],
        "d_p": d_p,
        "d_r": d_r,
        "ell": link.n,
        "chi_base": seifert.euler_characteristic_base(link.p, link.q, link.m - link.n),
        "chi_total": seifert.euler_characteristic_total(link),
        "chi_paper_literal": seifert.euler_characteristic_closed_form(
            link.p, link.q, link.m, link.n
        ),
        "boundary_circles": seifert.boundary_circles(link),
        "genus": seifert.genus(link),
    }


def _monodromy_dict(p: int, q: int, m: int, n: int) -> dict:
    total = monodromy.delta_star_total(p, q, m, n)
    return {
        "delta_star": [list(pair) for pair in total.pairs()],
        "delta_star_str": str(total),
        "delta_star_initial": [list(pair) for pair in
                               monodromy.delta_star_initial(p, q, m, n).pairs()],
        "delta1_coeffs": monodromy.delta1_total(p, q, m, n).expand(),
    }


def _handles_dict(decomposition: handles.HandleDecomposition) -> dict:
    return {
        "pieces": decomposition.pieces,
        "ball_piece": decomposition.ball_piece,
        "solid_tori": list(decomposition.solid_tori),
        "handles": [
            {"index": h.index, "d_p": h.d_p, "joins": list(h.joins)}
            for h in decomposition.round_handles
        ],
        "stages": [
            {
                "index": s.index,
                "chi": s.chi,
                "components": s.components,
                "boundary_circles": s.boundary_circles,
                "disks_removed": s.disks_removed,
                "annuli_glued": s.annuli_glued,
            }
            for s in decomposition.stages
        ],
        "genus": handles.genus_report(decomposition)[0],
    }


def _fold_dict(outcome: deform.FoldSearchOutcome) -> dict:
    rep = outcome.report
    return {
        "search_status": outcome.status,
        "attempts": outcome.attempts,
        "orbit_count": rep.orbit_count,
        "circle_count": rep.circle_count,
        "radii": list(rep.radii),
        "circle_radii": list(rep.circle_radii),
        "residual": rep.residual,
        "residuals": list(rep.orbit_residuals),
        "seeds": rep.seeds,
        "converged": rep.converged,
        "convergence_rate": rep.converged / rep.seeds if rep.seeds else 0.0,
        "delta_t_valid": rep.delta_t_valid,
        "representative_points": [
            [_complex_pair(a), _complex_pair(b)] for a, b in rep.representative_points
        ],
        "morse": [
            {"verdict": p.verdict, "index": p.index,
             "eigenvalues": list(p.eigenvalues)}
            for p in outcome.morse
        ],
        "gamma": str(outcome.spec.gamma),
        "gamma1": str(outcome.spec.gamma1),
        "gamma2": str(outcome.spec.gamma2),
    }


def _extract_pair(f_text: str, g_text: str | None):
    f = parse_polynomial(f_text, "f")
    g = parse_polynomial(g_text, "g") if g_text else None
    try:
        p, q = seifert.infer_weights(f, g)
        link = seifert.extract(f, g, p, q)
    except (seifert.BranchError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    return f, g, link


def analyze(
    f_text: str,
    g_text: str | None = None,
    t: str = "1/20",
    gamma: str = "1",
    gamma1: str = "1",
    gamma2: str = "1",
    seed: int = 0,
    with_folds: bool = False,
    fold_seeds: int = 200,
    cfg: numeric.NumericConfig | None = None,
) -> dict:
    """Full pipeline: weights, link data, ell by every path, chi ledger,
    characteristic polynomials, handle decomposition, optional fold count."""
    f, g, link = _extract_pair(f_text, g_text)
    product = f * g.conjugate() if g is not None and not g.is_zero() else f
    weight_data = homogeneity.detect(product)
    d_p, d_r = seifert.degrees(link)

    weights_consistent = (
        weight_data.polar is not None
        and weight_data.radial is not None
        and weight_data.polar.degree == d_p
        and weight_data.radial.degree == d_r
    )

    before = seifert.link_counts(link)
    after = seifert.deformed_link_counts(link)
    ell_links = seifert.ell_from_links(before, after)
    try:
        ell_degrees = seifert.ell_from_degrees(d_p, d_r, link.p, link.q)
    except ValueError as exc:
        raise InputError(str(exc)) from exc

    decomposition = handles.build(link)

    report = {
        "input": {
            "f": str(f),
            "g": str(g) if g is not None else None,
            "t": str(t),
            "gamma": gamma,
            "gamma1": gamma1,
            "gamma2": gamma2,
            "seed": seed,
        },
        "weights": _weight_dict(weight_data),
        "link": _link_dict(link),
        "links_before": [before.positive, before.negative],
        "links_after": [after.positive, after.negative],
        "ell": {
            "from_links": ell_links,
            "from_degrees": ell_degrees,
            "from_folds": None,
        },
        "monodromy": _monodromy_dict(link.p, link.q, link.m, link.n),
        "handles": _handles_dict(decomposition),
    }

    status = STATUS_OK
    paths = [ell_links, ell_degrees]
    if with_folds:
        spec = _deformation_spec(f, g, link, t, gamma, gamma1, gamma2)
        outcome = deform.fold_search_with_genericity(
            spec, cfg or numeric.NumericConfig(seeds=fold_seeds), seed=seed
        )
        report["folds"] = _fold_dict(outcome)
        if outcome.status == "inconclusive":
            status = STATUS_INCONCLUSIVE
        else:
            report["ell"]["from_folds"] = outcome.report.orbit_count
            paths.append(outcome.report.orbit_count)

    if not weights_consistent or len(set(paths)) != 1:
        status = STATUS_INCONSISTENT
    report["ell"]["consistent"] = len(set(paths)) == 1
    report["status"] = status
    return report


def _deformation_spec(f, g, link, t, gamma, gamma1, gamma2) -> deform.DeformationSpec:
    # g may be absent (n = 0): the generic perturbation is still defined and
    # the predicted fold count is zero, which the search can only report as
    # inconclusive, never confirm.
    try:
        return deform.DeformationSpec(
            f=f,
            g=g,
            link=link,
            t=parse_rational(str(t), "t"),
            h_case=deform.HCase.LINEAR_G if deform.is_linear_g(g) else deform.HCase.GENERIC_G,
            gamma=parse_gaussian(gamma, "gamma"),
            gamma1=parse_gaussian(gamma1, "gamma1"),
            gamma2=parse_gaussian(gamma2, "gamma2"),
        )
    except deform.DeformationError as exc:
        raise InputError(str(exc)) from exc


def monodromy_report(p: int, q: int, m: int, n: int) -> dict:
    _validate_counts(p, q, m, n)
    out = {"p": p, "q": q, "m": m, "n": n, "d_p": p * q * (m - n)}
    out.update(_monodromy_dict(p, q, m, n))
    return out


def handles_report(p: int, q: int, m: int, n: int) -> dict:
    _validate_counts(p, q, m, n)
    link = synthetic_link(p, q, m, n)
    out = {"p": p, "q": q, "m": m, "n": n}
    out.update(_handles_dict(handles.build(link)))
    return out


def _validate_counts(p: int, q: int, m: int, n: int):
    if p < 1 or q < 1 or math.gcd(p, q) != 1:
        raise InputError("p, q must be coprime positive integers")
    if not m > n >= 0:
        raise InputError("need m > n >= 0")


def resolve_counts(
    f_text: str | None,
    g_text: str | None,
    p: int | None,
    q: int | None,
    m: int | None,
    n: int | None,
) -> tuple[int, int, int, int]:
    """Accept either a polynomial pair or explicit counts."""
    if f_text:
        _, _, link = _extract_pair(f_text, g_text)
        return link.p, link.q, link.m, link.n
    if None in (p, q, m, n):
        raise InputError("provide either f (with optional g) or all of p, q, m, n")
    _validate_counts(p, q, m, n)
    return p, q, m, n


def synthetic_link(p: int, q: int, m: int, n: int) -> seifert.SeifertLinkData:
    """Link data with placeholder branch constants, for count-only pipelines."""
    return seifert.SeifertLinkData(
        p=p, q=q, m=m, n=n,
        alphas=tuple(complex(k, 0) for k in range(1, m + 1)),
        betas=tuple(complex(k, 0) for k in range(m + 1, m + n + 1)),
    )


def deform_report(
    f_text: str,
    g_text: str,
    t: str = "1/20",
    gamma: str = "1",
    gamma1: str = "1",
    gamma2: str = "1",
    probe_samples: int = 120,
    seed: int = 0,
) -> dict:
    """Assemble F_t, echo its structure, and probe coefficient genericity."""
    f, g, link = _extract_pair(f_text, g_text)
    spec = _deformation_spec(f, g, link, t, gamma, gamma1, gamma2)
    try:
        deformed = deform.assemble(spec)
    except deform.DeformationError as exc:
        raise InputError(str(exc)) from exc
    base = deform.base_product(spec)
    wv = homogeneity.detect_polar(base)
    probe = deform.genericity_probe(spec, samples=probe_samples, seed=seed)
    return {
        "status": STATUS_OK,
        "input": {"f": str(f), "g": str(g), "t": str(spec.t),
                  "gamma": str(spec.gamma), "gamma1": str(spec.gamma1),
                  "gamma2": str(spec.gamma2)},
        "h_case": spec.h_case.value,
        "h": str(deform.perturbation(spec)),
        "deformed": str(deformed),
        "polar_weight": list(wv.weights),
        "d_p": wv.degree,
        "predicted_ell": link.n,
        "genericity": {
            "verdict": probe.verdict,
            "margin": probe.margin,
            "excluded_values": [_complex_pair(e) for e in probe.excluded_values],
            "detail": probe.detail,
        },
    }


def _coprime_grid(max_p: int, max_m: int):
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            for m in range(1, max_m + 1):
                for n in range(0, m):
                    yield p, q, m, n


def verify_report(
    grid_max_m: int = 6,
    grid_max_p: int = 5,
    example1_m: int | None = None,
    instances: int = 100,
    folds: bool = False,
    f_text: str | None = None,
    g_text: str | None = None,
    t: str = "1/20",
    gamma: str = "1",
    gamma1: str = "1",
    gamma2: str = "1",
    fold_seeds: int = 200,
    seed: int = 0,
    tol: float = 1e-8,
) -> dict:
    """Run the identity grid and report one pass/fail entry per check."""
    checks: list[dict] = []

    def add(name: str, passed: bool, detail: str):
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    # Torus-family reproduction: one round handle, all-positive deformed link.
    ms = [example1_m] if example1_m else [3, 4, 5, 6]
    bad = []
    for m in ms:
        rep = analyze(f"z1^{m}+z2^{m}", "z1+2*z2")
        ok = (
            rep["ell"]["from_links"] == 1
            and rep["ell"]["from_degrees"] == 1
            and rep["links_after"] == [m - 1, 0]
            and rep["status"] == STATUS_OK
        )
        if not ok:
            bad.append(m)
    add("example1_family", not bad,
        f"m in {ms}: ell = 1 both paths, deformed link all-positive with m-1 components"
        + (f"; failed for m={bad}" if bad else ""))

    # Degree-difference identity against the link-count drop.
    mismatches = 0
    for p, q, m, n in _coprime_grid(grid_max_p, grid_max_m):
        d_p, d_r = p * q * (m - n), p * q * (m + n)
        a = seifert.ell_from_degrees(d_p, d_r, p, q)
        b = seifert.ell_from_links(
            seifert.LinkCounts(m, n), seifert.LinkCounts(m - n, 0)
        )
        if not (a == b == n):
            mismatches += 1
    add("ell_degree_identity", mismatches == 0,
        f"(d_r - d_p)/2pq = n = link-count drop on the coprime grid "
        f"(p <= {grid_max_p}, m <= {grid_max_m}); {mismatches} mismatches")

    # Stagewise chi ledger telescopes to -2 ell d_p.
    mismatches = 0
    for p, q, m, n in _coprime_grid(grid_max_p, grid_max_m):
        decomposition = handles.build(synthetic_link(p, q, m, n))
        drop = decomposition.stages[-1].chi - decomposition.stages[0].chi
        if drop != -2 * n * p * q * (m - n):
            mismatches += 1
    add("chi_telescoping", mismatches == 0,
        f"final chi minus stage-0 chi equals -2*n*pq(m-n) on the grid; "
        f"{mismatches} mismatches")

    # Iterated handle steps equal the closed-form total; degree law holds.
    mismatches = 0
    for p, q, m, n in _coprime_grid(grid_max_p, grid_max_m):
        d_p = p * q * (m - n)
        step = monodromy.delta_star_initial(p, q, m, n)
        for _ in range(n):
            step = monodromy.round_handle_step(step, d_p)
        total = monodromy.delta_star_total(p, q, m, n)
        link = synthetic_link(p, q, m, n)
        degree_ok = (
            (total * monodromy.CyclicPoly.cyclic(1)).degree()
            == 1 - seifert.euler_characteristic_total(link)
        )
        if step != total or not degree_ok:
            mismatches += 1
    add("delta_star_path_independence", mismatches == 0,
        f"n handle steps from the initial value match the closed form, and "
        f"deg(delta_star * (t-1)) = 1 - chi; {mismatches} mismatches")

    # Base-case characteristic polynomial against the eigenvalue product.
    worst = 0.0
    for p in range(1, 61):
        for q in range(1, 61):
            if p * q > 60 or math.gcd(p, q) != 1:
                continue
            exact = monodromy.delta1_base(p, q, 1).expand()
            oracle = monodromy.brieskorn_eigenvalue_poly(p, q)
            if len(exact) != len(oracle):
                worst = float("inf")
                continue
            worst = max(worst, float(np.max(np.abs(np.array(exact) - oracle))))
    add("delta1_base_oracle", worst < 1e-6,
        f"expansion matches the root-of-unity product for pq <= 60; "
        f"max coefficient error {worst:.2e}")

    # Weight detection recovers planted weights; equivariance residual small.
    rng = np.random.default_rng(seed)
    failures = 0
    worst_res = 0.0
    for k in range(instances):
        polar = k % 2 == 0
        P, planted = homogeneity.random_weighted_instance(rng, polar=polar)
        found = homogeneity.detect_polar(P) if polar else homogeneity.detect_radial(P)
        if found is None or (found.weights, found.degree) != (planted.weights, planted.degree):
            failures += 1
            continue
        data = homogeneity.WeightData(
            polar=found if polar else None, radial=None if polar else found
        )
        check = homogeneity.check_equivariance(P, data, samples=20, tol=tol,
                                               seed=int(rng.integers(2**31)))
        res = max(r for r in (check.polar_max_residual, check.radial_max_residual)
                  if r is not None)
        worst_res = max(worst_res, res)
        if res > tol:
            failures += 1
    add("weight_detection", failures == 0,
        f"{instances} planted instances recovered exactly; worst equivariance "
        f"residual {worst_res:.2e} (tol {tol:.0e}); {failures} failures")

    if folds:
        if not f_text or not g_text:
            raise InputError("--folds requires --f and --g")
        fold = folds_report(f_text, g_text, t=t, gamma=gamma, gamma1=gamma1,
                            gamma2=gamma2, seeds=fold_seeds, seed=seed)
        add("fold_count", fold["status"] == STATUS_OK,
            f"orbit count {fold['orbit_count']} vs predicted {fold['expected_ell']}; "
            f"convergence {fold['converged']}/{fold['seeds']}")

    return {
        "status": STATUS_OK if all(c["passed"] for c in checks) else STATUS_INCONSISTENT,
        "checks": checks,
    }


def folds_report(
    f_text: str,
    g_text: str,
    t: str = "1/20",
    gamma: str = "1",
    gamma1: str = "1",
    gamma2: str = "1",
    seeds: int = 200,
    seed: int = 0,
    cfg: numeric.NumericConfig | None = None,
) -> dict:
    """Numeric fold-orbit count for the deformation of f * conj(g)."""
    f, g, link = _extract_pair(f_text, g_text)
    spec = _deformation_spec(f, g, link, t, gamma, gamma1, gamma2)
    outcome = deform.fold_search_with_genericity(
        spec, cfg or numeric.NumericConfig(seeds=seeds), seed=seed
    )
    expected = link.n
    out = _fold_dict(outcome)
    out["expected_ell"] = expected
    out["deformed"] = str(outcome.deformed)
    if outcome.status == "inconclusive":
        out["status"] = STATUS_INCONCLUSIVE
    elif outcome.report.orbit_count != expected:
        out["status"] = STATUS_INCONSISTENT
    else:
        out["status"] = STATUS_OK
    return out
