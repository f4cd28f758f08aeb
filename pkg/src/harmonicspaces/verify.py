"""Aggregated verification suite behind the `verify` CLI command.

Every check is PASS/WARN/FAIL.  WARN covers the two flagged table rows
whose verbatim transcription fails but whose alternate reading passes, and
permanent advisory notes; the suite fails only on silent disagreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import harmonic, quotients, topology
from .errors import SelfCheckFailed
from .harmonic import BoundaryBehavior, SUSPECT_ALTERNATES, verify_table_entry
from .spaces import SpaceModel, euclidean, parse_model_id, positive_curvature_catalogue


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS | WARN | FAIL
    details: str

    def line(self) -> str:
        return f"{self.status:<4} {self.name}: {self.details}"


def check_table_row(model: SpaceModel) -> CheckResult:
    """Oracle verdict for one closed-form row, with the WARN policy for the
    flagged transcriptions."""
    res = verify_table_entry(model)
    detail = (
        f"ode_residual={res.max_ode_residual:.3e} "
        f"match_residual={res.max_match_residual:.3e}"
    )
    if res.passed:
        return CheckResult(f"table {model.model_id}", "PASS", detail)
    alt = SUSPECT_ALTERNATES.get(model.model_id)
    if alt is not None:
        alt_res = verify_table_entry(model, phi0_override=alt)
        if alt_res.passed:
            return CheckResult(
                f"table {model.model_id}",
                "WARN",
                f"verbatim entry fails ({detail}); oracle-corrected "
                f"sign/factor reading passes "
                f"(ode_residual={alt_res.max_ode_residual:.3e})",
            )
    return CheckResult(f"table {model.model_id}", "FAIL", detail)


def table_checks(models: list[SpaceModel] | None = None) -> list[CheckResult]:
    if models is None:
        models = harmonic.closed_form_models() + [euclidean(m) for m in (2, 3, 4, 5)]
    return [check_table_row(m) for m in models]


def boundary_checks(models: list[SpaceModel] | None = None) -> list[CheckResult]:
    """Every compact catalogue model must have a divergent far end."""
    if models is None:
        models = positive_curvature_catalogue()
    out = []
    for m in models:
        cls = harmonic.classify_boundary(m)
        ok = cls.at_far_end is BoundaryBehavior.DIVERGENT
        out.append(
            CheckResult(
                f"boundary {m.model_id}",
                "PASS" if ok else "FAIL",
                f"far_end={cls.at_far_end.value}",
            )
        )
    return out


_GROUPS = {
    "torus": quotients.TorusGroup,
    "klein": quotients.KleinGroup,
    "rp": quotients.AntipodalGroup,
    "lens": quotients.LensGroup,
    "cpq": quotients.CPInvolutionGroup,
}


def make_group(group_id: str, **kwargs) -> quotients.DeckGroup:
    try:
        return _GROUPS[group_id](**kwargs)
    except KeyError:
        raise ValueError(f"unknown group id {group_id!r}") from None


def default_basepoint(group: quotients.DeckGroup):
    import numpy as np

    if group.ambient == "flat":
        return np.zeros(2)
    if isinstance(group, quotients.AntipodalGroup):
        e1 = np.zeros(group.m + 1)
        e1[0] = 1.0
        return e1
    return group.basepoint()


def group_checks(seed: int = 42) -> list[CheckResult]:
    out = []
    for gid in _GROUPS:
        group = make_group(gid)
        try:
            report = quotients.group_action_selfcheck(group, samples=2000, seed=seed)
            extra = (
                f" min_displacement={report.min_sampled_displacement:.4f}"
                if report.min_sampled_displacement is not None
                else ""
            )
            out.append(
                CheckResult(
                    f"group {gid}", "PASS", ",".join(report.checks) + extra
                )
            )
        except SelfCheckFailed as exc:
            out.append(CheckResult(f"group {gid}", "FAIL", str(exc)))
    return out


def injectivity_checks(seed: int = 42) -> list[CheckResult]:
    """Brute-force orbit minima against the closed forms."""
    import numpy as np

    rng = np.random.default_rng(seed)
    out = []

    torus = quotients.TorusGroup()
    worst = 0.0
    for _ in range(20):
        p = rng.uniform(-1.0, 1.0, size=2)
        worst = max(worst, abs(quotients.injectivity_radius(torus, p).radius - 0.5))
    out.append(
        CheckResult(
            "injectivity torus",
            "PASS" if worst <= 1e-12 else "FAIL",
            f"max |brute - 1/2| = {worst:.2e} over 20 basepoints",
        )
    )

    klein = quotients.KleinGroup()
    worst = 0.0
    for i in range(41):
        a = 0.05 * i
        got = quotients.injectivity_radius(klein, (0.0, a)).radius
        worst = max(worst, abs(got - quotients.klein_injectivity_closed(a)))
    out.append(
        CheckResult(
            "injectivity klein",
            "PASS" if worst <= 1e-12 else "FAIL",
            f"max |brute - closed| = {worst:.2e} over a in 0..2",
        )
    )

    for gid, expected in (("rp", 0.5 * math.pi), ("lens", 0.25 * math.pi), ("cpq", 0.25 * math.pi)):
        group = make_group(gid)
        got = quotients.injectivity_radius(group, default_basepoint(group)).radius
        out.append(
            CheckResult(
                f"injectivity {gid}",
                "PASS" if abs(got - expected) <= 1e-12 else "FAIL",
                f"brute={got!r} expected={expected!r}",
            )
        )
    return out


_LEMMA_TABLE = {
    # model id: (euler, signature or None)
    "S2": (2, None),
    "S4": (2, 0),
    "S6": (2, None),
    "S8": (2, 0),
    "CP2": (3, 1),
    "CP3": (4, None),
    "CP4": (5, 1),
    "HP2": (3, 1),
    "HP3": (4, 0),
    "HP4": (5, 1),
    "OP2": (3, 1),
}


def topology_checks() -> list[CheckResult]:
    out = []
    for mid, (chi, sig) in _LEMMA_TABLE.items():
        model = parse_model_id(mid)
        got_chi = topology.euler_characteristic(model)
        got_sig = topology.signature(model)
        ok = got_chi == chi and got_sig == sig
        out.append(
            CheckResult(
                f"topology {mid}",
                "PASS" if ok else "FAIL",
                f"chi={got_chi} sign={got_sig}",
            )
        )
    out.append(
        CheckResult(
            "topology hOP2 bound note",
            "WARN",
            topology.OP2_STATEMENT_NOTE,
        )
    )
    return out


def run_all(scope: str = "all", seed: int = 42) -> list[CheckResult]:
    if scope != "all":
        model = parse_model_id(scope)
        results = table_checks([model]) if harmonic.has_closed_form(model) else []
        if model.curvature_sign == 1:
            results += boundary_checks([model])
        if not results:
            raise ValueError(f"nothing to verify for {scope!r}")
        return results
    results = table_checks()
    results += boundary_checks()
    results += injectivity_checks(seed=seed)
    results += group_checks(seed=seed)
    results += topology_checks()
    return results
