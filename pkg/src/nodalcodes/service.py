"""Report layer and HTTP service.

Every operation produces a Report: a versioned, machine-readable JSON
document with a pass/fail/budgeted status, the computed payload, and the
published values it was checked against where applicable.  The FastAPI
application exposes one endpoint per command group; the CLI calls the
same builder functions in-process.
"""

from __future__ import annotations

from datetime import datetime, timezone

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import acceptance, barth, dorohall, families, k3lattice, pgradon, search, unobstructed
from .codes import (
    BicolouredCode,
    LinearCode,
    SearchBudgetExceeded,
    is_equivalent,
)
from .exactalg import F2, F3, F5, F25
from .gf2 import BinaryMatrix, BinaryVector

_FIELDS = {2: F2, 3: F3, 5: F5, 25: F25}


class UsageError(Exception):
    """Bad arguments; the CLI maps this to exit code 64."""


class Report(BaseModel):
    schema_version: int = Field(default=1, serialization_alias="schema")
    command: str
    status: str
    payload: dict
    expected: dict | None = None
    seed: int | None = None
    timestamp: str = ""

    def finalized(self) -> "Report":
        if not self.timestamp:
            self.timestamp = datetime.now(timezone.utc).isoformat()
        return self


def _report(command, status, payload, expected=None, seed=None) -> Report:
    return Report(
        command=command,
        status=status,
        payload=payload,
        expected=expected,
        seed=seed,
    ).finalized()


def _parse_rows(rows: list[str]) -> LinearCode:
    if not rows:
        raise UsageError("at least one generator row required")
    length = len(rows[0])
    if any(len(r) != length or set(r) - {"0", "1"} for r in rows):
        raise UsageError("rows must be equal-length 0/1 strings")
    return LinearCode(BinaryMatrix([BinaryVector.parse(r) for r in rows], length))


def _enum_dict(code: LinearCode) -> dict:
    return {str(w): c for w, c in sorted(code.weight_enumerator().counts.items())}


# ---------------------------------------------------------------------------
# codes
# ---------------------------------------------------------------------------


def codes_report(action: str, rows: list[str], other: list[str] | None = None) -> Report:
    """Actions: enumerator, dual, equivalent (needs a second matrix)."""
    code = _parse_rows(rows)
    if action == "enumerator":
        payload = {
            "length": code.length,
            "dimension": code.dimension,
            "effective_length": code.effective_length(),
            "enumerator": _enum_dict(code),
        }
        return _report("codes enumerator", "pass", payload)
    if action == "dual":
        dual = code.dual()
        payload = {
            "dimension": dual.dimension,
            "rows": [
                format(b, f"0{code.length}b")[::-1] for b in dual.basis_bits
            ],
            "enumerator": _enum_dict(dual),
        }
        return _report("codes dual", "pass", payload)
    if action == "equivalent":
        if not other:
            raise UsageError("equivalent needs two matrices")
        second = _parse_rows(other)
        perm = is_equivalent(code, second)
        payload = {"equivalent": perm is not None}
        if perm is not None:
            payload["permutation"] = list(perm)
        return _report("codes equivalent", "pass", payload)
    raise UsageError(f"unknown codes action {action!r}")


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


def families_report(action: str, nodes: int | None = None) -> Report:
    """Actions: quintic, quartic, k8, sextic, candidates (with nodes)."""
    if action == "quintic":
        main, extra = search.quintic_parameter_scan()
        expected = {
            "main": [list(r) for r in acceptance.TWO_WEIGHT_ROWS_MAIN],
            "extra": [list(r) for r in acceptance.TWO_WEIGHT_ROWS_EXTRA],
        }
        payload = {"main": [list(r) for r in main], "extra": [list(r) for r in extra]}
        status = "pass" if payload == expected else "fail"
        return _report("families quintic", status, payload, expected)
    if action == "quartic":
        catalog, strata = families.kummer_shortening_catalog()
        counts = families.strata_counts(strata)
        payload = {
            "codes": [c.name for c in catalog],
            "strata": len(strata),
            "per_nu": [counts.get(nu, 0) for nu in range(17)],
        }
        expected = {"per_nu": list(acceptance.QUARTIC_STRATA_PER_NU), "strata": 34}
        status = (
            "pass"
            if payload["per_nu"] == expected["per_nu"] and len(strata) == 34
            else "fail"
        )
        return _report("families quartic", status, payload, expected)
    if action == "k8":
        catalog, strata = families.k8_shortening_catalog()
        payload = {
            "codes": [c.name for c in catalog],
            "entries": len(catalog),
            "strata": len(strata),
        }
        expected = {"entries": 15}
        status = "pass" if len(catalog) == 15 else "fail"
        return _report("families k8", status, payload, expected)
    if action == "sextic":
        extended, strict = families.barth_codes()
        payload = {
            "dim_extended": extended.dim_extended,
            "dim_strict": strict.dimension,
            "strict_enumerator": {
                str(w): c
                for w, c in sorted(strict.weight_enumerator().counts.items())
            },
            "coset_enumerator": {
                str(w): c
                for w, c in sorted(
                    extended.coset_weight_enumerator().counts.items()
                )
            },
        }
        expected = {
            "dim_extended": 13,
            "dim_strict": 12,
            "strict_enumerator": {
                str(w): c for w, c in acceptance.SEXTIC_STRICT_ENUM.items()
            },
            "coset_enumerator": {
                str(w): c for w, c in acceptance.SEXTIC_COSET_ENUM.items()
            },
        }
        status = "pass" if payload == expected else "fail"
        return _report("families sextic", status, payload, expected)
    if action == "candidates":
        if nodes not in (64, 65):
            raise UsageError("candidates requires nodes in {64, 65}")
        cands = families.sextic_candidates(nodes)
        payload = {
            "count": len(cands),
            "names": [c.name for c in cands],
        }
        expected = {"count": 3 if nodes == 65 else 7}
        status = "pass" if payload["count"] == expected["count"] else "fail"
        return _report("families candidates", status, payload, expected)
    raise UsageError(f"unknown families action {action!r}")


# ---------------------------------------------------------------------------
# pg (finite Radon transform)
# ---------------------------------------------------------------------------


def pg_report(q: int = 2, k: int = 3, seed: int = 0, trials: int = 20) -> Report:
    """Random multiset Radon round trips over PG(k-1, q)."""
    import random

    if q not in _FIELDS:
        raise UsageError(f"q must be one of {sorted(_FIELDS)}")
    if not 2 <= k <= 4:
        raise UsageError("k must be between 2 and 4")
    field = _FIELDS[q]
    rng = random.Random(seed)
    pts = pgradon.pg_points(k, field)
    failures = 0
    for _ in range(trials):
        ms = {
            p: rng.randint(1, 5)
            for p in rng.sample(pts, rng.randint(1, len(pts)))
        }
        image = pgradon.radon(ms, k, field)
        if pgradon.double_radon_invert(image, k, field) != ms:
            failures += 1
    payload = {"q": q, "k": k, "trials": trials, "failures": failures}
    return _report(
        "pg radon", "pass" if failures == 0 else "fail", payload, seed=seed
    )


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------


def search_report(
    action: str,
    k: int | None = None,
    budget: int | None = None,
) -> Report:
    """Actions: restricted (dimension k), extensions, solve."""
    if action == "restricted":
        if k is None or not 0 <= k <= 5:
            raise UsageError("restricted requires --k between 0 and 5")
        kwargs = {"budget": budget} if budget else {}
        try:
            classes = search.enumerate_restricted(k, k + 26, {16, 20}, **kwargs)
        except SearchBudgetExceeded as exc:
            return _report(
                "search restricted", "budgeted", {"budget": exc.budget}
            )
        payload = {
            "classes": len(classes),
            "parameters": [
                [c.effective_length(), c.dimension] for c in classes
            ],
        }
        return _report("search restricted", "pass", payload)
    if action == "extensions":
        result = acceptance.run_criterion(3, budget)
        return _report(
            "search extensions",
            result["status"],
            result.get("payload", {"error": result.get("error")}),
        )
    if action == "solve":
        result = acceptance.run_criterion(10, budget)
        return _report(
            "search solve",
            result["status"],
            result.get("payload", {"error": result.get("error")}),
        )
    raise UsageError(f"unknown search action {action!r}")


# ---------------------------------------------------------------------------
# k3
# ---------------------------------------------------------------------------


def k3_report(
    action: str,
    nu: int | None = None,
    dmod8: int | None = None,
    case: str | None = None,
    d: int | None = None,
    budget: int | None = None,
) -> Report:
    """Actions: classify (nu, dmod8), existence (case, d)."""
    if action == "classify":
        if nu is None or dmod8 is None:
            raise UsageError("classify requires --nu and --dmod8")
        kwargs = {"budget": budget} if budget else {}
        try:
            classes = k3lattice.classify_k3_codes(nu, dmod8, **kwargs)
        except SearchBudgetExceeded as exc:
            return _report("k3 classify", "budgeted", {"budget": exc.budget})
        payload = {
            "nu": nu,
            "dmod8": dmod8,
            "classes": len(classes),
            "dimensions": sorted(c.dim_extended for c in classes),
        }
        return _report("k3 classify", "pass", payload)
    if action == "existence":
        if case not in ("t13", "t15") or d is None:
            raise UsageError("existence requires --case t13|t15 and --d")
        try:
            ok = k3lattice.mod8_existence(case, d)
        except k3lattice.WrongResidue as exc:
            raise UsageError(str(exc))
        payload = {"case": case, "d": d, "exists": ok}
        return _report("k3 existence", "pass", payload)
    raise UsageError(f"unknown k3 action {action!r}")


# ---------------------------------------------------------------------------
# barth
# ---------------------------------------------------------------------------


def barth_report(action: str, budget: int | None = None) -> Report:
    """Actions: nodes, secants, graph, code, det, segre, aut, census."""
    criterion_map = {
        "nodes": 7,
        "secants": 8,
        "code": 9,
        "det": 11,
        "aut": 13,
    }
    if action in criterion_map:
        result = acceptance.run_criterion(criterion_map[action], budget)
        return _report(
            f"barth {action}",
            result["status"],
            result.get("payload", {"error": result.get("error")}),
        )
    if action == "graph":
        g = barth.node_graph()
        arr = dorohall.intersection_array(g)
        payload = {
            "order": g.order,
            "size": g.size,
            "intersection_array": arr,
            "locally_petersen": dorohall.is_locally_petersen(g),
            "graph": g.serialize().splitlines(),
        }
        expected = {
            "order": 65,
            "size": 325,
            "intersection_array": {"b": [10, 6, 4], "c": [1, 2, 5]},
        }
        status = (
            "pass"
            if all(payload[k] == expected[k] for k in expected)
            and payload["locally_petersen"]
            else "fail"
        )
        return _report("barth graph", status, payload, expected)
    if action == "segre":
        segre = barth.segre_realizations()
        payload = {
            "subcode_count": segre["subcode_count"],
            "product_identity": segre["realization_product_identity"],
            "irreducible_identity": segre["realization_irreducible_identity"],
        }
        expected = {"subcode_count": 65}
        status = (
            "pass"
            if payload["subcode_count"] == 65
            and payload["product_identity"]
            and payload["irreducible_identity"]
            else "fail"
        )
        return _report("barth segre", status, payload, expected)
    if action == "census":
        census = barth.decomposition_census()
        payload = {"census": list(census)}
        expected = {"census": [1690, 1300, 390]}
        status = "pass" if payload == expected else "fail"
        return _report("barth census", status, payload, expected)
    raise UsageError(f"unknown barth action {action!r}")


# ---------------------------------------------------------------------------
# dorohall
# ---------------------------------------------------------------------------


def _named_graph(name: str) -> dorohall.Graph:
    if name == "frobenius":
        return dorohall.doro_frobenius()[0]
    if name == "quadric":
        return dorohall.quadric_graph()
    if name == "nodes":
        return barth.node_graph()
    raise UsageError(f"unknown graph {name!r} (frobenius|quadric|nodes)")


def dorohall_report(
    action: str,
    which: str | None = None,
    other: str | None = None,
    size: int | None = None,
    budget: int | None = None,
) -> Report:
    """Actions: build (which), compare (which, other), indep (size)."""
    if action == "build":
        if which is None:
            raise UsageError("build requires a graph name")
        g = _named_graph(which)
        arr = dorohall.intersection_array(g)
        payload = {
            "order": g.order,
            "size": g.size,
            "intersection_array": arr,
            "graph": g.serialize().splitlines(),
        }
        expected = {
            "order": 65,
            "size": 325,
            "intersection_array": {"b": [10, 6, 4], "c": [1, 2, 5]},
        }
        status = (
            "pass"
            if all(payload[k] == expected[k] for k in expected)
            else "fail"
        )
        return _report(f"dorohall build {which}", status, payload, expected)
    if action == "compare":
        if which is None or other is None:
            raise UsageError("compare requires two graph names")
        g1, g2 = _named_graph(which), _named_graph(other)
        kwargs = {"budget": budget} if budget else {}
        try:
            iso = dorohall.find_isomorphism(g1, g2, **kwargs)
        except dorohall.BudgetExhausted as exc:
            return _report(
                "dorohall compare", "budgeted", {"budget": exc.budget}
            )
        payload = {"isomorphic": iso is not None}
        if iso is not None:
            payload["isomorphism"] = list(iso)
        return _report(
            "dorohall compare",
            "pass" if iso is not None else "fail",
            payload,
        )
    if action == "indep":
        if size is None:
            raise UsageError("indep requires --size")
        g = _named_graph(which or "frobenius")
        cap = budget if budget is not None else 50_000_000
        try:
            count = dorohall.independent_count(g, size, cap)
        except dorohall.BudgetExhausted as exc:
            return _report("dorohall indep", "budgeted", {"budget": exc.budget})
        payload = {"size": size, "count": count}
        return _report("dorohall indep", "pass", payload)
    raise UsageError(f"unknown dorohall action {action!r}")


# ---------------------------------------------------------------------------
# unobstructed
# ---------------------------------------------------------------------------


def unobstructed_report(
    surface: str | None = None, action: str | None = None
) -> Report:
    """Either a per-surface rank report or one of the named checks
    planes, line, projection."""
    if action == "planes":
        payload = unobstructed.gk_planes_verify()
        return _report("unobstructed planes", "pass", payload)
    if action == "line":
        payload = unobstructed.line_verify()
        return _report("unobstructed line", "pass", payload)
    if action == "projection":
        payload = unobstructed.togliatti_projection_verify()
        return _report("unobstructed projection", "pass", payload)
    if action is not None:
        raise UsageError(f"unknown unobstructed action {action!r}")
    if surface is None:
        raise UsageError("unobstructed requires --surface or an action")
    if surface in unobstructed.EXCLUDED_SURFACES:
        raise UsageError(
            f"{surface}: node coordinates are not catalogued, so its "
            "evaluation rank is excluded by design"
        )
    try:
        rank, nodes, ok = unobstructed.evaluation_rank(surface)
    except unobstructed.UnknownSurface:
        raise UsageError(
            f"unknown surface {surface!r}; choose from "
            f"{', '.join(unobstructed.SURFACE_NAMES)}"
        )
    payload = {
        "rank": rank,
        "nodes": nodes,
        "verdict": "unobstructed" if ok else "obstructed",
    }
    expected_tuple = acceptance.EXPECTED_RANKS[surface]
    expected = {"rank": expected_tuple[0], "nodes": expected_tuple[1]}
    status = "pass" if (rank, nodes) == expected_tuple[:2] else "fail"
    return _report(f"unobstructed {surface}", status, payload, expected)


# ---------------------------------------------------------------------------
# acceptance
# ---------------------------------------------------------------------------


def acceptance_report(
    criteria: list[int] | None = None, budget: int | None = None
) -> Report:
    """Run the acceptance suite (all criteria by default)."""
    numbers = criteria or [c.number for c in acceptance.CRITERIA]
    bad = [n for n in numbers if not 1 <= n <= 16]
    if bad:
        raise UsageError(f"criteria out of range: {bad}")
    results = acceptance.run_all(numbers, budget)
    statuses = [r["status"] for r in results]
    if "fail" in statuses:
        status = "fail"
    elif "budgeted" in statuses:
        status = "budgeted"
    else:
        status = "pass"
    return _report("acceptance", status, {"results": results})


# ---------------------------------------------------------------------------
# HTTP application
# ---------------------------------------------------------------------------


class CodesRequest(BaseModel):
    action: str
    rows: list[str]
    other: list[str] | None = None


class FamiliesRequest(BaseModel):
    action: str
    nodes: int | None = None


class PgRequest(BaseModel):
    q: int = 2
    k: int = 3
    seed: int = 0
    trials: int = 20


class SearchRequest(BaseModel):
    action: str
    k: int | None = None
    budget: int | None = None


class K3Request(BaseModel):
    action: str
    nu: int | None = None
    dmod8: int | None = None
    case: str | None = None
    d: int | None = None
    budget: int | None = None


class BarthRequest(BaseModel):
    action: str
    budget: int | None = None


class DorohallRequest(BaseModel):
    action: str
    which: str | None = None
    other: str | None = None
    size: int | None = None
    budget: int | None = None


class UnobstructedRequest(BaseModel):
    surface: str | None = None
    action: str | None = None


class AcceptanceRequest(BaseModel):
    criteria: list[int] | None = None
    budget: int | None = None


app = FastAPI(title="nodalcodes", version="0.1.0")


def _guard(fn, *args, **kwargs) -> Report:
    try:
        return fn(*args, **kwargs)
    except UsageError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "schema": 1}


@app.post("/codes")
def codes_endpoint(req: CodesRequest) -> Report:
    return _guard(codes_report, req.action, req.rows, req.other)


@app.post("/families")
def families_endpoint(req: FamiliesRequest) -> Report:
    return _guard(families_report, req.action, req.nodes)


@app.post("/pg")
def pg_endpoint(req: PgRequest) -> Report:
    return _guard(pg_report, req.q, req.k, req.seed, req.trials)


@app.post("/search")
def search_endpoint(req: SearchRequest) -> Report:
    return _guard(search_report, req.action, req.k, req.budget)


@app.post("/k3")
def k3_endpoint(req: K3Request) -> Report:
    return _guard(
        k3_report, req.action, req.nu, req.dmod8, req.case, req.d, req.budget
    )


@app.post("/barth")
def barth_endpoint(req: BarthRequest) -> Report:
    return _guard(barth_report, req.action, req.budget)


@app.post("/dorohall")
def dorohall_endpoint(req: DorohallRequest) -> Report:
    return _guard(
        dorohall_report, req.action, req.which, req.other, req.size, req.budget
    )


@app.post("/unobstructed")
def unobstructed_endpoint(req: UnobstructedRequest) -> Report:
    return _guard(unobstructed_report, req.surface, req.action)


@app.post("/acceptance")
def acceptance_endpoint(req: AcceptanceRequest) -> Report:
    return _guard(acceptance_report, req.criteria, req.budget)
