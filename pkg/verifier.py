import json
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from math import comb

import constants.constants as constants
from models import CheckRecord, SuiteSummary, VerificationSettings
from utils import bgg, linkmaps, polyforms, proxies
from utils.exactla import LinearMap, rank
from utils.polyforms import PolySpace


def _record(check, case, passed, index=-1, message="", **values) -> dict:
    return {"check": check, "case": case, "index": index, "passed": bool(passed), "message": message,
            "values": values}


# ── appendix1 ─────────────────────────────────────────────────
def _appendix1_case(name, params):
    n = params["n"]
    case = f"n={n}"
    out = []
    if params["law"]:
        bad = []
        for J in range(n):
            for i in range(n):
                injective, surjective = linkmaps.check_inj_surj(n, i, J + 1)
                want_inj, want_surj = linkmaps.expected_inj_surj(i, J)
                if (want_inj and not injective) or (want_surj and not surjective):
                    bad.append([i, J])
        out.append(_record("injective_surjective", case, not bad, failures=bad))
        tsst = [[i, J] for i in range(n) for J in range(1, n + 1) if linkmaps.tsst_check(n, i, J) != (True, True)]
        out.append(_record("moore_penrose", case, not tsst, failures=tsst))
        blocks = [[p, k] for p in range(2 * n + 1) for k in range(min(p, n) + 1)
                  if not linkmaps.y_block_compatibility(n, p, k)]
        out.append(_record("y_blocks", case, not blocks, failures=blocks))
        if n in (2, 3):
            labels = [[i, J] for i, J in constants.LINK_LABELS[n] if not proxies.link_label_check(n, i, J)]
            out.append(_record("proxy_link_labels", case, not labels, failures=labels))
    if params["sident"]:
        residual = [k for k in range(n) if not linkmaps.sident_check(n, k).is_zero()]
        out.append(_record("inner_product_identity", case, not residual, failures=residual))
        invariance = [k for k in range(n) if not linkmaps.w_invariance_check(n, k)]
        out.append(_record("w_invariance", case, not invariance, failures=invariance))
    return out


# ── homotopy ──────────────────────────────────────────────────
def _homotopy_identities(s: PolySpace) -> dict:
    d, k, p = polyforms.d_matrix, polyforms.koszul_matrix, polyforms.homotopy_P_matrix
    L, K, S = polyforms.homotopy_L_matrix, polyforms.K_matrix, polyforms.s_operator_matrix
    up, down = s.shifted(dr=-1, di=1), s.shifted(dr=1, dJ=-1)
    checks = {
        "dP+Pd=id-L": d(s.shifted(dr=1, di=-1)) @ p(s) + p(up) @ d(s) == LinearMap.identity(s.dim) - L(s),
    }
    if s.i < s.n:
        checks["dd=0"] = (d(up) @ d(s)).is_zero()
        checks["dL=Ld"] = d(s) @ L(s) == L(up) @ d(s)
        if s.J >= 1:
            checks["dKt-Ktd=S"] = d(down) @ k(s) - k(up) @ d(s) == S(s)
            checks["dK-Kd=S"] = d(down) @ K(s) - K(up) @ d(s) == S(s)
            checks["dS=-Sd"] = d(s.shifted(di=1, dJ=-1)) @ S(s) == -(S(up) @ d(s))
    return checks


def _homotopy_case(name, params):
    n, r = params["n"], params["r"]
    case = f"n={n} r={r}"
    failures = defaultdict(list)
    seen = set()
    for i in range(n + 1):
        for J in range(n + 1):
            for check, ok in _homotopy_identities(PolySpace(n=n, r=r, i=i, J=J)).items():
                seen.add(check)
                if not ok:
                    failures[check].append([i, J])
    out = [_record(check, case, not failures[check], failures=failures[check]) for check in sorted(seen)]
    rows = []
    for J in range(n + 1):
        dims = polyforms.row_cohomology(polyforms.DegreeSchedule(n=n, J=J, r=r))
        if dims != [comb(n, J)] + [0] * n:
            rows.append([J, dims])
    out.append(_record("row_cohomology", case, not rows, failures=rows))
    return out


# ── diagram suites ────────────────────────────────────────────
def _failures_by_index(name, check, flags) -> dict:
    bad = [i for i, ok in flags if not ok]
    return _record(check, name, not bad, failures=bad)


def _lemma8_case(name, params):
    diag = proxies.named_diagram(name, params["degree"])
    grouped = defaultdict(list)
    for entry in bgg.lemma8_identity_check(diag):
        grouped[entry["identity"]].append((entry["index"], entry["holds"]))
    return [_failures_by_index(name, identity, flags) for identity, flags in sorted(grouped.items())]


def _projection_case(name, params):
    diag = proxies.named_diagram(name, params["degree"])
    out_complex = bgg.output_complex(diag)
    idempotent, commutes, phi_rank, intertwines = [], [], [], []
    for i in range(diag.N + 1):
        pi = bgg.projector_pi(diag, i)
        phi = bgg.phi_iso(diag, i)
        idempotent.append((i, pi @ pi == pi))
        phi_rank.append((i, rank(phi @ pi) == out_complex.space(i).dim))
        if i < diag.N:
            a = bgg.twisted_differential(diag, i)
            commutes.append((i, bgg.projector_pi(diag, i + 1) @ a == a @ pi))
            intertwines.append((i, bgg.phi_iso(diag, i + 1) @ a @ pi == out_complex.D(i) @ phi @ pi))
    out = [
        _failures_by_index(name, "pi_idempotent", idempotent),
        _failures_by_index(name, "pi_commutes", commutes),
        _failures_by_index(name, "phi_full_rank", phi_rank),
        _failures_by_index(name, "phi_intertwines", intertwines),
    ]
    ops = bgg.validate_K(diag, bgg.hodge_homotopy_K(diag))
    cochain = []
    for i in range(diag.N):
        left = bgg.q_map(diag, ops, i + 1) @ bgg.sum_differential(diag, i)
        cochain.append((i, left == bgg.twisted_differential(diag, i) @ bgg.q_map(diag, ops, i)))
    out.append(_failures_by_index(name, "q_cochain", cochain))
    return out


def _exactness_case(name, params):
    diag = proxies.named_diagram(name, params["degree"])
    anti, square = [], []
    for i in range(diag.N):
        anti.append((i, (diag.S(i + 1) @ diag.Dt(i) + diag.D(i + 1) @ diag.S(i)).is_zero()))
        square.append((i, (bgg.twisted_differential(diag, i + 1) @ bgg.twisted_differential(diag, i)).is_zero()))
    entries = bgg.complement_exactness_check(diag)
    exact = _failures_by_index(name, "complement_exact", [(e["index"], e["exact"]) for e in entries])
    exact["values"]["entries"] = entries
    return [_failures_by_index(name, "anticommutativity", anti),
            _failures_by_index(name, "twisted_square_zero", square), exact]


# ── dimension ─────────────────────────────────────────────────
def _certificate(name, diag, ops) -> dict:
    ranks = [bgg.induced_cohomology_rank(diag, ops, i) for i in range(diag.N + 1)]
    return _failures_by_index(name, "certificate", [(e["index"], e["iso"]) for e in ranks])


def _theorem(name, diag) -> dict:
    report = bgg.theorem_dimension_check(diag)
    passed = report["consistent"] and report["equality_all"]
    return _record("theorem_dimension", name, passed, h_out=[e["h_out"] for e in report["entries"]],
                   snr=report["snr_all"])


def _named_dimension_case(name, params):
    expected = params["golden"]
    diag = proxies.named_diagram(name, params["degree"])
    out_complex = proxies.named_complex(name, params["degree"])
    dims = bgg.cohomology(out_complex).dims
    fibers = [(s.fiber_dim, want) for s, want in zip(out_complex.spaces, expected["fiber_dims"])
              if s.cap is not None and s.cap >= 0]
    out = [
        _record("derived_J", name, diag.J == expected["J"], J=diag.J),
        _record("golden_cohomology", name, dims == expected["cohomology"], dims=dims,
                expected=expected["cohomology"]),
        _record("golden_fiber_dims", name, all(a == b for a, b in fibers), fiber_dims=out_complex.fiber_dims),
        _theorem(name, diag),
    ]
    hodge = []
    for i in range(len(out_complex)):
        ran, harmonic, coran = bgg.hodge_decompose(out_complex, i)
        orthogonal = all((x.T @ y).is_zero() for x, y in ((ran, harmonic), (ran, coran), (harmonic, coran)))
        hodge.append((i, orthogonal and ran.cols + harmonic.cols + coran.cols == out_complex.space(i).dim))
    out.append(_failures_by_index(name, "hodge_decomposition", hodge))
    if params["certificate"]:
        out.append(_certificate(name, diag, bgg.validate_K(diag, bgg.hodge_homotopy_K(diag))))
    return out


def _family_dimension_case(name, params):
    n, J, r = params["n"], params["J"], params["degree"]
    diag = bgg.alt_family_diagram(n, J, r)
    dims = bgg.cohomology(bgg.output_complex(diag)).dims
    formula = [comb(n + 1, J + 1)] + [0] * n
    out = [
        _record("family_formula", name, dims == formula == params["golden"], dims=dims),
        _theorem(name, diag),
    ]
    if params["certificate"]:
        out.append(_certificate(name, diag, bgg.validate_K(diag, bgg.alt_family_K(n, J, r))))
    return out


def _sign_flipped_elasticity(degree):
    diag = proxies.named_diagram("elasticity3d", degree)
    links = list(diag.links)
    links[1] = -links[1]
    return bgg.validate_diagram(diag.top, diag.bottom, links, name="elasticity3d sign-flipped")


def _negative_case(name, params):
    expected = params["expected"]
    try:
        if name == "elasticity3d_sign_flip":
            _sign_flipped_elasticity(params["degree"])
        else:
            proxies.named_diagram(name, params["degree"])
    except bgg.DiagramError as e:
        return [_record("rejected", name, e.reason == expected, message=str(e), reason=e.reason)]
    return [_record("rejected", name, False, message="diagram was accepted", reason=None)]


def _identity_case(name, params):
    report = proxies.operator_identity_check(name, params["degree"])
    return [_record("operator_identity", name, report["holds"], checks=report["checks"])]


SUITE_RUNNERS = {
    "appendix1": _appendix1_case,
    "homotopy": _homotopy_case,
    "lemma8": _lemma8_case,
    "projection": _projection_case,
    "exactness": _exactness_case,
    "dimension/named": _named_dimension_case,
    "dimension/family": _family_dimension_case,
    "dimension/negative": _negative_case,
    "dimension/identity": _identity_case,
}


def run_case(case):
    """Run one (runner, suite, name, params, severity) case; never raises."""
    runner, suite, name, params, severity = case
    try:
        rows = SUITE_RUNNERS[runner](name, params)
    except Exception as e:
        logging.error(f"{suite} case {name} raised", exc_info=True)
        rows = [_record("case", name, False, message=f"{type(e).__name__}: {e}")]
    for row in rows:
        row.update(suite=suite, severity=severity)
        if not row["passed"]:
            logging.warning(f"{suite}: {row['check']} failed on {row['case']}")
    return rows


class Verifier:
    """Runs verification suites over the library and collects one CheckRecord per check and case."""

    def __init__(self, config_path=constants.VERIFICATION_CONFIG_PATH, jobs=1, degree=None, names=None,
                 max_dim=None):
        self.settings = VerificationSettings.load(config_path)
        self.jobs = jobs

        self.suites_enabled = {s: self.settings.suite(s).enabled for s in constants.SUITES}
        self.suites_severity = {s: self.settings.suite(s).severity for s in constants.SUITES}

        self.degree = degree if degree is not None else self.settings.defaults.degree
        self.names = list(names) if names else (self.settings.defaults.named or constants.valid_named())
        for name in self.names:
            if name not in constants.NAMED_DIAGRAMS:
                raise proxies.UnknownName(f"no named diagram {name!r}")

        appendix1 = self.settings.appendix1
        self.max_dim = max_dim or appendix1.max_dim
        self.sident_max_dim = appendix1.sident_max_dim
        self.homotopy_max_n = self.settings.homotopy.max_n
        self.homotopy_max_r = self.settings.homotopy.max_r

        dimension = self.settings.dimension
        self.family_dims = dimension.family_dims
        self.family_degree = dimension.family_degree
        self.family_extra = dimension.family_extra.cases if dimension.family_extra.enabled else []
        self.certificate = dimension.certificate
        self.negative_cases = dimension.negative_cases
        self.operator_identities = dimension.operator_identities
        self.identity_degree = dimension.identity_degree
        self.golden = self._load_golden(self.settings.golden_file())

    def _load_golden(self, path):
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except (OSError, ValueError) as e:
            logging.warning(f"Could not load golden file '{path}': {e}")
            return {}

    def cases(self, suite) -> list:
        severity = self.suites_severity[suite]
        if suite == "appendix1":
            top = max(self.max_dim, self.sident_max_dim)
            return [("appendix1", suite, f"n={n}",
                     {"n": n, "law": n <= self.max_dim, "sident": n <= self.sident_max_dim}, severity)
                    for n in range(1, top + 1)]
        if suite == "homotopy":
            return [("homotopy", suite, f"n={n} r={r}", {"n": n, "r": r}, severity)
                    for n in range(1, self.homotopy_max_n + 1) for r in range(self.homotopy_max_r + 1)]
        if suite in ("lemma8", "projection", "exactness"):
            return [(suite, suite, name, {"degree": self.degree}, severity) for name in self.names
                    if constants.NAMED_DIAGRAMS[name]["J"] is not None]
        out = []
        named_golden = self.golden.get("named", {})
        for name in self.names:
            if name in named_golden:
                params = {"degree": self.degree, "golden": named_golden[name], "certificate": self.certificate}
                out.append(("dimension/named", suite, name, params, severity))
            elif name in self.golden.get("rejected", {}):
                params = {"degree": self.degree, "expected": self.golden["rejected"][name]}
                out.append(("dimension/negative", suite, name, params, severity))
        for n in self.family_dims:
            for J in range(n):
                key = f"n={n} J={J}"
                params = {"n": n, "J": J, "degree": self.family_degree,
                          "golden": self.golden.get("family", {}).get(key), "certificate": self.certificate}
                out.append(("dimension/family", suite, f"altij {key}", params, severity))
        for extra in self.family_extra:
            key = f"n={extra.n} J={extra.J}"
            golden = self.golden.get("family", {}).get(key, [comb(extra.n + 1, extra.J + 1)] + [0] * extra.n)
            params = {"n": extra.n, "J": extra.J, "degree": extra.degree, "golden": golden,
                      "certificate": self.certificate}
            out.append(("dimension/family", suite, f"altij {key} r={extra.degree}", params, severity))
        if self.negative_cases:
            for name, expected in sorted(self.golden.get("rejected", {}).items()):
                if name not in self.names:
                    out.append(("dimension/negative", suite, name, {"degree": self.degree, "expected": expected},
                                severity))
            out.append(("dimension/negative", suite, "elasticity3d_sign_flip",
                        {"degree": self.degree, "expected": "AnticommutativityViolation"}, severity))
        if self.operator_identities:
            out.extend(("dimension/identity", suite, name, {"degree": self.identity_degree}, severity)
                       for name in constants.OPERATOR_IDENTITIES)
        return out

    def run(self, suite=constants.ALL_SUITES, progress=None) -> list:
        if suite == constants.ALL_SUITES:
            suites = [s for s in constants.SUITES if self.suites_enabled[s]]
        else:
            suites = [suite]
        cases = [case for s in suites for case in self.cases(s)]
        logging.info(f"running {len(cases)} cases from {', '.join(suites)} with {self.jobs} job(s)")
        if progress:
            progress(f"{len(cases)} cases")

        batches = []
        if self.jobs > 1 and len(cases) > 1:
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                for case, rows in zip(cases, pool.map(run_case, cases)):
                    batches.append(rows)
                    if progress:
                        progress(f"{case[1]}: {case[2]}")
        else:
            for case in cases:
                batches.append(run_case(case))
                if progress:
                    progress(f"{case[1]}: {case[2]}")

        records = [CheckRecord(**row) for rows in batches for row in rows]
        return sorted(records, key=CheckRecord.sort_key)

    def summarize(self, records) -> SuiteSummary:
        by_suite = defaultdict(int)
        for r in records:
            by_suite[r.suite] += 1
        failed = [r for r in records if not r.passed]
        return SuiteSummary(
            total=len(records),
            passed=len(records) - len(failed),
            errors=len([r for r in failed if r.severity == 'error']),
            warnings=len([r for r in failed if r.severity == 'warning']),
            by_suite=dict(by_suite),
            failed_checks=[f"{r.suite}/{r.check}/{r.case}" for r in failed],
        )

    def report(self, records) -> dict:
        return {"summary": self.summarize(records).model_dump(), "records": [r.model_dump() for r in records]}
