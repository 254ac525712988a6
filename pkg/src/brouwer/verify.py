"""Conjecture checks, spectral identity audits, and exhaustive sweeps.

A check compares S_k against m + C(k+1, 2) with the comparison band
check_eps = 1e-7 * max(1, rhs): margin below -check_eps is a FAIL,
margin within the band is a near_tie (equality cases land here), and
anything above passes.

Exhaustive sweeps walk every labeled graph on n <= 7 vertices in
bit-field order, in fixed 4096-graph chunks whose partial summaries
merge associatively, so any worker count yields the identical summary.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from . import bounds
from .formats import to_graph6
from .graphs import EXHAUSTIVE_CAP, Graph, first_zagreb, vertex_pairs
from .spectra import Spectrum, _jacobi, complement_l, eigenvalues_sym, laplacian, s_k, spectral_tol

CHUNK = 4096
_FAIL_BUFFER = 256


def check_eps(rhs: float) -> float:
    return 1e-7 * max(1.0, rhs)


class InternalConsistencyError(RuntimeError):
    """A proven inequality failed on a concrete graph; carries a dump."""

    def __init__(self, message: str, dump: dict):
        super().__init__(f"{message}\n{json.dumps(dump)}")
        self.dump = dump


@dataclass(frozen=True)
class VerificationRecord:
    """One S_k <= m + C(k+1, 2) comparison."""

    graph_id: str
    n: int
    m: int
    k: int
    s_k: float
    rhs: float
    margin: float
    status: str  # "pass", "near_tie", or "FAIL"

    def dump(self) -> dict:
        return {
            "graph6": self.graph_id,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "s_k": self.s_k,
            "rhs": self.rhs,
            "margin": self.margin,
        }


@dataclass(frozen=True)
class SweepSummary:
    n: int
    graphs_checked: int
    checks_performed: int
    failures: tuple[VerificationRecord, ...]
    near_ties: int
    wall_time: float

    def comparable(self) -> tuple:
        """Everything except wall_time, for determinism comparisons."""
        return (
            self.n,
            self.graphs_checked,
            self.checks_performed,
            self.failures,
            self.near_ties,
        )


def _graph_id(g: Graph) -> str:
    return to_graph6(g) if g.n <= 62 else f"n{g.n}:{g.bits:x}"


def _status(margin: float, eps: float) -> str:
    if margin < -eps:
        return "FAIL"
    if margin <= eps:
        return "near_tie"
    return "pass"


def _record(g: Graph, k: int, sk: float) -> VerificationRecord:
    rhs = bounds.brouwer_rhs(g.m, k)
    margin = rhs - sk
    return VerificationRecord(
        graph_id=_graph_id(g),
        n=g.n,
        m=g.m,
        k=k,
        s_k=sk,
        rhs=rhs,
        margin=margin,
        status=_status(margin, check_eps(rhs)),
    )


def check_conjecture(g: Graph, k: int, spectrum: Spectrum | None = None) -> VerificationRecord:
    """Check S_k(G) <= m + C(k+1, 2) for one k."""
    if spectrum is None:
        spectrum = eigenvalues_sym(laplacian(g))
    return _record(g, k, s_k(spectrum, k))


def check_all_k(g: Graph, spectrum: Spectrum | None = None) -> list[VerificationRecord]:
    """Check every k = 1..n from a single eigensolve."""
    if spectrum is None:
        spectrum = eigenvalues_sym(laplacian(g))
    running = 0.0
    records = []
    for k in range(1, g.n + 1):
        running += float(spectrum.values[k - 1])
        records.append(_record(g, k, running))
    return records


@dataclass(frozen=True)
class IdentityReport:
    """Spectral identities and inequalities audited on one graph.

    Residuals are signed where the check is one-sided: pairing_max and
    mu1_excess must stay below tolerance, top_pair_slack and
    de_caen_slack must stay above its negative.
    """

    n: int
    m: int
    tol: float
    trace_error: float
    min_eigenvalue: float
    mu1_excess: float
    sum_squares_residual: float
    sum_squares_tol: float
    pairing_max: float
    top_pair_slack: float
    de_caen_slack: float
    de_caen_tol: float

    @property
    def max_relative(self) -> float:
        """Worst residual as a multiple of its tolerance; clean iff <= 1."""
        worst = max(
            self.trace_error / self.tol,
            abs(self.min_eigenvalue) / self.tol,
            self.mu1_excess / self.tol,
            self.sum_squares_residual / self.sum_squares_tol,
            self.pairing_max / self.tol,
            -self.top_pair_slack / self.tol,
            -self.de_caen_slack / self.de_caen_tol,
        )
        return max(worst, 0.0)

    @property
    def clean(self) -> bool:
        return self.max_relative <= 1.0


def verify_identities(g: Graph) -> IdentityReport:
    """Audit trace, extremal eigenvalues, the sum-of-squares identity,
    the eigenvalue pairing inequalities, and de Caen's degree bound."""
    mu = eigenvalues_sym(laplacian(g)).values
    mu_c = eigenvalues_sym(complement_l(g)).values
    n, m = g.n, g.m
    m1 = first_zagreb(g)
    ssq_target = float(2 * m1 + 4 * m + n * n)
    ssq = float((mu * mu).sum() + (mu_c * mu_c).sum())
    if n >= 2:
        pairing_max = max(float(mu[i] + mu_c[n - i]) for i in range(1, n))
        de_caen_bound = bounds.de_caen_m1_bound(n, m)
        de_caen_slack = de_caen_bound - m1
        de_caen_tol = 1e-9 * max(1.0, de_caen_bound)
    else:
        pairing_max = -np.inf
        de_caen_slack = 0.0
        de_caen_tol = 1.0
    return IdentityReport(
        n=n,
        m=m,
        tol=spectral_tol(n),
        trace_error=float(abs(mu.sum() - 2.0 * m)),
        min_eigenvalue=float(mu[-1]),
        mu1_excess=float(mu[0] - n),
        sum_squares_residual=abs(ssq - ssq_target),
        sum_squares_tol=1e-6 * ssq_target,
        pairing_max=pairing_max,
        top_pair_slack=float(mu[0] + mu_c[0] - n),
        de_caen_slack=de_caen_slack,
        de_caen_tol=de_caen_tol,
    )


def check_sk_bound(g: Graph, k: int, spectrum: Spectrum | None = None) -> float:
    """Slack of the square-root S_k bound; negative slack is a bug."""
    if spectrum is None:
        spectrum = eigenvalues_sym(laplacian(g))
    bound = bounds.sk_upper_bound(g.n, g.m, k)
    sk = s_k(spectrum, k)
    slack = bound - sk
    if slack < -check_eps(bound):
        raise InternalConsistencyError(
            "S_k exceeded its square-root upper bound",
            {"graph6": _graph_id(g), "n": g.n, "m": g.m, "k": k,
             "s_k": sk, "bound": bound},
        )
    return slack


def check_zhou(g: Graph, k: int, spectrum: Spectrum | None = None) -> float:
    """Slack of Zhou's bound for 1 <= k <= n-2; negative slack is a bug."""
    if spectrum is None:
        spectrum = eigenvalues_sym(laplacian(g))
    bound = bounds.zhou_bound(g.n, g.m, k)
    sk = s_k(spectrum, k)
    slack = bound - sk
    if slack < -check_eps(bound):
        raise InternalConsistencyError(
            "S_k exceeded Zhou's bound",
            {"graph6": _graph_id(g), "n": g.n, "m": g.m, "k": k,
             "s_k": sk, "bound": bound},
        )
    return slack


def interval_cross_check(g: Graph, spectrum: Spectrum | None = None) -> list[VerificationRecord]:
    """Check the conjecture for every k in each applicable k-interval.

    The intervals are proven, so a FAIL here means the toolkit itself is
    inconsistent: the check aborts with a diagnostic dump.
    """
    if g.n < 2:
        return []
    if spectrum is None:
        spectrum = eigenvalues_sym(laplacian(g))
    records = []
    for interval in (bounds.sparse_interval(g.n, g.m), bounds.dense_interval(g.n, g.m)):
        for k in interval.ks():
            rec = check_conjecture(g, k, spectrum)
            if rec.status == "FAIL":
                dump = rec.dump()
                dump["regime"] = interval.regime
                dump["spectrum"] = [float(v) for v in spectrum.values]
                raise InternalConsistencyError(
                    f"conjecture failed inside the proven {interval.regime} interval",
                    dump,
                )
            records.append(rec)
    return records


@njit(cache=True, nogil=True)
def _sweep_range(n, start, stop, pair_i, pair_j, fail_bits, fail_k, fail_sk):
    """Check every graph with bit-field index in [start, stop).

    Returns (checks, near_ties, failure_count); failure details land in
    the provided buffers (truncated at their length).
    """
    npairs = pair_i.shape[0]
    a = np.empty((n, n))
    vals = np.empty(n)
    cap = fail_bits.shape[0]
    checks = 0
    near = 0
    nfail = 0
    for gbits in range(start, stop):
        for i in range(n):
            for j in range(n):
                a[i, j] = 0.0
        m = 0
        for e in range(npairs):
            if gbits >> e & 1:
                i = pair_i[e]
                j = pair_j[e]
                a[i, j] = -1.0
                a[j, i] = -1.0
                a[i, i] += 1.0
                a[j, j] += 1.0
                m += 1
        off, converged = _jacobi(a)
        if not converged:
            raise RuntimeError("eigensolver failed to converge during sweep")
        for i in range(n):
            vals[i] = a[i, i]
        vals.sort()
        s = 0.0
        for k in range(1, n + 1):
            s += vals[n - k]
            rhs = float(m + k * (k + 1) // 2)
            eps = 1e-7 * (rhs if rhs > 1.0 else 1.0)
            margin = rhs - s
            checks += 1
            if margin < -eps:
                if nfail < cap:
                    fail_bits[nfail] = gbits
                    fail_k[nfail] = k
                    fail_sk[nfail] = s
                nfail += 1
            elif margin <= eps:
                near += 1
    return checks, near, nfail


def exhaustive_sweep(n: int, workers: int = 1) -> SweepSummary:
    """Check every labeled graph on n vertices for every k = 1..n."""
    if not 1 <= n <= EXHAUSTIVE_CAP:
        raise ValueError(
            f"exhaustive cap: sweeps support 1 <= n <= {EXHAUSTIVE_CAP}, got n={n}"
        )
    if workers < 1:
        raise ValueError(f"need workers >= 1, got {workers}")
    t0 = time.perf_counter()
    total = 1 << n * (n - 1) // 2
    pairs = vertex_pairs(n)
    pair_i = np.array([p[0] for p in pairs], dtype=np.int64)
    pair_j = np.array([p[1] for p in pairs], dtype=np.int64)

    def run_chunk(span):
        start, stop = span
        fail_bits = np.empty(_FAIL_BUFFER, dtype=np.int64)
        fail_k = np.empty(_FAIL_BUFFER, dtype=np.int64)
        fail_sk = np.empty(_FAIL_BUFFER, dtype=np.float64)
        checks, near, nfail = _sweep_range(
            n, start, stop, pair_i, pair_j, fail_bits, fail_k, fail_sk
        )
        kept = min(nfail, _FAIL_BUFFER)
        return checks, near, nfail, fail_bits[:kept], fail_k[:kept], fail_sk[:kept]

    spans = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    if workers == 1:
        results = [run_chunk(span) for span in spans]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_chunk, spans))

    checks = 0
    near = 0
    failures = []
    for chunk_checks, chunk_near, _, fbits, fk, fsk in results:
        checks += chunk_checks
        near += chunk_near
        for gbits, k, sk in zip(fbits, fk, fsk):
            g = Graph(n, int(gbits))
            rhs = bounds.brouwer_rhs(g.m, int(k))
            failures.append(VerificationRecord(
                graph_id=_graph_id(g),
                n=n,
                m=g.m,
                k=int(k),
                s_k=float(sk),
                rhs=rhs,
                margin=rhs - float(sk),
                status="FAIL",
            ))
    return SweepSummary(
        n=n,
        graphs_checked=total,
        checks_performed=checks,
        failures=tuple(failures),
        near_ties=near,
        wall_time=time.perf_counter() - t0,
    )
