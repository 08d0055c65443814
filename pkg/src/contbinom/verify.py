"""Named invariant sweeps over the library.

A suite expands into a flat list of ``(check_name, params)`` tasks.  Each task
is evaluated by a module-level function from :data:`CHECKS`, so the list can be
farmed out to a process pool; results always come back in task order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import binomial as bn
from . import continuant as ct
from . import identity as idn

Params = tuple[tuple[str, int], ...]
Task = tuple[str, Params]

SUITES = ("identity", "extraction", "lemma23", "uv", "recurrences", "continuants", "chebyshev", "pascal")

# Per-suite default bounds; None means the suite ignores that flag.
DEFAULT_BOUNDS: dict[str, dict[str, int]] = {
    "identity": {"n_max": 60, "l_max": 60},
    "extraction": {"n_max": 30},
    "lemma23": {"l_max": 40},
    "uv": {"k_max": 25, "n_max": 25},
    "recurrences": {"k_max": 15, "n_max": 15},
    "continuants": {"n_max": 64},
    "chebyshev": {"n_max": 64},
    "pascal": {"n_max": 60, "k_max": 120},
}


# --- individual checks -------------------------------------------------------


def _theorem(n: int, l: int) -> bool:
    return idn.identity_report(n, l).equal


def _v_1n(n: int) -> bool:
    return idn.v_kn(1, n) == (-1) ** n


def _v_k0(k: int) -> bool:
    return idn.v_kn(k, 0) == k


def _v_negative(k: int, h: int) -> bool:
    return idn.v_kn(k, h) == 0


def _s_split(n: int, k: int) -> bool:
    return idn.s_ab(n, k, 0, n + k) == idn.s_ab(n, k, 0, n) + idn.s_ab(n, k, n + 1, n + k)


def _s_head(n: int, k: int) -> bool:
    return idn.s_ab(n, k, 0, n) == (-1) ** (n + 1) * bn.binom(n + k, n + 1)


def _s_tail(n: int, k: int) -> bool:
    return idn.s_ab(n, k, n + 1, n + k) == (-1) ** n * bn.binom(n + k, n + 1)


def _strategies_agree(n: int) -> bool:
    ref = ct.k_poly(n, ct.ContinuantStrategy.RECURRENCE)
    return all(ct.k_poly(n, s) == ref for s in ct.ContinuantStrategy)


def _power_strategies_agree(n: int) -> bool:
    return ct.m_power(n, "repeated_multiply") == ct.m_power(n, "square_and_multiply")


def _det_identity(n: int) -> bool:
    ks = ct.k_sequence(n)  # ks[i + 1] is K_i
    return (ks[n] * ks[n] - ks[n + 1] * ks[n - 1]).coeffs == (1,)


def _prop21_layout(n: int) -> bool:
    ks = ct.k_sequence(n)
    m = ct.m_power(n)
    return m.entries() == (ks[n + 1], -ks[n], ks[n], -ks[n - 1]) and m.det().coeffs == (1,)


def _inverse_form(n: int) -> bool:
    return ct.m_power(n) @ ct.inverse_form(n) == ct.identity_matrix()


def _multiplicative(a: int, b: int) -> bool:
    return ct.m_power(a + b) == ct.m_power(a) @ ct.m_power(b)


def _parity(n: int) -> bool:
    p = ct.k_poly(n)
    return p.coeff(n) == 1 and all(c == 0 for d, c in enumerate(p.coeffs) if (n - d) % 2)


def _general_specializes(n: int, x: int) -> bool:
    return ct.continuant_general([x] * n) == ct.k_poly(n)(x)


def _m_general_specializes(n: int, x: int) -> bool:
    return ct.m_general([x] * n) == ct.m_power(n).map(lambda p: p(x))


def _chebyshev_bridge(n: int) -> bool:
    return ct.chebyshev_u(n) == ct.k_at_double(n)


def _oracle(n: int, k: int) -> bool:
    return bn.binom(n, k) == bn.binom_oracle(n, k)


def _sign_law(n: int, k: int) -> bool:
    value = bn.binom(n, k)
    return value != 0 and (value > 0) == (k % 2 == 0)


CHECKS: dict[str, Callable[..., bool]] = {
    "theorem": _theorem,
    "coeff_extraction": idn.coeff_extraction_check,
    "lemma23": idn.lemma23_check,
    "u_eq_v": lambda k, n: idn.u_kn(k, n) == idn.v_kn(k, n),
    "v_1n": _v_1n,
    "v_k0": _v_k0,
    "v_negative_zero": _v_negative,
    "s_split": _s_split,
    "s_head": _s_head,
    "s_tail": _s_tail,
    "lemma25": lambda k, n: idn.uv_recurrence_check("lemma25", k, n),
    "lemma26": lambda k: idn.uv_recurrence_check("lemma26", k, 0),
    "lemma27": lambda k, n: idn.uv_recurrence_check("lemma27", k, n),
    "u_recurrence": idn.u_recurrence_check,
    "strategies_agree": _strategies_agree,
    "power_strategies_agree": _power_strategies_agree,
    "det_identity": _det_identity,
    "prop21_layout": _prop21_layout,
    "inverse_form": _inverse_form,
    "multiplicative": _multiplicative,
    "parity": _parity,
    "general_specializes": _general_specializes,
    "m_general_specializes": _m_general_specializes,
    "chebyshev_bridge": _chebyshev_bridge,
    "binom_oracle": _oracle,
    "sign_law": _sign_law,
    "negative_pascal": bn.negative_pascal_holds,
    "pascal": bn.pascal_holds,
}


# --- suites ------------------------------------------------------------------


def _t(name: str, **params: int) -> Task:
    return (name, tuple(params.items()))


def build_tasks(suite: str, **bounds: int | None) -> list[Task]:
    """Expand ``suite`` into tasks; missing bounds fall back to the defaults."""
    if suite == "all":
        return [t for s in SUITES for t in build_tasks(s, **bounds)]
    if suite not in DEFAULT_BOUNDS:
        raise ValueError(f"unknown suite {suite!r}")
    b = dict(DEFAULT_BOUNDS[suite])
    for key in b:
        if bounds.get(key) is not None:
            b[key] = int(bounds[key])  # type: ignore[arg-type]

    tasks: list[Task] = []
    if suite == "identity":
        tasks = [_t("theorem", n=n, l=l) for n in range(b["n_max"] + 1) for l in range(b["l_max"] + 1)]
    elif suite == "extraction":
        tasks = [_t("coeff_extraction", n=n, l=l) for n in range(1, b["n_max"] + 1) for l in range(1, n + 1)]
    elif suite == "lemma23":
        tasks = [_t("lemma23", n=n, l=l) for l in range(1, b["l_max"] + 1) for n in range(l)]
    elif suite == "uv":
        K, N = b["k_max"], b["n_max"]
        tasks += [_t("u_eq_v", k=k, n=n) for k in range(1, K + 1) for n in range(N + 1)]
        tasks += [_t("v_1n", n=n) for n in range(N + 1)]
        tasks += [_t("v_k0", k=k) for k in range(1, K + 1)]
        tasks += [_t("v_negative_zero", k=k, h=h) for k in range(1, K + 1) for h in range(-N, 0)]
        for n in range(N + 1):
            for k in range(1, K + 1):
                tasks += [_t(c, n=n, k=k) for c in ("s_split", "s_head", "s_tail")]
    elif suite == "recurrences":
        K, N = b["k_max"], b["n_max"]
        tasks += [_t("lemma25", k=k, n=n) for k in range(1, K + 1) for n in range(N + 1)]
        tasks += [_t("lemma26", k=k) for k in range(1, K + 1)]
        tasks += [_t("lemma27", k=k, n=n) for k in range(1, K + 1) for n in range(-N, 0)]
        tasks += [_t("u_recurrence", k=k, n=n) for k in range(1, K + 1) for n in range(-N, N + 1)]
    elif suite == "continuants":
        N = b["n_max"]
        for n in range(1, N + 1):
            tasks += [
                _t(c, n=n)
                for c in ("strategies_agree", "power_strategies_agree", "det_identity",
                          "prop21_layout", "inverse_form", "parity")
            ]
        half = min(20, N // 2)
        tasks += [_t("multiplicative", a=a, b=c) for a in range(1, half + 1) for c in range(1, half + 1)]
        small = min(12, N)
        for n in range(1, small + 1):
            for x in range(-3, 4):
                tasks += [_t("general_specializes", n=n, x=x), _t("m_general_specializes", n=n, x=x)]
    elif suite == "chebyshev":
        tasks = [_t("chebyshev_bridge", n=n) for n in range(b["n_max"] + 1)]
    elif suite == "pascal":
        N, K = b["n_max"], b["k_max"]
        tasks += [_t("binom_oracle", n=n, k=k) for n in range(-N, N + 1) for k in range(K + 1)]
        tasks += [_t("sign_law", n=n, k=k) for n in range(-N, 0) for k in range(K + 1)]
        tasks += [_t("negative_pascal", n=n, i=i) for n in range(-N, 0) for i in range(1, K + 1)]
        tasks += [_t("pascal", n=n, k=k) for n in range(0, N + 1) for k in range(0, n + 1)]
    return tasks


# --- running -----------------------------------------------------------------


def run_task(task: Task) -> bool:
    name, params = task
    try:
        return bool(CHECKS[name](**dict(params)))
    except (ArithmeticError, AssertionError, ValueError):
        return False


def _run_chunk(tasks: list[Task]) -> list[bool]:
    return [run_task(t) for t in tasks]


@dataclass
class VerifySummary:
    suite: str
    checked: int = 0
    failures: list[Task] = field(default_factory=list)
    per_check: dict[str, list[int]] = field(default_factory=dict)  # name -> [checked, failed]
    wall_time_ms: int = 0

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        """Everything except the timing, which callers report separately."""
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failed": self.failed,
            "checks": [
                {"check": name, "checked": c, "failed": f} for name, (c, f) in sorted(self.per_check.items())
            ],
            "failures": [{"check": name, "params": dict(params)} for name, params in self.failures],
        }


def _chunks(tasks: list[Task], count: int) -> Iterable[list[Task]]:
    # round-robin keeps the expensive tail of each sweep spread across workers
    return [tasks[i::count] for i in range(count)]


def run_suite(suite: str, jobs: int = 1, **bounds: int | None) -> VerifySummary:
    start = time.monotonic()
    tasks = build_tasks(suite, **bounds)
    if jobs <= 1 or len(tasks) < 2:
        results = _run_chunk(tasks)
    else:
        n_chunks = min(len(tasks), jobs * 4)
        chunks = _chunks(tasks, n_chunks)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk_results = list(pool.map(_run_chunk, chunks))
        results = [False] * len(tasks)
        for i, res in enumerate(chunk_results):
            results[i::n_chunks] = res
    summary = VerifySummary(suite)
    for task, passed in zip(tasks, results):
        counts = summary.per_check.setdefault(task[0], [0, 0])
        counts[0] += 1
        summary.checked += 1
        if not passed:
            counts[1] += 1
            summary.failures.append(task)
    summary.wall_time_ms = int((time.monotonic() - start) * 1000)
    return summary
