"""Inequality suites over generated instance families.

Every suite evaluates exact norms on each instance, asserts the inequalities
whose constants are explicit, and records observed ratios.  Equivalences whose
constants are not explicit are reported as ratio ranges only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Sequence

import numpy as np

from . import catalog
from .core import (
    BudgetExceeded,
    CoeffTensor,
    SimplexCoeffs,
    WeightedHypergraph,
    build_complete,
    format_hypergraph,
    upper_triangle_coeffs,
)
from .discrepancy import (
    balance,
    disc_exact,
    disc_monte_carlo,
    expected_disc_exact,
    trial_coloring,
)
from .norms import (
    cut_norm,
    decouple,
    linf_chaos,
    linf_multiple,
    lp_rademacher_exact,
    mixed_norm_profile,
    opnorm_inf_to_1,
)
from .parallel import check_budget, pmap

RTOL = 1e-9
STABILITY_CAP = 64.0
MAX_EXAMPLES = 3
SEED_MASK = (1 << 64) - 1


def leq(a: float, b: float) -> bool:
    return a <= b + RTOL * max(abs(a), abs(b))


def close(a: float, b: float) -> bool:
    return abs(a - b) <= RTOL * max(abs(a), abs(b))


def _ratio(num: float, den: float, degenerate: float | None = None) -> float | None:
    """num / den; 0/0 gives ``degenerate`` (None drops the instance from the extremes)."""
    if den == 0:
        return degenerate if num == 0 else math.inf
    return num / den


def _keep(*values):
    return [v for v in values if v is not None]


# --------------------------------------------------------------------------
# constants


@dataclass(frozen=True)
class ConstantsTable:
    """The explicit constants the suites assert.

    The ``*_scale`` fields multiply formula-valued constants; they are 1 except
    in the harness meta-tests, which perturb one constant at a time.
    """

    alon_naor: float = 4.0
    szarek: float = 1.0 / math.sqrt(2.0)
    chaos_lower_2: float = 1.0 / (16.0 * math.sqrt(2.0))
    # 2^2 * 3: the descending product stops at its last factor 3; nothing asserts it
    c2_1: float = 12.0
    sandwich_scale: float = 1.0
    khintchine_scale: float = 1.0
    decoupling_scale: float = 1.0
    ruc_scale: float = 1.0

    def decoupling(self, d: int) -> float:
        return self.decoupling_scale * 2.0 ** (2 * d - 2) * math.factorial(d - 1)

    def multi_sandwich(self, d: int) -> float:
        return self.sandwich_scale * 2.0**d

    def khintchine(self, p: float) -> float:
        return self.khintchine_scale * math.sqrt(p)

    def ruc_upper_coeff(self, k: int, d: int) -> float:
        return self.ruc_scale * 2.0 ** (d - k)

    def decoupling_table(self) -> dict[int, float]:
        return {d: self.decoupling(d) for d in range(2, 6)}

    _FIELDS = {
        "alon_naor": "alon_naor",
        "szarek": "szarek",
        "chaos_lower_2": "chaos_lower_2",
        "multi_sandwich": "sandwich_scale",
        "khintchine": "khintchine_scale",
        "decoupling": "decoupling_scale",
        "ruc_upper": "ruc_scale",
    }

    def perturbed(self, name: str, factor: float) -> "ConstantsTable":
        attr = self._FIELDS[name]
        return replace(self, **{attr: getattr(self, attr) * factor})


REFERENCE_CONSTANTS = ConstantsTable()


# --------------------------------------------------------------------------
# instance families

RANDOM_KINDS = ("random-gaussian", "random-sign", "random-sparse")
CATALOG_KIND = "extremal-catalog"
_KIND_CODE = {k: i for i, k in enumerate(RANDOM_KINDS + (CATALOG_KIND,))}
SPARSE_DENSITY = 0.1


class Instance(NamedTuple):
    obj: object
    attains: tuple[str, ...] = ()


@dataclass(frozen=True)
class InstanceFamily:
    """``count`` instances for every shape in ``sizes``.

    A shape is the dense extent list: (n1, ..., nd) for tensors, (k,) for
    coefficient vectors, (n,)*d for chaos coefficients and for complete
    d-uniform hypergraphs on n vertices.  The catalog kind ignores sizes.
    """

    kind: str
    sizes: tuple[tuple[int, ...], ...] = ()
    count: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_CODE:
            raise ValueError(f"unknown instance kind {self.kind!r}")
        object.__setattr__(self, "sizes", tuple(tuple(int(k) for k in s) for s in self.sizes))

    def _draws(self):
        for si, shape in enumerate(self.sizes):
            for i in range(self.count):
                rng = np.random.default_rng([self.seed & SEED_MASK, _KIND_CODE[self.kind], si, i])
                yield shape, rng

    def _values(self, rng, shape) -> np.ndarray:
        if self.kind == "random-gaussian":
            return rng.standard_normal(shape)
        if self.kind == "random-sign":
            return rng.choice([-1.0, 1.0], size=shape)
        vals = rng.standard_normal(shape)
        return np.where(rng.random(shape) < SPARSE_DENSITY, vals, 0.0)

    def tensors(self) -> list[Instance]:
        if self.kind == CATALOG_KIND:
            return [Instance(e.obj, e.attains) for e in catalog.entries(CoeffTensor)]
        return [Instance(CoeffTensor(self._values(rng, shape))) for shape, rng in self._draws()]

    def chaos(self) -> list[Instance]:
        if self.kind == CATALOG_KIND:
            return [Instance(e.obj, e.attains) for e in catalog.entries(SimplexCoeffs)]
        out = []
        for shape, rng in self._draws():
            d, n = len(shape), shape[0]
            h = build_complete(n, d)
            vals = self._values(rng, (h.m,))
            out.append(Instance(SimplexCoeffs(d, n, {
                tuple(v + 1 for v in verts): float(x) for (verts, _), x in zip(h.edges, vals)
            })))
        return out

    def graphs(self) -> list[Instance]:
        if self.kind == CATALOG_KIND:
            return [Instance(e.obj, e.attains) for e in catalog.entries(WeightedHypergraph)]
        out = []
        for shape, rng in self._draws():
            h = build_complete(shape[0], len(shape))
            out.append(Instance(h.with_weights(self._values(rng, (h.m,)))))
        return out


def _collect(families, getter: str) -> list[Instance]:
    if isinstance(families, InstanceFamily):
        families = [families]
    out = []
    for fam in families:
        out.extend(getattr(fam, getter)())
    return out


def describe(obj) -> str:
    if isinstance(obj, CoeffTensor):
        return json.dumps({"dims": list(obj.dims), "values": [float(x) for x in obj.values.ravel()]})
    if isinstance(obj, SimplexCoeffs):
        return json.dumps({"d": obj.d, "n": obj.n, "values": [[*k, v] for k, v in obj.values.items()]})
    if isinstance(obj, WeightedHypergraph):
        return format_hypergraph(obj)
    return repr(obj)


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one suite.  Ratios are suite-specific, see each check_*."""

    name: str
    instances: int
    violations: int
    min_ratio: float | None
    max_ratio: float | None
    mode: str = "hard"
    examples_of_violation: tuple[str, ...] = ()
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "violations": self.violations,
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "pass": self.passed,
            "mode": self.mode,
            "examples_of_violation": list(self.examples_of_violation),
            "details": self.details,
        }


@dataclass
class Outcome:
    ok: bool
    ratios: list[float] = field(default_factory=list)
    # name -> values that are reported as a range but never asserted
    notes: dict[str, list[float]] = field(default_factory=dict)


def _range(values):
    vals = [v for v in values if math.isfinite(v)]
    return [min(vals), max(vals)] if vals else None


def _assemble(name, instances, outcomes, mode="hard", extra_violations=(), details=None) -> CheckReport:
    ratios, notes, bad = [], {}, []
    for inst, out in zip(instances, outcomes):
        ratios.extend(out.ratios)
        for k, v in out.notes.items():
            notes.setdefault(k, []).extend(v)
        if not out.ok:
            bad.append(describe(inst.obj))
    bad.extend(extra_violations)
    rng = _range(ratios)
    det = {k: _range(v) for k, v in sorted(notes.items())}
    det.update(details or {})
    return CheckReport(
        name=name,
        instances=len(instances),
        violations=len(bad),
        min_ratio=rng[0] if rng else None,
        max_ratio=rng[1] if rng else None,
        mode=mode,
        examples_of_violation=tuple(bad[:MAX_EXAMPLES]),
        details=det,
    )


def _run(instances, fn, workers):
    return pmap(fn, instances, workers)


# --------------------------------------------------------------------------
# suites


def check_sandwich(family, constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
                   name="sandwich") -> CheckReport:
    """cut <= linf <= factor * cut, factor 4 for matrices (with linf equal to the
    l_inf -> l_1 operator norm) and 2^d otherwise.  Ratio: linf / cut."""
    insts = [i for i in _collect(family, "tensors") if i.obj.d >= 2]

    def one(inst):
        a = inst.obj
        cut = cut_norm(a, budget=budget).value
        lin = linf_multiple(a, budget=budget).value
        if a.d == 2:
            op = opnorm_inf_to_1(a, budget=budget).value
            factor = constants.alon_naor
            ok = leq(cut, op) and leq(op, factor * cut) and close(op, lin)
        else:
            factor = constants.multi_sandwich(a.d)
            ok = leq(cut, lin) and leq(lin, factor * cut)
        if "alon_naor" in inst.attains and a.d == 2:
            ok = ok and close(lin, constants.alon_naor * cut)
        if "multi_sandwich" in inst.attains:
            ok = ok and close(lin, constants.multi_sandwich(a.d) * cut)
        return Outcome(ok, [_ratio(lin, cut, degenerate=1.0)])

    return _assemble(name, insts, _run(insts, one, workers))


def _ruc_exact(a: CoeffTensor, budget=None) -> tuple[float, float]:
    """Exact (mean, min) over all cell sign patterns of linf_multiple(theta * a)."""
    cells = a.values.size
    check_budget((1 << cells) << sum(a.dims[:-1]), budget)
    vals = []
    for mask in range(1 << cells):
        theta = np.where((mask >> np.arange(cells)) & 1, 1.0, -1.0).reshape(a.dims)
        vals.append(linf_multiple(CoeffTensor(a.values * theta)).value)
    return math.fsum(vals) / len(vals), min(vals)


def check_lower_bounds(family, constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
                       name="lower-bounds") -> CheckReport:
    """Lower bounds by mixed norms.  Ratio: quantity / bound (>= 1 passes).

    order 1: L1 >= szarek * ||a||_2; order 2: linf >= szarek * max(M1, M2) and,
    for square matrices, the upper-triangle chaos linf >= chaos_lower_2 * max
    of its triangular mixed norms; order >= 3: linf / max M_k reported only.
    """
    insts = _collect(family, "tensors")

    def one(inst):
        a = inst.obj
        ok, ratios, notes = True, [], {}
        if a.d == 1:
            l1 = lp_rademacher_exact(a.values, 1)
            bound = constants.szarek * float(np.linalg.norm(a.values))
            ok = leq(bound, l1)
            ratios += _keep(_ratio(l1, bound))
            if "szarek" in inst.attains:
                ok = ok and close(l1, bound)
            return Outcome(ok, ratios)
        lin = linf_multiple(a, budget=budget).value
        mmax = mixed_norm_profile(a).max()
        if a.d >= 3:
            return Outcome(True, [], {"order_ge3_linf_over_mixed": _keep(_ratio(lin, mmax))})
        bound = constants.szarek * mmax
        ok = leq(bound, lin)
        ratios += _keep(_ratio(lin, bound))
        if a.dims[0] == a.dims[1] and a.dims[0] >= 2:
            s = upper_triangle_coeffs(a)
            ch = linf_chaos(s, budget=budget).value
            cb = constants.chaos_lower_2 * mixed_norm_profile(s).max()
            ok = ok and leq(cb, ch)
            ratios += _keep(_ratio(ch, cb))
            notes["chaos_linf_over_bound"] = _keep(_ratio(ch, cb))
        if "szarek_min_theta" in inst.attains:
            _, low = _ruc_exact(a, budget)
            ok = ok and leq(bound, low) and close(low, bound)
        return Outcome(ok, ratios, notes)

    return _assemble(name, insts, _run(insts, one, workers))


def check_decoupling(family, constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
                     name="decoupling") -> CheckReport:
    """chaos <= linf_multiple(decouple) <= C_d(2) * chaos.  Ratio: decoupled / chaos."""
    insts = _collect(family, "chaos")

    def one(inst):
        s = inst.obj
        ch = linf_chaos(s, budget=budget).value
        dec = linf_multiple(decouple(s), budget=budget).value
        ok = leq(ch, dec) and leq(dec, constants.decoupling(s.d) * ch)
        return Outcome(ok, _keep(_ratio(dec, ch)))

    return _assemble(name, insts, _run(insts, one, workers))


def ruc_bound(a: CoeffTensor, constants: ConstantsTable = REFERENCE_CONSTANTS) -> float:
    prof = mixed_norm_profile(a)
    return sum(constants.ruc_upper_coeff(k, a.d) * mk for k, mk in enumerate(prof.m, start=1))


def check_ruc_upper(family, constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
                    exact: bool = True, trials: int = 2000, seed: int = 0,
                    name="ruc-upper") -> CheckReport:
    """E_theta linf(theta * a) <= sum_k 2^(d-k) M_k.  Ratio: expectation / bound.

    Exact mode enumerates every cell sign pattern and, for matrices, also
    asserts min_theta linf >= szarek * max(M1, M2).  Statistical mode samples
    ``trials`` patterns per instance and asserts mean + 3 stderr <= bound.
    """
    insts = _collect(family, "tensors")
    indexed = list(enumerate(insts))

    def one(item):
        idx, inst = item
        a = inst.obj
        bound = ruc_bound(a, constants)
        if exact:
            mean, low = _ruc_exact(a, budget)
            ok = leq(mean, bound)
            if a.d == 2:
                mb = constants.szarek * mixed_norm_profile(a).max()
                ok = ok and leq(mb, low)
                if "szarek_min_theta" in inst.attains:
                    ok = ok and close(low, mb)
            return Outcome(ok, _keep(_ratio(mean, bound)), {"mean_over_min": _keep(_ratio(mean, low))})
        key = (seed * 1_000_003 + idx) & SEED_MASK
        vals = []
        for t in range(trials):
            theta = trial_coloring(a.values.size, key, t).reshape(a.dims)
            vals.append(linf_multiple(CoeffTensor(a.values * theta), budget=budget).value)
        mean = math.fsum(vals) / trials
        err = float(np.std(vals, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
        return Outcome(leq(mean + 3 * err, bound), _keep(_ratio(mean, bound)))

    outcomes = _run(indexed, one, workers)
    return _assemble(name, insts, outcomes, mode="hard" if exact else "statistical")


def check_khintchine(family, p_list: Sequence[float] = (1, 2, 3, 4),
                     constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
                     name="khintchine") -> CheckReport:
    """szarek * ||a||_2 <= L1 and Lp <= sqrt(p) ||a||_2.  Ratio: Lp / ||a||_2."""
    insts = [i for i in _collect(family, "tensors") if i.obj.d == 1]

    def one(inst):
        a = inst.obj.values
        l2 = float(np.linalg.norm(a))
        l1 = lp_rademacher_exact(a, 1)
        ok = leq(constants.szarek * l2, l1)
        ratios = _keep(_ratio(l1, l2))
        for p in p_list:
            lp = l1 if p == 1 else lp_rademacher_exact(a, p)
            ok = ok and leq(lp, constants.khintchine(p) * l2)
            ratios += _keep(_ratio(lp, l2))
        if "szarek" in inst.attains:
            ok = ok and close(l1, constants.szarek * l2)
        if "khintchine" in inst.attains:
            ok = ok and close(l1, constants.khintchine(1) * l2)
        return Outcome(ok, ratios)

    return _assemble(name, insts, _run(insts, one, workers))


def equivalence_report(family, budget=None, workers=1, cap: float = STABILITY_CAP,
                       name="equivalence") -> CheckReport:
    """disc / B and E_theta disc / B with B the balance functional.

    Asserts only disc <= E_theta disc per instance, plus a regression cap on
    max/min of each ratio across the family.  Ratio: disc / B; the E_theta
    ratio range is under details.
    """
    insts = _collect(family, "graphs")

    def one(inst):
        h = inst.obj
        disc = disc_exact(h, budget=budget).value
        mean = expected_disc_exact(h, budget=budget).value
        b = balance(h)
        ok = leq(disc, mean)
        notes = {"expected_over_disc": _keep(_ratio(mean, disc))}
        if b == 0:
            return Outcome(ok, [], notes)
        notes["expected_over_balance"] = [mean / b]
        return Outcome(ok, [disc / b], notes)

    outcomes = _run(insts, one, workers)
    extra = []
    r1 = [r for o in outcomes for r in o.ratios]
    r2 = [r for o in outcomes for r in o.notes.get("expected_over_balance", [])]
    for label, rs in (("disc/B", r1), ("E/B", r2)):
        pos = [r for r in rs if r > 0]
        if pos and max(pos) / min(pos) > cap:
            extra.append(f"{label} spread {max(pos) / min(pos):.6g} exceeds cap {cap:g}")
    return _assemble(name, insts, outcomes, extra_violations=extra, details={"stability_cap": cap})


# --------------------------------------------------------------------------
# scaling scan


@dataclass(frozen=True)
class ScanRow:
    n: int
    disc_exact: float | None
    e_exact: float | None
    e_mc: float
    e_stderr: float | None
    best: float
    balance: float
    n_pow: float


@dataclass(frozen=True)
class ScanTable:
    d: int
    rows: tuple[ScanRow, ...]

    HEADER = ("n", "disc_exact", "e_mc", "best", "balance", "n_pow")

    @property
    def monotone(self) -> bool:
        discs = [r.disc_exact for r in self.rows if r.disc_exact is not None]
        return all(b >= a for a, b in zip(discs, discs[1:]))


def scaling_scan(d: int, n_range: tuple[int, int], trials: int = 10_000, seed: int = 0,
                 budget=None, workers=1) -> ScanTable:
    """Unit-weight complete d-uniform hypergraphs for n in the closed range.

    Exact quantities are filled where the budget allows, else left empty.
    """
    lo, hi = n_range
    if d < 2 or lo < d or hi < lo:
        raise ValueError(f"invalid scan range d={d}, n={lo}..{hi}")
    rows = []
    for n in range(lo, hi + 1):
        h = build_complete(n, d)
        try:
            disc = disc_exact(h, budget=budget, workers=workers).value
        except BudgetExceeded:
            disc = None
        try:
            mean = expected_disc_exact(h, budget=budget, workers=workers).value
        except BudgetExceeded:
            mean = None
        mc = disc_monte_carlo(h, trials, seed, budget=budget, workers=workers)
        rows.append(ScanRow(n, disc, mean, mc.value, mc.stderr, mc.best, balance(h), n ** ((d + 1) / 2)))
    return ScanTable(d, tuple(rows))


def check_scaling(d: int = 2, n_range=(3, 7), trials: int = 10_000, seed: int = 0, budget=None,
                  workers=1, name="scaling") -> CheckReport:
    """disc_exact nondecreasing in n and disc <= E_theta disc <= best-found bound chain.
    Ratio: disc / n^((d+1)/2)."""
    table = scaling_scan(d, n_range, trials, seed, budget, workers)
    bad, ratios = [], []
    prev = None
    for r in table.rows:
        if r.disc_exact is None:
            continue
        ratios.append(r.disc_exact / r.n_pow)
        if prev is not None and r.disc_exact < prev:
            bad.append(f"disc_exact drops at n={r.n}")
        if r.e_exact is not None and not leq(r.disc_exact, r.e_exact):
            bad.append(f"disc > E_theta at n={r.n}")
        if not leq(r.disc_exact, r.best):
            bad.append(f"disc > best sampled at n={r.n}")
        prev = r.disc_exact
    rng = _range(ratios)
    return CheckReport(name, len(table.rows), len(bad), rng[0] if rng else None, rng[1] if rng else None,
                       examples_of_violation=tuple(bad[:MAX_EXAMPLES]),
                       details={"e_mc_over_balance": _range([r.e_mc / r.balance for r in table.rows])})


# --------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    check: Callable
    getter: str
    sizes: tuple[tuple[int, ...], ...]
    count: int
    options: dict = field(default_factory=dict)


def _squares(lo, hi, d=2):
    return tuple((n,) * d for n in range(lo, hi + 1))


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("sandwich", "cut <= ||A: l_inf -> l_1|| <= 4 cut (Alon-Naor), linf = operator norm",
              check_sandwich, "tensors", _squares(2, 6), 100),
        Suite("sandwich-3d", "cut <= linf <= 2^d cut for order-3 arrays",
              check_sandwich, "tensors", ((2, 2, 2), (3, 3, 3), (2, 3, 3), (3, 2, 3)), 50),
        Suite("lower-bounds", "linf >= max(M1, M2)/sqrt 2 (Szarek) and order-2 chaos >= max M / (16 sqrt 2)",
              check_lower_bounds, "tensors", _squares(2, 6), 100),
        Suite("lower-bounds-chaos", "order-2 chaos linf >= max triangular M / (16 sqrt 2), n <= 12",
              check_lower_bounds, "tensors", _squares(3, 12), 50),
        Suite("decoupling", "chaos <= decoupled <= C_d(2) chaos, C_d(2) = 2^(2d-2) (d-1)!",
              check_decoupling, "chaos", _squares(2, 6) + _squares(3, 4, 3), 50),
        Suite("ruc-upper", "E_theta linf(theta a) <= sum_k 2^(d-k) M_k, exact expectation",
              check_ruc_upper, "tensors", ((1, 1), (2, 2), (3, 3), (2, 2, 2)), 50),
        Suite("ruc-upper-mc", "E_theta linf(theta a) <= sum_k 2^(d-k) M_k, sampled expectation",
              check_ruc_upper, "tensors", ((4, 4), (5, 5)), 5, {"exact": False, "trials": 2000}),
        Suite("khintchine", "||a||_2/sqrt 2 <= L1 and Lp <= sqrt(p) ||a||_2",
              check_khintchine, "tensors", ((5,), (8,), (10,), (12,), (14,)), 40),
        Suite("equivalence", "disc <= E_theta disc; disc/B and E/B ranges (constants not explicit)",
              equivalence_report, "graphs", ((4, 4), (5, 5)), 25),
    ]
}
SCALING_SUITE = "scaling"
SUITE_NAMES = tuple(SUITES) + (SCALING_SUITE,)


def families_for(suite: Suite, sizes=None, count=None, seed=0, kinds=RANDOM_KINDS,
                 include_catalog=True) -> list[InstanceFamily]:
    sizes = suite.sizes if sizes is None else sizes
    count = suite.count if count is None else count
    fams = [InstanceFamily(k, sizes, count, seed) for k in kinds]
    if include_catalog:
        fams.append(InstanceFamily(CATALOG_KIND, (), 0, seed))
    return fams


def run_suite(name: str, sizes=None, count=None, seed: int = 0, kinds=RANDOM_KINDS,
              constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
              include_catalog=True, trials: int = 10_000) -> CheckReport:
    if name == SCALING_SUITE:
        return check_scaling(2, (3, 7), trials=trials, seed=seed, budget=budget, workers=workers)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    suite = SUITES[name]
    fams = families_for(suite, sizes, count, seed, kinds, include_catalog)
    kwargs = dict(budget=budget, workers=workers, name=name)
    if suite.check is not equivalence_report:
        kwargs["constants"] = constants
    if suite.check is check_ruc_upper:
        kwargs["seed"] = seed
    kwargs.update(suite.options)
    return suite.check(fams, **kwargs)


def run_all(seed: int = 0, constants: ConstantsTable = REFERENCE_CONSTANTS, budget=None, workers=1,
            trials: int = 10_000) -> list[CheckReport]:
    return [run_suite(n, seed=seed, constants=constants, budget=budget, workers=workers, trials=trials)
            for n in SUITE_NAMES]
