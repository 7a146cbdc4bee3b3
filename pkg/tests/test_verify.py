import json
import math

import numpy as np
import pytest

from radchaos.core import CoeffTensor, build_complete
from radchaos.verify import (
    CATALOG_KIND,
    REFERENCE_CONSTANTS,
    RANDOM_KINDS,
    SUITES,
    CheckReport,
    ConstantsTable,
    Instance,
    InstanceFamily,
    _ruc_exact,
    check_decoupling,
    check_khintchine,
    check_lower_bounds,
    check_ruc_upper,
    check_sandwich,
    equivalence_report,
    ruc_bound,
    run_suite,
    scaling_scan,
)


def test_constants_table():
    c = REFERENCE_CONSTANTS
    assert c.alon_naor == 4.0
    assert c.szarek == 1 / math.sqrt(2)
    assert c.chaos_lower_2 == 1 / (16 * math.sqrt(2))
    assert c.decoupling_table() == {2: 4.0, 3: 32.0, 4: 384.0, 5: 6144.0}
    assert [c.multi_sandwich(d) for d in (2, 3, 4)] == [4.0, 8.0, 16.0]
    assert c.khintchine(4) == 2.0
    assert [c.ruc_upper_coeff(k, 3) for k in (1, 2, 3)] == [4.0, 2.0, 1.0]
    assert c.c2_1 == 12.0


def test_perturbed_touches_one_constant():
    p = REFERENCE_CONSTANTS.perturbed("decoupling", 0.99)
    assert p.decoupling(3) == pytest.approx(32 * 0.99)
    assert p.alon_naor == 4.0 and p.multi_sandwich(3) == 8.0
    assert REFERENCE_CONSTANTS.decoupling(3) == 32.0
    with pytest.raises(KeyError):
        REFERENCE_CONSTANTS.perturbed("nope", 0.5)


def test_families_are_seeded():
    a = InstanceFamily("random-gaussian", ((3, 3),), 4, seed=1).tensors()
    b = InstanceFamily("random-gaussian", ((3, 3),), 4, seed=1).tensors()
    c = InstanceFamily("random-gaussian", ((3, 3),), 4, seed=2).tensors()
    assert [i.obj for i in a] == [i.obj for i in b]
    assert a[0].obj != c[0].obj
    signs = InstanceFamily("random-sign", ((4, 4),), 3).tensors()
    assert all(set(np.unique(i.obj.values)) <= {-1.0, 1.0} for i in signs)
    with pytest.raises(ValueError):
        InstanceFamily("random-uniform")


def test_report_invariants():
    r = CheckReport("x", 3, 0, 1.0, 2.0)
    d = r.to_dict()
    assert d["pass"] is True and r.passed
    assert json.loads(json.dumps(d)) == d
    assert not CheckReport("x", 3, 1, 1.0, 2.0).passed


class _Fixed(InstanceFamily):
    """A family holding given objects."""

    def __init__(self, *objs, attains=()):
        super().__init__("random-sign")
        object.__setattr__(self, "objs", objs)
        object.__setattr__(self, "att", attains)

    def tensors(self):
        return [Instance(o, self.att) for o in self.objs]


def test_sandwich_signed_matrix_ratio_four():
    r = check_sandwich(_Fixed(CoeffTensor([[1.0, -1.0], [-1.0, 1.0]]), attains=("alon_naor",)))
    assert r.passed and r.min_ratio == r.max_ratio == 4.0
    cat = check_sandwich(InstanceFamily(CATALOG_KIND))
    assert cat.passed and cat.max_ratio == 8.0


def test_sandwich_zero_matrix_ratio_one():
    r = check_sandwich(_Fixed(CoeffTensor(np.zeros((3, 3)))))
    assert r.passed and r.min_ratio == r.max_ratio == 1.0


def test_sandwich_random_signs_5x5():
    r = check_sandwich(InstanceFamily("random-sign", ((5, 5),), 500, seed=3))
    assert r.instances == 500 and r.violations == 0
    assert 1.0 - 1e-12 <= r.min_ratio <= r.max_ratio <= 4.0


def test_violation_is_reported():
    weak = ConstantsTable(alon_naor=1.0)
    r = check_sandwich(InstanceFamily("random-gaussian", ((4, 4),), 20), constants=weak)
    assert not r.passed
    assert 1 <= len(r.examples_of_violation) <= 3
    assert json.loads(r.examples_of_violation[0])["dims"] == [4, 4]


def test_lower_bounds_and_decoupling_pass():
    fams = [InstanceFamily(k, ((2, 2), (3, 3), (4, 4)), 10) for k in RANDOM_KINDS]
    fams.append(InstanceFamily(CATALOG_KIND))
    assert check_lower_bounds(fams).passed
    assert check_khintchine([InstanceFamily("random-gaussian", ((6,),), 10), InstanceFamily(CATALOG_KIND)]).passed
    dec = [InstanceFamily(k, ((4, 4), (4, 4, 4)), 5) for k in RANDOM_KINDS] + [InstanceFamily(CATALOG_KIND)]
    r = check_decoupling(dec)
    assert r.passed and r.max_ratio <= 4.0


def test_ruc_exact_and_bound():
    ones = CoeffTensor(np.ones((2, 2)))
    assert _ruc_exact(ones) == (3.0, 2.0)
    # M_1 = M_2 = 2 sqrt 2, bound = 2 M_1 + M_2
    assert ruc_bound(ones) == pytest.approx(6 * math.sqrt(2))
    cube = CoeffTensor(np.ones((2, 2, 2)))
    assert _ruc_exact(cube) == (5.25, 4.0)
    r = check_ruc_upper([InstanceFamily("random-gaussian", ((2, 2),), 5), InstanceFamily(CATALOG_KIND)])
    assert r.passed and r.mode == "hard"


def test_ruc_statistical_mode():
    r = check_ruc_upper(InstanceFamily("random-sign", ((3, 3),), 2), exact=False, trials=200)
    assert r.passed and r.mode == "statistical"


def test_equivalence_report():
    r = equivalence_report([InstanceFamily("random-gaussian", ((4, 4),), 5), InstanceFamily(CATALOG_KIND)])
    assert r.passed
    assert r.details["stability_cap"] == 64.0
    assert 0 < r.min_ratio <= r.max_ratio


def test_scaling_scan_table():
    t = scaling_scan(2, (3, 5), trials=500, seed=0)
    assert [r.n for r in t.rows] == [3, 4, 5]
    assert [r.disc_exact for r in t.rows] == [1.0, 1.0, 1.0]
    assert t.rows[0].e_exact == 1.5
    assert t.rows[2].balance == pytest.approx(5 * 2.0)
    assert t.rows[1].n_pow == pytest.approx(8.0)
    assert t.monotone
    with pytest.raises(ValueError):
        scaling_scan(2, (1, 3))


def test_scan_leaves_exact_empty_over_budget():
    t = scaling_scan(2, (3, 4), trials=50, budget=200)
    assert t.rows[0].disc_exact == 1.0
    assert t.rows[1].disc_exact is None


def test_suite_registry():
    assert set(SUITES) >= {"sandwich", "lower-bounds", "decoupling", "ruc-upper", "khintchine", "equivalence"}
    with pytest.raises(KeyError):
        run_suite("bogus")
    r = run_suite("sandwich", sizes=((3, 3),), count=5)
    assert r.name == "sandwich" and r.passed
