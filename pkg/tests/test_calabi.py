"""Operator-level checks for the Killing-Riemann-Bianchi machinery.

The full 20-case identity battery lives in the acceptance module; here a
small corpus exercises every operator, the symmetry of every output, the
linearization oracle and the restricted-support tables.
"""

import random
from fractions import Fraction

import pytest

from causalcoh.calabi import (CALABI_BACKGROUNDS, CalabiError, CalabiField,
                              background_chart, calabi_diff, calabi_homotopy, calabi_table,
                              calabi_wave, killing_operator, killing_yano_operator,
                              linearization_relation_holds, linearized_riemann,
                              polynomial_solution_dimension, random_calabi_field,
                              verify_calabi_identities, _fields_equal)
from causalcoh.causal import SupportClass
from causalcoh.charts import curvature, de_sitter, minkowski
from causalcoh.tensors import TensorField, box_tensor, metric_trace

SC = SupportClass.SPACELIKE_COMPACT
TC = SupportClass.TIMELIKE_COMPACT
UN = SupportClass.UNRESTRICTED
CP = SupportClass.COMPACT


def test_field_levels_and_ranks():
    m = minkowski(4)
    with pytest.raises(CalabiError):
        CalabiField(2, TensorField.zero(m, "lll"))
    with pytest.raises(CalabiError):
        CalabiField(5, TensorField.zero(m, "l" * 7))
    f = CalabiField(1, TensorField.metric(m))
    with pytest.raises(CalabiError):
        calabi_homotopy(calabi_homotopy(f))  # level 0 has no homotopy


def test_checked_constructor_rejects_wrong_symmetry():
    m = minkowski(4)
    assert CalabiField.checked(1, TensorField.metric(m)).level == 1
    lopsided = TensorField.from_function(m, "ll", lambda idx: m.rf(idx[0] - 2 * idx[1]))
    with pytest.raises(CalabiError):
        CalabiField.checked(1, lopsided)


def test_killing_operator_on_constant_covector_flat():
    m = minkowski(4)
    v = CalabiField(0, TensorField(m, "l", tuple(m.rf(c) for c in (3, 1, -2, 5))))
    assert killing_operator(v).is_zero()


def test_flat_wave_ops_are_plain_box():
    m = minkowski(4)
    rng = random.Random(0)
    for level in range(5):
        f = random_calabi_field(m, level, rng)
        assert _fields_equal(calabi_wave(f).field, box_tensor(f.field))


def test_homotopy_of_metric_vanishes():
    # divergence of g minus half the gradient of its (constant) trace
    for chart in (minkowski(4), de_sitter(4, 1)):
        g = CalabiField(1, TensorField.metric(chart))
        assert calabi_homotopy(g).is_zero()


def test_wave1_on_metric():
    # wave_1[g] = (2k/n) g: box g = 0, tr g = n
    ds = de_sitter(4, 1)
    g = CalabiField(1, TensorField.metric(ds))
    out = calabi_wave(g).field
    expected = TensorField.metric(ds).scale(Fraction(2 * 12, 4))
    assert _fields_equal(out, expected)


def test_homotopy2_of_background_riemann_is_ricci():
    ds = de_sitter(4, 1)
    riem = CalabiField(2, TensorField(ds, "llll", curvature(ds).riemann))
    out = calabi_homotopy(riem).field
    for a in range(4):
        for b in range(4):
            assert out.get(a, b) == ds.metric_component(a, b).scale(Fraction(12, 4))


def test_diff3_kills_background_riemann():
    # the background curvature satisfies the differential Bianchi identity
    ds = de_sitter(4, 1)
    riem = CalabiField(2, TensorField(ds, "llll", curvature(ds).riemann))
    assert calabi_diff(riem).is_zero()


def test_wave2_route_consistency_on_background_riemann():
    ds = de_sitter(4, 1)
    riem = CalabiField(2, TensorField(ds, "llll", curvature(ds).riemann))
    direct = calabi_wave(riem).field
    via_homotopy = (calabi_homotopy(calabi_diff(riem)).field
                    + calabi_diff(calabi_homotopy(riem)).field)
    assert _fields_equal(direct, via_homotopy)


def test_identity_battery_small_corpus():
    for background in CALABI_BACKGROUNDS:
        chart = background_chart(background)
        report = verify_calabi_identities(chart, seed=7, degree_bound=2, cases=1,
                                          check_symmetries=True)
        assert report.all_passed, report.failures()


def test_zero_fields_satisfy_all_identities():
    ds = de_sitter(4, 1)
    for level in range(5):
        rank = 1 if level == 0 else (level + 2 if level >= 2 else 2)
        zero = CalabiField(level, TensorField.zero(ds, "l" * rank))
        assert calabi_wave(zero).is_zero()
        if level < 4:
            assert calabi_diff(zero).is_zero()
        if level > 0:
            assert calabi_homotopy(zero).is_zero()


def test_corpus_fields_have_declared_symmetry():
    rng = random.Random(11)
    ds = de_sitter(4, 1)
    for level in range(5):
        f = random_calabi_field(ds, level, rng)
        assert f.check_symmetry()


def test_linearization_oracle_zero_and_metric():
    for chart in (minkowski(4), de_sitter(4, 1)):
        zero = CalabiField(1, TensorField.zero(chart, "ll"))
        assert linearized_riemann(chart, zero).is_zero()
        # scaling argument: perturbing g by g scales the metric, so the
        # first-order curvature response is the background curvature itself
        g = CalabiField(1, TensorField.metric(chart))
        dr = linearized_riemann(chart, g).field
        rb = TensorField(chart, "llll", curvature(chart).riemann)
        assert _fields_equal(dr, rb)


def test_linearization_relation_random_fields():
    rng = random.Random(3)
    for chart in (minkowski(4), de_sitter(4, 1)):
        h = random_calabi_field(chart, 1, rng)
        assert linearization_relation_holds(chart, h)


def test_killing_yano_operator_flat_constant():
    m = minkowski(4)
    w = [m.zero] * 16
    w[0 * 4 + 1] = m.rf(2)
    w[1 * 4 + 0] = m.rf(-2)
    assert killing_yano_operator(m, TensorField(m, "ll", w)).is_zero()


def test_solution_dimensions():
    m = minkowski(4)
    ds = de_sitter(4, 1)
    assert polynomial_solution_dimension("killing", m, 1).dim == 10
    assert polynomial_solution_dimension("killingYano", m, 1).dim == 10
    assert polynomial_solution_dimension("killing", ds, 2).dim == 10


def test_solution_dimension_monotone_and_stable():
    ds = de_sitter(4, 1)
    dims = [polynomial_solution_dimension("killing", ds, d).dim for d in (1, 2, 3)]
    assert dims[0] <= dims[1] <= dims[2]
    assert dims[1] == dims[2] == 10  # stabilizes at the sufficient degree
    below = polynomial_solution_dimension("killing", ds, 1)
    assert below.below_sufficient


def test_calabi_table_minkowski():
    t = calabi_table("minkowski4")
    assert t.row(UN) == (10, 0, 0, 0, 0)
    assert t.row(CP) == (0, 0, 0, 0, 10)
    assert t.row(SC) == (0, 0, 0, 10, 0)
    assert t.row(TC) == (0, 10, 0, 0, 0)
    assert t.solution_row(SC) == (0, 0, 0, 10, 10)
    assert t.reference_deviations == ()


def test_calabi_table_de_sitter_gates_and_deviations():
    t = calabi_table("deSitter4")
    # sc restriction is vacuous over the compact slice
    assert t.row(SC) == t.row(UN) == (10, 0, 0, 10, 0)
    # duality pattern
    for l in range(5):
        assert t.row(SC)[l] == t.row(TC)[4 - l]
        assert t.solution_row(SC)[l] == t.solution_row(UN)[4 - l]
    # the reference pattern misses sc degree 0 and wave_sc degree 1; the
    # table must say so loudly
    assert len(t.reference_deviations) == 2
    with pytest.raises(CalabiError):
        calabi_table("deSitter4", strict=True)


def test_calabi_table_trivial_rows_zero():
    from causalcoh.causal import TRIVIAL_SUPPORTS
    for bg in CALABI_BACKGROUNDS:
        t = calabi_table(bg)
        for x in TRIVIAL_SUPPORTS:
            assert t.row(x) == (0, 0, 0, 0, 0)


def test_calabi_table_degree_edge_convention():
    t = calabi_table("deSitter4")
    for x in (UN, CP, SC, TC):
        assert t.dim(x, -1) == 0
        assert t.dim(x, 5) == 0
    assert t.solution_dim(SC, -1) == 0
    assert t.solution_dim(SC, 5) == 0
    assert t.dim(SC, 0) == 10


def test_unknown_background_rejected():
    with pytest.raises(CalabiError):
        calabi_table("antiDeSitter4")  # not globally hyperbolic, excluded
