"""Smoke tests for the python bindings: exact values across the boundary."""

from fractions import Fraction

import pytest

import grcone as g


def test_hn_blocks_and_slope():
    b = g.HNBlock(2, 3)
    assert b.rank == 2
    assert b.degree == 3
    assert g.slope(b) == Fraction(3, 2)
    assert repr(b) == "HNBlock(rank=2, degree=3)"


def test_hn_type_validation():
    hn = g.HNType([g.HNBlock(1, 3), g.HNBlock(1, 1), g.HNBlock(1, 0)])
    assert hn.total_rank == 3
    assert hn.total_degree == 4
    with pytest.raises(ValueError):
        g.HNType([g.HNBlock(1, 1), g.HNBlock(1, 3)])


def test_lambda_matches_oracle():
    e = g.SplitBundle([3, 1, 0])
    hn = g.hn_of_split(e)
    assert g.lambda_char0(hn, 2) == Fraction(4)
    assert g.max_subset_sum(e, 2) == 4
    assert g.lambda_char0(hn, 2) == g.max_subset_sum(e, 2)


def test_lambda_strong_is_fractional():
    d = g.StrongHNData(3, 2, g.HNType([g.HNBlock(1, 9), g.HNBlock(2, 3)]))
    assert g.lambda_strong(d, 2) == Fraction(7, 6)


def test_descriptor_dispatch():
    b = g.BundleDescriptor.split(g.SplitBundle([3, 1, 0]), 2)
    assert b.total_rank == 3
    assert b.characteristic == 2
    assert b.lambda_(2) == Fraction(4)


def test_cone_and_membership():
    b = g.BundleDescriptor.split(g.SplitBundle([3, 1, 0]), 0)
    cone = g.pseff_cone(b, 2)
    assert (cone.ray_a.eta, cone.ray_a.fiber) == (0, 1)
    assert (cone.ray_b.eta, cone.ray_b.fiber) == (1, -4)
    assert g.contains(cone, g.NSClass(Fraction(1), Fraction(-4)))
    assert g.on_boundary(cone, g.NSClass(Fraction(1), Fraction(-4)))
    assert not g.contains(cone, g.NSClass(Fraction(1), Fraction(-5)))
    assert g.contains(cone, g.NSClass(Fraction(1, 3), Fraction(5, 7)))


def test_oracle_report():
    rep = g.verify_theorem_split(g.SplitBundle([3, 1, 0]), 2)
    assert rep.verdict
    assert rep.lambda_formula == rep.lambda_oracle == Fraction(4)
    assert rep.h0_at_boundary == 1
    assert rep.h0_beyond_boundary == 0


def test_certificate_flow_and_json():
    d = g.StrongHNData(2, 1, g.HNType([g.HNBlock(2, 3)]))
    cm = g.CoverModel(2, 1, g.SplitBundle([3, 3]))
    g.check_cover_consistency(d, cm)
    cert = g.build_certificate(d, cm, 1)
    assert cert.tilde_l_degree == 3
    assert cert.total_map_degree == 4
    assert cert.checks.all()
    assert g.verify_certificate(cert, d, cm)

    text = g.certificate_to_json(cert)
    again = g.parse_certificate(text)
    assert again == cert

    again.tilde_l_degree += 1
    assert not g.verify_certificate(again, d, cm)


def test_big_integers_cross_exactly():
    huge = 10**40
    e = g.SplitBundle([huge, 0, -huge])
    assert g.max_subset_sum(e, 1) == huge
    assert g.max_subset_sum(e, 3) == 0
    assert g.lambda_char0(g.hn_of_split(e), 1) == Fraction(huge)
    assert g.h0_line_genus0(huge) == huge + 1


def test_transforms():
    e = g.SplitBundle([2, 1])
    assert g.frobenius_split(e, 3, 2).exponents == [18, 9]
    assert g.dual_split(e).exponents == [-2, -1]
    assert g.exterior_power_split(g.SplitBundle([3, 1, 0]), 2).exponents == [4, 3, 1]
    shifted = g.shift_strong(g.StrongHNData(2, 1, g.HNType([g.HNBlock(2, 3)])), 1)
    assert shifted.delta == 2
    assert shifted.hn == g.HNType([g.HNBlock(2, 6)])


def test_errors_translate():
    with pytest.raises(ValueError):
        g.SplitBundle([])
    with pytest.raises(ValueError):
        g.StrongHNData(4, 0, g.HNType([g.HNBlock(1, 0)]))
    with pytest.raises(ValueError):
        g.max_subset_sum(g.SplitBundle([1, 2]), 5)
    with pytest.raises(ValueError):
        g.parse_certificate("not json")
