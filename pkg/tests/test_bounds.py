from fractions import Fraction

import mpmath
import pytest

from indlab.bounds import (
    bipartite_ind,
    bound_table,
    conj_disj_lower,
    cycle_count_upper,
    cycle_ind_upper_pg,
    dlg_count_upper,
    dlg_ind_upper,
    gap_report,
    known_inducibility,
    kral_count_upper,
    kral_ind_upper,
    path_bounds,
    pg_lower,
    pg_lower_stirling,
)


class TestBlowUpLower:
    def test_values(self):
        assert pg_lower(5) == Fraction(1, 26)
        assert pg_lower(6) == Fraction(24, 1555)
        assert pg_lower(7) == Fraction(5, 817)

    def test_rejects(self):
        with pytest.raises(ValueError):
            pg_lower(1)

    def test_stirling_below_exact(self):
        for k in range(2, 11):
            exact = pg_lower(k)
            approx = pg_lower_stirling(k)
            assert approx <= mpmath.mpf(exact.numerator) / exact.denominator

    def test_stirling_values(self):
        assert str(pg_lower_stirling(5)).startswith("0.03776")
        assert str(pg_lower_stirling(1)).startswith("0.92213")


class TestCycleBounds:
    def test_count_upper(self):
        assert cycle_count_upper(6, 5) == Fraction(12, 5) * Fraction(5, 4) ** 4

    def test_ind_upper_decimal(self):
        # 2e * 120 / 3125
        assert str(cycle_ind_upper_pg(5)).startswith("0.208764")

    def test_kral(self):
        assert kral_count_upper(12, 6) == 128
        assert kral_ind_upper(6) == Fraction(5, 162)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            cycle_count_upper(4, 5)
        with pytest.raises(ValueError):
            kral_count_upper(12, 5)
        with pytest.raises(ValueError):
            kral_ind_upper(5)


class TestDlgBounds:
    def test_ind_upper_values(self):
        assert dlg_ind_upper(5) == Fraction(3240, 3125)
        assert dlg_ind_upper(6) == Fraction(5, 12)
        assert dlg_ind_upper(7) == Fraction(136080, 823543)

    def test_count_upper(self):
        assert dlg_count_upper(9, 6) == Fraction(19683, 64)
        assert dlg_count_upper(6, 6) == 27

    def test_lowest_terms(self):
        v = dlg_ind_upper(5)
        assert (v.numerator, v.denominator) == (648, 625)

    def test_rejects(self):
        with pytest.raises(ValueError):
            dlg_ind_upper(4)

    def test_ordering_with_lower_bounds(self):
        for k in range(5, 11):
            assert pg_lower(k) <= dlg_ind_upper(k)

    def test_count_to_density_window(self):
        # |27 n^k/k^k / C(n,k) - 27 k!/k^k| <= limit * (1 - prod)/prod, exactly
        from math import comb

        n = 1000
        for k in (5, 6, 7):
            scaled = dlg_count_upper(n, k) / comb(n, k)
            limit = dlg_ind_upper(k)
            prod = Fraction(1)
            for i in range(1, k):
                prod *= 1 - Fraction(i, n)
            assert abs(scaled - limit) <= limit * (1 - prod) / prod


class TestBipartite:
    def test_balanced(self):
        assert bipartite_ind(2) == Fraction(3, 8)
        assert bipartite_ind(3) == Fraction(5, 16)

    def test_near_balanced(self):
        assert bipartite_ind(1, odd=True) == Fraction(3, 4)

    def test_rejects(self):
        with pytest.raises(ValueError):
            bipartite_ind(0)


class TestConjDisj:
    def test_tripartite_limit(self):
        assert conj_disj_lower(4, 2, Fraction(3, 8), Fraction(1)) == Fraction(10, 81)

    def test_zero_factor(self):
        assert conj_disj_lower(3, 5, Fraction(0), Fraction(1, 2)) == 0

    def test_two_triangles(self):
        assert conj_disj_lower(3, 3, Fraction(1), Fraction(1)) == Fraction(5, 16)

    def test_rejects(self):
        with pytest.raises(ValueError):
            conj_disj_lower(0, 2, Fraction(1, 2), Fraction(1, 2))
        with pytest.raises(ValueError):
            conj_disj_lower(3, 2, Fraction(3, 2), Fraction(1))


class TestPathBounds:
    def test_values(self):
        low, up = path_bounds(4)
        assert low == Fraction(6, 31)
        assert up == Fraction(4, 9)
        assert path_bounds(3)[0] == Fraction(2, 5)

    def test_window_order(self):
        for k in range(3, 13):
            low, up = path_bounds(k)
            assert low <= up

    def test_rejects(self):
        with pytest.raises(ValueError):
            path_bounds(2)


class TestRegistry:
    @pytest.mark.parametrize(
        "name,value",
        [
            ("K3", Fraction(1)),
            ("P3", Fraction(3, 4)),
            ("K4", Fraction(1)),
            ("S4", Fraction(1, 2)),
            ("C4", Fraction(3, 8)),
            ("paw", Fraction(3, 8)),
            ("K112", Fraction(72, 125)),
            ("C5", Fraction(1, 26)),
            ("P4_lower_exoo", Fraction(960, 4877)),
            ("P4_lower_evenzohar", Fraction(1173, 5824)),
        ],
    )
    def test_exact_constants(self, name, value):
        assert known_inducibility(name).value == value

    def test_k112_alias_and_tag(self):
        rep = known_inducibility("K_{1,1,2}")
        assert rep.value == Fraction(72, 125)
        assert "5-equipartite" in rep.construction

    def test_registry_consistency(self):
        assert known_inducibility("C4").value == bipartite_ind(2)
        assert known_inducibility("P3").value == bipartite_ind(1, odd=True)

    def test_vaughan_is_decimal_only(self):
        rep = known_inducibility("P4_upper_vaughan")
        assert rep.value is None
        assert rep.decimal == "0.204513"

    def test_cycle_factor_reference(self):
        rep = known_inducibility("cycle_upper_factor_128e_81")
        assert rep.irrational == ("e",)
        assert rep.decimal.startswith("4.29")  # 128e/81

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            known_inducibility("K99")


class TestGapReports:
    def test_order5(self):
        rep = gap_report(5)
        assert rep.ratio == Fraction(3125, 3240)
        assert rep.decimal == "0.964506"

    def test_order6(self):
        rep = gap_report(6)
        assert rep.ratio == Fraction(27, 8)
        assert rep.decimal == "3.375"

    def test_order7(self):
        rep = gap_report(7)
        assert rep.ratio == Fraction(136080 * 817, 823543 * 5)
        assert abs(float(rep.ratio) - 27.0) < 3e-4

    def test_rejects(self):
        with pytest.raises(ValueError):
            gap_report(8)


def test_bound_table_rows():
    rows = bound_table([5, 6], n=12)
    names = {(r.name, r.params.get("k"), r.params.get("n")) for r in rows}
    assert ("pg_lower", 5, None) in names
    assert ("kral_count_upper", 6, 12) in names
    assert ("kral_ind_upper", 5, None) not in names
    for r in rows:
        if r.value is not None:
            assert not r.irrational
        assert len(r.decimal) >= 6
