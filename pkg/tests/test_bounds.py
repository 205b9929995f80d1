"""Bound formulas: exact powers, ceiling logs, known values, the table."""

import numpy as np
import pytest

from matgraph.bounds import (
    TABLE1_HEADER,
    TABLE1_PARAMS,
    bounds_row,
    ceil_log,
    chi_exact_upper,
    chi_exact_upper_exponent,
    chi_lower_singleton,
    chi_prime,
    known_chi_exact,
    lower_bounds,
    table1,
)


def test_ceil_log_edges():
    assert ceil_log(2, 1) == 0
    assert ceil_log(2, 2) == 1
    assert ceil_log(2, 3) == 2
    assert ceil_log(3, 2186) == 7   # just below 3^7 = 2187
    assert ceil_log(3, 2187) == 7
    assert ceil_log(3, 2188) == 8
    assert ceil_log(2, 64) == 6     # exact power
    with pytest.raises(ValueError):
        ceil_log(2, 0)
    with pytest.raises(ValueError):
        ceil_log(1, 5)


def test_ceil_log_against_linear_scan():
    # oracle: precomputed power list + searchsorted, checked for every value
    for base in (2, 3, 5):
        powers = [1]
        while powers[-1] < 10 ** 6:
            powers.append(powers[-1] * base)
        arr = np.array(powers)
        values = range(1, 10 ** 6 + 1, 7 if base != 2 else 1)
        for v in values:
            assert ceil_log(base, v) == int(np.searchsorted(arr, v, side="left"))


def test_chi_prime_values():
    assert chi_prime(2, 2, 2, 1) == 4
    assert chi_prime(6, 4, 2, 2) == 2 ** 12
    assert chi_prime(3, 3, 2, 3) == 2 ** 9
    assert chi_prime(2, 2, 2, 3) == 1  # beyond the diameter
    with pytest.raises(ValueError):
        chi_prime(2, 3, 2, 1)  # n > N


def test_chi_prime_monotone():
    for q in (2, 3):
        for N in range(1, 6):
            for n in range(1, N + 1):
                vals = [chi_prime(N, n, q, d) for d in range(1, n + 1)]
                assert vals == sorted(vals)
    assert chi_prime(4, 3, 2, 2) >= chi_prime(3, 3, 2, 2)
    assert chi_prime(4, 4, 2, 2) >= chi_prime(4, 3, 2, 2)


def test_chi_lower_equals_chi_prime():
    for q in (2, 3):
        for N in range(1, 5):
            for n in range(1, N + 1):
                for d in range(1, n + 1):
                    assert chi_lower_singleton(N, n, q, d) == chi_prime(N, n, q, d)
    assert chi_lower_singleton(2, 2, 2, 1) == 4
    assert chi_lower_singleton(3, 3, 2, 3) == 2 ** 9


def test_chi_exact_upper_table_values():
    # arguments are (N, n, q, d)
    assert chi_exact_upper(6, 4, 2, 2) == 2 ** 8
    assert chi_exact_upper(6, 4, 2, 3) == 2 ** 14
    assert chi_exact_upper(6, 4, 3, 2) == 3 ** 7    # knife edge 2186 <= 2187
    assert chi_exact_upper(6, 4, 3, 3) == 3 ** 13
    assert chi_exact_upper(5, 3, 2, 2) == 2 ** 6    # exact power edge: value 64
    assert chi_exact_upper(5, 3, 3, 3) == 3 ** 10
    assert chi_exact_upper(10, 7, 2, 4) == 2 ** 35
    assert chi_exact_upper(10, 7, 3, 4) == 3 ** 33


def test_chi_exact_upper_never_exceeds_trivial_bound():
    for N, n, d, q in TABLE1_PARAMS:
        assert chi_exact_upper(N, n, q, d) <= chi_prime(N, n, q, d)


def test_known_chi_exact_d1():
    known = known_chi_exact(5, 3, 2, 1)
    assert known is not None and known.exact and known.value == 32


def test_known_chi_exact_equidistant_pairs():
    known = known_chi_exact(3, 3, 2, 3)
    assert known is not None and known.exact and known.value == 8
    known = known_chi_exact(3, 2, 2, 2)
    assert known is not None and known.exact and known.value == 8
    known = known_chi_exact(2, 2, 2, 2)
    assert known is not None and known.exact and known.value == 4
    known = known_chi_exact(7, 1, 2, 1)
    assert known is not None and known.exact and known.value == 128
    assert known_chi_exact(4, 4, 2, 4) is None  # outside the certified pairs


def test_known_chi_exact_lower_bound_shape():
    known = known_chi_exact(3, 3, 2, 2)  # N = C(3,2), d = n - 1
    assert known is not None and not known.exact and known.value == 7
    assert lower_bounds(3, 3, 2, 2) == [7]
    assert lower_bounds(6, 4, 2, 3) == [15]
    assert lower_bounds(2, 2, 2, 1) == [4]


def test_bounds_row_fields():
    row = bounds_row(6, 4, 2, 2)
    assert row.chi_exact_upper_thm == 2 ** 8
    assert row.chi_exact_upper_nat == 2 ** 12
    assert row.chi_lower_eq1 <= row.chi_prime_exact
    assert row.note == ""
    row = bounds_row(5, 3, 3, 3)
    assert "d = n" in row.note


def test_table1_contents():
    text = table1()
    lines = text.strip().splitlines()
    assert lines[0] == TABLE1_HEADER
    assert len(lines) == 9
    cells = [line.split(",") for line in lines[1:]]
    assert [c[0:4] for c in cells] == [
        ["6", "4", "2", "2"],
        ["6", "4", "3", "2"],
        ["6", "4", "2", "3"],
        ["6", "4", "3", "3"],
        ["5", "3", "2", "2"],
        ["5", "3", "3", "3"],
        ["10", "7", "4", "2"],
        ["10", "7", "4", "3"],
    ]
    assert cells[0][4] == str(2 ** 8) and cells[0][5] == str(2 ** 12)
    assert cells[6][4] == str(2 ** 35) and cells[6][5] == str(2 ** 40)
    # the final row is recomputed in base 3 and flagged
    assert cells[7][4] == str(3 ** 33) and cells[7][5] == str(3 ** 40)
    note = lines[8].split(",")[8]
    assert "published" in note and "2^33" in note and "3^33" in note
    # the only rows with notes are the d = n row and the flagged row
    assert [bool(c[8]) for c in cells] == [False] * 5 + [True, False, True]


def test_table1_deterministic():
    assert table1() == table1()
