import csv
import io
import json
from fractions import Fraction

import pytest

from ffcurves import census as CS
from ffcurves.field import make_field
from ffcurves.parse import parse_poly

import oracles as O


def bi(text, F):
    return parse_poly(text, "bi", F)


def test_parabola_over_f3():
    F = make_field(3)
    rep = CS.factorization_census([bi("X^2 - T", F)], F)
    N, degen, types = O.brute_census(O.SlowField(3, 1), [bi("X^2 - T", F).terms])
    assert (rep.N, rep.degenerate_count) == (N, degen) == (5, 3)
    assert rep.degenerate_irreducible == 3
    assert rep.target == Fraction(9, 2)
    assert rep.normalized_error == pytest.approx(0.5 / 3**1.5)
    assert rep.type_table == dict(types) == {((1, 1),): 4, ((2,),): 2}
    assert rep.predicted_table == {((2,),): Fraction(1, 2), ((1, 1),): Fraction(1, 2)}


@pytest.mark.parametrize("p,k", [(2, 2), (5, 1), (7, 1)])
def test_line_counts_pairs_with_nonzero_slope(p, k):
    F = make_field(p, k)
    assert CS.count_irreducible_pairs([bi("X", F)], F).N == F.q * (F.q - 1)


def test_swan_polynomial_is_never_irreducible():
    F = make_field(2)
    assert CS.count_irreducible_pairs([bi("X^8 + T^3", F)], F).N == 0


@pytest.mark.parametrize(
    "texts,p,k",
    [
        (["X^2 - T^3 - T - 1"], 5, 1),
        (["X^2 + T*X + T^3 + 1"], 2, 2),
        (["X^2 - T - 1", "X^2 - T + 1"], 5, 1),
        (["X^3 + T^2 + X"], 3, 1),
    ],
)
def test_census_matches_brute_force(texts, p, k):
    F = make_field(p, k)
    fs = [bi(t, F) for t in texts]
    rep = CS.factorization_census(fs, F)
    N, degen, types = O.brute_census(O.SlowField(p, k), [f.terms for f in fs])
    assert (rep.N, rep.degenerate_count, rep.type_table) == (N, degen, dict(types))
    assert sum(rep.type_table.values()) + rep.degenerate_count == F.q**2


def test_two_parabolas_over_f9():
    F = make_field(3, 2)
    rep = CS.theorem_c_report([bi("X^2 - T - 1", F), bi("X^2 - T + 1", F)], F, check_hypotheses=False)
    assert rep.d == 4 and rep.target == Fraction(81, 4)
    assert rep.N == 25  # frozen from the brute-force census


def test_shift_in_x_preserves_count():
    F = make_field(7)
    f = bi("X^2 - T^3 - T - 1", F)
    shifted = bi("X^2 + 6*X + 2 - T^3 - T - 1", F)  # (X + 3)^2 - T^3 - T - 1
    assert CS.count_irreducible_pairs([f], F).N == CS.count_irreducible_pairs([shifted], F).N


def test_associates_rejected():
    F = make_field(5)
    with pytest.raises(ValueError):
        CS.count_irreducible_pairs([bi("X^2 - T", F), bi("2*X^2 - 2*T", F)], F)
    with pytest.raises(ValueError):
        CS.count_irreducible_pairs([bi("3", F)], F)
    with pytest.raises(ValueError):
        CS.count_irreducible_pairs([], F)


def test_characteristic_two_with_two_polynomials_is_flagged():
    F = make_field(2, 2)
    rep = CS.count_irreducible_pairs([bi("X^2 + T*X + T^3 + 1", F), bi("X + T^2", F)], F)
    assert any("outside proven scope" in w for w in rep.warnings)


def test_hypotheses_attached_and_warned():
    F = make_field(5)
    rep = CS.theorem_c_report([bi("X^2 - T^3", F)], F)
    assert rep.hypotheses[0]["char0like_nodal"] is False
    assert rep.warnings


@pytest.mark.parametrize("d", range(1, 9))
def test_cycle_densities_sum_to_one(d):
    assert sum(CS.cycle_type_density(d, lam) for lam in CS.partitions(d)) == 1
    assert CS.cycle_type_density(d, (d,)) == Fraction(1, d)


@pytest.mark.parametrize("d", range(1, 6))
def test_cycle_densities_match_permutation_count(d):
    for lam in CS.partitions(d):
        assert CS.cycle_type_density(d, lam) == O.brute_cycle_density(d, lam)


def test_cycle_density_examples_and_errors():
    assert CS.cycle_type_density(4, (2, 2)) == Fraction(1, 8)
    assert CS.cycle_type_density(1, (1,)) == 1
    assert [CS.cycle_type_density(3, lam) for lam in [(3,), (2, 1), (1, 1, 1)]] == [
        Fraction(1, 3),
        Fraction(1, 2),
        Fraction(1, 6),
    ]
    with pytest.raises(ValueError):
        CS.cycle_type_density(4, (2, 1))


def test_regular_stabilizer():
    assert [CS.regular_stabilizer_size(CS.cyclic_group(d)) for d in range(1, 9)] == list(range(1, 9))
    assert CS.regular_stabilizer_size(CS.klein_four_group()) == 4
    assert CS.regular_stabilizer_size(CS.symmetric_group_table(3)) == 6


@pytest.mark.parametrize(
    "table",
    [
        [],
        [[0, 1], [1]],
        [[0, 1], [1, 1]],  # 1 has no inverse
        [[0, 2], [1, 0]],  # entry out of range
        [[1, 0, 2], [0, 1, 2], [2, 2, 2]],
    ],
)
def test_invalid_group_tables(table):
    with pytest.raises(ValueError):
        CS.regular_stabilizer_size(table)


def test_swan_small_bounds():
    zero = CS.swan_scan(0)
    assert zero.all_reducible and zero.cases == 2
    eight = CS.swan_scan(8)
    assert eight.all_reducible and eight.cases == 512
    assert sum(eight.type_counts.values()) == 512
    with pytest.raises(ValueError):
        CS.swan_scan(17)


def test_serialization_shapes():
    F = make_field(5)
    rep = CS.factorization_census([bi("X^2 - T^3 - T - 1", F)], F)
    data = json.loads(rep.to_json())
    assert data["schema"] == 1
    assert data["target"] == "25/3"
    assert set(data["predicted_table"]) == {"{3}", "{2,1}", "{1,1,1}"}
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert {r["factor_type"] for r in rows} == {"{3}", "{2,1}", "{1,1,1}"}
    assert sum(int(r["observed"]) for r in rows) == rep.nondegenerate_count


def test_shard_count_does_not_change_output():
    F = make_field(5)
    fs = [bi("X^2 - T^3 - T - 1", F)]
    serial = CS.factorization_census(fs, F, threads=1).to_json()
    assert CS.factorization_census(fs, F, threads=3).to_json() == serial
