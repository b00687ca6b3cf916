# test_yvgen.py
"""
Generation of Q_n, structure checks, x_n recursion, Wronskian identities,
coprimality and the on-disk cache
"""
import json
import os

import pytest

from app.algebra.intpoly import IntPoly, ONE, Z, inflate
from app.errors import CacheFormatError, RecurrenceDivisionFailure
from app.models.structure import Z3_PLAIN, Z3_TIMES_Z
from app.yv.generator import (
    YVCache, coprimality_report, expected_degree, generate, get_yv_cache,
    lowest_coeff_by_recursion, lowest_coeff_sign_predicted, reset_yv_caches,
    sign_at_zero_predicted, verify_limit_behaviour, verify_structure,
    verify_wronskian_identities, z3_pattern,
)


def in_z3(*coeffs, shift=0):
    """Polynomial z^shift * sum coeffs[k] z^(3k)"""
    return inflate(shift, 3, IntPoly(coeffs))


TABLE = {
    2: in_z3(4, 1),
    3: in_z3(-80, 20, 1),
    4: in_z3(11200, 0, 60, 1, shift=1),
    5: in_z3(-6272000, -3136000, 78400, 2800, 140, 1),
    6: in_z3(-38635520000, 19317760000, 1448832000, -17248000, 627200, 18480, 280, 1),
    7: in_z3(-3093932441600000, 0, -49723914240000, -828731904000, 13039488000,
             62092800, 5174400, 75600, 504, 1, shift=1),
    8: in_z3(-991048439693312000000, -743286329769984000000, 37164316488499200000,
             1769729356595200000, 126696533483520000, 407736096768000, -6629855232000,
             124309785600, 2018016000, 32771200, 240240, 840, 1),
}

X_VALUES = {
    0: 1, 1: 1, 2: 4, 3: -80, 4: 11200, 5: -6272000, 6: -38635520000,
    7: -3093932441600000, 8: -991048439693312000000,
}


# ============================================
# generate
# ============================================

def test_initial_entries(cache):
    assert generate(0, cache) == ONE
    assert generate(1, cache) == Z


@pytest.mark.parametrize('n', sorted(TABLE))
def test_table_polynomials(cache, n):
    assert generate(n, cache) == TABLE[n]


def test_generate_fills_intermediates(cache):
    generate(6, cache)
    assert all(k in cache for k in range(7))
    assert cache.dirty


def test_generate_rejects_negative_index(cache):
    with pytest.raises(ValueError):
        generate(-1, cache)


def test_corrupted_entry_breaks_recurrence(cache):
    cache.entries[2] = IntPoly((5, 0, 0, 1))
    with pytest.raises(RecurrenceDivisionFailure) as info:
        generate(4, cache)
    assert info.value.n == 4


def test_monic_with_expected_degree_up_to_25(shared_cache):
    for n in range(26):
        q = generate(n, shared_cache)
        assert q.lc == 1
        assert q.degree == expected_degree(n)


# ============================================
# structure, x_n, signs
# ============================================

def test_structure_examples(cache):
    r4 = verify_structure(4, cache)
    assert (r4.degree_ok, r4.monic, r4.z3_structure, r4.lowest_coeff, r4.sign_at_zero) == \
        (True, True, Z3_TIMES_Z, 11200, 0)
    r1 = verify_structure(1, cache)
    assert (r1.z3_structure, r1.lowest_coeff, r1.sign_at_zero) == (Z3_TIMES_Z, 1, 0)
    r5 = verify_structure(5, cache)
    assert (r5.z3_structure, r5.lowest_coeff, r5.sign_at_zero) == (Z3_PLAIN, -6272000, -1)
    assert r5.passed and r4.passed and r1.passed


def test_structure_report_flags_broken_pattern(cache):
    cache.entries[2] = IntPoly((4, 1, 0, 1))
    report = verify_structure(2, cache)
    assert report.z3_structure is None
    assert not report.passed


def test_lowest_coeff_recursion_examples():
    for n, x in X_VALUES.items():
        assert lowest_coeff_by_recursion(n) == x


def test_lowest_coeff_matches_polynomials_up_to_25(shared_cache):
    for n in range(26):
        report = verify_structure(n, shared_cache)
        assert report.lowest_coeff == lowest_coeff_by_recursion(n)
        assert (report.lowest_coeff > 0) - (report.lowest_coeff < 0) == lowest_coeff_sign_predicted(n)


def test_sign_at_zero_table():
    assert sign_at_zero_predicted(3) == -1
    assert sign_at_zero_predicted(10) == 0
    assert sign_at_zero_predicted(0) == 1
    assert [sign_at_zero_predicted(n) for n in range(12)] == [1, 0, 1, -1, 0, -1, -1, 0, -1, 1, 0, 1]


def test_sign_at_zero_matches_polynomials_up_to_25(shared_cache):
    for n in range(26):
        report = verify_structure(n, shared_cache)
        assert report.sign_at_zero == sign_at_zero_predicted(n)
        assert (report.sign_at_zero == 0) == (n % 3 == 1)
        assert report.z3_structure == (Z3_TIMES_Z if n % 3 == 1 else Z3_PLAIN)


def test_limit_behaviour(shared_cache):
    for n in range(26):
        assert verify_limit_behaviour(n, shared_cache) == (True, True)


# ============================================
# identities and coprimality
# ============================================

def test_wronskian_first_index_by_hand(cache):
    q2 = generate(2, cache)
    # Q_2' Q_0 - Q_2 Q_0' = 3z^2 = 3 Q_1^2
    assert q2.coeffs[:3] == (4, 0, 0)
    assert verify_wronskian_identities(1, cache) == (True, True, True)


@pytest.mark.parametrize('n', range(1, 21))
def test_wronskian_identities(shared_cache, n):
    assert verify_wronskian_identities(n, shared_cache) == (True, True, True)


def test_wronskian_detects_corruption(cache):
    generate(4, cache)
    cache.entries[3] = IntPoly((-81, 0, 0, 20, 0, 0, 1))
    assert verify_wronskian_identities(2, cache) != (True, True, True)


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 8, 10])
def test_coprimality(shared_cache, n):
    assert coprimality_report(n, shared_cache) == (True, True, True)


@pytest.mark.slow
def test_coprimality_up_to_24(shared_cache):
    for n in range(1, 25):
        assert coprimality_report(n, shared_cache) == (True, True, True)


# ============================================
# cache persistence
# ============================================

def test_cache_round_trip(tmp_path, cache):
    generate(9, cache)
    path = str(tmp_path / 'cache.json')
    cache.save(path)
    assert not cache.dirty

    reloaded = YVCache.load(path)
    assert reloaded.entries == cache.entries
    with open(path) as fh:
        document = json.load(fh)
    assert document['version'] == 1
    assert document['polys']['2'] == ['4', '0', '0', '1']


def test_cache_save_leaves_no_temp_files(tmp_path, cache):
    generate(3, cache)
    cache.save(str(tmp_path / 'cache.json'))
    assert os.listdir(tmp_path) == ['cache.json']


def test_interrupted_save_keeps_previous_file(tmp_path, cache, monkeypatch):
    path = str(tmp_path / 'cache.json')
    generate(3, cache)
    cache.save(path)

    generate(6, cache)

    def interrupted(src, dst):
        raise OSError("simulated crash before rename")

    monkeypatch.setattr(os, 'replace', interrupted)
    with pytest.raises(OSError):
        cache.save(path)
    monkeypatch.undo()

    reloaded = YVCache.load(path)
    assert max(reloaded.entries) == 3
    assert os.listdir(tmp_path) == ['cache.json']


def test_missing_cache_file_starts_fresh(tmp_path):
    cache = YVCache.load(str(tmp_path / 'absent.json'))
    assert sorted(cache.entries) == [0, 1]


@pytest.mark.parametrize('document', [
    {'version': 2, 'polys': {}},
    {'version': 1},
    {'version': 1, 'polys': {'2': ['4', '0', '1']}},
    {'version': 1, 'polys': {'1': ['1', '1']}},
    {'version': 1, 'polys': {'x': ['1']}},
    {'version': 1, 'polys': {'2': ['4', '0', '0', '1.0']}},
    {'version': 1, 'polys': {'2': ['4', '1', '0', '1']}},
])
def test_bad_cache_documents(tmp_path, document):
    path = tmp_path / 'cache.json'
    path.write_text(json.dumps(document))
    with pytest.raises(CacheFormatError):
        YVCache.load(str(path))


def test_z3_pattern_labels():
    assert z3_pattern(IntPoly((4, 0, 0, 1)), 3) == Z3_PLAIN
    assert z3_pattern(IntPoly((0, 1)), 1) == Z3_TIMES_Z
    assert z3_pattern(IntPoly((4, 1, 0, 1)), 3) is None


def test_invalid_json_cache(tmp_path):
    path = tmp_path / 'cache.json'
    path.write_text('{"version": 1, "polys": ')
    with pytest.raises(CacheFormatError):
        YVCache.load(str(path))


def test_shared_cache_per_path(tmp_path):
    path = str(tmp_path / 'cache.json')
    try:
        assert get_yv_cache(path) is get_yv_cache(path)
    finally:
        reset_yv_caches()
