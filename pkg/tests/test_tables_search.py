import json
import os

import pytest

from hgsearch.search import (
    SearchSpec,
    enumerate_alphas,
    enumerate_betas,
    find_witness,
    run_search,
)
from hgsearch.tables import (
    KNOWN_BM_DISCREPANCIES,
    POSSIBLE_D,
    SPECIAL_ROWS,
    check_special_row,
    row_param,
)


def test_special_rows_are_valid_params():
    assert len(SPECIAL_ROWS) == 19
    for row in SPECIAL_ROWS:
        p = row_param(row)  # raises on an invalid row
        assert p.n == row.n


def test_known_discrepancy_count():
    assert len(KNOWN_BM_DISCREPANCIES) == 5


def test_check_one_row():
    verdict = check_special_row(SPECIAL_ROWS[0])
    assert verdict.passes


def test_possible_d_shape():
    assert POSSIBLE_D[(2, 2)] == (9, 12, 15, 20, 21, 24, 27)
    assert POSSIBLE_D[(3, 1)] == (18, 20, 24, 28, 30)
    assert len(POSSIBLE_D) == 10


def test_enumerate_alphas():
    # partition (2,2) over d=9: shapes 0,0,g,g with g nonzero
    shapes = list(enumerate_alphas(9, (2, 2)))
    assert all(s[0] == s[1] == 0 for s in shapes)
    assert all(s[2] == s[3] != 0 for s in shapes)
    assert len(shapes) == 8
    # distinct gammas for distinct parts
    shapes31 = list(enumerate_alphas(9, (3, 1)))
    assert all(len(set(s)) == 2 for s in shapes31)


def test_enumerate_betas_sum_and_exclusion():
    for betas in enumerate_betas(9, 3, required_sum=0, forbidden={0}):
        assert sum(betas) % 9 == 0
        assert 0 not in betas
        assert len(set(betas)) == 3


def test_enumerate_betas_includes_table_row():
    rows = list(enumerate_betas(9, 3, required_sum=(36 - 0) % 9, forbidden={0}))
    assert (1, 2, 6) in rows


def test_search_small_case_finds_table_row():
    spec = SearchSpec(n=3, partition=(3,), d_min=9, d_max=9)
    results = run_search(spec)
    assert {"d": 9, "alpha": [0, 0, 0], "beta": [1, 2, 6]} in [
        {k: r[k] for k in ("d", "alpha", "beta")} for r in results
    ]


def test_search_deterministic_across_worker_counts():
    base = None
    for workers in (1, 4, 8):
        spec = SearchSpec(n=3, partition=(3,), d_min=3, d_max=9, workers=workers)
        results = run_search(spec)
        key = [(r["d"], tuple(r["alpha"]), tuple(r["beta"])) for r in results]
        if base is None:
            base = key
        else:
            assert key == base


def test_checkpoint_resume(tmp_path):
    ck = str(tmp_path / "ck.jsonl")
    spec = SearchSpec(n=3, partition=(3,), d_min=9, d_max=9, checkpoint=ck)
    first = run_search(spec)
    assert os.path.exists(ck)
    with open(ck) as fh:
        lines = [json.loads(line) for line in fh]
    assert lines
    # second run must reuse the checkpoint and agree
    second = run_search(spec)
    assert first == second


def test_find_witness():
    w = find_witness(4, (2, 2), 9)
    assert w is not None
    assert w["d"] == 9
    assert find_witness(4, (2, 2), 10) is None
