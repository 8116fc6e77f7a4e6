"""Brute-force enumeration of passing hypergeometric parameters.

Staged filtering (regularity, then big monodromy, then the determinant
criterion with its c-search), parallelized over (d, alpha-shape) chunks,
with a resumable plain-text checkpoint.  Output order is deterministic
and independent of the worker count.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .criteria import bm, bm_published, find_c, is_regular
from .params import HgParam, ValidationError, validate


@dataclass(frozen=True)
class SearchSpec:
    n: int
    partition: Tuple[int, ...]
    d_min: int
    d_max: int
    check_r: bool = True
    check_bm: bool = True
    check_d: bool = True
    dedup_by_scaling: bool = False
    workers: int = 1
    limit: Optional[int] = None
    checkpoint: Optional[str] = None
    # published=True mirrors the predicates the published tables reflect
    # (bm_published and basis-solution clause (iv)); published=False uses
    # the criteria exactly as stated.
    published: bool = True

    def __post_init__(self):
        if sum(self.partition) != self.n:
            raise ValueError("partition does not sum to n")
        if tuple(sorted(self.partition, reverse=True)) != tuple(self.partition):
            raise ValueError("partition must be non-increasing")


def enumerate_alphas(d: int, partition: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Alpha multisets 0^{p1} g2^{p2} ... gr^{pr} with the g's distinct and
    nonzero.  Within a run of equal part sizes the g's are taken increasing,
    so each unordered shape appears once."""
    parts = list(partition)
    r = len(parts)
    if r == 1:
        yield (0,) * parts[0]
        return
    pool = range(1, d)
    for gammas in itertools.permutations(pool, r - 1):
        ok = True
        for i in range(1, r - 1):
            if parts[i] == parts[i + 1] and gammas[i - 1] > gammas[i]:
                ok = False
                break
        if not ok:
            continue
        alphas: List[int] = [0] * parts[0]
        for g, mult in zip(gammas, parts[1:]):
            alphas.extend([g] * mult)
        yield tuple(sorted(alphas))


def enumerate_betas(
    d: int, n: int, required_sum: int, forbidden: Set[int]
) -> Iterator[Tuple[int, ...]]:
    """n-subsets of (Z/dZ) minus forbidden with the prescribed sum mod d.
    The last element is determined by the first n-1, so the scan is over
    (n-1)-subsets."""
    allowed = sorted(set(range(d)) - {x % d for x in forbidden})
    if n > len(allowed):
        return
    allowed_set = set(allowed)
    if n == 1:
        last = required_sum % d
        if last in allowed_set:
            yield (last,)
        return
    for head in itertools.combinations(allowed, n - 1):
        last = (required_sum - sum(head)) % d
        if last > head[-1] and last in allowed_set:
            yield head + (last,)


def _candidate_params(d: int, alphas: Tuple[int, ...]) -> Iterator[HgParam]:
    n = len(alphas)
    required = (sum(alphas) - d * (d - 1) // 2) % d
    for betas in enumerate_betas(d, n, required, set(alphas)):
        try:
            yield validate(d, alphas, betas)
        except ValidationError:
            continue


def _chunk_key(d: int, alphas: Tuple[int, ...]) -> str:
    return f"{d}:{','.join(map(str, alphas))}"


def search_chunk(args) -> Tuple[str, List[dict]]:
    """Worker: all passing parameters for one (d, alpha-shape) chunk."""
    d, alphas, check_r, check_bm, check_d, dedup, limit, published = args
    out: List[dict] = []
    for p in _candidate_params(d, alphas):
        if dedup and _orbit_representative(p) != (p.alphas, p.betas):
            continue
        if check_r and not is_regular(p):
            continue
        if check_bm:
            ok = bm_published(p) if published else bm(p)[0]
            if not ok:
                continue
        c: Optional[Tuple[int, int, int]] = None
        if check_d:
            c = find_c(p, published=published)
            if c is None:
                continue
        out.append(
            {
                "d": d,
                "alpha": list(p.alphas),
                "beta": list(p.betas),
                "c": list(c) if c is not None else None,
            }
        )
        if limit is not None and len(out) >= limit:
            break
    return _chunk_key(d, alphas), out


def _orbit_representative(p: HgParam) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    from .params import canonical_form

    q = canonical_form(p)
    return q.alphas, q.betas


def _load_checkpoint(path: Optional[str]) -> Dict[str, List[dict]]:
    done: Dict[str, List[dict]] = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                done[rec["key"]] = rec["results"]
    return done


def run_search(spec: SearchSpec) -> List[dict]:
    """All passing parameters in the requested range, globally sorted by
    (d, alpha, beta).  Deterministic regardless of worker count."""
    chunks = []
    for d in range(max(spec.d_min, spec.n + 1), spec.d_max + 1):
        for alphas in enumerate_alphas(d, spec.partition):
            chunks.append(
                (
                    d,
                    alphas,
                    spec.check_r,
                    spec.check_bm,
                    spec.check_d,
                    spec.dedup_by_scaling,
                    spec.limit,
                    spec.published,
                )
            )
    done = _load_checkpoint(spec.checkpoint)
    todo = [c for c in chunks if _chunk_key(c[0], c[1]) not in done]
    ckpt = open(spec.checkpoint, "a") if spec.checkpoint else None
    try:
        if spec.workers > 1 and len(todo) > 1:
            with multiprocessing.Pool(spec.workers) as pool:
                for key, results in pool.imap_unordered(search_chunk, todo):
                    done[key] = results
                    if ckpt:
                        ckpt.write(json.dumps({"key": key, "results": results}) + "\n")
                        ckpt.flush()
        else:
            for chunk in todo:
                key, results = search_chunk(chunk)
                done[key] = results
                if ckpt:
                    ckpt.write(json.dumps({"key": key, "results": results}) + "\n")
                    ckpt.flush()
    finally:
        if ckpt:
            ckpt.close()
    merged: List[dict] = []
    for c in chunks:
        merged.extend(done[_chunk_key(c[0], c[1])])
    merged.sort(key=lambda r: (r["d"], tuple(r["alpha"]), tuple(r["beta"])))
    if spec.limit is not None:
        merged = merged[: spec.limit]
    return merged


def passing_moduli(
    n: int,
    partition: Tuple[int, ...],
    d_min: int = 3,
    d_max: int = 30,
    workers: int = 1,
    witness_only: bool = False,
) -> List[int]:
    """Moduli d in range admitting at least one passing parameter.  With
    witness_only the scan of each d stops at the first hit."""
    out = []
    for d in range(max(d_min, n + 1), d_max + 1):
        spec = SearchSpec(
            n=n,
            partition=partition,
            d_min=d,
            d_max=d,
            workers=workers,
            limit=1 if witness_only else None,
        )
        if run_search(spec):
            out.append(d)
    return out


def find_witness(n: int, partition: Tuple[int, ...], d: int) -> Optional[dict]:
    """First passing parameter for a single modulus, scanning in the
    deterministic enumeration order."""
    for alphas in enumerate_alphas(d, partition):
        key, results = search_chunk((d, alphas, True, True, True, False, 1, True))
        if results:
            return results[0]
    return None
