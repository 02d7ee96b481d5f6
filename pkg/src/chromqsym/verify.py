"""Positivity, palindromicity and unimodality checks, and the exhaustive survey."""

from __future__ import annotations

import csv
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

from .formulas import center_of_symmetry, closed_form
from .orders import (
    EPOS_CLASS_1,
    EPOS_CLASS_2,
    NUIOrder,
    classify,
    enumerate_prime_orders,
    num_edges,
    parse_m,
    tag_names,
)
from .qpoly import TPoly, is_nonnegative, is_palindromic, is_unimodal
from .symfun import e_expansion, expansions_equal

DEFAULT_BUDGET = 9
WORKERS_ENV = "CHROMQSYM_WORKERS"


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class Verdict:
    order: NUIOrder
    e_positive: bool
    palindromic: bool
    e_unimodal_sufficient: bool
    unimodal_conjecture: bool
    center: Fraction
    class_tags: frozenset
    closed_form_agrees: bool | None = None
    elapsed: float = 0.0

    @property
    def edges(self) -> int:
        return num_edges(self.order)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "m_sequence": self.order.key,
            "n": self.order.n,
            "edges": self.edges,
            "class_tags": sorted(str(t) for t in self.class_tags),
            "e_positive": self.e_positive,
            "palindromic": self.palindromic,
            "unimodal_sufficient": self.e_unimodal_sufficient,
            "unimodal_conjecture": self.unimodal_conjecture,
            "center": str(self.center),
            "closed_form_agrees": self.closed_form_agrees,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def unimodality_conjecture_check(E: Mapping[tuple, TPoly], center) -> bool:
    """``a_{i+1} - a_i`` is e-positive for ``0 <= i < (m-1)/2`` where ``m = 2*center``.

    ``a_i`` is the vector of ``t^i`` coefficients across the e-basis.
    """
    m = 2 * Fraction(center)
    i = 0
    while i < (m - 1) / 2:
        for p in E.values():
            if p[i + 1] - p[i] < 0:
                return False
        i += 1
    return True


def sufficient_unimodal(E: Mapping[tuple, TPoly], center) -> bool:
    """Every coefficient nonnegative, unimodal and palindromic about ``center``."""
    return all(
        is_nonnegative(p) and is_unimodal(p) and is_palindromic(p, center)
        for p in E.values()
    )


def check_expansion(P: NUIOrder, E: Mapping | None = None) -> Verdict:
    start = time.perf_counter()
    if E is None:
        E = e_expansion(P)
    center = center_of_symmetry(P)
    agrees = None
    cf = closed_form(P)
    if cf is not None:
        agrees = expansions_equal(cf[1], E)
    verdict = Verdict(
        order=P,
        e_positive=all(is_nonnegative(p) for p in E.values()),
        palindromic=all(is_palindromic(p, center) for p in E.values()),
        e_unimodal_sufficient=sufficient_unimodal(E, center),
        unimodal_conjecture=unimodality_conjecture_check(E, center),
        center=center,
        class_tags=classify(P),
        closed_form_agrees=agrees,
    )
    verdict.elapsed = time.perf_counter() - start
    return verdict


def _check_key(key: str) -> Verdict:
    return check_expansion(parse_m(key))


@dataclass
class Census:
    n: int
    total: int = 0
    class1: int = 0
    class2_only: int = 0
    not_e_positive: list = field(default_factory=list)
    not_palindromic: list = field(default_factory=list)
    not_unimodal_sufficient: list = field(default_factory=list)
    not_unimodal_conjecture: list = field(default_factory=list)
    closed_form_mismatch: list = field(default_factory=list)
    proven_class_failures: list = field(default_factory=list)

    @property
    def expected_class1(self) -> int:
        return 2 ** (self.n - 1) - self.n if self.n >= 2 else 0

    @property
    def expected_class2_only(self) -> int:
        return (self.n - 3) * (self.n - 4) // 2 if self.n >= 5 else 0

    @property
    def expected_total(self) -> int:
        return comb(2 * (self.n - 1), self.n - 1) // self.n

    def add(self, v: Verdict):
        names = tag_names(v.class_tags)
        key = v.order.key
        self.total += 1
        in1 = EPOS_CLASS_1 in names
        in2 = EPOS_CLASS_2 in names
        self.class1 += in1
        self.class2_only += in2 and not in1
        if not v.e_positive:
            self.not_e_positive.append(key)
            if in1 or in2:
                self.proven_class_failures.append(key)
        if not v.palindromic:
            self.not_palindromic.append(key)
        if not v.e_unimodal_sufficient:
            self.not_unimodal_sufficient.append(key)
        if not v.unimodal_conjecture:
            self.not_unimodal_conjecture.append(key)
        if v.closed_form_agrees is False:
            self.closed_form_mismatch.append(key)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "expected_total": self.expected_total,
            "class1": self.class1,
            "expected_class1": self.expected_class1,
            "class2_only": self.class2_only,
            "expected_class2_only": self.expected_class2_only,
            "not_e_positive": self.not_e_positive,
            "not_palindromic": self.not_palindromic,
            "not_unimodal_sufficient": self.not_unimodal_sufficient,
            "not_unimodal_conjecture": self.not_unimodal_conjecture,
            "closed_form_mismatch": self.closed_form_mismatch,
            "proven_class_failures": self.proven_class_failures,
        }

    @property
    def ok(self) -> bool:
        return (
            self.total == self.expected_total
            and self.class1 == self.expected_class1
            and self.class2_only == self.expected_class2_only
            and not self.not_palindromic
            and not self.closed_form_mismatch
            and not self.proven_class_failures
        )


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _load_done(path: Path) -> dict[str, dict]:
    done = {}
    if path.exists():
        with path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    rec = json.loads(line)
                    done[rec["m_sequence"]] = rec
    return done


def _verdict_from_json(rec: dict) -> Verdict:
    P = parse_m(rec["m_sequence"])
    return Verdict(
        order=P,
        e_positive=rec["e_positive"],
        palindromic=rec["palindromic"],
        e_unimodal_sufficient=rec["unimodal_sufficient"],
        unimodal_conjecture=rec["unimodal_conjecture"],
        center=Fraction(rec["center"]),
        class_tags=classify(P),
        closed_form_agrees=rec["closed_form_agrees"],
    )


def survey(
    n: int,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    jsonl: str | Path | None = None,
) -> tuple[list[Verdict], Census]:
    """Check every prime order on ``n`` elements.

    With ``jsonl`` set, verdicts are appended one per line as they finish and
    orders already present in the file are not recomputed.
    """
    if n > budget:
        raise BudgetExceeded(f"n={n} exceeds the survey budget {budget}")
    keys = [P.key for P in enumerate_prime_orders(n)]
    done: dict[str, dict] = {}
    fh = None
    if jsonl is not None:
        path = Path(jsonl)
        done = _load_done(path)
        fh = path.open("a")
    todo = [k for k in keys if k not in done]
    fresh: dict[str, Verdict] = {}
    try:
        nworkers = _worker_count(workers)
        if nworkers > 1 and len(todo) > 1:
            with ProcessPoolExecutor(nworkers) as pool:
                results: Iterable[Verdict] = pool.map(_check_key, todo, chunksize=4)
                for v in results:
                    fresh[v.order.key] = v
                    _emit(fh, v)
        else:
            for k in todo:
                v = _check_key(k)
                fresh[k] = v
                _emit(fh, v)
    finally:
        if fh is not None:
            fh.close()
    census = Census(n)
    verdicts = []
    for k in keys:
        v = fresh[k] if k in fresh else _verdict_from_json(done[k])
        verdicts.append(v)
        census.add(v)
    return verdicts, census


def _emit(fh, v: Verdict):
    if fh is not None:
        fh.write(json.dumps(v.to_json(), sort_keys=True) + "\n")
        fh.flush()


CSV_COLUMNS = (
    "m_sequence",
    "edges",
    "class_tags",
    "e_positive",
    "palindromic",
    "unimodal_sufficient",
    "unimodal_conjecture",
)


def write_csv(verdicts: Iterable[Verdict], path_or_fh):
    own = isinstance(path_or_fh, (str, Path))
    fh = open(path_or_fh, "w", newline="") if own else path_or_fh
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for v in verdicts:
            d = v.to_json()
            w.writerow([
                d["m_sequence"],
                d["edges"],
                " ".join(d["class_tags"]),
                d["e_positive"],
                d["palindromic"],
                d["unimodal_sufficient"],
                d["unimodal_conjecture"],
            ])
    finally:
        if own:
            fh.close()
