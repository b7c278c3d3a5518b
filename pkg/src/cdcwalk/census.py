"""Corpus census: comain buckets, same-CDC pairs and hierarchy checks.

Per-graph work (stages 2 and 4) is a parallel map; everything else is a
single-threaded reduce in input order, so reports do not depend on the
worker count.  Indices in reports are 1-based positions in the input.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .canon import cdc_certificate, certificate, tf_isomorphism, verify_tf
from .errors import ConsistencyError
from .graph import Graph, read_graph6_file, write_graph6
from .hierarchy import implication_violations, relation_profile
from .walks import main_count, main_polynomial, same_walk_matrices_all_k, walk_matrix, walk_matrix_k

INDEX_NOTE = (
    "indices are 1-based positions in the input file; graphs numbered by "
    "another list's order should be matched by their walk matrices"
)


@dataclass
class GraphSummary:
    index: int
    graph6: str
    order: int
    p: int
    main_polynomial: tuple[int, ...]
    degree_sequence: list[int]


@dataclass
class CensusReport:
    corpus_size: int
    graphs: list[GraphSummary]
    comain_pair_count: int
    same_cdc_pairs: list[dict]
    same_w_diff_kw_pairs: list[dict]
    regular_same_w_diff_kw_pair_count: int
    profiled_pair_count: int
    violations: list[dict]
    question_5_8_offenders: list[dict]
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_json_dict(self, timings: bool = True) -> dict:
        out = {
            "corpus_size": self.corpus_size,
            "comain_pair_count": self.comain_pair_count,
            "same_cdc_pairs": self.same_cdc_pairs,
            "same_w_diff_kw_pairs": self.same_w_diff_kw_pairs,
            "regular_same_w_diff_kw_pair_count": self.regular_same_w_diff_kw_pair_count,
            "profiled_pair_count": self.profiled_pair_count,
            "violations": self.violations,
            "question_5_8_offenders": self.question_5_8_offenders,
            "note": INDEX_NOTE,
            "graphs": [
                {
                    "index": s.index,
                    "graph6": s.graph6,
                    "order": s.order,
                    "p": s.p,
                    "main_polynomial": list(s.main_polynomial),
                    "degree_sequence": s.degree_sequence,
                }
                for s in self.graphs
            ],
        }
        if timings:
            out["timings_ms"] = self.timings_ms
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_json_dict(timings), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"{'corpus size':<36}{self.corpus_size:>10}",
            f"{'comain pairs':<36}{self.comain_pair_count:>10}",
            f"{'same-CDC non-isomorphic pairs':<36}{len(self.same_cdc_pairs):>10}",
            f"{'same W, different k-walk (p >= 2)':<36}{len(self.same_w_diff_kw_pairs):>10}",
            f"{'same W, different k-walk (regular)':<36}{self.regular_same_w_diff_kw_pair_count:>10}",
            f"{'pairs profiled':<36}{self.profiled_pair_count:>10}",
            f"{'hierarchy violations':<36}{len(self.violations):>10}",
            f"{'CDC-isomorphic but not comain':<36}{len(self.question_5_8_offenders):>10}",
            "",
        ]
        if self.same_cdc_pairs:
            lines.append("same-CDC pairs")
            lines.append(f"  {'i':>6} {'j':>6}  {'graph6 i':<12}{'graph6 j':<12}comain")
            for rec in self.same_cdc_pairs:
                lines.append(
                    f"  {rec['i']:>6} {rec['j']:>6}  {rec['graph6_i']:<12}{rec['graph6_j']:<12}"
                    f"{'yes' if rec['comain'] else 'no'}"
                )
            lines.append("")
        if self.same_w_diff_kw_pairs:
            lines.append("same walk matrix, different k-walk matrix")
            lines.append(f"  {'i':>6} {'j':>6}  {'p':>2}  main polynomials")
            for rec in self.same_w_diff_kw_pairs:
                lines.append(
                    f"  {rec['i']:>6} {rec['j']:>6}  {rec['p']:>2}  "
                    f"{rec['main_polynomial_i']} | {rec['main_polynomial_j']}"
                )
            lines.append("")
        for rec in self.violations:
            lines.append(f"VIOLATION {rec['i']} {rec['j']}: {', '.join(rec['labels'])}")
        for rec in self.question_5_8_offenders:
            lines.append(f"NOT COMAIN {rec['i']} {rec['j']}")
        lines.append("timings (ms): " + ", ".join(f"{k}={v:.0f}" for k, v in self.timings_ms.items()))
        lines.append(f"note: {INDEX_NOTE}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "i", "j", "graph6_i", "graph6_j", "detail"])
        for rec in self.same_cdc_pairs:
            writer.writerow(["same_cdc", rec["i"], rec["j"], rec["graph6_i"], rec["graph6_j"], rec["cdc_certificate_hex"]])
        for rec in self.same_w_diff_kw_pairs:
            writer.writerow(["same_w_diff_kw", rec["i"], rec["j"], rec["graph6_i"], rec["graph6_j"], f"p={rec['p']}"])
        for rec in self.violations:
            writer.writerow(["violation", rec["i"], rec["j"], rec["graph6_i"], rec["graph6_j"], " ".join(rec["labels"])])
        for rec in self.question_5_8_offenders:
            writer.writerow(["not_comain", rec["i"], rec["j"], rec["graph6_i"], rec["graph6_j"], ""])
        return buf.getvalue()


# Top-level workers so they pickle into subprocesses.


def _main_stage(g: Graph) -> tuple[int, tuple[int, ...]]:
    return main_count(g), main_polynomial(g)


def _cdc_stage(g: Graph) -> bytes:
    return cdc_certificate(g)


def _cert_stage(g: Graph) -> bytes:
    return certificate(g)


def _profile_stage(pair: tuple[Graph, Graph]) -> list[str]:
    return implication_violations(relation_profile(*pair))


def _pmap(fn: Callable, items: Sequence, pool: ProcessPoolExecutor | None) -> list:
    if pool is None:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (8 * (pool._max_workers or 1)))
    return list(pool.map(fn, items, chunksize=chunk))


def _fmt_poly(coeffs) -> str:
    from .walks import format_polynomial

    return format_polynomial(coeffs)


def run_census(graphs: Sequence[Graph] | str | os.PathLike, jobs: int | None = None) -> CensusReport:
    """Run every census stage over a corpus (graphs or a graph6 file path)."""
    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = round((now - clock) * 1000, 1)
        clock = now

    if not isinstance(graphs, (list, tuple)):
        graphs = read_graph6_file(graphs)
    graphs = list(graphs)
    lap("parse")

    jobs = jobs or os.cpu_count() or 1
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 and len(graphs) > 1 else None
    try:
        mains = _pmap(_main_stage, graphs, pool)
        lap("main_polynomials")

        buckets: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for i, (_, poly) in enumerate(mains):
            buckets[poly].append(i)
        comain_count = sum(comb(len(b), 2) for b in buckets.values())
        lap("comain_count")

        cdc_certs = _pmap(_cdc_stage, graphs, pool)
        groups: dict[bytes, list[int]] = defaultdict(list)
        for i, cert in enumerate(cdc_certs):
            groups[cert].append(i)
        shared = [m for m in groups.values() if len(m) > 1]
        need_cert = sorted({i for m in shared for i in m})
        own = dict(zip(need_cert, _pmap(_cert_stage, [graphs[i] for i in need_cert], pool)))
        cdc_pairs = sorted(
            (i, j) for m in shared for i, j in combinations(m, 2) if own[i] != own[j]
        )
        lap("cdc_certificates")

        same_cdc = []
        for i, j in cdc_pairs:
            w = tf_isomorphism(graphs[i], graphs[j])
            if w is None or not verify_tf(graphs[i], graphs[j], w):
                raise ConsistencyError(f"pair {i + 1},{j + 1}: isomorphic CDCs without a verified TF witness")
            same_cdc.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "graph6_i": write_graph6(graphs[i]),
                    "graph6_j": write_graph6(graphs[j]),
                    "cdc_certificate_hex": cdc_certs[i].hex(),
                    "comain": mains[i][1] == mains[j][1],
                    "tf_witness": {"q": [v + 1 for v in w.q], "r": [v + 1 for v in w.r]},
                }
            )
        lap("tf_witnesses")

        # Walk matrices are compared entrywise under the file labelling.
        # p = 1 buckets are regular graphs, where W = j regardless of degree.
        wbuckets: dict[tuple, list[int]] = defaultdict(list)
        for i, g in enumerate(graphs):
            wbuckets[(g.n, walk_matrix(g))].append(i)
        same_w_pairs = []
        diff_kw = []
        regular_diff = 0
        for members in wbuckets.values():
            for i, j in combinations(members, 2):
                same_w_pairs.append((i, j))
                if same_walk_matrices_all_k(graphs[i], graphs[j]):
                    continue
                p = mains[i][0]
                if p < 2:
                    regular_diff += 1
                    continue
                diff_kw.append(
                    {
                        "i": i + 1,
                        "j": j + 1,
                        "graph6_i": write_graph6(graphs[i]),
                        "graph6_j": write_graph6(graphs[j]),
                        "p": p,
                        "main_polynomial_i": _fmt_poly(mains[i][1]),
                        "main_polynomial_j": _fmt_poly(mains[j][1]),
                        "walk_matrix_k_i": [list(r) for r in walk_matrix_k(graphs[i], p + 1)],
                        "walk_matrix_k_j": [list(r) for r in walk_matrix_k(graphs[j], p + 1)],
                    }
                )
        diff_kw.sort(key=lambda rec: (rec["i"], rec["j"]))
        lap("walk_matrices")

        candidates = set(cdc_pairs) | set(same_w_pairs)
        for members in buckets.values():
            candidates.update(combinations(members, 2))
        candidates = sorted((i, j) for i, j in candidates if graphs[i].n == graphs[j].n)
        labels = _pmap(_profile_stage, [(graphs[i], graphs[j]) for i, j in candidates], pool)
        violations = [
            {
                "i": i + 1,
                "j": j + 1,
                "graph6_i": write_graph6(graphs[i]),
                "graph6_j": write_graph6(graphs[j]),
                "labels": found,
            }
            for (i, j), found in zip(candidates, labels)
            if found
        ]
        lap("hierarchy")
    finally:
        if pool is not None:
            pool.shutdown()

    offenders = [
        {"i": rec["i"], "j": rec["j"], "graph6_i": rec["graph6_i"], "graph6_j": rec["graph6_j"]}
        for rec in same_cdc
        if not rec["comain"]
    ]
    lap("question")

    summaries = [
        GraphSummary(i + 1, write_graph6(g), g.n, mains[i][0], mains[i][1], sorted(g.degrees(), reverse=True))
        for i, g in enumerate(graphs)
    ]
    return CensusReport(
        corpus_size=len(graphs),
        graphs=summaries,
        comain_pair_count=comain_count,
        same_cdc_pairs=same_cdc,
        same_w_diff_kw_pairs=diff_kw,
        regular_same_w_diff_kw_pair_count=regular_diff,
        profiled_pair_count=len(candidates),
        violations=violations,
        question_5_8_offenders=offenders,
        timings_ms=timings,
    )


def verify_hierarchy(graphs: Iterable[Graph], max_order: int | None = None) -> tuple[int, list[tuple[int, int, list[str]]]]:
    """Profile every same-order pair; returns (pairs checked, violations).

    Indices in the violation list are 0-based positions in ``graphs``.
    """
    by_order: dict[int, list[int]] = defaultdict(list)
    graphs = list(graphs)
    for i, g in enumerate(graphs):
        if max_order is None or g.n <= max_order:
            by_order[g.n].append(i)
    checked = 0
    bad = []
    for order in sorted(by_order):
        for i, j in combinations(by_order[order], 2):
            found = implication_violations(relation_profile(graphs[i], graphs[j]))
            checked += 1
            if found:
                bad.append((i, j, found))
    return checked, bad
