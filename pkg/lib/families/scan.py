# -*- coding: utf-8 -*-
"""
族的批量扫描：每个有效 (a,b) 输出一行证书摘要，按 (a,b) 排序。
"""

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, List, Optional, Tuple

from lib.common.errors import InvalidParameters
from lib.common.rendering import dumps_canonical
from lib.deform import DeformationCertifier
from lib.families.examples import golden_note
from lib.families.family import cor44_evaluate, family_instance, family_parametrization, lemma43_check
from lib.stci import moh_check

logger = logging.getLogger(__name__)

MODES = ("monomial", "canonical_p")
RANGE_LIMITS = (2, 64)

CSV_COLUMNS = [
    "a", "b", "l", "m", "n", "gamma", "d1", "d2", "d3", "p",
    "lemma43", "cor44a", "cor44b", "cor44c", "verdict", "moh", "skipped",
]


def parse_range(text: str) -> Tuple[int, int]:
    """
    解析 "A0..A1" 或单个整数

    Raises:
        InvalidParameters: 格式错误或超出 2..64
    """
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise InvalidParameters(f"范围格式应为 A0..A1: {text!r}")
    if low > high or low < RANGE_LIMITS[0] or high > RANGE_LIMITS[1]:
        raise InvalidParameters(f"范围 {text} 必须落在 {RANGE_LIMITS[0]}..{RANGE_LIMITS[1]} 内且非空")
    return low, high


def _scan_row(job: Tuple[int, int, str, Dict[str, Any]]) -> Dict[str, Any]:
    a, b, mode, config = job
    try:
        F = family_instance(a, b)
    except InvalidParameters as e:
        return {"a": a, "b": b, "skipped": str(e)}

    row: Dict[str, Any] = {
        "a": a, "b": b,
        "instance": F.to_dict(),
        "lemma43": lemma43_check(F).to_dict(),
        "moh": moh_check(F.ell, F.m, F.n),
        "mode": mode,
        "p": None,
    }
    p = None
    if mode == "canonical_p":
        if F.canonical_p > F.m:
            p = F.canonical_p
        else:
            row["fallback"] = f"γ−1−ℓ = {F.canonical_p} ≤ m = {F.m}，退回单项式曲线"
    row["p"] = p
    row["cor44"] = cor44_evaluate(F, p=p)

    certifier = DeformationCertifier(config)
    certificate = certifier.certify(family_parametrization(F, p=p),
                                    witnesses=bool(config.get("scan_witnesses", False)))
    row["verdict"] = certificate.verdict
    row["certificate"] = {
        "lemma21": certificate.lemma21.to_dict(),
        "prop29": certificate.prop29.to_dict(),
        "delta": certificate.delta,
        "truncation": certificate.truncation,
    }
    if certificate.value_semigroup is not None:
        row["certificate"]["value_semigroup"] = certificate.value_semigroup.verdict
    note = golden_note(a, b)
    if note is not None:
        row["note"] = note
    return row


def scan(a_range: Tuple[int, int], b_range: Tuple[int, int], mode: str = "monomial",
         config: Optional[Dict[str, Any]] = None, workers: int = 1) -> List[Dict[str, Any]]:
    """
    扫描 a ∈ a_range, b ∈ b_range

    Args:
        a_range, b_range: 闭区间
        mode: monomial 或 canonical_p
        config: stci 组件配置
        workers: 进程数，1 表示串行

    Returns:
        List[dict]: 按 (a,b) 排序的行，无效参数行带 skipped 原因
    """
    if mode not in MODES:
        raise InvalidParameters(f"未知扫描模式 {mode}，应为 {MODES}")
    for low, high in (a_range, b_range):
        if low > high or low < RANGE_LIMITS[0] or high > RANGE_LIMITS[1]:
            raise InvalidParameters(f"范围 {low}..{high} 必须落在 {RANGE_LIMITS[0]}..{RANGE_LIMITS[1]} 内")
    config = dict(config or {})
    jobs = [
        (a, b, mode, config)
        for a in range(a_range[0], a_range[1] + 1)
        for b in range(b_range[0], b_range[1] + 1)
    ]
    logger.info(f"扫描 {len(jobs)} 个参数对，模式 {mode}，进程数 {workers}")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            rows = list(executor.map(_scan_row, jobs))
    else:
        rows = [_scan_row(job) for job in jobs]
    for row in rows:
        if "skipped" in row:
            logger.debug(f"跳过 ({row['a']},{row['b']}): {row['skipped']}")
    return rows


def rows_to_jsonl(rows: Iterable[Dict[str, Any]]) -> str:
    """每行一个规范 JSON 对象"""
    return "".join(dumps_canonical(row, indent=None) + "\n" for row in rows)


def rows_to_csv(rows: Iterable[Dict[str, Any]]) -> str:
    """CSV 摘要，列见 CSV_COLUMNS"""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        if "skipped" in row:
            writer.writerow({"a": row["a"], "b": row["b"], "skipped": row["skipped"]})
            continue
        semigroup = row["instance"]["semigroup"]
        d1, d2, d3 = row["instance"]["degrees"]
        cor44 = row["cor44"]
        writer.writerow({
            "a": row["a"], "b": row["b"],
            "l": semigroup["l"], "m": semigroup["m"], "n": semigroup["n"],
            "gamma": row["instance"]["conductor"],
            "d1": d1, "d2": d2, "d3": d3,
            "p": "" if row["p"] is None else row["p"],
            "lemma43": row["lemma43"]["holds"],
            "cor44a": cor44["a"]["holds"],
            "cor44b": cor44["b"]["holds"],
            "cor44c": cor44["c"]["holds"],
            "verdict": row["verdict"],
            "moh": row["moh"],
            "skipped": "",
        })
    return buffer.getvalue()
