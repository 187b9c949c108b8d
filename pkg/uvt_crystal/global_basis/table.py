"""全局基表格：JSON（GlobalBasisDocument）与 TSV。"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..cartan import CartanDatum
from ..schemas import GlobalBasisDocument, GlobalBasisGrade, GlobalBasisRow
from .solver import GlobalBasis

logger = logging.getLogger(__name__)

TABLE_FORMATS = ("tsv", "json")
TSV_HEADER = ("grade", "node", "monomial", "coeff", "t1_match")


def basis_document(basis: GlobalBasis, t1_matches: Optional[Dict[str, str]] = None) -> GlobalBasisDocument:
    grades: List[GlobalBasisGrade] = []
    for grade in basis.grades():
        labels = basis.slices[grade].labels(basis.space)
        rows = []
        for g in basis.by_grade(grade):
            pairs = [(m, str(c)) for m, c in zip(labels, g.monomial_coeffs) if c]
            rows.append(GlobalBasisRow(
                node=g.node,
                monomial_expansion=[m for m, _ in pairs],
                coeffs=[c for _, c in pairs],
                t1_match=None if t1_matches is None else t1_matches.get(g.node, "-"),
            ))
        grades.append(GlobalBasisGrade(grade=list(grade.coords), basis=rows))
    return GlobalBasisDocument(datum=basis.graph.datum.to_document(), grades=grades)


def partial_document(datum: CartanDatum, partial: Dict[str, object]) -> GlobalBasisDocument:
    """由 ConvergenceError.partial 构造不完整的表格。"""
    by_grade: Dict[tuple, List[GlobalBasisRow]] = {}
    for row in partial.get("rows", []):
        pairs = [(m, c) for m, c in zip(row["monomial_expansion"], row["coeffs"]) if c != "0"]
        by_grade.setdefault(tuple(row["grade"]), []).append(GlobalBasisRow(
            node=row["node"],
            monomial_expansion=[m for m, _ in pairs],
            coeffs=[c for _, c in pairs],
        ))
    grades = [GlobalBasisGrade(grade=list(g), basis=rows) for g, rows in by_grade.items()]
    return GlobalBasisDocument(datum=datum.to_document(), grades=grades, complete=False)


def to_tsv(doc: GlobalBasisDocument) -> str:
    """每个 (节点, 单项式) 一行。"""
    lines = ["\t".join(TSV_HEADER)]
    for grade in doc.grades:
        g = ",".join(str(x) for x in grade.grade)
        for row in grade.basis:
            match = row.t1_match if row.t1_match is not None else ""
            for mono, coeff in zip(row.monomial_expansion, row.coeffs):
                lines.append("\t".join((g, row.node, mono, coeff, match)))
    if not doc.complete:
        lines.append("# incomplete")
    return "\n".join(lines) + "\n"


def render_table(doc: GlobalBasisDocument, fmt: str) -> str:
    if fmt == "tsv":
        return to_tsv(doc)
    if fmt == "json":
        return doc.model_dump_json(indent=2) + "\n"
    raise ValueError(f"不支持的表格格式 {fmt!r}，可选 {', '.join(TABLE_FORMATS)}")


def write_table(doc: GlobalBasisDocument, fmt: str, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.write_text(render_table(doc, fmt), encoding="utf-8")
    logger.info("全局基表格已写入 %s（%s）", target, fmt)
    return target
