"""晶体图的 DOT 与 JSON 序列化。

两种格式都从 GraphDocument 渲染，因此 JSON 导入后可以原样再导出。
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

import pydot

from ..halfalg.element import format_word
from ..schemas import GraphDocument, GraphEdge, GraphNode
from .graph import CrystalGraph

logger = logging.getLogger(__name__)

FORMATS = ("dot", "json")


def graph_document(graph: CrystalGraph) -> GraphDocument:
    datum = graph.datum
    nodes = [
        GraphNode(
            id=n.id,
            weight=list(n.grade.coords),
            gen_word=[datum.label(i) for i in n.gen_word],
            unit=str(graph.path_unit(n.id)),
        )
        for n in graph.nodes
    ]
    edges = [GraphEdge(**{"from": e.source, "to": e.target, "color": datum.label(e.color)}) for e in graph.edges]
    return GraphDocument(
        datum=datum.to_document(),
        highest_weight="binf" if graph.is_binf else list(graph.lam.coords),
        nodes=nodes,
        edges=edges,
        eps={b: {datum.label(i): v for i, v in enumerate(vals)} for b, vals in graph.eps.items()},
        phi={b: {datum.label(i): v for i, v in enumerate(vals)} for b, vals in graph.phi.items()},
    )


def to_json(doc: GraphDocument) -> str:
    return doc.model_dump_json(by_alias=True, indent=2) + "\n"


def from_json(text: str) -> GraphDocument:
    """解析 JSON 晶体图文档。

    Raises:
        pydantic.ValidationError: 文档结构不符
    """
    return GraphDocument.model_validate_json(text)


def to_dot(doc: GraphDocument) -> str:
    """一个 digraph，节点编号即 DOT 节点名，边属性 label 为颜色。"""
    dot = pydot.Dot("crystal", graph_type="digraph")
    for node in doc.nodes:
        word = " ".join(f"f{c}" for c in node.gen_word) if node.gen_word else format_word(())
        dot.add_node(pydot.Node(node.id, label=f"{node.id}: {word}"))
    for edge in doc.edges:
        dot.add_edge(pydot.Edge(edge.from_, edge.to, label=edge.color))
    return dot.to_string()


def render(doc: GraphDocument, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(doc)
    if fmt == "json":
        return to_json(doc)
    raise ValueError(f"不支持的图格式 {fmt!r}，可选 {', '.join(FORMATS)}")


def export(graph: CrystalGraph, fmt: str) -> str:
    """晶体图 → 文档文本。"""
    return render(graph_document(graph), fmt)


def write_graph(graph: Union[CrystalGraph, GraphDocument], fmt: str, path: Union[str, Path]) -> Path:
    doc = graph if isinstance(graph, GraphDocument) else graph_document(graph)
    target = Path(path)
    target.write_text(render(doc, fmt), encoding="utf-8")
    logger.info("晶体图已写入 %s（%s）", target, fmt)
    return target
