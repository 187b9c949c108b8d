"""输入输出文档的数据模型定义"""

from __future__ import annotations

from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, field_validator


class PairingEntry(BaseModel):
    """某个基本权 Λ_j 的配对值，按指标顺序给出"""

    left: List[str] = Field(..., description="⟨i, Λ_j⟩，形如 \"1/3\" 的有理数串")
    right: List[str] = Field(..., description="⟨Λ_j, i⟩")


class DatumDocument(BaseModel):
    """Cartan 数据输入文档"""

    model_config = ConfigDict(extra="forbid")

    Lambda: List[List[StrictInt]] = Field(..., description="整数矩阵 Λ_ij")
    labels: Optional[List[str]] = Field(default=None, description="指标名称")
    pairings: Optional[Dict[str, PairingEntry]] = Field(
        default=None, description="GCM 退化时由用户给出的基本权配对值，键为指标名称"
    )


class GraphNode(BaseModel):
    """晶体图节点"""

    id: str = Field(..., description="稳定的节点编号")
    weight: List[int] = Field(..., description="根格坐标 ξ")
    gen_word: List[str] = Field(default_factory=list, description="生成该节点的 f̃ 序列（指标名称）")
    unit: str = Field(default="1", description="规范代表元相对生成路径的单位 ±t^{k/D}")


class GraphEdge(BaseModel):
    """着色边 b → f̃_i b"""

    model_config = ConfigDict(populate_by_name=True)

    from_: str = Field(..., alias="from")
    to: str
    color: str


class GraphDocument(BaseModel):
    """晶体图 JSON 文档"""

    datum: DatumDocument
    highest_weight: Union[List[int], str] = Field(..., description="最高权坐标，或 \"binf\"")
    nodes: List[GraphNode] = Field(default_factory=list)
    edges: List[GraphEdge] = Field(default_factory=list)
    eps: Dict[str, Dict[str, int]] = Field(default_factory=dict)
    phi: Dict[str, Dict[str, int]] = Field(default_factory=dict)

    @field_validator("highest_weight")
    @classmethod
    def _binf_only(cls, value: Union[List[int], str]) -> Union[List[int], str]:
        if isinstance(value, str) and value != "binf":
            raise ValueError(f"highest_weight 只能是坐标列表或 \"binf\"，得到 {value!r}")
        return value


class GlobalBasisRow(BaseModel):
    """一个 G(b) 在分次单项式上的展开"""

    node: str
    monomial_expansion: List[str] = Field(default_factory=list, description="分次幂单项式，如 \"f1^(2) f2\"")
    coeffs: List[str] = Field(default_factory=list, description="对应系数的规范字符串")
    t1_match: Optional[str] = Field(default=None, description="t=1 对照结果")


class GlobalBasisGrade(BaseModel):
    grade: List[int]
    basis: List[GlobalBasisRow] = Field(default_factory=list)


class GlobalBasisDocument(BaseModel):
    """全局基表格 JSON 文档"""

    datum: DatumDocument
    grades: List[GlobalBasisGrade] = Field(default_factory=list)
    complete: bool = Field(default=True, description="求解器未收敛时为 False")


class CheckReport(BaseModel):
    """单个检查套件的结果"""

    suite: str
    passed: bool
    checked: int = Field(default=0, description="检查过的实例数")
    message: str = ""
    counterexample: Optional[Dict[str, object]] = None
