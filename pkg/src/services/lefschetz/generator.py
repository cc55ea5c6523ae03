# src/services/lefschetz/generator.py
"""
夹具的生成、读取与写出

JSON 格式（权重均为未加倍的原始值）：
  {"m", "ambientWeights" | "components", "n", "spincC1", "qOrder", "normalize", "V"}
"""

import os
from math import isqrt
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ...characteristic import LineSummand
from ...common.exceptions import FixtureParseError, InfeasibleParams, VerifyError
from ...common.states import FixtureFamily
from ...utils import info, read_json, write_json
from .model import (
    FixedComponent,
    FixedPointData,
    LinearModelSpec,
    VAssignment,
    double,
    isolated_component,
    linear_model,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    data: FixedPointData
    q_order: Optional[int] = None
    v: VAssignment = field(default_factory=VAssignment)
    spec: Optional[LinearModelSpec] = None
    family: Optional[FixtureFamily] = None


# ---------- 序列化 ----------
def fixture_to_dict(fixture: Fixture) -> Dict[str, Any]:
    data = fixture.data
    if fixture.spec is not None:
        document: Dict[str, Any] = {
            "m": fixture.spec.m,
            "ambientWeights": list(fixture.spec.ambient_weights),
            "normalize": fixture.spec.normalize,
            "allowRepeated": fixture.spec.allow_repeated,
            "n": data.n,
            "spincC1": data.spinc_c1,
        }
    else:
        document = data.to_json()
    if fixture.q_order is not None:
        document["qOrder"] = fixture.q_order
    if fixture.family is not None:
        document["family"] = fixture.family.value
    if not fixture.v.is_empty():
        document["V"] = fixture.v.to_json()
    return document


def _component_from_dict(entry: Dict[str, Any]) -> FixedComponent:
    weights = [int(w) for w in entry["normalWeights"]]
    roots = [int(r) for r in entry.get("normalRoots", [-1] * len(weights))]
    if len(roots) != len(weights):
        raise FixtureParseError(f"normalRoots 与 normalWeights 长度不一致: {entry}")
    return FixedComponent(
        d=int(entry.get("d", 0)),
        normal=tuple(LineSummand(r, double(w)) for r, w in zip(roots, weights)),
        gamma_weight=double(entry["gammaWeight"]),
        spinc_weight=double(entry.get("spincWeight", 0)),
        orientation=int(entry.get("orientation", 1)),
    )


def fixture_from_dict(document: Dict[str, Any], name: str = "fixture") -> Fixture:
    """
    Raises:
        FixtureParseError: 缺少字段、类型错误或不满足数据模型约束
    """
    try:
        m = int(document["m"])
        c1 = document.get("spincC1")
        spec = None
        if "ambientWeights" in document:
            spec = LinearModelSpec(
                m=m,
                ambient_weights=tuple(int(a) for a in document["ambientWeights"]),
                normalize=bool(document.get("normalize", False)),
                allow_repeated=bool(document.get("allowRepeated", False)),
                spinc_c1=None if c1 is None else int(c1),
            )
            data = linear_model(spec)
            if "n" in document and int(document["n"]) != data.n:
                data = FixedPointData(data.m, data.components, int(document["n"]), data.spinc_c1)
        elif "components" in document:
            data = FixedPointData(
                m=m,
                components=tuple(_component_from_dict(c) for c in document["components"]),
                n=int(document["n"]),
                spinc_c1=m + 1 if c1 is None else int(c1),
            )
        else:
            raise FixtureParseError(f"{name}: 需要 ambientWeights 或 components")
        v = VAssignment.from_terms(
            (int(t["gammaPower"]), int(t.get("character", 0)), int(t.get("multiplicity", 1)))
            for t in document.get("V", [])
        )
        q_order = document.get("qOrder")
        family = document.get("family")
        return Fixture(
            name=name,
            data=data,
            q_order=None if q_order is None else int(q_order),
            v=v,
            spec=spec,
            family=None if family is None else FixtureFamily(family),
        )
    except FixtureParseError:
        raise
    except (KeyError, TypeError, ValueError, VerifyError) as e:
        raise FixtureParseError(f"{name}: 夹具不合法: {type(e).__name__}: {e}") from e


def load_fixture(path: str) -> Fixture:
    name = os.path.splitext(os.path.basename(path))[0]
    return fixture_from_dict(read_json(path), name)


def dump_fixture(fixture: Fixture, path: str) -> str:
    return write_json(path, fixture_to_dict(fixture))


# ---------- 线性族 ----------
def linear_family(m: int, max_weight: int, q_order: Optional[int] = None) -> List[Fixture]:
    """
    a_0 = 0，其余权重在 [−W, W] 中两两不同且非零，Σa ≡ 0 mod (m+1)，
    且平移量 Σa/(m+1) 本身是某个 a_j（归一化后有 γ 权重为 0 的分支）
    在置换 a_1..a_m 与整体取负意义下去重

    Raises:
        InfeasibleParams: 没有满足条件的权重向量
    """
    if m < 1 or max_weight < 1:
        raise InfeasibleParams(f"线性族参数不合法: m={m}, maxWeight={max_weight}")
    pool = [w for w in range(-max_weight, max_weight + 1) if w != 0]
    fixtures = []
    for chosen in combinations(pool, m):
        if sum(chosen) % (m + 1):
            continue
        negated = tuple(sorted(-w for w in chosen))
        if negated < chosen:
            continue
        weights = (0,) + chosen
        spec = LinearModelSpec(m=m, ambient_weights=weights, normalize=True)
        if spec.shift() not in weights:
            continue
        label = "_".join(str(w) for w in weights)
        fixtures.append(
            Fixture(
                name=f"linear_m{m}_{label}",
                data=linear_model(spec),
                q_order=q_order,
                spec=spec,
                family=FixtureFamily.LINEAR,
            )
        )
    if not fixtures:
        raise InfeasibleParams(f"m={m}, maxWeight={max_weight} 时没有可用的线性权重")
    return fixtures


# ---------- (∗) 求解 ----------
def alternating_weights(m: int) -> Tuple[int, ...]:
    """0, 1, −1, 2, −2, …（共 m+1 个）"""
    weights = [0]
    k = 1
    while len(weights) < m + 1:
        weights.append(k)
        if len(weights) < m + 1:
            weights.append(-k)
        k += 1
    return tuple(weights)


@lru_cache(maxsize=None)
def nonzero_squares(total: int, count: int, max_root: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """把 total 写成 count 个正整数平方之和（根不增），不存在时返回 None"""
    if count == 0:
        return () if total == 0 else None
    if total < count:
        return None
    root = isqrt(total)
    if max_root is not None:
        root = min(root, max_root)
    for r in range(root, 0, -1):
        rest = nonzero_squares(total - r * r, count - 1, r)
        if rest is not None:
            return (r,) + rest
    return None


def solve_star(
    m: int, n: int, gamma: Sequence[int], minimum: int, search_limit: int
) -> Tuple[int, List[Tuple[int, ...]]]:
    """
    求最小的 C ≥ minimum（C ≡ Σ_{i≥1} a_i² mod 2），使每个 C − n·a_Y² 都是 m 个非零平方和

    Raises:
        InfeasibleParams: 搜索上限内无解
    """
    parity = sum(a * a for a in gamma[1:]) % 2
    c = minimum + ((minimum - parity) % 2)
    while c <= minimum + search_limit:
        solutions = [nonzero_squares(c - n * a * a, m) for a in gamma]
        if all(s is not None for s in solutions):
            return c, solutions
        c += 2
    raise InfeasibleParams(f"m={m}, n={n} 在 C ≤ {minimum + search_limit} 内无 (∗) 解")


def _star_fixture(
    m: int, n: int, minimum_extra: int, family: FixtureFamily, search_limit: int
) -> Fixture:
    gamma = alternating_weights(m)
    minimum = m + max(max(n * a * a for a in gamma), 0)
    if family is FixtureFamily.PETRIE_EDGE:
        minimum = max(minimum, sum(a * a for a in gamma[1:]) + minimum_extra)
    c, solutions = solve_star(m, n, gamma, minimum, search_limit)
    c1 = m + 1
    components = tuple(
        isolated_component(normal, a, c1 * a, orientation=(-1) ** (m % 2))
        for a, normal in zip(gamma, solutions)
    )
    data = FixedPointData(m=m, components=components, n=n, spinc_c1=c1)
    info(f"(∗) 求解完成: family={family.value}, m={m}, n={n}, C={c}")
    return Fixture(name=f"{family.value.replace('-', '_')}_m{m}_n{n}", data=data, family=family)


def synthetic_star(m: int, n: int, search_limit: int = 400) -> Fixture:
    """按构造满足 (∗) 的孤立不动点数据"""
    if m < 1:
        raise InfeasibleParams(f"维数必须为正: {m}")
    return _star_fixture(m, n, 0, FixtureFamily.SYNTHETIC_STAR, search_limit)


def petrie_edge(m: int, n: int, search_limit: int = 400) -> Fixture:
    """满足 (∗) 且 I_{Y_0} < 0 的数据：C ≥ Σ_{i≥1} a_i² + 2"""
    if m < 1:
        raise InfeasibleParams(f"维数必须为正: {m}")
    return _star_fixture(m, n, 2, FixtureFamily.PETRIE_EDGE, search_limit)


def generate_fixtures(
    family: FixtureFamily, params: Dict[str, Any], output_dir: str
) -> List[str]:
    """
    生成一族夹具，每个夹具一个文件，另写 index.json

    Raises:
        InfeasibleParams: 参数不可行
    """
    m = int(params["m"])
    search_limit = int(params.get("search_limit", 400))
    if family is FixtureFamily.LINEAR:
        fixtures = linear_family(m, int(params.get("max_weight", 3)), params.get("q_order"))
    elif family is FixtureFamily.SYNTHETIC_STAR:
        fixtures = [synthetic_star(m, int(params["n"]), search_limit)]
    elif family is FixtureFamily.PETRIE_EDGE:
        fixtures = [petrie_edge(m, int(params["n"]), search_limit)]
    else:
        raise InfeasibleParams(f"未知的夹具族: {family}")

    paths = []
    for fixture in fixtures:
        path = os.path.join(output_dir, f"{fixture.name}.json")
        dump_fixture(fixture, path)
        paths.append(path)
    write_json(
        os.path.join(output_dir, "index.json"),
        {"family": family.value, "params": params, "fixtures": [os.path.basename(p) for p in paths]},
    )
    info(f"📦 已生成 {len(paths)} 个夹具 → {output_dir}")
    return paths
