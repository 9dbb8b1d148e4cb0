"""Causal graph data model, DAG checks, comparison metrics, and renderers.

Nodes are the integer indices ``0..n-1``; human-readable names live in
:class:`~cdagents.data.MetaData` and are only joined in at rendering time.
A graph in ``cpdag`` mode may contain a mutual pair ``(i, j)`` and ``(j, i)``,
which denotes a single undirected edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .data import MetaData

DAG = "dag"
CPDAG = "cpdag"


@dataclass(frozen=True)
class CausalGraph:
    """A directed graph over ``n_nodes`` integer-indexed variables.

    Parameters
    ----------
    n_nodes : number of variables.
    edges : ordered pairs ``(i, j)`` meaning an edge i -> j.
    weights : optional coefficients keyed by existing edges.
    mode : ``"dag"`` or ``"cpdag"``.
    """

    n_nodes: int
    edges: frozenset = frozenset()
    weights: Mapping = field(default_factory=dict)
    mode: str = DAG

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        object.__setattr__(self, "weights", dict(self.weights))
        if self.n_nodes < 0:
            raise ValueError("n_nodes must be non-negative")
        if self.mode not in (DAG, CPDAG):
            raise ValueError(f"mode must be '{DAG}' or '{CPDAG}', got {self.mode!r}")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            if not (0 <= i < self.n_nodes and 0 <= j < self.n_nodes):
                raise ValueError(f"edge ({i}, {j}) outside node range")
        for e in self.weights:
            if tuple(e) not in self.edges:
                raise ValueError(f"weight keyed by missing edge {e}")

    @property
    def nodes(self) -> range:
        return range(self.n_nodes)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def undirected_pairs(self) -> set:
        """Mutual pairs ``{(i, j): i < j}`` standing for undirected edges."""
        return {(i, j) for (i, j) in self.edges if i < j and (j, i) in self.edges}

    def directed_edges(self) -> set:
        """Edges whose reverse is absent (the oriented part of a CPDAG)."""
        return {(i, j) for (i, j) in self.edges if (j, i) not in self.edges}

    def parents(self, j: int) -> set:
        return {i for (i, k) in self.edges if k == j}

    def replace(self, **kwargs) -> "CausalGraph":
        base = {
            "n_nodes": self.n_nodes,
            "edges": self.edges,
            "weights": self.weights,
            "mode": self.mode,
        }
        base.update(kwargs)
        return CausalGraph(**base)


def topological_order(n_nodes: int, edges: Iterable) -> list | None:
    """Kahn topological sort; returns None when the edges contain a cycle."""
    out = {i: [] for i in range(n_nodes)}
    indeg = [0] * n_nodes
    for i, j in edges:
        out[i].append(j)
        indeg[j] += 1
    ready = sorted(i for i in range(n_nodes) if indeg[i] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in sorted(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
        ready.sort()
    return order if len(order) == n_nodes else None


def is_dag(graph: CausalGraph) -> bool:
    """True iff the directed edges admit a topological order."""
    return topological_order(graph.n_nodes, graph.edges) is not None


def find_cycle(n_nodes: int, edges: Iterable) -> list | None:
    """Return one directed cycle as a node list ``[a, b, ..., a]``, or None.

    Deterministic: starts from the lowest node index and follows sorted
    successor lists.
    """
    out = {i: [] for i in range(n_nodes)}
    for i, j in edges:
        out[i].append(j)
    for i in out:
        out[i].sort()
    color = [0] * n_nodes  # 0 unvisited, 1 on stack, 2 done
    stack: list[tuple[int, int]] = []

    for start in range(n_nodes):
        if color[start] != 0:
            continue
        path = [start]
        color[start] = 1
        stack = [(start, 0)]
        while stack:
            v, k = stack[-1]
            if k < len(out[v]):
                stack[-1] = (v, k + 1)
                w = out[v][k]
                if color[w] == 1:
                    cycle = path[path.index(w):] + [w]
                    return cycle
                if color[w] == 0:
                    color[w] = 1
                    path.append(w)
                    stack.append((w, 0))
            else:
                color[v] = 2
                path.pop()
                stack.pop()
    return None


def _check_same_nodes(pred: CausalGraph, truth: CausalGraph) -> int:
    if pred.n_nodes != truth.n_nodes:
        raise ValueError(
            f"node-set mismatch: {pred.n_nodes} vs {truth.n_nodes} nodes"
        )
    return pred.n_nodes


def shd(pred: CausalGraph, truth: CausalGraph) -> int:
    """Structural Hamming distance.

    Counts edge additions, deletions, and reversals needed to turn ``pred``
    into ``truth``; a reversal counts as one operation.
    """
    n = _check_same_nodes(pred, truth)
    dist = 0
    for i in range(n):
        for j in range(i + 1, n):
            a = pred.edges & {(i, j), (j, i)}
            b = truth.edges & {(i, j), (j, i)}
            if a == b:
                continue
            if len(a) == 1 and len(b) == 1:
                dist += 1  # reversal
            else:
                dist += len(a ^ b)
    return dist


def nhd(pred: CausalGraph, truth: CausalGraph) -> float:
    """SHD normalized by the squared node count."""
    n = _check_same_nodes(pred, truth)
    if n < 1:
        raise ValueError("nhd needs at least one node")
    return shd(pred, truth) / (n * n)


@dataclass(frozen=True)
class GraphMetrics:
    """Edge-level comparison scores between a predicted and a true graph.

    ``degenerate`` flags ratios whose denominator was zero and which were
    filled with 0.0 so metric tables always render.
    """

    precision: float
    recall: float
    f1: float
    fpr: float
    shd: int
    nhd: float
    degenerate: bool = False

    def as_dict(self) -> dict:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "fpr": self.fpr,
            "shd": self.shd,
            "nhd": self.nhd,
            "degenerate": self.degenerate,
        }


def confusion_metrics(pred: CausalGraph, truth: CausalGraph) -> GraphMetrics:
    """Precision, recall, F1, and FPR over ordered non-self node pairs.

    FPR uses the ordered non-edges of the truth as its denominator.
    """
    n = _check_same_nodes(pred, truth)
    tp = len(pred.edges & truth.edges)
    fp = len(pred.edges - truth.edges)
    fn = len(truth.edges - pred.edges)
    degenerate = False

    if tp + fp > 0:
        precision = tp / (tp + fp)
    else:
        precision, degenerate = 0.0, True
    if tp + fn > 0:
        recall = tp / (tp + fn)
    else:
        recall, degenerate = 0.0, True
    if precision + recall > 0:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1, degenerate = 0.0, True

    non_edges = n * (n - 1) - len(truth.edges)
    if non_edges > 0:
        fpr = fp / non_edges
    else:
        fpr, degenerate = 0.0, True

    return GraphMetrics(
        precision=precision,
        recall=recall,
        f1=f1,
        fpr=fpr,
        shd=shd(pred, truth),
        nhd=nhd(pred, truth),
        degenerate=degenerate,
    )


def to_adjacency_list_text(graph: CausalGraph, meta: MetaData) -> str:
    """Render edges one per line as ``name_i -> name_j``, weights appended.

    Deterministic: lines sorted by the index pair. An empty graph renders as
    the literal line ``No edges.`` so prompts never contain a blank section.
    """
    if len(meta.names) < graph.n_nodes:
        raise ValueError("metadata does not name every node")
    if not graph.edges:
        return "No edges."
    lines = []
    for i, j in sorted(graph.edges):
        line = f"{meta.names[i]} -> {meta.names[j]}"
        if (i, j) in graph.weights:
            line += f" (coef: {round(float(graph.weights[(i, j)]), 4)})"
        lines.append(line)
    return "\n".join(lines)


def graph_to_json(graph: CausalGraph, names: Iterable[str]) -> dict:
    """JSON-ready dict: names under "nodes", index-based edge records."""
    names = list(names)
    if len(names) < graph.n_nodes:
        raise ValueError("names do not cover every node")
    edges = []
    for i, j in sorted(graph.edges):
        rec = {"from": i, "to": j}
        if (i, j) in graph.weights:
            rec["weight"] = float(graph.weights[(i, j)])
        edges.append(rec)
    return {"nodes": names[: graph.n_nodes], "edges": edges, "mode": graph.mode}


def graph_from_json(doc: Mapping) -> tuple[CausalGraph, list]:
    """Inverse of :func:`graph_to_json`; returns the graph and its names."""
    names = list(doc["nodes"])
    edges = set()
    weights = {}
    for rec in doc.get("edges", []):
        e = (int(rec["from"]), int(rec["to"]))
        edges.add(e)
        if "weight" in rec and rec["weight"] is not None:
            weights[e] = float(rec["weight"])
    graph = CausalGraph(
        n_nodes=len(names),
        edges=frozenset(edges),
        weights=weights,
        mode=doc.get("mode", DAG),
    )
    return graph, names


def to_dot(graph: CausalGraph, meta: MetaData) -> str:
    """DOT digraph with variable names as node labels."""
    lines = ["digraph causal {"]
    for i in graph.nodes:
        lines.append(f'  n{i} [label="{meta.names[i]}"];')
    for i, j in sorted(graph.edges):
        attrs = ""
        if (i, j) in graph.weights:
            attrs = f' [label="{round(float(graph.weights[(i, j)]), 4)}"]'
        lines.append(f"  n{i} -> n{j}{attrs};")
    lines.append("}")
    return "\n".join(lines)
