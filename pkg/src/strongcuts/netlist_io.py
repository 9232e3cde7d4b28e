"""Circuit readers and the immutable DAG model.

Two input formats are understood: the combinational subset of ASCII AIGER
(``aag``) and a small edge-list format used for fixtures::

    # comment
    inputs: 0 1
    0 2
    1 2

Parallel edges (a gate reading the same signal twice) are merged into one
line, since severing the signal severs both occurrences.
"""

from __future__ import annotations

import enum
import heapq
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class NetlistError(ValueError):
    """Raised for malformed or unsupported circuit descriptions."""


class NodeKind(str, enum.Enum):
    PRIMARY_INPUT = "PrimaryInput"
    GATE = "Gate"


@dataclass(frozen=True)
class NodeRecord:
    id: int
    kind: NodeKind
    label: str | None = None


@dataclass(frozen=True)
class EdgeRecord:
    id: int
    tail: int
    head: int
    complemented: bool = False


@dataclass(frozen=True)
class Dag:
    """Subject graph: nodes, directed edges ("lines") and a topological order.

    Build instances with :func:`make_dag` (or a parser); the constructor
    does not validate.
    """

    nodes: tuple[NodeRecord, ...]
    edges: tuple[EdgeRecord, ...]
    fanins: tuple[tuple[int, ...], ...]
    fanouts: tuple[tuple[int, ...], ...]
    topo: tuple[int, ...]
    outputs: tuple[int, ...] = ()
    merged_edges: int = field(default=0, compare=False)

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        if not self.nodes:
            return 0
        return max(len(i) + len(o) for i, o in zip(self.fanins, self.fanouts))

    @property
    def inputs(self) -> tuple[int, ...]:
        return tuple(n.id for n in self.nodes if n.kind is NodeKind.PRIMARY_INPUT)

    @property
    def gates(self) -> tuple[int, ...]:
        return tuple(n.id for n in self.nodes if n.kind is NodeKind.GATE)

    def fanin_nodes(self, node: int) -> tuple[int, ...]:
        return tuple(self.edges[e].tail for e in self.fanins[node])

    def is_input(self, node: int) -> bool:
        return self.nodes[node].kind is NodeKind.PRIMARY_INPUT


def topological_order(dag: Dag) -> tuple[int, ...]:
    """Kahn's algorithm, always releasing the smallest ready node id first."""
    return _kahn(dag.node_count, [(e.tail, e.head) for e in dag.edges])


def _kahn(node_count: int, pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    indegree = [0] * node_count
    succ: list[list[int]] = [[] for _ in range(node_count)]
    for tail, head in pairs:
        succ[tail].append(head)
        indegree[head] += 1
    ready = [v for v in range(node_count) if indegree[v] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in succ[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != node_count:
        raise NetlistError("cycle detected")
    return tuple(order)


def make_dag(
    node_count: int,
    pairs: Iterable[tuple[int, int]],
    inputs: Iterable[int] | None = None,
    labels: Sequence[str | None] | None = None,
    complemented: Iterable[bool] | None = None,
    outputs: Iterable[int] = (),
) -> Dag:
    """Validate an edge list and freeze it into a :class:`Dag`.

    Duplicate ``(tail, head)`` pairs collapse onto the first occurrence.
    Zero-fanin nodes become primary inputs; nodes listed in ``inputs`` must
    have no fanins.
    """
    pairs = list(pairs)
    flags = list(complemented) if complemented is not None else [False] * len(pairs)
    if len(flags) != len(pairs):
        raise ValueError("one complement flag per edge required")

    edges: list[EdgeRecord] = []
    seen: set[tuple[int, int]] = set()
    merged = 0
    for (tail, head), comp in zip(pairs, flags):
        if not (0 <= tail < node_count and 0 <= head < node_count):
            raise NetlistError(f"dangling node id in edge ({tail}, {head})")
        if tail == head:
            raise NetlistError("cycle detected")
        if (tail, head) in seen:
            merged += 1
            continue
        seen.add((tail, head))
        edges.append(EdgeRecord(len(edges), tail, head, bool(comp)))

    fanins: list[list[int]] = [[] for _ in range(node_count)]
    fanouts: list[list[int]] = [[] for _ in range(node_count)]
    for e in edges:
        fanins[e.head].append(e.id)
        fanouts[e.tail].append(e.id)

    topo = _kahn(node_count, [(e.tail, e.head) for e in edges])
    declared = set(inputs) if inputs is not None else set()
    for v in declared:
        if not 0 <= v < node_count:
            raise NetlistError(f"dangling node id {v} in input declaration")
        if fanins[v]:
            raise NetlistError(f"declared input {v} has fanins")

    labels = list(labels) if labels is not None else [None] * node_count
    nodes = tuple(
        NodeRecord(
            v,
            NodeKind.PRIMARY_INPUT if not fanins[v] else NodeKind.GATE,
            labels[v],
        )
        for v in range(node_count)
    )
    return Dag(
        nodes=nodes,
        edges=tuple(edges),
        fanins=tuple(tuple(f) for f in fanins),
        fanouts=tuple(tuple(f) for f in fanouts),
        topo=topo,
        outputs=tuple(dict.fromkeys(outputs)),
        merged_edges=merged,
    )


def _as_text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise NetlistError(f"input is not valid UTF-8: {exc}") from None
    return data


def parse_edgelist(data: bytes | str) -> Dag:
    """Parse the ``inputs: ...`` + ``tail head`` fixture format."""
    text = _as_text(data)
    declared: list[int] | None = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("inputs:"):
            if declared is not None:
                raise NetlistError(f"line {lineno}: duplicate inputs declaration")
            try:
                declared = [int(tok) for tok in line[len("inputs:"):].split()]
            except ValueError:
                raise NetlistError(f"line {lineno}: bad input id") from None
            continue
        toks = line.split()
        if len(toks) != 2:
            raise NetlistError(f"line {lineno}: expected '<tail> <head>'")
        try:
            tail, head = int(toks[0]), int(toks[1])
        except ValueError:
            raise NetlistError(f"line {lineno}: non-integer node id") from None
        if tail < 0 or head < 0:
            raise NetlistError(f"line {lineno}: negative node id")
        pairs.append((tail, head))
    if declared is None:
        raise NetlistError("missing 'inputs:' declaration")

    mentioned = set(declared)
    for tail, head in pairs:
        mentioned.update((tail, head))
    node_count = max(mentioned) + 1 if mentioned else 0
    missing = sorted(set(range(node_count)) - mentioned)
    if missing:
        raise NetlistError(f"dangling node id {missing[0]} (ids must be dense)")
    return make_dag(node_count, pairs, inputs=declared)


def write_edgelist(dag: Dag) -> str:
    """Serialize to the edge-list format; :func:`parse_edgelist` inverts it
    for any DAG without labels or complement flags."""
    lines = ["inputs: " + " ".join(str(v) for v in dag.inputs)]
    lines.extend(f"{e.tail} {e.head}" for e in dag.edges)
    return "\n".join(lines) + "\n"


def parse_aiger(data: bytes | str) -> Dag:
    """Parse combinational ASCII AIGER.

    Inputs get node ids ``0..I-1`` and AND gates ``I..I+A-1`` in file order.
    If the constant literal is referenced, one extra primary input labelled
    ``const0`` is appended. Output literals become root candidates.
    """
    text = _as_text(data)
    lines = text.splitlines()
    if not lines:
        raise NetlistError("malformed header: empty input")
    header = lines[0].split()
    if len(header) < 6 or header[0] != "aag":
        raise NetlistError("malformed header: expected 'aag M I L O A'")
    try:
        fields = [int(tok) for tok in header[1:]]
    except ValueError:
        raise NetlistError("malformed header: non-integer field") from None
    if any(f < 0 for f in fields):
        raise NetlistError("malformed header: negative field")
    max_var, n_in, n_latch, n_out, n_and = fields[:5]
    if n_latch > 0 or any(fields[5:]):
        raise NetlistError("sequential input unsupported")
    if n_in + n_and > max_var:
        raise NetlistError("malformed header: I + A exceeds M")
    body = lines[1:]
    if len(body) < n_in + n_out + n_and:
        raise NetlistError("malformed body: truncated")

    def literal(tok: str, where: str) -> int:
        try:
            lit = int(tok)
        except ValueError:
            raise NetlistError(f"{where}: non-integer literal {tok!r}") from None
        if not 0 <= lit <= 2 * max_var + 1:
            raise NetlistError(f"{where}: literal {lit} out of range")
        return lit

    var_node: dict[int, int] = {}
    for i in range(n_in):
        toks = body[i].split()
        if len(toks) != 1:
            raise NetlistError(f"input {i}: expected one literal")
        lit = literal(toks[0], f"input {i}")
        if lit < 2 or lit & 1 or lit >> 1 in var_node:
            raise NetlistError(f"input {i}: invalid input literal {lit}")
        var_node[lit >> 1] = i

    out_lits = []
    for j in range(n_out):
        toks = body[n_in + j].split()
        if len(toks) != 1:
            raise NetlistError(f"output {j}: expected one literal")
        out_lits.append(literal(toks[0], f"output {j}"))

    ands = []
    for a in range(n_and):
        toks = body[n_in + n_out + a].split()
        if len(toks) != 3:
            raise NetlistError(f"and {a}: expected three literals")
        lhs, rhs0, rhs1 = (literal(t, f"and {a}") for t in toks)
        if lhs < 2 or lhs & 1 or lhs >> 1 in var_node:
            raise NetlistError(f"and {a}: invalid left-hand literal {lhs}")
        var_node[lhs >> 1] = n_in + a
        ands.append((rhs0, rhs1))

    referenced = [l for pair in ands for l in pair] + out_lits
    const_node = None
    node_count = n_in + n_and
    if any(l >> 1 == 0 for l in referenced):
        const_node = node_count
        node_count += 1
        var_node[0] = const_node
    for lit in referenced:
        if lit >> 1 not in var_node:
            raise NetlistError(f"literal {lit} refers to an undefined variable")

    labels: list[str | None] = [None] * node_count
    if const_node is not None:
        labels[const_node] = "const0"
    for raw in body[n_in + n_out + n_and:]:
        if raw.startswith("c"):
            break
        toks = raw.split(maxsplit=1)
        if len(toks) == 2 and toks[0][:1] == "i" and toks[0][1:].isdigit():
            idx = int(toks[0][1:])
            if idx < n_in:
                labels[idx] = toks[1]

    pairs, flags = [], []
    for a, (rhs0, rhs1) in enumerate(ands):
        for lit in (rhs0, rhs1):
            pairs.append((var_node[lit >> 1], n_in + a))
            flags.append(bool(lit & 1))
    try:
        dag = make_dag(
            node_count,
            pairs,
            inputs=[*range(n_in), *([const_node] if const_node is not None else [])],
            labels=labels,
            complemented=flags,
            outputs=[var_node[l >> 1] for l in out_lits],
        )
    except NetlistError as exc:
        if str(exc) == "cycle detected":
            raise NetlistError("cyclic AND definitions") from None
        raise
    return dag


def write_aiger(dag: Dag) -> str:
    """Serialize to ASCII AIGER.

    Inputs take variables ``1..I`` in id order and gates follow in id
    order. A gate with one fanin is written as an AND of that literal with
    itself (which the reader merges back into one line). A primary input
    labelled ``const0`` becomes the constant literal.
    """
    var: dict[int, int] = {}
    inputs = []
    for v in dag.inputs:
        if dag.nodes[v].label == "const0":
            var[v] = 0
        else:
            inputs.append(v)
            var[v] = len(inputs)
    gates = dag.gates
    for i, g in enumerate(gates):
        var[g] = len(inputs) + 1 + i
    ands = []
    for g in gates:
        lits = [2 * var[dag.edges[e].tail] + dag.edges[e].complemented for e in dag.fanins[g]]
        if len(lits) > 2:
            raise NetlistError(f"gate {g} has {len(lits)} fanins; AIGER allows 2")
        if len(lits) == 1:
            lits *= 2
        ands.append(f"{2 * var[g]} {lits[0]} {lits[1]}")
    max_var = len(inputs) + len(gates)
    out = [f"aag {max_var} {len(inputs)} 0 {len(dag.outputs)} {len(gates)}"]
    out.extend(str(2 * var[v]) for v in inputs)
    out.extend(str(2 * var[v]) for v in dag.outputs)
    out.extend(ands)
    out.extend(f"i{i} {dag.nodes[v].label}" for i, v in enumerate(inputs) if dag.nodes[v].label)
    return "\n".join(out) + "\n"


def dag_to_json(dag: Dag) -> str:
    """Lossless serialization (labels, complement flags, outputs)."""
    return json.dumps(
        {
            "nodes": [[n.id, n.kind.value, n.label] for n in dag.nodes],
            "edges": [[e.tail, e.head, e.complemented] for e in dag.edges],
            "outputs": list(dag.outputs),
        },
        separators=(",", ":"),
    )


def dag_from_json(text: bytes | str) -> Dag:
    try:
        doc = json.loads(_as_text(text))
        nodes = doc["nodes"]
        edges = doc["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise NetlistError(f"bad DAG document: {exc}") from None
    return make_dag(
        len(nodes),
        [(t, h) for t, h, _ in edges],
        inputs=[v for v, kind, _ in nodes if kind == NodeKind.PRIMARY_INPUT.value],
        labels=[label for _, _, label in nodes],
        complemented=[c for _, _, c in edges],
        outputs=doc.get("outputs", ()),
    )


def read_circuit(path: str) -> Dag:
    """Dispatch on file contents: an ``aag`` header selects AIGER."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data.lstrip().startswith(b"aag"):
        return parse_aiger(data)
    if data.lstrip().startswith(b"aig"):
        raise NetlistError("binary AIGER is not supported; convert to 'aag'")
    return parse_edgelist(data)
