"""Bounded enumeration of Syracuse predecessor trees.

Nodes at depth d are the odd integers whose d-th forward image is the
source. Gaps per edge are capped, multiples of 3 are sterile, and at
source 1 the root's own loop branch (gap 2) is kept as an annotation
rather than an edge, so the result is a genuine tree.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .caps import check_bits
from .collatz import _require_odd, h_children, syracuse
from .tuples import VTuple


@dataclass(frozen=True)
class EnumConfig:
    """Bounds for one enumeration run.

    t is the depth bound, s the span parameter: by default each expanded
    node receives the 3s gap values of the right parity up to 6s (the
    root at source 1 uses the even gaps in [4, 2+6s] instead). k_cap,
    when set, replaces those defaults with one uniform hard gap bound,
    which is what the breadth-first oracle uses.
    """

    source: int = 1
    t: int = 1
    s: int = 1
    k_cap: Optional[int] = None

    def __post_init__(self):
        _require_odd(self.source, "source")
        if self.source != 1 and self.source % 3 == 0:
            raise ValueError(f"source {self.source} is divisible by 3: sterile root")
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        if self.s < 1:
            raise ValueError(f"s must be >= 1, got {self.s}")
        if self.k_cap is not None and self.k_cap < 1:
            raise ValueError(f"k_cap must be >= 1, got {self.k_cap}")

    def gap_window(self, value: int, depth: int) -> range:
        if depth == 0 and self.source == 1:
            hi = self.k_cap if self.k_cap is not None else 2 + 6 * self.s
            return range(4, hi + 1, 2)
        hi = self.k_cap if self.k_cap is not None else 6 * self.s
        start = 2 if value % 3 == 1 else 1
        return range(start, hi + 1, 2)


@dataclass(frozen=True)
class TreeNode:
    """One enumerated value with the gap tuple of its run down to the source."""

    value: int
    vtuple: VTuple
    depth: int
    fertile: bool
    parent: Optional["TreeNode"] = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class EnumTree:
    """Finished enumeration: nodes in (depth, tuple-lexicographic) order."""

    config: EnumConfig
    nodes: tuple[TreeNode, ...]
    has_root_loop: bool

    @property
    def root(self) -> TreeNode:
        return self.nodes[0]

    def values(self) -> list[int]:
        return [node.value for node in self.nodes]


def _expand(node: TreeNode, cfg: EnumConfig) -> list[TreeNode]:
    if not node.fertile:
        return []
    out = []
    bits = node.value.bit_length()
    for k in cfg.gap_window(node.value, node.depth):
        check_bits(bits + k + 2, "tree expansion")
        child = (node.value * 2**k - 1) // 3
        out.append(
            TreeNode(
                value=child,
                vtuple=VTuple(node.depth + 1, node.vtuple.v + (k,)),
                depth=node.depth + 1,
                fertile=child % 3 != 0,
                parent=node,
            )
        )
    return out


def iter_nodes(cfg: EnumConfig, workers: int = 1) -> Iterator[TreeNode]:
    """Stream nodes in breadth-first order, each depth sorted by tuple.

    Worker threads only split up the expansion of a frontier; the node
    stream is identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    root = TreeNode(cfg.source, VTuple(0, ()), 0, cfg.source % 3 != 0, None)
    yield root
    frontier = [root]
    for _ in range(cfg.t):
        if workers > 1 and len(frontier) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                expanded = list(pool.map(lambda nd: _expand(nd, cfg), frontier))
        else:
            expanded = [_expand(nd, cfg) for nd in frontier]
        children = [child for chunk in expanded for child in chunk]
        children.sort(key=lambda nd: nd.vtuple.v)
        yield from children
        frontier = children


def enumerate_tree(cfg: EnumConfig, workers: int = 1) -> EnumTree:
    """Materialize the bounded tree; the root loop at source 1 is a flag."""
    return EnumTree(cfg, tuple(iter_nodes(cfg, workers)), cfg.source == 1)


def count_formula(t: int, s: int) -> int:
    """Node count of the bounded tree: 1 + 3s * sum_{i<t} (2s)^i.

    Evaluating the geometric sum termwise keeps s = 1 (ratio 1) exact
    without a special case.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    return 1 + 3 * s * sum((2 * s) ** i for i in range(t))


def verify_tree(tree: EnumTree) -> bool:
    """Structural soundness of an enumeration result.

    Checks the root is the source with no parent, every other node has
    exactly one parent and forward-maps onto it, and no value appears
    twice (the loop at a source of 1 is an annotation, never an edge).
    """
    nodes = tree.nodes
    if not nodes:
        return False
    root = nodes[0]
    if root.value != tree.config.source or root.parent is not None or root.depth != 0:
        return False
    for node in nodes[1:]:
        if node.parent is None:
            return False
        if syracuse(node.value) != node.parent.value:
            return False
        if node.depth != node.parent.depth + 1:
            return False
    values = [node.value for node in nodes]
    return len(set(values)) == len(values)


def preimage_bfs(source: int, depth: int, k_max: int) -> set[int]:
    """All odd m with f^(d)(m) = source for some d <= depth, gaps <= k_max.

    Independent oracle for enumerate_tree: walks the raw inverse
    branches of the forward map and never touches the tuple codec. The
    loop branch of 1 folds into the set, so the values of an
    enumeration with the matching uniform gap bound agree exactly.
    """
    _require_odd(source, "source")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    out = {source}
    frontier = [source]
    for _ in range(depth):
        nxt = []
        for value in frontier:
            check_bits(value.bit_length() + k_max + 2, "preimage expansion")
            for _k, child in h_children(value, k_max):
                if child not in out:
                    out.add(child)
                    nxt.append(child)
        frontier = nxt
    return out


def node_record(node: TreeNode) -> dict:
    """JSON-ready record for one node; shared with the CLI stream format."""
    return {
        "value": str(node.value),
        "depth": node.depth,
        "tuple": str(node.vtuple),
        "fertile": node.fertile,
    }
