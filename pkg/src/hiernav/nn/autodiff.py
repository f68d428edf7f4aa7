"""Tape-based reverse-mode differentiation over a small set of primitives.

Everything is float64.  Values are 1-D/2-D numpy arrays or python floats for
scalars; a Node records its value and a backward closure that scatters an
incoming gradient to its parents.  Nodes are appended in creation order,
which is already a topological order, so backward is a single reverse sweep.
Gradients accumulate across repeated backward calls on the same tape.
"""

from __future__ import annotations

import numpy as np


class AutodiffError(RuntimeError):
    pass


class Node:
    __slots__ = ("value", "grad", "bwd")

    def __init__(self, value, bwd=None):
        self.value = value
        self.grad = None
        self.bwd = bwd


def _acc(node: Node, g) -> None:
    if node.grad is None:
        if isinstance(node.value, np.ndarray):
            node.grad = np.zeros_like(node.value)
            node.grad += g
        else:
            node.grad = 0.0 + g
    else:
        node.grad += g


def stable_softmax(z: np.ndarray) -> np.ndarray:
    e = np.exp(z - z.max())
    return e / e.sum()


def stable_log_softmax(z: np.ndarray) -> np.ndarray:
    shifted = z - z.max()
    return shifted - np.log(np.exp(shifted).sum())


class Tape:
    """Records a forward computation for one backward sweep (or several)."""

    def __init__(self):
        self.nodes: list[Node] = []
        self._param_leaves: dict[str, Node] = {}
        self._ran_forward = False

    # --- leaves -----------------------------------------------------------

    def _push(self, value, bwd=None) -> Node:
        node = Node(value, bwd)
        self.nodes.append(node)
        self._ran_forward = True
        return node

    def param(self, params: dict[str, np.ndarray], name: str) -> Node:
        """Leaf for a named parameter array; one shared node per tape."""
        leaf = self._param_leaves.get(name)
        if leaf is None:
            leaf = self._push(params[name])
            self._param_leaves[name] = leaf
        return leaf

    def const(self, value) -> Node:
        """Leaf that needs no gradient (inputs, frozen context)."""
        return self._push(value)

    def param_grads(self) -> dict[str, np.ndarray]:
        return {name: leaf.grad for name, leaf in self._param_leaves.items()
                if leaf.grad is not None}

    # --- arithmetic -------------------------------------------------------

    def add(self, a: Node, b: Node) -> Node:
        def bwd(g):
            _acc(a, g)
            _acc(b, g)
        return self._push(a.value + b.value, bwd)

    def add_n(self, terms: list[Node]) -> Node:
        if not terms:
            raise AutodiffError("add_n of nothing")
        def bwd(g):
            for t in terms:
                _acc(t, g)
        total = terms[0].value
        for t in terms[1:]:
            total = total + t.value
        return self._push(total, bwd)

    def sub(self, a: Node, b: Node) -> Node:
        def bwd(g):
            _acc(a, g)
            _acc(b, -g)
        return self._push(a.value - b.value, bwd)

    def mul(self, a: Node, b: Node) -> Node:
        def bwd(g):
            _acc(a, g * b.value)
            _acc(b, g * a.value)
        return self._push(a.value * b.value, bwd)

    def scale(self, a: Node, k: float) -> Node:
        def bwd(g):
            _acc(a, g * k)
        return self._push(a.value * k, bwd)

    # --- linear algebra ----------------------------------------------------

    def matvec(self, w: Node, x: Node) -> Node:
        def bwd(g):
            _acc(w, np.outer(g, x.value))
            _acc(x, w.value.T @ g)
        return self._push(w.value @ x.value, bwd)

    def affine(self, w: Node, x: Node, b: Node) -> Node:
        def bwd(g):
            _acc(w, np.outer(g, x.value))
            _acc(x, w.value.T @ g)
            _acc(b, g)
        return self._push(w.value @ x.value + b.value, bwd)

    def dot(self, a: Node, b: Node) -> Node:
        def bwd(g):
            _acc(a, g * b.value)
            _acc(b, g * a.value)
        return self._push(float(a.value @ b.value), bwd)

    def sum(self, x: Node) -> Node:
        def bwd(g):
            _acc(x, np.full_like(x.value, g))
        return self._push(float(x.value.sum()), bwd)

    def concat(self, parts: list[Node]) -> Node:
        sizes = [p.value.shape[0] for p in parts]
        def bwd(g):
            off = 0
            for p, n in zip(parts, sizes):
                _acc(p, g[off:off + n])
                off += n
        return self._push(np.concatenate([p.value for p in parts]), bwd)

    def stack(self, scalars: list[Node]) -> Node:
        def bwd(g):
            for i, s in enumerate(scalars):
                _acc(s, float(g[i]))
        return self._push(np.array([s.value for s in scalars], dtype=np.float64), bwd)

    def embed(self, table: Node, index: int) -> Node:
        def bwd(g):
            if table.grad is None:
                table.grad = np.zeros_like(table.value)
            table.grad[index] += g
        return self._push(table.value[index].copy(), bwd)

    def mix_rows(self, weights: Node, rows: np.ndarray) -> Node:
        """Weighted sum of constant rows: rows.T @ weights."""
        def bwd(g):
            _acc(weights, rows @ g)
        return self._push(rows.T @ weights.value, bwd)

    # --- nonlinearities ------------------------------------------------------

    def sigmoid(self, x: Node) -> Node:
        z = x.value
        out = np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                       np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))
        def bwd(g):
            _acc(x, g * out * (1.0 - out))
        return self._push(out, bwd)

    def tanh(self, x: Node) -> Node:
        out = np.tanh(x.value)
        def bwd(g):
            _acc(x, g * (1.0 - out * out))
        return self._push(out, bwd)

    # --- distributions -------------------------------------------------------

    def softmax(self, logits: Node) -> Node:
        p = stable_softmax(logits.value)
        def bwd(g):
            _acc(logits, p * (g - float(g @ p)))
        return self._push(p, bwd)

    def cross_entropy(self, dist: Node, label: int) -> Node:
        p = max(float(dist.value[label]), 1e-300)
        def bwd(g):
            grad = np.zeros_like(dist.value)
            grad[label] = -g / p
            _acc(dist, grad)
        return self._push(-np.log(p), bwd)

    def softmax_cross_entropy(self, logits: Node, label: int) -> tuple[Node, np.ndarray]:
        """Fused -log softmax(logits)[label]; also returns detached probabilities."""
        p = stable_softmax(logits.value)
        logp = stable_log_softmax(logits.value)
        def bwd(g):
            grad = p.copy()
            grad[label] -= 1.0
            _acc(logits, g * grad)
        return self._push(-float(logp[label]), bwd), p

    def softmax_entropy(self, logits: Node) -> Node:
        p = stable_softmax(logits.value)
        logp = stable_log_softmax(logits.value)
        h = -float(p @ logp)
        def bwd(g):
            _acc(logits, g * (-p * (logp + h)))
        return self._push(h, bwd)

    def sqerr(self, x: Node, target) -> Node:
        """Sum of squared differences against a constant target."""
        diff = x.value - target
        def bwd(g):
            _acc(x, g * 2.0 * diff)
        if isinstance(diff, np.ndarray):
            return self._push(float((diff * diff).sum()), bwd)
        return self._push(diff * diff, bwd)

    # --- backward ------------------------------------------------------------

    def backward(self, loss: Node) -> None:
        """Reverse sweep from `loss`.

        Leaf gradients (parameters, constants) accumulate across calls;
        intermediate gradients are cleared first so every sweep propagates
        exactly its own contribution.
        """
        if not self._ran_forward:
            raise AutodiffError("backward called before any forward computation")
        if isinstance(loss.value, np.ndarray):
            raise AutodiffError("backward expects a scalar loss node")
        for node in self.nodes:
            if node.bwd is not None:
                node.grad = None
        _acc(loss, 1.0)
        # reversed creation order is a valid topological order
        for node in reversed(self.nodes):
            if node.grad is not None and node.bwd is not None:
                node.bwd(node.grad)
