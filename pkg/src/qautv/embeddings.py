"""The embeddings Theta: V -> QAut(T_2,c) and phi: QAut(T_2,c) -> V."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import words as W
from .errors import InvalidDepth
from .qaut import QAutElement
from .thompson_v import VElement


# -- Theta ----------------------------------------------------------------

def _inorder_interior(leaves: list[str]) -> list[str]:
    """Interior vertices of the tree with these leaves, in in-order.

    For a full binary tree the in-order walk alternates leaf, interior, leaf,
    ..., leaf, so the i-th interior vertex sits between leaves i and i + 1.
    """
    inner = set(W.interior(leaves))
    out = []

    def walk(w):
        if w not in inner:
            return
        walk(w + "0")
        out.append(w)
        walk(w + "1")

    walk("")
    return out


def _omega(leaves: list[str]) -> dict[str, str]:
    """Leaves of the tree planted at vertex 0, left to right, onto X in order
    (in-order interior vertices, then the root of the big tree)."""
    planted = ["0" + a for a in W.left_to_right(leaves)]
    targets = ["0" + w for w in _inorder_interior(leaves)] + [""]
    return dict(zip(planted, targets))


def theta_from_pairs(pairs) -> QAutElement:
    """Theta computed from any (possibly unreduced) tree-pair table."""
    pairs = dict(pairs)
    omega_d = _omega(list(pairs))
    omega_r = _omega(list(pairs.values()))
    vertex_map = {omega_d["0" + a]: omega_r["0" + b] for a, b in pairs.items()}
    cones = {"0" + a: "0" + b for a, b in pairs.items()}
    depth = 1 + max(len(a) for a in pairs)

    def f(w):
        if w in vertex_map:
            return vertex_map[w]
        if w.startswith("1"):
            return w
        for i in range(1, len(w) + 1):
            b = cones.get(w[:i])
            if b is not None:
                return b + w[i:]
        raise AssertionError("unreachable")

    return QAutElement.from_function(f, depth)


def theta(v: VElement) -> QAutElement:
    return theta_from_pairs(v.pairs)


def elementary_expansion(pairs: dict[str, str], a: str) -> dict[str, str]:
    pairs = dict(pairs)
    b = pairs.pop(a)
    pairs[a + "0"] = b + "0"
    pairs[a + "1"] = b + "1"
    return pairs


def verify_theta_well_defined(v: VElement, expansions: int, seed=0) -> bool:
    """Theta of randomly unreduced representatives agrees with theta(v)."""
    if expansions < 1:
        raise ValueError("expansions must be >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    target = theta(v)
    pairs = dict(v.pairs)
    for _ in range(expansions):
        pairs = elementary_expansion(pairs, rng.choice(W.sort_words(pairs)))
        if theta_from_pairs(pairs) != target:
            return False
    return True


# -- phi ------------------------------------------------------------------

@dataclass(frozen=True)
class HatTree:
    """Caret replacement of every vertex of a finite tree."""

    source: tuple[str, ...]  # leaf antichain of the source tree

    def caret_address(self, w: str) -> str:
        return "".join("0" + bit for bit in w)

    def p_leaf(self, w: str) -> str:
        return self.caret_address(w) + "1"

    def n_leaf(self, w: str) -> str:
        return self.caret_address(w) + "0"

    def vertices(self) -> tuple[str, ...]:
        return W.interior(self.source) + tuple(self.source)

    @property
    def n_leaves(self) -> tuple[str, ...]:
        return tuple(self.n_leaf(w) for w in self.source)

    @property
    def p_leaves(self) -> tuple[str, ...]:
        return tuple(self.p_leaf(w) for w in self.vertices())

    def leaves(self) -> tuple[str, ...]:
        return W.sort_words(self.n_leaves + self.p_leaves)


def hat_table(v_part: dict[str, str], bijection: dict[str, str]) -> dict[str, str]:
    """Leaf bijection between the hat trees of a disjoint decomposition."""
    dom = HatTree(W.sort_words(v_part))
    ran = HatTree(W.sort_words(v_part.values()))
    for hat in (dom, ran):
        leaves = hat.leaves()
        assert len(leaves) == len(hat.vertices()) + len(hat.source)
        assert W.is_complete_antichain(leaves)
    table = {}
    for w, img in v_part.items():
        table[dom.n_leaf(w)] = ran.n_leaf(img)
        table[dom.p_leaf(w)] = ran.p_leaf(img)
    for w, img in bijection.items():
        table[dom.p_leaf(w)] = ran.p_leaf(img)
    return table


def phi(tau: QAutElement) -> VElement:
    return VElement._trusted(hat_table(tau.v_part, tau.bijection))


def verify_phi_well_defined(tau: QAutElement, depth: int) -> bool:
    """phi read off the refined disjoint decomposition at ``depth`` agrees
    with phi of the cutoff form."""
    if depth < tau.level:
        raise InvalidDepth(f"depth {depth} is below the cutoff level {tau.level}")
    v, b = tau.disjoint_decomposition(depth)
    return VElement._trusted(hat_table(v, b)) == phi(tau)
