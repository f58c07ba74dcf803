"""zeta-crystal bases of tensor powers of the natural representation.

Two independent routes to the Kashiwara operators:

* the matrix oracle: exact i-string decomposition v = sum_s F_i^{(s)} u_s with
  E_i u_s = 0, then E~_i v = sum F_i^{(s-1)} u_s and F~_i v = sum F_i^{(s+1)} u_s;
* the combinatorial tensor rule on words (signature rule), where 0-arrows
  pick up the zeta-power parameter of the factor they act on.

Mod qL the oracle image of a word is zeta^k times a word, or 0, and the two
routes agree.  Signature rule, tensor factors read left to right: a factor
holding letter x contributes '-' if E_i acts on it and '+' if F_i does;
adjacent '+-' pairs cancel; F~_i acts on the leftmost surviving '+', E~_i on
the rightmost surviving '-'.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import content_of, maj, words_with_content
from .linalg import nullspace, rref
from .natrep import EvalParams, ModuleVector, _add, act_terms, act_word
from .ratfunc import FieldElem, q_factorial

_OPS = {"E": "E", "F": "F", "Et": "E", "Ft": "F", "e": "E", "f": "F"}


def _op(op: str) -> str:
    try:
        return _OPS[op]
    except KeyError:
        raise ValueError(f"unknown Kashiwara operator {op!r}") from None


def _letters(i: int, n: int):
    """(letter E_i acts on, letter F_i acts on)."""
    return i, (i - 1) % (n + 1)


def _scale(terms: dict, c) -> dict:
    if c.is_zero():
        return {}
    return {w: x * c for w, x in terms.items()}


def _combine(acc: dict, terms: dict, c):
    if c.is_zero():
        return
    for w, x in terms.items():
        _add(acc, w, x * c)


@dataclass
class StringDecomp:
    i: int
    t_shift: int
    components: list  # (s, u_s)

    def reconstruct(self) -> ModuleVector:
        out = None
        for s, u in self.components:
            terms = u.terms
            for _ in range(s):
                terms = act_terms(u.ctx, "F", self.i, terms)
            img = ModuleVector._raw(u.ctx, _scale(terms, q_factorial(u.ctx.m, s).inverse()))
            out = img if out is None else out + img
        return out


class _StringData:
    """i-string data for one weight space: kernel vectors and solved coordinates."""

    def __init__(self, ctx: EvalParams, i: int, comp):
        n, m = ctx.n, ctx.m
        e_letter, f_letter = _letters(i, n)
        comp = tuple(comp)
        self.i = i
        self.t = comp[f_letter] - comp[e_letter]
        self.basis = words_with_content(comp)
        self.index = {w: k for k, w in enumerate(self.basis)}
        zero, one = FieldElem.zero(m), FieldElem.one(m)
        groups = []  # (s, kernel vector terms)
        if e_letter == f_letter:
            raise ValueError("degenerate generator")
        for s in range(comp[e_letter] + 1):
            if s + self.t < 0:
                continue
            cs = list(comp)
            cs[e_letter] -= s
            cs[f_letter] += s
            src = words_with_content(cs)
            if cs[e_letter] == 0:
                kernel = [{w: one} for w in src]
            else:
                tgt = list(cs)
                tgt[e_letter] -= 1
                tgt[f_letter] += 1
                tidx = {w: k for k, w in enumerate(words_with_content(tgt))}
                mat = [[zero] * len(src) for _ in tidx]
                for c, w in enumerate(src):
                    for w2, x in act_word(ctx, "E", i, w).items():
                        mat[tidx[w2]][c] = x
                kernel = []
                for vec in nullspace(mat, len(src), zero, one):
                    kernel.append({w: x for w, x in zip(src, vec) if not x.is_zero()})
            for k in kernel:
                groups.append((s, k))
        self.groups = groups
        # raw F-powers, then divided powers s-1, s, s+1
        self.down, self.image, self.up = [], [], []
        for s, k in groups:
            powers = [k]
            for _ in range(s + 1):
                powers.append(act_terms(ctx, "F", i, powers[-1]))
            self.down.append(_scale(powers[s - 1], q_factorial(m, s - 1).inverse())
                             if s > 0 else None)
            self.image.append(_scale(powers[s], q_factorial(m, s).inverse()))
            self.up.append(_scale(powers[s + 1], q_factorial(m, s + 1).inverse()))
        dim = len(self.basis)
        if len(groups) != dim:
            raise ArithmeticError(f"string basis has {len(groups)} vectors, expected {dim}")
        # coordinates of every basis word in the string basis: invert [images]
        aug = []
        for r, w in enumerate(self.basis):
            row = [self.image[j].get(w, zero) for j in range(dim)]
            row += [one if c == r else zero for c in range(dim)]
            aug.append(row)
        rows, pivots = rref(aug)
        if pivots[:dim] != list(range(dim)):
            raise ArithmeticError("string images are not a basis")
        # inverse matrix rows j give coordinate j of each basis word
        self.coords = [{self.basis[c]: rows[j][dim + c] for c in range(dim)
                        if not rows[j][dim + c].is_zero()} for j in range(dim)]

    def coordinates(self, terms: dict) -> list:
        out = []
        for j in range(len(self.groups)):
            acc = None
            cj = self.coords[j]
            for w, x in terms.items():
                y = cj.get(w)
                if y is not None:
                    acc = x * y if acc is None else acc + x * y
            out.append(acc)
        return out

    def apply(self, op: str, terms: dict) -> dict:
        out = {}
        targets = self.down if op == "E" else self.up
        for j, c in enumerate(self.coordinates(terms)):
            if c is None or c.is_zero() or targets[j] is None:
                continue
            _combine(out, targets[j], c)
        return out


@lru_cache(maxsize=None)
def _string_data(ctx: EvalParams, i: int, comp) -> _StringData:
    return _StringData(ctx, i, comp)


def _split(v: ModuleVector) -> dict:
    groups = {}
    for w, c in v.terms.items():
        groups.setdefault(content_of(w, v.ctx.n), {})[w] = c
    return groups


def string_decompose(i: int, v: ModuleVector) -> StringDecomp:
    """Unique v = sum_s F_i^{(s)} u_s with E_i u_s = 0 (v of a single weight)."""
    groups = _split(v)
    if len(groups) > 1:
        raise ValueError("string_decompose needs a weight vector")
    if not groups:
        return StringDecomp(i, 0, [])
    (comp, terms), = groups.items()
    data = _string_data(v.ctx, i, comp)
    by_s = {}
    for j, c in enumerate(data.coordinates(terms)):
        if c is None or c.is_zero():
            continue
        s, k = data.groups[j]
        _combine(by_s.setdefault(s, {}), k, c)
    comps = [(s, ModuleVector._raw(v.ctx, t)) for s, t in sorted(by_s.items()) if t]
    return StringDecomp(i, data.t, comps)


def kashiwara_op(op: str, i: int, v: ModuleVector) -> ModuleVector:
    """Exact E~_i or F~_i (``op`` in 'E', 'F') from the string decomposition."""
    op = _op(op)
    out = {}
    for comp, terms in _split(v).items():
        for w, c in _string_data(v.ctx, i, comp).apply(op, terms).items():
            _add(out, w, c)
    return ModuleVector._raw(v.ctx, out)


def oracle_step(op: str, i: int, word, ctx: EvalParams):
    """kashiwara_op on a word, reduced mod qL.

    Returns (word', k) when the image is zeta^k word', (None, 0) when it is 0,
    and raises ValueError when the image leaves L or is not of that shape.
    """
    img = kashiwara_op(op, i, ModuleVector.basis(ctx, word))
    if img.valuation() < 0:
        raise ValueError(f"image of {word} leaves the lattice")
    red = img.reduce_q0()
    if not red:
        return None, 0
    if len(red) != 1:
        raise ValueError(f"image of {word} is not a multiple of a word: {red}")
    (w2, c), = red.items()
    k = c.zeta_log()
    if k is None:
        raise ValueError(f"coefficient {c} of {w2} is not a power of zeta")
    return w2, k


def signature(i: int, word, n: int):
    """Uncancelled signature as lists of tensor slots (1-based from the left)."""
    e_letter, f_letter = _letters(i, n)
    N = len(word)
    minus, plus = [], []
    for slot in range(1, N + 1):
        x = word[N - slot]
        if x == e_letter:
            if plus:
                plus.pop()
            else:
                minus.append(slot)
        elif x == f_letter:
            plus.append(slot)
    return minus, plus


def _slot_exponents(ctx, N, m):
    if ctx is None:
        return tuple(range(N))
    exps = ctx.zeta_exponents()
    if any(e is None for e in exps):
        raise ValueError("tensor rule needs parameters that are powers of zeta")
    return exps


def tensor_rule_step(op: str, i: int, word, ctx: EvalParams | None = None,
                     n: int | None = None, m: int | None = None):
    """(word', k) with op_i(word) = zeta^k word' mod qL, or (None, 0).

    The exponent is nonzero only for i = 0: E~_0 acting on slot p gives the
    zeta-exponent of that slot's parameter a_p, F~_0 its negative.  Without
    ``ctx`` the parameters are a_p = zeta^{p-1} and ``n`` must be given.
    """
    op = _op(op)
    word = tuple(word)
    N = len(word)
    if ctx is not None:
        n, m = ctx.n, ctx.m
    elif n is None:
        raise ValueError("tensor_rule_step needs ctx or n")
    minus, plus = signature(i, word, n)
    if op == "F":
        if not plus:
            return None, 0
        slot, letter = plus[0], i
    else:
        if not minus:
            return None, 0
        slot, letter = minus[-1], (i - 1) % (n + 1)
    j = N - slot
    out = word[:j] + (letter,) + word[j + 1:]
    k = 0
    if i == 0:
        a = _slot_exponents(ctx, N, m)[slot - 1]
        k = a if op == "E" else -a
        if m:
            k %= m
    return out, k


# axioms -------------------------------------------------------------------


@dataclass
class AxiomReport:
    n: int
    N: int
    m: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, **witness):
        self.violations.append({"axiom": axiom, **witness})


def _expected_comp(op: str, i: int, comp, n: int):
    e_letter, f_letter = _letters(i, n)
    c = list(comp)
    src, dst = (e_letter, f_letter) if op == "E" else (f_letter, e_letter)
    c[src] -= 1
    c[dst] += 1
    return tuple(c)


def verify_axioms(ctx: EvalParams, m: int | None = None, indices=None) -> AxiomReport:
    """Check the zeta-crystal axioms on the full word basis with the matrix oracle.

    (i) weight: E~_i, F~_i move weight by +-alpha_i, and phi_i - epsilon_i
        equals <h_i, wt b> for the string lengths read off B;
    (ii) lattice: images of words stay in L;
    (iii) images mod qL lie in zeta^{Z delta_{i,0}} B or 0;
    (iv) b' = zeta^k F~_i b  iff  b = zeta^{-k} E~_i b'.

    With m = 1 every exponent is 0 and these are the ordinary crystal axioms.
    """
    m = ctx.m if m is None else m
    if ctx.m != m:
        raise ValueError(f"context has zeta order {ctx.m}, asked for {m}")
    n, N = ctx.n, ctx.N
    indices = range(n + 1) if indices is None else indices
    report = AxiomReport(n, N, m)
    words = [w for comp in _all_comps(N, n) for w in words_with_content(comp)]
    steps = {}
    for w in words:
        comp = content_of(w, n)
        for i in indices:
            for op in "EF":
                report.checked += 1
                img = kashiwara_op(op, i, ModuleVector.basis(ctx, w))
                want = _expected_comp(op, i, comp, n)
                if any(content_of(w2, n) != want for w2 in img.terms):
                    report.add("i", word=w, i=i, op=op, detail="weight")
                if img.valuation() < 0:
                    report.add("ii", word=w, i=i, op=op, detail=f"valuation {img.valuation()}")
                    steps[(op, i, w)] = None
                    continue
                red = img.reduce_q0()
                if not red:
                    steps[(op, i, w)] = (None, 0)
                    continue
                k = None
                if len(red) == 1:
                    (w2, c), = red.items()
                    k = c.zeta_log()
                if k is None or (i != 0 and k % m):
                    report.add("iii", word=w, i=i, op=op, detail=str(red))
                    steps[(op, i, w)] = None
                    continue
                steps[(op, i, w)] = (w2, k % m)
    for w in words:
        comp = content_of(w, n)
        for i in indices:
            f = steps[("F", i, w)]
            if f is not None and f[0] is not None:
                back = steps[("E", i, f[0])]
                if back is None or back[0] != w or (back[1] + f[1]) % m:
                    report.add("iv", word=w, i=i, detail=f"F~ -> {f}, E~ back -> {back}")
            e = steps[("E", i, w)]
            if e is not None and e[0] is not None:
                fwd = steps[("F", i, e[0])]
                if fwd is None or fwd[0] != w or (fwd[1] + e[1]) % m:
                    report.add("iv", word=w, i=i, detail=f"E~ -> {e}, F~ back -> {fwd}")
            eps = _string_length(steps, "E", i, w)
            phi = _string_length(steps, "F", i, w)
            e_letter, f_letter = _letters(i, n)
            if eps is not None and phi is not None and \
                    phi - eps != comp[f_letter] - comp[e_letter]:
                report.add("i", word=w, i=i, detail=f"phi-eps={phi - eps}")
    return report


def _string_length(steps, op, i, w):
    k = 0
    cur = w
    while True:
        st = steps.get((op, i, cur))
        if st is None:
            return None
        if st[0] is None:
            return k
        cur = st[0]
        k += 1


def _all_comps(N: int, n: int):
    from .combinat import compositions
    return compositions(N, n + 1)


# component crystals -------------------------------------------------------


@dataclass
class CrystalGraph:
    """Nodes (word, r); an edge (b, b', i, k) means b' = zeta^k F~_i b mod qL."""

    n: int
    m: int
    s: int | None
    r_window: tuple | None
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    boundary: set = field(default_factory=set)

    def slice(self, r: int, comp=None) -> list:
        return [w for w, rr in self.nodes if rr == r and
                (comp is None or content_of(w, self.n) == tuple(comp))]

    def to_dict(self) -> dict:
        def word_str(w):
            return "".join(map(str, w))
        return {
            "n": self.n,
            "m": self.m,
            "s": self.s,
            "r_window": list(self.r_window) if self.r_window else None,
            "nodes": [{"word": word_str(w), "r": r, "boundary": (w, r) in self.boundary}
                      for w, r in self.nodes],
            "edges": [{"from": {"word": word_str(a[0]), "r": a[1]},
                       "to": {"word": word_str(b[0]), "r": b[1]},
                       "i": i, "zeta_exp": k} for a, b, i, k in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_dot(self) -> str:
        def node_id(node):
            w, r = node
            return f'"{"".join(map(str, w))}@{r}"'
        lines = ["digraph crystal {", "  rankdir=LR;"]
        for node in self.nodes:
            attrs = f'label="{"".join(map(str, node[0]))} t^{node[1]}"'
            if node in self.boundary:
                attrs += ", style=dashed"
            lines.append(f"  {node_id(node)} [{attrs}];")
        for a, b, i, k in self.edges:
            lines.append(f'  {node_id(a)} -> {node_id(b)} [label="{i}/ζ^{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def component_slice_words(s: int, r: int, m: int, n: int, comp=None) -> list:
    """Words of length m in the grade-r slice of component s: Maj = r - s mod m."""
    from .combinat import compositions
    comps = [tuple(comp)] if comp is not None else compositions(m, n + 1)
    return [w for c in comps for w in words_with_content(c) if (maj(w) - (r - s)) % m == 0]


def build_component_crystal(s: int, m: int, n: int, r_window=None) -> CrystalGraph:
    """Crystal graph of component s restricted to grades r0..r1.

    Grade r holds the words with Maj = r - s (mod m).  0-arrows move one grade
    (F~_0 down, E~_0 up); arrows leaving the window are dropped and their
    source nodes marked as boundary.
    """
    if r_window is None:
        r_window = (-m, m)
    r0, r1 = r_window
    if r0 > r1:
        raise ValueError(f"empty grade window {r_window}")
    s %= m
    g = CrystalGraph(n, m, s, (r0, r1))
    nodes = set()
    for r in range(r0, r1 + 1):
        for w in component_slice_words(s, r, m, n):
            g.nodes.append((w, r))
            nodes.add((w, r))
    for w, r in g.nodes:
        for i in range(n + 1):
            for op in "FE":
                w2, k = tensor_rule_step(op, i, w, n=n, m=m)
                if w2 is None:
                    continue
                shift = 0 if i else (-1 if op == "F" else 1)
                target = (w2, r + shift)
                if target not in nodes:
                    if r0 <= r + shift <= r1:
                        raise AssertionError(f"edge from {(w, r)} leaves its component")
                    g.boundary.add((w, r))
                    continue
                if op == "F":
                    g.edges.append(((w, r), target, i, (-k) % m))
    return g


def check_graph(g: CrystalGraph) -> list:
    """Structural checks: reverse E~ edges and Maj-slice consistency."""
    problems = []
    for (w, r), (w2, r2), i, k in g.edges:
        back, kb = tensor_rule_step("E", i, w2, n=g.n, m=g.m)
        # F~ w = zeta^{-k} w2, so E~ w2 must be zeta^{k} w
        if back != w or (kb - k) % g.m:
            problems.append(("reverse", w, r, i))
        if g.s is not None and (maj(w2) - (r2 - g.s)) % g.m:
            problems.append(("slice", w2, r2, i))
    return problems
