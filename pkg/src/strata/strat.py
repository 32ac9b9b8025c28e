"""Standard-module families and stratification verdicts.

Standard objects over (A, poset):

    Delta_i    largest quotient of P_i with composition factors <= i
    DeltaBar_i largest quotient of Delta_i with [X : L_i] = 1
    Nabla_i    = D(Delta_i over the opposite algebra)  (costandard)
    NablaBar_i = D(DeltaBar_i over the opposite algebra)

Filtration checking is greedy with certificates.  For standard-type families
the layers with maximal label sit at the bottom and are peeled all at once as
the trace of the corresponding projective; for proper-standard-type families
(which admit self-extensions) single top layers are peeled via surjections.
A failed isomorphism search downgrades to "undetermined", never to "no".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAntisymmetric, InputError, UnknownLabel
from .kernel.matrix import Matrix
from .kernel.subspace import Subspace
from .modules import (
    Module,
    comp_mult,
    hom_basis,
    iso_to_direct_power,
    projective,
    simple,
    trace_from_projective,
)

YES, NO, UNDET = "yes", "no", "undetermined"


class LabelPoset:
    """Partial order on simple labels, stored as the full <= relation."""

    def __init__(self, labels, leq_pairs):
        self.labels = tuple(str(l) for l in labels)
        idx = {l: k for k, l in enumerate(self.labels)}
        if len(idx) != len(self.labels):
            raise InputError("duplicate labels in poset")
        n = len(self.labels)
        rel = [[False] * n for _ in range(n)]
        for i in range(n):
            rel[i][i] = True
        for a, b in leq_pairs:
            a, b = str(a), str(b)
            if a not in idx or b not in idx:
                raise UnknownLabel(f"poset pair ({a},{b}) uses unknown label")
            rel[idx[a]][idx[b]] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    ri, rk = rel[i], rel[k]
                    for j in range(n):
                        if rk[j]:
                            ri[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if rel[i][j] and rel[j][i]:
                    raise NotAntisymmetric(f"labels {self.labels[i]} and {self.labels[j]} form a cycle")
        self._idx = idx
        self._rel = tuple(tuple(r) for r in rel)

    @classmethod
    def antichain(cls, labels):
        return cls(labels, [])

    @classmethod
    def chain(cls, labels):
        labels = list(labels)
        return cls(labels, [(labels[k], labels[k + 1]) for k in range(len(labels) - 1)])

    @classmethod
    def product(cls, p, q, label_fmt="({a},{b})"):
        labels = [label_fmt.format(a=a, b=b) for a in p.labels for b in q.labels]
        pairs = []
        for a1 in p.labels:
            for b1 in q.labels:
                for a2 in p.labels:
                    for b2 in q.labels:
                        if p.leq(a1, a2) and q.leq(b1, b2):
                            pairs.append((label_fmt.format(a=a1, b=b1), label_fmt.format(a=a2, b=b2)))
        return cls(labels, pairs)

    def key(self):
        return (self.labels, self._rel)

    def __eq__(self, other):
        return isinstance(other, LabelPoset) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def leq(self, a, b):
        return self._rel[self._idx[str(a)]][self._idx[str(b)]]

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def up_set(self, a):
        return {b for b in self.labels if self.leq(a, b)}

    def is_coideal(self, subset):
        subset = {str(s) for s in subset}
        return all(self.up_set(a) <= subset for a in subset)

    def maximal_of(self, labels):
        labels = [str(l) for l in labels]
        return [a for a in labels if not any(self.lt(a, b) for b in labels)]

    def minimal_of(self, labels):
        labels = [str(l) for l in labels]
        return [a for a in labels if not any(self.lt(b, a) for b in labels)]

    def restrict(self, subset):
        subset = [l for l in self.labels if l in {str(s) for s in subset}]
        pairs = [(a, b) for a in subset for b in subset if self.leq(a, b)]
        return LabelPoset(subset, pairs)

    def refines(self, other):
        """Every relation of other holds here (labels must agree as sets)."""
        return set(self.labels) == set(other.labels) and all(
            self.leq(a, b) for a in other.labels for b in other.labels if other.leq(a, b)
        )

    def cover_pairs(self):
        out = []
        for a in self.labels:
            for b in self.labels:
                if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in self.labels):
                    out.append((a, b))
        return out

    def linear_extension(self, put_last=()):
        """Kahn order, smallest-label-first; labels in put_last deferred."""
        put_last = {str(s) for s in put_last}
        remaining = list(self.labels)
        out = []
        while remaining:
            mins = self.minimal_of(remaining)
            pick = None
            preferred = [m for m in mins if m not in put_last]
            pool = preferred if preferred else mins
            pick = min(pool, key=self.labels.index)
            out.append(pick)
            remaining.remove(pick)
        return out

    def second_linear_extension(self):
        """A (possibly equal) extension choosing largest-label-first at ties."""
        remaining = list(self.labels)
        out = []
        while remaining:
            mins = self.minimal_of(remaining)
            pick = max(mins, key=self.labels.index)
            out.append(pick)
            remaining.remove(pick)
        return out

    def to_json(self):
        return {"labels": list(self.labels), "pairs": [list(p) for p in self.cover_pairs()]}

    def __repr__(self):
        return f"LabelPoset({self.labels}, covers {self.cover_pairs()})"


def all_posets(labels):
    """Every partial order on the given labels (|labels| <= 5)."""
    labels = [str(l) for l in labels]
    n = len(labels)
    if n > 5:
        raise InputError("poset enumeration limited to 5 labels")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    states = [0] * len(pairs)

    def transitive(rel):
        for i in range(n):
            for j in range(n):
                if rel[i][j]:
                    for k in range(n):
                        if rel[j][k] and not rel[i][k]:
                            return False
        return True

    total = 3 ** len(pairs)
    for code in range(total):
        c = code
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j) in pairs:
            s = c % 3
            c //= 3
            if s == 1:
                rel[i][j] = True
            elif s == 2:
                rel[j][i] = True
        if transitive(rel):
            out.append(LabelPoset(labels, [(labels[i], labels[j]) for i in range(n) for j in range(n) if i != j and rel[i][j]]))
    return out


# -- standard objects --------------------------------------------------------------


@dataclass
class StandardData:
    module: Module
    projection: Matrix  # from P_i (for delta) or from delta (for delta_bar)
    kernel: Subspace


class StratDatum:
    """All four standard families over (A, poset) plus verdicts."""

    def __init__(self, A, poset: LabelPoset):
        if set(poset.labels) != set(A.labels):
            raise UnknownLabel("poset labels differ from the algebra's simple labels")
        self.A = A
        self.poset = poset
        self.P = {i: projective(A, i) for i in A.labels}
        self.L = {i: simple(A, i) for i in A.labels}
        self.delta = {}
        self.delta_bar = {}
        self._delta_data = {}
        for i in A.labels:
            self._delta_data[i] = self._build_delta(i)
            self.delta[i] = self._delta_data[i][0].module
            self.delta_bar[i] = self._delta_data[i][1].module
        self._op = None  # lazy opposite StratDatum (one level, no recursion)
        self._nabla = None
        self._left = None
        self._right = None

    # construction ------------------------------------------------------------

    def _build_delta(self, i):
        A, poset = self.A, self.poset
        P = self.P[i]
        U = Subspace.zero(A.field, P.dim)
        for j in A.labels:
            if not poset.leq(j, i):
                U = U.plus(trace_from_projective(j, P))
        delta, proj = P.quotient(U)
        rad = delta.radical_subspace()
        eirad_rows = []
        e = A.idempotent_for_label(i)
        Me = delta.act(e)
        for r in range(rad.dim):
            eirad_rows.append((Me * Matrix.column(A.field, rad.basis.row(r))).col(0))
        T = delta.invariant_closure(eirad_rows) if eirad_rows else Subspace.zero(A.field, delta.dim)
        dbar, proj2 = delta.quotient(T)
        return StandardData(delta, proj, U), StandardData(dbar, proj2, T)

    @property
    def op(self) -> "StratDatum":
        if self._op is None:
            self._op = strat_datum(self.A.opposite(), self.poset)
        return self._op

    @property
    def nabla(self):
        if self._nabla is None:
            opd = self.op
            self._nabla = ({i: opd.delta[i].dual() for i in self.A.labels},
                           {i: opd.delta_bar[i].dual() for i in self.A.labels})
        return self._nabla[0]

    @property
    def nabla_bar(self):
        self.nabla
        return self._nabla[1]

    # filtration checking ---------------------------------------------------------

    def delta_kernel_module(self, i):
        """ker(P_i ->> Delta_i) as a Module with its inclusion."""
        data = self._delta_data[i][0]
        return self.P[i].submodule(data.kernel)

    def left_stratified(self):
        """(verdict YES/NO/UNDET, per-label filtration results)."""
        if self._left is not None:
            return self._left
        results = {}
        verdict = YES
        for i in self.A.labels:
            K, _ = self.delta_kernel_module(i)
            allowed = {j for j in self.A.labels if self.poset.lt(i, j)}
            res = filtration_standard(K, self.delta, self.poset, allowed=allowed)
            results[i] = res
            if res.status == NO:
                verdict = NO
            elif res.status == UNDET and verdict == YES:
                verdict = UNDET
        self._left = (verdict, results)
        return self._left

    def right_stratified(self):
        if self._right is None:
            self._right = self.op.left_stratified()
        return self._right

    def quasi_hereditary(self):
        """left stratified and Delta_i = DeltaBar_i for every i."""
        left, _ = self.left_stratified()
        if left != YES:
            return left if left == UNDET else NO
        for i in self.A.labels:
            if self.delta[i].dim != self.delta_bar[i].dim:
                return NO
        return YES

    def delta_filtration(self, X, allowed=None, cross_check=True):
        """Greedy Delta-filtration check, cross-checked against the Ext oracle."""
        res = filtration_standard(X, self.delta, self.poset, allowed=allowed)
        if cross_check and allowed is None and self.left_stratified()[0] == YES and res.status != UNDET:
            oracle = self.ext_oracle_delta(X)
            assert oracle == (res.status == YES), "greedy and Ext oracle disagree"
        return res

    def ext_oracle_delta(self, X):
        """X in F(Delta) iff Ext^1(X, NablaBar_j) = 0 for all j (left stratified case)."""
        from .homology import ext_dim

        return all(ext_dim(X, self.nabla_bar[j], 1) == 0 for j in self.A.labels)

    def proper_costandard_filtration_of_dual(self, X_over_op):
        """Check D(X) in F(NablaBar) for a right module given over the opposite."""
        return filtration_proper(X_over_op, self.op.delta_bar, self.poset)

    def report_json(self):
        """Verdicts plus per-label filtration certificates (the chain matrices
        allow independent re-verification)."""
        left, results = self.left_stratified()
        right, op_results = self.right_stratified()
        return {
            "left_standardly_stratified": left,
            "right_standardly_stratified": right,
            "quasi_hereditary": self.quasi_hereditary(),
            "standard_dims": {i: self.delta[i].dim for i in self.A.labels},
            "proper_standard_dims": {i: self.delta_bar[i].dim for i in self.A.labels},
            "costandard_dims": {i: self.nabla[i].dim for i in self.A.labels},
            "proper_costandard_dims": {i: self.nabla_bar[i].dim for i in self.A.labels},
            "kernel_filtrations": {i: results[i].to_json() for i in self.A.labels},
            "opposite_kernel_filtrations": {i: op_results[i].to_json() for i in self.A.labels},
        }

    # essential order ---------------------------------------------------------------

    def essential_order(self) -> LabelPoset:
        pairs = []
        for i in self.A.labels:
            for j in self.A.labels:
                if i == j:
                    continue
                if comp_mult(self.delta[i], j) != 0 or comp_mult(self.nabla_bar[i], j) != 0:
                    pairs.append((j, i))
        return LabelPoset(self.A.labels, pairs)


_STRAT_CACHE = {}


def strat_datum(A, poset: LabelPoset) -> StratDatum:
    key = (id(A), poset.key())
    if key not in _STRAT_CACHE:
        _STRAT_CACHE[key] = StratDatum(A, poset)
    return _STRAT_CACHE[key]


# -- filtration certificates ----------------------------------------------------------


@dataclass
class FiltrationResult:
    status: str  # yes / no / undetermined
    layers: list = field(default_factory=list)  # (label, multiplicity) in peel order
    chain: list = field(default_factory=list)  # ascending subspaces of the ambient module
    certs: list = field(default_factory=list)
    witness: str | None = None
    direction: str = "bottom_up"

    def multiplicity(self, label):
        return sum(m for lab, m in self.layers if lab == str(label))

    def to_json(self):
        out = {
            "status": self.status,
            "direction": self.direction,
            "layers": [[lab, m] for lab, m in self.layers],
            "chain": [
                {"dim": s.dim, "basis": s.basis.to_json()} for s in self.chain
            ],
        }
        if self.witness:
            out["witness"] = self.witness
        return out


def filtration_standard(X: Module, family, poset, allowed=None, tie_break="forward"):
    """Greedy bottom-up filtration by a standard-type family.

    Repeatedly peels the trace of P_j for j maximal among the composition
    factor labels; that trace must be Delta_j^t with t = [X : L_j].
    """
    A = X.algebra
    f = A.field
    cur = X
    proj_to_cur = Matrix.identity(f, X.dim)
    layers, chain, certs = [], [], []
    while cur.dim:
        present = [lab for lab in A.labels if comp_mult(cur, lab) > 0]
        maximal = poset.maximal_of(present)
        cands = sorted(maximal, key=A.labels.index, reverse=(tie_break == "reverse"))
        j = cands[0]
        if allowed is not None and j not in allowed:
            return FiltrationResult(NO, layers, chain, certs,
                                    witness=f"layer label {j} is outside the allowed set")
        D = family[j]
        # each layer carries [D : L_j] = dim End(D) copies of the top factor
        m = comp_mult(D, j)
        if comp_mult(cur, j) % m:
            return FiltrationResult(NO, layers, chain, certs,
                                    witness=f"[X : L_{j}] = {comp_mult(cur, j)} is not a multiple of {m}")
        t = comp_mult(cur, j) // m
        T_space = trace_from_projective(j, cur)
        if T_space.dim != t * D.dim:
            return FiltrationResult(NO, layers, chain, certs,
                                    witness=f"trace of P_{j} has dim {T_space.dim}, expected {t}*{D.dim}")
        Tmod, _ = cur.submodule(T_space)
        cert = iso_to_direct_power(Tmod, D, t)
        if cert is None:
            bad = _power_invariant_witness(Tmod, D, t)
            if bad:
                return FiltrationResult(NO, layers, chain, certs, witness=bad)
            return FiltrationResult(UNDET, layers, chain, certs,
                                    witness=f"could not certify trace = Delta_{j}^{t}")
        # record the chain step in ambient coordinates
        quot_proj = T_space.projection_matrix()
        step = (quot_proj * proj_to_cur).kernel_basis()
        chain.append(Subspace.from_rows(f, X.dim, [step.col(c) for c in range(step.cols)]))
        layers.append((j, t))
        certs.append(cert)
        cur, qproj = cur.quotient(T_space)
        proj_to_cur = qproj * proj_to_cur
    return FiltrationResult(YES, layers, chain, certs)


def _power_invariant_witness(T: Module, D: Module, t):
    for lab in T.algebra.labels:
        a, b = comp_mult(T, lab), t * comp_mult(D, lab)
        if a != b:
            return f"[trace : L_{lab}] = {a} != {t}*[layer : L_{lab}] = {b}"
    return None


def filtration_proper(X: Module, family, poset, allowed=None, tie_break="forward"):
    """Greedy top-down filtration by a proper-standard-type family.

    Peels one epimorphism X ->> DeltaBar_j at a time.  The family is closed
    under kernels of epimorphisms onto its members, so peeling any layer that
    admits an epimorphism is safe; epi existence is an exact linear test
    because every family member has simple top.  Self-extensions make the
    bottom-up multi-peel of the standard greedy unsound here.
    """
    A = X.algebra
    f = A.field
    cur = X
    incl_to_X = Matrix.identity(f, X.dim)
    layers, chain, certs = [], [], []
    while cur.dim:
        topmod, _ = cur.top()
        present = [lab for lab in A.labels if comp_mult(topmod, lab) > 0]
        if allowed is not None:
            bad = [lab for lab in present if lab not in allowed]
            present = [lab for lab in present if lab in allowed]
            if not present:
                return FiltrationResult(NO, layers, chain, certs,
                                        witness=f"all top labels {bad} are outside the allowed set",
                                        direction="top_down")
        mins = set(poset.minimal_of(present))
        cands = sorted(present, key=lambda l: (l not in mins, A.labels.index(l)),
                       reverse=(tie_break == "reverse"))
        epi, j = None, None
        for cand in cands:
            epi = _find_surjection(cur, family[cand])
            if epi is not None:
                j = cand
                break
        if epi is None:
            return FiltrationResult(NO, layers, chain, certs,
                                    witness=f"no family member among top labels {cands} is a quotient",
                                    direction="top_down")
        K = epi.kernel_basis()
        ker_space = Subspace.from_rows(f, cur.dim, [K.col(c) for c in range(K.cols)])
        layers.append((j, 1))
        certs.append(epi)
        kb = [(incl_to_X * Matrix.column(f, ker_space.basis.row(r))).col(0) for r in range(ker_space.dim)]
        chain.append(Subspace.from_rows(f, X.dim, kb))
        ker_mod, incl = cur.submodule(ker_space)
        incl_to_X = incl_to_X * incl
        cur = ker_mod
    return FiltrationResult(YES, layers, chain, certs, direction="top_down")


def _find_surjection(X: Module, D: Module):
    """An epimorphism X ->> D, or None (exact: D must have simple top).

    By Nakayama, a map to D is onto iff its composite with D ->> top(D) is
    nonzero, and top(D) is simple, so epi existence is linear in Hom(X, D).
    """
    if D.dim == 0:
        return None
    homs = hom_basis(X, D)
    if not homs:
        return None
    _, top_proj = D.top()
    for h in homs:
        if not (top_proj * h).is_zero():
            assert h.rank() == D.dim, "family member does not have simple top"
            return h
    return None


# -- public verdict API -------------------------------------------------------------


def is_left_standardly_stratified(A, poset):
    sd = strat_datum(A, poset)
    return sd.left_stratified()


def is_right_standardly_stratified(A, poset):
    sd = strat_datum(A, poset)
    return sd.right_stratified()


def is_quasi_hereditary(A, poset):
    return strat_datum(A, poset).quasi_hereditary()


def essential_order(A, poset):
    return strat_datum(A, poset).essential_order()


def poset_search(A):
    """All posets on the labels with their left/right/qh verdicts."""
    out = []
    for poset in all_posets(A.labels):
        sd = StratDatum(A, poset)  # uncached: poset-heavy, keep the cache clean
        left, _ = sd.left_stratified()
        right, _ = sd.right_stratified()
        qh = sd.quasi_hereditary()
        out.append((poset, {"left": left, "right": right, "quasi_hereditary": qh}))
    return out


def bgg_reciprocity_check(sd: StratDatum):
    """[Delta_j : L_i] != 0 iff (I_i : NablaBar_j) != 0, and
    [NablaBar_j : L_i] != 0 iff (P_i : Delta_j) != 0, for all pairs."""
    left, results = sd.left_stratified()
    if left != YES:
        raise InputError("BGG reciprocity requires a verified left stratified algebra")
    p_mult = {}
    for i in sd.A.labels:
        res = results[i]
        for j in sd.A.labels:
            p_mult[(i, j)] = res.multiplicity(j) + (1 if i == j else 0)
    # (I_i : NablaBar_j) = multiplicity of the op proper standard in P_i over A^op
    i_mult = {}
    opd = sd.op
    for i in sd.A.labels:
        res = filtration_proper(opd.P[i], opd.delta_bar, sd.poset)
        if res.status != YES:
            raise InputError(f"injective {i} is not properly filtered; not left stratified?")
        for j in sd.A.labels:
            i_mult[(i, j)] = res.multiplicity(j)
    for i in sd.A.labels:
        for j in sd.A.labels:
            dl = comp_mult(sd.delta[j], i) != 0
            if dl != (i_mult[(i, j)] != 0):
                return False
            nb = comp_mult(sd.nabla_bar[j], i) != 0
            if nb != (p_mult[(i, j)] != 0):
                return False
    return True
