"""The idempotent-compatibility battery.

For a left stratified (A, poset) and a subset-sum idempotent e, six conditions
are evaluated independently:

  1  support(e) is a coideal of the input order
  2  AeA appears in a chain of idempotent ideals with standard-sum layers
     (certified constructively, never via the equivalence with 3)
  3  support(e) is a coideal of the essential order
  4  A/AeA has a standard filtration
  5  D(A/AeA) has a proper costandard filtration (checked on the opposite side)
  6  both A/AeA and eAe are left standardly stratified for the induced orders

and the implication diagram  1 => 2 <=> 3 <=> (4 and 5),  4 => 6,  5 => 6
is asserted on every run.  The recollement identity suite verifies the
standard-object identities across the quotient and corner functors, skipping
(not failing) entries whose hypotheses do not hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import SupportNotCoideal
from .functors import IdempotentContext
from .kernel.subspace import Subspace
from .modules import Module, comp_mult, iso_test, iso_to_direct_power, simple
from .strat import (
    NO,
    UNDET,
    YES,
    FiltrationResult,
    StratDatum,
    filtration_proper,
    strat_datum,
)


def support(A, e_vec):
    """{i : e L_i != 0}, computed on the action matrices of the simples."""
    out = []
    for lab in A.labels:
        L = simple(A, lab)
        if not L.act(e_vec).is_zero():
            out.append(lab)
    return tuple(out)


@dataclass
class StratificationChain:
    label_order: list  # linear extension, ascending
    ideals: list  # ascending Subspaces 0 = J_0 < ... < J_n = A (J_0 omitted)
    layer_data: list  # (label, multiplicity) per step
    split_index: int  # l with J_l = AeA

    def to_json(self):
        return {
            "label_order": list(self.label_order),
            "ideal_dims": [J.dim for J in self.ideals],
            "layers": [[lab, m] for lab, m in self.layer_data],
            "split_index": self.split_index,
        }


def build_stratification_chain(A, poset, e_vec, sd: StratDatum | None = None):
    """Chain J_k = A e_{S_k} A over the top-k sets of a linear extension with
    support(e) as an up-set; layers verified to be direct sums of standards.

    Returns (status, chain or None, witness).
    """
    sd = sd or strat_datum(A, poset)
    supp = set(A.support_labels(e_vec))
    ess = sd.essential_order()
    if not ess.is_coideal(supp):
        return NO, None, "support is not a coideal of the essential order"
    ext = ess.linear_extension(put_last=supp)  # support labels end up last
    reg = Module.regular(A)
    ideals = []
    layer_data = []
    prev = Subspace.zero(A.field, A.dim)
    for k in range(len(ext)):
        top_labels = ext[len(ext) - 1 - k :]
        ek = A.idempotent_sum_for_labels(top_labels)
        J = A.two_sided_ideal(ek)
        lab = ext[len(ext) - 1 - k]
        Jmod, _ = reg.submodule(J)
        layer_space_rows = []
        # layer = J / prev inside Jmod coordinates
        prev_in_J = Subspace.from_rows(
            A.field, J.dim, [J.reduce(prev.basis.row(i))[0] for i in range(prev.dim)]
        )
        layer, _ = Jmod.quotient(prev_in_J)
        D = sd.delta[lab]
        if D.dim == 0 or layer.dim % D.dim:
            return NO, None, f"layer at {lab} has dim {layer.dim}, not a multiple of {D.dim}"
        t = layer.dim // D.dim
        cert = iso_to_direct_power(layer, D, t)
        if cert is None:
            for lab2 in A.labels:
                if comp_mult(layer, lab2) != t * comp_mult(D, lab2):
                    raise AssertionError(
                        "stratification layer fails invariants although the support "
                        "is an essential coideal; internal inconsistency"
                    )
            return UNDET, None, f"layer at {lab} could not be certified"
        ideals.append(J)
        layer_data.append((lab, t))
        prev = J
    chain = StratificationChain(ext, ideals, layer_data, len(supp))
    AeA = A.two_sided_ideal(A.coerce_vec(e_vec))
    want = ideals[len(supp) - 1] if supp else Subspace.zero(A.field, A.dim)
    if supp and want != AeA:
        raise AssertionError("J_l differs from AeA; internal inconsistency")
    return YES, chain, None


@dataclass
class CompatReport:
    support: tuple
    conds: dict  # 1..6 -> YES/NO/UNDET
    chain: StratificationChain | None
    filtration4: FiltrationResult | None
    filtration5: FiltrationResult | None
    diagram_consistent: bool
    inconclusive: bool
    identity_checks: list = field(default_factory=list)  # (name, verdict)

    def to_json(self):
        return {
            "support": list(self.support),
            "conditions": {str(k): v for k, v in sorted(self.conds.items())},
            "chain": self.chain.to_json() if self.chain else None,
            "filtration_quotient": self.filtration4.to_json() if self.filtration4 else None,
            "filtration_dual": self.filtration5.to_json() if self.filtration5 else None,
            "implication_diagram_consistent": self.diagram_consistent,
            "inconclusive": self.inconclusive,
            "identity_checks": [[n, v] for n, v in self.identity_checks],
        }


def _imp(a, b):
    """Three-valued implication: False only when a is YES and b is NO."""
    if a == YES and b == NO:
        return False
    return True


def _check_diagram(c):
    ok = True
    ok &= _imp(c[1], c[2])
    ok &= _imp(c[2], c[3]) and _imp(c[3], c[2])
    c45 = YES if (c[4] == YES and c[5] == YES) else (NO if NO in (c[4], c[5]) else UNDET)
    ok &= _imp(c[3], c45) and _imp(c45, c[3])
    ok &= _imp(c[4], c[6])
    ok &= _imp(c[5], c[6])
    return bool(ok)


def compatibility_battery(A, poset, e_vec, with_identities=True) -> CompatReport:
    sd = strat_datum(A, poset)
    left, _ = sd.left_stratified()
    if left != YES:
        raise SupportNotCoideal("battery requires a verified left standardly stratified input")
    e = A.coerce_vec(e_vec)
    summands = A.subset_sum_decomposition(e)
    if not summands:
        conds = {k: YES for k in range(1, 7)}
        return CompatReport(tuple(), conds, None, None, None, True, False,
                            [("zero-idempotent", "trivial")])
    supp = support(A, e)
    assert supp == A.support_labels(e)

    conds = {}
    conds[1] = YES if poset.is_coideal(supp) else NO
    ess = sd.essential_order()
    conds[3] = YES if ess.is_coideal(supp) else NO

    full = len(supp) == len(A.labels) and A.two_sided_ideal(e).dim == A.dim
    ctx = IdempotentContext(A, e)

    # condition 4: A/AeA as a left module has a standard filtration
    if ctx.quotient is None:
        quot_mod = Module.zero(A)
    else:
        quot_mod, _ = Module.regular(A).quotient(ctx.ideal)
    f4 = sd.delta_filtration(quot_mod)
    conds[4] = f4.status

    # condition 5: D(A/AeA) proper-costandardly filtered, via the opposite side
    opA = A.opposite()
    op_ideal = opA.two_sided_ideal(e)
    quot_op, _ = Module.regular(opA).quotient(op_ideal)
    f5 = filtration_proper(quot_op, sd.op.delta_bar, poset)
    conds[5] = f5.status

    # condition 6: quotient and corner stratified for the induced orders
    sub_verdicts = []
    if ctx.quotient is not None:
        sq = strat_datum(ctx.quotient, poset.restrict([l for l in A.labels if l not in supp]))
        sub_verdicts.append(sq.left_stratified()[0])
    sc = strat_datum(ctx.corner, poset.restrict(supp))
    sub_verdicts.append(sc.left_stratified()[0])
    conds[6] = (NO if NO in sub_verdicts else (UNDET if UNDET in sub_verdicts else YES))

    # condition 2: constructive chain certificate
    status2, chain, witness2 = build_stratification_chain(A, poset, e, sd)
    conds[2] = status2

    diagram = _check_diagram(conds)
    inconclusive = UNDET in conds.values()
    report = CompatReport(supp, conds, chain, f4, f5, diagram, inconclusive)
    if with_identities:
        report.identity_checks = recollement_identity_suite(A, poset, e, ctx=ctx, sd=sd, conds=conds)
    assert diagram, f"implication diagram violated: {conds}"
    return report


def recollement_identity_suite(A, poset, e_vec, ctx=None, sd=None, conds=None):
    """Standard-object identities across the recollement, per hypothesis.

    Always (for i outside the support): the quotient-algebra standard objects
    agree with the corresponding functor images.  Under condition 4: inflation
    recovers the ambient standards and the corner identities hold; under
    condition 5, the dual suite.
    """
    sd = sd or strat_datum(A, poset)
    e = A.coerce_vec(e_vec)
    ctx = ctx or IdempotentContext(A, e)
    supp = set(support(A, e))
    if conds is None:
        quot_mod = Module.zero(A) if ctx.quotient is None else Module.regular(A).quotient(ctx.ideal)[0]
        opA = A.opposite()
        quot_op, _ = Module.regular(opA).quotient(opA.two_sided_ideal(e))
        conds = {
            4: sd.delta_filtration(quot_mod).status,
            5: filtration_proper(quot_op, sd.op.delta_bar, poset).status,
        }
    out = []

    def verdict(v):
        return v.kind if hasattr(v, "kind") else v

    outside = [l for l in A.labels if l not in supp]
    if ctx.quotient is not None and outside:
        sq = strat_datum(ctx.quotient, poset.restrict(outside))
        for i in outside:
            out.append((f"quotient_tensor(Delta_{i}) = Delta_{i}^quot",
                        verdict(iso_test(ctx.quotient_tensor(sd.delta[i]), sq.delta[i]))))
            out.append((f"quotient_tensor(DeltaBar_{i}) = DeltaBar_{i}^quot",
                        verdict(iso_test(ctx.quotient_tensor(sd.delta_bar[i]), sq.delta_bar[i]))))
            out.append((f"quotient_hom(Nabla_{i}) = Nabla_{i}^quot",
                        verdict(iso_test(ctx.quotient_hom(sd.nabla[i]), sq.nabla[i]))))
            out.append((f"quotient_hom(NablaBar_{i}) = NablaBar_{i}^quot",
                        verdict(iso_test(ctx.quotient_hom(sd.nabla_bar[i]), sq.nabla_bar[i]))))
        if conds and conds.get(4) == YES:
            for i in outside:
                out.append((f"inflate(Delta_{i}^quot) = Delta_{i}",
                            verdict(iso_test(ctx.inflate(sq.delta[i]), sd.delta[i]))))
        else:
            out.append(("inflation identities", "skipped"))
        if conds and conds.get(5) == YES:
            for i in outside:
                out.append((f"inflate(NablaBar_{i}^quot) = NablaBar_{i}",
                            verdict(iso_test(ctx.inflate(sq.nabla_bar[i]), sd.nabla_bar[i]))))
        else:
            out.append(("dual inflation identities", "skipped"))

    sc = strat_datum(ctx.corner, poset.restrict(supp))
    if conds and conds.get(4) == YES:
        for i in supp:
            out.append((f"corner(Delta_{i}) = Delta_{i}^corner",
                        verdict(iso_test(ctx.corner_apply(sd.delta[i]), sc.delta[i]))))
            out.append((f"corner(NablaBar_{i}) = NablaBar_{i}^corner",
                        verdict(iso_test(ctx.corner_apply(sd.nabla_bar[i]), sc.nabla_bar[i]))))
            out.append((f"corner_hom(NablaBar_{i}^corner) = NablaBar_{i}",
                        verdict(iso_test(ctx.corner_hom(sc.nabla_bar[i]), sd.nabla_bar[i]))))
    else:
        out.append(("corner identities", "skipped"))
    if conds and conds.get(5) == YES:
        for i in supp:
            out.append((f"corner_tensor(Delta_{i}^corner) = Delta_{i}",
                        verdict(iso_test(ctx.corner_tensor(sc.delta[i]), sd.delta[i]))))
    else:
        out.append(("dual corner identities", "skipped"))
    return out
