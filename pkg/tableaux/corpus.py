"""
Benchmark entailments with their expected verdicts.

Positive entries close under their logic and every stronger preset; the
hand-built proofs spell out each step and must replay under their own
logic. Negative entries must stay open under exactly their logic.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from formulas.parser import parse
from formulas.syntax import TOP, And, Atom, Imp, Nec, Not, Or, Poss

from .engine import Proof, ProofNode
from .prefixed import At, Rel
from .rulesets import RuleId, get_preset, instantiate

EXPECT_CLOSED = 'closed'
EXPECT_OPEN = 'open'


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    premises: tuple[str, ...]
    goal: str
    logic: str
    expect: str = EXPECT_CLOSED
    hand_proof: Optional[Callable[[], Proof]] = None

    @property
    def premise_formulas(self):
        return tuple(parse(text) for text in self.premises)

    @property
    def goal_formula(self):
        return parse(self.goal)

    def runs_under(self, logic: str) -> bool:
        """Whether the entry belongs to a corpus run under the given logic."""
        if self.expect == EXPECT_OPEN:
            return get_preset(self.logic) == get_preset(logic)
        return get_preset(logic).includes(get_preset(self.logic))


p, q, r = Atom('p'), Atom('q'), Atom('r')


def _step(rule, premises, *alternatives, fresh=None, **bindings) -> list[ProofNode]:
    """
    Children of one rule application.

    Each alternative is ``(formulas, children)``; the formulas are listed as
    the derivation prints them and must match the rule's conclusions.
    """
    instance = instantiate(rule, premises, bindings, fresh)
    return [ProofNode(tuple(formulas), instance, list(children)) for formulas, children in alternatives]


def _root(*formulas, children) -> ProofNode:
    return ProofNode(tuple(At(1, formula) for formula in formulas), None, children)


def _proof_cm() -> Proof:
    # [p](q & r) |- [p]q & [p]r
    assumption, negated = Nec(p, And(q, r)), Not(And(Nec(p, q), Nec(p, r)))

    def side(consequent):
        return _step(
            RuleId.NBOX, [At(1, Not(Nec(p, consequent)))],
            ([At(2, Not(consequent)), Rel(1, 2, p)], _step(
                RuleId.BOX, [At(1, assumption), Rel(1, 2, p)],
                ([At(2, And(q, r))], _step(
                    RuleId.CONJ, [At(2, And(q, r))],
                    ([At(2, q), At(2, r)], []),
                )),
            )),
            fresh=2,
        )

    return Proof('Ck', _root(assumption, negated, children=_step(
        RuleId.NCONJ, [At(1, negated)],
        ([At(1, Not(Nec(p, q)))], side(q)),
        ([At(1, Not(Nec(p, r)))], side(r)),
    )))


def _proof_cc() -> Proof:
    # [p]q & [p]r |- [p](q & r)
    assumption, negated = And(Nec(p, q), Nec(p, r)), Not(Nec(p, And(q, r)))
    return Proof('Ck', _root(assumption, negated, children=_step(
        RuleId.CONJ, [At(1, assumption)],
        ([At(1, Nec(p, q)), At(1, Nec(p, r))], _step(
            RuleId.NBOX, [At(1, negated)],
            ([Rel(1, 2, p), At(2, Not(And(q, r)))], _step(
                RuleId.NCONJ, [At(2, Not(And(q, r)))],
                ([At(2, Not(q))], _step(RuleId.BOX, [At(1, Nec(p, q)), Rel(1, 2, p)], ([At(2, q)], []))),
                ([At(2, Not(r))], _step(RuleId.BOX, [At(1, Nec(p, r)), Rel(1, 2, p)], ([At(2, r)], []))),
            )),
            fresh=2,
        )),
    )))


def _proof_cn() -> Proof:
    # |- [p]true
    negated = Not(Nec(p, TOP))
    return Proof('Ck', _root(negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, p), At(2, Not(TOP))], []),
        fresh=2,
    )))


def _proof_s1() -> Proof:
    # |- [p]p
    negated = Not(Nec(p, p))
    return Proof('Vc', _root(negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, p), At(2, Not(p))], _step(RuleId.R1, [Rel(1, 2, p)], ([At(2, p)], []))),
        fresh=2,
    )))


def _proof_s2() -> Proof:
    # <p>q |- <q>true; the new access fact needs its own fresh index 3
    negated = Not(Poss(q, TOP))
    return Proof('Vc', _root(Poss(p, q), negated, children=_step(
        RuleId.DIAMOND, [At(1, Poss(p, q))],
        ([Rel(1, 2, p), At(2, q)], _step(
            RuleId.R2, [Rel(1, 2, p), At(2, q)],
            ([Rel(1, 3, q)], _step(
                RuleId.NDIAMOND, [At(1, negated), Rel(1, 3, q)],
                ([At(3, Not(TOP))], []),
            )),
            fresh=3,
        )),
        fresh=2,
    )))


def _proof_s3() -> Proof:
    # p |- [true]p
    negated = Not(Nec(TOP, p))
    return Proof('Vc', _root(p, negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, TOP), At(2, Not(p))], _step(
            RuleId.R3, [At(1, p), At(2, Not(p)), Rel(1, 2, TOP)],
            ([At(2, p)], []),
        )),
        fresh=2,
    )))


def _proof_s4() -> Proof:
    # p |- <true>p
    negated = Not(Poss(TOP, p))
    return Proof('Vc', _root(p, negated, children=_step(
        RuleId.R4, [],
        ([Rel(1, 1, TOP)], _step(
            RuleId.NDIAMOND, [At(1, negated), Rel(1, 1, TOP)],
            ([At(1, Not(p))], []),
        )),
        index=1,
    )))


def _proof_s5() -> Proof:
    # [p & q]r |- [p](q -> r)
    assumption, negated = Nec(And(p, q), r), Not(Nec(p, Imp(q, r)))
    return Proof('Vc', _root(assumption, negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, p), At(2, Not(Imp(q, r)))], _step(
            RuleId.NIMP, [At(2, Not(Imp(q, r)))],
            ([At(2, q), At(2, Not(r))], _step(
                RuleId.R5, [Rel(1, 2, p), At(2, q)],
                ([Rel(1, 2, And(p, q))], _step(
                    RuleId.BOX, [At(1, assumption), Rel(1, 2, And(p, q))],
                    ([At(2, r)], []),
                )),
            )),
        )),
        fresh=2,
    )))


def _proof_s6() -> Proof:
    # <p>q, [p](q -> r) |- [p & q]r
    negated = Not(Nec(And(p, q), r))
    return Proof('Vc', _root(Poss(p, q), Nec(p, Imp(q, r)), negated, children=_step(
        RuleId.DIAMOND, [At(1, Poss(p, q))],
        ([Rel(1, 2, p), At(2, q)], _step(
            RuleId.NBOX, [At(1, negated)],
            ([Rel(1, 3, And(p, q)), At(3, Not(r))], _step(
                RuleId.R6, [Rel(1, 2, p), At(2, q), Rel(1, 3, And(p, q))],
                ([Rel(1, 3, p), At(3, q)], _step(
                    RuleId.BOX, [At(1, Nec(p, Imp(q, r))), Rel(1, 3, p)],
                    ([At(3, Imp(q, r))], _step(
                        RuleId.IMP, [At(3, Imp(q, r))],
                        ([At(3, Not(q))], []),
                        ([At(3, r)], []),
                    )),
                )),
            )),
            fresh=3,
        )),
        fresh=2,
    )))


def _proof_cem() -> Proof:
    # |- [p]q | [p]~q
    negated = Not(Or(Nec(p, q), Nec(p, Not(q))))
    return Proof('VCS', _root(negated, children=_step(
        RuleId.NDISJ, [At(1, negated)],
        ([At(1, Not(Nec(p, q))), At(1, Not(Nec(p, Not(q))))], _step(
            RuleId.NBOX, [At(1, Not(Nec(p, Not(q))))],
            ([Rel(1, 2, p), At(2, Not(Not(q)))], _step(
                RuleId.DNEG, [At(2, Not(Not(q)))],
                ([At(2, q)], _step(
                    RuleId.NBOX, [At(1, Not(Nec(p, q)))],
                    ([Rel(1, 3, p), At(3, Not(q))], _step(
                        RuleId.CEM, [Rel(1, 2, p), Rel(1, 3, p), At(2, q)],
                        ([At(3, q)], []),
                    )),
                    fresh=3,
                )),
            )),
            fresh=2,
        )),
    )))


def _differ(index, positive, negative) -> list[ProofNode]:
    # index satisfies one conjunction and refutes the other
    return _step(
        RuleId.CONJ, [At(index, positive)],
        ([At(index, positive.left), At(index, positive.right)], _step(
            RuleId.NCONJ, [At(index, Not(negative))],
            ([At(index, Not(negative.left))], []),
            ([At(index, Not(negative.right))], []),
        )),
    )


def _proof_rcea() -> Proof:
    # [p & q]r |- [q & p]r
    pq, qp = And(p, q), And(q, p)
    negated = Not(Nec(qp, r))
    return Proof('CK', _root(Nec(pq, r), negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, qp), At(2, Not(r))], _step(
            RuleId.EA, [Rel(1, 2, qp)],
            ([At(3, Not(qp)), At(3, pq)], _differ(3, pq, qp)),
            ([At(3, qp), At(3, Not(pq))], _differ(3, qp, pq)),
            ([Rel(1, 2, pq)], _step(RuleId.BOX, [At(1, Nec(pq, r)), Rel(1, 2, pq)], ([At(2, r)], []))),
            fresh=3,
            formula=pq,
        )),
        fresh=2,
    )))


def _proof_s5_swapped() -> Proof:
    # [q & p]r |- [p](q -> r)
    pq, qp = And(p, q), And(q, p)
    assumption, negated = Nec(qp, r), Not(Nec(p, Imp(q, r)))
    return Proof('VC', _root(assumption, negated, children=_step(
        RuleId.NBOX, [At(1, negated)],
        ([Rel(1, 2, p), At(2, Not(Imp(q, r)))], _step(
            RuleId.NIMP, [At(2, Not(Imp(q, r)))],
            ([At(2, q), At(2, Not(r))], _step(
                RuleId.R5, [Rel(1, 2, p), At(2, q)],
                ([Rel(1, 2, pq)], _step(
                    RuleId.EA, [Rel(1, 2, pq)],
                    ([At(3, Not(pq)), At(3, qp)], _differ(3, qp, pq)),
                    ([At(3, pq), At(3, Not(qp))], _differ(3, pq, qp)),
                    ([Rel(1, 2, qp)], _step(RuleId.BOX, [At(1, assumption), Rel(1, 2, qp)], ([At(2, r)], []))),
                    fresh=3,
                    formula=qp,
                )),
            )),
        )),
        fresh=2,
    )))


CORPUS = (
    CorpusEntry('CM', ('[p](q & r)',), '[p]q & [p]r', 'ck', hand_proof=_proof_cm),
    CorpusEntry('CC', ('[p]q & [p]r',), '[p](q & r)', 'ck', hand_proof=_proof_cc),
    CorpusEntry('CN', (), '[p]true', 'ck', hand_proof=_proof_cn),
    CorpusEntry('S1', (), '[p]p', 'vc', hand_proof=_proof_s1),
    CorpusEntry('S2', ('<p>q',), '<q>true', 'vc', hand_proof=_proof_s2),
    CorpusEntry('S3', ('p',), '[true]p', 'vc', hand_proof=_proof_s3),
    CorpusEntry('S4', ('p',), '<true>p', 'vc', hand_proof=_proof_s4),
    CorpusEntry('S5', ('[p & q]r',), '[p](q -> r)', 'vc', hand_proof=_proof_s5),
    CorpusEntry('S6', ('<p>q', '[p](q -> r)'), '[p & q]r', 'vc', hand_proof=_proof_s6),
    CorpusEntry('RCEA', ('[p & q]r',), '[q & p]r', 'CK', hand_proof=_proof_rcea),
    CorpusEntry('S5-swapped', ('[q & p]r',), '[p](q -> r)', 'VC', hand_proof=_proof_s5_swapped),
    CorpusEntry('CEM', (), '[p]q | [p]~q', 'VCS', hand_proof=_proof_cem),
    CorpusEntry('S1-open', (), '[p]p', 'ck', expect=EXPECT_OPEN),
    CorpusEntry('RCEA-open', ('[p & q]r',), '[q & p]r', 'ck', expect=EXPECT_OPEN),
    CorpusEntry('CEM-open', (), '[p]q | [p]~q', 'vc', expect=EXPECT_OPEN),
)


def entries_for(logic: str) -> list[CorpusEntry]:
    return [entry for entry in CORPUS if entry.runs_under(logic)]
