"""Decision engine for extensions between parabolically induced representations.

A scenario declares the two parabolic subsets, the base-field degree e, the
residue characteristic (only through p = 2 or not), cuspidality flags for the
inducing representations, the values of the central character on the coroots
orthogonal to the Levi, and user-asserted isomorphism relations between
sigma' and the twisted conjugates of sigma.  The engine validates the
declared relations against the central-character constraints and then walks a
fixed decision tree; the first matching branch wins and unknown relation
values can only produce the weaker verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .grading import SigmaDescriptor
from .intlinalg import solve_integer, unit_vector
from .rootdata import RootDatum

PAIRING_VALUES = ("one", "omega_inverse", "other", "unknown")
REL_VALUES = ("yes", "no", "unknown")

COND_GRADED_CONJ = (
    "graded-pieces conjecture in degree 1 at the identity double-coset representative"
)
COND_EMERTON = (
    "Emerton's conjecture that derived ordinary parts compute the derived functors"
)

# rule identifiers; the README carries the table mapping them to their content
CITE_INCOMPARABLE_ZERO = "incomparable-cuspidal-vanishing"
CITE_NO_RULE = "no-applicable-rule"
CITE_LARGE_FIELD = "large-field-levi-isomorphism"
CITE_LARGE_FIELD_RIGHT = "large-field-nested-right-isomorphism"
CITE_LARGE_FIELD_LEFT = "large-field-nested-left-isomorphism"
CITE_QP_RIGHT = "degree-one-nested-right-cuspidal"
CITE_QP_LEFT = "degree-one-nested-left-cuspidal"
CITE_ZCNX_DIM1 = "split-connected-centre-dimension-one"
CITE_ZCNX_ISO = "split-connected-centre-isomorphism"
CITE_ZCNX_P2 = "split-connected-centre-p2-cokernel"
CITE_SUPERCUSP_ISO = "supercuspidal-untwisted-isomorphism"
CITE_CUSP_BOUND = "cuspidal-cokernel-bound"
CITE_FULL_FAITHFUL = "full-faithfulness-degree-zero"
CITE_LOW_DEGREE = "low-degree-isomorphism"
CITE_TOP_DEGREE_DIM1 = "split-connected-centre-top-degree"
CITE_TOP_DEGREE_BOUND = "top-degree-cokernel-bound"


@dataclass(frozen=True)
class Violation:
    rule: str  # "central-twist" (forced identification) or "central-characters"
    alphas: tuple[str, ...]
    message: str


@dataclass(frozen=True)
class ExtVerdict:
    kind: str  # ExactDim | Iso | UpperBoundCokernel | ExactCokernel | Zero | Inconclusive
    value: int | None = None
    description: str = ""
    conditional_on: tuple[str, ...] = ()
    citations: tuple[str, ...] = ()
    side_facts: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "description": self.description,
            "conditional_on": list(self.conditional_on),
            "citations": list(self.citations),
            "side_facts": list(self.side_facts),
        }


@dataclass(frozen=True)
class Scenario:
    """Input to the decision tree.

    sigma lives on the Levi of the parabolic attached to I, sigma_prime on
    the one attached to J.  `rel_twist[a] = "yes"` asserts that sigma_prime
    is isomorphic to the s_a-conjugate of sigma twisted by the inverse
    cyclotomic character composed with a; `rel_id` asserts sigma_prime
    isomorphic to sigma.  `central_pairings[a]` is the value of the central
    character of sigma on the coroot of a.
    """

    datum: RootDatum
    I: frozenset
    J: frozenset
    sigma: SigmaDescriptor = SigmaDescriptor("sigma")
    sigma_prime: SigmaDescriptor = SigmaDescriptor("sigma_prime")
    e: int = 1
    p_is_2: bool = False
    central_pairings: dict = field(default_factory=dict)
    rel_twist: dict = field(default_factory=dict)
    rel_id: str = "unknown"
    conjecture_assumed: bool = False
    emerton_conjecture_assumed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "I", self.datum.check_subset(self.I))
        object.__setattr__(self, "J", self.datum.check_subset(self.J))
        if self.e < 1:
            raise DomainError("the field degree e must be a positive integer")
        perp, perp1 = self.datum.perp(self.I)
        if not frozenset(self.central_pairings) <= perp:
            raise DomainError("central pairings are indexed by simple roots orthogonal to the Levi")
        for v in self.central_pairings.values():
            if v not in PAIRING_VALUES:
                raise DomainError(f"unknown pairing value {v!r}")
        if not frozenset(self.rel_twist) <= perp1:
            raise DomainError(
                "twist relations are indexed by orthogonal simple roots with one-dimensional root space"
            )
        for v in self.rel_twist.values():
            if v not in REL_VALUES:
                raise DomainError(f"unknown relation value {v!r}")
        if self.rel_id not in REL_VALUES:
            raise DomainError(f"unknown relation value {self.rel_id!r}")
        if self.I != self.J and (self.rel_id != "unknown" or self.rel_twist):
            raise DomainError("twist and identity relations compare representations of one Levi")

    # -- declared data accessors ------------------------------------------------

    def twist(self, a: int) -> str:
        return self.rel_twist.get(a, "unknown")

    def pairing(self, a: int) -> str:
        """Pairing value with omega = 1 folded in when p = 2."""
        v = self.central_pairings.get(a, "unknown")
        if self.p_is_2 and v == "one":
            return "omega_inverse"
        return v

    @property
    def perp(self) -> frozenset:
        return self.datum.perp(self.I)[0]

    @property
    def perp1(self) -> frozenset:
        return self.datum.perp(self.I)[1]


def lemma_gen_solvable(datum: RootDatum, I, alpha: int) -> bool:
    """Existence of a cocharacter separating one orthogonal twist from the others.

    Solvable integer system: pairs to 1 with alpha, to 0 with every other
    orthogonal simple root of one-dimensional root space, and to 0 with the
    Levi's simple roots (so it lands in the centre of the Levi).
    """
    I = datum.check_subset(I)
    _, perp1 = datum.perp(I)
    if alpha not in perp1:
        raise DomainError("the separating cocharacter test needs an orthogonal root with d = 1")
    rows = [datum.simple_roots[alpha]]
    rows += [datum.simple_roots[b] for b in sorted(perp1 - {alpha})]
    rows += [datum.simple_roots[g] for g in sorted(I)]
    rhs = unit_vector(0, len(rows))
    return solve_integer(rows, rhs) is not None


def check_consistency(sc: Scenario) -> list[Violation]:
    """Violations of the declared relations against central-character facts."""
    out: list[Violation] = []
    if sc.I != sc.J:
        return out
    datum = sc.datum
    perp1 = sorted(sc.perp1)
    lab = datum.labels
    for a in perp1:
        if sc.pairing(a) != "omega_inverse":
            continue
        # pairing omega_inverse forces the twisted conjugate to be sigma itself
        t = sc.twist(a)
        if (t == "yes" and sc.rel_id == "no") or (t == "no" and sc.rel_id == "yes"):
            out.append(
                Violation(
                    "central-twist",
                    (lab[a],),
                    f"pairing at {lab[a]} identifies the twisted conjugate with sigma, "
                    f"so rel_twist({lab[a]}) and rel_id must agree",
                )
            )
    separated = {
        a: sc.pairing(a) in ("one", "other") and lemma_gen_solvable(datum, sc.I, a)
        for a in perp1
    }
    for a in perp1:
        if not separated[a] or sc.twist(a) != "yes":
            continue
        if sc.rel_id == "yes":
            out.append(
                Violation(
                    "central-characters",
                    (lab[a],),
                    f"sigma and its twisted conjugate at {lab[a]} have distinct central "
                    "characters, so sigma' cannot be isomorphic to both",
                )
            )
    for i, a in enumerate(perp1):
        for b in perp1[i + 1 :]:
            if sc.twist(a) == "yes" and sc.twist(b) == "yes" and (separated[a] or separated[b]):
                out.append(
                    Violation(
                        "central-characters",
                        (lab[a], lab[b]),
                        f"the twisted conjugates at {lab[a]} and {lab[b]} have distinct "
                        "central characters, so sigma' cannot match both",
                    )
                )
    return out


def _levi_desc(datum, subsets, pattern) -> str:
    parts = {k: " ".join(datum.label_list(v)) or "-" for k, v in subsets.items()}
    return pattern.format(**parts)


def ext1_verdict(sc: Scenario) -> ExtVerdict:
    """Walk the decision tree; raises on an inconsistent scenario."""
    violations = check_consistency(sc)
    if violations:
        raise DomainError(
            "inconsistent scenario: " + "; ".join(v.message for v in violations)
        )
    datum = sc.datum
    I, J = sc.I, sc.J

    if not (I <= J or J <= I):
        if sc.sigma.right_cuspidal and sc.sigma_prime.left_cuspidal and sc.conjecture_assumed:
            return ExtVerdict(
                "Zero",
                value=0,
                description="no extensions between the two induced representations",
                conditional_on=(COND_GRADED_CONJ,),
                citations=(CITE_INCOMPARABLE_ZERO,),
            )
        return ExtVerdict(
            "Inconclusive",
            description="incomparable parabolics need cuspidality flags and the degree-one conjecture",
            citations=(CITE_NO_RULE,),
        )

    if sc.e > 1:
        if I == J:
            return ExtVerdict(
                "Iso",
                description=_levi_desc(
                    datum, {"I": I}, "induction identifies Ext^1_{{L[{I}]}}(sigma', sigma) with Ext^1_G"
                ),
                citations=(CITE_LARGE_FIELD,),
            )
        if J < I:
            return ExtVerdict(
                "Iso",
                description=_levi_desc(
                    datum,
                    {"I": I, "J": J},
                    "induction identifies Ext^1_{{L[{I}]}}(Ind along P[{J}]^- of sigma', sigma) with Ext^1_G",
                ),
                citations=(CITE_LARGE_FIELD_RIGHT,),
            )
        return ExtVerdict(
            "Iso",
            description=_levi_desc(
                datum,
                {"I": I, "J": J},
                "induction identifies Ext^1_{{L[{J}]}}(sigma', Ind along P[{I}]^- of sigma) with Ext^1_G",
            ),
            citations=(CITE_LARGE_FIELD_LEFT,),
        )

    if J < I and sc.sigma.right_cuspidal:
        return ExtVerdict(
            "Iso",
            description=_levi_desc(
                datum,
                {"I": I, "J": J},
                "induction identifies Ext^1_{{L[{I}]}}(Ind along P[{J}]^- of sigma', sigma) with Ext^1_G",
            ),
            citations=(CITE_QP_RIGHT,),
        )
    if I < J and sc.sigma_prime.left_cuspidal:
        return ExtVerdict(
            "Iso",
            description=_levi_desc(
                datum,
                {"I": I, "J": J},
                "induction identifies Ext^1_{{L[{J}]}}(sigma', Ind along P[{I}]^- of sigma) with Ext^1_G",
            ),
            citations=(CITE_QP_LEFT,),
        )

    if I == J:
        perp = sc.perp
        perp1 = sc.perp1
        if (
            datum.split
            and datum.isogeny_flags().center_connected
            and sc.sigma.supersingular
            and sc.sigma_prime.supersingular
        ):
            # split data have all multiplicities 1, so perp == perp1 here
            if any(sc.twist(a) == "yes" for a in perp) and sc.rel_id == "no":
                return ExtVerdict(
                    "ExactDim",
                    value=1,
                    description="the space of extensions between the induced representations is a line",
                    citations=(CITE_ZCNX_DIM1,),
                    side_facts=("Ext^1 over the Levi between sigma' and sigma vanishes",),
                )
            if (sc.rel_id == "yes" and not sc.p_is_2) or all(
                sc.twist(a) == "no" for a in perp
            ):
                return ExtVerdict(
                    "Iso",
                    description=_levi_desc(
                        datum, {"I": I}, "induction identifies Ext^1_{{L[{I}]}}(sigma', sigma) with Ext^1_G"
                    ),
                    citations=(CITE_ZCNX_ISO,),
                )
            if sc.p_is_2:
                if all(sc.twist(a) != "unknown" for a in perp):
                    count = sum(1 for a in perp if sc.twist(a) == "yes")
                    return ExtVerdict(
                        "ExactCokernel",
                        value=count,
                        description="the cokernel of induction on Ext^1 counts conjugate identifications",
                        citations=(CITE_ZCNX_P2,),
                    )
                count = sum(1 for a in perp if sc.twist(a) != "no")
                return ExtVerdict(
                    "UpperBoundCokernel",
                    value=count,
                    description="unknown relations leave only an upper bound for the cokernel of induction",
                    citations=(CITE_ZCNX_P2,),
                )
        if (
            sc.sigma.supercuspidal
            and sc.sigma_prime.supercuspidal
            and all(sc.twist(a) == "no" for a in perp1)
        ):
            return ExtVerdict(
                "Iso",
                description=_levi_desc(
                    datum, {"I": I}, "induction identifies Ext^1_{{L[{I}]}}(sigma', sigma) with Ext^1_G"
                ),
                citations=(CITE_SUPERCUSP_ISO,),
            )
        if sc.sigma.right_cuspidal or sc.sigma_prime.left_cuspidal:
            count = sum(1 for a in perp1 if sc.twist(a) != "no")
            return ExtVerdict(
                "UpperBoundCokernel",
                value=count,
                description="induction embeds the Levi extensions with cokernel bounded by the twisted matches",
                citations=(CITE_CUSP_BOUND,),
            )

    return ExtVerdict(
        "Inconclusive",
        description="declared flags and relations select no branch of the decision tree",
        citations=(CITE_NO_RULE,),
    )


def extn_mode(sc: Scenario, n: int) -> ExtVerdict:
    """Higher-degree analogue, conditional on the derived-functor comparison."""
    if not sc.emerton_conjecture_assumed:
        raise DomainError("the higher-degree mode requires emerton_conjecture_assumed")
    if sc.I != sc.J:
        raise DomainError("the higher-degree mode compares inductions from one parabolic")
    if n < 0:
        raise DomainError("the cohomological degree must be nonnegative")
    datum = sc.datum
    if n == 0:
        return ExtVerdict(
            "Iso",
            description="parabolic induction is fully faithful",
            citations=(CITE_FULL_FAITHFUL,),
        )
    if n < sc.e:
        return ExtVerdict(
            "Iso",
            description=f"induction is an isomorphism on Ext^{n} below the field degree",
            conditional_on=(COND_EMERTON,),
            citations=(CITE_LOW_DEGREE,),
        )
    if n == sc.e:
        if (
            datum.split
            and datum.isogeny_flags().center_connected
            and sc.sigma.supersingular
            and sc.sigma_prime.supersingular
            and any(sc.twist(a) == "yes" for a in sc.perp)
            and sc.rel_id == "no"
        ):
            return ExtVerdict(
                "ExactDim",
                value=1,
                description=f"the space Ext^{n} between the induced representations is a line",
                conditional_on=(COND_EMERTON,),
                citations=(CITE_TOP_DEGREE_DIM1,),
                side_facts=(f"Ext^{n} over the Levi between sigma' and sigma vanishes",),
            )
        if sc.sigma.supercuspidal and sc.sigma_prime.supercuspidal:
            count = sum(1 for a in sc.perp1 if sc.twist(a) != "no")
            if count == 0:
                return ExtVerdict(
                    "Iso",
                    description=f"no twisted matches: induction is an isomorphism on Ext^{n}",
                    conditional_on=(COND_EMERTON,),
                    citations=(CITE_TOP_DEGREE_BOUND,),
                )
            return ExtVerdict(
                "UpperBoundCokernel",
                value=count,
                description=f"induction embeds Ext^{n} with cokernel bounded by the twisted matches",
                conditional_on=(COND_EMERTON,),
                citations=(CITE_TOP_DEGREE_BOUND,),
            )
        return ExtVerdict(
            "Inconclusive",
            description="the top-degree rules need supercuspidal flags",
            citations=(CITE_NO_RULE,),
        )
    return ExtVerdict(
        "Inconclusive",
        description="no rule applies above the field degree",
        citations=(CITE_NO_RULE,),
    )
