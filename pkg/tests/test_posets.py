import itertools

import pytest

from weylord import (
    DomainError,
    FinitePoset,
    LowerSet,
    bruhat_poset,
    check_lin_identity,
    lattice_ops,
    preset_datum,
    principal_lower_set,
    weyl_group,
)


@pytest.fixture(scope="module")
def a2_poset():
    W = weyl_group(preset_datum("A2"))
    return W, bruhat_poset(W)


def test_validation_rejects_non_poset():
    with pytest.raises(DomainError, match="antisymmetric"):
        FinitePoset.from_pairs([1, 2], {(1, 2), (2, 1)})
    with pytest.raises(DomainError, match="transitive"):
        FinitePoset.from_pairs([1, 2, 3], {(1, 2), (2, 3)})
    FinitePoset.from_pairs([1, 2, 3], {(1, 2), (2, 3), (1, 3)})


def test_principal_lower_sets(a2_poset):
    W, P = a2_poset
    assert principal_lower_set(P, W.identity).members() == (W.identity,)
    assert set(principal_lower_set(P, W.w0).members()) == set(W.elements)
    s12 = W.parse_word("a1 a2")
    expected = {W.identity, W.parse_word("a1"), W.parse_word("a2"), s12}
    assert set(principal_lower_set(P, s12).members()) == expected


def test_lattice_ops(a2_poset):
    W, P = a2_poset
    s1 = principal_lower_set(P, W.parse_word("a1"))
    s2 = principal_lower_set(P, W.parse_word("a2"))
    empty = LowerSet(P, 0)
    union, inter = lattice_ops(s1, s2)
    assert set(union.members()) == {W.identity, W.parse_word("a1"), W.parse_word("a2")}
    assert inter.members() == (W.identity,)
    assert (s1 | empty) == s1 and (s1 & empty) == empty


def test_lower_set_closure_enforced(a2_poset):
    W, P = a2_poset
    with pytest.raises(DomainError, match="downward closed"):
        LowerSet.from_members(P, [W.parse_word("a1")])


def test_mismatched_posets_rejected(a2_poset):
    W, P = a2_poset
    Q = FinitePoset.from_pairs(["x"], set())
    with pytest.raises(DomainError, match="different posets"):
        principal_lower_set(P, W.identity) | principal_lower_set(Q, "x")


def test_lower_sets_closed_under_ops_exhaustively():
    # all lower sets of the Bruhat poset of W(A2): unions and intersections stay closed
    W = weyl_group(preset_datum("A2"))
    P = bruhat_poset(W)
    all_lower = []
    for mask in range(1 << len(P)):
        try:
            all_lower.append(LowerSet(P, mask))
        except DomainError:
            pass
    for s1, s2 in itertools.product(all_lower[:64], all_lower[:64]):
        u, i = lattice_ops(s1, s2)  # constructors re-validate closure
        assert u.mask == s1.mask | s2.mask and i.mask == s1.mask & s2.mask


def test_every_lower_set_is_union_of_principal_of_maximal():
    W = weyl_group(preset_datum("A2"))
    P = bruhat_poset(W)
    for mask in range(1 << len(P)):
        try:
            ls = LowerSet(P, mask)
        except DomainError:
            continue
        acc = 0
        for m in ls.maximal_elements():
            acc |= P.down_mask(m)
        assert acc == ls.mask


def test_lin_identity_on_bruhat(a2_poset):
    W, P = a2_poset
    for w in W:
        assert check_lin_identity(P, lambda x: x.length, w)


def test_lin_identity_singleton():
    P = FinitePoset.from_pairs(["x"], set())
    assert check_lin_identity(P, lambda x: 7, "x")


def test_lin_identity_requires_strict_monotonicity():
    P = FinitePoset.from_pairs(["a", "b"], {("a", "b")})
    with pytest.raises(DomainError, match="strictly monotonic"):
        check_lin_identity(P, lambda x: 0, "b")


def test_poset_membership_errors(a2_poset):
    W, P = a2_poset
    Q = FinitePoset.from_pairs(["x"], set())
    with pytest.raises(DomainError, match="belong"):
        P.leq("x", W.identity)
    with pytest.raises(DomainError):
        principal_lower_set(Q, "y")
