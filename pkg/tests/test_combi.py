import math

from yhecke import combi


def test_perm_basics():
    w = (3, 1, 2)
    assert combi.perm_compose(w, combi.perm_inverse(w)) == (1, 2, 3)
    assert combi.perm_length(w) == 2
    word = combi.reduced_word(w)
    out = combi.identity_perm(3)
    for i in word:
        out = combi.perm_compose(out, combi.transposition(3, i))
    assert out == w and len(word) == combi.perm_length(w)
    assert len(combi.all_perms(4)) == 24


def test_reduced_words_all_s4():
    for w in combi.all_perms(4):
        word = combi.reduced_word(w)
        assert len(word) == combi.perm_length(w)
        out = combi.identity_perm(4)
        for i in word:
            out = combi.perm_compose(out, combi.transposition(4, i))
        assert out == w


def test_ordered_partitions():
    parts = combi.enumerate_ordered(2, 3)
    assert len(parts) == 8
    I = (1, 2, 1)
    assert combi.parts_of(I, 2) == ((1, 3), (2,))
    assert combi.composition_of(I, 2) == (2, 1)
    pi = combi.transposition(3, 1)
    # the place permutation moves j to pi(j), keeping its label
    assert combi.act_sn(pi, I) == (2, 1, 1)
    assert combi.act_sd((2, 1), I) == (2, 1, 2)
    # the two actions commute
    for J in parts:
        assert combi.act_sd((2, 1), combi.act_sn(pi, J)) == \
            combi.act_sn(pi, combi.act_sd((2, 1), J))


def test_classes_and_counts():
    assert combi.orbit_class((3, 1, 3, 2)) == (1, 2, 1, 3)
    assert combi.class_blocks((2, 1, 2)) == ((1, 3), (2,))
    assert combi.count_classes(2, 2) == 2
    assert combi.count_classes(2, 3) == 4
    assert combi.count_classes(3, 3) == 5
    assert len(combi.all_classes(3, 3)) == 5
    for I in combi.enumerate_ordered(3, 3):
        assert combi.orbit_class(I) in combi.sd_orbit(I, 3)


def test_partitions_and_hooks():
    assert len(combi.partitions(5)) == 7
    assert combi.conjugate((3, 1)) == (2, 1, 1)
    assert sorted(combi.hook_lengths((2, 1))) == [1, 1, 3]
    for n in range(1, 7):
        assert sum(combi.hook_dim(lam) ** 2
                   for lam in combi.partitions(n)) == math.factorial(n)


def test_e_regular():
    assert combi.e_regular(2, 2) == [(2,)]
    assert combi.e_regular(3, 2) == [(3,), (2, 1)]
    assert combi.e_regular(3, None) == combi.partitions(3)
    assert len(combi.multipartitions(2, 2, 2)) == 3
    assert len(combi.multipartitions(2, 2)) == 5


def test_standard_tableaux():
    assert len(combi.standard_tableaux((2, 1))) == 2
    assert len(combi.standard_tableaux((3, 2))) == 5
    assert combi.standard_tableaux(()) == [()]
    t = ((1, 2), (3,))
    assert combi.tableau_position(t, 3) == (1, 0)
    assert combi.tableau_swap(t, 2) == ((1, 3), (2,))
    for lam in combi.partitions(5):
        assert len(combi.standard_tableaux(lam)) == combi.hook_dim(lam)


def test_characters():
    assert combi.cycle_type((2, 1, 4, 3)) == (2, 2)
    # full character table of S_3
    assert combi.sn_character((3,), (1, 1, 1)) == 1
    assert combi.sn_character((2, 1), (1, 1, 1)) == 2
    assert combi.sn_character((2, 1), (2, 1)) == 0
    assert combi.sn_character((2, 1), (3,)) == -1
    assert combi.sn_character((1, 1, 1), (2, 1)) == -1
    for m in (2, 3, 4, 5):
        assert combi.character_inner_check(m)
