import random

import pytest

from gprc.errors import (
    EmptyLine,
    IndexOutOfRange,
    MalformedInput,
    NotCylindrical,
    UnknownSymbol,
)
from gprc.genperm import (
    CylinderDiagram,
    Diagonal,
    GeneralizedPermutation,
    erase_symbols,
    format_permutation,
    from_cylinder_diagram,
    inverse,
    is_balanced,
    is_cylindrical,
    is_true_permutation,
    parse,
    to_cylinder_diagram,
)


def gp(text):
    return parse(text)


def random_permutations(count, seed=0xC0FFEE, max_symbols=6):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_symbols)
        word = list(range(n)) * 2
        rng.shuffle(word)
        cut = rng.randint(1, 2 * n - 1)
        out.append(GeneralizedPermutation(word[:cut], word[cut:]))
    return out


def test_parse_canonicalizes_by_first_appearance():
    assert gp("1 2 3 4 / 4 3 2 1").pair == ((0, 1, 2, 3), (3, 2, 1, 0))
    assert gp("0 2 2 / 1 1 0").pair == ((0, 1, 1), (2, 2, 0))


def test_parse_rejects_wrong_multiplicity():
    with pytest.raises(MalformedInput):
        gp("1 2 / 1")
    with pytest.raises(MalformedInput):
        gp("1 1 1 1 / 2 2")
    with pytest.raises(MalformedInput):
        gp("1 1 / ")
    with pytest.raises(MalformedInput):
        gp("1 / 1 / 1")


def test_parse_accepts_newlines_and_identifiers():
    assert gp("a b b\nc c a").pair == ((0, 1, 1), (2, 2, 0))


def test_format_round_trips():
    for p in random_permutations(200):
        assert parse(format_permutation(p)) == p


def test_is_true_permutation():
    assert is_true_permutation(gp("0 1 2 3 / 3 2 1 0"))
    assert not is_true_permutation(gp("0 1 1 / 2 2 0"))
    assert is_true_permutation(gp("0 / 0"))


def test_is_cylindrical():
    assert is_cylindrical(gp("0 1 1 / 2 3 2 3 0"))
    assert is_cylindrical(gp("0 1 2 3 / 3 2 1 0"))
    assert not is_cylindrical(gp("0 1 0 1 / 2 2"))
    # first/last symbols match but the symbol sets are nested
    assert not is_cylindrical(gp("0 1 1 2 / 2 0"))


def test_inverse():
    assert inverse(gp("0 1 2 3 / 3 2 1 0")) == gp("0 1 2 3 / 3 2 1 0")
    assert inverse(gp("0 1 1 / 2 2 0")) == gp("0 0 1 / 1 2 2")
    for p in random_permutations(200, seed=7):
        assert inverse(inverse(p)) == p
        assert is_balanced(p) == is_balanced(inverse(p))


def test_is_balanced():
    assert is_balanced(gp("0 1 2 3 / 3 2 1 0"))
    assert is_balanced(gp("0 1 1 / 2 2 0"))
    assert not is_balanced(gp("0 1 1 / 2 2 3 3 0"))


def test_erase_symbols_worked_example():
    base = gp("0 1 2 3 4 5 6 7 8 / 4 3 2 5 8 7 6 1 0")
    out = erase_symbols(base, {3, 5})
    assert out == gp("0 1 2 4 6 7 8 / 4 2 8 7 6 1 0")
    assert out.pair == ((0, 1, 2, 3, 4, 5, 6), (3, 2, 6, 5, 4, 1, 0))


def test_erase_symbols_errors():
    p = gp("0 1 1 / 2 2 0")
    assert erase_symbols(p, set()) == p
    with pytest.raises(UnknownSymbol):
        erase_symbols(p, {9})
    with pytest.raises(EmptyLine):
        erase_symbols(gp("0 0 / 1 1"), {0})


def test_to_cylinder_diagram():
    assert to_cylinder_diagram(gp("0 1 1 / 2 3 2 3 0")) == CylinderDiagram(
        (1, 1), (2, 3, 2, 3)
    )
    assert to_cylinder_diagram(gp("0 1 2 3 / 3 2 1 0")) == CylinderDiagram(
        (1, 2, 3), (3, 2, 1)
    )
    with pytest.raises(NotCylindrical):
        to_cylinder_diagram(gp("0 1 0 1 / 2 2"))
    with pytest.raises(NotCylindrical):
        to_cylinder_diagram(gp("0 / 0"))


def test_from_cylinder_diagram():
    cd = CylinderDiagram((1, 1), (2, 3, 2, 3))
    assert from_cylinder_diagram(cd, Diagonal.TOP_FIRST, 0, 0) == gp("0 1 1 / 2 3 2 3 0")
    assert from_cylinder_diagram(cd, Diagonal.BOTTOM_FIRST, 0, 0) == gp(
        "1 1 0 / 0 2 3 2 3"
    )
    with pytest.raises(IndexOutOfRange):
        from_cylinder_diagram(cd, Diagonal.TOP_FIRST, 2, 0)


def test_cylinder_diagram_round_trip():
    rng = random.Random(3)
    for p in random_permutations(300, seed=11):
        if not is_cylindrical(p):
            continue
        try:
            cd = to_cylinder_diagram(p)
        except NotCylindrical:
            continue
        diag = rng.choice([Diagonal.TOP_FIRST, Diagonal.BOTTOM_FIRST])
        i = rng.randrange(len(cd.top))
        j = rng.randrange(len(cd.bottom))
        assert to_cylinder_diagram(from_cylinder_diagram(cd, diag, i, j)) == cd


def test_cylinder_diagram_equality_quotient():
    # the four permutations of the same one-cylinder surface
    perms = ["0 1 2 1 2 3 / 3 4 4 0", "0 3 1 2 1 2 / 4 3 4 0",
             "0 4 4 3 / 3 2 1 2 1 0", "0 3 4 4 / 2 1 2 1 3 0"]
    diagrams = {to_cylinder_diagram(gp(t)) for t in perms}
    assert len(diagrams) == 1
    # swap-and-reverse and independent rotations
    cd = CylinderDiagram((1, 2, 3), (3, 4, 4, 2, 1))
    assert cd == CylinderDiagram((2, 3, 1), (4, 2, 1, 3, 4))
    assert cd == CylinderDiagram((1, 2, 4, 4, 3), (3, 2, 1))
    assert cd != CylinderDiagram((1, 2, 3), (3, 4, 2, 4, 1))


def test_permutation_is_hashable_and_immutable():
    p = gp("0 1 1 / 2 2 0")
    assert len({p, gp("0 1 1 / 2 2 0")}) == 1
    with pytest.raises(AttributeError):
        p.top = ()
