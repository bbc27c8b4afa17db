import pytest
from hypothesis import assume, given, strategies as st

from localp1.monomials import ZERO, mono
from localp1.sheafconfig import (INCONSISTENT, DecomposableError, Flag, ModuleConfig,
                                 SheafType, Stratum, _swap_images, build_config, characters,
                                 cokernel_degree, config_121, config_22, cycle_rank,
                                 euler_char, is_canonical, is_reduced, is_swap_fixed,
                                 kernel_degree, reduce_config, strata, stratum_chi)

from strategies import configs

x, y, one = mono(1, 0), mono(0, 1), mono(0, 0)


def ex52():
    return config_121(2, 0, (-1, -1), -1, (x, y), (mono(0, 2), mono(1, 1)))


def test_sheaf_type():
    t = SheafType.parse("(1,2,1)")
    assert t.rows == (1, 2, 1) and t.degree == 4 and str(t) == "(1,2,1)"
    with pytest.raises(ValueError):
        SheafType((1, 0))


def test_config_validation():
    with pytest.raises(ValueError, match="non-increasing"):
        build_config(1, (2, 1), [[0, 1], [0]], [[[one, x]]])
    with pytest.raises(ValueError, match="degree"):
        build_config(1, (1, 1), [[0], [-1]], [[[x]]])
    with pytest.raises(ValueError, match="shape"):
        ModuleConfig(1, SheafType((1, 1)), ((0,),), ())


def test_euler_char_and_degrees():
    cfg = ex52()
    assert euler_char(cfg) == 1
    assert kernel_degree(0, 0, -1, 2, x, y) == -1
    assert cokernel_degree(-1, -1, -1, 2, mono(0, 2), mono(1, 1)) == 0
    # gcd with ZERO is the other entry's degree
    assert kernel_degree(0, 0, -1, 2, ZERO, y) == 0


def test_characters_tree_and_cycle():
    tree = build_config(1, (1, 1, 1), [[0], [0], [-1]], [[[x]], [[one]]])
    assert characters(tree) == {(0, 0): (0, 0), (1, 0): (-1, 0), (2, 0): (-1, 0)}
    assert cycle_rank(tree) == 0
    cfg = ex52()
    chars = characters(cfg)
    assert chars is not INCONSISTENT
    assert cycle_rank(cfg) == 1
    for (j, i, l) in cfg.positions():
        u = cfg.entry((j, i, l))
        src, tgt = chars[(j, l)], chars[(j + 1, i)]
        assert (src[0] - tgt[0], src[1] - tgt[1]) == u.exponent


def test_characters_inconsistent_cycle():
    # alpha1 beta1 = x y^2 differs from alpha2 beta2 = x^2 y
    cfg = config_121(2, 0, (-1, -1), -1, (x, y), (mono(0, 2), mono(2, 0)))
    assert characters(cfg) is INCONSISTENT


def test_decomposable_raises():
    cfg = config_121(2, 0, (-1, -1), -1, (x, ZERO), (ZERO, mono(1, 1)))
    with pytest.raises(DecomposableError):
        characters(cfg)


@given(configs())
def test_text_round_trip(cfg):
    assert ModuleConfig.from_text(cfg.to_text()) == cfg


@given(configs(rows=(2, 2)))
def test_text_round_trip_22(cfg):
    assert ModuleConfig.from_text(cfg.to_text()) == cfg


def test_from_text_rejects_unknown_lines():
    with pytest.raises(ValueError):
        ModuleConfig.from_text("k 1\nbogus 2")


def test_strata_and_chi():
    cfg = ex52()
    sts = strata(cfg)
    assert [s.flag for s in sts] == [Flag.GENERIC, Flag.CYCLE_RELATION_VANISHES]
    assert [stratum_chi(s) for s in sts] == [-1, 1]
    with_zero = config_121(2, 0, (-1, -1), -1, (x, y), (ZERO, mono(1, 1)))
    assert strata(with_zero) == [Stratum(with_zero)]
    assert stratum_chi(Stratum(with_zero)) == 1
    with pytest.raises(ValueError):
        Stratum(with_zero, Flag.CYCLE_RELATION_VANISHES)


def test_swap_fixed_cycle_has_no_chi():
    # equal twists in the middle row and alpha, beta swapped into themselves
    cfg = config_121(2, 0, (-1, -1), -1, (x, x), (mono(1, 1), mono(1, 1)))
    assert is_swap_fixed(cfg)
    assert stratum_chi(Stratum(cfg)) == 0


def test_reduced_examples():
    assert is_reduced(ex52())
    # the 1,1 entry of the first row kills against the 1,2 entry
    assert not is_reduced(_c22(((mono(2, 0), ZERO), (x, y))))


# The (2,2) family that showed reducedness is not swap-equivariant.
SIX = [(mono(2, 0), y, x), (mono(1, 1), y, x), (mono(0, 2), y, x),
       (mono(2, 0), x, y), (mono(1, 1), x, y), (mono(0, 2), x, y)]


def _c22(phi):
    return config_22(3, (0, 0), (-1, -2), phi)


def test_swap_image_of_reduced_config_may_reduce_elsewhere():
    c = _c22(((ZERO, mono(2, 0)), (y, x)))
    swapped = _c22(((mono(2, 0), ZERO), (x, y)))
    assert swapped in set(_swap_images(c))
    assert is_reduced(c) and not is_reduced(swapped)
    assert reduce_config(swapped) == _c22(((ZERO, mono(1, 1)), (x, y)))


def test_induced_swap_action_is_a_free_involution():
    reps = [_c22(((ZERO, p12), (p21, p22))) for p12, p21, p22 in SIX]
    reps += [_c22(((mono(2, 0), ZERO), (y, x))), _c22(((mono(0, 2), ZERO), (x, y)))]
    assert all(is_reduced(c) for c in reps)

    def act(c):
        (img,) = [i for i in _swap_images(c) if i != c]
        return reduce_config(img)

    for c in reps:
        assert act(c) in reps
        assert act(c) != c
        assert act(act(c)) == c


@given(configs(k_max=3, span=3))
def test_reduce_config_reaches_a_reduced_config(cfg):
    try:
        chars = characters(cfg)
    except DecomposableError:
        assume(False)
    assume(chars is not INCONSISTENT)
    red = reduce_config(cfg)
    try:
        assert is_reduced(red)
    except DecomposableError:
        pass
    assert len(red.zero_positions()) >= len(cfg.zero_positions())
    assert red.twists == cfg.twists


@given(configs(rows=(2, 2), k_max=3, span=2))
def test_canonical_member_in_every_swap_orbit(cfg):
    orbit = set(_swap_images(cfg))
    assert cfg in orbit
    assert sum(1 for c in orbit if is_canonical(c)) == 1
