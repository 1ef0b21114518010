import pytest

from helpers import brute_function_number, brute_set_number, small_graphs
from multidom import (
    DominationSpec,
    InfeasibleSpecError,
    ResourceLimitError,
    cycle,
    exact_function_number,
    exact_set_number,
    gnp,
    path,
    petersen,
    verify_function,
    verify_set,
)


def test_known_set_numbers():
    c4 = cycle(4)
    assert exact_set_number(c4, DominationSpec.classical()).value == 2
    assert exact_set_number(c4, DominationSpec.k_tuple(2)).value == 3
    assert exact_set_number(c4, DominationSpec.total_k(1)).value == 2
    assert exact_set_number(c4, DominationSpec.parametric(1, 2)).value == 2
    assert exact_set_number(petersen(), DominationSpec.classical()).value == 3
    assert exact_set_number(cycle(5), DominationSpec.k_dominating(2)).value == 3
    assert exact_set_number(path(3), DominationSpec.classical()).value == 1


def test_known_function_numbers():
    c4 = cycle(4)
    assert exact_function_number(c4, DominationSpec.brace_k(2)).value == 3
    # rs with r=1, s=2 is exactly 2-tuple domination
    r = exact_function_number(c4, DominationSpec.rs((1,) * 4, (2,) * 4))
    assert r.value == 3
    # total r=s=1 is total domination
    r = exact_function_number(c4, DominationSpec.total_rs((1,) * 4, (1,) * 4))
    assert r.value == 2


def test_witness_contract():
    c4 = cycle(4)
    res = exact_set_number(c4, DominationSpec.k_tuple(2))
    rep = verify_set(c4, DominationSpec.k_tuple(2), res.witness)
    assert rep.valid and rep.weight == res.value
    fres = exact_function_number(c4, DominationSpec.brace_k(2))
    frep = verify_function(c4, DominationSpec.brace_k(2), fres.witness)
    assert frep.valid and frep.weight == fres.value
    assert fres.nodes_explored > 0


SET_SPECS = [
    DominationSpec.classical(),
    DominationSpec.k_dominating(2),
    DominationSpec.k_tuple(2),
    DominationSpec.total_k(1),
    DominationSpec.parametric(2, 3),
]


@pytest.mark.parametrize("seed", range(8))
def test_set_oracle_matches_brute_force(seed):
    g = gnp(7, 0.45, seed=seed)
    for spec in SET_SPECS:
        ok, _ = spec.feasibility(g)
        if not ok:
            continue
        k_req, l_req = spec.requirements()
        want = brute_set_number(g, k_req, l_req)
        got = exact_set_number(g, spec).value
        assert got == want, (spec.label(), seed)


@pytest.mark.parametrize("seed", range(5))
def test_function_oracle_matches_brute_force(seed):
    g = gnp(6, 0.5, seed=seed)
    for caps, demands, open_nb in [
        ((2,) * 6, (2,) * 6, False),
        ((1,) * 6, (1,) * 6, False),
        ((2,) * 6, (1, 2, 1, 2, 1, 2), False),
        ((1,) * 6, (1,) * 6, True),
    ]:
        spec = (DominationSpec.total_rs(caps, demands) if open_nb
                else DominationSpec.rs(caps, demands))
        ok, _ = spec.feasibility(g)
        if not ok:
            continue
        want = brute_function_number(g, caps, demands, open_nb)
        got = exact_function_number(g, spec).value
        assert got == want


def test_brace_one_equals_classical_domination():
    for name, g in small_graphs(8)[:12]:
        a = exact_function_number(g, DominationSpec.brace_k(1), limit_n=8).value
        b = exact_set_number(g, DominationSpec.classical()).value
        assert a == b, name


def test_brace_chain_bounds():
    # gamma <= gamma_{k} <= k * gamma
    for name, g in small_graphs(7)[:8]:
        gam = exact_set_number(g, DominationSpec.classical()).value
        g2 = exact_function_number(g, DominationSpec.brace_k(2), limit_n=8).value
        assert gam <= g2 <= 2 * gam, name


def test_resource_guards():
    big = gnp(25, 0.3, seed=1)
    with pytest.raises(ResourceLimitError):
        exact_set_number(big, DominationSpec.classical())  # default limit_n=20
    g = gnp(14, 0.3, seed=1)
    with pytest.raises(ResourceLimitError):
        exact_function_number(g, DominationSpec.brace_k(2))  # default limit_n=12
    with pytest.raises(ResourceLimitError) as exc:
        exact_set_number(g, DominationSpec.classical(), node_budget=3)
    assert exc.value.partial is not None


def test_exact_value_never_exceeds_construction_weight():
    from multidom import construct_parametric, construct_rs

    for seed in range(4):
        g = gnp(9, 0.4, seed=seed)
        spec = DominationSpec.parametric(2, 2)
        if spec.feasibility(g)[0] and g.min_degree >= 2:
            exact = exact_set_number(g, spec).value
            for s in range(5):
                res = construct_parametric(g, 2, 2, seed=s, max_trials=1)
                assert exact <= res.weight
        vec = (2,) * g.n
        exact = exact_function_number(g, DominationSpec.rs(vec, vec), limit_n=9).value
        for s in range(5):
            res = construct_rs(g, vec, vec, seed=s, max_trials=1)
            assert exact <= res.weight


def test_infeasible_spec_refused():
    c4 = cycle(4)
    with pytest.raises(InfeasibleSpecError):
        exact_set_number(c4, DominationSpec.total_k(3))
    with pytest.raises(InfeasibleSpecError):
        exact_function_number(c4, DominationSpec.rs((1,) * 4, (5,) * 4))


def test_wrong_variant_type():
    c4 = cycle(4)
    with pytest.raises(ValueError):
        exact_set_number(c4, DominationSpec.brace_k(2))
    with pytest.raises(ValueError):
        exact_function_number(c4, DominationSpec.classical())


def test_to_dict_shapes():
    c4 = cycle(4)
    d = exact_set_number(c4, DominationSpec.classical()).to_dict()
    assert set(d["witness"].keys()) == {"set"}
    d = exact_function_number(c4, DominationSpec.brace_k(2)).to_dict()
    assert set(d["witness"].keys()) == {"values"}
