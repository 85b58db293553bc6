import pytest

from combinatorics.errors import ConsistencyError, DomainError, PreconditionError
from combinatorics.characters import staircase_weight_mult
from combinatorics.partitions import Partition, add_scaled, conjugate, l_core, partitions_of, staircase
from combinatorics.special import SpecialParams
from theorems import (
    Decomposition,
    TheoremBase,
    TheoremMetadata,
    block_component_labels,
    decompose_a31b,
    decompose_a31b_dual,
    decompose_hook,
    decompose_power_hook,
    decompose_staircase,
    theorem_registry,
)
from theorems.built_in.staircase import StaircaseTheorem
from theorems.core.executor import GridExecutor
from theorems.core.models import TheoremFamily
from theorems.core.registry import TheoremRegistry


def young(result):
    return {tuple(s.young) for s in result.summands}


def test_staircase_examples():
    result = decompose_staircase(2, 6, 3)
    assert result.specht == [6, 1, 1, 1]
    assert young(result) == {(8, 1), (6, 3)}
    assert young(decompose_staircase(2, 4, 3)) == {(4, 3)}

    result = decompose_staircase(3, 3, 2)
    assert result.specht == [3, 2, 1]
    assert young(result) == {(3, 2, 1)}


@pytest.mark.parametrize(
    "m, a, b",
    [(2, 6, 3), (2, 10, 7), (3, 5, 4), (3, 9, 10), (4, 8, 5), (5, 11, 12)],
)
def test_staircase_summands_keep_degree_and_core(m, a, b):
    result = decompose_staircase(m, a, b)
    degree = sum(result.specht)
    for label in result.labels():
        assert label.degree == degree
        assert l_core(label, 2) == staircase(m)
    assert result.summands


def test_staircase_characteristic_zero_is_a_single_summand_per_pair():
    result = decompose_staircase(2, 6, 3, p=0)
    assert young(result) == {(8, 1), (6, 3)}
    assert all(s.mult == 1 for s in result.summands)


@pytest.mark.parametrize("m, a, b", [(2, 5, 3), (2, 6, 2), (1, 3, 2), (3, 2, 2), (3, 5, 0)])
def test_staircase_preconditions(m, a, b):
    with pytest.raises(PreconditionError) as excinfo:
        decompose_staircase(m, a, b)
    assert excinfo.value.violations


def test_staircase_rejects_bad_characteristic():
    with pytest.raises(DomainError):
        decompose_staircase(2, 6, 3, p=4)


def test_hooks():
    result = decompose_hook(3, 2, p=2)
    assert result.specht == [3, 1, 1]
    assert young(result) == {(3, 2)}
    assert young(decompose_hook(1, 2, p=0)) == {(3,)}
    assert young(decompose_hook(6, 3)) == young(decompose_staircase(2, 6, 3))
    with pytest.raises(PreconditionError):
        decompose_hook(2, 2)


@pytest.mark.parametrize("a, b", [(5, 2), (7, 4), (9, 6), (1, 4)])
def test_odd_hooks_have_trivial_core_of_size_one(a, b):
    for label in decompose_hook(a, b).labels():
        assert l_core(label, 2).parts == (1,)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_power_hooks(k):
    result = decompose_power_hook(k)
    assert result.specht == [2 ** k + 2] + [1] * (2 ** k - 1)
    assert len(result.summands) == k
    expected = {(2 ** k + 2 ** j, 2 ** k - 2 ** j + 1) for j in range(1, k + 1)}
    assert young(result) == expected


def test_power_hook_small_cases():
    assert young(decompose_power_hook(1)) == {(4, 1)}
    assert young(decompose_power_hook(3)) == {(16, 1), (12, 5), (10, 7)}
    with pytest.raises(PreconditionError):
        decompose_power_hook(0)


def test_a31b_example():
    result = decompose_a31b(14, 9)
    assert result.specht == [14, 3] + [1] * 8
    assert young(result) == {(18, 5, 2), (14, 11), (14, 9, 2)}
    assert result.render() == "Sp(14,3,1^8) = Y(18,5,2) + Y(14,11) + Y(14,9,2)"


def test_a31b_smallest_case():
    assert young(decompose_a31b(6, 3)) == {(6, 3, 2)}


@pytest.mark.parametrize("a, b", [(8, 9), (5, 9), (2, 9), (14, 8), (14, 1)])
def test_a31b_preconditions(a, b):
    with pytest.raises(PreconditionError):
        decompose_a31b(a, b)


def test_a31b_dual():
    primal = decompose_a31b(14, 9)
    dual = decompose_a31b_dual(14, 9)
    assert dual.specht == [10, 2, 2] + [1] * 11
    assert Partition(tuple(dual.specht)) == conjugate(primal.specht_label)
    assert dual.multiset() == primal.multiset()
    assert dual.render().startswith("Sp(10,2^2,1^11) = ")


def test_block_components():
    result = block_component_labels(2, 6, 3)
    assert result.specht is None
    assert result.permutation == [6, 3]
    assert result.core == [2, 1]
    assert young(result) == {(8, 1), (6, 3)}
    assert result.render() == "M(6,3) [core (2,1)] = Y(8,1) + Y(6,3)"
    assert young(block_component_labels(2, 4, 1)) == {(4, 1)}


def test_block_components_at_l3():
    assert young(block_component_labels(2, 4, 2, SpecialParams(l=3, p=2))) == {(4, 2)}
    result = block_component_labels(2, 7, 5, SpecialParams(l=3, p=0))
    assert young(result) == {(10, 2), (7, 5)}
    assert result.core == [4, 2]


def test_block_components_with_three_rows():
    result = block_component_labels(3, 5, 4)
    assert result.permutation == [5, 4, 1]
    for label in result.labels():
        assert l_core(label, 2) == staircase(3)


def test_block_component_preconditions():
    with pytest.raises(PreconditionError):
        block_component_labels(2, 5, 3)
    with pytest.raises(DomainError):
        theorem_registry.require_theorem("block-component").decompose(m=2, a=6, b=3, l=1, p=2)
    with pytest.raises(DomainError):
        block_component_labels(2, 6, 3, SpecialParams(l=2, p=9))


def test_to_dict_keys():
    assert list(decompose_staircase(2, 6, 3).to_dict()) == ["theorem", "parameters", "specht", "summands"]
    block = block_component_labels(2, 6, 3).to_dict()
    assert block["permutation"] == [6, 3]
    assert block["core"] == [2, 1]


def test_decomposition_json_round_trip():
    result = decompose_a31b(14, 9)
    restored = Decomposition.model_validate(result.model_dump())
    assert restored == result
    assert restored.render() == result.render()


def test_multiplicities_render():
    result = Decomposition.build(
        theorem="staircase",
        parameters={},
        labels=[Partition((8, 3)), Partition((8, 3)), Partition((6, 3, 2))],
        specht=Partition((8, 3)),
    )
    assert result.render() == "Sp(8,3) = Y(8,3)^(2) + Y(6,3,2)"
    empty = Decomposition.build(theorem="staircase", parameters={}, labels=[], specht=Partition((2,)))
    assert empty.render() == "Sp(2) = 0"


def test_registry_lookup():
    assert {"staircase", "hook", "power-hook", "a31b", "dual-a31b", "block-component"} <= set(
        theorem_registry.list_theorems()
    )
    assert theorem_registry.resolve_name("example63") == "power-hook"
    assert theorem_registry.get_theorem("a31b-dual") is theorem_registry.get_theorem("dual-a31b")
    assert theorem_registry.get_theorem("no-such-theorem") is None
    with pytest.raises(KeyError):
        theorem_registry.require_theorem("no-such-theorem")
    stats = theorem_registry.get_registry_stats()
    assert stats["total_theorems"] >= 6
    assert stats["families"]["a31b"] == 2


def test_resolve_rejects_bad_parameters():
    staircase_theorem = theorem_registry.require_theorem("staircase")
    with pytest.raises(PreconditionError):
        staircase_theorem.decompose(m=2, a=6)
    with pytest.raises(PreconditionError):
        staircase_theorem.decompose(m=2, a=6, b=3, q=1)
    with pytest.raises(PreconditionError):
        theorem_registry.require_theorem("a31b").decompose(a=14, b=9, p=3)


def test_results_are_cached():
    theorem = theorem_registry.require_theorem("hook")
    first = theorem.decompose(a=9, b=4)
    hits = theorem.get_statistics()["cache_hits"]
    assert theorem.decompose(a=9, b=4) is first
    assert theorem.get_statistics()["cache_hits"] == hits + 1


class _BrokenTheorem(TheoremBase):
    @classmethod
    def get_metadata(cls):
        return TheoremMetadata(
            name="broken",
            display_name="Broken",
            description="returns a summand of the wrong degree",
            family=TheoremFamily.HOOK,
            parameters=["a"],
        )

    def validate(self, params):
        return []

    def compute(self, params):
        return Decomposition.build(
            theorem="broken", parameters=params, labels=[Partition((params["a"] + 1,))], specht=Partition((params["a"],))
        )


def test_degree_conservation_is_checked():
    registry = TheoremRegistry()
    assert registry.register_theorem(_BrokenTheorem)
    with pytest.raises(ConsistencyError):
        registry.require_theorem("broken").decompose(a=3)


def test_register_rejects_non_theorems():
    registry = TheoremRegistry()
    assert not registry.register_theorem(dict)
    assert registry.list_theorems() == []


def test_unregister_respects_dependencies():
    registry = TheoremRegistry()
    from theorems.built_in.a31b import A31bDualTheorem, A31bTheorem

    registry.register_theorem(A31bTheorem)
    registry.register_theorem(A31bDualTheorem)
    assert not registry.unregister_theorem("a31b")
    assert registry.unregister_theorem("dual-a31b")
    assert registry.unregister_theorem("a31b")
    assert registry.validate_dependencies() == {}


@pytest.mark.parametrize("p", [0, 2, 3])
@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_staircase_summands_match_weight_multiplicities(m, p):
    params = SpecialParams(l=2, p=p)
    core = staircase(m, 2)
    for a in range(m, 40, 2):
        for b in range(m - 1, 40, 2):
            u, v = (a - m) // 2, (b - m + 1) // 2
            expected = {
                add_scaled(core, 2, mu.parts).parts
                for mu in partitions_of(u + v, max_length=2)
                if staircase_weight_mult(m, a, b, mu, params) == 1
            }
            assert young(decompose_staircase(m, a, b, p)) == expected, (m, a, b, p)


def test_statistics_survive_worker_threads():
    registry = TheoremRegistry()
    assert registry.register_theorem(StaircaseTheorem)
    theorem = registry.require_theorem("staircase")
    calls = [{"a": a, "b": b} for _ in range(3) for a in range(2, 30) for b in range(1, 30, 2)]

    def check(a, b):
        theorem.decompose(m=2, a=a, b=b)
        return None

    report = GridExecutor(max_workers=8).run("staircase-threads", check, calls)
    stats = theorem.get_statistics()
    assert report.total == len(calls)
    assert stats["rejected_runs"] == len(report.errors) == 3 * 14 * 15
    assert stats["total_runs"] + stats["cache_hits"] + stats["rejected_runs"] == len(calls)
    assert stats["cache_size"] == 14 * 15


def test_family_counts_follow_registration():
    registry = TheoremRegistry()
    assert registry.register_theorem(StaircaseTheorem)
    assert registry.get_registry_stats()["families"]["staircase"] == 1
    assert registry.unregister_theorem("staircase")
    assert registry.get_registry_stats()["families"]["staircase"] == 0
