import numpy as np
import pytest
from fstminer.fst import CFst, OutputLabel, build_cfst
from fstminer.match import Simulator, delta, generate, generate_filtered
from fstminer.patterns import to_pattern
from generators import make_dataset, random_ast, random_database, random_hierarchy
from oracle import is_generalized_subsequence

T1 = "c a1 b12 e"
T2 = "a1 b2 e"
T3 = "d a2 a1 a2 b11 e"


def decoded(outputs, dictionary):
    return {" ".join(dictionary.decode(output)) for output in outputs}


class TestDelta:
    def test_generalizing_transition(self, example_cfst, dictionary):
        fid = dictionary.fid
        assert delta(example_cfst, 1, fid("a1"), dictionary) == {
            (OutputLabel.self_up_to(fid("A")), 2)
        }

    def test_forced_generalization(self, example_cfst, dictionary):
        fid = dictionary.fid
        assert delta(example_cfst, 2, fid("b12"), dictionary) == {
            (OutputLabel.const(fid("B")), 2)
        }

    def test_no_match(self, example_cfst, dictionary):
        assert delta(example_cfst, 0, dictionary.fid("e"), dictionary) == set()


class TestGenerate:
    def test_running_example(self, example_cfst, dictionary, encode):
        assert decoded(generate(example_cfst, encode(T1), dictionary), dictionary) == {
            "a1 B",
            "A B",
        }
        assert generate(example_cfst, encode(T2), dictionary) == set()

    def test_all_generalizations(self, example_cfst, dictionary, encode):
        generated = generate(example_cfst, encode(T3), dictionary)
        assert decoded(generated, dictionary) == {
            "A A A B",
            "A A a2 B",
            "A a1 A B",
            "A a1 a2 B",
            "a2 A A B",
            "a2 A a2 B",
            "a2 a1 A B",
            "a2 a1 a2 B",
        }

    def test_filtered(self, example_cfst, dictionary, encode):
        filtered = generate_filtered(example_cfst, encode(T3), dictionary, sigma=2)
        assert decoded(filtered, dictionary) == {"A A A B", "A a1 A B"}

    def test_filter_with_sigma_one_is_identity(self, example, example_cfst):
        for sequence in example.db:
            assert generate_filtered(
                example_cfst, sequence, example.dictionary, sigma=1
            ) == generate(example_cfst, sequence, example.dictionary)

    def test_filter_above_max_frequency(self, example_cfst, dictionary, encode):
        assert generate_filtered(example_cfst, encode(T3), dictionary, sigma=7) == set()

    def test_numpy_input(self, example, example_cfst):
        generated = generate(example_cfst, example.db[0], example.dictionary)
        assert decoded(generated, example.dictionary) == {"a1 B", "A B"}
        assert all(type(item) is int for output in generated for item in output)

    def test_exploration_order_does_not_matter(self, example, example_cfst):
        reversed_cfst = CFst(
            num_states=example_cfst.num_states,
            initial=example_cfst.initial,
            finals=example_cfst.finals,
            transitions=example_cfst.transitions[::-1],
        )
        for sequence in example.db:
            assert generate(reversed_cfst, sequence, example.dictionary) == generate(
                example_cfst, sequence, example.dictionary
            )


@pytest.mark.parametrize(
    "pattern,sequence,expected",
    [
        ("A=", "A", set()),
        ("(A=)", "A", {"A"}),
        ("(A=)", "a1", set()),
        ("(A)", "A", {"A"}),
        ("(A)", "a1", {"a1"}),
        ("(A)", "b1", set()),
        ("(.)", "A", {"A"}),
        ("(.)", "a1", {"a1"}),
        ("(B^)", "b12", {"b12", "b1", "B"}),
        ("(b1^)", "b12", {"b12", "b1"}),
        ("(.^)", "b1", {"b1", "B"}),
        ("(B=^)", "b12", {"B"}),
    ],
)
def test_item_expression_semantics(pattern, sequence, expected, dictionary, encode):
    cfst = build_cfst(pattern, dictionary)
    assert decoded(generate(cfst, encode(sequence), dictionary), dictionary) == expected


def random_setup(rng: np.random.Generator):
    items, edges = random_hierarchy(rng, int(rng.integers(4, 9)), depth=3)
    sequences = random_database(rng, items, 8, max_length=7)
    dictionary, db = make_dataset(items, edges, sequences)
    return items, dictionary, db


def test_outputs_are_generalized_subsequences(seed):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        items, dictionary, db = random_setup(rng)
        partial = bool(rng.random() < 0.5)
        pattern = to_pattern(random_ast(rng, items))
        cfst = build_cfst(pattern, dictionary, partial=partial)
        simulator = Simulator(cfst, dictionary, partial=partial)
        for sequence in db:
            for output in simulator.generate(sequence):
                assert is_generalized_subsequence(output, sequence, dictionary)


def test_partial_matching_equals_padded_full_matching(seed):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        items, dictionary, db = random_setup(rng)
        inner = to_pattern(random_ast(rng, items))
        partial = Simulator(
            build_cfst(inner, dictionary, partial=True), dictionary, partial=True
        )
        padded = Simulator(build_cfst(f".* [{inner}] .*", dictionary), dictionary)
        for sequence in db:
            assert partial.generate(sequence) == padded.generate(sequence)

