import pytest

from src.config import Configuration
from src.errors import ConfigError, UnknownSuite
from src.verify import run_suite, suite_names
from src.verify.corpus import generator_words


def test_every_area_registers_suites():
    names = suite_names()
    assert len(names) == len(set(names))
    for name in ("duality", "parallelogram", "ybe_braid", "round_trip", "soc_rad"):
        assert name in names


@pytest.mark.parametrize("name", suite_names())
def test_suite_passes(name, small_config):
    report = run_suite(name, small_config)
    assert report.suite == name
    assert report.cases > 0
    assert report.passed, [f.model_dump() for f in report.failures[:5]]
    assert report.params["seed"] == 7


@pytest.mark.parametrize("seed", [0, 7, 19])
def test_direct_limit_passes_at_default_settings(seed):
    report = run_suite("direct_limit", Configuration(seed=seed))
    assert report.passed, [f.model_dump() for f in report.failures[:5]]


@pytest.mark.slow
def test_index_sequences_up_to_degree_six():
    report = run_suite("iota_nonincreasing", Configuration(random_cases=50))
    assert report.passed, [f.model_dump() for f in report.failures[:5]]


def test_words_run_over_every_simple(klein):
    words = generator_words(klein, 2)
    assert len(words) == 3 + 3 * 3
    assert ("D", "x") in words
    assert all("e" not in w for w in words)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["normal_form", "left_right", "homog_left"])
def test_normal_forms_over_the_full_corpus(name):
    report = run_suite(name, Configuration(random_cases=50))
    assert report.passed, [f.model_dump() for f in report.failures[:5]]


def test_suite_params_override_configuration(small_config):
    report = run_suite("s_join_atoms", small_config, {"seed": "11"})
    assert report.params["seed"] == 11


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("not_a_suite")


def test_unknown_parameter(small_config):
    with pytest.raises(ConfigError):
        run_suite("parallelogram", small_config, {"depth": 3})
