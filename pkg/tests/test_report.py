from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from htpval.report import Check, RunReport, plain

scalars = st.one_of(
    st.integers(-10**6, 10**6),
    st.booleans(),
    st.text(max_size=12),
    st.none(),
    st.sampled_from([float("inf"), 0.5]),
)


def test_plain_values():
    assert plain(Fraction(6, 3)) == 2
    assert plain(Fraction(1, 3)) == "1/3"
    assert plain(float("inf")) == "inf"
    assert plain((1, Fraction(1, 2))) == [1, "1/2"]


def test_overall_pass_needs_every_check():
    r = RunReport("demo")
    assert r.passed  # vacuous
    r.add("a", 1, 1, True)
    assert r.passed
    r.add("b", 1, 2, False)
    assert not r.passed
    assert [c.description for c in r.failures] == ["b"]
    assert "FAIL" in r.to_text()


@given(st.lists(st.tuples(st.text(max_size=10), scalars, scalars, st.booleans()), max_size=6),
       st.dictionaries(st.text(min_size=1, max_size=5), scalars, max_size=4))
def test_json_round_trip(checks, params):
    r = RunReport("suite", params, [Check(*c) for c in checks], 1.25)
    back = RunReport.from_json(r.to_json())
    assert back == r
    assert back.passed == r.passed
