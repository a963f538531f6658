"""The acceptance gate: every criterion is run with its fixed inputs and
reports one pass/fail line (collected in the terminal summary)."""
import pytest

from dsehopf.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA],
                         ids=[f"{c[0]:02d}-{c[1].replace(' ', '_')}" for c in CRITERIA])
def test_criterion(number, acceptance_lines):
    result = run_criterion(number)
    line = result.line()
    acceptance_lines.append((number, line))
    print(line)
    assert result.passed, line
