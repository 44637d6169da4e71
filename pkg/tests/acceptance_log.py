"""Pass/fail lines from test_acceptance, echoed in the pytest terminal summary."""

LINES: list[str] = []
