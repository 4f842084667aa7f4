"""unittest suites for fcalc and the app layers."""
