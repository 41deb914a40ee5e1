"""
Batch command-line runner for counts, evaluations, limits, checks,
simulations, trees and grids
"""
from causets.cli.config import RunConfig, load_config, merge_config, parse_value
from causets.cli.output import emit
from causets.cli.main import run
